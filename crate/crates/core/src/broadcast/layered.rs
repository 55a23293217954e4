use super::BroadcastFunction;
use crate::classify::{classify, LayerPartition};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::outcome::{Algorithm, SolveOutcome};

/// Linear-time exact solver for single-sourced layered DAGs.
///
/// In such a DAG every vertex of layer l is at distance exactly l - i from
/// the vertex of any singleton layer i <= l, so a dominator on a singleton
/// layer covers a contiguous band of layers. The greedy walk places radius
/// j-i-1 on the singleton layer i, where j >= i+2 is the next singleton
/// layer, then continues from j; the final dominator covers through the last
/// layer.
pub fn solve_bd_layered(d: &Digraph) -> Result<SolveOutcome<BroadcastFunction>> {
    let report = classify(d);
    let layers = match (report.single_sourced, report.layer_partition) {
        (true, Some(lp)) => lp,
        _ => return Err(Error::NotSingleSourcedLayered),
    };
    let t = layers.t();
    let singleton = |i: usize| (layers.layers[i].len() == 1).then(|| layers.layers[i][0]);

    let mut f = BroadcastFunction::zeros(d.vertex_count());
    let mut i = 0usize;
    loop {
        let s_i = singleton(i).expect("walk only visits singleton layers");
        match (i + 2..=t).find(|&j| singleton(j).is_some()) {
            Some(j) => {
                f.set(s_i, (j - i - 1) as u32);
                i = j;
            }
            None => {
                f.set(s_i, ((t - i) as u32).max(1));
                break;
            }
        }
    }
    debug_assert!(witness_covers_layers(&layers, &f));
    Ok(SolveOutcome {
        optimum: Some(f.cost()),
        witness: Some(f),
        algorithm: Algorithm::BdLayered,
        nodes_explored: 0,
        decision: None,
    })
}

/// O(V+A) witness check for single-sourced layered DAGs with all dominators
/// on singleton layers: a radius-r dominator on singleton layer i covers
/// exactly layers i..=i+r, so validity is interval coverage of 0..=t.
pub fn verify_broadcast_layered(d: &Digraph, f: &BroadcastFunction) -> Result<bool> {
    let report = classify(d);
    let layers = match (report.single_sourced, report.layer_partition) {
        (true, Some(lp)) => lp,
        _ => return Err(Error::NotSingleSourcedLayered),
    };
    for &v in &f.dominators() {
        if layers.layers[layers.layer_of[v]].len() != 1 {
            return Err(Error::PreconditionViolation(
                "layered witness check requires dominators on singleton layers".into(),
            ));
        }
    }
    Ok(witness_covers_layers(&layers, f))
}

fn witness_covers_layers(layers: &LayerPartition, f: &BroadcastFunction) -> bool {
    let t = layers.t();
    let mut covered_to: i64 = -1;
    let mut doms: Vec<usize> = f.dominators();
    doms.sort_by_key(|&v| layers.layer_of[v]);
    for v in doms {
        let lo = layers.layer_of[v] as i64;
        if lo > covered_to + 1 {
            return false;
        }
        covered_to = covered_to.max(lo + f.value(v) as i64);
    }
    covered_to >= t as i64
}
