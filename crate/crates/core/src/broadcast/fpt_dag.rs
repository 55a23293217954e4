use super::BroadcastFunction;
use crate::classify::{classify, topological_order};
use crate::digraph::Digraph;
use crate::dist::{DistanceOracle, INFINITE};
use crate::error::{Error, Result};
use crate::outcome::{Algorithm, SolveOutcome};

/// Budgeted branching solver for DAGs.
///
/// Every source must transmit, so the search starts from the all-sources
/// radius-1 function and repeatedly picks the uncovered vertex that comes
/// first in a fixed topological order (necessarily a source of the residual
/// subgraph). That vertex is covered either by itself (radius 1) or by
/// raising one of the at most k current dominators to reach it — a dominator
/// hiding in the residual would precede it topologically. Fan-out is thus at
/// most k+1 and every branch consumes budget, so the branching tree has at
/// most (k+1)^k internal nodes.
///
/// With `k` supplied the budgets 1..=k are tried in increasing order, so a
/// YES answer also certifies the optimum; without `k` the deepening runs
/// until the (always existing) all-ones solution is reachable.
pub fn solve_bd_fpt_dag(d: &Digraph, k: Option<u32>) -> Result<SolveOutcome<BroadcastFunction>> {
    let report = classify(d);
    if !report.is_dag {
        return Err(Error::NotADag);
    }
    let n = d.vertex_count();
    if n == 0 {
        return Ok(SolveOutcome {
            optimum: Some(0),
            witness: Some(BroadcastFunction::zeros(0)),
            algorithm: Algorithm::BdFptDag,
            nodes_explored: 0,
            decision: k.map(|_| true),
        });
    }
    let oracle = DistanceOracle::new(d);
    let topo_rank = rank_of(&topological_order(d).expect("classified as a DAG"));
    let sources = report.sources;
    let floor = (sources.len() as u32).max(1);
    let ceiling = k.unwrap_or(n as u32).min(n as u32);

    let mut nodes = 0u64;
    for budget in floor..=ceiling {
        let mut f = BroadcastFunction::zeros(n);
        for &s in &sources {
            f.set(s, 1);
        }
        let cost = f.cost();
        if cost > budget {
            continue;
        }
        if let Some(found) = branch(&oracle, &topo_rank, f, cost, budget, &mut nodes) {
            return Ok(SolveOutcome {
                optimum: Some(budget),
                witness: Some(found),
                algorithm: Algorithm::BdFptDag,
                nodes_explored: nodes,
                decision: k.map(|_| true),
            });
        }
    }
    Ok(SolveOutcome::decision_no(Algorithm::BdFptDag, nodes))
}

fn rank_of(order: &[usize]) -> Vec<usize> {
    let mut rank = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    rank
}

fn branch(
    oracle: &DistanceOracle,
    topo_rank: &[usize],
    f: BroadcastFunction,
    cost: u32,
    budget: u32,
    nodes: &mut u64,
) -> Option<BroadcastFunction> {
    let n = f.len();
    let doms: Vec<(usize, u32)> = f.dominators().iter().map(|&t| (t, f.value(t))).collect();
    let uncovered = (0..n)
        .filter(|&v| !doms.iter().any(|&(t, r)| oracle.dist(t, v) <= r))
        .min_by_key(|&v| topo_rank[v]);
    let u = match uncovered {
        None => return Some(f),
        Some(u) => u,
    };
    *nodes += 1;

    if cost < budget {
        let mut g = f.clone();
        g.set(u, 1);
        if let Some(found) = branch(oracle, topo_rank, g, cost + 1, budget, nodes) {
            return Some(found);
        }
    }
    for &(w, r) in &doms {
        let need = oracle.dist(w, u);
        if need == INFINITE {
            continue;
        }
        debug_assert!(need > r);
        let extra = need - r;
        if cost + extra <= budget {
            let mut g = f.clone();
            g.set(w, need);
            if let Some(found) = branch(oracle, topo_rank, g, cost + extra, budget, nodes) {
                return Some(found);
            }
        }
    }
    None
}
