use super::{
    brute_force_bd, solve_bd_diameter, solve_bd_fpt_dag, solve_bd_layered, BroadcastFunction,
};
use crate::classify::classify;
use crate::digraph::Digraph;
use crate::dist::{DistanceOracle, INFINITE};
use crate::error::{Error, Result};
use crate::outcome::{Algorithm, SolveOutcome};

pub const DEFAULT_BD_BRUTE_LIMIT: usize = 14;

/// Diameter routing: the cost-capped enumeration is n^O(d), so only small
/// diameters are worth it on components too big for brute force.
const SMALL_DIAMETER: u32 = 6;

pub fn solve_bd_auto(d: &Digraph, k: Option<u32>) -> Result<SolveOutcome<BroadcastFunction>> {
    solve_bd_auto_with_limit(d, k, DEFAULT_BD_BRUTE_LIMIT)
}

/// Dispatches on recognized structure: single-sourced layered DAGs go to the
/// linear-time solver, DAGs with a budget to the branching solver, and
/// everything else is split into weakly connected components (the optimum is
/// the sum over components) routed to the diameter solver or the oracle.
pub fn solve_bd_auto_with_limit(
    d: &Digraph,
    k: Option<u32>,
    max_brute: usize,
) -> Result<SolveOutcome<BroadcastFunction>> {
    let n = d.vertex_count();
    let report = classify(d);
    if report.single_sourced_layered() {
        let mut out = solve_bd_layered(d)?;
        out.decision = k.map(|k| out.optimum.unwrap() <= k);
        return Ok(out);
    }
    if report.is_dag && k.is_some() {
        return solve_bd_fpt_dag(d, k);
    }

    let mut total = 0u32;
    let mut witness = BroadcastFunction::zeros(n);
    let mut nodes = 0u64;
    for comp in report.weakly_connected_components {
        let (sub, map) = d.induced(&comp);
        let out = solve_component(&sub, max_brute)?;
        total += out.optimum.expect("component solvers optimize");
        nodes += out.nodes_explored;
        let w = out.witness.expect("component solvers return witnesses");
        for (local, &global) in map.iter().enumerate() {
            if w.value(local) > 0 {
                witness.set(global, w.value(local));
            }
        }
    }
    Ok(SolveOutcome {
        optimum: Some(total),
        witness: Some(witness),
        algorithm: Algorithm::BdAuto,
        nodes_explored: nodes,
        decision: k.map(|k| total <= k),
    })
}

fn solve_component(sub: &Digraph, max_brute: usize) -> Result<SolveOutcome<BroadcastFunction>> {
    let n = sub.vertex_count();
    let report = classify(sub);
    if report.single_sourced_layered() {
        return solve_bd_layered(sub);
    }
    if report.strongly_connected {
        let cap = max_brute.max(14).saturating_mul(4).max(56);
        if n <= cap {
            let oracle = DistanceOracle::new(sub);
            debug_assert_ne!(oracle.diameter(), INFINITE);
            if oracle.diameter() <= SMALL_DIAMETER || n <= max_brute {
                return solve_bd_diameter(sub, None);
            }
        }
    }
    if n <= max_brute {
        return Ok(brute_force_bd(sub, None));
    }
    Err(Error::InstanceTooLarge {
        n,
        limit: max_brute,
    })
}
