use super::enumerate::CostFunctions;
use super::{covers_all, BroadcastFunction};
use crate::digraph::Digraph;
use crate::dist::DistanceOracle;
use crate::exec::{find_first, Parallelism};
use crate::outcome::{Algorithm, SolveOutcome};

/// Ground-truth oracle: iterative deepening on total cost, enumerating every
/// radius assignment of that exact cost with radii capped at max(1, ecc(v))
/// (larger radii cover nothing new). The first valid assignment in
/// enumeration order is returned, so the witness is deterministic.
///
/// With `cap` set this decides "cost <= cap": exhausting the levels without
/// a hit is a NO outcome. Intended for small instances.
pub fn brute_force_bd(d: &Digraph, cap: Option<u32>) -> SolveOutcome<BroadcastFunction> {
    brute_force_bd_with(d, cap, Parallelism::default())
}

pub fn brute_force_bd_with(
    d: &Digraph,
    cap: Option<u32>,
    mode: Parallelism,
) -> SolveOutcome<BroadcastFunction> {
    let oracle = DistanceOracle::new_with(d, mode);
    let outcome = search(d, &oracle, cap, mode, Algorithm::BdBrute);
    debug_assert!(outcome
        .witness
        .as_ref()
        .is_none_or(|w| covers_all_fn(&oracle, w)));
    outcome
}

fn covers_all_fn(oracle: &DistanceOracle, f: &BroadcastFunction) -> bool {
    let doms: Vec<(usize, u32)> = f.dominators().iter().map(|&t| (t, f.value(t))).collect();
    covers_all(oracle, f.len(), &doms)
}

/// Shared by the plain oracle and the outdegree/diameter solvers, which only
/// change the cost ceiling and the algorithm tag.
pub(crate) fn search(
    d: &Digraph,
    oracle: &DistanceOracle,
    cap: Option<u32>,
    mode: Parallelism,
    algorithm: Algorithm,
) -> SolveOutcome<BroadcastFunction> {
    let n = d.vertex_count();
    if n == 0 {
        return SolveOutcome {
            optimum: Some(0),
            witness: Some(BroadcastFunction::zeros(0)),
            algorithm,
            nodes_explored: 0,
            decision: cap.map(|_| true),
        };
    }
    let caps: Vec<u32> = (0..n).map(|v| oracle.ecc(v).max(1)).collect();
    let ceiling = cap.unwrap_or(n as u32).min(n as u32);
    let mut nodes = 0u64;
    for cost in 1..=ceiling {
        let candidates = CostFunctions::new(caps.clone(), cost);
        let hit = find_first(
            mode,
            candidates,
            |doms: &Vec<(usize, u32)>| covers_all(oracle, n, doms),
            &mut nodes,
        );
        if let Some(doms) = hit {
            return SolveOutcome {
                optimum: Some(cost),
                witness: Some(BroadcastFunction::from_dominators(n, &doms)),
                algorithm,
                nodes_explored: nodes,
                decision: cap.map(|_| true),
            };
        }
    }
    // The all-ones function always dominates, so exhaustion means the cap
    // cut the search short.
    SolveOutcome::decision_no(algorithm, nodes)
}
