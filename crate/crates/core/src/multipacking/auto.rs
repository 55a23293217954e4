use super::{brute_force_mp, solve_mp_layered, solve_mp_outdeg_with_limit, Multipacking};
use super::diameter::solve_mp_diameter_with;
use crate::classify::classify;
use crate::digraph::Digraph;
use crate::dist::{DistanceOracle, INFINITE};
use crate::error::{Error, Result};
use crate::exec::Parallelism;
use crate::outcome::{Algorithm, SolveOutcome};

pub const DEFAULT_MP_BRUTE_LIMIT: usize = 18;

const SMALL_DIAMETER: u32 = 6;

pub fn solve_mp_auto(d: &Digraph, k: Option<u32>) -> Result<SolveOutcome<Multipacking>> {
    solve_mp_auto_with_limit(d, k, DEFAULT_MP_BRUTE_LIMIT)
}

/// Dispatches on recognized structure: single-sourced layered DAGs to the
/// linear-time solver, targeted queries to the out-degree decision chain,
/// and everything else componentwise (packing sizes add across weakly
/// connected components) to the diameter solver or the oracle.
pub fn solve_mp_auto_with_limit(
    d: &Digraph,
    k: Option<u32>,
    max_brute: usize,
) -> Result<SolveOutcome<Multipacking>> {
    let report = classify(d);
    if report.single_sourced_layered() {
        let mut out = solve_mp_layered(d)?;
        out.decision = k.map(|k| out.optimum.unwrap() >= k);
        return Ok(out);
    }
    if let Some(k) = k {
        let mut out = solve_mp_outdeg_with_limit(d, k, max_brute)?;
        out.algorithm = Algorithm::MpAuto;
        return Ok(out);
    }

    let mut total = 0u32;
    let mut members: Vec<usize> = Vec::new();
    let mut nodes = 0u64;
    for comp in report.weakly_connected_components {
        let (sub, map) = d.induced(&comp);
        let out = solve_component(&sub, max_brute)?;
        total += out.optimum.expect("component solvers optimize");
        nodes += out.nodes_explored;
        let w = out.witness.expect("component solvers return witnesses");
        members.extend(w.members().iter().map(|&local| map[local]));
    }
    Ok(SolveOutcome {
        optimum: Some(total),
        witness: Some(Multipacking::new(members)),
        algorithm: Algorithm::MpAuto,
        nodes_explored: nodes,
        decision: None,
    })
}

fn solve_component(sub: &Digraph, max_brute: usize) -> Result<SolveOutcome<Multipacking>> {
    let n = sub.vertex_count();
    let report = classify(sub);
    if report.single_sourced_layered() {
        return solve_mp_layered(sub);
    }
    if report.strongly_connected {
        let cap = max_brute.max(18).saturating_mul(4).max(56);
        if n <= cap {
            let oracle = DistanceOracle::new(sub);
            debug_assert_ne!(oracle.diameter(), INFINITE);
            if oracle.diameter() <= SMALL_DIAMETER || n <= max_brute {
                return solve_mp_diameter_with(sub, None, Parallelism::default());
            }
        }
    }
    if n <= max_brute {
        return Ok(brute_force_mp(sub, None));
    }
    Err(Error::InstanceTooLarge {
        n,
        limit: max_brute,
    })
}
