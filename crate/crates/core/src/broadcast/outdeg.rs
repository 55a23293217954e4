use super::{brute_force_bd, BroadcastFunction};
use crate::digraph::Digraph;
use crate::outcome::{Algorithm, SolveOutcome};

/// Decides "cost <= k" for digraphs of bounded out-degree. A radius-i
/// dominator covers at most i*m^i + 1 vertices when m is the maximum
/// out-degree, so any instance with more than k(k+1)m^k vertices is a NO;
/// the survivors are small enough for the exhaustive oracle.
pub fn solve_bd_outdeg(d: &Digraph, k: u32) -> SolveOutcome<BroadcastFunction> {
    let n = d.vertex_count() as u128;
    let m = (d.max_out_degree() as u128).max(1);
    let bound = m
        .checked_pow(k)
        .and_then(|p| p.checked_mul(k as u128))
        .and_then(|p| p.checked_mul(k as u128 + 1));
    if let Some(bound) = bound {
        if n > bound {
            return SolveOutcome::decision_no(Algorithm::BdOutDegree, 0);
        }
    }
    let mut out = brute_force_bd(d, Some(k));
    out.algorithm = Algorithm::BdOutDegree;
    out
}
