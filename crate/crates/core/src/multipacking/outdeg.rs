use super::hitting::no_common_absorber;
use super::{
    brute_force_mp, min_absorbing_set, mp_from_long_path, verify_multipacking_with_oracle,
    Multipacking,
};
use crate::digraph::Digraph;
use crate::dist::DistanceOracle;
use crate::error::{Error, Result};
use crate::multipacking::auto::DEFAULT_MP_BRUTE_LIMIT;
use crate::outcome::{Algorithm, SolveOutcome};

/// Decides "packing size >= k" for digraphs of bounded out-degree.
///
/// Three stages: (1) a long shortest path yields a spaced witness (accepted
/// only when it verifies); (2) a minimum absorbing set of size >= k yields a
/// witness because no vertex reaches two of its members; (3) otherwise the
/// digraph is small for the given out-degree and the exhaustive oracle
/// decides.
pub fn solve_mp_outdeg(d: &Digraph, k: u32) -> Result<SolveOutcome<Multipacking>> {
    solve_mp_outdeg_with_limit(d, k, DEFAULT_MP_BRUTE_LIMIT)
}

pub fn solve_mp_outdeg_with_limit(
    d: &Digraph,
    k: u32,
    max_brute: usize,
) -> Result<SolveOutcome<Multipacking>> {
    let n = d.vertex_count();
    if let Some(witness) = mp_from_long_path(d, k) {
        return Ok(SolveOutcome {
            optimum: None,
            witness: Some(witness),
            algorithm: Algorithm::MpOutDegree,
            nodes_explored: 0,
            decision: Some(true),
        });
    }
    let absorbing = min_absorbing_set(d);
    if absorbing.len() as u32 >= k {
        let members: Vec<usize> = absorbing.into_iter().take(k as usize).collect();
        let witness = Multipacking::new(members);
        let oracle = DistanceOracle::new(d);
        debug_assert!(no_common_absorber(&oracle, n, witness.members()));
        if !verify_multipacking_with_oracle(&oracle, n, &witness).is_valid() {
            return Err(Error::Internal(
                "absorbing-set members failed the packing check".into(),
            ));
        }
        return Ok(SolveOutcome {
            optimum: None,
            witness: Some(witness),
            algorithm: Algorithm::MpOutDegree,
            nodes_explored: 0,
            decision: Some(true),
        });
    }
    if n > max_brute {
        return Err(Error::InstanceTooLarge {
            n,
            limit: max_brute,
        });
    }
    let mut out = brute_force_mp(d, Some(k));
    out.algorithm = Algorithm::MpOutDegree;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipacking::verify_multipacking;

    #[test]
    fn long_path_accepts_at_stage_one() {
        let p7 = Digraph::new(7, &(0..6).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap();
        let out = solve_mp_outdeg(&p7, 3).unwrap();
        assert_eq!(out.decision, Some(true));
        let w = out.witness.unwrap();
        assert_eq!(w.size(), 3);
        assert!(verify_multipacking(&p7, &w).is_valid());
    }

    #[test]
    fn three_isolated_vertices_accept_via_absorbing_set() {
        let d = Digraph::new(3, &[]).unwrap();
        let out = solve_mp_outdeg(&d, 3).unwrap();
        assert_eq!(out.decision, Some(true));
        assert_eq!(out.witness.unwrap().size(), 3);
    }

    #[test]
    fn three_cycle_rejects_two() {
        let c3 = Digraph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let out = solve_mp_outdeg(&c3, 2).unwrap();
        assert_eq!(out.decision, Some(false));
    }

    /// A long shortest path does not guarantee a large packing: here
    /// mfd = 3 = 3k-3 for k = 2, yet every vertex pair shares a radius-1
    /// out-ball, so mp = 1. Stage one must not accept on the distance
    /// threshold alone — only its verified witness counts.
    #[test]
    fn long_path_threshold_alone_is_not_sufficient() {
        let d = Digraph::new(
            5,
            &[
                (0, 1),
                (0, 4),
                (1, 0),
                (2, 0),
                (2, 3),
                (3, 0),
                (3, 2),
                (4, 1),
                (4, 2),
                (4, 3),
            ],
        )
        .unwrap();
        let oracle = crate::dist::DistanceOracle::new(&d);
        assert_eq!(oracle.mfd(), 3);
        assert_eq!(crate::multipacking::brute_force_mp(&d, None).optimum, Some(1));
        assert!(crate::multipacking::mp_from_long_path(&d, 2).is_none());
        let out = solve_mp_outdeg(&d, 2).unwrap();
        assert_eq!(out.decision, Some(false));
    }
}
