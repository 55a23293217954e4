use super::{verify_multipacking_with_oracle, Multipacking};
use crate::digraph::Digraph;
use crate::dist::{DistanceOracle, INFINITE};
use crate::error::{Error, Result};
use crate::exec::{find_first, Parallelism};
use crate::outcome::{Algorithm, SolveOutcome};
use itertools::Itertools;

/// Exact solver for strongly connected digraphs: a radius-d ball centered
/// anywhere contains every vertex, so no packing exceeds the diameter d and
/// subsets can be scanned from size min(d, n) downwards.
pub fn solve_mp_diameter(d: &Digraph, k: Option<u32>) -> Result<SolveOutcome<Multipacking>> {
    solve_mp_diameter_with(d, k, Parallelism::default())
}

pub(crate) fn solve_mp_diameter_with(
    d: &Digraph,
    k: Option<u32>,
    mode: Parallelism,
) -> Result<SolveOutcome<Multipacking>> {
    let n = d.vertex_count();
    let oracle = DistanceOracle::new_with(d, mode);
    if n > 0 && oracle.diameter() == INFINITE {
        return Err(Error::NotStronglyConnected);
    }
    if n == 0 {
        return Ok(SolveOutcome {
            optimum: Some(0),
            witness: Some(Multipacking::empty()),
            algorithm: Algorithm::MpDiameter,
            nodes_explored: 0,
            decision: k.map(|k| k == 0),
        });
    }
    let ceiling = (oracle.diameter().max(1) as usize).min(n);
    let mut nodes = 0u64;
    for size in (1..=ceiling).rev() {
        let candidates = (0..n).combinations(size);
        let hit = find_first(
            mode,
            candidates,
            |members: &Vec<usize>| {
                let s = Multipacking::new(members.clone());
                verify_multipacking_with_oracle(&oracle, n, &s).is_valid()
            },
            &mut nodes,
        );
        if let Some(members) = hit {
            let optimum = size as u32;
            return Ok(SolveOutcome {
                optimum: Some(optimum),
                witness: Some(Multipacking::new(members)),
                algorithm: Algorithm::MpDiameter,
                nodes_explored: nodes,
                decision: k.map(|k| optimum >= k),
            });
        }
    }
    unreachable!("any single vertex is a valid multipacking");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipacking::brute_force_mp;

    #[test]
    fn three_cycle_packs_one() {
        let c3 = Digraph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(brute_force_mp(&c3, None).optimum, Some(1));
        assert_eq!(solve_mp_diameter(&c3, None).unwrap().optimum, Some(1));
    }

    #[test]
    fn bidirected_triangle_packs_one() {
        let d = Digraph::new(3, &[(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)]).unwrap();
        assert_eq!(brute_force_mp(&d, None).optimum, Some(1));
        assert_eq!(solve_mp_diameter(&d, None).unwrap().optimum, Some(1));
    }

    #[test]
    fn bidirected_p3_matches_oracle() {
        let d = Digraph::new(3, &[(0, 1), (1, 0), (1, 2), (2, 1)]).unwrap();
        let expected = brute_force_mp(&d, None).optimum;
        assert_eq!(solve_mp_diameter(&d, None).unwrap().optimum, expected);
    }

    #[test]
    fn rejects_paths() {
        let p4 = Digraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(
            solve_mp_diameter(&p4, None).unwrap_err(),
            Error::NotStronglyConnected
        );
    }
}
