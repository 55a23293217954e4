//! Multipacking verifier, brute-force oracle, the structural lemma
//! procedures and the specialized solvers, plus the exact hitting-set /
//! absorbing-set subroutine.

mod auto;
mod brute;
mod diameter;
mod hitting;
mod layered;
mod lemmas;
mod outdeg;
mod vertex_cover;

pub use auto::{solve_mp_auto, solve_mp_auto_with_limit, DEFAULT_MP_BRUTE_LIMIT};
pub use brute::{brute_force_mp, brute_force_mp_with};
pub use diameter::solve_mp_diameter;
pub use hitting::{min_absorbing_set, min_hitting_set, HittingSetInstance};
pub use layered::{solve_mp_layered, verify_multipacking_layered};
pub use lemmas::{mp_from_long_path, normalize_one_per_layer, normalize_sources_into_mp};
pub use outdeg::{solve_mp_outdeg, solve_mp_outdeg_with_limit};
pub use vertex_cover::solve_mp_vertex_cover;

use crate::digraph::Digraph;
use crate::dist::DistanceOracle;

/// A vertex set with at most d members in every directed ball of radius d,
/// for every d >= 1. Members are kept sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multipacking {
    members: Vec<usize>,
}

impl Multipacking {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        Multipacking { members }
    }

    pub fn empty() -> Self {
        Multipacking {
            members: Vec::new(),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn size(&self) -> u32 {
        self.members.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultipackingCheck {
    Valid,
    /// Lexicographically smallest (vertex, radius) whose ball holds more
    /// than `radius` members.
    Violation { vertex: usize, radius: u32 },
}

impl MultipackingCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, MultipackingCheck::Valid)
    }
}

/// Checks the ball-counting constraint for every center and every radius
/// 1..=min(n, |S|); beyond |S| the constraint is vacuous.
pub fn verify_multipacking(d: &Digraph, s: &Multipacking) -> MultipackingCheck {
    let oracle = DistanceOracle::new(d);
    verify_multipacking_with_oracle(&oracle, d.vertex_count(), s)
}

pub(crate) fn verify_multipacking_with_oracle(
    oracle: &DistanceOracle,
    n: usize,
    s: &Multipacking,
) -> MultipackingCheck {
    let max_radius = (s.members.len() as u32).min(n as u32);
    for v in 0..n {
        let mut dists: Vec<u32> = s
            .members
            .iter()
            .map(|&m| oracle.dist(v, m))
            .filter(|&x| x < crate::dist::INFINITE)
            .collect();
        dists.sort_unstable();
        for radius in 1..=max_radius {
            let count = dists.partition_point(|&x| x <= radius) as u32;
            if count > radius {
                return MultipackingCheck::Violation { vertex: v, radius };
            }
        }
    }
    MultipackingCheck::Valid
}
