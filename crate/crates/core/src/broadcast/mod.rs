//! Dominating-broadcast verifier, normalization, the brute-force oracle and
//! the specialized solvers.

mod auto;
mod brute;
mod diameter;
mod enumerate;
mod fpt_dag;
mod layered;
mod outdeg;
mod vertex_cover;

pub use auto::{solve_bd_auto, solve_bd_auto_with_limit, DEFAULT_BD_BRUTE_LIMIT};
pub use brute::{brute_force_bd, brute_force_bd_with};
pub use diameter::solve_bd_diameter;
pub use fpt_dag::solve_bd_fpt_dag;
pub use layered::{solve_bd_layered, verify_broadcast_layered};
pub use outdeg::solve_bd_outdeg;
pub use vertex_cover::solve_bd_vertex_cover;

use crate::digraph::Digraph;
use crate::dist::DistanceOracle;
use crate::error::{Error, Result};

/// Per-vertex nonnegative transmission radii. Cost is the sum of all
/// values; the dominators are the vertices with positive value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BroadcastFunction {
    values: Vec<u32>,
}

impl BroadcastFunction {
    pub fn zeros(n: usize) -> Self {
        BroadcastFunction {
            values: vec![0; n],
        }
    }

    pub fn from_values(values: Vec<u32>) -> Self {
        BroadcastFunction { values }
    }

    pub fn from_dominators(n: usize, dominators: &[(usize, u32)]) -> Self {
        let mut values = vec![0; n];
        for &(v, r) in dominators {
            values[v] = r;
        }
        BroadcastFunction { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, v: usize) -> u32 {
        self.values[v]
    }

    pub fn set(&mut self, v: usize, radius: u32) {
        self.values[v] = radius;
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn cost(&self) -> u32 {
        self.values.iter().sum()
    }

    /// Vertices with positive value, ascending.
    pub fn dominators(&self) -> Vec<usize> {
        (0..self.values.len())
            .filter(|&v| self.values[v] > 0)
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BroadcastCheck {
    Valid,
    /// Smallest vertex no dominator reaches within its radius.
    Uncovered(usize),
}

impl BroadcastCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, BroadcastCheck::Valid)
    }
}

/// Checks that every vertex has a dominator within its transmission radius.
/// A dominator covers itself (distance 0).
pub fn verify_broadcast(d: &Digraph, f: &BroadcastFunction) -> BroadcastCheck {
    let oracle = DistanceOracle::new(d);
    verify_broadcast_with_oracle(&oracle, f)
}

pub(crate) fn verify_broadcast_with_oracle(
    oracle: &DistanceOracle,
    f: &BroadcastFunction,
) -> BroadcastCheck {
    let doms: Vec<(usize, u32)> = f
        .dominators()
        .into_iter()
        .map(|t| (t, f.value(t)))
        .collect();
    match first_uncovered(oracle, f.len(), &doms) {
        None => BroadcastCheck::Valid,
        Some(v) => BroadcastCheck::Uncovered(v),
    }
}

pub(crate) fn first_uncovered(
    oracle: &DistanceOracle,
    n: usize,
    doms: &[(usize, u32)],
) -> Option<usize> {
    (0..n).find(|&v| !doms.iter().any(|&(t, r)| oracle.dist(t, v) <= r))
}

pub(crate) fn covers_all(oracle: &DistanceOracle, n: usize, doms: &[(usize, u32)]) -> bool {
    first_uncovered(oracle, n, doms).is_none()
}

/// Rewrites a valid broadcast into one of no larger cost in which no
/// dominator covers another: while some dominator u reaches a dominator v
/// within its radius, either shift v's radius onto u (u gets d(u,v)+f(v))
/// or, when u already reaches that far, just drop v. The dominator count
/// falls every round, so this terminates.
pub fn normalize_self_cover(d: &Digraph, f: &BroadcastFunction) -> Result<BroadcastFunction> {
    let oracle = DistanceOracle::new(d);
    if let BroadcastCheck::Uncovered(v) = verify_broadcast_with_oracle(&oracle, f) {
        return Err(Error::InvalidBroadcast { uncovered: v });
    }
    let mut f = f.clone();
    loop {
        let doms = f.dominators();
        let mut pair: Option<(usize, usize)> = None;
        for &u in &doms {
            for &v in &doms {
                if v != u && oracle.dist(u, v) <= f.value(u) {
                    pair = match pair {
                        Some(best) if best <= (u, v) => Some(best),
                        _ => Some((u, v)),
                    };
                }
            }
        }
        match pair {
            None => return Ok(f),
            Some((u, v)) => {
                let merged = oracle.dist(u, v) + f.value(v);
                if merged > f.value(u) {
                    f.set(u, merged);
                }
                f.set(v, 0);
            }
        }
    }
}
