use crate::digraph::Digraph;
use crate::dist::{DistanceOracle, INFINITE};
use crate::error::{Error, Result};

/// A universe 0..universe_size and a family of nonempty subsets to hit;
/// `k` is an optional decision budget carried by reductions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HittingSetInstance {
    pub universe_size: usize,
    pub sets: Vec<Vec<usize>>,
    pub k: Option<u32>,
}

impl HittingSetInstance {
    pub fn new(universe_size: usize, sets: Vec<Vec<usize>>, k: Option<u32>) -> Result<Self> {
        let mut sets = sets;
        for set in sets.iter_mut() {
            if set.is_empty() {
                return Err(Error::InvalidInstance("empty set cannot be hit".into()));
            }
            set.sort_unstable();
            set.dedup();
            if let Some(&e) = set.iter().find(|&&e| e >= universe_size) {
                return Err(Error::InvalidInstance(format!(
                    "element {e} outside universe 0..{universe_size}"
                )));
            }
        }
        Ok(HittingSetInstance {
            universe_size,
            sets,
            k,
        })
    }

    /// Maximum number of sets any single element appears in.
    pub fn max_frequency(&self) -> usize {
        let mut freq = vec![0usize; self.universe_size];
        for set in &self.sets {
            for &e in set {
                freq[e] += 1;
            }
        }
        freq.into_iter().max().unwrap_or(0)
    }
}

/// Exact minimum hitting set by branch and bound: branch on the elements of
/// the smallest unhit set, seed the upper bound greedily, and prune with
/// ceil(unhit / max-frequency) as the lower bound.
pub fn min_hitting_set(instance: &HittingSetInstance) -> Vec<usize> {
    if instance.sets.is_empty() {
        return Vec::new();
    }
    let freq_bound = instance.max_frequency().max(1);
    let mut best = greedy_hitting_set(instance);
    let mut chosen = Vec::new();
    branch(instance, freq_bound, &mut chosen, &mut best);
    best.sort_unstable();
    best
}

fn greedy_hitting_set(instance: &HittingSetInstance) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut hit = vec![false; instance.sets.len()];
    loop {
        let mut freq = vec![0usize; instance.universe_size];
        for (i, set) in instance.sets.iter().enumerate() {
            if !hit[i] {
                for &e in set {
                    freq[e] += 1;
                }
            }
        }
        let (e, count) = freq
            .iter()
            .enumerate()
            .max_by_key(|&(e, &c)| (c, std::cmp::Reverse(e)))
            .map(|(e, &c)| (e, c))
            .unwrap();
        if count == 0 {
            return chosen;
        }
        chosen.push(e);
        for (i, set) in instance.sets.iter().enumerate() {
            if !hit[i] && set.contains(&e) {
                hit[i] = true;
            }
        }
    }
}

fn branch(
    instance: &HittingSetInstance,
    freq_bound: usize,
    chosen: &mut Vec<usize>,
    best: &mut Vec<usize>,
) {
    let unhit: Vec<&Vec<usize>> = instance
        .sets
        .iter()
        .filter(|set| !set.iter().any(|e| chosen.contains(e)))
        .collect();
    if unhit.is_empty() {
        if chosen.len() < best.len() {
            *best = chosen.clone();
        }
        return;
    }
    let lower = unhit.len().div_ceil(freq_bound);
    if chosen.len() + lower >= best.len() {
        return;
    }
    let smallest = unhit.iter().min_by_key(|set| (set.len(), &set[..])).unwrap();
    for &e in smallest.iter() {
        chosen.push(e);
        branch(instance, freq_bound, chosen, best);
        chosen.pop();
    }
}

/// Minimum set of vertices from which every vertex is reachable (u absorbs v
/// when a directed path u -> v exists), computed as a hitting set over the
/// per-vertex absorber sets. Minimality forces the members to be pairwise
/// unabsorbed by any common vertex.
pub fn min_absorbing_set(d: &Digraph) -> Vec<usize> {
    let n = d.vertex_count();
    let oracle = DistanceOracle::new(d);
    let sets: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..n).filter(|&u| oracle.dist(u, v) < INFINITE).collect())
        .collect();
    let instance =
        HittingSetInstance::new(n, sets, None).expect("absorber sets contain the vertex itself");
    let out = min_hitting_set(&instance);
    debug_assert!(no_common_absorber(&oracle, n, &out));
    out
}

pub(crate) fn no_common_absorber(oracle: &DistanceOracle, n: usize, members: &[usize]) -> bool {
    (0..n).all(|w| {
        members
            .iter()
            .filter(|&&m| oracle.dist(w, m) < INFINITE)
            .count()
            <= 1
    })
}
