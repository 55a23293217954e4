use crate::digraph::Digraph;
use crate::exec::{map_indexed, Parallelism};
use std::collections::VecDeque;

/// Sentinel for "no directed path". Strictly greater than any finite
/// distance; arithmetic around it must saturate (see [`sat_add`]).
pub const INFINITE: u32 = u32::MAX;

/// Saturating addition that keeps [`INFINITE`] absorbing.
pub fn sat_add(a: u32, b: u32) -> u32 {
    a.saturating_add(b)
}

/// All-pairs directed distances plus the derived radius statistics:
/// per-vertex eccentricity over finite distances, the maximum finite
/// distance, and the diameter (infinite unless strongly connected).
///
/// Computed by one BFS per source; rows are cached because every solver
/// keeps asking for balls around candidate dominators.
#[derive(Debug, Clone)]
pub struct DistanceOracle {
    n: usize,
    dist: Vec<u32>,
    ecc: Vec<u32>,
    mfd: u32,
    diameter: u32,
}

impl DistanceOracle {
    pub fn new(d: &Digraph) -> Self {
        Self::new_with(d, Parallelism::default())
    }

    pub fn new_with(d: &Digraph, mode: Parallelism) -> Self {
        let n = d.vertex_count();
        let rows = map_indexed(mode, n, |s| bfs_row(d, s));
        let mut dist = Vec::with_capacity(n * n);
        let mut ecc = Vec::with_capacity(n);
        let mut mfd = 0;
        let mut all_finite = true;
        for row in rows {
            let mut e = 0;
            for &x in &row {
                if x == INFINITE {
                    all_finite = false;
                } else if x > e {
                    e = x;
                }
            }
            ecc.push(e);
            if e > mfd {
                mfd = e;
            }
            dist.extend_from_slice(&row);
        }
        let diameter = if all_finite && n > 0 { mfd } else if n == 0 { 0 } else { INFINITE };
        DistanceOracle {
            n,
            dist,
            ecc,
            mfd,
            diameter,
        }
    }

    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    /// Largest finite distance out of `v`; 0 when `v` reaches only itself.
    pub fn ecc(&self, v: usize) -> u32 {
        self.ecc[v]
    }

    pub fn mfd(&self) -> u32 {
        self.mfd
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    /// The ball `B'_d(v)`: vertices within directed distance `d` of `v`,
    /// `v` included. Ascending vertex order.
    pub fn ball(&self, v: usize, d: u32) -> Vec<usize> {
        self.row(v)
            .iter()
            .enumerate()
            .filter(|&(_, &x)| x <= d)
            .map(|(u, _)| u)
            .collect()
    }
}

fn bfs_row(d: &Digraph, s: usize) -> Vec<u32> {
    let n = d.vertex_count();
    let mut row = vec![INFINITE; n];
    row[s] = 0;
    let mut q = VecDeque::new();
    q.push_back(s);
    while let Some(u) = q.pop_front() {
        let du = row[u];
        for &v in d.out_neighbors(u) {
            if row[v] == INFINITE {
                row[v] = du + 1;
                q.push_back(v);
            }
        }
    }
    row
}
