#![allow(dead_code)]

//! Seeded instance factories shared by the property and acceptance suites.

use bdmp_core::{
    verify_multipacking, BroadcastFunction, ColoredGraph, Digraph, Multipacking, UndirectedGraph,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi style random digraph.
pub fn random_digraph(rng: &mut ChaCha8Rng, n_max: usize) -> Digraph {
    let n = rng.random_range(1..=n_max);
    let p = rng.random_range(0.05..0.45);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.random_bool(p) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::new(n, &arcs).unwrap()
}

/// Random digraph resampled until weakly connected.
pub fn random_weakly_connected(rng: &mut ChaCha8Rng, n_max: usize) -> Digraph {
    loop {
        let d = random_digraph(rng, n_max);
        if d.weak_components().len() == 1 {
            return d;
        }
    }
}

/// Random strongly connected digraph: a spanning cycle plus noise arcs.
pub fn random_strongly_connected(rng: &mut ChaCha8Rng, n_max: usize) -> Digraph {
    let n = rng.random_range(1..=n_max);
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        perm.swap(i, j);
    }
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    if n > 1 {
        for i in 0..n {
            arcs.push((perm[i], perm[(i + 1) % n]));
        }
    }
    let p = rng.random_range(0.0..0.4);
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.random_bool(p) && !arcs.contains(&(u, v)) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::new(n, &arcs).unwrap()
}

/// Random digraph with few arcs, so the minimum vertex cover stays small.
pub fn random_sparse(rng: &mut ChaCha8Rng, n_max: usize, max_arcs: usize) -> Digraph {
    let n = rng.random_range(2..=n_max);
    let target = rng.random_range(0..=max_arcs);
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    for _ in 0..4 * target {
        if arcs.len() == target {
            break;
        }
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u != v && !arcs.contains(&(u, v)) {
            arcs.push((u, v));
        }
    }
    Digraph::new(n, &arcs).unwrap()
}

/// Random valid dominating broadcast: random radii on a random support,
/// then radius-1 patches on whatever stays uncovered.
pub fn random_valid_broadcast(rng: &mut ChaCha8Rng, d: &Digraph) -> BroadcastFunction {
    let n = d.vertex_count();
    let oracle = bdmp_core::DistanceOracle::new(d);
    let mut f = BroadcastFunction::zeros(n);
    for v in 0..n {
        if rng.random_bool(0.35) {
            f.set(v, rng.random_range(1..=(n as u32).min(4)));
        }
    }
    loop {
        let doms: Vec<(usize, u32)> = f
            .dominators()
            .into_iter()
            .map(|t| (t, f.value(t)))
            .collect();
        let uncovered =
            (0..n).find(|&v| !doms.iter().any(|&(t, r)| oracle.dist(t, v) <= r));
        match uncovered {
            None => return f,
            Some(v) => f.set(v, 1),
        }
    }
}

/// Random valid multipacking: random insertion order, keep what verifies.
pub fn random_valid_multipacking(rng: &mut ChaCha8Rng, d: &Digraph) -> Multipacking {
    let n = d.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        order.swap(i, j);
    }
    let mut members: Vec<usize> = Vec::new();
    for v in order {
        if !rng.random_bool(0.6) {
            continue;
        }
        members.push(v);
        if !verify_multipacking(d, &Multipacking::new(members.clone())).is_valid() {
            members.pop();
        }
    }
    Multipacking::new(members)
}

/// Random colored graph; `min_class_size` lets callers demand the
/// two-per-class shape some gadgets need.
pub fn random_colored(
    rng: &mut ChaCha8Rng,
    k: usize,
    max_extra: usize,
    min_class_size: usize,
    p_edge: f64,
    cross_only: bool,
) -> ColoredGraph {
    let extra = rng.random_range(0..=max_extra);
    let n = k * min_class_size + extra;
    let mut colors: Vec<usize> = Vec::new();
    for class in 0..k {
        colors.extend(std::iter::repeat_n(class, min_class_size));
    }
    for _ in 0..extra {
        colors.push(rng.random_range(0..k));
    }
    // shuffle vertex ids so classes are not contiguous
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        perm.swap(i, j);
    }
    let colors: Vec<usize> = (0..n).map(|v| colors[perm[v]]).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if cross_only && colors[u] == colors[v] {
                continue;
            }
            if rng.random_bool(p_edge) {
                edges.push((u, v));
            }
        }
    }
    ColoredGraph::new(UndirectedGraph::new(n, edges).unwrap(), colors).unwrap()
}

/// Random undirected graph with at least one edge.
pub fn random_undirected(rng: &mut ChaCha8Rng, n_max: usize, m_max: usize) -> UndirectedGraph {
    loop {
        let n = rng.random_range(2..=n_max);
        let p = rng.random_range(0.2..0.7);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        if !edges.is_empty() && edges.len() <= m_max {
            return UndirectedGraph::new(n, edges).unwrap();
        }
    }
}

/// Random undirected graph with no isolated vertices (single-source gadget
/// precondition).
pub fn random_undirected_covering(
    rng: &mut ChaCha8Rng,
    n_max: usize,
    m_max: usize,
) -> UndirectedGraph {
    loop {
        let g = random_undirected(rng, n_max, m_max);
        if (0..g.n).all(|v| g.degree(v) > 0) {
            return g;
        }
    }
}
