use super::{ColoredGraph, ReductionOutput, X3CInstance};
use crate::classify::classify;
use crate::digraph::Digraph;
use crate::dist::DistanceOracle;
use crate::error::{Error, Result};
use crate::multipacking::HittingSetInstance;
use std::collections::BTreeMap;

/// Exact-cover gadget: two chained copies of the triple set over the
/// element layer. Covering the gadget costs one per triple plus one extra
/// per chosen triple, so the target is n + k.
pub fn reduce_x3c_to_bd(instance: &X3CInstance) -> Result<ReductionOutput> {
    if instance.triples.is_empty() {
        return Err(Error::InvalidInstance("no triples".into()));
    }
    let nt = instance.triples.len();
    let ground = instance.ground_size;
    let mut roles = BTreeMap::new();
    let mut arcs = Vec::new();
    for (i, triple) in instance.triples.iter().enumerate() {
        roles.insert(format!("T1[{i}]"), i);
        roles.insert(format!("T2[{i}]"), nt + i);
        arcs.push((i, nt + i));
        for &x in triple {
            arcs.push((nt + i, 2 * nt + x));
        }
    }
    for x in 0..ground {
        roles.insert(format!("X[{x}]"), 2 * nt + x);
    }
    let digraph = Digraph::new(2 * nt + ground, &arcs)?;

    let report = classify(&digraph);
    let oracle = DistanceOracle::new(&digraph);
    ensure(report.is_dag, "gadget must be acyclic")?;
    ensure(
        report.layer_partition.as_ref().is_some_and(|lp| lp.t() == 2),
        "gadget must have three layers",
    )?;
    ensure(oracle.mfd() == 2, "gadget must have maximum finite distance 2")?;
    let max_occurrence = (0..ground)
        .map(|x| instance.triples.iter().filter(|t| t.contains(&x)).count())
        .max()
        .unwrap_or(0);
    if max_occurrence <= 3 {
        ensure(
            digraph.max_total_degree() <= 4,
            "occurrence-bounded instances give degree at most 4",
        )?;
    }

    let k_target = (nt + instance.k()) as u32;
    ReductionOutput::new(digraph, k_target, roles, Vec::new())
}

/// Multicolored-dominating-set gadget, first variant: bidirected class
/// cliques feeding a sink copy of the vertex set through closed
/// neighborhoods. Target cost is the class count.
pub fn reduce_mds_to_bd_v1(colored: &ColoredGraph) -> Result<ReductionOutput> {
    let n = colored.graph.n;
    let mut roles = BTreeMap::new();
    let mut arcs = Vec::new();
    for v in 0..n {
        roles.insert(format!("V1[{v}]"), v);
        roles.insert(format!("V2[{v}]"), n + v);
    }
    for i in 0..colored.k {
        let class = colored.class(i);
        for &v in &class {
            for &w in &class {
                if v != w {
                    arcs.push((v, w));
                }
            }
        }
    }
    for v in 0..n {
        arcs.push((v, n + v));
        for &(a, b) in &colored.graph.edges {
            if a == v {
                arcs.push((v, n + b));
            } else if b == v {
                arcs.push((v, n + a));
            }
        }
    }
    let digraph = Digraph::new(2 * n, &arcs)?;

    if n > 0 {
        let oracle = DistanceOracle::new(&digraph);
        // A two-hop path v1 -> u1 -> x2 survives exactly when x lies in
        // N[u] but not N[v] for some same-class pair; otherwise every such
        // path has a one-hop shortcut.
        let closed = |v: usize| {
            let mut nbrs = vec![v];
            for &(a, b) in &colored.graph.edges {
                if a == v {
                    nbrs.push(b);
                } else if b == v {
                    nbrs.push(a);
                }
            }
            nbrs
        };
        let generic = (0..colored.k).any(|i| {
            let class = colored.class(i);
            class.iter().any(|&v| {
                let reach = closed(v);
                class
                    .iter()
                    .any(|&u| u != v && closed(u).iter().any(|x| !reach.contains(x)))
            })
        });
        let expected = if generic { 2 } else { 1 };
        ensure(
            oracle.mfd() == expected,
            "first dominating-set gadget has the wrong radius",
        )?;
    }
    ReductionOutput::new(digraph, colored.k as u32, roles, Vec::new())
}

/// Multicolored-dominating-set gadget, second variant: four vertex copies
/// plus subdivision vertices; bipartite, no directed 2-cycles. One
/// subdivided arc per ordered closed-neighborhood incidence (including the
/// self incidence, so a chosen vertex covers its own sink copies). Target
/// cost 3k.
///
/// Classes must have at least three vertices: a size-2 class is coverable
/// at cost 2 ({v1:1, w1:1} reaches both ground copies), which lets NO
/// instances sneak under the 3k budget with a spare unit on a sink copy.
/// From size 3 up, any radius-2 dominator misses some copy of its class,
/// so each class costs at least 3 and the budget forces the canonical
/// shape.
pub fn reduce_mds_to_bd_v2(colored: &ColoredGraph) -> Result<ReductionOutput> {
    let n = colored.graph.n;
    for i in 0..colored.k {
        if colored.class(i).len() < 3 {
            return Err(Error::ClassTooSmall { class: i });
        }
    }
    let mut roles = BTreeMap::new();
    let mut arcs = Vec::new();
    for v in 0..n {
        for (copy, base) in [(0, 0), (1, n), (2, 2 * n), (3, 3 * n)] {
            roles.insert(format!("V{copy}[{v}]"), base + v);
        }
        arcs.push((n + v, v)); // v1 -> v0
        arcs.push((2 * n + v, 3 * n + v)); // v2 -> v3
    }
    for i in 0..colored.k {
        let class = colored.class(i);
        for &v in &class {
            for &w in &class {
                if v != w {
                    arcs.push((v, n + w)); // v0 -> w1
                }
            }
        }
    }
    let mut next_m = 4 * n;
    for v in 0..n {
        let mut closed: Vec<usize> = vec![v];
        for &(a, b) in &colored.graph.edges {
            if a == v {
                closed.push(b);
            } else if b == v {
                closed.push(a);
            }
        }
        closed.sort_unstable();
        for w in closed {
            roles.insert(format!("M[{v},{w}]"), next_m);
            arcs.push((n + v, next_m)); // v1 -> m
            arcs.push((next_m, 2 * n + w)); // m -> w2
            next_m += 1;
        }
    }
    let digraph = Digraph::new(next_m, &arcs)?;

    ensure(
        digraph.arcs().all(|(u, v)| !digraph.has_arc(v, u)),
        "second dominating-set gadget must be free of directed 2-cycles",
    )?;
    // Bipartition: V0, M, V3 on one side, V1, V2 on the other.
    let side = |x: usize| x < n || x >= 3 * n;
    ensure(
        digraph.arcs().all(|(u, v)| side(u) != side(v)),
        "second dominating-set gadget must be bipartite",
    )?;
    let oracle = DistanceOracle::new(&digraph);
    ensure(
        oracle.mfd() <= 6,
        "second dominating-set gadget has radius above 6",
    )?;

    ReductionOutput::new(digraph, 3 * colored.k as u32, roles, Vec::new())
}

/// Hitting-set gadget: the triple-chain construction with elements in place
/// of triples and sets in place of elements; target cost |U| + k.
pub fn reduce_hs_to_bd(instance: &HittingSetInstance) -> Result<ReductionOutput> {
    let k = instance
        .k
        .ok_or_else(|| Error::InvalidInstance("hitting-set budget k is required".into()))?;
    let nu = instance.universe_size;
    if nu == 0 {
        return Err(Error::InvalidInstance("empty universe".into()));
    }
    let nf = instance.sets.len();
    let mut roles = BTreeMap::new();
    let mut arcs = Vec::new();
    for u in 0..nu {
        roles.insert(format!("U1[{u}]"), u);
        roles.insert(format!("U2[{u}]"), nu + u);
        arcs.push((u, nu + u));
    }
    for (j, set) in instance.sets.iter().enumerate() {
        roles.insert(format!("F[{j}]"), 2 * nu + j);
        for &u in set {
            arcs.push((nu + u, 2 * nu + j));
        }
    }
    let digraph = Digraph::new(2 * nu + nf, &arcs)?;

    let report = classify(&digraph);
    ensure(report.is_dag, "gadget must be acyclic")?;
    if nf > 0 {
        let oracle = DistanceOracle::new(&digraph);
        ensure(
            report.layer_partition.as_ref().is_some_and(|lp| lp.t() == 2),
            "gadget must have three layers",
        )?;
        ensure(oracle.mfd() == 2, "gadget must have maximum finite distance 2")?;
    }
    ReductionOutput::new(digraph, nu as u32 + k, roles, Vec::new())
}

fn ensure(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Internal(msg.into()))
    }
}
