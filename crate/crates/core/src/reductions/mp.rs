use super::{ColoredGraph, ReductionOutput, UndirectedGraph};
use crate::classify::classify;
use crate::digraph::Digraph;
use crate::dist::DistanceOracle;
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// Independent-set gadget: a pendant source per edge feeding a subdivision
/// vertex that sees both endpoints. Packing target m + k.
pub fn reduce_is_to_mp(graph: &UndirectedGraph, k: u32) -> Result<ReductionOutput> {
    let m = graph.edges.len();
    if m == 0 {
        return Err(Error::InvalidInstance("at least one edge is required".into()));
    }
    let n = graph.n;
    let mut roles = BTreeMap::new();
    let mut arcs = Vec::new();
    for (i, &(u, v)) in graph.edges.iter().enumerate() {
        roles.insert(format!("E1[{i}]"), i);
        roles.insert(format!("E2[{i}]"), m + i);
        arcs.push((i, m + i));
        arcs.push((m + i, 2 * m + u));
        arcs.push((m + i, 2 * m + v));
    }
    for v in 0..n {
        roles.insert(format!("V[{v}]"), 2 * m + v);
    }
    let digraph = Digraph::new(2 * m + n, &arcs)?;

    let report = classify(&digraph);
    ensure(report.is_dag, "gadget must be acyclic")?;
    ensure(
        report.layer_partition.as_ref().is_some_and(|lp| lp.t() == 2),
        "gadget must have three layers",
    )?;
    ensure(
        DistanceOracle::new(&digraph).mfd() == 2,
        "gadget must have maximum finite distance 2",
    )?;
    if graph.max_degree() <= 3 {
        ensure(
            digraph.max_total_degree() <= 3,
            "subcubic instances give degree at most 3",
        )?;
    }
    ReductionOutput::new(digraph, m as u32 + k, roles, Vec::new())
}

/// Independent-set gadget with a single source: the edge gadgets are chained
/// through z-vertices behind one source s, and each graph vertex hangs off
/// the chain at its first edge. Packing target k + 2m + 1.
pub fn reduce_is_to_mp_single_source(
    graph: &UndirectedGraph,
    k: u32,
) -> Result<ReductionOutput> {
    let m = graph.edges.len();
    if let Some(v) = (0..graph.n).find(|&v| graph.degree(v) == 0) {
        return Err(Error::IsolatedVertex { vertex: v });
    }
    if m == 0 {
        return Err(Error::InvalidInstance("at least one edge is required".into()));
    }
    let n = graph.n;
    // first edge containing each vertex
    let first_edge: Vec<usize> = (0..n)
        .map(|v| {
            graph
                .edges
                .iter()
                .position(|&(a, b)| a == v || b == v)
                .expect("no isolated vertices")
        })
        .collect();

    let block = |i: usize, off: usize| 6 * i + off; // u,v,w,x,y,z per edge
    let vert = |v: usize| 6 * m + v;
    let s = 6 * m + n;
    let p = s + 1;

    let mut roles = BTreeMap::new();
    for i in 0..m {
        for (off, name) in ["u", "v", "w", "x", "y", "z"].iter().enumerate() {
            roles.insert(format!("{name}[{i}]"), block(i, off));
        }
    }
    for v in 0..n {
        roles.insert(format!("V[{v}]"), vert(v));
    }
    roles.insert("s".into(), s);
    roles.insert("p".into(), p);

    let mut arcs = Vec::new();
    for (i, &(a, b)) in graph.edges.iter().enumerate() {
        let (u_i, v_i, w_i, x_i, y_i, z_i) = (
            block(i, 0),
            block(i, 1),
            block(i, 2),
            block(i, 3),
            block(i, 4),
            block(i, 5),
        );
        arcs.extend([(u_i, w_i), (u_i, x_i), (v_i, x_i), (w_i, y_i), (w_i, z_i)]);
        if i + 1 < m {
            arcs.push((z_i, block(i + 1, 0)));
            arcs.push((z_i, block(i + 1, 1)));
        }
        arcs.push((x_i, vert(a)));
        arcs.push((x_i, vert(b)));
    }
    for (v, &edge) in first_edge.iter().enumerate() {
        arcs.push((block(edge, 0), vert(v)));
    }
    arcs.extend([(s, p), (p, block(0, 0)), (p, block(0, 1))]);
    let digraph = Digraph::new(6 * m + n + 2, &arcs)?;

    let report = classify(&digraph);
    ensure(report.is_dag, "gadget must be acyclic")?;
    ensure(
        report.sources == vec![s],
        "gadget must have the single source s",
    )?;
    if graph.max_degree() <= 4 {
        ensure(
            digraph.max_total_degree() <= 5,
            "bounded-degree instances give degree at most 5",
        )?;
    }
    ReductionOutput::new(digraph, k + 2 * m as u32 + 1, roles, Vec::new())
}

/// Multicolored-independent-set gadget: the bipartite incidence structure
/// with bidirected cliques per color pair, duplicated vertex layer and one
/// guard source per class. Packing target 2k + (number of color pairs that
/// carry an edge); pairs without edges contribute no clique vertex and
/// lower the count, which is recorded in the notes.
pub fn reduce_mis_to_mp(colored: &ColoredGraph) -> Result<ReductionOutput> {
    let n = colored.graph.n;
    let k = colored.k;
    for &(a, b) in &colored.graph.edges {
        if colored.colors[a] == colored.colors[b] {
            return Err(Error::SameClassEdge { u: a, v: b });
        }
    }
    let m = colored.graph.edges.len();
    let vert = |v: usize| v;
    let edge = |i: usize| n + i;
    let dup = |v: usize| n + m + v;
    let guard = |i: usize| 2 * n + m + i;

    let mut roles = BTreeMap::new();
    for v in 0..n {
        roles.insert(format!("V[{v}]"), vert(v));
        roles.insert(format!("Vp[{v}]"), dup(v));
    }
    for i in 0..k {
        roles.insert(format!("s[{i}]"), guard(i));
    }

    let mut arcs = Vec::new();
    let mut pair_edges: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, &(a, b)) in colored.graph.edges.iter().enumerate() {
        let (ca, cb) = (colored.colors[a], colored.colors[b]);
        let key = (ca.min(cb), ca.max(cb));
        roles.insert(format!("E{}_{}[{i}]", key.0, key.1), edge(i));
        pair_edges.entry(key).or_default().push(i);
        arcs.push((edge(i), vert(a)));
        arcs.push((edge(i), vert(b)));
    }
    for members in pair_edges.values() {
        for &a in members {
            for &b in members {
                if a != b {
                    arcs.push((edge(a), edge(b)));
                }
            }
        }
    }
    for v in 0..n {
        arcs.push((vert(v), dup(v)));
    }
    for i in 0..k {
        for v in colored.class(i) {
            arcs.push((guard(i), vert(v)));
        }
    }
    let digraph = Digraph::new(2 * n + m + k, &arcs)?;

    let nonempty_pairs = pair_edges.len() as u32;
    let all_pairs = (k * k.saturating_sub(1) / 2) as u32;
    let mut notes = Vec::new();
    if nonempty_pairs < all_pairs {
        notes.push(format!(
            "{} of {} color pairs carry no edge; target lowered accordingly",
            all_pairs - nonempty_pairs,
            all_pairs
        ));
    }

    if n > 0 {
        let oracle = DistanceOracle::new(&digraph);
        let has_big_clique = pair_edges.values().any(|e| e.len() >= 2);
        let expected = if has_big_clique { 3 } else { 2 };
        ensure(
            oracle.mfd() == expected,
            "multicolored gadget has the wrong radius",
        )?;
    }
    ReductionOutput::new(digraph, 2 * k as u32 + nonempty_pairs, roles, notes)
}

fn ensure(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Internal(msg.into()))
    }
}
