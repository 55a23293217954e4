//! Hardness-reduction gadget generators and the exhaustive deciders for
//! their source problems, so every reduction can be certified end to end.

mod bd;
mod mp;
mod source;

pub use bd::{reduce_hs_to_bd, reduce_mds_to_bd_v1, reduce_mds_to_bd_v2, reduce_x3c_to_bd};
pub use mp::{reduce_is_to_mp, reduce_is_to_mp_single_source, reduce_mis_to_mp};
pub use source::SourceInstance;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// An exact-cover-by-3-sets instance: a ground set of 3k elements and a
/// list of triples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct X3CInstance {
    pub ground_size: usize,
    pub triples: Vec<[usize; 3]>,
}

impl X3CInstance {
    pub fn new(ground_size: usize, triples: Vec<[usize; 3]>) -> Result<Self> {
        if !ground_size.is_multiple_of(3) {
            return Err(Error::InvalidInstance(format!(
                "ground set size {ground_size} is not divisible by 3"
            )));
        }
        for t in &triples {
            if t[0] == t[1] || t[0] == t[2] || t[1] == t[2] {
                return Err(Error::InvalidInstance(format!(
                    "triple {t:?} has repeated elements"
                )));
            }
            if let Some(&e) = t.iter().find(|&&e| e >= ground_size) {
                return Err(Error::InvalidInstance(format!(
                    "element {e} outside ground set 0..{ground_size}"
                )));
            }
        }
        Ok(X3CInstance {
            ground_size,
            triples,
        })
    }

    pub fn k(&self) -> usize {
        self.ground_size / 3
    }
}

/// An undirected graph with a significant edge order (gadgets index edges).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl UndirectedGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { u });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateArc { u, v });
            }
        }
        Ok(UndirectedGraph { n, edges })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges
            .iter()
            .any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }
}

/// An undirected graph whose vertices are partitioned into color classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    pub graph: UndirectedGraph,
    pub colors: Vec<usize>,
    pub k: usize,
}

impl ColoredGraph {
    pub fn new(graph: UndirectedGraph, colors: Vec<usize>) -> Result<Self> {
        if colors.len() != graph.n {
            return Err(Error::InvalidInstance(format!(
                "{} colors for {} vertices",
                colors.len(),
                graph.n
            )));
        }
        let k = colors.iter().map(|&c| c + 1).max().unwrap_or(0);
        for class in 0..k {
            if !colors.contains(&class) {
                return Err(Error::InvalidInstance(format!("color class {class} is empty")));
            }
        }
        Ok(ColoredGraph { graph, colors, k })
    }

    pub fn class(&self, i: usize) -> Vec<usize> {
        (0..self.graph.n)
            .filter(|&v| self.colors[v] == i)
            .collect()
    }
}

/// A generated gadget: the digraph, the target parameter, and a role map
/// naming every vertex (a bijection, checked at construction).
#[derive(Debug, Clone)]
pub struct ReductionOutput {
    pub digraph: Digraph,
    pub k_target: u32,
    pub roles: BTreeMap<String, usize>,
    pub notes: Vec<String>,
}

impl ReductionOutput {
    pub(crate) fn new(
        digraph: Digraph,
        k_target: u32,
        roles: BTreeMap<String, usize>,
        notes: Vec<String>,
    ) -> Result<Self> {
        let n = digraph.vertex_count();
        let mut seen = vec![false; n];
        for &v in roles.values() {
            if v >= n || seen[v] {
                return Err(Error::Internal("role map is not a bijection".into()));
            }
            seen[v] = true;
        }
        if roles.len() != n {
            return Err(Error::Internal("role map misses vertices".into()));
        }
        Ok(ReductionOutput {
            digraph,
            k_target,
            roles,
            notes,
        })
    }

    pub fn role(&self, label: &str) -> Option<usize> {
        self.roles.get(label).copied()
    }
}
