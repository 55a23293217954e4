use crate::error::{Error, Result};

/// Immutable directed graph on vertices `0..n` with both adjacency
/// directions materialized. No self-loops, no duplicate arcs; adjacency
/// lists are kept sorted so traversals are deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
    arc_count: usize,
}

impl Digraph {
    pub fn new(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { u });
            }
            out_adj[u].push(v);
        }
        for (u, nbrs) in out_adj.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if let Some(w) = nbrs.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateArc { u, v: w[0] });
            }
        }
        for (u, nbrs) in out_adj.iter().enumerate() {
            for &v in nbrs {
                in_adj[v].push(u);
            }
        }
        for nbrs in in_adj.iter_mut() {
            nbrs.sort_unstable();
        }
        Ok(Digraph {
            n,
            arc_count: arcs.len(),
            out_adj,
            in_adj,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out_adj[u].binary_search(&v).is_ok()
    }

    /// Arcs in (tail, head) order, tails ascending.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().map(move |&v| (u, v)))
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj[v].len()
    }

    pub fn max_out_degree(&self) -> usize {
        self.out_adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Degree in the underlying undirected graph: distinct neighbors in
    /// either direction (a 2-cycle counts its partner once).
    pub fn total_degree(&self, v: usize) -> usize {
        let mut nbrs: Vec<usize> = self.out_adj[v]
            .iter()
            .chain(self.in_adj[v].iter())
            .copied()
            .collect();
        nbrs.sort_unstable();
        nbrs.dedup();
        nbrs.len()
    }

    pub fn max_total_degree(&self) -> usize {
        (0..self.n).map(|v| self.total_degree(v)).max().unwrap_or(0)
    }

    /// Subgraph induced by `verts`; the second component maps new ids back
    /// to the originals (new id = position in the sorted vertex list).
    pub fn induced(&self, verts: &[usize]) -> (Digraph, Vec<usize>) {
        let mut map = verts.to_vec();
        map.sort_unstable();
        map.dedup();
        let mut rev = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            rev[v] = i;
        }
        let mut arcs: Vec<(usize, usize)> = Vec::new();
        for &u in &map {
            for &v in &self.out_adj[u] {
                if rev[v] != usize::MAX {
                    arcs.push((rev[u], rev[v]));
                }
            }
        }
        let sub = Digraph::new(map.len(), &arcs).expect("induced subgraph of a valid digraph");
        (sub, map)
    }

    /// Weakly connected components, each sorted, ordered by smallest member.
    pub fn weak_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(u) = stack.pop() {
                for &v in self.out_adj[u].iter().chain(self.in_adj[u].iter()) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_isolated_vertex() {
        let d = Digraph::new(1, &[]).unwrap();
        assert_eq!(d.vertex_count(), 1);
        assert_eq!(d.arc_count(), 0);
    }

    #[test]
    fn directed_path_p4() {
        let d = Digraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(d.out_neighbors(0), &[1]);
        assert_eq!(d.in_neighbors(3), &[2]);
        assert!(d.has_arc(1, 2));
        assert!(!d.has_arc(2, 1));
    }

    #[test]
    fn rejects_self_loop() {
        let err = Digraph::new(3, &[(0, 1), (1, 1)]).unwrap_err();
        assert_eq!(err, Error::SelfLoop { u: 1 });
    }

    #[test]
    fn rejects_duplicate_arc() {
        let err = Digraph::new(3, &[(0, 1), (0, 1)]).unwrap_err();
        assert_eq!(err, Error::DuplicateArc { u: 0, v: 1 });
    }

    #[test]
    fn rejects_out_of_range() {
        let err = Digraph::new(2, &[(0, 2)]).unwrap_err();
        assert_eq!(err, Error::VertexOutOfRange { u: 0, v: 2, n: 2 });
    }

    #[test]
    fn total_degree_counts_two_cycle_partner_once() {
        let d = Digraph::new(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(d.total_degree(0), 1);
        assert_eq!(d.max_out_degree(), 1);
    }

    #[test]
    fn weak_components_of_two_paths() {
        let d = Digraph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(d.weak_components(), vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn induced_subgraph_relabels() {
        let d = Digraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let (sub, map) = d.induced(&[1, 2, 3]);
        assert_eq!(map, vec![1, 2, 3]);
        assert_eq!(sub.vertex_count(), 3);
        assert!(sub.has_arc(0, 1) && sub.has_arc(1, 2));
    }
}
