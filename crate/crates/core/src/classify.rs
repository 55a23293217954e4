use crate::digraph::Digraph;
use std::collections::VecDeque;

/// Layer partition of a layered DAG: disjoint layers covering all vertices,
/// every arc spanning exactly one level downwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerPartition {
    pub layers: Vec<Vec<usize>>,
    pub layer_of: Vec<usize>,
}

impl LayerPartition {
    /// Index of the last layer.
    pub fn t(&self) -> usize {
        self.layers.len() - 1
    }
}

/// Everything the dispatching solvers need to know about an instance.
#[derive(Debug, Clone)]
pub struct StructureReport {
    pub is_dag: bool,
    pub topo_order: Option<Vec<usize>>,
    pub sources: Vec<usize>,
    pub sinks: Vec<usize>,
    pub is_layered: bool,
    pub layer_partition: Option<LayerPartition>,
    pub single_sourced: bool,
    pub strongly_connected: bool,
    pub weakly_connected_components: Vec<Vec<usize>>,
    pub max_out_degree: usize,
    pub max_total_degree: usize,
}

impl StructureReport {
    pub fn single_sourced_layered(&self) -> bool {
        self.single_sourced && self.is_layered
    }
}

/// Structure recognition: acyclicity with a topological order, the layered
/// test (BFS levels from the source set, then arc validation — the partition
/// is forced by distance from the sources when it exists), strong and weak
/// connectivity, degree maxima.
pub fn classify(d: &Digraph) -> StructureReport {
    let n = d.vertex_count();
    let sources: Vec<usize> = (0..n).filter(|&v| d.in_neighbors(v).is_empty()).collect();
    let sinks: Vec<usize> = (0..n).filter(|&v| d.out_neighbors(v).is_empty()).collect();

    let topo_order = topological_order(d);
    let is_dag = topo_order.is_some();

    let layer_partition = layered_partition(d, &sources);
    let is_layered = layer_partition.is_some();

    StructureReport {
        is_dag,
        topo_order,
        single_sourced: sources.len() == 1,
        sources,
        sinks,
        is_layered,
        layer_partition,
        strongly_connected: strongly_connected(d),
        weakly_connected_components: d.weak_components(),
        max_out_degree: d.max_out_degree(),
        max_total_degree: d.max_total_degree(),
    }
}

/// Kahn's algorithm; ties broken by vertex id so the order is deterministic.
pub fn topological_order(d: &Digraph) -> Option<Vec<usize>> {
    let n = d.vertex_count();
    let mut indeg: Vec<usize> = (0..n).map(|v| d.in_neighbors(v).len()).collect();
    let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    ready.sort_unstable_by(|a, b| b.cmp(a));
    let mut order = Vec::with_capacity(n);
    while let Some(u) = ready.pop() {
        order.push(u);
        let mut freed = Vec::new();
        for &v in d.out_neighbors(u) {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                freed.push(v);
            }
        }
        for v in freed {
            let pos = ready.binary_search_by(|x| v.cmp(x)).unwrap_or_else(|e| e);
            ready.insert(pos, v);
        }
    }
    (order.len() == n).then_some(order)
}

fn layered_partition(d: &Digraph, sources: &[usize]) -> Option<LayerPartition> {
    let n = d.vertex_count();
    if n == 0 || sources.is_empty() {
        return None;
    }
    let mut level = vec![usize::MAX; n];
    let mut q = VecDeque::new();
    for &s in sources {
        level[s] = 0;
        q.push_back(s);
    }
    while let Some(u) = q.pop_front() {
        for &v in d.out_neighbors(u) {
            if level[v] == usize::MAX {
                level[v] = level[u] + 1;
                q.push_back(v);
            }
        }
    }
    if level.contains(&usize::MAX) {
        return None;
    }
    // Every arc must span exactly one level.
    for (u, v) in d.arcs() {
        if level[v] != level[u] + 1 {
            return None;
        }
    }
    let t = *level.iter().max().unwrap();
    let mut layers = vec![Vec::new(); t + 1];
    for v in 0..n {
        layers[level[v]].push(v);
    }
    Some(LayerPartition {
        layers,
        layer_of: level,
    })
}

fn strongly_connected(d: &Digraph) -> bool {
    let n = d.vertex_count();
    if n <= 1 {
        return true;
    }
    reaches_all(d, 0, false) && reaches_all(d, 0, true)
}

fn reaches_all(d: &Digraph, start: usize, reversed: bool) -> bool {
    let n = d.vertex_count();
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(u) = stack.pop() {
        let nbrs = if reversed {
            d.in_neighbors(u)
        } else {
            d.out_neighbors(u)
        };
        for &v in nbrs {
            if !seen[v] {
                seen[v] = true;
                count += 1;
                stack.push(v);
            }
        }
    }
    count == n
}
