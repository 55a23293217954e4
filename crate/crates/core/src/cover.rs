use crate::digraph::Digraph;
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// Partition of the non-cover vertices into twin classes: two vertices share
/// a class exactly when they have the same in- and out-neighbor sets inside
/// the cover. Classes are ordered by smallest member.
#[derive(Debug, Clone)]
pub struct NeighborhoodClasses {
    pub cover: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
}

/// Returns an arc with no endpoint in `s`, if any.
pub fn uncovered_arc(d: &Digraph, s: &[usize]) -> Option<(usize, usize)> {
    let mut in_set = vec![false; d.vertex_count()];
    for &v in s {
        in_set[v] = true;
    }
    d.arcs().find(|&(u, v)| !in_set[u] && !in_set[v])
}

pub fn neighborhood_classes(d: &Digraph, s: &[usize]) -> Result<NeighborhoodClasses> {
    if let Some((u, v)) = uncovered_arc(d, s) {
        return Err(Error::NotAVertexCover { u, v });
    }
    let mut cover = s.to_vec();
    cover.sort_unstable();
    cover.dedup();
    let mut in_cover = vec![false; d.vertex_count()];
    for &v in &cover {
        in_cover[v] = true;
    }
    // Outside the cover all neighbors lie in the cover, so the full
    // adjacency lists are already the S-restricted neighborhoods.
    let mut by_key: BTreeMap<(Vec<usize>, Vec<usize>), Vec<usize>> = BTreeMap::new();
    for (v, _) in in_cover.iter().enumerate().filter(|&(_, &c)| !c) {
        let key = (d.in_neighbors(v).to_vec(), d.out_neighbors(v).to_vec());
        by_key.entry(key).or_default().push(v);
    }
    let mut classes: Vec<Vec<usize>> = by_key.into_values().collect();
    classes.sort_unstable_by_key(|c| c[0]);
    Ok(NeighborhoodClasses { cover, classes })
}

/// Minimum vertex cover by branching on an uncovered arc (take either
/// endpoint), exponential only in the cover size.
pub fn min_vertex_cover(d: &Digraph) -> Vec<usize> {
    let mut best: Vec<usize> = (0..d.vertex_count()).collect();
    let mut current = Vec::new();
    branch_cover(d, &mut current, &mut best);
    best.sort_unstable();
    best
}

fn branch_cover(d: &Digraph, current: &mut Vec<usize>, best: &mut Vec<usize>) {
    if current.len() >= best.len() {
        return;
    }
    match uncovered_arc(d, current) {
        None => {
            *best = current.clone();
        }
        Some((u, v)) => {
            current.push(u);
            branch_cover(d, current, best);
            current.pop();
            current.push(v);
            branch_cover(d, current, best);
            current.pop();
        }
    }
}
