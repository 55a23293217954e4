use super::{covers_all, BroadcastFunction};
use crate::cover::{min_vertex_cover, neighborhood_classes};
use crate::digraph::Digraph;
use crate::dist::DistanceOracle;
use crate::error::Result;
use crate::outcome::{Algorithm, SolveOutcome};

/// Exact solver parameterized by a vertex cover S of size c.
///
/// Twin classes outside the cover behave uniformly: one representative per
/// class may transmit with any radius, the remaining members are all silent
/// or all at radius 1, and cover vertices take any radius. Radii above
/// 2c+1 are never useful because no finite distance exceeds that. The
/// candidates are scanned in increasing total cost, so the first valid one
/// is the optimum.
pub fn solve_bd_vertex_cover(
    d: &Digraph,
    cover: Option<&[usize]>,
) -> Result<SolveOutcome<BroadcastFunction>> {
    let n = d.vertex_count();
    let cover: Vec<usize> = match cover {
        Some(s) => s.to_vec(),
        None => min_vertex_cover(d),
    };
    let classes = neighborhood_classes(d, &cover)?;
    if n == 0 {
        return Ok(SolveOutcome {
            optimum: Some(0),
            witness: Some(BroadcastFunction::zeros(0)),
            algorithm: Algorithm::BdVertexCover,
            nodes_explored: 0,
            decision: None,
        });
    }
    let radius_cap = 2 * classes.cover.len() as u32 + 1;

    let mut slots: Vec<Slot> = classes
        .cover
        .iter()
        .map(|&s| Slot::Vertex(s))
        .collect();
    for class in &classes.classes {
        slots.push(Slot::Vertex(class[0]));
        if class.len() > 1 {
            slots.push(Slot::Rest(class[1..].to_vec()));
        }
    }
    let mut suffix_max = vec![0u64; slots.len() + 1];
    for i in (0..slots.len()).rev() {
        suffix_max[i] = suffix_max[i + 1] + slots[i].max_cost(radius_cap) as u64;
    }

    let oracle = DistanceOracle::new(d);
    let mut nodes = 0u64;
    for cost in 1..=n as u32 {
        let mut doms: Vec<(usize, u32)> = Vec::new();
        if let Some(found) = assign(
            &oracle,
            n,
            &slots,
            &suffix_max,
            radius_cap,
            0,
            cost,
            &mut doms,
            &mut nodes,
        ) {
            return Ok(SolveOutcome {
                optimum: Some(cost),
                witness: Some(found),
                algorithm: Algorithm::BdVertexCover,
                nodes_explored: nodes,
                decision: None,
            });
        }
    }
    unreachable!("the all-ones assignment is in the candidate space");
}

enum Slot {
    Vertex(usize),
    Rest(Vec<usize>),
}

impl Slot {
    fn max_cost(&self, radius_cap: u32) -> u32 {
        match self {
            Slot::Vertex(_) => radius_cap,
            Slot::Rest(members) => members.len() as u32,
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn assign(
    oracle: &DistanceOracle,
    n: usize,
    slots: &[Slot],
    suffix_max: &[u64],
    radius_cap: u32,
    i: usize,
    remaining: u32,
    doms: &mut Vec<(usize, u32)>,
    nodes: &mut u64,
) -> Option<BroadcastFunction> {
    if remaining as u64 > suffix_max[i] {
        return None;
    }
    if i == slots.len() {
        *nodes += 1;
        return covers_all(oracle, n, doms)
            .then(|| BroadcastFunction::from_dominators(n, doms));
    }
    match &slots[i] {
        Slot::Vertex(v) => {
            for radius in 0..=radius_cap.min(remaining) {
                if radius > 0 {
                    doms.push((*v, radius));
                }
                let found = assign(
                    oracle,
                    n,
                    slots,
                    suffix_max,
                    radius_cap,
                    i + 1,
                    remaining - radius,
                    doms,
                    nodes,
                );
                if radius > 0 {
                    doms.pop();
                }
                if found.is_some() {
                    return found;
                }
            }
            None
        }
        Slot::Rest(members) => {
            let found = assign(
                oracle,
                n,
                slots,
                suffix_max,
                radius_cap,
                i + 1,
                remaining,
                doms,
                nodes,
            );
            if found.is_some() {
                return found;
            }
            let all_ones = members.len() as u32;
            if all_ones <= remaining {
                let before = doms.len();
                doms.extend(members.iter().map(|&v| (v, 1)));
                let found = assign(
                    oracle,
                    n,
                    slots,
                    suffix_max,
                    radius_cap,
                    i + 1,
                    remaining - all_ones,
                    doms,
                    nodes,
                );
                doms.truncate(before);
                if found.is_some() {
                    return found;
                }
            }
            None
        }
    }
}
