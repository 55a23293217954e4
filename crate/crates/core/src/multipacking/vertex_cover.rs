use super::{verify_multipacking_with_oracle, Multipacking};
use crate::cover::{min_vertex_cover, neighborhood_classes};
use crate::digraph::Digraph;
use crate::dist::DistanceOracle;
use crate::error::Result;
use crate::outcome::{Algorithm, SolveOutcome};

/// Exact solver parameterized by a vertex cover S of size c.
///
/// Some maximum packing contains every source. Non-source twin classes
/// share an in-neighbor, so they contribute at most one member, and twins
/// are interchangeable — the smallest id stands in. That leaves at most
/// one binary choice per class plus a free subset of the non-source cover
/// vertices: 2^(t+c) candidates, each checked by the verifier.
pub fn solve_mp_vertex_cover(
    d: &Digraph,
    cover: Option<&[usize]>,
) -> Result<SolveOutcome<Multipacking>> {
    let n = d.vertex_count();
    let cover: Vec<usize> = match cover {
        Some(s) => s.to_vec(),
        None => min_vertex_cover(d),
    };
    let classes = neighborhood_classes(d, &cover)?;
    let oracle = DistanceOracle::new(d);

    let sources: Vec<usize> = (0..n).filter(|&v| d.in_neighbors(v).is_empty()).collect();
    let is_source = |v: usize| d.in_neighbors(v).is_empty();

    // Optional picks: one representative per non-source class, then every
    // non-source cover vertex.
    let mut optional: Vec<usize> = classes
        .classes
        .iter()
        .filter(|class| !is_source(class[0]))
        .map(|class| class[0])
        .collect();
    optional.extend(classes.cover.iter().copied().filter(|&v| !is_source(v)));

    let mut best: Option<Multipacking> = None;
    let mut nodes = 0u64;
    for mask in 0u64..1 << optional.len() {
        let mut members = sources.clone();
        for (i, &v) in optional.iter().enumerate() {
            if mask >> i & 1 == 1 {
                members.push(v);
            }
        }
        let candidate = Multipacking::new(members);
        nodes += 1;
        if verify_multipacking_with_oracle(&oracle, n, &candidate).is_valid()
            && best.as_ref().is_none_or(|b| candidate.size() > b.size())
        {
            best = Some(candidate);
        }
    }
    let witness = best.expect("the all-sources candidate is always valid");
    Ok(SolveOutcome {
        optimum: Some(witness.size()),
        witness: Some(witness),
        algorithm: Algorithm::MpVertexCover,
        nodes_explored: nodes,
        decision: None,
    })
}
