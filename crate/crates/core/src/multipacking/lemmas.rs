use super::{verify_multipacking_with_oracle, Multipacking, MultipackingCheck};
use crate::classify::classify;
use crate::digraph::Digraph;
use crate::dist::DistanceOracle;
use crate::error::{Error, Result};

/// Packing witness from a long shortest path: when the maximum finite
/// distance reaches 3k-3, take every third vertex of a path realizing it.
///
/// The spaced selection is checked before it is returned: a vertex off the
/// path can reach several selected vertices quickly and break the ball
/// constraint (directed distances are not symmetric), in which case NONE
/// comes back even though the distance threshold was met. On layered
/// digraphs the check never fails, since distances equal layer differences
/// there and the members sit three layers apart.
pub fn mp_from_long_path(d: &Digraph, k: u32) -> Option<Multipacking> {
    if k == 0 {
        return Some(Multipacking::empty());
    }
    let n = d.vertex_count();
    let oracle = DistanceOracle::new(d);
    let span = 3 * (k - 1);
    if oracle.mfd() < span || n == 0 {
        return None;
    }
    let (u, v) = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| oracle.dist(a, b) == oracle.mfd())
        .expect("mfd is realized by some pair");
    let path = shortest_path(d, &oracle, u, v);
    let members: Vec<usize> = (0..k).map(|i| path[(3 * i) as usize]).collect();
    let packing = Multipacking::new(members);
    match verify_multipacking_with_oracle(&oracle, n, &packing) {
        MultipackingCheck::Valid => Some(packing),
        MultipackingCheck::Violation { .. } => None,
    }
}

/// Reconstructs a shortest u->v path, walking back from v through the
/// smallest-id predecessor on a shortest path; deterministic.
fn shortest_path(d: &Digraph, oracle: &DistanceOracle, u: usize, v: usize) -> Vec<usize> {
    let mut path = vec![v];
    let mut cur = v;
    while cur != u {
        let need = oracle.dist(u, cur) - 1;
        let prev = d
            .in_neighbors(cur)
            .iter()
            .copied()
            .find(|&w| oracle.dist(u, w) == need)
            .expect("a shortest path has a predecessor chain");
        path.push(prev);
        cur = prev;
    }
    path.reverse();
    path
}

/// Exchanges members so that every source joins the packing without
/// shrinking it. A source that is not full joins for free; a source full at
/// distance 1 swaps with the unique member next to it; otherwise it swaps
/// with a member of the first full ball. Sources reach no other source, so
/// earlier insertions are never undone.
pub fn normalize_sources_into_mp(d: &Digraph, s: &Multipacking) -> Result<Multipacking> {
    let n = d.vertex_count();
    let oracle = DistanceOracle::new(d);
    if let MultipackingCheck::Violation { vertex, radius } =
        verify_multipacking_with_oracle(&oracle, n, s)
    {
        return Err(Error::InvalidMultipacking { vertex, radius });
    }
    let mut members: Vec<usize> = s.members().to_vec();
    for source in (0..n).filter(|&v| d.in_neighbors(v).is_empty()) {
        if members.contains(&source) {
            continue;
        }
        let count_within = |members: &[usize], radius: u32| {
            members
                .iter()
                .filter(|&&m| oracle.dist(source, m) <= radius)
                .count() as u32
        };
        let full_radius = (1..=n as u32).find(|&r| count_within(&members, r) == r);
        match full_radius {
            None => members.push(source),
            Some(1) => {
                let neighbor = *members
                    .iter()
                    .find(|&&m| oracle.dist(source, m) <= 1)
                    .expect("full at distance 1 means one member within it");
                members.retain(|&m| m != neighbor);
                members.push(source);
            }
            Some(r) => {
                let removed = *members
                    .iter()
                    .filter(|&&m| oracle.dist(source, m) <= r)
                    .min()
                    .expect("full ball is nonempty");
                members.retain(|&m| m != removed);
                members.push(source);
            }
        }
    }
    let out = Multipacking::new(members);
    debug_assert!(out.size() >= s.size());
    match verify_multipacking_with_oracle(&oracle, n, &out) {
        MultipackingCheck::Valid => Ok(out),
        MultipackingCheck::Violation { vertex, radius } => Err(Error::Internal(format!(
            "source exchange broke the packing at ({vertex},{radius})"
        ))),
    }
}

/// On a single-sourced layered DAG, rearranges a valid packing into one of
/// equal size with at most one member per layer. Repeatedly takes the lowest
/// layer j holding two members and the highest empty layer i below it; a
/// member then moves one layer down (to a predecessor free of in-neighbors
/// in the packing when i = j-1, else from layer i+1 to a free vertex of
/// layer i). Every move lowers the total layer sum, so this terminates.
pub fn normalize_one_per_layer(d: &Digraph, s: &Multipacking) -> Result<Multipacking> {
    let n = d.vertex_count();
    let report = classify(d);
    let layers = match (report.single_sourced, report.layer_partition) {
        (true, Some(lp)) => lp,
        _ => {
            return Err(Error::PreconditionViolation(
                "digraph is not a single-sourced layered DAG".into(),
            ))
        }
    };
    let oracle = DistanceOracle::new(d);
    if let MultipackingCheck::Violation { vertex, radius } =
        verify_multipacking_with_oracle(&oracle, n, s)
    {
        return Err(Error::InvalidMultipacking { vertex, radius });
    }

    let mut members: Vec<usize> = s.members().to_vec();
    loop {
        let per_layer: Vec<Vec<usize>> = {
            let mut by = vec![Vec::new(); layers.t() + 1];
            for &m in &members {
                by[layers.layer_of[m]].push(m);
            }
            by
        };
        let j = match (0..=layers.t()).find(|&l| per_layer[l].len() >= 2) {
            None => break,
            Some(j) => j,
        };
        let i = (0..j)
            .rev()
            .find(|&l| per_layer[l].is_empty())
            .expect("a crowded layer forces an empty one below it");
        let has_member_in_neighbor = |v: usize, members: &[usize]| {
            d.in_neighbors(v).iter().any(|w| members.contains(w))
        };
        let (removed, added) = if i == j - 1 {
            let m1 = per_layer[j][0];
            let m2 = per_layer[j][1];
            let pred = |m: usize| {
                *d.in_neighbors(m)
                    .iter()
                    .find(|&&w| layers.layer_of[w] == i)
                    .expect("non-source vertices have a predecessor in the previous layer")
            };
            let (p1, p2) = (pred(m1), pred(m2));
            if !has_member_in_neighbor(p1, &members) {
                (m1, p1)
            } else if !has_member_in_neighbor(p2, &members) {
                (m2, p2)
            } else {
                return Err(Error::Internal(
                    "both predecessors are blocked in the layer exchange".into(),
                ));
            }
        } else {
            let free = layers.layers[i]
                .iter()
                .copied()
                .find(|&v| !has_member_in_neighbor(v, &members))
                .ok_or_else(|| {
                    Error::Internal("no free vertex in the empty layer".into())
                })?;
            let moved = per_layer[i + 1][0];
            (moved, free)
        };
        members.retain(|&m| m != removed);
        members.push(added);
    }

    let out = Multipacking::new(members);
    match verify_multipacking_with_oracle(&oracle, n, &out) {
        MultipackingCheck::Valid if out.size() == s.size() => Ok(out),
        MultipackingCheck::Valid => Err(Error::Internal(
            "layer exchange changed the packing size".into(),
        )),
        MultipackingCheck::Violation { vertex, radius } => Err(Error::Internal(format!(
            "layer exchange broke the packing at ({vertex},{radius})"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipacking::{brute_force_mp, verify_multipacking};

    fn p4() -> Digraph {
        Digraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    fn p7() -> Digraph {
        Digraph::new(7, &(0..6).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn p4_gives_spaced_pair() {
        let s = mp_from_long_path(&p4(), 2).unwrap();
        assert_eq!(s.members(), &[0, 3]);
        assert!(verify_multipacking(&p4(), &s).is_valid());
    }

    #[test]
    fn p4_threshold_blocks_k3() {
        assert!(mp_from_long_path(&p4(), 3).is_none());
    }

    #[test]
    fn p7_witness_is_not_the_optimum() {
        let s = mp_from_long_path(&p7(), 3).unwrap();
        assert_eq!(s.members(), &[0, 3, 6]);
        assert!(verify_multipacking(&p7(), &s).is_valid());
        assert_eq!(brute_force_mp(&p7(), None).optimum, Some(4));
    }

    /// The spaced selection is not always a packing: here w reaches all
    /// three selected path vertices in one hop, so the guard returns NONE.
    #[test]
    fn spaced_selection_can_fail_off_path() {
        let mut arcs: Vec<(usize, usize)> = (0..6).map(|i| (i, i + 1)).collect();
        arcs.extend([(7, 0), (7, 3), (7, 6)]);
        let d = Digraph::new(8, &arcs).unwrap();
        assert_eq!(DistanceOracle::new(&d).mfd(), 6);
        assert!(mp_from_long_path(&d, 3).is_none());
    }

    #[test]
    fn sources_join_by_exchange() {
        let s = Multipacking::new(vec![1, 3]);
        let out = normalize_sources_into_mp(&p4(), &s).unwrap();
        assert!(out.contains(0));
        assert_eq!(out.size(), 2);
        assert!(verify_multipacking(&p4(), &out).is_valid());
    }

    #[test]
    fn source_already_in_is_fixed_point() {
        let s = Multipacking::new(vec![0, 2]);
        assert_eq!(normalize_sources_into_mp(&p4(), &s).unwrap(), s);
    }

    #[test]
    fn non_full_source_is_added() {
        // the source sees no member within any radius p, so it joins free
        let s = Multipacking::new(vec![3]);
        let out = normalize_sources_into_mp(&p4(), &s).unwrap();
        assert!(out.contains(0));
        assert_eq!(out.size(), 2);
    }

    #[test]
    fn source_full_at_distance_one_swaps() {
        // u -> {a, b}: u is full at distance 1 w.r.t. {a}, so a swaps out;
        // {u, a} itself would overfill the radius-1 ball at u
        let d = Digraph::new(3, &[(0, 1), (0, 2)]).unwrap();
        let s = Multipacking::new(vec![1]);
        let out = normalize_sources_into_mp(&d, &s).unwrap();
        assert_eq!(out.members(), &[0]);
        assert_eq!(brute_force_mp(&d, None).optimum, Some(1));
    }

    #[test]
    fn crowded_layer_is_spread_out() {
        // 0 -> {1,2}, 1 -> 3, 2 -> 4, {3,4} -> 5: the members 3 and 4 share
        // a layer but no in-neighbor, so the input is valid
        let d = Digraph::new(6, &[(0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 5)]).unwrap();
        let s = Multipacking::new(vec![3, 4]);
        assert!(verify_multipacking(&d, &s).is_valid());
        let out = normalize_one_per_layer(&d, &s).unwrap();
        assert_eq!(out.size(), 2);
        let layers = classify(&d).layer_partition.unwrap();
        let mut seen = vec![0; layers.t() + 1];
        for &m in out.members() {
            seen[layers.layer_of[m]] += 1;
        }
        assert!(seen.iter().all(|&c| c <= 1));
    }

    #[test]
    fn one_per_layer_fixed_points() {
        let diamond =
            Digraph::new(6, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5)]).unwrap();
        let s = Multipacking::new(vec![1, 4]);
        assert_eq!(normalize_one_per_layer(&diamond, &s).unwrap(), s);
        let single = Digraph::new(1, &[]).unwrap();
        let s1 = Multipacking::new(vec![0]);
        assert_eq!(normalize_one_per_layer(&single, &s1).unwrap(), s1);
    }
}
