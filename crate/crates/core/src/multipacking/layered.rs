use super::Multipacking;
use crate::classify::{classify, LayerPartition};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::outcome::{Algorithm, SolveOutcome};

/// Linear-time exact solver for single-sourced layered DAGs.
///
/// Bottom-up, each layer splits into universal vertices (out-neighborhoods
/// containing every active vertex of the next layer) and active ones; a
/// layer going all-universal resets the layer below it to fully active.
/// Top-down, one vertex is picked from every nonempty active set, avoiding
/// the previous pick's out-neighborhood; such a vertex exists because picks
/// are active. The picked set has at most one member per layer with
/// consecutive picks non-adjacent, which in a layered DAG is already a valid
/// multipacking (distances equal layer differences).
pub fn solve_mp_layered(d: &Digraph) -> Result<SolveOutcome<Multipacking>> {
    let report = classify(d);
    let layers = match (report.single_sourced, report.layer_partition) {
        (true, Some(lp)) => lp,
        _ => return Err(Error::NotSingleSourcedLayered),
    };
    let t = layers.t();

    // active[i] = None encodes "whole layer active" without cloning layers.
    let mut active: Vec<Option<Vec<usize>>> = vec![None; t + 1];
    let mut active_is_empty = vec![false; t + 1];
    for i in (0..t).rev() {
        if active_is_empty[i + 1] {
            // Reset rule: the layer below an all-universal layer is fully
            // active (no reset below layer 0).
            continue;
        }
        let next_active: &[usize] = match &active[i + 1] {
            None => &layers.layers[i + 1],
            Some(a) => a,
        };
        let acts: Vec<usize> = layers.layers[i]
            .iter()
            .copied()
            .filter(|&u| !next_active.iter().all(|&a| d.has_arc(u, a)))
            .collect();
        if acts.is_empty() {
            active_is_empty[i] = true;
        }
        active[i] = Some(acts);
    }

    let mut picks: Vec<usize> = Vec::new();
    let mut prev: Option<usize> = None;
    for i in 0..=t {
        let acts: &[usize] = match &active[i] {
            _ if active_is_empty[i] => &[],
            None => &layers.layers[i],
            Some(a) => a,
        };
        if acts.is_empty() {
            continue;
        }
        let pick = acts
            .iter()
            .copied()
            .find(|&v| prev.is_none_or(|p| !d.has_arc(p, v)))
            .ok_or_else(|| {
                Error::Internal("no non-adjacent active pick available".into())
            })?;
        picks.push(pick);
        prev = Some(pick);
    }

    let witness = Multipacking::new(picks);
    if !layered_packing_check(d, &layers, &witness) {
        return Err(Error::Internal("picked set fails the layered check".into()));
    }
    Ok(SolveOutcome {
        optimum: Some(witness.size()),
        witness: Some(witness),
        algorithm: Algorithm::MpLayered,
        nodes_explored: 0,
        decision: None,
    })
}

/// O(V+A) multipacking check for single-sourced layered DAGs, complete for
/// sets with at most one member per layer: within a layered DAG a radius-d
/// ball meets at most d+1 member layers and the first one must be the
/// center itself, so the only possible violation is two adjacent members on
/// consecutive layers.
pub fn verify_multipacking_layered(d: &Digraph, s: &Multipacking) -> Result<bool> {
    let report = classify(d);
    let layers = match (report.single_sourced, report.layer_partition) {
        (true, Some(lp)) => lp,
        _ => return Err(Error::NotSingleSourcedLayered),
    };
    Ok(layered_packing_check(d, &layers, s))
}

fn layered_packing_check(d: &Digraph, layers: &LayerPartition, s: &Multipacking) -> bool {
    let mut member_of_layer: Vec<Option<usize>> = vec![None; layers.t() + 1];
    for &m in s.members() {
        let l = layers.layer_of[m];
        if member_of_layer[l].is_some() {
            return false;
        }
        member_of_layer[l] = Some(m);
    }
    member_of_layer.windows(2).all(|w| match (w[0], w[1]) {
        (Some(a), Some(b)) => !d.has_arc(a, b),
        _ => true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipacking::{brute_force_mp, verify_multipacking};

    fn diamond() -> Digraph {
        Digraph::new(6, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5)]).unwrap()
    }

    #[test]
    fn diamond_packs_two_via_reset_rule() {
        let d = diamond();
        assert_eq!(brute_force_mp(&d, None).optimum, Some(2));
        let out = solve_mp_layered(&d).unwrap();
        assert_eq!(out.optimum, Some(2));
        let w = out.witness.unwrap();
        assert!(verify_multipacking(&d, &w).is_valid());
    }

    #[test]
    fn p4_packs_two() {
        let d = Digraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(brute_force_mp(&d, None).optimum, Some(2));
        let out = solve_mp_layered(&d).unwrap();
        assert_eq!(out.optimum, Some(2));
    }

    #[test]
    fn single_vertex_packs_one() {
        let d = Digraph::new(1, &[]).unwrap();
        assert_eq!(solve_mp_layered(&d).unwrap().optimum, Some(1));
    }

    #[test]
    fn rejects_non_layered() {
        let d = Digraph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(
            solve_mp_layered(&d).unwrap_err(),
            Error::NotSingleSourcedLayered
        );
    }
}
