use super::brute::search;
use super::BroadcastFunction;
use crate::digraph::Digraph;
use crate::dist::{DistanceOracle, INFINITE};
use crate::error::{Error, Result};
use crate::exec::Parallelism;
use crate::outcome::{Algorithm, SolveOutcome};

/// Exact solver for strongly connected digraphs. A single vertex with
/// radius equal to the diameter d covers everything, so the optimum is at
/// most d and the cost-level search is cut there.
pub fn solve_bd_diameter(d: &Digraph, k: Option<u32>) -> Result<SolveOutcome<BroadcastFunction>> {
    let n = d.vertex_count();
    let oracle = DistanceOracle::new(d);
    if n > 0 && oracle.diameter() == INFINITE {
        return Err(Error::NotStronglyConnected);
    }
    if n <= 1 {
        // Diameter 0 degenerates: the lone vertex still needs radius 1.
        let optimum = n as u32;
        return Ok(SolveOutcome {
            optimum: Some(optimum),
            witness: Some(BroadcastFunction::from_values(vec![1; n])),
            algorithm: Algorithm::BdDiameter,
            nodes_explored: 0,
            decision: k.map(|k| optimum <= k),
        });
    }
    let mut out = search(
        d,
        &oracle,
        Some(oracle.diameter()),
        Parallelism::default(),
        Algorithm::BdDiameter,
    );
    let optimum = out.optimum.expect("cost <= diameter always exists");
    out.decision = k.map(|k| optimum <= k);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::broadcast::brute_force_bd;
    use crate::broadcast::fixtures::*;

    #[test]
    fn three_cycle_optimum_two() {
        assert_eq!(brute_force_bd(&c3(), None).optimum, Some(2));
        assert_eq!(solve_bd_diameter(&c3(), None).unwrap().optimum, Some(2));
    }

    #[test]
    fn bidirected_triangle_optimum_one() {
        let d = Digraph::new(3, &[(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)]).unwrap();
        assert_eq!(brute_force_bd(&d, None).optimum, Some(1));
        assert_eq!(solve_bd_diameter(&d, None).unwrap().optimum, Some(1));
    }

    #[test]
    fn single_vertex_special_case() {
        let d = Digraph::new(1, &[]).unwrap();
        let out = solve_bd_diameter(&d, Some(1)).unwrap();
        assert_eq!(out.optimum, Some(1));
        assert_eq!(out.decision, Some(true));
    }

    #[test]
    fn rejects_paths() {
        assert_eq!(
            solve_bd_diameter(&p4(), None).unwrap_err(),
            Error::NotStronglyConnected
        );
    }
}
