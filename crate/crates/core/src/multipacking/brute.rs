use super::{verify_multipacking_with_oracle, Multipacking};
use crate::digraph::Digraph;
use crate::dist::{DistanceOracle, INFINITE};
use crate::exec::{map_indexed, Parallelism};
use crate::outcome::{Algorithm, SolveOutcome};

/// Ground-truth oracle: depth-first subset extension in lexicographic
/// order. Validity is hereditary downwards, so any set failing the ball
/// constraint prunes its whole subtree. The first maximum-size set in
/// enumeration order — the lexicographically least one — is the witness.
///
/// With `floor` set the outcome also records the decision "size >= floor";
/// the search itself is not cut short, which keeps node counts identical
/// across execution modes. Intended for small instances.
pub fn brute_force_mp(d: &Digraph, floor: Option<u32>) -> SolveOutcome<Multipacking> {
    brute_force_mp_with(d, floor, Parallelism::default())
}

pub fn brute_force_mp_with(
    d: &Digraph,
    floor: Option<u32>,
    mode: Parallelism,
) -> SolveOutcome<Multipacking> {
    let n = d.vertex_count();
    let oracle = DistanceOracle::new_with(d, mode);

    // Each root explores the subtree of sets whose smallest member is the
    // root; roots are independent, so they parallelize cleanly.
    let results: Vec<(u32, Vec<usize>, u64)> = map_indexed(mode, n, |root| {
        let mut state = PackState::new(&oracle, n);
        let mut best: (u32, Vec<usize>) = (0, Vec::new());
        let mut nodes = 0u64;
        extend(&mut state, root, &mut best, &mut nodes);
        (best.0, best.1, nodes)
    });

    let mut best: (u32, Vec<usize>) = (0, Vec::new());
    let mut nodes = 0u64;
    for (size, members, count) in results {
        nodes += count;
        if size > best.0 {
            best = (size, members);
        }
    }
    let witness = Multipacking::new(best.1);
    debug_assert!(verify_multipacking_with_oracle(&oracle, n, &witness).is_valid());
    SolveOutcome {
        optimum: Some(best.0),
        decision: floor.map(|f| best.0 >= f),
        witness: Some(witness),
        algorithm: Algorithm::MpBrute,
        nodes_explored: nodes,
    }
}

/// Tries to grow the current set by `u`, then by every later vertex.
fn extend(state: &mut PackState, u: usize, best: &mut (u32, Vec<usize>), nodes: &mut u64) {
    *nodes += 1;
    if !state.can_add(u) {
        return;
    }
    state.add(u);
    if state.members.len() as u32 > best.0 {
        *best = (state.members.len() as u32, state.members.clone());
    }
    for next in u + 1..state.n {
        extend(state, next, best, nodes);
    }
    state.remove(u);
}

/// Incremental ball bookkeeping. `cnt[v][r]` is the number of members within
/// distance r of v; `tight[v]` is the largest radius r >= 1 with
/// cnt[v][r] == r (0 when none). Adding a member at distance delta from v
/// creates a violation exactly when some tight radius >= max(delta, 1)
/// exists, i.e. when tight[v] >= max(delta, 1).
struct PackState<'a> {
    oracle: &'a DistanceOracle,
    n: usize,
    cnt: Vec<Vec<u32>>,
    tight: Vec<u32>,
    members: Vec<usize>,
}

impl<'a> PackState<'a> {
    fn new(oracle: &'a DistanceOracle, n: usize) -> Self {
        PackState {
            oracle,
            n,
            cnt: vec![vec![0; n + 1]; n],
            tight: vec![0; n],
            members: Vec::new(),
        }
    }

    fn can_add(&self, u: usize) -> bool {
        (0..self.n).all(|v| {
            let delta = self.oracle.dist(v, u);
            delta == INFINITE || self.tight[v] < delta.max(1)
        })
    }

    fn add(&mut self, u: usize) {
        self.members.push(u);
        self.update(u, 1);
    }

    fn remove(&mut self, u: usize) {
        debug_assert_eq!(self.members.last(), Some(&u));
        self.members.pop();
        self.update(u, -1);
    }

    fn update(&mut self, u: usize, sign: i32) {
        for v in 0..self.n {
            let delta = self.oracle.dist(v, u);
            if delta == INFINITE {
                continue;
            }
            let cnt = &mut self.cnt[v];
            for c in cnt[delta as usize..].iter_mut() {
                *c = (*c as i32 + sign) as u32;
            }
            self.tight[v] = (1..=self.n as u32)
                .rev()
                .find(|&r| cnt[r as usize] == r)
                .unwrap_or(0);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipacking::verify_multipacking;

    fn p4() -> Digraph {
        Digraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    fn c3() -> Digraph {
        Digraph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn naive_mp(d: &Digraph) -> u32 {
        let n = d.vertex_count();
        (0u32..1 << n)
            .filter(|mask| {
                let s = Multipacking::new((0..n).filter(|&v| mask >> v & 1 == 1).collect());
                verify_multipacking(d, &s).is_valid()
            })
            .map(|mask| mask.count_ones())
            .max()
            .unwrap()
    }

    #[test]
    fn single_vertex() {
        let d = Digraph::new(1, &[]).unwrap();
        let out = brute_force_mp(&d, None);
        assert_eq!(out.optimum, Some(1));
        assert_eq!(out.witness.unwrap().members(), &[0]);
    }

    #[test]
    fn p4_packs_two() {
        let out = brute_force_mp(&p4(), None);
        assert_eq!(out.optimum, Some(2));
        assert_eq!(out.witness.unwrap().members(), &[0, 2]);
        assert_eq!(naive_mp(&p4()), 2);
    }

    #[test]
    fn three_cycle_packs_one() {
        let out = brute_force_mp(&c3(), None);
        assert_eq!(out.optimum, Some(1));
        assert_eq!(naive_mp(&c3()), 1);
    }

    #[test]
    fn dfs_matches_naive_on_mixed_graphs() {
        let samples = [
            Digraph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap(),
            Digraph::new(6, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5)]).unwrap(),
            Digraph::new(4, &[(0, 1), (1, 0), (2, 3)]).unwrap(),
        ];
        for d in samples {
            assert_eq!(brute_force_mp(&d, None).optimum, Some(naive_mp(&d)));
        }
    }

    #[test]
    fn floor_decision() {
        assert_eq!(brute_force_mp(&c3(), Some(2)).decision, Some(false));
        assert_eq!(brute_force_mp(&p4(), Some(2)).decision, Some(true));
    }

    #[test]
    fn modes_agree() {
        let d = Digraph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 3)]).unwrap();
        let a = brute_force_mp_with(&d, None, Parallelism::Sequential);
        let b = brute_force_mp_with(&d, None, Parallelism::Rayon);
        assert_eq!(a.optimum, b.optimum);
        assert_eq!(a.witness.unwrap(), b.witness.unwrap());
        assert_eq!(a.nodes_explored, b.nodes_explored);
    }
}
