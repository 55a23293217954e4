//! Enumerates sparse radius assignments of a fixed total cost.
//!
//! A candidate is a list of (vertex, radius) pairs with strictly ascending
//! vertices, radii between 1 and the per-vertex cap, and radii summing to
//! the target. Candidates come out in lexicographic order of the flattened
//! (vertex, radius) sequence, so "first hit" is well defined and identical
//! under sequential and batched-parallel scans.

pub(crate) struct CostFunctions {
    caps: Vec<u32>,
    suffix: Vec<u64>,
    target: u32,
    stack: Vec<(usize, u32)>,
    remaining: u32,
    state: State,
}

enum State {
    Fresh,
    Running,
    Done,
}

impl CostFunctions {
    pub fn new(caps: Vec<u32>, target: u32) -> Self {
        debug_assert!(caps.iter().all(|&c| c >= 1));
        let n = caps.len();
        let mut suffix = vec![0u64; n + 1];
        for v in (0..n).rev() {
            suffix[v] = suffix[v + 1] + caps[v] as u64;
        }
        CostFunctions {
            caps,
            suffix,
            target,
            stack: Vec::new(),
            remaining: target,
            state: State::Fresh,
        }
    }

    /// Smallest radius placeable at `v` that keeps the tail feasible.
    fn min_radius(&self, v: usize) -> u32 {
        let slack = self.suffix[v + 1];
        if (self.remaining as u64) > slack {
            (self.remaining as u64 - slack) as u32
        } else {
            1
        }
    }

    /// Greedily completes the assignment with minimal radii at consecutive
    /// vertices. Requires remaining <= suffix[from].
    fn extend(&mut self, mut from: usize) {
        while self.remaining > 0 {
            let val = self.min_radius(from).min(self.remaining);
            self.stack.push((from, val));
            self.remaining -= val;
            from += 1;
        }
    }

    fn advance(&mut self) -> bool {
        while let Some((v, val)) = self.stack.pop() {
            self.remaining += val;
            let bumped = (val + 1).max(self.min_radius(v));
            if bumped <= self.caps[v] && bumped <= self.remaining {
                self.stack.push((v, bumped));
                self.remaining -= bumped;
                self.extend(v + 1);
                return true;
            }
            for w in v + 1..self.caps.len() {
                let first = self.min_radius(w);
                if first <= self.caps[w] && first <= self.remaining {
                    self.stack.push((w, first));
                    self.remaining -= first;
                    self.extend(w + 1);
                    return true;
                }
            }
        }
        false
    }
}

impl Iterator for CostFunctions {
    type Item = Vec<(usize, u32)>;

    fn next(&mut self) -> Option<Self::Item> {
        match self.state {
            State::Done => None,
            State::Fresh => {
                self.state = State::Running;
                if self.target == 0 {
                    self.state = State::Done;
                    return Some(Vec::new());
                }
                if (self.target as u64) > self.suffix[0] {
                    self.state = State::Done;
                    return None;
                }
                self.extend(0);
                Some(self.stack.clone())
            }
            State::Running => {
                if self.advance() {
                    Some(self.stack.clone())
                } else {
                    self.state = State::Done;
                    None
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive(caps: &[u32], target: u32) -> Vec<Vec<(usize, u32)>> {
        fn rec(
            caps: &[u32],
            v: usize,
            remaining: u32,
            cur: &mut Vec<(usize, u32)>,
            out: &mut Vec<Vec<(usize, u32)>>,
        ) {
            if remaining == 0 {
                out.push(cur.clone());
                return;
            }
            if v == caps.len() {
                return;
            }
            for val in 1..=caps[v].min(remaining) {
                cur.push((v, val));
                rec(caps, v + 1, remaining - val, cur, out);
                cur.pop();
            }
            rec(caps, v + 1, remaining, cur, out);
        }
        let mut out = Vec::new();
        rec(caps, 0, target, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    #[test]
    fn matches_naive_enumeration() {
        for caps in [vec![3, 1, 2, 3], vec![1, 1, 1], vec![4], vec![2, 2, 2, 2, 2]] {
            for target in 1..=6 {
                let mut got: Vec<_> = CostFunctions::new(caps.clone(), target).collect();
                for cand in &got {
                    let sum: u32 = cand.iter().map(|&(_, r)| r).sum();
                    assert_eq!(sum, target);
                    assert!(cand.iter().all(|&(v, r)| r >= 1 && r <= caps[v]));
                }
                got.sort();
                got.dedup();
                assert_eq!(got, naive(&caps, target), "caps {caps:?} target {target}");
            }
        }
    }

    #[test]
    fn output_is_lexicographic() {
        let all: Vec<_> = CostFunctions::new(vec![2, 2, 2], 3).collect();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
    }

    #[test]
    fn infeasible_target_yields_nothing() {
        assert_eq!(CostFunctions::new(vec![1, 1], 3).count(), 0);
    }
}
