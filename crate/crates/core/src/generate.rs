use crate::digraph::Digraph;
use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Test-instance families. All are deterministic for a fixed seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    /// Arcs only from lower to higher random topological rank.
    Dag,
    /// Random layer sizes, arcs only between consecutive layers.
    Layered,
    /// Layered with a single source and every non-source vertex wired to
    /// the previous layer, so `classify` recognizes it.
    SsLayered,
    /// Every generated undirected edge emitted as both arcs.
    Symmetric,
}

pub fn generate(kind: GraphKind, n: usize, arc_prob: f64, seed: u64) -> Result<Digraph> {
    if n == 0 {
        return Err(Error::InvalidParam("n must be at least 1".into()));
    }
    if !(0.0..=1.0).contains(&arc_prob) {
        return Err(Error::InvalidParam(format!(
            "arc probability {arc_prob} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let arcs = match kind {
        GraphKind::Dag => random_dag(n, arc_prob, &mut rng),
        GraphKind::Layered => random_layered(n, arc_prob, &mut rng, false),
        GraphKind::SsLayered => random_layered(n, arc_prob, &mut rng, true),
        GraphKind::Symmetric => random_symmetric(n, arc_prob, &mut rng),
    };
    Digraph::new(n, &arcs)
}

fn random_dag(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let rank = random_permutation(n, rng);
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(p) {
                arcs.push((rank[i], rank[j]));
            }
        }
    }
    arcs
}

fn random_layered(
    n: usize,
    p: f64,
    rng: &mut ChaCha8Rng,
    single_source: bool,
) -> Vec<(usize, usize)> {
    let layers = random_layer_split(n, rng, single_source);
    let mut arcs = Vec::new();
    for w in layers.windows(2) {
        let (prev, next) = (&w[0], &w[1]);
        for &v in next {
            let mut wired = false;
            for &u in prev {
                if rng.random_bool(p) {
                    arcs.push((u, v));
                    wired = true;
                }
            }
            if single_source && !wired {
                let u = prev[rng.random_range(0..prev.len())];
                arcs.push((u, v));
            }
        }
    }
    arcs
}

/// Splits `0..n` (in a shuffled order) into consecutive layers of random
/// positive sizes; the first layer is a singleton when `single_source`.
fn random_layer_split(n: usize, rng: &mut ChaCha8Rng, single_source: bool) -> Vec<Vec<usize>> {
    let ids = random_permutation(n, rng);
    let (head, rest) = if single_source {
        (Some(vec![ids[0]]), &ids[1..])
    } else {
        (None, &ids[..])
    };
    let mut layers: Vec<Vec<usize>> = head.into_iter().collect();
    if !rest.is_empty() {
        let parts = rng.random_range(1..=rest.len());
        let mut cuts = random_permutation(rest.len() - 1, rng);
        cuts.truncate(parts - 1);
        let mut bounds: Vec<usize> = cuts.iter().map(|c| c + 1).collect();
        bounds.push(0);
        bounds.push(rest.len());
        bounds.sort_unstable();
        for w in bounds.windows(2) {
            layers.push(rest[w[0]..w[1]].to_vec());
        }
    }
    layers
}

fn random_symmetric(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                arcs.push((u, v));
                arcs.push((v, u));
            }
        }
    }
    arcs
}

fn random_permutation(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        perm.swap(i, j);
    }
    perm
}
