use super::{ColoredGraph, UndirectedGraph, X3CInstance};
use crate::error::{Error, Result};
use crate::multipacking::HittingSetInstance;
use itertools::Itertools;

const SOURCE_LIMIT: usize = 20;

/// A source-problem instance together with its decision target, decided by
/// exhaustive enumeration. Ground truth for certifying the reductions.
#[derive(Debug, Clone)]
pub enum SourceInstance {
    /// Exact cover by 3-sets; the target k = |X|/3 is implied.
    X3c(X3CInstance),
    /// Hitting set of size at most the instance budget.
    HittingSet(HittingSetInstance),
    /// Independent set of size at least k.
    IndependentSet(UndirectedGraph, u32),
    /// Independent set with exactly one vertex per color class.
    MulticoloredIndependentSet(ColoredGraph),
    /// Dominating set with exactly one vertex per color class.
    MulticoloredDominatingSet(ColoredGraph),
}

impl SourceInstance {
    pub fn decide(&self) -> Result<bool> {
        match self {
            SourceInstance::X3c(inst) => {
                guard(inst.triples.len())?;
                let k = inst.k();
                Ok(inst.triples.iter().combinations(k).any(|chosen| {
                    let mut hit = vec![false; inst.ground_size];
                    for t in &chosen {
                        for &x in t.iter() {
                            if hit[x] {
                                return false;
                            }
                            hit[x] = true;
                        }
                    }
                    hit.into_iter().all(|h| h)
                }))
            }
            SourceInstance::HittingSet(inst) => {
                guard(inst.universe_size)?;
                let k = inst
                    .k
                    .ok_or_else(|| Error::InvalidInstance("budget k is required".into()))?
                    as usize;
                let k = k.min(inst.universe_size);
                Ok((0..=k).any(|size| {
                    (0..inst.universe_size).combinations(size).any(|chosen| {
                        inst.sets
                            .iter()
                            .all(|set| set.iter().any(|e| chosen.contains(e)))
                    })
                }))
            }
            SourceInstance::IndependentSet(graph, k) => {
                guard(graph.n)?;
                let k = *k as usize;
                if k == 0 {
                    return Ok(true);
                }
                if k > graph.n {
                    return Ok(false);
                }
                Ok((0..graph.n)
                    .combinations(k)
                    .any(|chosen| is_independent(graph, &chosen)))
            }
            SourceInstance::MulticoloredIndependentSet(colored) => {
                guard(colored.graph.n)?;
                Ok(multicolored_choices(colored)
                    .any(|chosen| is_independent(&colored.graph, &chosen)))
            }
            SourceInstance::MulticoloredDominatingSet(colored) => {
                guard(colored.graph.n)?;
                Ok(multicolored_choices(colored).any(|chosen| {
                    (0..colored.graph.n).all(|v| {
                        chosen
                            .iter()
                            .any(|&s| s == v || colored.graph.has_edge(s, v))
                    })
                }))
            }
        }
    }
}

fn guard(n: usize) -> Result<()> {
    if n > SOURCE_LIMIT {
        return Err(Error::InstanceTooLarge {
            n,
            limit: SOURCE_LIMIT,
        });
    }
    Ok(())
}

fn is_independent(graph: &UndirectedGraph, chosen: &[usize]) -> bool {
    chosen.iter().enumerate().all(|(i, &a)| {
        chosen[i + 1..].iter().all(|&b| !graph.has_edge(a, b))
    })
}

fn multicolored_choices(colored: &ColoredGraph) -> impl Iterator<Item = Vec<usize>> + '_ {
    (0..colored.k)
        .map(|i| colored.class(i))
        .multi_cartesian_product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x3c_single_triple_yes() {
        let inst = X3CInstance::new(3, vec![[0, 1, 2]]).unwrap();
        assert!(SourceInstance::X3c(inst).decide().unwrap());
    }

    #[test]
    fn is_on_triangle() {
        let k3 = UndirectedGraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!SourceInstance::IndependentSet(k3.clone(), 2)
            .decide()
            .unwrap());
        assert!(SourceInstance::IndependentSet(k3, 1).decide().unwrap());
    }

    #[test]
    fn hs_disjoint_singletons() {
        let h = HittingSetInstance::new(2, vec![vec![0], vec![1]], Some(1)).unwrap();
        assert!(!SourceInstance::HittingSet(h).decide().unwrap());
        let h2 = HittingSetInstance::new(2, vec![vec![0], vec![1]], Some(2)).unwrap();
        assert!(SourceInstance::HittingSet(h2).decide().unwrap());
    }

    #[test]
    fn multicolored_variants() {
        let g = UndirectedGraph::new(3, vec![(0, 1)]).unwrap();
        let colored = ColoredGraph::new(g, vec![0, 1, 0]).unwrap();
        assert!(SourceInstance::MulticoloredIndependentSet(colored.clone())
            .decide()
            .unwrap());
        assert!(SourceInstance::MulticoloredDominatingSet(colored)
            .decide()
            .unwrap());
    }
}
