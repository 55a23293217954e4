//! Execution-mode plumbing for the enumeration-heavy solvers.
//!
//! The parallel paths use rayon's order-respecting reductions
//! (`position_first`, per-root folds), so witnesses and node counts are
//! identical to the sequential ones.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How an oracle or distance computation spreads its work. `Rayon` falls
/// back to sequential execution when the `parallel` feature is disabled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parallelism {
    Sequential,
    Rayon,
}

impl Default for Parallelism {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Parallelism::Rayon
        } else {
            Parallelism::Sequential
        }
    }
}

pub(crate) const CHUNK: usize = 4096;

/// Scans `items` for the first element matching `pred`, batching the
/// predicate across workers in `Rayon` mode. Adds the number of examined
/// candidates (everything up to and including the hit, or the whole stream)
/// to `examined`; the total is the same in both modes.
pub(crate) fn find_first<T, I, F>(
    mode: Parallelism,
    items: I,
    pred: F,
    examined: &mut u64,
) -> Option<T>
where
    T: Send + Sync,
    I: Iterator<Item = T>,
    F: Fn(&T) -> bool + Sync + Send,
{
    match mode {
        Parallelism::Sequential => {
            for item in items {
                *examined += 1;
                if pred(&item) {
                    return Some(item);
                }
            }
            None
        }
        Parallelism::Rayon => find_first_parallel(items, pred, examined),
    }
}

#[cfg(feature = "parallel")]
fn find_first_parallel<T, I, F>(mut items: I, pred: F, examined: &mut u64) -> Option<T>
where
    T: Send + Sync,
    I: Iterator<Item = T>,
    F: Fn(&T) -> bool + Sync + Send,
{
    loop {
        let batch: Vec<T> = items.by_ref().take(CHUNK).collect();
        if batch.is_empty() {
            return None;
        }
        if let Some(i) = batch.par_iter().position_first(&pred) {
            *examined += (i + 1) as u64;
            return batch.into_iter().nth(i);
        }
        *examined += batch.len() as u64;
    }
}

#[cfg(not(feature = "parallel"))]
fn find_first_parallel<T, I, F>(items: I, pred: F, examined: &mut u64) -> Option<T>
where
    T: Send + Sync,
    I: Iterator<Item = T>,
    F: Fn(&T) -> bool + Sync + Send,
{
    find_first(Parallelism::Sequential, items, pred, examined)
}

/// Maps `f` over `0..n` and collects the results in index order.
pub(crate) fn map_indexed<T, F>(mode: Parallelism, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match mode {
        Parallelism::Sequential => (0..n).map(f).collect(),
        #[cfg(feature = "parallel")]
        Parallelism::Rayon => (0..n).into_par_iter().map(f).collect(),
        #[cfg(not(feature = "parallel"))]
        Parallelism::Rayon => (0..n).map(f).collect(),
    }
}
