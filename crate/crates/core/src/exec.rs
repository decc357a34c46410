//! Parallel/sequential execution of the sampling loops.
//!
//! Every hot loop in the crate is an index sweep reduced to a violation
//! count plus a running maximum defect. With the `parallel` feature (on by
//! default) the sweep runs on rayon; without it, sequentially. The `_seq`
//! variants are always available so benchmarks can compare both paths on
//! the same closure.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Outcome of one sweep: how many samples failed, and the largest defect seen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepStats {
    pub violations: usize,
    pub max_defect: f64,
}

impl SweepStats {
    fn merge(self, other: SweepStats) -> SweepStats {
        SweepStats {
            violations: self.violations + other.violations,
            max_defect: self.max_defect.max(other.max_defect),
        }
    }

    fn empty() -> SweepStats {
        SweepStats { violations: 0, max_defect: f64::NEG_INFINITY }
    }

    fn of(defect: f64) -> SweepStats {
        // NaN counts as a violation; only a strictly negative defect passes.
        SweepStats { violations: usize::from(!(defect < 0.0)), max_defect: defect }
    }
}

/// Sweep `0..n`, where `defect(i) < 0` means sample `i` passed.
///
/// Counting and max-reduction are order-independent, so the parallel and
/// sequential paths return identical results.
pub fn sweep<F>(n: usize, defect: F) -> SweepStats
where
    F: Fn(usize) -> f64 + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n)
            .into_par_iter()
            .fold(SweepStats::empty, |acc, i| acc.merge(SweepStats::of(defect(i))))
            .reduce(SweepStats::empty, SweepStats::merge)
    }
    #[cfg(not(feature = "parallel"))]
    {
        sweep_seq(n, defect)
    }
}

/// Sequential version of [`sweep`].
pub fn sweep_seq<F>(n: usize, defect: F) -> SweepStats
where
    F: Fn(usize) -> f64,
{
    (0..n).fold(SweepStats::empty(), |acc, i| acc.merge(SweepStats::of(defect(i))))
}

/// Map `0..n` through `f` and merge the results associatively.
///
/// `merge` must be associative and order-insensitive for the outcome to be
/// deterministic under the parallel path; `None` only for `n = 0`.
pub fn map_merge<T, F, M>(n: usize, f: F, merge: M) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).reduce_with(merge)
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_merge_seq(n, f, merge)
    }
}

/// Sequential version of [`map_merge`].
pub fn map_merge_seq<T, F, M>(n: usize, f: F, merge: M) -> Option<T>
where
    F: Fn(usize) -> T,
    M: Fn(T, T) -> T,
{
    (0..n).map(f).reduce(merge)
}

/// Sum `count(i)` over `0..n` (violation tallies per work item).
pub fn sum_counts<F>(n: usize, count: F) -> usize
where
    F: Fn(usize) -> usize + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(count).sum()
    }
    #[cfg(not(feature = "parallel"))]
    {
        sum_counts_seq(n, count)
    }
}

/// Sequential version of [`sum_counts`].
pub fn sum_counts_seq<F>(n: usize, count: F) -> usize
where
    F: Fn(usize) -> usize,
{
    (0..n).map(count).sum()
}
