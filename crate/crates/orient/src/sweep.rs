//! Deterministic execution of exhaustive sweeps.
//!
//! Search spaces are split into partitions keyed by (word length, first
//! element); each partition is enumerated in lexicographic order and the
//! partial results are merged back in partition order, so the outcome is
//! byte-identical whatever the number of worker threads.

use rayon::prelude::*;
use thiserror::Error;

/// Default cap on the number of objects an exhaustive sweep may visit.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SweepError {
    #[error("invalid bounds: {0}")]
    InvalidBounds(String),
    #[error("search space of {required} objects exceeds the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
}

/// Knobs common to all exhaustive sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    /// Upper bound on objects enumerated; exceeding it is an error, never a
    /// silent truncation.
    pub budget: u64,
    /// Worker threads. 1 runs in-place on the calling thread.
    pub jobs: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            budget: DEFAULT_BUDGET,
            jobs: 1,
        }
    }
}

impl SweepOptions {
    pub fn with_budget(budget: u64) -> Self {
        SweepOptions {
            budget,
            ..SweepOptions::default()
        }
    }

    /// Error out unless the space fits the budget.
    pub fn check_budget(&self, required: u128) -> Result<(), SweepError> {
        if required > self.budget as u128 {
            return Err(SweepError::BudgetExceeded {
                required,
                budget: self.budget,
            });
        }
        Ok(())
    }
}

/// Number of words of the given lengths over an alphabet, saturating at
/// `u128::MAX`.
pub fn word_count(lengths: impl Iterator<Item = usize>, alphabet: u64) -> u128 {
    let mut total: u128 = 0;
    for len in lengths {
        let mut block: u128 = 1;
        for _ in 0..len {
            block = block.saturating_mul(alphabet as u128);
        }
        total = total.saturating_add(block);
    }
    total
}

/// One unit of work: all words of `length` beginning with `first`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Partition {
    pub length: usize,
    pub first: u64,
}

/// Partitions for every length in the range, ordered by (length, first), so
/// concatenating per-partition results in this order yields the global
/// lexicographic order over (length, word).
pub fn partitions(lengths: impl Iterator<Item = usize>, alphabet: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    for length in lengths {
        for first in 0..alphabet {
            out.push(Partition { length, first });
        }
    }
    out
}

/// Map a worker over the partitions, preserving partition order in the
/// output regardless of `jobs`.
pub fn run_partitioned<R, F>(parts: &[Partition], jobs: usize, worker: F) -> Vec<R>
where
    R: Send,
    F: Fn(Partition) -> R + Sync,
{
    if jobs <= 1 {
        return parts.iter().map(|&p| worker(p)).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("worker pool");
    pool.install(|| parts.par_iter().map(|&p| worker(p)).collect())
}

/// Visit every word of `length >= 1` over `{0, …, alphabet-1}` whose first
/// element is `first`, in lexicographic order.
pub fn for_each_word_with_first(
    length: usize,
    alphabet: u64,
    first: u64,
    mut visit: impl FnMut(&[u64]),
) {
    debug_assert!(length >= 1);
    debug_assert!(first < alphabet);
    let mut buf = vec![0u64; length];
    buf[0] = first;
    loop {
        visit(&buf);
        let mut i = length;
        loop {
            if i <= 1 {
                return; // the first element stays fixed
            }
            i -= 1;
            buf[i] += 1;
            if buf[i] < alphabet {
                break;
            }
            buf[i] = 0;
        }
    }
}
