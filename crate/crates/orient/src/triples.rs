//! Length-3 subsequence profiles and exhaustive determinacy checks.
//!
//! The orientation of a sequence is *determined by its triples* when the
//! all-triples rule (cyclic iff every length-3 subsequence is cyclic,
//! anticyclic iff every one is anticyclic) predicts the sequence's actual
//! orientation. [`verify_triple_determinacy`] sweeps a bounded space and
//! splits the failures by rank: failures of rank other than 2 are
//! violations, rank-2 failures are the expected exceptional class.

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::seq::{OrientationCounts, OrientationSort, Seq};
use crate::sweep::{
    for_each_word_with_first, partitions, run_partitioned, word_count, Partition, SweepError,
    SweepOptions,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TripleError {
    #[error("no length-3 subsequences exist for a sequence of length {len}")]
    TooShort { len: usize },
}

/// All strictly-increasing-index subsequences of length `k`, paired with
/// their index tuples, in lexicographic index order. `k` larger than the
/// sequence length yields an empty list.
pub fn subsequences(s: &Seq, k: usize) -> Vec<(Vec<usize>, Seq)> {
    (0..s.len())
        .combinations(k)
        .map(|indices| {
            let sub: Seq = indices.iter().map(|&i| s.elements()[i]).collect();
            (indices, sub)
        })
        .collect()
}

/// The orientation of every length-3 subsequence, keyed by index triple.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OrientationProfile {
    entries: BTreeMap<[usize; 3], OrientationSort>,
}

impl OrientationProfile {
    pub fn entries(&self) -> &BTreeMap<[usize; 3], OrientationSort> {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, triple: [usize; 3]) -> Option<OrientationSort> {
        self.entries.get(&triple).copied()
    }

    /// The all-triples rule: cyclic when every entry admits cyclic,
    /// anticyclic when every entry admits anticyclic. `None` when there are
    /// no entries to consult.
    pub fn prediction(&self) -> Option<OrientationSort> {
        if self.entries.is_empty() {
            return None;
        }
        let cyclic = self.entries.values().all(|o| o.admits_cyclic());
        let anticyclic = self.entries.values().all(|o| o.admits_anticyclic());
        Some(OrientationSort::from_flags(cyclic, anticyclic))
    }
}

/// Classify every length-3 subsequence of `s`. Empty for sequences shorter
/// than 3.
pub fn triple_profile(s: &Seq) -> OrientationProfile {
    let mut entries = BTreeMap::new();
    for (indices, sub) in subsequences(s, 3) {
        let key = [indices[0], indices[1], indices[2]];
        entries.insert(key, sub.orientation());
    }
    OrientationProfile { entries }
}

/// Orientation predicted by the all-triples rule.
pub fn predicted_orientation(s: &Seq) -> Result<OrientationSort, TripleError> {
    triple_profile(s)
        .prediction()
        .ok_or(TripleError::TooShort { len: s.len() })
}

/// Whether the all-triples prediction matches the actual orientation.
pub fn is_determined_by_triples(s: &Seq) -> Result<bool, TripleError> {
    Ok(predicted_orientation(s)? == s.orientation())
}

/// Tally of a slice of the search space (one length, or one rank).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct GroupTally {
    pub checked: u64,
    pub flagged: u64,
}

impl GroupTally {
    fn record(&mut self, flagged: bool) {
        self.checked += 1;
        if flagged {
            self.flagged += 1;
        }
    }
}

/// Outcome of an exhaustive sweep.
///
/// For the determinacy sweep, `violations` are undetermined sequences of
/// rank other than 2 and `counterexamples` are undetermined rank-2
/// sequences. For the subsequence-closure sweep, `violations` are sequences
/// with a subsequence breaking increasing- or cyclic-closure, and
/// `counterexamples` stays empty. The per-length and per-rank tallies count
/// flagged sequences of either kind.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub max_length: usize,
    pub alphabet_size: u64,
    pub checked: u64,
    pub violations: Vec<Seq>,
    pub counterexamples: Vec<Seq>,
    pub census: OrientationCounts,
    pub by_length: BTreeMap<usize, GroupTally>,
    pub by_rank: BTreeMap<usize, GroupTally>,
}

impl VerificationReport {
    fn new(max_length: usize, alphabet_size: u64) -> Self {
        VerificationReport {
            max_length,
            alphabet_size,
            checked: 0,
            violations: Vec::new(),
            counterexamples: Vec::new(),
            census: OrientationCounts::default(),
            by_length: BTreeMap::new(),
            by_rank: BTreeMap::new(),
        }
    }

    fn absorb(&mut self, part: Partial) {
        self.checked += part.checked;
        self.violations.extend(part.violations);
        self.counterexamples.extend(part.counterexamples);
        self.census.merge(&part.census);
        for (k, v) in part.by_length {
            let slot = self.by_length.entry(k).or_default();
            slot.checked += v.checked;
            slot.flagged += v.flagged;
        }
        for (k, v) in part.by_rank {
            let slot = self.by_rank.entry(k).or_default();
            slot.checked += v.checked;
            slot.flagged += v.flagged;
        }
    }
}

#[derive(Default)]
struct Partial {
    checked: u64,
    violations: Vec<Seq>,
    counterexamples: Vec<Seq>,
    census: OrientationCounts,
    by_length: BTreeMap<usize, GroupTally>,
    by_rank: BTreeMap<usize, GroupTally>,
}

impl Partial {
    fn record(&mut self, s: &Seq, orientation: OrientationSort, flagged: bool) {
        self.checked += 1;
        self.census.record(orientation);
        self.by_length.entry(s.len()).or_default().record(flagged);
        self.by_rank.entry(s.rank()).or_default().record(flagged);
    }
}

fn merge(max_length: usize, alphabet_size: u64, parts: Vec<Partial>) -> VerificationReport {
    let mut report = VerificationReport::new(max_length, alphabet_size);
    for part in parts {
        report.absorb(part);
    }
    report
}

/// Exhaustively test the all-triples rule on every sequence of length 3
/// through `max_length` over `{0, …, alphabet_size-1}`. Undetermined
/// sequences land in `violations` (rank != 2) or `counterexamples`
/// (rank 2).
pub fn verify_triple_determinacy(
    max_length: usize,
    alphabet_size: u64,
    options: SweepOptions,
) -> Result<VerificationReport, SweepError> {
    if max_length < 3 {
        return Err(SweepError::InvalidBounds(format!(
            "max_length must be at least 3, got {max_length}"
        )));
    }
    if alphabet_size < 1 {
        return Err(SweepError::InvalidBounds(
            "alphabet_size must be at least 1".into(),
        ));
    }
    options.check_budget(word_count(3..=max_length, alphabet_size))?;

    let parts = partitions(3..=max_length, alphabet_size);
    let partials = run_partitioned(&parts, options.jobs, |p: Partition| {
        let mut partial = Partial::default();
        for_each_word_with_first(p.length, alphabet_size, p.first, |word| {
            let s = Seq::from(word);
            let determined = is_determined_by_triples(&s).expect("length is at least 3");
            partial.record(&s, s.orientation(), !determined);
            if !determined {
                if s.rank() == 2 {
                    partial.counterexamples.push(s);
                } else {
                    partial.violations.push(s);
                }
            }
        });
        partial
    });
    Ok(merge(max_length, alphabet_size, partials))
}

/// All sequences of exactly `length` over the alphabet whose rank is 2 and
/// whose orientation the all-triples rule fails to predict, in
/// lexicographic order.
pub fn find_rank2_counterexamples(
    length: usize,
    alphabet_size: u64,
    options: SweepOptions,
) -> Result<Vec<Seq>, SweepError> {
    if length < 3 {
        return Err(SweepError::InvalidBounds(format!(
            "length must be at least 3, got {length}"
        )));
    }
    if alphabet_size < 1 {
        return Err(SweepError::InvalidBounds(
            "alphabet_size must be at least 1".into(),
        ));
    }
    options.check_budget(word_count(std::iter::once(length), alphabet_size))?;

    let parts = partitions(length..=length, alphabet_size);
    let found = run_partitioned(&parts, options.jobs, |p: Partition| {
        let mut hits = Vec::new();
        for_each_word_with_first(p.length, alphabet_size, p.first, |word| {
            let s = Seq::from(word);
            if s.rank() == 2 && !is_determined_by_triples(&s).expect("length is at least 3") {
                hits.push(s);
            }
        });
        hits
    });
    Ok(found.into_iter().flatten().collect())
}

/// Exhaustively confirm that subsequences inherit the increasing and cyclic
/// properties, over every sequence of length 1 through `max_length`. A
/// sequence is a violation when some subsequence of it breaks either
/// implication.
pub fn check_subsequence_closure(
    max_length: usize,
    alphabet_size: u64,
    options: SweepOptions,
) -> Result<VerificationReport, SweepError> {
    if max_length < 1 {
        return Err(SweepError::InvalidBounds(format!(
            "max_length must be at least 1, got {max_length}"
        )));
    }
    if alphabet_size < 1 {
        return Err(SweepError::InvalidBounds(
            "alphabet_size must be at least 1".into(),
        ));
    }
    options.check_budget(word_count(1..=max_length, alphabet_size))?;

    let parts = partitions(1..=max_length, alphabet_size);
    let partials = run_partitioned(&parts, options.jobs, |p: Partition| {
        let mut partial = Partial::default();
        for_each_word_with_first(p.length, alphabet_size, p.first, |word| {
            let s = Seq::from(word);
            let violated = breaks_subsequence_closure(&s);
            partial.record(&s, s.orientation(), violated);
            if violated {
                partial.violations.push(s);
            }
        });
        partial
    });
    Ok(merge(max_length, alphabet_size, partials))
}

fn breaks_subsequence_closure(s: &Seq) -> bool {
    let increasing = s.is_increasing();
    let cyclic = s.is_cyclic();
    if !increasing && !cyclic {
        return false;
    }
    for k in 0..=s.len() {
        for (_, sub) in subsequences(s, k) {
            if increasing && !sub.is_increasing() {
                return true;
            }
            if cyclic && !sub.is_cyclic() {
                return true;
            }
        }
    }
    false
}
