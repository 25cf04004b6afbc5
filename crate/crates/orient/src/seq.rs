//! Finite sequences of naturals and their orientation classification.
//!
//! A sequence is *cyclic* when at most one adjacent pair descends, with the
//! pair (last, first) counted as adjacent; *anticyclic* when its reverse is
//! cyclic. The classifier here works by structural recursion, peeling one
//! element at a time from the left: [`Seq::augment`] turns the wraparound
//! pair into an ordinary adjacent pair, and [`Seq::has_at_most_one_descent`]
//! scans the result. Two independent routes to the same answer,
//! [`Seq::is_cyclic_by_count`] and [`Seq::is_cyclic_by_rotation`], exist so
//! the three definitions can be tested against each other.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// The four-way orientation classification of a sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrientationSort {
    None,
    Cyclic,
    Anticyclic,
    Both,
}

impl OrientationSort {
    /// Combine the answers of the two cyclicity checks into one sort.
    pub fn from_flags(cyclic: bool, anticyclic: bool) -> Self {
        if cyclic {
            if anticyclic {
                OrientationSort::Both
            } else {
                OrientationSort::Cyclic
            }
        } else if anticyclic {
            OrientationSort::Anticyclic
        } else {
            OrientationSort::None
        }
    }

    /// True when this sort is compatible with a cyclic classification.
    pub fn admits_cyclic(self) -> bool {
        matches!(self, OrientationSort::Cyclic | OrientationSort::Both)
    }

    /// True when this sort is compatible with an anticyclic classification.
    pub fn admits_anticyclic(self) -> bool {
        matches!(self, OrientationSort::Anticyclic | OrientationSort::Both)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            OrientationSort::None => "none",
            OrientationSort::Cyclic => "cyclic",
            OrientationSort::Anticyclic => "anticyclic",
            OrientationSort::Both => "both",
        }
    }
}

impl fmt::Display for OrientationSort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Per-sort tallies from a sweep or census.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientationCounts {
    pub none: u64,
    pub cyclic: u64,
    pub anticyclic: u64,
    pub both: u64,
}

impl OrientationCounts {
    pub fn record(&mut self, sort: OrientationSort) {
        match sort {
            OrientationSort::None => self.none += 1,
            OrientationSort::Cyclic => self.cyclic += 1,
            OrientationSort::Anticyclic => self.anticyclic += 1,
            OrientationSort::Both => self.both += 1,
        }
    }

    pub fn total(&self) -> u64 {
        self.none + self.cyclic + self.anticyclic + self.both
    }

    pub fn merge(&mut self, other: &OrientationCounts) {
        self.none += other.none;
        self.cyclic += other.cyclic;
        self.anticyclic += other.anticyclic;
        self.both += other.both;
    }

    pub fn get(&self, sort: OrientationSort) -> u64 {
        match sort {
            OrientationSort::None => self.none,
            OrientationSort::Cyclic => self.cyclic,
            OrientationSort::Anticyclic => self.anticyclic,
            OrientationSort::Both => self.both,
        }
    }
}

/// A finite sequence of natural numbers.
///
/// ```
/// use orient::{OrientationSort, Seq};
///
/// let s = Seq::from(vec![0, 1, 0, 1]);
/// assert_eq!(s.orientation(), OrientationSort::None);
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Seq(Vec<u64>);

impl Seq {
    pub fn new(elements: Vec<u64>) -> Self {
        Seq(elements)
    }

    pub fn empty() -> Self {
        Seq(Vec::new())
    }

    pub fn elements(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Weak monotonicity, by recursion on the head of the list: the empty
    /// sequence and singletons are increasing, and `(a, b, rest)` is
    /// increasing when `a <= b` and `(b, rest)` is.
    pub fn is_increasing(&self) -> bool {
        increasing(&self.0)
    }

    /// Prepend the final element, so the wraparound pair (last, first)
    /// becomes an ordinary adjacent pair. Empty and singleton sequences are
    /// returned unchanged; otherwise the output is one element longer.
    pub fn augment(&self) -> Seq {
        match self.0.as_slice() {
            [] => Seq::empty(),
            [a, rest @ ..] => match rest.last() {
                Some(&last) => {
                    let mut out = Vec::with_capacity(self.0.len() + 1);
                    out.push(last);
                    out.extend_from_slice(&self.0);
                    Seq(out)
                }
                None => Seq(vec![*a]),
            },
        }
    }

    /// At most one adjacent descent, ignoring the wraparound pair. Recursion
    /// peels from the left: while elements ascend keep scanning; at the
    /// first descent, the remainder must be increasing outright.
    pub fn has_at_most_one_descent(&self) -> bool {
        at_most_one_descent(&self.0)
    }

    /// A sequence is cyclic when its augmentation has at most one descent.
    pub fn is_cyclic(&self) -> bool {
        self.augment().has_at_most_one_descent()
    }

    /// A sequence is anticyclic when its reverse is cyclic.
    pub fn is_anticyclic(&self) -> bool {
        self.reversed().is_cyclic()
    }

    /// Four-way classification from the two recursive checks.
    pub fn orientation(&self) -> OrientationSort {
        if self.is_cyclic() {
            if self.is_anticyclic() {
                OrientationSort::Both
            } else {
                OrientationSort::Cyclic
            }
        } else if self.is_anticyclic() {
            OrientationSort::Anticyclic
        } else {
            OrientationSort::None
        }
    }

    /// Number of positions `i` with `a_i > a_{i+1}`, indices cyclic (the
    /// successor of the last element is the first).
    pub fn cyclic_descent_count(&self) -> usize {
        let t = self.0.len();
        (0..t).filter(|&i| self.0[i] > self.0[(i + 1) % t]).count()
    }

    /// Number of positions `i` with `a_i < a_{i+1}`, indices cyclic.
    pub fn cyclic_ascent_count(&self) -> usize {
        let t = self.0.len();
        (0..t).filter(|&i| self.0[i] < self.0[(i + 1) % t]).count()
    }

    /// First oracle: cyclic iff at most one cyclic descent.
    pub fn is_cyclic_by_count(&self) -> bool {
        self.cyclic_descent_count() <= 1
    }

    /// Descent-count dual: anticyclic iff at most one cyclic ascent.
    pub fn is_anticyclic_by_count(&self) -> bool {
        self.cyclic_ascent_count() <= 1
    }

    /// Second oracle: cyclic iff some rotation is weakly increasing. The
    /// monotonicity test here is a windows scan, not the recursive
    /// [`Seq::is_increasing`], so the route shares nothing with the
    /// implementation it cross-checks.
    pub fn is_cyclic_by_rotation(&self) -> bool {
        let t = self.0.len();
        if t == 0 {
            return true;
        }
        (0..t).any(|r| (0..t - 1).all(|i| self.0[(r + i) % t] <= self.0[(r + i + 1) % t]))
    }

    /// Number of distinct values.
    pub fn rank(&self) -> usize {
        self.0.iter().collect::<BTreeSet<_>>().len()
    }

    pub fn reversed(&self) -> Seq {
        Seq(self.0.iter().rev().copied().collect())
    }

    /// Move the first `r` elements (modulo the length) to the end.
    pub fn rotated(&self, r: usize) -> Seq {
        let t = self.0.len();
        if t == 0 {
            return Seq::empty();
        }
        let r = r % t;
        let mut out = Vec::with_capacity(t);
        out.extend_from_slice(&self.0[r..]);
        out.extend_from_slice(&self.0[..r]);
        Seq(out)
    }
}

fn increasing(s: &[u64]) -> bool {
    match s {
        [] | [_] => true,
        [a, b, ..] => a <= b && increasing(&s[1..]),
    }
}

fn at_most_one_descent(s: &[u64]) -> bool {
    match s {
        [] | [_] => true,
        [a, b, ..] => {
            if a <= b {
                at_most_one_descent(&s[1..])
            } else {
                increasing(&s[1..])
            }
        }
    }
}

impl From<Vec<u64>> for Seq {
    fn from(elements: Vec<u64>) -> Self {
        Seq(elements)
    }
}

impl From<&[u64]> for Seq {
    fn from(elements: &[u64]) -> Self {
        Seq(elements.to_vec())
    }
}

impl FromIterator<u64> for Seq {
    fn from_iter<I: IntoIterator<Item = u64>>(iter: I) -> Self {
        Seq(iter.into_iter().collect())
    }
}

impl fmt::Display for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Failure to read a comma-separated sequence literal. Token positions are
/// 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid token `{token}` at position {position}")]
pub struct ParseSeqError {
    pub position: usize,
    pub token: String,
}

/// Sequence literals are ASCII decimal naturals separated by commas, with
/// optional whitespace around each token. The empty (or all-whitespace)
/// string is the empty sequence.
impl FromStr for Seq {
    type Err = ParseSeqError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        if text.trim().is_empty() {
            return Ok(Seq::empty());
        }
        let mut elements = Vec::new();
        for (i, raw) in text.split(',').enumerate() {
            let token = raw.trim();
            let ok = !token.is_empty() && token.bytes().all(|b| b.is_ascii_digit());
            match token.parse::<u64>() {
                Ok(v) if ok => elements.push(v),
                _ => {
                    return Err(ParseSeqError {
                        position: i + 1,
                        token: token.to_string(),
                    })
                }
            }
        }
        Ok(Seq(elements))
    }
}
