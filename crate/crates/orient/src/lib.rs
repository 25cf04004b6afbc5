//! Orientation classification of finite sequences and of transformations of
//! the chain `[n] = {0, …, n-1}`.
//!
//! The crate classifies a sequence as cyclic, anticyclic, both, or neither,
//! by three mutually checking routes (a structural recursion, a cyclic
//! descent count, and a rotation search), extends the classification to
//! transformations through their image sequences, and exhaustively tests at
//! small bounds that the orientation of a sequence of rank other than 2 is
//! determined by its length-3 subsequences — while mining the rank-2
//! exceptions, of which `(0,1,0,1)` is the smallest binary specimen.
//!
//! The `orient` binary exposes the same operations on the command line.

pub mod census;
pub mod cli;
pub mod mapping;
pub mod seq;
pub mod sweep;
pub mod triples;

pub use census::MappingCensus;
pub use mapping::{DomainSubset, MappingError, Transformation};
pub use seq::{OrientationCounts, OrientationSort, ParseSeqError, Seq};
pub use sweep::{SweepError, SweepOptions, DEFAULT_BUDGET};
pub use triples::{
    find_rank2_counterexamples, is_determined_by_triples, predicted_orientation, subsequences,
    triple_profile, verify_triple_determinacy, OrientationProfile, TripleError, VerificationReport,
};

#[cfg(test)]
pub(crate) mod testutil {
    /// Enumerate every word of the given length over `{0, …, alphabet-1}`
    /// in lexicographic order.
    pub(crate) fn exhaustive_words(len: usize, alphabet: u64, mut f: impl FnMut(&[u64])) {
        let mut buf = vec![0u64; len];
        loop {
            f(&buf);
            let mut i = len;
            loop {
                if i == 0 {
                    return;
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
}
