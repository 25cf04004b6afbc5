//! Total transformations of the chain `[n] = {0, …, n-1}` and their
//! orientation over sorted domains.
//!
//! A transformation is written as its image tuple: entry `d` is the image of
//! `d`. It is orientation-preserving over a domain when the sequence of its
//! images along that domain (in increasing order) is cyclic, and
//! orientation-reversing when that sequence is anticyclic.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::seq::{OrientationSort, ParseSeqError, Seq};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MappingError {
    #[error("a transformation needs at least one point")]
    EmptyImageTuple,
    #[error("image {value} of point {index} lies outside [{n}]")]
    ImageOutOfRange { index: usize, value: u64, n: usize },
    #[error("domain members must be strictly increasing (violated at position {position})")]
    DomainNotIncreasing { position: usize },
    #[error("domain member {member} lies outside [{n}]")]
    DomainOutOfRange { member: u64, n: usize },
    #[error("{0}")]
    Parse(#[from] ParseSeqError),
}

/// A total mapping of `[n]` into itself, stored as its image tuple.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Transformation {
    images: Vec<u64>,
}

impl Transformation {
    /// Build from an image tuple; `n` is the tuple length. Every image must
    /// lie in `{0, …, n-1}` and `n` must be positive.
    pub fn new(images: Vec<u64>) -> Result<Self, MappingError> {
        if images.is_empty() {
            return Err(MappingError::EmptyImageTuple);
        }
        let n = images.len();
        for (index, &value) in images.iter().enumerate() {
            if value >= n as u64 {
                return Err(MappingError::ImageOutOfRange { index, value, n });
            }
        }
        Ok(Transformation { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u64] {
        &self.images
    }

    pub fn apply(&self, point: u64) -> Option<u64> {
        self.images.get(point as usize).copied()
    }

    /// The whole chain `0 < 1 < … < n-1` as a domain.
    pub fn full_domain(&self) -> DomainSubset {
        DomainSubset {
            members: (0..self.n() as u64).collect(),
        }
    }

    /// The sequence of images along the (sorted) members of `domain`.
    pub fn image_seq(&self, domain: &DomainSubset) -> Result<Seq, MappingError> {
        let n = self.n();
        let mut out = Vec::with_capacity(domain.len());
        for &member in domain.members() {
            if member >= n as u64 {
                return Err(MappingError::DomainOutOfRange { member, n });
            }
            out.push(self.images[member as usize]);
        }
        Ok(Seq::new(out))
    }

    pub fn is_orientation_preserving(&self, domain: &DomainSubset) -> Result<bool, MappingError> {
        Ok(self.image_seq(domain)?.is_cyclic())
    }

    pub fn is_orientation_reversing(&self, domain: &DomainSubset) -> Result<bool, MappingError> {
        Ok(self.image_seq(domain)?.is_anticyclic())
    }

    pub fn orientation(&self, domain: &DomainSubset) -> Result<OrientationSort, MappingError> {
        Ok(self.image_seq(domain)?.orientation())
    }

    /// Size of the image: the number of distinct values taken.
    pub fn rank(&self) -> usize {
        Seq::from(self.images.as_slice()).rank()
    }
}

impl FromStr for Transformation {
    type Err = MappingError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let seq: Seq = text.parse()?;
        Transformation::new(seq.elements().to_vec())
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Seq::from(self.images.as_slice()).fmt(f)
    }
}

/// A strictly increasing selection of points of `[n]`, used to restrict a
/// transformation. The empty subset is allowed and induces the empty image
/// sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainSubset {
    members: Vec<u64>,
}

impl DomainSubset {
    pub fn new(members: Vec<u64>) -> Result<Self, MappingError> {
        for (position, pair) in members.windows(2).enumerate() {
            if pair[0] >= pair[1] {
                return Err(MappingError::DomainNotIncreasing {
                    position: position + 1,
                });
            }
        }
        Ok(DomainSubset { members })
    }

    pub fn full(n: usize) -> Self {
        DomainSubset {
            members: (0..n as u64).collect(),
        }
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}
