//! Exhaustive orientation census over all `n^n` transformations of `[n]`.
//!
//! Every transformation is classified twice: once by the recursive
//! classifier and once by the rotation oracle. The two tallies must agree
//! before a census is trusted; [`CensusBuild::cross_check`] exposes the
//! comparison.

use serde::Serialize;

use crate::mapping::Transformation;
use crate::seq::{OrientationCounts, OrientationSort, Seq};
use crate::sweep::{
    for_each_word_with_first, partitions, run_partitioned, word_count, Partition, SweepError,
    SweepOptions,
};

/// Orientation tallies over the full transformation monoid of `[n]`, with a
/// few sample mappings per sort.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MappingCensus {
    pub n: usize,
    pub total: u64,
    pub counts: OrientationCounts,
    pub samples: SortSamples,
}

/// Lexicographically first mappings seen per sort, capped at the requested
/// sample count.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SortSamples {
    pub none: Vec<Transformation>,
    pub cyclic: Vec<Transformation>,
    pub anticyclic: Vec<Transformation>,
    pub both: Vec<Transformation>,
}

impl SortSamples {
    fn slot(&mut self, sort: OrientationSort) -> &mut Vec<Transformation> {
        match sort {
            OrientationSort::None => &mut self.none,
            OrientationSort::Cyclic => &mut self.cyclic,
            OrientationSort::Anticyclic => &mut self.anticyclic,
            OrientationSort::Both => &mut self.both,
        }
    }

    fn record(&mut self, sort: OrientationSort, f: &Transformation, cap: usize) {
        let slot = self.slot(sort);
        if slot.len() < cap {
            slot.push(f.clone());
        }
    }
}

/// A census plus the independently derived tally used to validate it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusBuild {
    pub census: MappingCensus,
    /// Counts re-derived with the rotation oracle on both the image
    /// sequence and its reverse.
    pub rotation_counts: OrientationCounts,
}

impl CensusBuild {
    /// True when the recursive classifier and the rotation oracle tallied
    /// identically.
    pub fn cross_check(&self) -> bool {
        self.census.counts == self.rotation_counts
    }
}

#[derive(Default)]
struct Partial {
    counts: OrientationCounts,
    rotation_counts: OrientationCounts,
    samples: SortSamples,
}

/// Classify every transformation of `[n]` over its full domain, in
/// lexicographic image-tuple order.
pub fn build_census(
    n: usize,
    samples_per_sort: usize,
    options: SweepOptions,
) -> Result<CensusBuild, SweepError> {
    if n < 1 {
        return Err(SweepError::InvalidBounds(
            "the chain size n must be at least 1".into(),
        ));
    }
    let space = word_count(std::iter::once(n), n as u64);
    options.check_budget(space)?;

    let parts = partitions(n..=n, n as u64);
    let partials = run_partitioned(&parts, options.jobs, |p: Partition| {
        let mut partial = Partial::default();
        for_each_word_with_first(p.length, n as u64, p.first, |images| {
            let s = Seq::from(images);
            let primary = s.orientation();
            let rotation = OrientationSort::from_flags(
                s.is_cyclic_by_rotation(),
                s.reversed().is_cyclic_by_rotation(),
            );
            partial.counts.record(primary);
            partial.rotation_counts.record(rotation);
            if samples_per_sort > 0 && partial.samples.slot(primary).len() < samples_per_sort {
                let f = Transformation::new(images.to_vec())
                    .expect("enumerated images lie within the chain");
                partial.samples.record(primary, &f, samples_per_sort);
            }
        });
        partial
    });

    let mut counts = OrientationCounts::default();
    let mut rotation_counts = OrientationCounts::default();
    let mut samples = SortSamples::default();
    for partial in partials {
        counts.merge(&partial.counts);
        rotation_counts.merge(&partial.rotation_counts);
        let SortSamples {
            none,
            cyclic,
            anticyclic,
            both,
        } = partial.samples;
        for (slot, incoming) in [
            (&mut samples.none, none),
            (&mut samples.cyclic, cyclic),
            (&mut samples.anticyclic, anticyclic),
            (&mut samples.both, both),
        ] {
            for f in incoming {
                if slot.len() < samples_per_sort {
                    slot.push(f);
                }
            }
        }
    }

    Ok(CensusBuild {
        census: MappingCensus {
            n,
            total: counts.total(),
            counts,
            samples,
        },
        rotation_counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_point_chain() {
        let build = build_census(1, 3, SweepOptions::default()).unwrap();
        assert_eq!(build.census.total, 1);
        assert_eq!(build.census.counts.both, 1);
        assert!(build.cross_check());
    }

    #[test]
    fn two_point_chain_is_all_both() {
        let build = build_census(2, 8, SweepOptions::default()).unwrap();
        assert_eq!(build.census.total, 4);
        assert_eq!(build.census.counts.both, 4);
        assert_eq!(build.census.samples.both.len(), 4);
        assert!(build.cross_check());
    }

    #[test]
    fn four_point_chain_has_unoriented_mappings() {
        let build = build_census(4, 2, SweepOptions::default()).unwrap();
        assert_eq!(build.census.total, 256);
        assert_eq!(build.census.counts.total(), 256);
        assert!(build.census.counts.none >= 1);
        assert!(build.cross_check());
        // lexicographically first unoriented mapping
        assert_eq!(
            build
                .census
                .samples
                .none
                .first()
                .map(|f| f.images().to_vec()),
            Some(vec![0, 1, 0, 1])
        );
        assert!(build.census.samples.none.len() <= 2);
    }

    #[test]
    fn budget_is_enforced_with_the_space_size() {
        let err = build_census(4, 1, SweepOptions::with_budget(100)).unwrap_err();
        assert_eq!(
            err,
            SweepError::BudgetExceeded {
                required: 256,
                budget: 100
            }
        );
    }

    #[test]
    fn census_is_thread_count_independent() {
        let sequential = build_census(4, 3, SweepOptions::default()).unwrap();
        let parallel = build_census(
            4,
            3,
            SweepOptions {
                jobs: 4,
                ..SweepOptions::default()
            },
        )
        .unwrap();
        assert_eq!(sequential, parallel);
    }

    #[test]
    fn rejects_empty_chain() {
        assert!(matches!(
            build_census(0, 1, SweepOptions::default()),
            Err(SweepError::InvalidBounds(_))
        ));
    }
}
