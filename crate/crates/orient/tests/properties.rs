//! Randomised invariants over the classification routes.

use proptest::prelude::*;

use orient::seq::{OrientationSort, Seq};
use orient::triples::subsequences;

fn small_seq() -> impl Strategy<Value = Seq> {
    prop::collection::vec(0u64..6, 0..10).prop_map(Seq::from)
}

proptest! {
    #[test]
    fn three_routes_agree(s in small_seq()) {
        let recursive = s.is_cyclic();
        prop_assert_eq!(recursive, s.is_cyclic_by_count());
        prop_assert_eq!(recursive, s.is_cyclic_by_rotation());
    }

    #[test]
    fn anticyclic_matches_ascent_count(s in small_seq()) {
        prop_assert_eq!(s.is_anticyclic(), s.is_anticyclic_by_count());
        prop_assert_eq!(s.is_anticyclic(), s.reversed().is_cyclic());
    }

    #[test]
    fn rotation_preserves_orientation(s in small_seq(), r in 0usize..20) {
        prop_assert_eq!(s.rotated(r).is_cyclic(), s.is_cyclic());
        prop_assert_eq!(s.rotated(r).orientation(), s.orientation());
    }

    #[test]
    fn increasing_sequences_are_cyclic(mut values in prop::collection::vec(0u64..100, 0..12)) {
        values.sort();
        let s = Seq::from(values);
        prop_assert!(s.is_increasing());
        prop_assert!(s.is_cyclic());
    }

    #[test]
    fn translation_preserves_orientation(s in small_seq(), c in 0u64..1000) {
        let shifted: Seq = s.elements().iter().map(|&v| v + c).collect();
        prop_assert_eq!(shifted.orientation(), s.orientation());
        prop_assert_eq!(shifted.rank(), s.rank());
    }

    #[test]
    fn orientation_matches_its_flags(s in small_seq()) {
        let sort = s.orientation();
        prop_assert_eq!(sort, OrientationSort::from_flags(s.is_cyclic(), s.is_anticyclic()));
        prop_assert_eq!(sort == OrientationSort::Both, s.is_cyclic() && s.is_anticyclic());
        prop_assert_eq!(sort == OrientationSort::None, !s.is_cyclic() && !s.is_anticyclic());
    }

    #[test]
    fn rank_at_most_one_means_both(v in 0u64..50, len in 0usize..10) {
        let s: Seq = std::iter::repeat_n(v, len).collect();
        prop_assert_eq!(s.orientation(), OrientationSort::Both);
    }

    #[test]
    fn augment_preserves_cyclic_descents(s in small_seq()) {
        prop_assume!(s.len() >= 2);
        let linear = s
            .augment()
            .elements()
            .windows(2)
            .filter(|w| w[0] > w[1])
            .count();
        prop_assert_eq!(linear, s.cyclic_descent_count());
    }

    #[test]
    fn subsequences_inherit_increasing_and_cyclic(s in small_seq(), k in 0usize..6) {
        for (_, sub) in subsequences(&s, k) {
            if s.is_increasing() {
                prop_assert!(sub.is_increasing());
            }
            if s.is_cyclic() {
                prop_assert!(sub.is_cyclic());
            }
        }
    }

    #[test]
    fn literal_format_round_trips(s in small_seq()) {
        let parsed: Seq = s.to_string().parse().unwrap();
        prop_assert_eq!(parsed, s);
    }
}
