//! Randomized algebraic and efficiency laws over small integer-vector
//! instances.

use effsum_core::{
    compare, efficient_set, minkowski_sum, Comparison, FiniteSet, GroupContext, GroupElement,
    RelationOracle,
};
use proptest::prelude::*;

fn elem(dim: usize) -> impl Strategy<Value = GroupElement> {
    prop::collection::vec(-5i64..=5, dim).prop_map(GroupElement::IntVec)
}

fn set(dim: usize) -> impl Strategy<Value = FiniteSet> {
    prop::collection::vec(elem(dim), 1..8).prop_map(FiniteSet::from_vec)
}

/// Direct double-loop transcription of the efficiency definition, kept
/// independent of the library's single-pass partition.
fn efficient_reference(s: &FiniteSet, rel: &RelationOracle) -> FiniteSet {
    let mut out = Vec::new();
    for x in s {
        let mut dominated = false;
        for y in s {
            if rel.strictly(y, x).unwrap() {
                dominated = true;
                break;
            }
        }
        if !dominated {
            out.push(x.clone());
        }
    }
    FiniteSet::from_vec(out)
}

proptest! {
    #[test]
    fn efficiency_matches_reference_definition(a in set(2)) {
        let rel = RelationOracle::ProductOrder;
        let got = efficient_set(&a, &rel).unwrap().efficient;
        prop_assert_eq!(got, efficient_reference(&a, &rel));
    }

    #[test]
    fn efficiency_is_idempotent(a in set(3)) {
        let rel = RelationOracle::ProductOrder;
        let once = efficient_set(&a, &rel).unwrap().efficient;
        let twice = efficient_set(&once, &rel).unwrap().efficient;
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn comparison_mirrors(x in elem(2), y in elem(2)) {
        let rel = RelationOracle::ProductOrder;
        let fwd = compare(&x, &y, &rel).unwrap();
        let bwd = compare(&y, &x, &rel).unwrap();
        prop_assert_eq!(fwd.mirror(), bwd);
        prop_assert_eq!(bwd.mirror(), fwd);
        if x == y {
            prop_assert_eq!(fwd, Comparison::Equal);
        }
    }

    #[test]
    fn minkowski_sum_is_associative(a in set(2), b in set(2), c in set(2)) {
        let g = GroupContext::IntVec { dim: 2 };
        let left = minkowski_sum(&minkowski_sum(&a, &b, &g).unwrap(), &c, &g).unwrap();
        let right = minkowski_sum(&a, &minkowski_sum(&b, &c, &g).unwrap(), &g).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn identity_summand_is_neutral(a in set(2)) {
        let g = GroupContext::IntVec { dim: 2 };
        let zero = FiniteSet::singleton(g.identity());
        prop_assert_eq!(minkowski_sum(&a, &zero, &g).unwrap(), a);
    }

    #[test]
    fn translation_preserves_cardinality(a in set(2), b in elem(2)) {
        let g = GroupContext::IntVec { dim: 2 };
        let shifted = minkowski_sum(&a, &FiniteSet::singleton(b), &g).unwrap();
        prop_assert_eq!(shifted.len(), a.len());
    }
}
