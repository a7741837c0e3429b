mod common;

use common::{e, element_of, small_system, subset_of};
use coxkit::{CoxeterSystem, Family, Side};
use proptest::prelude::*;

#[test]
fn composition_acts_on_the_right_first() {
    let s3 = CoxeterSystem::a(3);
    let w = &s3.parse_element("2,1,3").unwrap() * &s3.parse_element("2,3,1").unwrap();
    assert_eq!(w, e("1,3,2"));
    assert_eq!(e("2,3,1").inverse(), e("3,1,2"));
}

#[test]
fn type_b_length_of_negated_transposition() {
    let b2 = CoxeterSystem::b(2);
    let w = b2.parse_element("-2,1").unwrap();
    assert_eq!(b2.length(&w), 2);
    assert_eq!(b2.reduced_word(&w).len(), 2);
}

#[test]
fn group_orders() {
    for (sys, order) in [
        (CoxeterSystem::a(4), 24),
        (CoxeterSystem::b(3), 48),
        (CoxeterSystem::d(4), 192),
        (CoxeterSystem::new(Family::D, 5).unwrap(), 1920),
    ] {
        assert_eq!(sys.order(), order);
        assert_eq!(sys.elements().unwrap().len() as u128, order);
    }
}

#[test]
fn descent_classes_partition_the_group() {
    for sys in [CoxeterSystem::a(4), CoxeterSystem::b(3), CoxeterSystem::d(4)] {
        let total: usize = sys.full_set().subsets().iter().map(|&i| sys.descent_class(i).unwrap().len()).sum();
        assert_eq!(total as u128, sys.order());
    }
}

#[test]
fn rejects_foreign_elements() {
    assert!(CoxeterSystem::d(3).parse_element("-1,2,3").is_err());
    assert!(CoxeterSystem::a(3).parse_element("-1,2,3").is_err());
    assert!(CoxeterSystem::b(3).parse_element("1,1,3").is_err());
    assert!(CoxeterSystem::b(3).parse_element("1,2").is_err());
}

#[test]
fn order_cap_is_enforced() {
    let err = CoxeterSystem::new(Family::B, 12).unwrap().elements().unwrap_err();
    assert!(matches!(err, coxkit::Error::CapExceeded { .. }));
}

proptest! {
    #[test]
    fn length_is_reduced_word_length((sys, w) in small_system().prop_flat_map(|s| (Just(s), element_of(s)))) {
        let word = sys.reduced_word(&w);
        prop_assert_eq!(word.len(), sys.length(&w));
        prop_assert_eq!(sys.from_word(&word), w.clone());
        prop_assert_eq!(sys.length(&w.inverse()), sys.length(&w));
    }

    #[test]
    fn descents_lower_length((sys, w) in small_system().prop_flat_map(|s| (Just(s), element_of(s)))) {
        for s in sys.generators() {
            let shorter = sys.length(&sys.right_mul_gen(&w, s)) < sys.length(&w);
            prop_assert_eq!(shorter, sys.is_descent(&w, s));
        }
        prop_assert_eq!(sys.left_descent_set(&w), sys.descent_set(&w.inverse()));
    }

    #[test]
    fn parabolic_factorizations(
        (sys, w, i) in small_system().prop_flat_map(|s| (Just(s), element_of(s), subset_of(s)))
    ) {
        let (rep, part) = sys.decompose_left(&w, i);
        prop_assert_eq!(&rep * &part, w.clone());
        prop_assert!(sys.in_parabolic(&part, i));
        prop_assert!(sys.descent_set(&rep).intersection(i).is_empty());
        prop_assert_eq!(sys.length(&w), sys.length(&rep) + sys.length(&part));
        prop_assert!(sys.min_coset_reps(i, Side::Left).unwrap().contains(&rep));

        let (part, rep) = sys.decompose_right(&w, i);
        prop_assert_eq!(&part * &rep, w.clone());
        prop_assert!(sys.min_coset_reps(i, Side::Right).unwrap().contains(&rep));
    }
}
