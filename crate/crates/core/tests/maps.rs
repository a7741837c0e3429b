mod common;

use common::{element_of, small_system, subset_of};
use coxkit::maps::{self, GroupVector};
use coxkit::{CoxeterSystem, SubsetMask};
use proptest::prelude::*;

fn basis(w: &coxkit::Element) -> GroupVector {
    GroupVector::basis(w.clone())
}

/// A chain `I <= J` of subsets and an element of `W_I`.
fn chain() -> impl Strategy<Value = (CoxeterSystem, SubsetMask, SubsetMask, coxkit::Element)> {
    small_system().prop_flat_map(|s| (Just(s), subset_of(s), subset_of(s), element_of(s))).prop_map(|(s, a, b, w)| {
        let j = a.union(b);
        let i = a;
        let (_, part) = s.decompose_left(&w, i);
        (s, i, j, part)
    })
}

#[test]
fn mu_of_identity_is_the_sum_of_coset_representatives() {
    let b3 = CoxeterSystem::b(3);
    let i = SubsetMask::from_indices([0, 1]);
    let x = maps::mu(&b3, i, &basis(&b3.identity())).unwrap();
    assert_eq!(x.len(), 6);
    assert_eq!(x.total(), 6);
}

/// `mu_bar_J` after `mu_I^J` is not `mu_bar_I`: the first counterexample in `A_3`.
#[test]
fn mixed_chain_is_not_a_composition_law() {
    let a3 = CoxeterSystem::a(4);
    let (i, j) = (SubsetMask::from_indices([1]), SubsetMask::from_indices([1, 2]));
    let x = basis(&a3.identity());
    let mixed = maps::mu_bar(&a3, j, &maps::mu_within(&a3, i, j, &x).unwrap()).unwrap();
    let chained = maps::mu_bar(&a3, j, &maps::mu_bar_within(&a3, i, j, &x).unwrap()).unwrap();
    assert_ne!(mixed, maps::mu_bar(&a3, i, &x).unwrap());
    assert_eq!(chained, maps::mu_bar(&a3, i, &x).unwrap());
}

#[test]
fn keys_outside_the_parabolic_are_rejected() {
    let b2 = CoxeterSystem::b(2);
    let w = b2.parse_element("2,1").unwrap();
    assert!(maps::mu(&b2, SubsetMask::singleton(0), &basis(&w)).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_laws((sys, i, j, u) in chain()) {
        let x = basis(&u);
        prop_assert_eq!(maps::mu(&sys, j, &maps::mu_within(&sys, i, j, &x).unwrap()).unwrap(), maps::mu(&sys, i, &x).unwrap());
        prop_assert_eq!(
            maps::mu_bar(&sys, j, &maps::mu_bar_within(&sys, i, j, &x).unwrap()).unwrap(),
            maps::mu_bar(&sys, i, &x).unwrap()
        );
    }

    #[test]
    fn restriction_chains((sys, i, j, _u) in chain(), w in small_system().prop_flat_map(element_of)) {
        prop_assume!(w.n() == sys.n() && sys.contains(&w));
        let x = basis(&w);
        prop_assert_eq!(maps::rho_within(&sys, i, j, &maps::rho(&sys, j, &x).unwrap()).unwrap(), maps::rho(&sys, i, &x).unwrap());
        prop_assert_eq!(
            maps::rho_bar_within(&sys, i, j, &maps::rho_bar(&sys, j, &x).unwrap()).unwrap(),
            maps::rho_bar(&sys, i, &x).unwrap()
        );
    }

    #[test]
    fn adjunctions_and_inverses(
        (sys, i, u, w) in small_system().prop_flat_map(|s| (Just(s), subset_of(s), element_of(s), element_of(s)))
    ) {
        let (_, u) = sys.decompose_left(&u, i);
        let (x, y) = (basis(&u), basis(&w));
        prop_assert_eq!(maps::pairing(&maps::mu(&sys, i, &x).unwrap(), &y), maps::pairing(&x, &maps::rho_bar(&sys, i, &y).unwrap()));
        prop_assert_eq!(maps::pairing(&maps::rho(&sys, i, &y).unwrap(), &x), maps::pairing(&y, &maps::mu_bar(&sys, i, &x).unwrap()));
        prop_assert_eq!(
            maps::invert_vector(&maps::mu(&sys, i, &x).unwrap()),
            maps::mu_bar(&sys, i, &maps::invert_vector(&x)).unwrap()
        );
        prop_assert_eq!(
            maps::invert_vector(&maps::rho(&sys, i, &y).unwrap()),
            maps::rho_bar(&sys, i, &maps::invert_vector(&y)).unwrap()
        );
    }

    #[test]
    fn mu_preserves_total_mass((sys, i, u) in small_system().prop_flat_map(|s| (Just(s), subset_of(s), element_of(s)))) {
        let (_, u) = sys.decompose_left(&u, i);
        let index = sys.order() / sys.parabolic(i).unwrap().len() as u128;
        prop_assert_eq!(maps::mu(&sys, i, &basis(&u)).unwrap().total() as u128, index);
        prop_assert_eq!(maps::rho(&sys, i, &basis(&u)).unwrap(), basis(&u));
    }
}
