mod common;

use common::perm;
use coxkit::shuffle::{self, Coproduct, Product};
use coxkit::Element;
use proptest::prelude::*;

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Standardization by stable sort: ties are ranked left to right.
fn brute_st(a: &[i32]) -> Vec<i32> {
    let mut idx: Vec<usize> = (0..a.len()).collect();
    idx.sort_by_key(|&i| (a[i], i));
    let mut out = vec![0; a.len()];
    for (rank, &i) in idx.iter().enumerate() {
        out[i] = rank as i32 + 1;
    }
    out
}

fn pair(max: usize, signed: bool) -> impl Strategy<Value = (Element, Element)> {
    (0..=max).prop_flat_map(move |m| (0..=max - m).prop_flat_map(move |n| (perm(m, signed), perm(n, signed))))
}

#[test]
fn frozen_standardization() {
    assert_eq!(shuffle::st(&[3, 2, 2, 3, 6, 2, 5]), Element::parse("4,1,2,5,7,3,6").unwrap());
}

proptest! {
    #[test]
    fn st_matches_stable_sort(a in prop::collection::vec(-5i32..6, 0..8)) {
        let w = shuffle::st(&a);
        prop_assert_eq!(w.window(), &brute_st(&a)[..]);
        prop_assert_eq!(shuffle::st(w.window()), w.clone());
    }

    #[test]
    fn st_b_is_idempotent_on_signed_permutations(w in (0usize..6).prop_flat_map(|n| perm(n, true))) {
        prop_assert_eq!(shuffle::st_b(w.window()), w.clone());
    }

    #[test]
    fn shuffle_term_counts((u, v) in pair(4, false)) {
        let (m, n) = (u.n(), v.n());
        for p in [Product::ShuffleA, Product::CupA] {
            let x = p.apply(&u, &v).unwrap();
            prop_assert_eq!(x.len(), binomial(m + n, n));
            prop_assert!(x.iter().all(|(_, c)| c == 1));
        }
    }

    #[test]
    fn signed_shuffle_term_counts((u, v) in pair(3, true), n in 0usize..3) {
        // the module products take an unsigned right factor
        let plain = Element::identity(n);
        let x = Product::ShuffleB.apply(&u, &plain).unwrap();
        prop_assert_eq!(x.len() as i64, x.total());
        prop_assert_eq!(x.total() as usize, binomial(u.n() + n, n) << n);
        prop_assert_eq!(Product::CupB.apply(&u, &plain).unwrap().total() as usize, binomial(u.n() + n, n) << n);
        let (m, n) = (u.n(), v.n());
        let y = Product::ShuffleBB.apply(&u, &v).unwrap();
        prop_assert_eq!(y.total() as usize, binomial(m + n, n));
    }

    #[test]
    fn type_a_dualities((u, v) in pair(3, false)) {
        let s = Product::ShuffleA.apply(&u, &v).unwrap();
        let c = Product::CupA.apply(&u, &v).unwrap();
        let key = (u.clone(), v.clone());
        for w in coxkit::CoxeterSystem::a((u.n() + v.n()).max(1)).elements().unwrap().iter().filter(|w| w.n() == u.n() + v.n()) {
            prop_assert_eq!(s.coeff(w), Coproduct::CapA.apply(w).unwrap().coeff(&key));
            prop_assert_eq!(c.coeff(w), Coproduct::UnshuffleA.apply(w).unwrap().coeff(&key));
        }
    }

    #[test]
    fn shuffle_and_cup_are_exchanged_by_inversion((u, v) in pair(3, false)) {
        let s = Product::ShuffleA.apply(&u, &v).unwrap();
        let c = Product::CupA.apply(&u.inverse(), &v.inverse()).unwrap();
        prop_assert_eq!(coxkit::maps::invert_vector(&s), c);
    }

    #[test]
    fn factorizations_recompose(w in (1usize..6).prop_flat_map(|n| perm(n, true)), k in 0usize..6) {
        let m = k % (w.n() + 1);
        let (a, b, z) = shuffle::factor_b(&w, m).unwrap();
        prop_assert_eq!(&shuffle::cross_signed(&a, &b) * &z, w.clone());
        prop_assert_eq!(a.n(), m);
    }
}
