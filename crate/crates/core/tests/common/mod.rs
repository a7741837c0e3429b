#![allow(dead_code)]

use coxkit::{CoxeterSystem, Element, Family, SubsetMask};
use proptest::prelude::*;

/// A uniformly shuffled signed permutation of `n` letters; `signed` false keeps it positive.
pub fn perm(n: usize, signed: bool) -> impl Strategy<Value = Element> {
    (prop::collection::vec(any::<u32>(), n), prop::collection::vec(any::<bool>(), n)).prop_map(move |(keys, signs)| {
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by_key(|&i| (keys[i], i));
        let w = idx
            .iter()
            .zip(&signs)
            .map(|(&i, &neg)| if neg && signed { -(i as i32 + 1) } else { i as i32 + 1 })
            .collect();
        Element::from_window(w).expect("permutation")
    })
}

/// An element of `sys`.
pub fn element_of(sys: CoxeterSystem) -> impl Strategy<Value = Element> {
    perm(sys.n(), sys.family() != Family::A).prop_map(move |w| {
        if sys.family() == Family::D && w.neg() % 2 == 1 {
            let mut v = w.into_window();
            v[0] = -v[0];
            Element::from_window(v).expect("signed permutation")
        } else {
            w
        }
    })
}

/// A subset of the generators of `sys`.
pub fn subset_of(sys: CoxeterSystem) -> impl Strategy<Value = SubsetMask> {
    let gens = sys.generators();
    prop::collection::vec(any::<bool>(), gens.len())
        .prop_map(move |bits| SubsetMask::from_indices(gens.iter().zip(bits).filter(|(_, b)| *b).map(|(g, _)| *g)))
}

/// One of a few small systems of every family.
pub fn small_system() -> impl Strategy<Value = CoxeterSystem> {
    prop_oneof![
        Just(CoxeterSystem::a(3)),
        Just(CoxeterSystem::a(4)),
        Just(CoxeterSystem::b(2)),
        Just(CoxeterSystem::b(3)),
        Just(CoxeterSystem::d(3)),
        Just(CoxeterSystem::d(4)),
    ]
}

pub fn e(s: &str) -> Element {
    Element::parse(s).expect("valid window")
}
