mod common;

use std::collections::BTreeSet;

use coxkit::descent;
use coxkit::linalg;
use coxkit::{CoxeterSystem, Element, SubsetMask};

/// Double cosets `W_I w W_J` counted by brute force over the whole group.
fn brute_double_cosets(sys: &CoxeterSystem, i: SubsetMask, j: SubsetMask) -> usize {
    let left = sys.parabolic(i).unwrap();
    let right = sys.parabolic(j).unwrap();
    let mut seen: BTreeSet<Element> = BTreeSet::new();
    let mut count = 0;
    for w in sys.elements().unwrap().iter() {
        if seen.contains(w) {
            continue;
        }
        count += 1;
        for u in left.iter() {
            for v in right.iter() {
                seen.insert(&(u * w) * v);
            }
        }
    }
    count
}

#[test]
fn c_matrix_is_symmetric() {
    for sys in [CoxeterSystem::a(4), CoxeterSystem::b(3), CoxeterSystem::d(4)] {
        let (keys, c) = descent::c_matrix(&sys).unwrap();
        assert_eq!(keys.len(), 1 << sys.rank());
        for (r, row) in c.iter().enumerate() {
            for (k, x) in row.iter().enumerate() {
                assert_eq!(*x, c[k][r]);
            }
        }
    }
}

#[test]
fn b2_c_determinant() {
    assert_eq!(linalg::fmt_q(&descent::c_determinant(&CoxeterSystem::b(2)).unwrap()), "3");
}

#[test]
fn conjugacy_classes_of_parabolics() {
    // partitions of 4 for S_4; pairs (k, partition of n - k) for B_3
    assert_eq!(descent::sym_bases(&CoxeterSystem::a(4)).unwrap().classes.len(), 5);
    assert_eq!(descent::sym_bases(&CoxeterSystem::b(3)).unwrap().classes.len(), 7);
}

#[test]
fn h_gram_counts_double_cosets() {
    for sys in [CoxeterSystem::a(4), CoxeterSystem::b(3)] {
        let full = sys.full_set();
        for p in full.subsets() {
            for q in full.subsets() {
                let brute = brute_double_cosets(&sys, full.difference(p), full.difference(q));
                assert_eq!(descent::double_coset_count(&sys, full.difference(p), full.difference(q)).unwrap(), brute);
                assert_eq!(descent::h_gram(&sys, p, q).unwrap(), brute as i64);
            }
        }
    }
}

#[test]
fn hm_matrix_is_the_identity() {
    for sys in [CoxeterSystem::a(4), CoxeterSystem::b(3), CoxeterSystem::d(4)] {
        let bases = descent::sym_bases(&sys).unwrap();
        assert_eq!(bases.hm_matrix(&sys).unwrap(), linalg::identity(bases.classes.len()));
    }
}
