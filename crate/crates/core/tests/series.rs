mod common;

use coxkit::series::{self, BasisKind, Construction, Level, NCSeries};
use coxkit::{Composition, CoxeterSystem};

#[test]
fn pseudo_ribbon_word_count() {
    // f1 < 0, f1 <= f2, f3 < f2 over [-4, 4]
    let r = -4..=4;
    let brute = r
        .clone()
        .flat_map(|a| r.clone().flat_map(move |b| (-4..=4).map(move |c| (a, b, c))))
        .filter(|&(a, b, c)| a < 0 && a <= b && c < b)
        .count();
    let alpha = Composition::parse("(0,2,1)").unwrap();
    let x = series::basis_element(BasisKind::SB, &alpha, 4, Construction::DescentClass).unwrap();
    assert_eq!(brute, 140);
    assert_eq!(x.len(), brute);
    assert!(x.iter().all(|(f, c)| c == 1 && f[0] < 0 && f[0] <= f[1] && f[2] < f[1]));
}

#[test]
fn constructions_agree() {
    for (kind, key, m) in [
        (BasisKind::SA, "(2,1)", 3),
        (BasisKind::SA, "(1,2,1)", 4),
        (BasisKind::SB, "(0,2,1)", 4),
        (BasisKind::SB, "(1,1,1)", 4),
        (BasisKind::SD, "(0,3)", 4),
        (BasisKind::SD, "(2,1)", 4),
    ] {
        let alpha = Composition::parse(key).unwrap();
        let class = series::basis_element(kind, &alpha, m, Construction::DescentClass).unwrap();
        assert_eq!(class, series::basis_element(kind, &alpha, m, Construction::Parset).unwrap(), "{key}");
        assert_eq!(class, series::basis_element(kind, &alpha, m, Construction::Tableau).unwrap(), "{key}");
    }
}

#[test]
fn json_round_trip() {
    let alpha = Composition::parse("(0,2,1)").unwrap();
    let x = series::basis_element(BasisKind::SB, &alpha, 4, Construction::Tableau).unwrap();
    let text = x.to_json();
    assert_eq!(NCSeries::from_json(&text).unwrap(), x);
    assert!(!text.contains('\n'));
}

#[test]
fn s_basis_partitions_the_word_cube() {
    let b2 = CoxeterSystem::b(2);
    let all = series::s_series_all(&b2, 3).unwrap();
    let total: usize = all.values().map(NCSeries::len).sum();
    assert_eq!(total, 49);
    for (w, s) in all.iter() {
        assert_eq!(*s, series::s_series(&b2, w, 3));
    }
}

#[test]
fn expansion_round_trip() {
    let a3 = CoxeterSystem::a(3);
    for w in a3.elements().unwrap().iter() {
        for level in [Level::F, Level::S] {
            let x = series::level_series(&a3, level, w, 4);
            let coords = series::expand_in_basis(&a3, level, &x).unwrap();
            assert_eq!(coords.len(), 1);
            assert_eq!(coords.coeff(w), 1);
        }
    }
}

#[test]
fn small_windows_are_rejected() {
    let a3 = CoxeterSystem::a(3);
    let w = a3.identity();
    let x = series::f_series(&a3, &w, 2);
    assert!(matches!(series::expand_in_basis(&a3, Level::F, &x), Err(coxkit::Error::Window(_))));
    let mut y = NCSeries::zero(2, 2);
    assert!(matches!(y.try_add_term(vec![0, 3], 1), Err(coxkit::Error::Window(_))));
}

#[test]
fn type_a_image_is_the_ribbon_function() {
    for key in ["(3)", "(1,2)", "(2,1)", "(1,1,1)"] {
        let alpha = Composition::parse(key).unwrap();
        let x = series::basis_element(BasisKind::SA, &alpha, 4, Construction::DescentClass).unwrap();
        assert_eq!(series::chi_a(&x), series::ribbon_qsym(BasisKind::SA, &alpha, 4).unwrap());
    }
}
