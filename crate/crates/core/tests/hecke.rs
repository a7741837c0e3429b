mod common;

use coxkit::hecke;
use coxkit::{CoxeterSystem, SubsetMask};

#[test]
fn projective_indecomposables_fill_the_regular_module() {
    for sys in [CoxeterSystem::a(4), CoxeterSystem::b(2), CoxeterSystem::b(3), CoxeterSystem::d(4)] {
        let mut total = 0;
        for i in sys.full_set().subsets() {
            let p = hecke::indecomposable_projective(&sys, i).unwrap();
            p.check_relations().unwrap();
            assert_eq!(p.dim(), sys.descent_class(i).unwrap().len());
            total += p.dim();
        }
        assert_eq!(total as u128, sys.order());
    }
}

#[test]
fn simples_are_one_dimensional() {
    let b3 = CoxeterSystem::b(3);
    for k in b3.full_set().subsets() {
        let c = hecke::simple_module(&b3, b3.full_set(), k).unwrap();
        assert_eq!(c.dim(), 1);
        assert_eq!(hecke::composition_factors(&c).to_string(), format!("C{k}"));
    }
}

#[test]
fn frozen_induced_simple() {
    let b3 = CoxeterSystem::b(3);
    let i = SubsetMask::from_indices([1, 2]);
    let induced = hecke::induce(&hecke::simple_module(&b3, i, SubsetMask::EMPTY).unwrap()).unwrap();
    induced.check_relations().unwrap();
    assert_eq!(induced.dim(), 8);
    let factors = hecke::composition_factors(&induced);
    assert_eq!(factors.to_string(), "C{} + 3*C{0} + 2*C{1} + C{2} + C{0,2}");
    assert_eq!(factors, hecke::induced_simple_prediction(&b3, i, &b3.identity()).unwrap());
}

#[test]
fn regular_module_is_projective() {
    let b2 = CoxeterSystem::b(2);
    let reg = hecke::regular_module(&b2).unwrap();
    reg.check_relations().unwrap();
    let proj = hecke::projective_multiplicities(&reg).unwrap();
    assert_eq!(proj.terms.len(), 4);
    assert!(proj.terms.iter().all(|(_, c)| c == 1));
}

#[test]
fn hom_into_simples_detects_tops() {
    let a3 = CoxeterSystem::a(4);
    for i in a3.full_set().subsets() {
        let p = hecke::indecomposable_projective(&a3, i).unwrap();
        for j in a3.full_set().subsets() {
            assert_eq!(hecke::hom_to_simple(&p, j), usize::from(i == j));
        }
    }
}
