//! The free module on a group, the four parabolic maps, inversion, the pairing and `chi`.
//!
//! Elements of a parabolic subgroup `W_I` are always stored as ambient elements of `W`.

use crate::coxeter::{CoxeterSystem, Element, Side};
use crate::error::{Error, Result};
use crate::subset::SubsetMask;
use crate::vector::FormalVector;

/// An integer combination of group elements.
pub type GroupVector = FormalVector<Element>;

/// A combination of subsets, read as `D_I`, `D*_I` or `Lambda_I` depending on context.
pub type SubsetVector = FormalVector<SubsetMask>;

/// Fails unless every key of `x` lies in `W_I`.
pub fn check_supported(sys: &CoxeterSystem, i: SubsetMask, x: &GroupVector) -> Result<()> {
    for w in x.keys() {
        if !sys.contains(w) || !sys.in_parabolic(w, i) {
            return Err(Error::OutsideParabolic(format!("{w} is not in W_{i}")));
        }
    }
    Ok(())
}

fn check_chain(i: SubsetMask, j: SubsetMask) -> Result<()> {
    if !i.is_subset(j) {
        return Err(Error::Invalid(format!("{i} is not a subset of {j}")));
    }
    Ok(())
}

/// `mu_I^J(u) = sum over z in W_J^I of z u`, for `I` inside `J`.
pub fn mu_within(sys: &CoxeterSystem, i: SubsetMask, j: SubsetMask, x: &GroupVector) -> Result<GroupVector> {
    check_chain(i, j)?;
    check_supported(sys, i, x)?;
    let reps = sys.relative_coset_reps(i, j, Side::Left)?;
    Ok(x.map_linear(|u| FormalVector::from_keys(reps.iter().map(|z| z * u))))
}

/// `mu_bar_I^J(u) = sum over z in ^I W_J of u z`.
pub fn mu_bar_within(sys: &CoxeterSystem, i: SubsetMask, j: SubsetMask, x: &GroupVector) -> Result<GroupVector> {
    check_chain(i, j)?;
    check_supported(sys, i, x)?;
    let reps = sys.relative_coset_reps(i, j, Side::Right)?;
    Ok(x.map_linear(|u| FormalVector::from_keys(reps.iter().map(|z| u * z))))
}

/// `rho_I^J(w) = w_I` from `w = w_I * ^I w`.
pub fn rho_within(sys: &CoxeterSystem, i: SubsetMask, j: SubsetMask, x: &GroupVector) -> Result<GroupVector> {
    check_chain(i, j)?;
    check_supported(sys, j, x)?;
    Ok(x.map_keys(|w| sys.decompose_right(w, i).0))
}

/// `rho_bar_I^J(w) = _I w` from `w = w^I * _I w`.
pub fn rho_bar_within(sys: &CoxeterSystem, i: SubsetMask, j: SubsetMask, x: &GroupVector) -> Result<GroupVector> {
    check_chain(i, j)?;
    check_supported(sys, j, x)?;
    Ok(x.map_keys(|w| sys.decompose_left(w, i).1))
}

pub fn mu(sys: &CoxeterSystem, i: SubsetMask, x: &GroupVector) -> Result<GroupVector> {
    mu_within(sys, i, sys.full_set(), x)
}

pub fn mu_bar(sys: &CoxeterSystem, i: SubsetMask, x: &GroupVector) -> Result<GroupVector> {
    mu_bar_within(sys, i, sys.full_set(), x)
}

pub fn rho(sys: &CoxeterSystem, i: SubsetMask, x: &GroupVector) -> Result<GroupVector> {
    rho_within(sys, i, sys.full_set(), x)
}

pub fn rho_bar(sys: &CoxeterSystem, i: SubsetMask, x: &GroupVector) -> Result<GroupVector> {
    rho_bar_within(sys, i, sys.full_set(), x)
}

pub fn invert_vector(x: &GroupVector) -> GroupVector {
    x.map_keys(Element::inverse)
}

pub fn pairing<K: Ord + Clone>(x: &FormalVector<K>, y: &FormalVector<K>) -> i64 {
    x.pairing(y)
}

/// `w -> D*_{D(w)}`.
pub fn chi(sys: &CoxeterSystem, x: &GroupVector) -> SubsetVector {
    x.map_keys(|w| sys.descent_set(w))
}

/// `chi` after inversion: `w -> D*_{D(w^{-1})}`.
pub fn chi_prime(sys: &CoxeterSystem, x: &GroupVector) -> SubsetVector {
    x.map_keys(|w| sys.left_descent_set(w))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mu_of_identity_sums_coset_reps() {
        let s3 = CoxeterSystem::a(3);
        let i = SubsetMask::singleton(1);
        let x = GroupVector::basis(s3.generator(1));
        let y = mu(&s3, i, &x).unwrap();
        assert_eq!(y.len(), 3);
        let id = mu(&s3, i, &GroupVector::basis(s3.identity())).unwrap();
        let reps = s3.min_coset_reps(i, Side::Left).unwrap();
        assert_eq!(id, FormalVector::from_keys(reps.iter().cloned()));
    }

    #[test]
    fn mu_rejects_outside_keys() {
        let s3 = CoxeterSystem::a(3);
        let x = GroupVector::basis(s3.generator(2));
        assert!(matches!(mu(&s3, SubsetMask::singleton(1), &x), Err(Error::OutsideParabolic(_))));
    }

    #[test]
    fn full_subset_maps_are_identities() {
        let b2 = CoxeterSystem::b(2);
        let s = b2.full_set();
        for w in b2.elements().unwrap().iter() {
            let x = GroupVector::basis(w.clone());
            assert_eq!(mu(&b2, s, &x).unwrap(), x);
            assert_eq!(rho_bar(&b2, s, &x).unwrap(), x);
        }
    }
}
