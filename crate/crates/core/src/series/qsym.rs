//! Commutative images: `chi`, the monomial and fundamental quasisymmetric
//! bases of types A, B and D, and the symmetric families.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use super::{basis_element, check_key, key_of, monomial, words, BasisKind, CPoly, Construction, NCSeries};
use crate::coxeter::Family;
use crate::error::{Error, Result};
use crate::linalg::{q, rank, solve, QMatrix, Q};
use crate::subset::{Composition, SubsetMask};
use crate::vector::FormalVector;

/// `x_i -> x_i` on positive letters; words with other letters vanish.
pub fn chi_a(x: &NCSeries) -> CPoly {
    let mut out = CPoly::zero(x.degree(), x.window());
    for (f, c) in x.iter() {
        if f.iter().all(|&i| i > 0) {
            out.add_monomial(f.iter().copied(), c).expect("degree matches");
        }
    }
    out
}

/// `x_i -> x_{|i|}`.
pub fn chi_b(x: &NCSeries) -> CPoly {
    let mut out = CPoly::zero(x.degree(), x.window());
    for (f, c) in x.iter() {
        out.add_monomial(f.iter().map(|i| i.abs()), c).expect("degree matches");
    }
    out
}

/// Absolute values sorted, the smallest one carrying the sign `(-1)^neg(f)`.
pub fn chi_d(x: &NCSeries) -> CPoly {
    let mut out = CPoly::zero(x.degree(), x.window());
    for (f, c) in x.iter() {
        out.add_monomial(chi_d_word(f), c).expect("degree matches");
    }
    out
}

fn chi_d_word(f: &[i32]) -> Vec<i32> {
    let mut m: Vec<i32> = f.iter().map(|i| i.abs()).collect();
    m.sort_unstable();
    if f.iter().filter(|&&i| i < 0).count() % 2 == 1 {
        if let Some(first) = m.first_mut() {
            *first = -*first;
        }
    }
    m
}

/// How the index `i_0` in front of a sequence is fixed.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Start {
    /// No `i_0`; indices from 1.
    None,
    /// `i_0 = 0`; indices from 0.
    Zero,
    /// `i_0 = -i_2`; indices from `-m`.
    Mirror,
}

/// `sum x_{i_1} ... x_{i_n}` over weakly increasing `i` whose strict steps are
/// prescribed by `d` (exactly, or at least).
fn sequence_sum(start: Start, n: usize, m: i32, d: SubsetMask, exact: bool) -> CPoly {
    let lo = match start {
        Start::None => 1,
        Start::Zero => 0,
        Start::Mirror => -m,
    };
    let mut out = CPoly::zero(n, m);
    for seq in words(n, lo, m) {
        if seq.windows(2).any(|p| p[0] > p[1]) {
            continue;
        }
        let first = match start {
            Start::None => None,
            Start::Zero => Some(0),
            Start::Mirror => Some(-seq[1]),
        };
        if first.is_some_and(|z| z > seq[0]) {
            continue;
        }
        let steps = first.into_iter().chain(seq.iter().copied()).tuple_windows::<(i32, i32)>();
        let offset = if first.is_some() { 0 } else { 1 };
        let ok = steps.enumerate().all(|(k, (a, b))| {
            let strict = a < b;
            if d.contains(k + offset) {
                strict
            } else {
                !(exact && strict)
            }
        });
        if ok {
            out.add_monomial(seq, 1).expect("degree matches");
        }
    }
    out
}

fn start_of(family: Family) -> Start {
    match family {
        Family::A => Start::None,
        Family::B => Start::Zero,
        Family::D => Start::Mirror,
    }
}

/// `M_alpha`, `M^B_alpha` or `M^D_alpha`.
pub fn monomial_qsym(family: Family, alpha: &Composition, m: i32) -> Result<CPoly> {
    let d = check_key(family, alpha)?;
    Ok(sequence_sum(start_of(family), alpha.size(), m, d, true))
}

/// `F_alpha`, `F^B_alpha` or `F^D_alpha`.
pub fn fundamental_qsym(family: Family, alpha: &Composition, m: i32) -> Result<CPoly> {
    let d = check_key(family, alpha)?;
    Ok(sequence_sum(start_of(family), alpha.size(), m, d, false))
}

/// `h_k` in the positive variables.
pub fn h_k(k: usize, m: i32) -> CPoly {
    sequence_sum(Start::None, k, m, SubsetMask::EMPTY, false)
}

/// `h_lambda = h_{lambda_1} h_{lambda_2} ...`.
pub fn h_sym(lambda: &Composition, m: i32) -> Result<CPoly> {
    lambda.parts().iter().try_fold(CPoly::one(m), |acc, &k| acc.mul(&h_k(k, m)))
}

/// `m_lambda`: the sum of `M_alpha` over distinct rearrangements of `lambda`.
pub fn m_sym(lambda: &Composition, m: i32) -> Result<CPoly> {
    if !lambda.is_plain() {
        return Err(Error::Invalid(format!("{lambda} has a zero part")));
    }
    let parts = lambda.parts();
    let orders: BTreeSet<Vec<usize>> = parts.iter().copied().permutations(parts.len()).collect();
    let mut out = CPoly::zero(lambda.size(), m);
    for alpha in orders {
        out = out.add(&monomial_qsym(Family::A, &Composition::new(alpha), m)?)?;
    }
    Ok(out)
}

/// `x_0^k`.
pub fn x0_power(k: usize, m: i32) -> CPoly {
    CPoly::var(0, m).pow(k).expect("same window")
}

/// `h^B_k = sum_i x_0^i h_{k-i}`.
pub fn hb_k(k: usize, m: i32) -> Result<CPoly> {
    let mut out = CPoly::zero(k, m);
    for i in 0..=k {
        out = out.add(&x0_power(i, m).mul(&h_k(k - i, m))?)?;
    }
    Ok(out)
}

/// `chi^B(h_k) = sum_{a+b+c=k} h_a x_0^b h_c`.
pub fn chi_b_h_k(k: usize, m: i32) -> Result<CPoly> {
    let mut out = CPoly::zero(k, m);
    for a in 0..=k {
        for b in 0..=k - a {
            let t = h_k(a, m).mul(&x0_power(b, m))?.mul(&h_k(k - a - b, m))?;
            out = out.add(&t)?;
        }
    }
    Ok(out)
}

/// `h^B_alpha = h^B_{alpha_1} chi^B(h_{alpha_2}) ...`; depends only on the pseudo-partition of `alpha`.
pub fn hb_sym(alpha: &Composition, m: i32) -> Result<CPoly> {
    check_key(Family::B, alpha)?;
    let parts = alpha.parts();
    let mut out = hb_k(parts[0], m)?;
    for &k in &parts[1..] {
        out = out.mul(&chi_b_h_k(k, m)?)?;
    }
    Ok(out)
}

/// `m^B_lambda = x_0^{lambda_1} m_{(lambda_2, ...)}`.
pub fn mb_sym(lambda: &Composition, m: i32) -> Result<CPoly> {
    check_key(Family::B, lambda)?;
    let parts = lambda.parts();
    x0_power(parts[0], m).mul(&m_sym(&Composition::new(parts[1..].to_vec()), m)?)
}

/// `s_alpha = chi(s_alpha)` in the family of `kind`.
pub fn ribbon_qsym(kind: BasisKind, alpha: &Composition, m: i32) -> Result<CPoly> {
    let x = basis_element(kind, alpha, m, Construction::Tableau)?;
    Ok(match kind.family() {
        Family::A => chi_a(&x),
        Family::B => chi_b(&x),
        Family::D => chi_d(&x),
    })
}

/// Named commutative families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QsymKind {
    M,
    F,
    MB,
    FB,
    MD,
    FD,
    H,
    Mono,
    HB,
    MonoB,
    SA,
    SB,
    SD,
}

impl QsymKind {
    pub const ALL: [QsymKind; 13] = [
        QsymKind::M,
        QsymKind::F,
        QsymKind::MB,
        QsymKind::FB,
        QsymKind::MD,
        QsymKind::FD,
        QsymKind::H,
        QsymKind::Mono,
        QsymKind::HB,
        QsymKind::MonoB,
        QsymKind::SA,
        QsymKind::SB,
        QsymKind::SD,
    ];

    pub fn name(self) -> &'static str {
        match self {
            QsymKind::M => "M",
            QsymKind::F => "F",
            QsymKind::MB => "MB",
            QsymKind::FB => "FB",
            QsymKind::MD => "MD",
            QsymKind::FD => "FD",
            QsymKind::H => "h",
            QsymKind::Mono => "m",
            QsymKind::HB => "hB",
            QsymKind::MonoB => "mB",
            QsymKind::SA => "sA",
            QsymKind::SB => "sB",
            QsymKind::SD => "sD",
        }
    }
}

impl fmt::Display for QsymKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for QsymKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        QsymKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown commutative basis {s:?}")))
    }
}

pub fn qsym_basis(kind: QsymKind, key: &Composition, m: i32) -> Result<CPoly> {
    match kind {
        QsymKind::M => monomial_qsym(Family::A, key, m),
        QsymKind::F => fundamental_qsym(Family::A, key, m),
        QsymKind::MB => monomial_qsym(Family::B, key, m),
        QsymKind::FB => fundamental_qsym(Family::B, key, m),
        QsymKind::MD => monomial_qsym(Family::D, key, m),
        QsymKind::FD => fundamental_qsym(Family::D, key, m),
        QsymKind::H => {
            check_key(Family::A, key)?;
            h_sym(key, m)
        }
        QsymKind::Mono => m_sym(key, m),
        QsymKind::HB => hb_sym(key, m),
        QsymKind::MonoB => mb_sym(key, m),
        QsymKind::SA => ribbon_qsym(BasisKind::SA, key, m),
        QsymKind::SB => ribbon_qsym(BasisKind::SB, key, m),
        QsymKind::SD => ribbon_qsym(BasisKind::SD, key, m),
    }
}

/// `M^D_alpha` through its four-case closed form.
pub fn md_closed_form(alpha: &Composition, m: i32) -> Result<CPoly> {
    check_key(Family::D, alpha)?;
    let parts = alpha.parts();
    let n = alpha.size();
    let rest = |from: usize| Composition::new(parts[from..].to_vec());
    if parts[0] >= 2 || (parts[0] == 0 && parts[1] >= 2) {
        return monomial_qsym(Family::B, alpha, m);
    }
    let mut out = CPoly::zero(n, m);
    if parts[0] == 1 {
        // x_{-j_2} x_{j_2}^{a_2} ... over 0 < j_2 < ... < j_l
        for js in (1..=m).combinations(parts.len() - 1) {
            let mut idx = vec![-js[0]];
            for (&j, &a) in js.iter().zip(&parts[1..]) {
                idx.extend(std::iter::repeat_n(j, a));
            }
            out.add_monomial(idx, 1)?;
        }
    } else {
        // x_{j_2} x_{j_3}^{a_3} ... over -j_3 < j_2 < j_3 < ... < j_l
        let tail = rest(2);
        for j2 in -m..=m {
            for js in (1..=m).filter(|&j| j > j2).combinations(tail.len()) {
                if js.first().is_some_and(|&j3| -j3 >= j2) {
                    continue;
                }
                let mut idx = vec![j2];
                for (&j, &a) in js.iter().zip(tail.parts()) {
                    idx.extend(std::iter::repeat_n(j, a));
                }
                out.add_monomial(idx, 1)?;
            }
        }
    }
    Ok(out)
}

/// `alpha_{<= i}` and `alpha_{> i}`: the descent set of `alpha` cut at `i`.
pub fn split_key(family: Family, alpha: &Composition, i: usize) -> Result<(Composition, Composition)> {
    let d = check_key(family, alpha)?;
    let n = alpha.size();
    if i > n {
        return Err(Error::Invalid(format!("cut {i} beyond size {n}")));
    }
    let low = SubsetMask::from_indices(d.iter().filter(|&j| j < i));
    let high = SubsetMask::from_indices(d.iter().filter(|&j| j > i).map(|j| j - i));
    Ok((key_of(family, low, i)?, key_of(Family::A, high, n - i)?))
}

/// The terms of `Delta F_alpha`: cuts from 0 (types A, B) or 2 (type D) up to `n`.
pub fn fundamental_coaction(family: Family, alpha: &Composition) -> Result<Vec<(Composition, Composition)>> {
    let start = if family == Family::D { 2 } else { 0 };
    (start..=alpha.size()).map(|i| split_key(family, alpha, i)).collect()
}

/// The terms of `Delta M_alpha`: cuts between parts, from the first prefix of
/// admissible size.
pub fn monomial_coaction(family: Family, alpha: &Composition) -> Result<Vec<(Composition, Composition)>> {
    check_key(family, alpha)?;
    let parts = alpha.parts();
    let first = match family {
        Family::A => 0,
        Family::B => 1,
        Family::D => (1..=parts.len()).find(|&j| parts[..j].iter().sum::<usize>() >= 2).unwrap_or(parts.len()),
    };
    Ok((first..=parts.len())
        .map(|j| (Composition::new(parts[..j].to_vec()), Composition::new(parts[j..].to_vec())))
        .collect())
}

/// Exact coefficients of `target` in the span of `basis`.
///
/// The basis vectors must be independent in the given coordinates.
pub fn express_in_basis<K: Ord + Clone>(target: &FormalVector<K>, basis: &[FormalVector<K>]) -> Result<Vec<Q>> {
    let keys: Vec<K> = basis
        .iter()
        .flat_map(|b| b.keys().cloned())
        .chain(target.keys().cloned())
        .collect::<BTreeSet<K>>()
        .into_iter()
        .collect();
    let a: QMatrix = keys.iter().map(|k| basis.iter().map(|b| q(b.coeff(k))).collect()).collect();
    if rank(&a) < basis.len() {
        return Err(Error::Invalid("basis vectors are dependent at this truncation".into()));
    }
    let rhs: Vec<Q> = keys.iter().map(|k| q(target.coeff(k))).collect();
    solve(&a, &rhs).ok_or_else(|| Error::NotInSpan("target is not a combination of the basis".into()))
}

/// Canonical commutative monomial of a word under `chi^D`.
pub fn chi_d_monomial(f: &[i32]) -> Vec<i32> {
    monomial(chi_d_word(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qfrac;

    #[test]
    fn chi_d_is_not_multiplicative() {
        let x = NCSeries::from_words(2, 2, [vec![-2, 1]]).unwrap();
        assert_eq!(chi_d(&x).coeff(&vec![-1, 2]), 1);
        assert_eq!(chi_d_monomial(&[-2]), vec![-2]);
    }

    #[test]
    fn fundamental_sums_monomials() {
        let f = fundamental_qsym(Family::B, &Composition::new(vec![0, 2]), 3).unwrap();
        let sum = monomial_qsym(Family::B, &Composition::new(vec![0, 2]), 3)
            .unwrap()
            .add(&monomial_qsym(Family::B, &Composition::new(vec![0, 1, 1]), 3).unwrap())
            .unwrap();
        assert_eq!(f, sum);
    }

    #[test]
    fn md_four_cases() {
        for n in 2..=3 {
            for alpha in Composition::all(n, true) {
                assert_eq!(md_closed_form(&alpha, 3).unwrap(), monomial_qsym(Family::D, &alpha, 3).unwrap(), "{alpha}");
            }
        }
    }

    #[test]
    fn solver_reports_span_failures() {
        let e = |k: u32| FormalVector::basis(k);
        let basis = [e(1).add(&e(2)), e(2)];
        let x = e(1).scale(3).add(&e(2));
        assert_eq!(express_in_basis(&x, &basis).unwrap(), vec![q(3), qfrac(-2, 1)]);
        assert!(matches!(express_in_basis(&e(3), &basis), Err(Error::NotInSpan(_))));
        assert!(express_in_basis(&x, &[e(1), e(1)]).is_err());
    }
}
