//! The `F`/`s` bases of the free quasisymmetric modules and the noncommutative
//! ribbon and complete families built from them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::{words, NCSeries, Parset, Word};
use crate::coxeter::{CoxeterSystem, Element, Family};
use crate::error::{Error, Result};
use crate::shuffle::{st, st_b, st_d_left, Coproduct, Product};
use crate::subset::{Composition, SubsetMask};
use crate::vector::{tensor, FormalVector};

pub fn system_of(family: Family, n: usize) -> Result<CoxeterSystem> {
    CoxeterSystem::on_letters(family, n)
}

/// `F_w`, the generating function of `A(w Phi^+)`.
pub fn f_series(sys: &CoxeterSystem, w: &Element, m: i32) -> NCSeries {
    Parset::of_element(sys, w).series(m)
}

/// `s_w = F_{w^{-1}}`.
pub fn s_series(sys: &CoxeterSystem, w: &Element, m: i32) -> NCSeries {
    f_series(sys, &w.inverse(), m)
}

/// The standardization whose fibres are the supports of the `s` basis.
pub fn standardize(family: Family, f: &[i32]) -> Result<Element> {
    match family {
        Family::A => Ok(st(f)),
        Family::B => Ok(st_b(f)),
        Family::D => st_d_left(f),
    }
}

/// Every `s_w` at once, by sorting the word cube into standardization fibres.
pub fn s_series_all(sys: &CoxeterSystem, m: i32) -> Result<BTreeMap<Element, NCSeries>> {
    let n = sys.n();
    let mut out: BTreeMap<Element, NCSeries> =
        sys.elements()?.iter().map(|w| (w.clone(), NCSeries::zero(n, m))).collect();
    for f in words(n, -m, m) {
        let w = standardize(sys.family(), &f)?;
        out.get_mut(&w).ok_or_else(|| Error::InvalidElement(format!("{w} outside the group")))?.try_add_term(f, 1)?;
    }
    Ok(out)
}

/// Which of the two dual bases of the free quasisymmetric module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Level {
    F,
    S,
}

impl FromStr for Level {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "F" | "f" => Ok(Level::F),
            "s" | "S" => Ok(Level::S),
            _ => Err(Error::Parse(format!("unknown basis level {s:?}, expected F or s"))),
        }
    }
}

/// `F_w` or `s_w`.
pub fn level_series(sys: &CoxeterSystem, level: Level, w: &Element, m: i32) -> NCSeries {
    match level {
        Level::F => f_series(sys, w, m),
        Level::S => s_series(sys, w, m),
    }
}

/// Noncommutative ribbon (`s`) and complete (`h`) families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisKind {
    SA,
    HA,
    SB,
    HB,
    SD,
    HD,
}

impl BasisKind {
    pub const ALL: [BasisKind; 6] =
        [BasisKind::SA, BasisKind::HA, BasisKind::SB, BasisKind::HB, BasisKind::SD, BasisKind::HD];

    pub fn family(self) -> Family {
        match self {
            BasisKind::SA | BasisKind::HA => Family::A,
            BasisKind::SB | BasisKind::HB => Family::B,
            BasisKind::SD | BasisKind::HD => Family::D,
        }
    }

    pub fn is_complete(self) -> bool {
        matches!(self, BasisKind::HA | BasisKind::HB | BasisKind::HD)
    }

    pub fn name(self) -> &'static str {
        match self {
            BasisKind::SA => "sA",
            BasisKind::HA => "hA",
            BasisKind::SB => "sB",
            BasisKind::HB => "hB",
            BasisKind::SD => "sD",
            BasisKind::HD => "hD",
        }
    }
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BasisKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BasisKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown basis kind {s:?}")))
    }
}

/// How a basis element is built.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    /// Sums of `s_w` over descent classes.
    DescentClass,
    /// Parabolic parset generating functions; `s` by inclusion-exclusion.
    Parset,
    /// Semistandard (pseudo-)ribbon fillings.
    Tableau,
}

impl FromStr for Construction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "class" | "descent-class" => Ok(Construction::DescentClass),
            "parset" => Ok(Construction::Parset),
            "tableau" => Ok(Construction::Tableau),
            _ => Err(Error::Parse(format!("unknown construction {s:?}"))),
        }
    }
}

/// Checks that `alpha` is a key for `family` and returns its descent set.
pub fn check_key(family: Family, alpha: &Composition) -> Result<SubsetMask> {
    let ok = match family {
        Family::A => alpha.is_plain(),
        Family::B => alpha.is_pseudo(),
        Family::D => alpha.is_pseudo() && alpha.size() >= 2,
    };
    if !ok {
        return Err(Error::Invalid(format!("{alpha} is not a key for type {family}")));
    }
    Ok(alpha.descent_set())
}

/// The composition of `n` in `family` with descent set `d`.
pub fn key_of(family: Family, d: SubsetMask, n: usize) -> Result<Composition> {
    Composition::from_descent_set(d, n, family != Family::A)
}

/// `s_alpha` or `h_alpha` truncated to the window `m`.
pub fn basis_element(kind: BasisKind, alpha: &Composition, m: i32, how: Construction) -> Result<NCSeries> {
    let family = kind.family();
    let set = check_key(family, alpha)?;
    let n = alpha.size();
    let sys = system_of(family, n)?;
    let full = sys.full_set();
    match (how, kind.is_complete()) {
        (Construction::DescentClass, complete) => {
            let mut out = NCSeries::zero(n, m);
            for w in sys.elements()?.iter() {
                let d = sys.descent_set(w);
                if d == set || (complete && d.is_subset(set)) {
                    out = out.add(&s_series(&sys, w, m))?;
                }
            }
            Ok(out)
        }
        (Construction::Parset, true) => Ok(Parset::parabolic(&sys, &sys.identity(), full.difference(set))?.series(m)),
        (Construction::Parset, false) => {
            let mut out = NCSeries::zero(n, m);
            for j in set.subsets() {
                let h = Parset::parabolic(&sys, &sys.identity(), full.difference(j))?.series(m);
                let sign = if (set.len() - j.len()) % 2 == 0 { 1 } else { -1 };
                out = out.add(&h.scale(sign))?;
            }
            Ok(out)
        }
        (Construction::Tableau, complete) => {
            if n == 0 {
                return Ok(NCSeries::one(m));
            }
            let subsets = if complete { set.subsets() } else { vec![set] };
            let mut out = NCSeries::zero(n, m);
            for j in subsets {
                out = out.add(&super::tableau_series(family, &key_of(family, j, n)?, m)?)?;
            }
            Ok(out)
        }
    }
}

/// Weakly increasing words of length `k` over `[lo, m]`.
fn increasing_words(k: usize, lo: i32, m: i32) -> Vec<Word> {
    words(k, lo, m).into_iter().filter(|f| f.windows(2).all(|p| p[0] <= p[1])).collect()
}

/// `h_k`: weakly increasing words over the whole window.
pub fn h_series(k: usize, m: i32) -> NCSeries {
    NCSeries::from_words(k, m, increasing_words(k, -m, m)).expect("in window")
}

/// `h^B_k`: weakly increasing words of nonnegative letters.
pub fn hb_series(k: usize, m: i32) -> NCSeries {
    NCSeries::from_words(k, m, increasing_words(k, 0, m)).expect("in window")
}

/// `x_i^k`.
pub fn letter_power(i: i32, k: usize, m: i32) -> Result<NCSeries> {
    NCSeries::from_words(k, m, [vec![i; k]])
}

/// `h^B_{a_1} h_{a_2} ... h_{a_l}` (type B) or `h_{a_1} ... h_{a_l}` (type A),
/// built block by block without the window rule on products.
pub fn h_product(family: Family, alpha: &Composition, m: i32) -> Result<NCSeries> {
    if family == Family::D {
        return Err(Error::Invalid("no block product form in type D".into()));
    }
    check_key(family, alpha)?;
    let blocks: Vec<Vec<Word>> = alpha
        .parts()
        .iter()
        .enumerate()
        .map(|(k, &p)| {
            let lo = if k == 0 && family == Family::B { 0 } else { -m };
            increasing_words(p, lo, m)
        })
        .collect();
    let mut acc: Vec<Word> = vec![vec![]];
    for block in &blocks {
        acc = acc
            .iter()
            .flat_map(|a| {
                block.iter().map(move |b| {
                    let mut w = a.clone();
                    w.extend_from_slice(b);
                    w
                })
            })
            .collect();
    }
    NCSeries::from_words(alpha.size(), m, acc)
}

/// Coefficients of `x` in the `F` or `s` basis of `sys`.
///
/// Each basis element has a word of its own in its support (the window of the
/// element), and these words are pairwise distinct, so the coefficients can be
/// read off directly; the expansion is then checked by reconstruction.
pub fn expand_in_basis(sys: &CoxeterSystem, level: Level, x: &NCSeries) -> Result<FormalVector<Element>> {
    if x.degree() != sys.n() {
        return Err(Error::Mismatch(format!("degree {} in a system on {} letters", x.degree(), sys.n())));
    }
    if (x.window() as usize) < sys.n() {
        return Err(Error::Window(format!("window {} below degree {}", x.window(), sys.n())));
    }
    let mut out = FormalVector::new();
    let mut rebuilt = NCSeries::zero(x.degree(), x.window());
    for w in sys.elements()?.iter() {
        let rep = match level {
            Level::S => w.window().to_vec(),
            Level::F => w.inverse().window().to_vec(),
        };
        let c = x.coeff(&rep);
        if c != 0 {
            out.try_add_term(w.clone(), c)?;
            rebuilt = rebuilt.add(&level_series(sys, level, w, x.window()).scale(c))?;
        }
    }
    if &rebuilt != x {
        return Err(Error::NotInSpan(format!("series is not a combination of {level:?} basis elements")));
    }
    Ok(out)
}

/// The product used on the `level` basis of `family`.
fn product_for(family: Family, level: Level) -> Product {
    match (family, level) {
        (Family::A, Level::F) => Product::ShuffleA,
        (Family::A, Level::S) => Product::CupA,
        (Family::B, Level::F) => Product::ShuffleB,
        (Family::B, Level::S) => Product::CupB,
        (Family::D, Level::F) => Product::ShuffleD,
        (Family::D, Level::S) => Product::CupD,
    }
}

fn coproduct_for(family: Family, level: Level) -> Coproduct {
    match (family, level) {
        (Family::A, Level::F) => Coproduct::UnshuffleA,
        (Family::A, Level::S) => Coproduct::CapA,
        (Family::B, Level::F) => Coproduct::UnshuffleB,
        (Family::B, Level::S) => Coproduct::CapB,
        (Family::D, Level::F) => Coproduct::UnshuffleD,
        (Family::D, Level::S) => Coproduct::CapD,
    }
}

fn check_window(m: i32, degree: usize) -> Result<()> {
    if (m as usize) < degree + 1 {
        return Err(Error::Window(format!("window {m} too small for degree {degree}")));
    }
    Ok(())
}

/// `X_u . Y_v` as a literal product of truncated series, where `u` lies in
/// `family` and `v` in the symmetric group.
pub fn action_by_product(family: Family, level: Level, u: &Element, v: &Element, m: i32) -> Result<NCSeries> {
    let left = level_series(&system_of(family, u.n())?, level, u, m);
    let right = level_series(&system_of(Family::A, v.n())?, level, v, m);
    left.mul(&right)
}

/// The same action through the shuffle combinatorics: `sum_{w in u * v} X_w`.
pub fn action_by_shuffle(family: Family, level: Level, u: &Element, v: &Element, m: i32) -> Result<NCSeries> {
    let n = u.n() + v.n();
    check_window(m, n)?;
    let sys = system_of(family, n)?;
    let mut out = NCSeries::zero(n, m);
    for (w, c) in product_for(family, level).apply(u, v)?.iter() {
        out = out.add(&level_series(&sys, level, w, m).scale(c))?;
    }
    Ok(out)
}

/// Pairs of words, the truncated form of a tensor of two series.
pub type WordTensor = FormalVector<(Word, Word)>;

pub fn tensor_series(x: &NCSeries, y: &NCSeries) -> WordTensor {
    tensor(x.terms(), y.terms())
}

/// The coaction on the element level.
pub fn coaction_terms(family: Family, level: Level, u: &Element) -> Result<FormalVector<(Element, Element)>> {
    coproduct_for(family, level).apply(u)
}

/// `Delta X_u = sum X_x (x) Y_y` evaluated on truncated series.
pub fn series_coaction(family: Family, level: Level, u: &Element, m: i32) -> Result<WordTensor> {
    let mut out = WordTensor::new();
    for ((x, y), c) in coaction_terms(family, level, u)?.iter() {
        let left = level_series(&system_of(family, x.n())?, level, x, m);
        let right = level_series(&system_of(Family::A, y.n())?, level, y, m);
        out.try_add_scaled(&tensor_series(&left, &right), c)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s_of_identity_is_weakly_increasing() {
        let sys = CoxeterSystem::a(2);
        let s = s_series(&sys, &sys.identity(), 2);
        assert_eq!(s.len(), 15);
        assert!(s.iter().all(|(f, _)| f[0] <= f[1]));
    }

    #[test]
    fn constructions_agree_in_small_cases() {
        for kind in BasisKind::ALL {
            let alpha = match kind.family() {
                Family::A => Composition::new(vec![1, 2]),
                _ => Composition::new(vec![0, 1, 1]),
            };
            let a = basis_element(kind, &alpha, 3, Construction::DescentClass).unwrap();
            let b = basis_element(kind, &alpha, 3, Construction::Parset).unwrap();
            let c = basis_element(kind, &alpha, 3, Construction::Tableau).unwrap();
            assert_eq!(a, b, "{kind}");
            assert_eq!(a, c, "{kind}");
        }
    }

    #[test]
    fn expansion_rejects_non_members() {
        let sys = CoxeterSystem::a(2);
        let x = NCSeries::from_words(2, 2, [vec![1, 1]]).unwrap();
        assert!(matches!(expand_in_basis(&sys, Level::S, &x), Err(Error::NotInSpan(_))));
    }

    #[test]
    fn shuffle_path_refuses_small_windows() {
        let u = Element::from_window(vec![-1]).unwrap();
        let v = Element::from_window(vec![2, 1]).unwrap();
        assert!(matches!(action_by_shuffle(Family::B, Level::F, &u, &v, 3), Err(Error::Window(_))));
    }
}
