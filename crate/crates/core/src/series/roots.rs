//! Root systems of types A, B and D, parsets, P-partitions and Jordan-Hölder sets.

use std::collections::BTreeSet;
use std::fmt;

use num::rational::Ratio;
use num::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use super::{words, NCSeries, Word};
use crate::coxeter::{CoxeterSystem, Element, Family};
use crate::error::{Error, Result};
use crate::subset::SubsetMask;

/// The shape of a root up to sign.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RootKind {
    /// `e_i`
    Unit(usize),
    /// `e_j - e_i` with `i < j`
    Diff(usize, usize),
    /// `e_j + e_i` with `i < j`
    Sum(usize, usize),
}

/// A vector of `R^n` with integer coordinates, used for roots.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(Vec<i32>);

impl Root {
    pub fn from_coords(c: Vec<i32>) -> Self {
        Root(c)
    }

    /// `e_i` in `R^n`, 1-based.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut c = vec![0; n];
        c[i - 1] = 1;
        Root(c)
    }

    /// `e_j - e_i`.
    pub fn diff(n: usize, j: usize, i: usize) -> Self {
        let mut c = vec![0; n];
        c[j - 1] += 1;
        c[i - 1] -= 1;
        Root(c)
    }

    /// `e_j + e_i`.
    pub fn sum(n: usize, j: usize, i: usize) -> Self {
        let mut c = vec![0; n];
        c[j - 1] += 1;
        c[i - 1] += 1;
        Root(c)
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|x| -x).collect())
    }

    /// Positive iff the last nonzero coordinate is positive; this matches
    /// the simple roots fixed for A, B and D.
    pub fn is_positive(&self) -> bool {
        self.0.iter().rev().find(|&&x| x != 0).is_some_and(|&x| x > 0)
    }

    /// Shape and sign: `(kind, +1)` or `(kind, -1)`.
    pub fn kind(&self) -> Option<(RootKind, i32)> {
        let nz: Vec<(usize, i32)> =
            self.0.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, &x)| (i + 1, x)).collect();
        match nz[..] {
            [(i, x)] if x.abs() == 1 => Some((RootKind::Unit(i), x)),
            [(i, x), (j, y)] if x.abs() == 1 && y.abs() == 1 => {
                if x == y {
                    Some((RootKind::Sum(j, i), y))
                } else {
                    Some((RootKind::Diff(j, i), y))
                }
            }
            _ => None,
        }
    }

    /// `w(alpha)`, where `w e_i = sgn(w(i)) e_{|w(i)|}`.
    pub fn act(&self, w: &Element) -> Root {
        let mut c = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            let t = w.window()[i];
            c[t.unsigned_abs() as usize - 1] += x * t.signum();
        }
        Root(c)
    }

    /// The standard inner product `(alpha, f)`.
    pub fn pair(&self, f: &[i32]) -> i64 {
        self.0.iter().zip(f).map(|(&a, &b)| a as i64 * b as i64).sum()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &x) in self.0.iter().enumerate().rev() {
            if x == 0 {
                continue;
            }
            let sign = if x < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = if x.abs() == 1 { String::new() } else { x.abs().to_string() };
            write!(f, "{sign}{mag}e{}", i + 1)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `Phi^+` in the realization fixed for each family.
pub fn positive_roots(sys: &CoxeterSystem) -> Vec<Root> {
    let n = sys.n();
    let mut out = Vec::new();
    if sys.family() == Family::B {
        out.extend((1..=n).map(|i| Root::unit(n, i)));
    }
    for j in 1..=n {
        for i in 1..j {
            out.push(Root::diff(n, j, i));
            if sys.family() != Family::A {
                out.push(Root::sum(n, j, i));
            }
        }
    }
    out
}

/// `Phi = Phi^+ u Phi^-`.
pub fn roots(sys: &CoxeterSystem) -> Vec<Root> {
    let pos = positive_roots(sys);
    let neg: Vec<Root> = pos.iter().map(Root::neg).collect();
    pos.into_iter().chain(neg).collect()
}

/// The simple root `alpha_s`.
pub fn simple_root(sys: &CoxeterSystem, s: usize) -> Root {
    let n = sys.n();
    match (s, sys.family()) {
        (0, Family::B) => Root::unit(n, 1),
        (0, Family::D) => Root::sum(n, 2, 1),
        (s, _) => Root::diff(n, s + 1, s),
    }
}

/// `Phi^+_K`, the positive roots of the parabolic subgroup `W_K`.
pub fn parabolic_positive_roots(sys: &CoxeterSystem, k: SubsetMask) -> Result<Vec<Root>> {
    let mut out = BTreeSet::new();
    for w in sys.parabolic(k)?.iter() {
        for s in k.iter() {
            let r = simple_root(sys, s).act(w);
            if r.is_positive() {
                out.insert(r);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// `w Phi^+`.
pub fn inversion_image(sys: &CoxeterSystem, w: &Element) -> Vec<Root> {
    positive_roots(sys).iter().map(|r| r.act(w)).collect()
}

type R = Ratio<i64>;

/// Unique solution of `sum c_i gens_i = target`, if the columns are independent and it exists.
#[allow(clippy::needless_range_loop)]
fn solve_small(gens: &[&Root], target: &Root) -> Option<Vec<R>> {
    let n = target.0.len();
    let k = gens.len();
    let mut a: Vec<Vec<R>> = (0..n)
        .map(|r| {
            let mut row: Vec<R> = gens.iter().map(|g| R::from_integer(g.0[r] as i64)).collect();
            row.push(R::from_integer(target.0[r] as i64));
            row
        })
        .collect();
    let mut row = 0;
    for col in 0..k {
        let p = (row..n).find(|&i| !a[i][col].is_zero())?;
        a.swap(row, p);
        let inv = a[row][col].recip();
        for x in a[row].iter_mut() {
            *x *= inv;
        }
        for i in 0..n {
            if i != row && !a[i][col].is_zero() {
                let f = a[i][col];
                for j in 0..=k {
                    let t = a[row][j] * f;
                    a[i][j] -= t;
                }
            }
        }
        row += 1;
    }
    if a[row..].iter().any(|r| !r[k].is_zero()) {
        return None;
    }
    Some((0..k).map(|i| a[i][k]).collect())
}

/// Whether `target` is a positive combination of members of `gens`.
///
/// By Carathéodory it suffices to try linearly independent subsets of size at
/// most the dimension, which is what the exhaustive subset search does.
pub fn in_positive_cone(gens: &[Root], target: &Root) -> bool {
    let dim = target.0.len();
    let idx: Vec<usize> = (0..gens.len()).collect();
    for size in 1..=dim.min(gens.len()) {
        for combo in itertools::Itertools::combinations(idx.iter(), size) {
            let cols: Vec<&Root> = combo.iter().map(|&&i| &gens[i]).collect();
            if let Some(c) = solve_small(&cols, target) {
                if c.iter().all(|x| x.is_positive()) {
                    return true;
                }
            }
        }
    }
    false
}

/// `Phi` intersected with the positive cone of `gens`.
pub fn cone_closure(sys: &CoxeterSystem, gens: &[Root]) -> BTreeSet<Root> {
    roots(sys).into_iter().filter(|r| gens.contains(r) || in_positive_cone(gens, r)).collect()
}

/// A partial root system: no opposite pair, closed under positive combinations inside `Phi`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Parset {
    n: usize,
    roots: BTreeSet<Root>,
}

impl Parset {
    /// Validates `roots` against the root system of `sys`.
    pub fn new(sys: &CoxeterSystem, roots: impl IntoIterator<Item = Root>) -> Result<Self> {
        let set: BTreeSet<Root> = roots.into_iter().collect();
        let phi: BTreeSet<Root> = self::roots(sys).into_iter().collect();
        if let Some(r) = set.iter().find(|r| !phi.contains(r)) {
            return Err(Error::Invalid(format!("{r} is not a root of {sys}")));
        }
        if let Some(r) = set.iter().find(|r| set.contains(&r.neg())) {
            return Err(Error::Invalid(format!("parset contains both {r} and its negative")));
        }
        let gens: Vec<Root> = set.iter().cloned().collect();
        if let Some(r) = phi.iter().find(|r| !set.contains(r) && in_positive_cone(&gens, r)) {
            return Err(Error::Invalid(format!("{r} is a positive combination of the parset but missing")));
        }
        Ok(Parset { n: sys.n(), roots: set })
    }

    pub fn empty(sys: &CoxeterSystem) -> Self {
        Parset { n: sys.n(), roots: BTreeSet::new() }
    }

    /// `w Phi^+`.
    pub fn of_element(sys: &CoxeterSystem, w: &Element) -> Self {
        Parset { n: sys.n(), roots: inversion_image(sys, w).into_iter().collect() }
    }

    /// `u Phi^+_K`.
    pub fn parabolic(sys: &CoxeterSystem, u: &Element, k: SubsetMask) -> Result<Self> {
        let roots = parabolic_positive_roots(sys, k)?.iter().map(|r| r.act(u)).collect();
        Ok(Parset { n: sys.n(), roots })
    }

    pub fn roots(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter()
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.roots.contains(r)
    }

    pub fn is_p_partition(&self, f: &[i32]) -> bool {
        self.roots.iter().all(|r| {
            let p = r.pair(f);
            if r.is_positive() {
                p >= 0
            } else {
                p > 0
            }
        })
    }

    /// `A(P)` truncated to `[-m, m]^n`.
    pub fn p_partitions(&self, m: i32) -> Vec<Word> {
        words(self.n, -m, m).into_iter().filter(|f| self.is_p_partition(f)).collect()
    }

    /// The generating function `F_P` truncated to the window `m`.
    pub fn series(&self, m: i32) -> NCSeries {
        NCSeries::from_words(self.n, m, self.p_partitions(m)).expect("words lie in the window")
    }

    /// `L(P) = {w : P inside w Phi^+}`.
    pub fn jordan_holder(&self, sys: &CoxeterSystem) -> Result<Vec<Element>> {
        Ok(sys
            .elements()?
            .iter()
            .filter(|w| {
                let wi = w.inverse();
                self.roots.iter().all(|r| r.act(&wi).is_positive())
            })
            .cloned()
            .collect())
    }
}

/// A random parset: the closure of a few random roots, retried until free of opposite pairs.
pub fn random_parset<G: Rng>(sys: &CoxeterSystem, rng: &mut G) -> Parset {
    let phi = roots(sys);
    loop {
        let k = rng.gen_range(0..=sys.n().max(1) + 1);
        let gens: Vec<Root> = phi.choose_multiple(rng, k).cloned().collect();
        let set = cone_closure(sys, &gens);
        if set.iter().all(|r| !set.contains(&r.neg())) {
            return Parset { n: sys.n(), roots: set };
        }
    }
}

/// Membership `f in A(w^{-1} Phi^+)` through the sign conditions on `(f, alpha)` for `alpha > 0`.
pub fn in_inverse_chamber(sys: &CoxeterSystem, w: &Element, f: &[i32]) -> bool {
    positive_roots(sys).iter().all(|a| {
        let p = a.pair(f);
        if a.act(w).is_positive() {
            p >= 0
        } else {
            p < 0
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts() {
        assert_eq!(positive_roots(&CoxeterSystem::a(4)).len(), 6);
        assert_eq!(positive_roots(&CoxeterSystem::b(3)).len(), 9);
        assert_eq!(positive_roots(&CoxeterSystem::d(4)).len(), 12);
    }

    #[test]
    fn descents_match_simple_roots() {
        for sys in [CoxeterSystem::a(4), CoxeterSystem::b(3), CoxeterSystem::d(3)] {
            for w in sys.elements().unwrap().iter() {
                for s in sys.generators() {
                    assert_eq!(sys.is_descent(w, s), !simple_root(&sys, s).act(w).is_positive());
                }
            }
        }
    }

    #[test]
    fn cone_membership() {
        let n = 2;
        let gens = [Root::unit(n, 1), Root::diff(n, 2, 1)];
        assert!(in_positive_cone(&gens, &Root::unit(n, 2)));
        assert!(in_positive_cone(&gens, &Root::sum(n, 2, 1)));
        assert!(!in_positive_cone(&gens, &Root::unit(n, 1).neg()));
    }

    #[test]
    fn parset_validation() {
        let b2 = CoxeterSystem::b(2);
        assert!(Parset::new(&b2, [Root::unit(2, 1), Root::diff(2, 2, 1)]).is_err());
        assert!(Parset::new(&b2, [Root::unit(2, 1), Root::unit(2, 1).neg()]).is_err());
        assert!(Parset::new(&b2, positive_roots(&b2)).is_ok());
    }

    #[test]
    fn empty_parset_and_chambers() {
        let a2 = CoxeterSystem::a(2);
        assert_eq!(Parset::empty(&a2).p_partitions(1).len(), 9);
        let p = Parset::new(&a2, [Root::diff(2, 2, 1)]).unwrap();
        assert!(p.p_partitions(2).iter().all(|f| f[0] <= f[1]));
        assert_eq!(p.jordan_holder(&a2).unwrap(), vec![a2.identity()]);
    }

    #[test]
    fn root_display_and_kind() {
        let r = Root::sum(3, 3, 1);
        assert_eq!(r.to_string(), "e3+e1");
        assert_eq!(r.neg().kind(), Some((RootKind::Sum(3, 1), -1)));
        assert_eq!(Root::diff(3, 2, 1).to_string(), "e2-e1");
    }
}
