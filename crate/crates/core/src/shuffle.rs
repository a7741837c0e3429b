//! Standardizations of integer words and the shuffle-type products and
//! coproducts on the group algebras of `S`, `B` and `D`.
//!
//! Products are generated constructively; the test suites compare them with
//! the set-builder definitions and with the parabolic maps.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::coxeter::Element;
use crate::error::{Error, Result};
use crate::maps::GroupVector;
use crate::vector::{FormalVector, TensorVector};

/// The permutation `w` with `w(i) < w(j)` iff `a_i <= a_j` for `i < j`.
pub fn st(a: &[i32]) -> Element {
    let mut order: Vec<usize> = (0..a.len()).collect();
    order.sort_by_key(|&i| (a[i], i));
    let mut w = vec![0; a.len()];
    for (rank, &i) in order.iter().enumerate() {
        w[i] = rank as i32 + 1;
    }
    Element::raw(w)
}

/// Signed standardization: same negative positions as `a`, absolute values
/// ordered by `|a|` with ties broken right to left among negatives, then left
/// to right among the rest.
pub fn st_b(a: &[i32]) -> Element {
    let mut order: Vec<usize> = (0..a.len()).collect();
    order.sort_by_key(|&i| {
        let neg = a[i] < 0;
        (a[i].unsigned_abs(), !neg, if neg { -(i as i64) } else { i as i64 })
    });
    let mut w = vec![0; a.len()];
    for (rank, &i) in order.iter().enumerate() {
        let r = rank as i32 + 1;
        w[i] = if a[i] < 0 { -r } else { r };
    }
    Element::raw(w)
}

fn negations(w: &Element) -> usize {
    w.window().iter().filter(|&&x| x < 0).count()
}

/// `^D st(a)`: `st_b(a)`, corrected on the left by `s_0^B` (negating the value 1) when odd.
pub fn st_d_left(a: &[i32]) -> Result<Element> {
    let w = st_b(a);
    if negations(&w).is_multiple_of(2) {
        return Ok(w);
    }
    if a.len() < 2 {
        return Err(Error::Invalid("type D standardization needs at least two letters".into()));
    }
    Ok(Element::raw(w.window().iter().map(|&x| if x.abs() == 1 { -x } else { x }).collect()))
}

/// `st^D(a)`: `st_b(a)`, corrected on the right by `s_0^B` (negating the first entry) when odd.
pub fn st_d_right(a: &[i32]) -> Result<Element> {
    let w = st_b(a);
    if negations(&w).is_multiple_of(2) {
        return Ok(w);
    }
    if a.len() < 2 {
        return Err(Error::Invalid("type D standardization needs at least two letters".into()));
    }
    let mut v = w.into_window();
    v[0] = -v[0];
    Ok(Element::raw(v))
}

/// Negative letters negated and read right to left, then the other letters left to right.
pub fn hat(a: &[i32]) -> Vec<i32> {
    let neg = a.iter().rev().filter(|&&x| x < 0).map(|&x| -x);
    neg.chain(a.iter().copied().filter(|&x| x >= 0)).collect()
}

/// The subword of letters whose absolute value lies in `[lo, hi]`.
pub fn restrict_values(a: &[i32], lo: i32, hi: i32) -> Vec<i32> {
    a.iter().copied().filter(|x| (lo..=hi).contains(&x.abs())).collect()
}

/// `u x v` for `u` in `B_m` (or `S_m`, `D_m`) and `v` in `S_n`: `[u, m + v]`.
pub fn cross(u: &Element, v: &Element) -> Element {
    let m = u.n() as i32;
    Element::raw(u.window().iter().copied().chain(v.window().iter().map(|&x| x + m)).collect())
}

/// The signed embedding `B_m x B_n -> B_{m+n}`: `[u, v^{+m}]` with `a^{+m} = a + sgn(a) m`.
pub fn cross_signed(u: &Element, v: &Element) -> Element {
    let m = u.n() as i32;
    Element::raw(u.window().iter().copied().chain(v.window().iter().map(|&x| x + x.signum() * m)).collect())
}

fn check_unsigned(v: &Element) -> Result<()> {
    if v.window().iter().any(|&x| x < 0) {
        return Err(Error::InvalidElement(format!("{v} is not an unsigned permutation")));
    }
    Ok(())
}

fn check_even(u: &Element) -> Result<()> {
    if u.n() < 2 {
        return Err(Error::Invalid(format!("type D operand {u} needs at least two letters")));
    }
    if !negations(u).is_multiple_of(2) {
        return Err(Error::InvalidElement(format!("{u} has an odd number of negative entries")));
    }
    Ok(())
}

/// Interleavings: the positions taken by the right-hand letters, in increasing order.
fn positions(total: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..total).combinations(k)
}

fn sign_patterns(n: usize) -> impl Iterator<Item = Vec<bool>> {
    (0..1u32 << n).map(move |bits| (0..n).map(|i| bits >> i & 1 == 1).collect())
}

/// `u` shuffled with `m + v`, the right letters occupying `pos`.
fn interleave(u: &[i32], right: &[i32], pos: &[usize]) -> Element {
    let total = u.len() + right.len();
    let mut w = Vec::with_capacity(total);
    let (mut a, mut b) = (u.iter(), right.iter());
    let mut next = pos.iter().peekable();
    for i in 0..total {
        if next.peek() == Some(&&i) {
            next.next();
            w.push(*b.next().expect("enough right letters"));
        } else {
            w.push(*a.next().expect("enough left letters"));
        }
    }
    Element::raw(w)
}

/// The values `A` in increasing order relabel `u` by absolute value, keeping signs.
fn relabel(u: &Element, values: &[i32]) -> Vec<i32> {
    u.window().iter().map(|&x| x.signum() * values[x.unsigned_abs() as usize - 1]).collect()
}

/// Shifted shuffle on `ZS`: `w|[1,m] = u` and `st(w|[m+1,m+n]) = v`.
pub fn shuffle_a(u: &Element, v: &Element) -> Result<GroupVector> {
    check_unsigned(u)?;
    check_unsigned(v)?;
    let m = u.n() as i32;
    let right: Vec<i32> = v.window().iter().map(|&x| x + m).collect();
    Ok(FormalVector::from_keys(positions(u.n() + v.n(), v.n()).map(|p| interleave(u.window(), &right, &p))))
}

/// Convolution on `ZS`: `st(w[1,m]) = u` and `st(w[m+1,m+n]) = v`.
pub fn cup_a(u: &Element, v: &Element) -> Result<GroupVector> {
    check_unsigned(u)?;
    check_unsigned(v)?;
    let total = (u.n() + v.n()) as i32;
    Ok(FormalVector::from_keys((1..=total).combinations(u.n()).map(|left| {
        let right: Vec<i32> = (1..=total).filter(|x| !left.contains(x)).collect();
        let mut w = relabel(u, &left);
        w.extend(relabel(v, &right));
        Element::raw(w)
    })))
}

/// `w|[1,m] = u` and `st(hat(w)|[m+1,m+n]) = v`, for `u` in `B_m` and `v` in `S_n`.
pub fn shuffle_b(u: &Element, v: &Element) -> Result<GroupVector> {
    check_unsigned(v)?;
    let (m, n) = (u.n(), v.n());
    let mut out = GroupVector::new();
    for pos in positions(m + n, n) {
        for signs in sign_patterns(n) {
            // hat order: negative slots right to left, then positive slots left to right
            let order = pos
                .iter()
                .zip(&signs)
                .filter(|(_, &neg)| neg)
                .map(|(&p, _)| p)
                .rev()
                .chain(pos.iter().zip(&signs).filter(|(_, &neg)| !neg).map(|(&p, _)| p));
            let mut w = vec![0; m + n];
            let mut left = u.window().iter();
            for (k, p) in order.enumerate() {
                let neg = signs[pos.iter().position(|&q| q == p).expect("slot")];
                let val = m as i32 + v.window()[k];
                w[p] = if neg { -val } else { val };
            }
            for x in w.iter_mut().filter(|x| **x == 0) {
                *x = *left.next().expect("enough left letters");
            }
            out.add_term(Element::raw(w), 1);
        }
    }
    Ok(out)
}

/// `st_b(w[1,m]) = u` and `st(w[m+1,m+n]) = v`.
pub fn cup_b(u: &Element, v: &Element) -> Result<GroupVector> {
    check_unsigned(v)?;
    let (m, n) = (u.n(), v.n());
    let total = (m + n) as i32;
    let mut out = GroupVector::new();
    for left in (1..=total).combinations(m) {
        let rest: Vec<i32> = (1..=total).filter(|x| !left.contains(x)).collect();
        for signs in sign_patterns(n) {
            let mut vals: Vec<i32> = rest.iter().zip(&signs).map(|(&x, &neg)| if neg { -x } else { x }).collect();
            vals.sort_unstable();
            let mut w = relabel(u, &left);
            w.extend(v.window().iter().map(|&k| vals[k as usize - 1]));
            out.add_term(Element::raw(w), 1);
        }
    }
    Ok(out)
}

fn times_s0b_right(u: &Element) -> Element {
    let mut w = u.window().to_vec();
    w[0] = -w[0];
    Element::raw(w)
}

fn times_s0b_left(u: &Element) -> Element {
    Element::raw(u.window().iter().map(|&x| if x.abs() == 1 { -x } else { x }).collect())
}

fn even_part(x: GroupVector) -> GroupVector {
    x.iter().filter(|(w, _)| negations(w).is_multiple_of(2)).map(|(w, c)| (w.clone(), c)).collect()
}

/// `st^D(w|[1,m]) = u` and `st(hat(w)|[m+1,m+n]) = v`, for `u` in `D_m`, `m >= 2`.
pub fn shuffle_d(u: &Element, v: &Element) -> Result<GroupVector> {
    check_even(u)?;
    let both = shuffle_b(u, v)?.add(&shuffle_b(&times_s0b_right(u), v)?);
    Ok(even_part(both))
}

/// `^D st(w[1,m]) = u` and `st(w[m+1,m+n]) = v`, for `u` in `D_m`, `m >= 2`.
pub fn cup_d(u: &Element, v: &Element) -> Result<GroupVector> {
    check_even(u)?;
    let both = cup_b(u, v)?.add(&cup_b(&times_s0b_left(u), v)?);
    Ok(even_part(both))
}

/// Shuffle on `ZB` through the signed embedding: `w|[1,m] = u` and `st_b(w|[m+1,m+n]) = v`.
pub fn shuffle_bb(u: &Element, v: &Element) -> Result<GroupVector> {
    let m = u.n() as i32;
    let right: Vec<i32> = v.window().iter().map(|&x| x + x.signum() * m).collect();
    Ok(FormalVector::from_keys(positions(u.n() + v.n(), v.n()).map(|p| interleave(u.window(), &right, &p))))
}

/// Convolution on `ZB`: `st_b(w[1,m]) = u` and `st_b(w[m+1,m+n]) = v`.
pub fn cup_bb(u: &Element, v: &Element) -> Result<GroupVector> {
    let total = (u.n() + v.n()) as i32;
    Ok(FormalVector::from_keys((1..=total).combinations(u.n()).map(|left| {
        let right: Vec<i32> = (1..=total).filter(|x| !left.contains(x)).collect();
        let mut w = relabel(u, &left);
        w.extend(relabel(v, &right));
        Element::raw(w)
    })))
}

/// One tensor term `x (x) y`.
pub type Split = (Element, Element);

/// `sum_i st(u[1,i]) (x) st(u[i+1,m])`.
pub fn unshuffle_a(u: &Element) -> Result<Vec<Split>> {
    check_unsigned(u)?;
    let a = u.window();
    Ok((0..=a.len()).map(|i| (st(&a[..i]), st(&a[i..]))).collect())
}

/// `sum_i u|[1,i] (x) st(u|[i+1,m])`.
pub fn cap_a(u: &Element) -> Result<Vec<Split>> {
    check_unsigned(u)?;
    let a = u.window();
    let m = a.len() as i32;
    Ok((0..=m).map(|i| (Element::raw(restrict_values(a, 1, i)), st(&restrict_values(a, i + 1, m)))).collect())
}

/// `sum_i st_b(u[1,i]) (x) st(u[i+1,m])`.
pub fn unshuffle_b(u: &Element) -> Vec<Split> {
    let a = u.window();
    (0..=a.len()).map(|i| (st_b(&a[..i]), st(&a[i..]))).collect()
}

/// `sum_i u|[1,i] (x) st(hat(u)|[i+1,m])`.
pub fn cap_b(u: &Element) -> Vec<Split> {
    let a = u.window();
    let h = hat(a);
    let m = a.len() as i32;
    (0..=m).map(|i| (Element::raw(restrict_values(a, 1, i)), st(&restrict_values(&h, i + 1, m)))).collect()
}

/// `sum_{2 <= i <= m} ^D st(u[1,i]) (x) st(u[i+1,m])`.
pub fn unshuffle_d(u: &Element) -> Result<Vec<Split>> {
    check_even(u)?;
    let a = u.window();
    (2..=a.len()).map(|i| Ok((st_d_left(&a[..i])?, st(&a[i..])))).collect()
}

/// `sum_{2 <= i <= m} st^D(u|[1,i]) (x) st(hat(u)|[i+1,m])`.
pub fn cap_d(u: &Element) -> Result<Vec<Split>> {
    check_even(u)?;
    let a = u.window();
    let h = hat(a);
    let m = a.len() as i32;
    (2..=m).map(|i| Ok((st_d_right(&restrict_values(a, 1, i))?, st(&restrict_values(&h, i + 1, m))))).collect()
}

/// `sum_i st_b(u[1,i]) (x) st_b(u[i+1,m])`.
pub fn unshuffle_bb(u: &Element) -> Vec<Split> {
    let a = u.window();
    (0..=a.len()).map(|i| (st_b(&a[..i]), st_b(&a[i..]))).collect()
}

/// `sum_i u|[1,i] (x) st_b(u|[i+1,m])`.
pub fn cap_bb(u: &Element) -> Vec<Split> {
    let a = u.window();
    let m = a.len() as i32;
    (0..=m).map(|i| (Element::raw(restrict_values(a, 1, i)), st_b(&restrict_values(a, i + 1, m)))).collect()
}

/// A list of splits as a tensor vector.
pub fn splits_to_vector(splits: &[Split]) -> TensorVector<Element, Element> {
    FormalVector::from_keys(splits.iter().cloned())
}

/// The unique `w = (u x v) z` with `z^{-1}` a minimal left coset representative of `B_m x S_n`.
pub fn factor_b(w: &Element, m: usize) -> Result<(Element, Element, Element)> {
    if m > w.n() {
        return Err(Error::Invalid(format!("split {m} exceeds size {}", w.n())));
    }
    let a = w.window();
    let top = w.n() as i32;
    let u = Element::raw(restrict_values(a, 1, m as i32));
    let v = st(&restrict_values(&hat(a), m as i32 + 1, top));
    let z = cross(&u, &v).inverse().compose(w)?;
    Ok((u, v, z))
}

/// The unique `w = (u x v) z` with `u` in `D_m`, `v` in `S_n` and `z^{-1}` in `(D)^{m,n}`.
pub fn factor_d(w: &Element, m: usize) -> Result<(Element, Element, Element)> {
    check_even(w)?;
    if m < 2 || m > w.n() {
        return Err(Error::Invalid(format!("type D split {m} must lie in [2, {}]", w.n())));
    }
    let a = w.window();
    let top = w.n() as i32;
    let u = st_d_right(&restrict_values(a, 1, m as i32))?;
    let v = st(&restrict_values(&hat(a), m as i32 + 1, top));
    let z = cross(&u, &v).inverse().compose(w)?;
    Ok((u, v, z))
}

/// The unique `w = z (u x v)` through the signed embedding, with `z` increasing and positive on both blocks.
pub fn factor_bb(w: &Element, m: usize) -> Result<(Element, Element, Element)> {
    if m > w.n() {
        return Err(Error::Invalid(format!("split {m} exceeds size {}", w.n())));
    }
    let a = w.window();
    let u = st_b(&a[..m]);
    let v = st_b(&a[m..]);
    let z = w.compose(&cross_signed(&u, &v).inverse())?;
    Ok((u, v, z))
}

/// The products, by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Product {
    ShuffleA,
    CupA,
    ShuffleB,
    CupB,
    ShuffleD,
    CupD,
    ShuffleBB,
    CupBB,
}

impl Product {
    pub const ALL: [Product; 8] = [
        Product::ShuffleA,
        Product::CupA,
        Product::ShuffleB,
        Product::CupB,
        Product::ShuffleD,
        Product::CupD,
        Product::ShuffleBB,
        Product::CupBB,
    ];

    pub fn apply(self, u: &Element, v: &Element) -> Result<GroupVector> {
        match self {
            Product::ShuffleA => shuffle_a(u, v),
            Product::CupA => cup_a(u, v),
            Product::ShuffleB => shuffle_b(u, v),
            Product::CupB => cup_b(u, v),
            Product::ShuffleD => shuffle_d(u, v),
            Product::CupD => cup_d(u, v),
            Product::ShuffleBB => shuffle_bb(u, v),
            Product::CupBB => cup_bb(u, v),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Product::ShuffleA => "shuffleA",
            Product::CupA => "cupA",
            Product::ShuffleB => "shuffleB",
            Product::CupB => "cupB",
            Product::ShuffleD => "shuffleD",
            Product::CupD => "cupD",
            Product::ShuffleBB => "shuffleBB",
            Product::CupBB => "cupBB",
        }
    }
}

impl fmt::Display for Product {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Product {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Product::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown product family {s:?}")))
    }
}

/// The coproducts, by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coproduct {
    UnshuffleA,
    CapA,
    UnshuffleB,
    CapB,
    UnshuffleD,
    CapD,
    UnshuffleBB,
    CapBB,
}

impl Coproduct {
    pub const ALL: [Coproduct; 8] = [
        Coproduct::UnshuffleA,
        Coproduct::CapA,
        Coproduct::UnshuffleB,
        Coproduct::CapB,
        Coproduct::UnshuffleD,
        Coproduct::CapD,
        Coproduct::UnshuffleBB,
        Coproduct::CapBB,
    ];

    /// All splits in order; type D starts at split 2.
    pub fn splits(self, u: &Element) -> Result<Vec<(usize, Split)>> {
        let (start, terms) = match self {
            Coproduct::UnshuffleA => (0, unshuffle_a(u)?),
            Coproduct::CapA => (0, cap_a(u)?),
            Coproduct::UnshuffleB => (0, unshuffle_b(u)),
            Coproduct::CapB => (0, cap_b(u)),
            Coproduct::UnshuffleD => (2, unshuffle_d(u)?),
            Coproduct::CapD => (2, cap_d(u)?),
            Coproduct::UnshuffleBB => (0, unshuffle_bb(u)),
            Coproduct::CapBB => (0, cap_bb(u)),
        };
        Ok(terms.into_iter().enumerate().map(|(k, t)| (k + start, t)).collect())
    }

    pub fn apply(self, u: &Element) -> Result<TensorVector<Element, Element>> {
        let splits: Vec<Split> = self.splits(u)?.into_iter().map(|(_, t)| t).collect();
        Ok(splits_to_vector(&splits))
    }

    /// The single term at split `i`.
    pub fn split(self, u: &Element, i: usize) -> Result<Split> {
        self.splits(u)?
            .into_iter()
            .find(|(k, _)| *k == i)
            .map(|(_, t)| t)
            .ok_or_else(|| Error::Invalid(format!("no split {i} for {u}")))
    }

    pub fn name(self) -> &'static str {
        match self {
            Coproduct::UnshuffleA => "unshuffleA",
            Coproduct::CapA => "capA",
            Coproduct::UnshuffleB => "unshuffleB",
            Coproduct::CapB => "capB",
            Coproduct::UnshuffleD => "unshuffleD",
            Coproduct::CapD => "capD",
            Coproduct::UnshuffleBB => "unshuffleBB",
            Coproduct::CapBB => "capBB",
        }
    }
}

impl fmt::Display for Coproduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Coproduct {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Coproduct::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown coproduct family {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> Element {
        Element::parse(s).unwrap()
    }

    #[test]
    fn standardization_examples() {
        assert_eq!(st(&[3, 2, 2, 3, 6, 2, 5]), e("4,1,2,5,7,3,6"));
        assert_eq!(st_b(&[2, -4, 3, -2, 0, 2, 0, -2]), e("5,-8,7,-4,1,6,2,-3"));
        assert_eq!(st_d_left(&[2, 1, -1, -3, 2, -1]).unwrap(), e("4,3,-2,-6,5,1"));
        assert_eq!(st_d_right(&[2, 1, -1, -3, 2, -1]).unwrap(), e("-4,3,-2,-6,5,-1"));
    }

    #[test]
    fn shuffle_counts() {
        assert_eq!(shuffle_a(&e("2,1"), &e("1,2")).unwrap().len(), 6);
        assert_eq!(shuffle_b(&e("-1"), &e("2,1")).unwrap().len(), 12);
        assert_eq!(cup_b(&e("-1"), &e("2,1")).unwrap().len(), 12);
        assert_eq!(shuffle_d(&e("-2,3,-1"), &e("1")).unwrap().len(), 8);
        assert_eq!(cup_d(&e("-2,3,-1"), &e("1")).unwrap().len(), 8);
    }

    #[test]
    fn empty_operands() {
        let u = e("2,-3,1");
        assert_eq!(shuffle_b(&u, &Element::empty()).unwrap(), GroupVector::basis(u.clone()));
        assert_eq!(cup_bb(&Element::empty(), &u).unwrap(), GroupVector::basis(u));
    }
}
