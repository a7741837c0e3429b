//! Truncated power series: parsets and P-partitions, the `F`/`s` bases of the
//! free quasisymmetric modules in types A, B and D, ribbon tableaux, and the
//! commutative images under `chi`.
//!
//! A noncommutative series of degree `n` is stored through its truncation to
//! words over the window `[-m, m]`. Commutative images keep the variables
//! `x_1..x_m` (type A), `x_0..x_m` (type B) or `x_{-m}..x_m` (type D).

mod nc;
mod qsym;
mod roots;
mod tableau;

pub use nc::*;
pub use qsym::*;
pub use roots::*;
pub use tableau::*;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vector::FormalVector;

/// An integer word `f = (f(1), ..., f(n))`, read as the monomial `x_{f(1)} ... x_{f(n)}`.
pub type Word = Vec<i32>;

/// Commutative monomial as a multiset of variable indices, see [`monomial`].
pub type Monomial = Vec<i32>;

/// All words of length `n` over `[lo, hi]` in lexicographic order.
pub fn words(n: usize, lo: i32, hi: i32) -> Vec<Word> {
    if hi < lo {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    let mut cur = vec![lo; n];
    loop {
        out.push(cur.clone());
        let mut k = n;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cur[k] < hi {
                cur[k] += 1;
                for x in cur.iter_mut().skip(k + 1) {
                    *x = lo;
                }
                break;
            }
        }
    }
}

/// Canonical form of a monomial: indices sorted by absolute value, negatives first on ties.
pub fn monomial<I: IntoIterator<Item = i32>>(indices: I) -> Monomial {
    let mut m: Vec<i32> = indices.into_iter().collect();
    m.sort_by_key(|&i| (i.abs(), i));
    m
}

/// A truncated noncommutative series of fixed degree.
#[derive(Clone, PartialEq, Eq)]
pub struct NCSeries {
    degree: usize,
    window: i32,
    terms: FormalVector<Word>,
}

impl NCSeries {
    pub fn zero(degree: usize, window: i32) -> Self {
        NCSeries { degree, window, terms: FormalVector::new() }
    }

    /// The empty word with coefficient one.
    pub fn one(window: i32) -> Self {
        let mut s = Self::zero(0, window);
        s.terms.add_term(vec![], 1);
        s
    }

    /// The set-sum of `words`.
    pub fn from_words<I: IntoIterator<Item = Word>>(degree: usize, window: i32, words: I) -> Result<Self> {
        let mut s = Self::zero(degree, window);
        for w in words {
            s.try_add_term(w, 1)?;
        }
        Ok(s)
    }

    pub fn try_add_term(&mut self, w: Word, c: i64) -> Result<()> {
        if w.len() != self.degree {
            return Err(Error::Invalid(format!("word {w:?} has length {} not {}", w.len(), self.degree)));
        }
        if w.iter().any(|x| x.abs() > self.window) {
            return Err(Error::Window(format!("word {w:?} leaves [-{0}, {0}]", self.window)));
        }
        self.terms.try_add_term(w, c)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn window(&self) -> i32 {
        self.window
    }

    pub fn terms(&self) -> &FormalVector<Word> {
        &self.terms
    }

    pub fn coeff(&self, w: &Word) -> i64 {
        self.terms.coeff(w)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, i64)> {
        self.terms.iter()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree || self.window != other.window {
            return Err(Error::Mismatch(format!(
                "series of degree {} window {} vs degree {} window {}",
                self.degree, self.window, other.degree, other.window
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        out.terms.try_add_scaled(&other.terms, 1)?;
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        out.terms.try_add_scaled(&other.terms, -1)?;
        Ok(out)
    }

    pub fn scale(&self, c: i64) -> Self {
        NCSeries { degree: self.degree, window: self.window, terms: self.terms.scale(c) }
    }

    /// Product by concatenation of words.
    ///
    /// Refused unless the window is at least one more than the resulting
    /// degree, the range in which truncations are faithful.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.window != other.window {
            return Err(Error::Mismatch(format!("windows {} and {}", self.window, other.window)));
        }
        let degree = self.degree + other.degree;
        if (self.window as usize) < degree + 1 {
            return Err(Error::Window(format!("window {} too small for degree {degree}", self.window)));
        }
        let mut out = Self::zero(degree, self.window);
        for (a, c) in self.iter() {
            for (b, d) in other.iter() {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.terms.try_add_term(w, c.checked_mul(d).ok_or(Error::Overflow)?)?;
            }
        }
        Ok(out)
    }

    /// Restriction to a smaller window.
    pub fn truncate(&self, window: i32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(w, _)| w.iter().all(|x| x.abs() <= window))
            .map(|(w, c)| (w.clone(), c))
            .collect();
        NCSeries { degree: self.degree, window: window.min(self.window), terms }
    }

    /// `{"degree":..,"window":..,"terms":[{"word":[..],"coeff":..}]}`, terms in word order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&SeriesJson::from(self)).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: SeriesJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut s = Self::zero(j.degree, j.window);
        for t in j.terms {
            s.try_add_term(t.word, t.coeff)?;
        }
        Ok(s)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    degree: usize,
    window: i32,
    terms: Vec<WordTerm>,
}

#[derive(Serialize, Deserialize)]
struct WordTerm {
    word: Word,
    coeff: i64,
}

impl From<&NCSeries> for SeriesJson {
    fn from(s: &NCSeries) -> Self {
        SeriesJson {
            degree: s.degree,
            window: s.window,
            terms: s.iter().map(|(w, c)| WordTerm { word: w.clone(), coeff: c }).collect(),
        }
    }
}

fn fmt_word(w: &[i32]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(|x| format!("x{x}")).collect::<Vec<_>>().join("")
}

impl fmt::Display for NCSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(w, c)| (fmt_word(w), c)))
    }
}

impl fmt::Debug for NCSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCSeries(deg {}, window {}, {} terms)", self.degree, self.window, self.len())
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: impl Iterator<Item = (String, i64)>) -> fmt::Result {
    let mut first = true;
    for (k, c) in terms {
        let sign = if c < 0 {
            "- "
        } else if first {
            ""
        } else {
            "+ "
        };
        if !first {
            f.write_str(" ")?;
        }
        match c.unsigned_abs() {
            1 => write!(f, "{sign}{k}")?,
            a => write!(f, "{sign}{a}*{k}")?,
        }
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// A truncated commutative polynomial of fixed degree.
#[derive(Clone, PartialEq, Eq)]
pub struct CPoly {
    degree: usize,
    window: i32,
    terms: FormalVector<Monomial>,
}

impl CPoly {
    pub fn zero(degree: usize, window: i32) -> Self {
        CPoly { degree, window, terms: FormalVector::new() }
    }

    pub fn one(window: i32) -> Self {
        let mut p = Self::zero(0, window);
        p.terms.add_term(vec![], 1);
        p
    }

    /// The single variable `x_i`.
    pub fn var(i: i32, window: i32) -> Self {
        let mut p = Self::zero(1, window);
        p.terms.add_term(vec![i], 1);
        p
    }

    pub fn add_monomial<I: IntoIterator<Item = i32>>(&mut self, indices: I, c: i64) -> Result<()> {
        let m = monomial(indices);
        if m.len() != self.degree {
            return Err(Error::Invalid(format!("monomial {m:?} has degree {} not {}", m.len(), self.degree)));
        }
        self.terms.try_add_term(m, c)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn window(&self) -> i32 {
        self.window
    }

    pub fn terms(&self) -> &FormalVector<Monomial> {
        &self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> i64 {
        self.terms.coeff(m)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, i64)> {
        self.terms.iter()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree || self.window != other.window {
            return Err(Error::Mismatch(format!(
                "polynomials of degree {} window {} vs degree {} window {}",
                self.degree, self.window, other.degree, other.window
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        out.terms.try_add_scaled(&other.terms, 1)?;
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        out.terms.try_add_scaled(&other.terms, -1)?;
        Ok(out)
    }

    pub fn scale(&self, c: i64) -> Self {
        CPoly { degree: self.degree, window: self.window, terms: self.terms.scale(c) }
    }

    /// Ordinary product; truncation commutes with it, so no window condition applies.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.window != other.window {
            return Err(Error::Mismatch(format!("windows {} and {}", self.window, other.window)));
        }
        let mut out = Self::zero(self.degree + other.degree, self.window);
        for (a, c) in self.iter() {
            for (b, d) in other.iter() {
                let m = monomial(a.iter().chain(b.iter()).copied());
                out.terms.try_add_term(m, c.checked_mul(d).ok_or(Error::Overflow)?)?;
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: usize) -> Result<Self> {
        let mut out = Self::one(self.window);
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Same layout as [`NCSeries::to_json`] with `monomial` in place of `word`.
    pub fn to_json(&self) -> String {
        let terms = self.iter().map(|(m, c)| MonomialTerm { monomial: m.clone(), coeff: c }).collect();
        serde_json::to_string(&PolyJson { degree: self.degree, window: self.window, terms }).expect("serializable")
    }
}

#[derive(Serialize)]
struct PolyJson {
    degree: usize,
    window: i32,
    terms: Vec<MonomialTerm>,
}

#[derive(Serialize)]
struct MonomialTerm {
    monomial: Monomial,
    coeff: i64,
}

fn fmt_monomial(m: &[i32]) -> String {
    if m.is_empty() {
        return "1".into();
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < m.len() {
        let mut j = i;
        while j < m.len() && m[j] == m[i] {
            j += 1;
        }
        match j - i {
            1 => parts.push(format!("x{}", m[i])),
            e => parts.push(format!("x{}^{e}", m[i])),
        }
        i = j;
    }
    parts.join("*")
}

impl fmt::Display for CPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(m, c)| (fmt_monomial(m), c)))
    }
}

impl fmt::Debug for CPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CPoly(deg {}, window {}: {self})", self.degree, self.window)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_cube() {
        assert_eq!(words(2, -1, 1).len(), 9);
        assert_eq!(words(0, -1, 1), vec![Vec::<i32>::new()]);
        assert_eq!(words(1, 0, 2), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn monomials_sort_by_absolute_value() {
        assert_eq!(monomial([2, -1]), vec![-1, 2]);
        assert_eq!(monomial([2, -2, 0]), vec![0, -2, 2]);
    }

    #[test]
    fn product_refuses_small_windows() {
        let a = NCSeries::from_words(1, 2, [vec![1]]).unwrap();
        assert!(a.mul(&a).is_err());
        let a = NCSeries::from_words(1, 3, [vec![1]]).unwrap();
        assert_eq!(a.mul(&a).unwrap().coeff(&vec![1, 1]), 1);
    }

    #[test]
    fn json_round_trip() {
        let s = NCSeries::from_words(3, 4, [vec![0, -2, 1]]).unwrap();
        let j = s.to_json();
        assert_eq!(j, r#"{"degree":3,"window":4,"terms":[{"word":[0,-2,1],"coeff":1}]}"#);
        assert_eq!(NCSeries::from_json(&j).unwrap(), s);
    }
}
