//! Subsets of simple generators and the (pseudo-)compositions indexing them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A subset of generator labels; bit `i` stands for `s_i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct SubsetMask(pub u64);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        SubsetMask(it.into_iter().fold(0u64, |m, i| m | (1u64 << i)))
    }

    pub fn singleton(i: usize) -> Self {
        SubsetMask(1u64 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    pub fn with(self, i: usize) -> Self {
        SubsetMask(self.0 | (1u64 << i))
    }

    pub fn without(self, i: usize) -> Self {
        SubsetMask(self.0 & !(1u64 << i))
    }

    pub fn union(self, o: Self) -> Self {
        SubsetMask(self.0 | o.0)
    }

    pub fn intersection(self, o: Self) -> Self {
        SubsetMask(self.0 & o.0)
    }

    pub fn difference(self, o: Self) -> Self {
        SubsetMask(self.0 & !o.0)
    }

    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Generator indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }

    pub fn indices(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// All subsets of `self`, in increasing numeric order.
    pub fn subsets(self) -> Vec<SubsetMask> {
        let mut out = Vec::with_capacity(1 << self.len());
        let mut sub = 0u64;
        loop {
            out.push(SubsetMask(sub));
            if sub == self.0 {
                break;
            }
            sub = (sub.wrapping_sub(self.0)) & self.0;
        }
        out.sort();
        out
    }

    /// Parses "0,2" or "{0,2}"; the empty string is the empty set.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches(['{', '[', '(']).trim_end_matches(['}', ']', ')']);
        let mut m = SubsetMask::EMPTY;
        for part in t.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let part = part.trim_start_matches('s');
            let i: usize = part.parse().map_err(|_| Error::Parse(format!("bad generator index {part:?}")))?;
            if i >= 64 {
                return Err(Error::Parse(format!("generator index {i} too large")));
            }
            m.insert(i);
        }
        Ok(m)
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SubsetMask {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SubsetMask::parse(s)
    }
}

/// A composition (all parts positive) or a pseudo-composition (first part may be zero).
///
/// Both index subsets through the partial sums
/// `D(a) = {a1, a1+a2, ..., a1+...+a_{l-1}}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True when every part is positive.
    pub fn is_plain(&self) -> bool {
        self.0.iter().all(|&p| p > 0)
    }

    /// True when every part after the first is positive.
    pub fn is_pseudo(&self) -> bool {
        !self.0.is_empty() && self.0[1..].iter().all(|&p| p > 0)
    }

    pub fn descent_set(&self) -> SubsetMask {
        let mut m = SubsetMask::EMPTY;
        let mut acc = 0;
        for &p in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += p;
            m.insert(acc);
        }
        m
    }

    /// Inverse of [`Composition::descent_set`] among compositions of `n`.
    pub fn from_descent_set(d: SubsetMask, n: usize, pseudo: bool) -> Result<Self> {
        if pseudo {
            if d.iter().any(|i| i >= n) {
                return Err(Error::Invalid(format!("{d} is not a subset of {{0..{}}}", n as i64 - 1)));
            }
        } else if d.iter().any(|i| i == 0 || i >= n) {
            return Err(Error::Invalid(format!("{d} is not a subset of [1,{}]", n as i64 - 1)));
        }
        if !pseudo && n == 0 {
            return Ok(Composition(vec![]));
        }
        let mut parts = Vec::new();
        let mut prev = 0;
        for i in d.iter().chain(std::iter::once(n)) {
            parts.push(i - prev);
            prev = i;
        }
        Ok(Composition(parts))
    }

    /// Concatenation `a . b`.
    pub fn concat(&self, other: &Composition) -> Composition {
        Composition(self.0.iter().chain(other.0.iter()).copied().collect())
    }

    /// Near-concatenation: last part of `self` merged with first part of `other`.
    pub fn near_concat(&self, other: &Composition) -> Option<Composition> {
        let (last, first) = (self.0.last()?, other.0.first()?);
        let mut parts = self.0[..self.0.len() - 1].to_vec();
        parts.push(last + first);
        parts.extend_from_slice(&other.0[1..]);
        Some(Composition(parts))
    }

    /// Parts after the first, sorted decreasingly, with the first part kept in front.
    pub fn pseudo_partition(&self) -> Composition {
        let mut tail = self.0.get(1..).unwrap_or(&[]).to_vec();
        tail.sort_unstable_by(|a, b| b.cmp(a));
        let mut parts = vec![self.0.first().copied().unwrap_or(0)];
        parts.extend(tail);
        Composition(parts)
    }

    /// Parts sorted decreasingly.
    pub fn partition(&self) -> Composition {
        let mut p = self.0.clone();
        p.sort_unstable_by(|a, b| b.cmp(a));
        Composition(p)
    }

    /// All compositions of `n` (plain) or pseudo-compositions of `n`, ordered by descent mask.
    pub fn all(n: usize, pseudo: bool) -> Vec<Composition> {
        let full = if pseudo { SubsetMask((1u64 << n) - 1) } else { SubsetMask(((1u64 << n) - 1) & !1) };
        full.subsets().into_iter().map(|d| Composition::from_descent_set(d, n, pseudo).expect("in range")).collect()
    }

    /// Parses "(2,3,1,1)"; "()" is the empty composition.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        let mut parts = Vec::new();
        for p in t.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            parts.push(p.parse().map_err(|_| Error::Parse(format!("bad part {p:?}")))?);
        }
        Ok(Composition(parts))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Composition::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_enumerates_all() {
        let m = SubsetMask::from_indices([0, 2, 3]);
        let subs = m.subsets();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|s| s.is_subset(m)));
        assert_eq!(SubsetMask::EMPTY.subsets(), vec![SubsetMask::EMPTY]);
    }

    #[test]
    fn composition_round_trip() {
        let a = Composition::parse("(2,3,1,1)").unwrap();
        assert_eq!(a.descent_set(), SubsetMask::from_indices([2, 5, 6]));
        assert_eq!(Composition::from_descent_set(a.descent_set(), 7, false).unwrap(), a);
        let b = Composition::parse("(0,2,1)").unwrap();
        assert_eq!(b.descent_set(), SubsetMask::from_indices([0, 2]));
        assert_eq!(Composition::from_descent_set(b.descent_set(), 3, true).unwrap(), b);
        assert_eq!(Composition::all(3, false).len(), 4);
        assert_eq!(Composition::all(3, true).len(), 8);
    }

    #[test]
    fn near_concat_merges_boundary() {
        let a = Composition(vec![0, 2]);
        let b = Composition(vec![1, 1]);
        assert_eq!(a.near_concat(&b).unwrap(), Composition(vec![0, 3, 1]));
        assert_eq!(a.concat(&b), Composition(vec![0, 2, 1, 1]));
    }

    #[test]
    fn parse_subset_forms() {
        assert_eq!(SubsetMask::parse("0,2").unwrap(), SubsetMask::from_indices([0, 2]));
        assert_eq!(SubsetMask::parse("").unwrap(), SubsetMask::EMPTY);
        assert!(SubsetMask::parse("x").is_err());
    }
}
