//! Sparse formal linear combinations with exact integer coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A finite integer combination of keys. Zero coefficients are never stored.
///
/// Arithmetic is checked: an overflowing coefficient panics with
/// [`Error::Overflow`]; the `try_` variants return the error instead.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FormalVector<K: Ord> {
    terms: BTreeMap<K, i64>,
}

impl<K: Ord> Default for FormalVector<K> {
    fn default() -> Self {
        FormalVector { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> FormalVector<K> {
    pub fn new() -> Self {
        Self::default()
    }

    /// The set-sum of `keys`, each with coefficient one (repeats add up).
    pub fn from_keys<I: IntoIterator<Item = K>>(keys: I) -> Self {
        let mut v = Self::new();
        for k in keys {
            v.add_term(k, 1);
        }
        v
    }

    pub fn basis(k: K) -> Self {
        let mut v = Self::new();
        v.add_term(k, 1);
        v
    }

    pub fn try_add_term(&mut self, k: K, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        match self.terms.entry(k) {
            Entry::Occupied(mut e) => {
                let v = e.get().checked_add(c).ok_or(Error::Overflow)?;
                if v == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
        Ok(())
    }

    pub fn add_term(&mut self, k: K, c: i64) {
        self.try_add_term(k, c).unwrap_or_else(|e| panic!("{e}"));
    }

    pub fn try_add_scaled(&mut self, other: &Self, c: i64) -> Result<()> {
        for (k, v) in &other.terms {
            self.try_add_term(k.clone(), v.checked_mul(c).ok_or(Error::Overflow)?)?;
        }
        Ok(())
    }

    pub fn add_scaled(&mut self, other: &Self, c: i64) {
        self.try_add_scaled(other, c).unwrap_or_else(|e| panic!("{e}"));
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, 1);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, -1);
        out
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = Self::new();
        out.add_scaled(self, c);
        out
    }

    pub fn coeff(&self, k: &K) -> i64 {
        self.terms.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct keys.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, i64)> {
        self.terms.iter().map(|(k, &v)| (k, v))
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Linear extension of `f`.
    pub fn map_linear<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> FormalVector<L>) -> FormalVector<L> {
        let mut out = FormalVector::new();
        for (k, c) in self.iter() {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Fallible linear extension.
    pub fn try_map_linear<L: Ord + Clone>(
        &self,
        mut f: impl FnMut(&K) -> Result<FormalVector<L>>,
    ) -> Result<FormalVector<L>> {
        let mut out = FormalVector::new();
        for (k, c) in self.iter() {
            out.try_add_scaled(&f(k)?, c)?;
        }
        Ok(out)
    }

    /// Relabels keys; colliding keys add up.
    pub fn map_keys<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> L) -> FormalVector<L> {
        let mut out = FormalVector::new();
        for (k, c) in self.iter() {
            out.add_term(f(k), c);
        }
        out
    }

    /// The standard pairing `<u, v> = delta_{u,v}` extended bilinearly.
    pub fn pairing(&self, other: &Self) -> i64 {
        let mut acc: i64 = 0;
        for (k, c) in self.iter() {
            let d = other.coeff(k);
            if d != 0 {
                acc =
                    c.checked_mul(d).and_then(|p| acc.checked_add(p)).unwrap_or_else(|| panic!("{}", Error::Overflow));
            }
        }
        acc
    }
}

impl<K: Ord + Clone> FromIterator<(K, i64)> for FormalVector<K> {
    fn from_iter<T: IntoIterator<Item = (K, i64)>>(iter: T) -> Self {
        let mut v = FormalVector::new();
        for (k, c) in iter {
            v.add_term(k, c);
        }
        v
    }
}

impl<K: Ord + fmt::Display> fmt::Display for FormalVector<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in &self.terms {
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            if !first {
                f.write_str(" ")?;
            }
            if mag == 1 {
                write!(f, "{sign}{k}")?;
            } else {
                write!(f, "{sign}{mag}*{k}")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for FormalVector<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// A tensor-product key.
pub type Pair<A, B> = (A, B);

/// Sums over pairs, as produced by coproducts.
pub type TensorVector<A, B> = FormalVector<Pair<A, B>>;

/// `x (x) y` extended bilinearly.
pub fn tensor<A: Ord + Clone, B: Ord + Clone>(x: &FormalVector<A>, y: &FormalVector<B>) -> TensorVector<A, B> {
    let mut out = FormalVector::new();
    for (a, c) in x.iter() {
        for (b, d) in y.iter() {
            out.add_term((a.clone(), b.clone()), c.checked_mul(d).unwrap_or_else(|| panic!("{}", Error::Overflow)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_terms_are_dropped() {
        let mut v: FormalVector<u32> = FormalVector::new();
        v.add_term(1, 2);
        v.add_term(1, -2);
        assert!(v.is_zero());
    }

    #[test]
    fn overflow_is_reported() {
        let mut v: FormalVector<u32> = FormalVector::new();
        v.add_term(1, i64::MAX);
        assert_eq!(v.try_add_term(1, 1), Err(Error::Overflow));
    }

    #[test]
    fn pairing_is_bilinear() {
        let x: FormalVector<u32> = [(1, 2), (2, 3)].into_iter().collect();
        let y: FormalVector<u32> = [(2, 5), (3, 7)].into_iter().collect();
        assert_eq!(x.pairing(&y), 15);
    }
}
