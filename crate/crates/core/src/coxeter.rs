//! Finite Coxeter systems of types A, B and D realized as (signed) permutation groups.

use std::collections::HashMap;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subset::SubsetMask;

/// Default upper bound on the order of a group we are willing to enumerate.
pub const DEFAULT_MAX_ORDER: u128 = 1_000_000;

/// The enumeration cap, taken from `COXKIT_MAX_ORDER` when set.
pub fn max_order() -> u128 {
    std::env::var("COXKIT_MAX_ORDER").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_MAX_ORDER)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::B => "B",
            Family::D => "D",
        };
        f.write_str(c)
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

/// A signed permutation in window notation `[w(1), ..., w(n)]`.
///
/// The family is not stored; membership in a particular group is checked by
/// [`CoxeterSystem::element`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Element(Vec<i32>);

impl Element {
    /// Validates that `window` is a signed permutation of `[n]`.
    pub fn from_window(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &x in &window {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::InvalidElement(format!("{window:?} is not a signed permutation")));
            }
            seen[a] = true;
        }
        Ok(Element(window))
    }

    /// No validation; callers guarantee a signed permutation.
    pub(crate) fn raw(window: Vec<i32>) -> Self {
        Element(window)
    }

    pub fn identity(n: usize) -> Self {
        Element((1..=n as i32).collect())
    }

    pub fn empty() -> Self {
        Element(Vec::new())
    }

    pub fn window(&self) -> &[i32] {
        &self.0
    }

    pub fn into_window(self) -> Vec<i32> {
        self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| x == i as i32 + 1)
    }

    /// `w(i)` for `i` in `[-n, n]`, with `w(0) = 0` and `w(-i) = -w(i)`.
    pub fn apply(&self, i: i32) -> i32 {
        match i.cmp(&0) {
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Greater => self.0[i as usize - 1],
            std::cmp::Ordering::Less => -self.0[(-i) as usize - 1],
        }
    }

    /// `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Element) -> Result<Element> {
        if self.n() != other.n() {
            return Err(Error::Mismatch(format!("cannot compose elements of sizes {} and {}", self.n(), other.n())));
        }
        Ok(Element(other.0.iter().map(|&v| self.apply(v)).collect()))
    }

    pub fn inverse(&self) -> Element {
        let mut out = vec![0; self.n()];
        for (i, &x) in self.0.iter().enumerate() {
            let v = i as i32 + 1;
            out[x.unsigned_abs() as usize - 1] = if x > 0 { v } else { -v };
        }
        Element(out)
    }

    /// Number of pairs `i < j` with `w(i) > w(j)`.
    pub fn inv(&self) -> usize {
        let w = &self.0;
        let mut c = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// Number of negative entries.
    pub fn neg(&self) -> usize {
        self.0.iter().filter(|&&x| x < 0).count()
    }

    /// Number of pairs `i < j` with `w(i) + w(j) < 0`.
    pub fn nsp(&self) -> usize {
        let w = &self.0;
        let mut c = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] + w[j] < 0 {
                    c += 1;
                }
            }
        }
        c
    }

    /// Parses "2,-4,-3,1", optionally wrapped in brackets or parentheses.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if !t.is_ascii() {
            return Err(Error::Parse(format!("non-ASCII window {t:?}")));
        }
        let t = t.trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
        let mut w = Vec::new();
        for p in t.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            w.push(p.parse::<i32>().map_err(|_| Error::Parse(format!("bad entry {p:?}")))?);
        }
        Element::from_window(w).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Mul for &Element {
    type Output = Element;

    /// Panics when the sizes differ; use [`Element::compose`] for a checked product.
    fn mul(self, rhs: &Element) -> Element {
        self.compose(rhs).expect("composition of elements of different sizes")
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Element {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Element::parse(s)
    }
}

/// Which minimal coset representatives: `W^I` (left cosets `wW_I`) or `^IW` (right cosets `W_I w`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Side {
    Left,
    Right,
}

/// A Coxeter system of type A, B or D on `n` letters.
///
/// Type `A` with `n` letters has rank `n - 1` and generators `s_1..s_{n-1}`;
/// types `B` and `D` have rank `n` and generators `s_0..s_{n-1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct CoxeterSystem {
    family: Family,
    n: usize,
}

impl CoxeterSystem {
    /// Builds the system from its rank, as in `A_3`, `B_3`, `D_4`.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        match family {
            Family::A => Self::on_letters(family, rank + 1),
            Family::B if rank >= 1 => Self::on_letters(family, rank),
            Family::D if rank >= 2 => Self::on_letters(family, rank),
            _ => Err(Error::InvalidSystem(format!("{family}_{rank} is not supported"))),
        }
    }

    /// Builds the system acting on `n` letters; degenerate sizes (`S_0`, `B_0`) are allowed.
    pub fn on_letters(family: Family, n: usize) -> Result<Self> {
        if family == Family::D && n < 2 {
            return Err(Error::InvalidSystem("type D needs at least 2 letters".into()));
        }
        if n > 63 {
            return Err(Error::InvalidSystem("at most 63 letters".into()));
        }
        Ok(CoxeterSystem { family, n })
    }

    pub fn a(n_letters: usize) -> Self {
        Self::on_letters(Family::A, n_letters).expect("valid type A size")
    }

    pub fn b(n: usize) -> Self {
        Self::on_letters(Family::B, n).expect("valid type B size")
    }

    pub fn d(n: usize) -> Self {
        Self::on_letters(Family::D, n).expect("valid type D size")
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        match self.family {
            Family::A => self.n.saturating_sub(1),
            _ => self.n,
        }
    }

    /// Generator labels in increasing order.
    pub fn generators(&self) -> Vec<usize> {
        match self.family {
            Family::A => (1..self.n).collect(),
            _ => (0..self.n).collect(),
        }
    }

    pub fn full_set(&self) -> SubsetMask {
        SubsetMask::from_indices(self.generators())
    }

    pub fn is_generator(&self, s: usize) -> bool {
        match self.family {
            Family::A => s >= 1 && s < self.n,
            _ => s < self.n,
        }
    }

    /// Coxeter matrix entry `m(s, t)`.
    pub fn coxeter_m(&self, s: usize, t: usize) -> usize {
        if s == t {
            return 1;
        }
        let (s, t) = (s.min(t), s.max(t));
        match (self.family, s) {
            (Family::B, 0) => match t {
                1 => 4,
                _ => 2,
            },
            (Family::D, 0) => match t {
                2 => 3,
                _ => 2,
            },
            _ => {
                if t == s + 1 {
                    3
                } else {
                    2
                }
            }
        }
    }

    pub fn order(&self) -> u128 {
        let fact: u128 = (1..=self.n as u128).product();
        match self.family {
            Family::A => fact,
            Family::B => fact << self.n,
            Family::D => fact << (self.n - 1),
        }
    }

    pub fn identity(&self) -> Element {
        Element::identity(self.n)
    }

    pub fn contains(&self, w: &Element) -> bool {
        w.n() == self.n
            && match self.family {
                Family::A => w.0.iter().all(|&x| x > 0),
                Family::B => true,
                Family::D => w.neg().is_multiple_of(2),
            }
    }

    /// Validates a window as a member of this group.
    pub fn element(&self, window: Vec<i32>) -> Result<Element> {
        let w = Element::from_window(window)?;
        if !self.contains(&w) {
            return Err(Error::InvalidElement(format!("{w} is not in {self}")));
        }
        Ok(w)
    }

    pub fn parse_element(&self, s: &str) -> Result<Element> {
        let w = Element::parse(s)?;
        if !self.contains(&w) {
            return Err(Error::Parse(format!("{w} is not in {self}")));
        }
        Ok(w)
    }

    pub fn generator(&self, s: usize) -> Element {
        self.right_mul_gen(&self.identity(), s)
    }

    /// `w * s`, acting on positions.
    pub fn right_mul_gen(&self, w: &Element, s: usize) -> Element {
        assert!(self.is_generator(s), "s_{s} is not a generator of {self}");
        let mut v = w.0.clone();
        if s == 0 {
            match self.family {
                Family::B => v[0] = -v[0],
                Family::D => {
                    let a = v[0];
                    v[0] = -v[1];
                    v[1] = -a;
                }
                Family::A => unreachable!(),
            }
        } else {
            v.swap(s - 1, s);
        }
        Element(v)
    }

    /// `s * w`, acting on values.
    pub fn left_mul_gen(&self, s: usize, w: &Element) -> Element {
        &self.generator(s) * w
    }

    /// `s` is a right descent of `w`, i.e. `l(ws) < l(w)`.
    pub fn is_descent(&self, w: &Element, s: usize) -> bool {
        let v = &w.0;
        if s == 0 {
            match self.family {
                Family::B => v[0] < 0,
                Family::D => v[0] + v[1] < 0,
                Family::A => false,
            }
        } else {
            v[s - 1] > v[s]
        }
    }

    pub fn descent_set(&self, w: &Element) -> SubsetMask {
        let mut m = SubsetMask::EMPTY;
        for s in self.generators() {
            if self.is_descent(w, s) {
                m.insert(s);
            }
        }
        m
    }

    /// Left descents: `D(w^{-1})`.
    pub fn left_descent_set(&self, w: &Element) -> SubsetMask {
        self.descent_set(&w.inverse())
    }

    pub fn length(&self, w: &Element) -> usize {
        match self.family {
            Family::A => w.inv(),
            Family::B => w.inv() + w.neg() + w.nsp(),
            Family::D => w.inv() + w.nsp(),
        }
    }

    /// Greedy reduced word: repeatedly peel the smallest right descent.
    pub fn reduced_word(&self, w: &Element) -> Vec<usize> {
        let mut cur = w.clone();
        let mut word = Vec::new();
        while let Some(s) = self.descent_set(&cur).min() {
            word.push(s);
            cur = self.right_mul_gen(&cur, s);
        }
        word.reverse();
        word
    }

    pub fn from_word(&self, word: &[usize]) -> Element {
        word.iter().fold(self.identity(), |w, &s| self.right_mul_gen(&w, s))
    }

    /// Longest element of `W_I` by greedy ascent.
    pub fn longest_element(&self, i: SubsetMask) -> Element {
        let mut w = self.identity();
        loop {
            let d = self.descent_set(&w);
            match i.difference(d).min() {
                Some(s) => w = self.right_mul_gen(&w, s),
                None => return w,
            }
        }
    }

    /// `w = w^I * _I w` with `D(w^I)` disjoint from `I` and `_I w` in `W_I`.
    pub fn decompose_left(&self, w: &Element, i: SubsetMask) -> (Element, Element) {
        let mut rep = w.clone();
        while let Some(s) = self.descent_set(&rep).intersection(i).min() {
            rep = self.right_mul_gen(&rep, s);
        }
        let part = &rep.inverse() * w;
        (rep, part)
    }

    /// `w = w_I * ^I w` with `w_I` in `W_I` and `D((^I w)^{-1})` disjoint from `I`.
    pub fn decompose_right(&self, w: &Element, i: SubsetMask) -> (Element, Element) {
        let (rep, part) = self.decompose_left(&w.inverse(), i);
        (part.inverse(), rep.inverse())
    }

    /// Membership in the parabolic subgroup `W_I`.
    pub fn in_parabolic(&self, w: &Element, i: SubsetMask) -> bool {
        self.decompose_left(w, i).0.is_identity()
    }

    /// Cached enumeration of the whole group.
    pub fn group(&self) -> Result<Arc<Group>> {
        static CACHE: OnceLock<Mutex<HashMap<CoxeterSystem, Arc<Group>>>> = OnceLock::new();
        let cap = max_order();
        if self.order() > cap {
            return Err(Error::CapExceeded { order: self.order(), cap });
        }
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(g) = cache.lock().expect("group cache poisoned").get(self) {
            return Ok(g.clone());
        }
        let g = Arc::new(Group::build(*self));
        cache.lock().expect("group cache poisoned").entry(*self).or_insert(g.clone());
        Ok(g)
    }

    pub fn elements(&self) -> Result<Arc<Vec<Element>>> {
        Ok(self.group()?.elements.clone())
    }

    /// The parabolic subgroup `W_I`.
    pub fn parabolic(&self, i: SubsetMask) -> Result<Arc<Vec<Element>>> {
        let g = self.group()?;
        Ok(g.memo(Memo::Parabolic(i), || g.elements.iter().filter(|w| self.in_parabolic(w, i)).cloned().collect()))
    }

    /// `W^I` (side `Left`) or `^IW` (side `Right`).
    pub fn min_coset_reps(&self, i: SubsetMask, side: Side) -> Result<Arc<Vec<Element>>> {
        self.relative_coset_reps(i, self.full_set(), side)
    }

    /// Minimal coset representatives of `W_I` inside `W_J`: `W_J^I` or `^I W_J`.
    pub fn relative_coset_reps(&self, i: SubsetMask, j: SubsetMask, side: Side) -> Result<Arc<Vec<Element>>> {
        let g = self.group()?;
        let within = self.parabolic(j)?;
        Ok(g.memo(Memo::Cosets(i, j, side), || {
            within
                .iter()
                .filter(|z| {
                    let d = match side {
                        Side::Left => g.descents_of(z),
                        Side::Right => g.descents_of(&z.inverse()),
                    };
                    d.intersection(i).is_empty()
                })
                .cloned()
                .collect()
        }))
    }

    /// `{w : D(w) = I}`.
    pub fn descent_class(&self, i: SubsetMask) -> Result<Arc<Vec<Element>>> {
        self.descent_class_within(i, self.full_set())
    }

    /// `{w in W_J : D(w) = I}`, the descent class of the parabolic subgroup `W_J`.
    pub fn descent_class_within(&self, i: SubsetMask, j: SubsetMask) -> Result<Arc<Vec<Element>>> {
        let g = self.group()?;
        let within = self.parabolic(j)?;
        Ok(g.memo(Memo::Class(i, j), || within.iter().filter(|w| g.descents_of(w) == i).cloned().collect()))
    }

    /// Whether `W_I` and `W_J` are conjugate subgroups.
    pub fn parabolics_conjugate(&self, i: SubsetMask, j: SubsetMask) -> Result<bool> {
        let wi = self.parabolic(i)?;
        let wj = self.parabolic(j)?;
        if wi.len() != wj.len() {
            return Ok(false);
        }
        let gens: Vec<Element> = i.iter().map(|s| self.generator(s)).collect();
        for w in self.elements()?.iter() {
            let winv = w.inverse();
            if gens.iter().all(|s| self.in_parabolic(&(&(w * s) * &winv), j)) {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Classes of subsets under `I ~ J` iff `W_{I^c}` and `W_{J^c}` are conjugate.
    pub fn parabolic_conjugacy_classes(&self) -> Result<Vec<Vec<SubsetMask>>> {
        let full = self.full_set();
        let mut classes: Vec<Vec<SubsetMask>> = Vec::new();
        for i in full.subsets() {
            let mut placed = false;
            for class in classes.iter_mut() {
                if self.parabolics_conjugate(full.difference(i), full.difference(class[0]))? {
                    class.push(i);
                    placed = true;
                    break;
                }
            }
            if !placed {
                classes.push(vec![i]);
            }
        }
        Ok(classes)
    }
}

impl fmt::Display for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family, self.rank())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Memo {
    Parabolic(SubsetMask),
    Cosets(SubsetMask, SubsetMask, Side),
    Class(SubsetMask, SubsetMask),
}

/// An enumerated group with lookup tables. Shared read-only after construction.
pub struct Group {
    pub system: CoxeterSystem,
    pub elements: Arc<Vec<Element>>,
    index: HashMap<Element, usize>,
    descents: Vec<SubsetMask>,
    memo: Mutex<HashMap<Memo, Arc<Vec<Element>>>>,
}

impl Group {
    fn build(sys: CoxeterSystem) -> Group {
        let n = sys.n;
        let mut perms: Vec<Vec<i32>> = vec![Vec::new()];
        for _ in 0..n {
            let mut next = Vec::new();
            for p in &perms {
                for v in 1..=n as i32 {
                    if !p.contains(&v) {
                        let mut q = p.clone();
                        q.push(v);
                        next.push(q);
                    }
                }
            }
            perms = next;
        }
        let signed = sys.family != Family::A;
        let mut elements = Vec::new();
        for p in perms {
            let patterns = if signed { 1u64 << n } else { 1 };
            for signs in 0..patterns {
                let w: Vec<i32> =
                    p.iter().enumerate().map(|(k, &x)| if signs >> k & 1 == 1 { -x } else { x }).collect();
                let e = Element(w);
                if sys.contains(&e) {
                    elements.push(e);
                }
            }
        }
        elements.sort();
        let index = elements.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
        let descents = elements.iter().map(|w| sys.descent_set(w)).collect();
        Group { system: sys, elements: Arc::new(elements), index, descents, memo: Mutex::new(HashMap::new()) }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, w: &Element) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Descent set, read from the table when `w` belongs to the group.
    pub fn descents_of(&self, w: &Element) -> SubsetMask {
        match self.index.get(w) {
            Some(&k) => self.descents[k],
            None => self.system.descent_set(w),
        }
    }

    fn memo(&self, key: Memo, f: impl FnOnce() -> Vec<Element>) -> Arc<Vec<Element>> {
        if let Some(v) = self.memo.lock().expect("memo poisoned").get(&key) {
            return v.clone();
        }
        let v = Arc::new(f());
        self.memo.lock().expect("memo poisoned").entry(key).or_insert(v).clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(w: &[i32]) -> Element {
        Element::from_window(w.to_vec()).unwrap()
    }

    #[test]
    fn composition_in_b2() {
        let b2 = CoxeterSystem::b(2);
        assert_eq!(&b2.generator(1) * &b2.generator(0), el(&[-2, 1]));
    }

    #[test]
    fn composition_in_s3() {
        assert_eq!(&el(&[2, 1, 3]) * &el(&[2, 3, 1]), el(&[1, 3, 2]));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(el(&[2, -4, -3, 1]).inverse(), el(&[4, 1, -3, -2]));
        assert_eq!(el(&[2, 3, 1]).inverse(), el(&[3, 1, 2]));
    }

    #[test]
    fn orders() {
        assert_eq!(CoxeterSystem::a(4).elements().unwrap().len(), 24);
        assert_eq!(CoxeterSystem::b(3).elements().unwrap().len(), 48);
        assert_eq!(CoxeterSystem::d(4).elements().unwrap().len(), 192);
    }

    #[test]
    fn s0_generators() {
        assert_eq!(CoxeterSystem::b(3).generator(0), el(&[-1, 2, 3]));
        assert_eq!(CoxeterSystem::d(3).generator(0), el(&[-2, -1, 3]));
    }

    #[test]
    fn descent_examples() {
        let b3 = CoxeterSystem::b(3);
        assert_eq!(b3.descent_set(&el(&[-1, 2, 3])), SubsetMask::singleton(0));
        let s4 = CoxeterSystem::a(4);
        assert_eq!(s4.descent_set(&el(&[2, 4, 3, 1])), SubsetMask::from_indices([2, 3]));
    }

    #[test]
    fn longest_elements() {
        let s3 = CoxeterSystem::a(3);
        assert_eq!(s3.longest_element(s3.full_set()), el(&[3, 2, 1]));
        let b2 = CoxeterSystem::b(2);
        assert_eq!(b2.longest_element(b2.full_set()), el(&[-1, -2]));
        assert_eq!(b2.length(&el(&[-1, -2])), 4);
    }

    #[test]
    fn cap_is_enforced() {
        let big = CoxeterSystem::a(11);
        assert!(matches!(big.group(), Err(Error::CapExceeded { .. })));
    }
}
