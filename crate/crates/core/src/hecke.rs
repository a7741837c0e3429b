//! Finite-dimensional modules over 0-Hecke algebras `H_W(0)` and their
//! parabolic subalgebras, over the rationals.
//!
//! A module stores one integer matrix per acting generator: column `j` holds
//! the image of basis vector `j` under `pi-bar_s`.

use std::collections::BTreeMap;
use std::fmt;

use num::Zero;
use serde::Serialize;

use crate::coxeter::{CoxeterSystem, Element, Family, Side};
use crate::descent::compute_lk;
use crate::error::{Error, Result};
use crate::linalg::{nullspace, q, rank, rref, to_i64, QMatrix, Q};
use crate::maps::SubsetVector;
use crate::series::{basis_element, fundamental_qsym, key_of, BasisKind, CPoly, Construction, NCSeries};
use crate::subset::SubsetMask;

pub type IMatrix = Vec<Vec<i64>>;

#[derive(Clone, PartialEq, Eq)]
pub struct HModule {
    sys: CoxeterSystem,
    acting: SubsetMask,
    dim: usize,
    mats: BTreeMap<usize, IMatrix>,
    labels: Vec<String>,
}

impl HModule {
    /// A module from explicit generator matrices; the relations are checked.
    pub fn new(
        sys: &CoxeterSystem,
        acting: SubsetMask,
        mats: BTreeMap<usize, IMatrix>,
        labels: Vec<String>,
    ) -> Result<Self> {
        let dim = labels.len();
        if mats.keys().copied().collect::<Vec<_>>() != acting.indices() {
            return Err(Error::Mismatch(format!("matrices given for {:?}, acting set {acting}", mats.keys())));
        }
        if mats.values().any(|m| m.len() != dim || m.iter().any(|r| r.len() != dim)) {
            return Err(Error::Invalid(format!("generator matrices must be {dim}x{dim}")));
        }
        let module = HModule { sys: *sys, acting, dim, mats, labels };
        module.check_relations()?;
        Ok(module)
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }

    pub fn acting(&self) -> SubsetMask {
        self.acting
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// The matrix of `pi-bar_s`.
    pub fn matrix(&self, s: usize) -> Option<&IMatrix> {
        self.mats.get(&s)
    }

    /// The matrix of `pi_s = pi-bar_s + 1`.
    pub fn pi_matrix(&self, s: usize) -> Option<IMatrix> {
        self.mats.get(&s).map(|m| {
            let mut p = m.clone();
            for (k, row) in p.iter_mut().enumerate() {
                row[k] += 1;
            }
            p
        })
    }

    /// `X^2 = -X` for every generator and the braid relations for every pair.
    pub fn check_relations(&self) -> Result<()> {
        for (&s, x) in &self.mats {
            let sq = int_mul(x, x)?;
            if sq.iter().zip(x).any(|(a, b)| a.iter().zip(b).any(|(u, v)| *u != -v)) {
                return Err(Error::Invalid(format!("quadratic relation fails for generator {s}")));
            }
        }
        for (&s, x) in &self.mats {
            for (&t, y) in self.mats.range(s + 1..) {
                let m = self.sys.coxeter_m(s, t);
                if alternating(x, y, m, self.dim)? != alternating(y, x, m, self.dim)? {
                    return Err(Error::Invalid(format!("braid relation fails for generators {s}, {t}")));
                }
            }
        }
        Ok(())
    }

    fn q_mats(&self) -> Vec<(usize, QMatrix)> {
        self.mats.iter().map(|(&s, m)| (s, m.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())).collect()
    }

    /// `{"family":..,"n":..,"acting":[..],"dim":..,"labels":[..],"matrices":{"s":[[..]]}}`.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct ModuleJson<'a> {
            family: Family,
            n: usize,
            acting: Vec<usize>,
            dim: usize,
            labels: &'a [String],
            matrices: BTreeMap<String, &'a IMatrix>,
        }
        let json = ModuleJson {
            family: self.sys.family(),
            n: self.sys.n(),
            acting: self.acting.indices(),
            dim: self.dim,
            labels: &self.labels,
            matrices: self.mats.iter().map(|(s, m)| (s.to_string(), m)).collect(),
        };
        serde_json::to_string(&json).expect("serializable")
    }
}

impl fmt::Debug for HModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HModule({}{} acting {}, dim {})", self.sys.family(), self.sys.n(), self.acting, self.dim)
    }
}

fn int_mul(a: &IMatrix, b: &IMatrix) -> Result<IMatrix> {
    let n = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| {
                    row.iter().zip(b).try_fold(0i64, |acc, (&x, r)| {
                        if x == 0 || r[j] == 0 {
                            return Some(acc);
                        }
                        acc.checked_add(x.checked_mul(r[j])?)
                    })
                })
                .collect::<Option<Vec<i64>>>()
                .ok_or(Error::Overflow)
        })
        .collect()
}

/// `x y x y ...` with `m` factors.
fn alternating(x: &IMatrix, y: &IMatrix, m: usize, dim: usize) -> Result<IMatrix> {
    let mut out: IMatrix = (0..dim).map(|i| (0..dim).map(|j| i64::from(i == j)).collect()).collect();
    for k in 0..m {
        out = int_mul(&out, if k % 2 == 0 { x } else { y })?;
    }
    Ok(out)
}

fn to_int(m: &QMatrix) -> Result<IMatrix> {
    m.iter()
        .map(|r| {
            r.iter()
                .map(|x| to_i64(x).ok_or_else(|| Error::Invalid(format!("non-integral action entry {x}"))))
                .collect()
        })
        .collect()
}

/// `H_{W_K}(0)` acting on itself by left multiplication, basis `pi-bar_w` for `w` in `W_K`.
pub fn regular_module_within(sys: &CoxeterSystem, k: SubsetMask) -> Result<HModule> {
    let elems = sys.parabolic(k)?;
    let index: BTreeMap<&Element, usize> = elems.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let dim = elems.len();
    let mut mats = BTreeMap::new();
    for s in k.iter() {
        let mut m = vec![vec![0i64; dim]; dim];
        for (j, w) in elems.iter().enumerate() {
            if sys.left_descent_set(w).contains(s) {
                m[j][j] = -1;
            } else {
                m[index[&sys.left_mul_gen(s, w)]][j] = 1;
            }
        }
        mats.insert(s, m);
    }
    let labels = elems.iter().map(|w| w.to_string()).collect();
    Ok(HModule { sys: *sys, acting: k, dim, mats, labels })
}

pub fn regular_module(sys: &CoxeterSystem) -> Result<HModule> {
    regular_module_within(sys, sys.full_set())
}

/// `C_I` over `H_{W_K}(0)`: `pi-bar_s` acts by `-1` for `s` in `I`, by `0` otherwise.
pub fn simple_module(sys: &CoxeterSystem, k: SubsetMask, i: SubsetMask) -> Result<HModule> {
    if !i.is_subset(k) {
        return Err(Error::Mismatch(format!("{i} is not inside {k}")));
    }
    let mats = k.iter().map(|s| (s, vec![vec![if i.contains(s) { -1 } else { 0 }]])).collect();
    Ok(HModule { sys: *sys, acting: k, dim: 1, mats, labels: vec![format!("C{i}")] })
}

fn apply(m: &IMatrix, v: &[i64], pi: bool) -> Vec<i64> {
    (0..v.len()).map(|i| m[i].iter().zip(v).map(|(a, b)| a * b).sum::<i64>() + if pi { v[i] } else { 0 }).collect()
}

/// `pi-bar_{s_1} ... pi-bar_{s_k} v` (or with `pi`), rightmost factor first.
fn apply_word(reg: &HModule, word: &[usize], v: Vec<i64>, pi: bool) -> Vec<i64> {
    word.iter().rev().fold(v, |v, s| apply(&reg.mats[s], &v, pi))
}

/// Coordinates of each target in the independent columns `basis`.
fn coordinates(basis: &[Vec<Q>], targets: &[Vec<Q>]) -> Result<Vec<Vec<Q>>> {
    let rows = basis.first().map_or(0, |b| b.len());
    let d = basis.len();
    let mut aug: QMatrix = (0..rows).map(|r| basis.iter().chain(targets).map(|c| c[r].clone()).collect()).collect();
    let pivots = rref(&mut aug);
    if pivots.iter().take_while(|&&p| p < d).count() < d {
        return Err(Error::Invalid("basis vectors are dependent".into()));
    }
    if pivots.iter().any(|&p| p >= d) {
        return Err(Error::NotInSpan("action leaves the span of the basis".into()));
    }
    Ok((0..targets.len()).map(|t| (0..d).map(|r| aug[r][d + t].clone()).collect()).collect())
}

/// `P^K_{I,J} = H_{W_K}(0) pi-bar_{w_0(I)} pi_{w_0(J \ I)}` on the basis
/// `pi-bar_w pi_{w_0(J \ I)}` with `w` in `W_K` and `I <= D(w) <= (K \ J) u I`.
///
/// The basis is checked to be independent and stable under the action, so it
/// spans exactly the cyclic module.
pub fn projective_module_within(sys: &CoxeterSystem, k: SubsetMask, i: SubsetMask, j: SubsetMask) -> Result<HModule> {
    if !i.is_subset(k) || !j.is_subset(k) {
        return Err(Error::Mismatch(format!("{i} and {j} must lie inside {k}")));
    }
    let j = j.union(i);
    let reg = regular_module_within(sys, k)?;
    let elems = sys.parabolic(k)?;
    let id = elems.iter().position(|w| w.is_identity()).expect("identity present");
    let mut unit = vec![0i64; reg.dim];
    unit[id] = 1;
    let tail = apply_word(&reg, &sys.reduced_word(&sys.longest_element(j.difference(i))), unit, true);
    let upper = k.difference(j).union(i);
    let members: Vec<&Element> = elems
        .iter()
        .filter(|w| {
            let d = sys.descent_set(w);
            i.is_subset(d) && d.is_subset(upper)
        })
        .collect();
    let basis: Vec<Vec<i64>> =
        members.iter().map(|w| apply_word(&reg, &sys.reduced_word(w), tail.clone(), false)).collect();
    let qbasis: Vec<Vec<Q>> = basis.iter().map(|b| b.iter().map(|&x| q(x)).collect()).collect();
    let gens = k.indices();
    let images: Vec<Vec<Q>> = gens
        .iter()
        .flat_map(|s| basis.iter().map(|b| apply(&reg.mats[s], b, false).into_iter().map(q).collect::<Vec<Q>>()))
        .collect();
    let coords = coordinates(&qbasis, &images)?;
    let d = basis.len();
    let mut mats = BTreeMap::new();
    for (g, &s) in gens.iter().enumerate() {
        let cols = &coords[g * d..(g + 1) * d];
        let m: QMatrix = (0..d).map(|r| (0..d).map(|c| cols[c][r].clone()).collect()).collect();
        mats.insert(s, to_int(&m)?);
    }
    let labels = members.iter().map(|w| w.to_string()).collect();
    Ok(HModule { sys: *sys, acting: k, dim: d, mats, labels })
}

pub fn projective_module(sys: &CoxeterSystem, i: SubsetMask, j: SubsetMask) -> Result<HModule> {
    projective_module_within(sys, sys.full_set(), i, j)
}

/// The projective indecomposable `P_I = P_{I,S}`.
pub fn indecomposable_projective(sys: &CoxeterSystem, i: SubsetMask) -> Result<HModule> {
    projective_module(sys, i, sys.full_set())
}

/// Induction from `H_{W_I}(0)` to `H_W(0)` on the basis `pi-bar_z (x) m`,
/// `z` in `W^I` ordered by length.
pub fn induce(m: &HModule) -> Result<HModule> {
    let sys = &m.sys;
    let i = m.acting;
    let mut reps: Vec<Element> = sys.min_coset_reps(i, Side::Left)?.to_vec();
    reps.sort_by_key(|z| (sys.length(z), z.clone()));
    let pos: BTreeMap<&Element, usize> = reps.iter().enumerate().map(|(k, z)| (z, k)).collect();
    let d = m.dim;
    let dim = reps.len() * d;
    let mut mats = BTreeMap::new();
    for s in sys.generators() {
        let mut x = vec![vec![0i64; dim]; dim];
        for (a, z) in reps.iter().enumerate() {
            if sys.left_descent_set(z).contains(s) {
                for t in 0..d {
                    x[a * d + t][a * d + t] = -1;
                }
                continue;
            }
            let sz = sys.left_mul_gen(s, z);
            if let Some(&b) = pos.get(&sz) {
                for t in 0..d {
                    x[b * d + t][a * d + t] = 1;
                }
                continue;
            }
            let r_elem = &z.inverse() * &sz;
            let r = i
                .iter()
                .find(|&r| sys.generator(r) == r_elem)
                .ok_or_else(|| Error::Invalid(format!("{s} z is neither a coset ascent nor z r for z = {z}")))?;
            let mr = &m.mats[&r];
            for t in 0..d {
                for u in 0..d {
                    x[a * d + u][a * d + t] = mr[u][t];
                }
            }
        }
        mats.insert(s, x);
    }
    let labels = reps.iter().flat_map(|z| m.labels.iter().map(move |l| format!("{z}*{l}"))).collect();
    Ok(HModule { sys: *sys, acting: sys.full_set(), dim, mats, labels })
}

/// The same space viewed over `H_{W_I}(0)`.
pub fn restrict(m: &HModule, i: SubsetMask) -> Result<HModule> {
    if !i.is_subset(m.acting) {
        return Err(Error::Mismatch(format!("{i} is not inside the acting set {}", m.acting)));
    }
    let mats = m.mats.iter().filter(|(s, _)| i.contains(**s)).map(|(&s, x)| (s, x.clone())).collect();
    Ok(HModule { sys: m.sys, acting: i, dim: m.dim, mats, labels: m.labels.clone() })
}

/// Which Grothendieck group a vector lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GKind {
    /// Classes of simples `C_I`.
    G0,
    /// Classes of projective indecomposables `P_I`.
    K0,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grothendieck {
    pub kind: GKind,
    pub terms: SubsetVector,
}

impl Grothendieck {
    /// `<P_I, C_J> = delta_{IJ}`.
    pub fn pairing(&self, other: &Grothendieck) -> Result<i64> {
        if self.kind == other.kind {
            return Err(Error::Mismatch("pairing needs one G0 and one K0 vector".into()));
        }
        Ok(self.terms.pairing(&other.terms))
    }

    pub fn total(&self) -> i64 {
        self.terms.total()
    }
}

impl fmt::Display for Grothendieck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            GKind::G0 => "C",
            GKind::K0 => "P",
        };
        let terms: Vec<String> = self
            .terms
            .iter()
            .map(|(i, c)| if c == 1 { format!("{name}{i}") } else { format!("{c}*{name}{i}") })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// Columns `b` with `x b` inside the span for the common eigenspace `x v = lambda v`.
fn common_eigenspace(mats: &[(usize, QMatrix)], pattern: SubsetMask, dim: usize) -> Vec<Vec<Q>> {
    // basis of the current space as columns
    let mut basis: Vec<Vec<Q>> = (0..dim).map(|c| (0..dim).map(|r| q(i64::from(r == c))).collect()).collect();
    for (s, x) in mats {
        if basis.is_empty() {
            break;
        }
        let lambda = if pattern.contains(*s) { q(-1) } else { q(0) };
        // (x - lambda) B c = 0
        let rows: QMatrix = (0..dim)
            .map(|r| {
                basis
                    .iter()
                    .map(|b| {
                        let mut acc = -&lambda * &b[r];
                        for (k, bk) in b.iter().enumerate() {
                            if !bk.is_zero() && !x[r][k].is_zero() {
                                acc += &x[r][k] * bk;
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        let kernel = nullspace(&rows, basis.len());
        basis = kernel
            .iter()
            .map(|c| {
                (0..dim)
                    .map(|r| {
                        basis.iter().zip(c).fold(q(0), |acc, (b, ck)| if ck.is_zero() { acc } else { acc + &b[r] * ck })
                    })
                    .collect()
            })
            .collect();
    }
    basis
}

/// Composition factors by repeated socle extraction.
pub fn composition_factors(m: &HModule) -> Grothendieck {
    let mut mats = m.q_mats();
    let mut dim = m.dim;
    let mut terms = SubsetVector::new();
    let patterns = m.acting.subsets();
    while dim > 0 {
        let (pattern, v) = patterns
            .iter()
            .find_map(|&p| common_eigenspace(&mats, p, dim).into_iter().next().map(|v| (p, v)))
            .expect("a nonzero module has a simple submodule");
        terms.add_term(pattern, 1);
        let p = v.iter().position(|x| !x.is_zero()).expect("nonzero eigenvector");
        let keep: Vec<usize> = (0..dim).filter(|&k| k != p).collect();
        for (_, x) in mats.iter_mut() {
            let quotient: QMatrix =
                keep.iter().map(|&r| keep.iter().map(|&c| &x[r][c] - &(&x[p][c] * &v[r] / &v[p])).collect()).collect();
            *x = quotient;
        }
        dim -= 1;
    }
    Grothendieck { kind: GKind::G0, terms }
}

/// `dim Hom(M, C_I)`: functionals `phi` with `phi X_s = lambda_s phi`.
#[allow(clippy::needless_range_loop)]
pub fn hom_to_simple(m: &HModule, i: SubsetMask) -> usize {
    let dim = m.dim;
    let mut rows: QMatrix = Vec::new();
    for (s, x) in m.q_mats() {
        let lambda = if i.contains(s) { q(-1) } else { q(0) };
        for c in 0..dim {
            rows.push((0..dim).map(|r| if r == c { &x[r][c] - &lambda } else { x[r][c].clone() }).collect());
        }
    }
    if rows.is_empty() {
        return dim;
    }
    dim - rank(&rows)
}

/// Multiplicities of the `P_I` in a projective module, with a dimension check.
pub fn projective_multiplicities(m: &HModule) -> Result<Grothendieck> {
    let mut terms = SubsetVector::new();
    let mut total = 0usize;
    for i in m.acting.subsets() {
        let c = hom_to_simple(m, i);
        if c > 0 {
            terms.add_term(i, c as i64);
            total += c * m.sys.descent_class_within(i, m.acting)?.len();
        }
    }
    if total != m.dim {
        return Err(Error::Invalid(format!(
            "not projective: multiplicities account for {total} of {} dimensions",
            m.dim
        )));
    }
    Ok(Grothendieck { kind: GKind::K0, terms })
}

/// `dim Hom_H(a, b)` for modules over the same subalgebra.
pub fn hom_dim(a: &HModule, b: &HModule) -> Result<usize> {
    if a.acting != b.acting || a.sys != b.sys {
        return Err(Error::Mismatch("modules over different algebras".into()));
    }
    // unknown phi is b.dim x a.dim, flattened row-major; phi X^a_s = X^b_s phi
    let (p, n) = (b.dim, a.dim);
    let mut rows: QMatrix = Vec::new();
    for s in a.acting.iter() {
        let (xa, xb) = (&a.mats[&s], &b.mats[&s]);
        for r in 0..p {
            for c in 0..n {
                let mut row = vec![q(0); p * n];
                for k in 0..n {
                    row[r * n + k] += q(xa[k][c]);
                }
                for k in 0..p {
                    row[k * n + c] -= q(xb[r][k]);
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return Ok(p * n);
    }
    Ok(p * n - rank(&rows))
}

/// `mu-bar_I(C_w) = sum_{z in ^I W} C_{wz}`.
pub fn induced_simple_prediction(sys: &CoxeterSystem, i: SubsetMask, w: &Element) -> Result<Grothendieck> {
    let mut terms = SubsetVector::new();
    for z in sys.min_coset_reps(i, Side::Right)?.iter() {
        terms.add_term(sys.descent_set(&(w * z)), 1);
    }
    Ok(Grothendieck { kind: GKind::G0, terms })
}

/// `mu_J(P^J_I) = sum_{K <= S \ J} P_{I u K}`.
pub fn induced_projective_prediction(sys: &CoxeterSystem, i: SubsetMask, j: SubsetMask) -> Grothendieck {
    let terms = sys.full_set().difference(j).subsets().into_iter().map(|k| (i.union(k), 1)).collect();
    Grothendieck { kind: GKind::K0, terms }
}

/// `rho_I(P_K) = sum_{z in ^I D_K} sum_{L(z) <= K' <= L'(z)} P^I_{K'}`.
pub fn restricted_projective_prediction(sys: &CoxeterSystem, i: SubsetMask, k: SubsetMask) -> Result<Grothendieck> {
    let mut terms = SubsetVector::new();
    for z in sys.min_coset_reps(i, Side::Right)?.iter() {
        let lk = compute_lk(sys, z, i, k)?;
        if lk.is_member() {
            for kp in lk.interval() {
                terms.add_term(kp, 1);
            }
        }
    }
    Ok(Grothendieck { kind: GKind::K0, terms })
}

fn check_full(sys: &CoxeterSystem, x: &Grothendieck, kind: GKind) -> Result<()> {
    if x.kind != kind {
        return Err(Error::Mismatch(format!("expected a {kind:?} vector")));
    }
    if x.terms.keys().any(|i| !i.is_subset(sys.full_set())) {
        return Err(Error::Mismatch("class outside the generating set".into()));
    }
    Ok(())
}

/// `Ch: C_I -> F_I`, truncated to the window `m`.
pub fn ch_quasisymmetric(sys: &CoxeterSystem, x: &Grothendieck, m: i32) -> Result<CPoly> {
    check_full(sys, x, GKind::G0)?;
    let n = sys.n();
    let mut out = CPoly::zero(n, m);
    for (&i, c) in x.terms.iter() {
        out = out.add(&fundamental_qsym(sys.family(), &key_of(sys.family(), i, n)?, m)?.scale(c))?;
    }
    Ok(out)
}

/// `ch: P_I -> s_I`, truncated to the window `m`.
pub fn ch_noncommutative(sys: &CoxeterSystem, x: &Grothendieck, m: i32) -> Result<NCSeries> {
    check_full(sys, x, GKind::K0)?;
    let n = sys.n();
    let kind = match sys.family() {
        Family::A => BasisKind::SA,
        Family::B => BasisKind::SB,
        Family::D => BasisKind::SD,
    };
    let mut out = NCSeries::zero(n, m);
    for (&i, c) in x.terms.iter() {
        let s = basis_element(kind, &key_of(sys.family(), i, n)?, m, Construction::Tableau)?;
        out = out.add(&s.scale(c))?;
    }
    Ok(out)
}

/// The bubble-sorting operator `pi_i` on integer words: positions are 1-based,
/// `pi_0` is the signed branch of type B or D.
pub fn sort_op(family: Family, i: usize, a: &[i32]) -> Result<Vec<i32>> {
    let mut b = a.to_vec();
    match i {
        0 => match family {
            Family::A => return Err(Error::Invalid("type A has no operator pi_0".into())),
            Family::B => {
                let first = b.first_mut().ok_or_else(|| Error::Invalid("empty word".into()))?;
                if *first > 0 {
                    *first = -*first;
                }
            }
            Family::D => {
                if b.len() < 2 {
                    return Err(Error::Invalid("type D pi_0 needs two letters".into()));
                }
                if b[0] + b[1] > 0 {
                    let (x, y) = (b[0], b[1]);
                    b[0] = -y;
                    b[1] = -x;
                }
            }
        },
        _ => {
            if i >= b.len() {
                return Err(Error::Invalid(format!("no position {} in a word of length {}", i + 1, b.len())));
            }
            if b[i - 1] < b[i] {
                b.swap(i - 1, i);
            }
        }
    }
    Ok(b)
}

/// `pi_{s_1} ... pi_{s_k} a`, rightmost operator first.
pub fn sort_word(family: Family, word: &[usize], a: &[i32]) -> Result<Vec<i32>> {
    word.iter().rev().try_fold(a.to_vec(), |b, &s| sort_op(family, s, &b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_b2() {
        let sys = CoxeterSystem::b(2);
        let r = regular_module(&sys).unwrap();
        assert_eq!(r.dim(), 8);
        r.check_relations().unwrap();
        let p = r.pi_matrix(0).unwrap();
        assert_eq!(int_mul(&p, &p).unwrap(), p);
    }

    #[test]
    fn projective_dims_b2() {
        let sys = CoxeterSystem::b(2);
        let dims: usize =
            sys.full_set().subsets().into_iter().map(|i| indecomposable_projective(&sys, i).unwrap().dim()).sum();
        assert_eq!(dims, 8);
        let s0 = SubsetMask::singleton(0);
        let p = projective_module(&sys, s0, sys.full_set()).unwrap();
        assert_eq!(p.dim(), sys.descent_class(s0).unwrap().len());
    }

    #[test]
    fn simple_factors() {
        let sys = CoxeterSystem::a(3);
        let c = simple_module(&sys, sys.full_set(), SubsetMask::singleton(2)).unwrap();
        let f = composition_factors(&c);
        assert_eq!(f.terms, SubsetVector::basis(SubsetMask::singleton(2)));
    }

    #[test]
    fn sorting_branches() {
        assert_eq!(sort_op(Family::A, 1, &[1, 2]).unwrap(), vec![2, 1]);
        assert_eq!(sort_op(Family::B, 0, &[2, 5]).unwrap(), vec![-2, 5]);
        assert_eq!(sort_op(Family::D, 0, &[2, 5]).unwrap(), vec![-5, -2]);
        assert!(sort_op(Family::A, 0, &[1]).is_err());
    }
}
