//! Named consistency checks, grouped into suites and run in parallel.
//!
//! Every check is evaluated on one Coxeter system. A check reports how many
//! identities it evaluated, or the first counterexample it found.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::coxeter::{CoxeterSystem, Element, Family, Side};
use crate::descent::{self, compute_lk};
use crate::error::{Error, Result};
use crate::hecke;
use crate::linalg::{self, q, qfrac, Q};
use crate::maps::{self, GroupVector, SubsetVector};
use crate::series::{self, BasisKind, Construction, Level, Parset};
use crate::shuffle::{self, Coproduct, Product};
use crate::subset::{Composition, SubsetMask};
use crate::vector::{tensor, FormalVector, TensorVector};

/// Largest group order accepted by the suites that enumerate the whole group.
pub const VERIFY_MAX_ORDER: u128 = 384;

/// Most letters the series suite handles; its words grow like `(2n + 3)^n`.
pub const SERIES_MAX_LETTERS: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Diagrams,
    Duality,
    Shuffles,
    Series,
    Hecke,
    WorkedExamples,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Diagrams, Suite::Duality, Suite::Shuffles, Suite::Series, Suite::Hecke, Suite::WorkedExamples];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Diagrams => "diagrams",
            Suite::Duality => "duality",
            Suite::Shuffles => "shuffles",
            Suite::Series => "series",
            Suite::Hecke => "hecke",
            Suite::WorkedExamples => "worked-examples",
        }
    }

    /// Parses a comma-separated list of suite names; `all` expands to every suite.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        let mut out: Vec<Suite> = Vec::new();
        for name in s.split(',').map(str::trim) {
            let suite = name.parse()?;
            if !out.contains(&suite) {
                out.push(suite);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper-examples" | "examples" => Ok(Suite::WorkedExamples),
            _ => Suite::ALL
                .into_iter()
                .find(|k| k.name() == s)
                .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub evaluations: usize,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SystemInfo {
    pub family: String,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub system: SystemInfo,
    pub suites: Vec<String>,
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            let what = if c.passed { format!("{} evaluations", c.evaluations) } else { c.detail.clone() };
            out.push_str(&format!("{tag}  {:<width$}  {what}\n", c.name));
        }
        out.push_str(&format!(
            "{}_{}: {} passed, {} failed\n",
            self.system.family, self.system.rank, self.passed, self.failed
        ));
        out
    }
}

/// `Ok(evaluations)` or the first counterexample.
type Outcome = std::result::Result<usize, String>;
type Check = fn(&CoxeterSystem) -> Result<Outcome>;

macro_rules! require {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Ok(Err(format!($($arg)+)));
        }
    };
}

/// Runs `suites` on `sys`; results are sorted by check name.
pub fn run(sys: &CoxeterSystem, suites: &[Suite]) -> Result<Report> {
    run_with_cap(sys, suites, VERIFY_MAX_ORDER)
}

/// As [`run`], refusing groups of order above `cap` for the enumerating suites.
pub fn run_with_cap(sys: &CoxeterSystem, suites: &[Suite], cap: u128) -> Result<Report> {
    let needs_group = suites.iter().any(|s| !matches!(s, Suite::Shuffles | Suite::WorkedExamples));
    if needs_group && sys.order() > cap {
        return Err(Error::CapExceeded { order: sys.order(), cap });
    }
    if suites.contains(&Suite::Series) && sys.n() > SERIES_MAX_LETTERS {
        return Err(Error::RankCap(format!("the series suite handles at most {SERIES_MAX_LETTERS} letters")));
    }
    let mut jobs: Vec<(String, Check)> = Vec::new();
    let mut names: Vec<String> = Vec::new();
    for &suite in suites {
        if names.iter().any(|n| n == suite.name()) {
            continue;
        }
        names.push(suite.name().to_string());
        for (name, check) in checks_for(suite, sys.family()) {
            jobs.push((format!("{}.{name}", suite.name()), check));
        }
    }
    let mut checks: Vec<CheckResult> = jobs
        .par_iter()
        .map(|(name, check)| {
            let (passed, evaluations, detail) = match check(sys) {
                Ok(Ok(n)) => (true, n, String::new()),
                Ok(Err(msg)) => (false, 0, msg),
                Err(e) => (false, 0, e.to_string()),
            };
            CheckResult { name: name.clone(), passed, evaluations, detail }
        })
        .collect();
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    let passed = checks.iter().filter(|c| c.passed).count();
    Ok(Report {
        system: SystemInfo { family: sys.family().to_string(), rank: sys.rank() },
        suites: names,
        passed,
        failed: checks.len() - passed,
        checks,
    })
}

fn checks_for(suite: Suite, family: Family) -> Vec<(&'static str, Check)> {
    match suite {
        Suite::Diagrams => vec![
            ("composition.mu", composition_mu),
            ("composition.mu_bar", composition_mu_bar),
            ("composition.rho", composition_rho),
            ("composition.rho_bar", composition_rho_bar),
            ("formula.lk_interval", lk_interval),
            ("formula.sigma_induce", formula_sigma_induce),
            ("formula.sigma_restrict", formula_sigma_restrict),
            ("formula.sigma_star_induce", formula_sigma_star_induce),
            ("formula.sigma_star_restrict", formula_sigma_star_restrict),
            ("square.chi_mu_bar", square_chi_mu_bar),
            ("square.chi_rho_bar", square_chi_rho_bar),
            ("square.inverse_mu", square_inverse_mu),
            ("square.inverse_rho", square_inverse_rho),
            ("square.iota_mu", square_iota_mu),
            ("square.iota_rho", square_iota_rho),
            ("weak_order.descent_classes", weak_order_intervals),
        ],
        Suite::Duality => vec![
            ("adjoint.mu_rho_bar", adjoint_mu_rho_bar),
            ("adjoint.rho_mu_bar", adjoint_rho_mu_bar),
            ("c_form.lambda_nondegenerate", c_form_lambda),
            ("c_form.symmetric", c_form_symmetric),
            ("sym.h_conjugacy", sym_h_conjugacy),
            ("sym.h_gram_double_cosets", sym_h_gram),
            ("sym.h_m_dual", sym_h_m_dual),
        ],
        Suite::Shuffles => shuffle_checks(family),
        Suite::Series => {
            let mut v: Vec<(&'static str, Check)> = vec![
                ("constructions_agree", series_constructions),
                ("expansion_roundtrip", series_roundtrip),
                ("fundamental_theorem", series_fundamental),
            ];
            match family {
                Family::B => v.push(("rational_transition", series_transition)),
                Family::D => v.push(("type_d_from_type_b", series_d_from_b)),
                Family::A => {}
            }
            v
        }
        Suite::Hecke => {
            let mut v: Vec<(&'static str, Check)> = vec![
                ("induced_projectives", hecke_induced_projectives),
                ("induced_simples", hecke_induced_simples),
                ("projective_dims", hecke_projective_dims),
                ("regular_relations", hecke_regular),
                ("restricted_projectives", hecke_restricted_projectives),
            ];
            if family != Family::A {
                v.push(("characteristic", hecke_characteristic));
            }
            v
        }
        Suite::WorkedExamples => match family {
            Family::A => vec![("type_a", examples_a)],
            Family::B => vec![("type_b", examples_b), ("signed", examples_bb)],
            Family::D => vec![("type_d", examples_d)],
        },
    }
}

fn basis(w: &Element) -> GroupVector {
    GroupVector::basis(w.clone())
}

fn el(s: &str) -> Element {
    Element::parse(s).expect("valid literal window")
}

fn gv(items: &[&str]) -> GroupVector {
    FormalVector::from_keys(items.iter().map(|s| el(s)))
}

fn tv(items: &[(&str, &str)]) -> TensorVector<Element, Element> {
    FormalVector::from_keys(items.iter().map(|(a, b)| (el(a), el(b))))
}

// diagrams

fn composition_mu(sys: &CoxeterSystem) -> Result<Outcome> {
    let mut n = 0;
    for j in sys.full_set().subsets() {
        for i in j.subsets() {
            for u in sys.parabolic(i)?.iter() {
                let x = basis(u);
                let lhs = maps::mu(sys, j, &maps::mu_within(sys, i, j, &x)?)?;
                require!(lhs == maps::mu(sys, i, &x)?, "I={i}, J={j}, u={u}");
                n += 1;
            }
        }
    }
    Ok(Ok(n))
}

fn composition_mu_bar(sys: &CoxeterSystem) -> Result<Outcome> {
    let mut n = 0;
    for j in sys.full_set().subsets() {
        for i in j.subsets() {
            for u in sys.parabolic(i)?.iter() {
                let x = basis(u);
                let lhs = maps::mu_bar(sys, j, &maps::mu_bar_within(sys, i, j, &x)?)?;
                require!(lhs == maps::mu_bar(sys, i, &x)?, "I={i}, J={j}, u={u}");
                n += 1;
            }
        }
    }
    Ok(Ok(n))
}

fn composition_rho(sys: &CoxeterSystem) -> Result<Outcome> {
    let mut n = 0;
    let all = sys.elements()?;
    for j in sys.full_set().subsets() {
        for i in j.subsets() {
            for w in all.iter() {
                let x = basis(w);
                let lhs = maps::rho_within(sys, i, j, &maps::rho(sys, j, &x)?)?;
                require!(lhs == maps::rho(sys, i, &x)?, "I={i}, J={j}, w={w}");
                n += 1;
            }
        }
    }
    Ok(Ok(n))
}

fn composition_rho_bar(sys: &CoxeterSystem) -> Result<Outcome> {
    let mut n = 0;
    let all = sys.elements()?;
    for j in sys.full_set().subsets() {
        for i in j.subsets() {
            for w in all.iter() {
                let x = basis(w);
                let lhs = maps::rho_bar_within(sys, i, j, &maps::rho_bar(sys, j, &x)?)?;
                require!(lhs == maps::rho_bar(sys, i, &x)?, "I={i}, J={j}, w={w}");
                n += 1;
            }
        }
    }
    Ok(Ok(n))
}

fn square_iota_mu(sys: &CoxeterSystem) -> Result<Outcome> {
    let full = sys.full_set();
    let mut n = 0;
    for i in full.subsets() {
        for j in i.subsets() {
            let x = SubsetVector::basis(j);
            let top = descent::iota(sys, full, &descent::sigma_induce(sys, i, &x)?)?;
            require!(top == maps::mu(sys, i, &descent::iota(sys, i, &x)?)?, "I={i}, J={j}");
            n += 1;
        }
    }
    Ok(Ok(n))
}

fn square_inverse_mu(sys: &CoxeterSystem) -> Result<Outcome> {
    let mut n = 0;
    for i in sys.full_set().subsets() {
        for u in sys.parabolic(i)?.iter() {
            let x = basis(u);
            let lhs = maps::invert_vector(&maps::mu(sys, i, &x)?);
            require!(lhs == maps::mu_bar(sys, i, &maps::invert_vector(&x))?, "I={i}, u={u}");
            n += 1;
        }
    }
    Ok(Ok(n))
}

fn square_chi_mu_bar(sys: &CoxeterSystem) -> Result<Outcome> {
    let mut n = 0;
    for i in sys.full_set().subsets() {
        for u in sys.parabolic(i)?.iter() {
            let x = basis(u);
            let lhs = maps::chi(sys, &maps::mu_bar(sys, i, &x)?);
            require!(lhs == descent::sigma_star_induce(sys, i, &maps::chi(sys, &x))?, "I={i}, u={u}");
            n += 1;
        }
    }
    Ok(Ok(n))
}

fn square_iota_rho(sys: &CoxeterSystem) -> Result<Outcome> {
    let full = sys.full_set();
    let mut n = 0;
    for i in full.subsets() {
        for k in full.subsets() {
            let x = SubsetVector::basis(k);
            let lhs = descent::iota(sys, i, &descent::sigma_restrict(sys, i, &x)?)?;
            require!(lhs == maps::rho(sys, i, &descent::iota(sys, full, &x)?)?, "I={i}, K={k}");
            n += 1;
        }
    }
    Ok(Ok(n))
}

fn square_inverse_rho(sys: &CoxeterSystem) -> Result<Outcome> {
    let mut n = 0;
    let all = sys.elements()?;
    for i in sys.full_set().subsets() {
        for w in all.iter() {
            let x = basis(w);
            let lhs = maps::invert_vector(&maps::rho(sys, i, &x)?);
            require!(lhs == maps::rho_bar(sys, i, &maps::invert_vector(&x))?, "I={i}, w={w}");
            n += 1;
        }
    }
    Ok(Ok(n))
}

fn square_chi_rho_bar(sys: &CoxeterSystem) -> Result<Outcome> {
    let mut n = 0;
    let all = sys.elements()?;
    for i in sys.full_set().subsets() {
        for w in all.iter() {
            let x = basis(w);
            let lhs = maps::chi(sys, &maps::rho_bar(sys, i, &x)?);
            require!(lhs == descent::sigma_star_restrict(i, &maps::chi(sys, &x)), "I={i}, w={w}");
            n += 1;
        }
    }
    Ok(Ok(n))
}

fn formula_sigma_induce(sys: &CoxeterSystem) -> Result<Outcome> {
    let full = sys.full_set();
    let mut n = 0;
    for i in full.subsets() {
        for j in i.subsets() {
            let x = SubsetVector::basis(j);
            let oracle = descent::collect(sys, full, &maps::mu(sys, i, &descent::iota(sys, i, &x)?)?)?;
            require!(descent::sigma_induce(sys, i, &x)? == oracle, "I={i}, J={j}");
            n += 1;
        }
    }
    Ok(Ok(n))
}

fn formula_sigma_restrict(sys: &CoxeterSystem) -> Result<Outcome> {
    let full = sys.full_set();
    let mut n = 0;
    for i in full.subsets() {
        for k in full.subsets() {
            let x = SubsetVector::basis(k);
            let oracle = descent::collect(sys, i, &maps::rho(sys, i, &descent::iota(sys, full, &x)?)?)?;
            require!(descent::sigma_restrict(sys, i, &x)? == oracle, "I={i}, K={k}");
            n += 1;
        }
    }
    Ok(Ok(n))
}

fn formula_sigma_star_induce(sys: &CoxeterSystem) -> Result<Outcome> {
    let mut n = 0;
    for i in sys.full_set().subsets() {
        for j in i.subsets() {
            let u = sys.descent_class_within(j, i)?[0].clone();
            let star = maps::chi(sys, &maps::mu_bar(sys, i, &basis(&u))?);
            require!(descent::sigma_star_induce(sys, i, &SubsetVector::basis(j))? == star, "I={i}, J={j}");
            n += 1;
        }
    }
    Ok(Ok(n))
}

fn formula_sigma_star_restrict(sys: &CoxeterSystem) -> Result<Outcome> {
    let full = sys.full_set();
    let mut n = 0;
    for i in full.subsets() {
        for k in full.subsets() {
            let w = sys.descent_class(k)?[0].clone();
            let star = maps::chi(sys, &maps::rho_bar(sys, i, &basis(&w))?);
            require!(descent::sigma_star_restrict(i, &SubsetVector::basis(k)) == star, "I={i}, K={k}");
            n += 1;
        }
    }
    Ok(Ok(n))
}

fn lk_interval(sys: &CoxeterSystem) -> Result<Outcome> {
    let full = sys.full_set();
    let mut n = 0;
    for i in full.subsets() {
        let wi = sys.parabolic(i)?;
        for z in sys.min_coset_reps(i, Side::Right)?.iter() {
            for k in full.subsets() {
                let lk = compute_lk(sys, z, i, k)?;
                let direct: BTreeSet<&Element> = wi.iter().filter(|u| sys.descent_set(&(*u * z)) == k).collect();
                let interval: BTreeSet<SubsetMask> = lk.interval().into_iter().collect();
                let predicted: BTreeSet<&Element> = if lk.is_member() {
                    wi.iter().filter(|u| interval.contains(&sys.descent_set(u))).collect()
                } else {
                    BTreeSet::new()
                };
                require!(direct == predicted, "z={z}, I={i}, K={k}");
                n += 1;
            }
        }
    }
    Ok(Ok(n))
}

fn left_below(sys: &CoxeterSystem, u: &Element, w: &Element) -> bool {
    sys.length(w) == sys.length(&(w * &u.inverse())) + sys.length(u)
}

/// Descent classes are the left weak intervals `[w_0(I), w_0 w_0(S - I)]`.
fn weak_order_intervals(sys: &CoxeterSystem) -> Result<Outcome> {
    let full = sys.full_set();
    let w0 = sys.longest_element(full);
    let mut n = 0;
    for i in full.subsets() {
        let bottom = sys.longest_element(i);
        let top = &w0 * &sys.longest_element(full.difference(i));
        let mut seen = BTreeSet::from([bottom.clone()]);
        let mut queue = VecDeque::from([bottom]);
        while let Some(x) = queue.pop_front() {
            for s in sys.generators() {
                let y = sys.left_mul_gen(s, &x);
                if sys.length(&y) > sys.length(&x) && left_below(sys, &y, &top) && seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let class: BTreeSet<Element> = sys.descent_class(i)?.iter().cloned().collect();
        require!(seen == class, "descent class {i}");
        n += 1;
    }
    Ok(Ok(n))
}

// duality

fn adjoint_mu_rho_bar(sys: &CoxeterSystem) -> Result<Outcome> {
    let all = sys.elements()?;
    let mut n = 0;
    for i in sys.full_set().subsets() {
        for u in sys.parabolic(i)?.iter() {
            let x = basis(u);
            let mux = maps::mu(sys, i, &x)?;
            for w in all.iter() {
                let y = basis(w);
                let rhs = maps::pairing(&x, &maps::rho_bar(sys, i, &y)?);
                require!(maps::pairing(&mux, &y) == rhs, "I={i}, u={u}, w={w}");
                n += 1;
            }
        }
    }
    Ok(Ok(n))
}

fn adjoint_rho_mu_bar(sys: &CoxeterSystem) -> Result<Outcome> {
    let all = sys.elements()?;
    let mut n = 0;
    for i in sys.full_set().subsets() {
        for u in sys.parabolic(i)?.iter() {
            let x = basis(u);
            let mubx = maps::mu_bar(sys, i, &x)?;
            for w in all.iter() {
                let y = basis(w);
                let lhs = maps::pairing(&maps::rho(sys, i, &y)?, &x);
                require!(lhs == maps::pairing(&y, &mubx), "I={i}, u={u}, w={w}");
                n += 1;
            }
        }
    }
    Ok(Ok(n))
}

fn c_form_symmetric(sys: &CoxeterSystem) -> Result<Outcome> {
    let (keys, c) = descent::c_matrix(sys)?;
    for r in 0..c.len() {
        for s in 0..c.len() {
            require!(c[r][s] == c[s][r], "c({}, {}) != c({}, {})", keys[r], keys[s], keys[s], keys[r]);
        }
    }
    Ok(Ok(c.len() * c.len()))
}

/// `c` descends to the span of the `Lambda_I` and is nonsingular there.
fn c_form_lambda(sys: &CoxeterSystem) -> Result<Outcome> {
    let full = sys.full_set();
    let subsets = full.subsets();
    let (_, c) = descent::c_matrix(sys)?;
    let mut lam: Vec<Vec<Q>> = Vec::new();
    for &i in &subsets {
        let v = descent::lambda_to_sigma_star(sys, full, &SubsetVector::basis(i))?;
        lam.push(subsets.iter().map(|k| q(v.coeff(k))).collect());
    }
    let r = linalg::rank(&lam);
    let joined: Vec<Vec<Q>> =
        lam.iter().zip(&c).map(|(l, row)| l.iter().cloned().chain(row.iter().map(|&x| q(x))).collect()).collect();
    require!(linalg::rank(&joined) == r, "c does not factor through the Lambda span");
    let mut picked: Vec<usize> = Vec::new();
    for k in 0..lam.len() {
        let mut trial: Vec<Vec<Q>> = picked.iter().map(|&p| lam[p].clone()).collect();
        trial.push(lam[k].clone());
        if linalg::rank(&trial) == trial.len() {
            picked.push(k);
        }
    }
    let block: Vec<Vec<Q>> = picked.iter().map(|&a| picked.iter().map(|&b| q(c[a][b])).collect()).collect();
    require!(linalg::determinant(&block) != q(0), "induced form is degenerate");
    let classes = sys.parabolic_conjugacy_classes()?.len();
    require!(r == classes, "Lambda span has dimension {r}, expected {classes}");
    Ok(Ok(subsets.len()))
}

fn sym_h_conjugacy(sys: &CoxeterSystem) -> Result<Outcome> {
    let full = sys.full_set();
    let subsets = full.subsets();
    let mut h = BTreeMap::new();
    for &i in &subsets {
        h.insert(i, descent::h_in_m(sys, i)?);
    }
    let mut n = 0;
    for &i in &subsets {
        for &j in &subsets {
            let conj = sys.parabolics_conjugate(full.difference(i), full.difference(j))?;
            require!((h[&i] == h[&j]) == conj, "h_{i} versus h_{j}");
            n += 1;
        }
    }
    Ok(Ok(n))
}

fn sym_h_gram(sys: &CoxeterSystem) -> Result<Outcome> {
    let full = sys.full_set();
    let mut n = 0;
    for i in full.subsets() {
        for j in full.subsets() {
            let cosets = descent::double_coset_count(sys, full.difference(i), full.difference(j))?;
            require!(descent::h_gram(sys, i, j)? == cosets as i64, "<h_{i}, h_{j}>");
            n += 1;
        }
    }
    Ok(Ok(n))
}

fn sym_h_m_dual(sys: &CoxeterSystem) -> Result<Outcome> {
    let bases = descent::sym_bases(sys)?;
    let k = bases.classes.len();
    require!(bases.hm_matrix(sys)? == linalg::identity(k), "<h, m> is not the identity");
    Ok(Ok(k * k))
}

// shuffles

/// A product/coproduct quadruple together with the operations on the right factor.
struct Ops {
    left: Family,
    min_left: usize,
    right: Family,
    product: Product,
    cup: Product,
    right_product: Product,
    right_cup: Product,
    unshuffle: Coproduct,
    cap: Coproduct,
    right_unshuffle: Coproduct,
    right_cap: Coproduct,
}

const OPS_A: Ops = Ops {
    left: Family::A,
    min_left: 0,
    right: Family::A,
    product: Product::ShuffleA,
    cup: Product::CupA,
    right_product: Product::ShuffleA,
    right_cup: Product::CupA,
    unshuffle: Coproduct::UnshuffleA,
    cap: Coproduct::CapA,
    right_unshuffle: Coproduct::UnshuffleA,
    right_cap: Coproduct::CapA,
};

const OPS_B: Ops = Ops {
    left: Family::B,
    min_left: 0,
    right: Family::A,
    product: Product::ShuffleB,
    cup: Product::CupB,
    right_product: Product::ShuffleA,
    right_cup: Product::CupA,
    unshuffle: Coproduct::UnshuffleB,
    cap: Coproduct::CapB,
    right_unshuffle: Coproduct::UnshuffleA,
    right_cap: Coproduct::CapA,
};

const OPS_D: Ops = Ops {
    left: Family::D,
    min_left: 2,
    right: Family::A,
    product: Product::ShuffleD,
    cup: Product::CupD,
    right_product: Product::ShuffleA,
    right_cup: Product::CupA,
    unshuffle: Coproduct::UnshuffleD,
    cap: Coproduct::CapD,
    right_unshuffle: Coproduct::UnshuffleA,
    right_cap: Coproduct::CapA,
};

const OPS_BB: Ops = Ops {
    left: Family::B,
    min_left: 0,
    right: Family::B,
    product: Product::ShuffleBB,
    cup: Product::CupBB,
    right_product: Product::ShuffleBB,
    right_cup: Product::CupBB,
    unshuffle: Coproduct::UnshuffleBB,
    cap: Coproduct::CapBB,
    right_unshuffle: Coproduct::UnshuffleBB,
    right_cap: Coproduct::CapBB,
};

/// Total size bound for the shuffle checks on `sys`.
fn shuffle_bound(sys: &CoxeterSystem) -> usize {
    match sys.family() {
        Family::A => sys.n().min(4),
        _ => sys.n().min(3),
    }
}

fn members(family: Family, k: usize) -> Result<Vec<Element>> {
    if family == Family::D && k < 2 {
        return Ok(Vec::new());
    }
    Ok(CoxeterSystem::on_letters(family, k)?.elements()?.to_vec())
}

impl Ops {
    fn left_sizes(&self, max: usize) -> impl Iterator<Item = usize> {
        self.min_left.min(max + 1)..=max
    }
}

fn bilinear(x: &GroupVector, y: &GroupVector, p: Product) -> Result<GroupVector> {
    let mut out = GroupVector::new();
    for (a, c) in x.iter() {
        for (b, d) in y.iter() {
            out.try_add_scaled(&p.apply(a, b)?, c * d)?;
        }
    }
    Ok(out)
}

type Tensor = TensorVector<Element, Element>;

fn coproduct_of(x: &GroupVector, c: Coproduct) -> Result<Tensor> {
    let mut out = Tensor::new();
    for (a, k) in x.iter() {
        out.try_add_scaled(&c.apply(a)?, k)?;
    }
    Ok(out)
}

fn tensor_product(x: &Tensor, y: &Tensor, left: Product, right: Product) -> Result<Tensor> {
    let mut out = Tensor::new();
    for ((a, b), c) in x.iter() {
        for ((p, r), d) in y.iter() {
            out.try_add_scaled(&tensor(&left.apply(a, p)?, &right.apply(b, r)?), c * d)?;
        }
    }
    Ok(out)
}

fn associativity(sys: &CoxeterSystem, ops: &Ops, p: Product, rp: Product) -> Result<Outcome> {
    let max = shuffle_bound(sys);
    let mut n = 0;
    for a in ops.left_sizes(max) {
        for b in 0..=max - a {
            for c in 0..=max - a - b {
                for u in members(ops.left, a)? {
                    for v in members(ops.right, b)? {
                        for r in members(ops.right, c)? {
                            let lhs = bilinear(&p.apply(&u, &v)?, &basis(&r), p)?;
                            let rhs = bilinear(&basis(&u), &rp.apply(&v, &r)?, p)?;
                            require!(lhs == rhs, "{p} at {u} {v} {r}");
                            n += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(Ok(n))
}

fn coassociativity(sys: &CoxeterSystem, ops: &Ops, c: Coproduct, rc: Coproduct) -> Result<Outcome> {
    let mut n = 0;
    for k in ops.left_sizes(shuffle_bound(sys)) {
        for u in members(ops.left, k)? {
            let mut lhs: FormalVector<(Element, Element, Element)> = FormalVector::new();
            let mut rhs: FormalVector<(Element, Element, Element)> = FormalVector::new();
            for ((a, b), k) in c.apply(&u)?.iter() {
                for ((x, y), j) in c.apply(a)?.iter() {
                    lhs.try_add_term((x.clone(), y.clone(), b.clone()), k * j)?;
                }
                for ((x, y), j) in rc.apply(b)?.iter() {
                    rhs.try_add_term((a.clone(), x.clone(), y.clone()), k * j)?;
                }
            }
            require!(lhs == rhs, "{c} at {u}");
            n += 1;
        }
    }
    Ok(Ok(n))
}

/// `<u p v, w> = <u (x) v, c(w)>` on all basis elements of each total size.
fn duality(sys: &CoxeterSystem, ops: &Ops, p: Product, c: Coproduct) -> Result<Outcome> {
    let mut n = 0;
    for t in ops.left_sizes(shuffle_bound(sys)) {
        let mut from_product: FormalVector<(Element, Element, Element)> = FormalVector::new();
        for a in ops.left_sizes(t) {
            for u in members(ops.left, a)? {
                for v in members(ops.right, t - a)? {
                    for (w, k) in p.apply(&u, &v)?.iter() {
                        from_product.try_add_term((u.clone(), v.clone(), w.clone()), k)?;
                    }
                }
            }
        }
        let mut from_coproduct: FormalVector<(Element, Element, Element)> = FormalVector::new();
        for w in members(ops.left, t)? {
            for ((x, y), k) in c.apply(&w)?.iter() {
                from_coproduct.try_add_term((x.clone(), y.clone(), w.clone()), k)?;
            }
            n += 1;
        }
        require!(from_product == from_coproduct, "{p} and {c} are not dual in size {t}");
    }
    Ok(Ok(n))
}

/// `(u p v)^{-1} = u^{-1} q v^{-1}`.
fn inverse_products(sys: &CoxeterSystem, ops: &Ops) -> Result<Outcome> {
    let max = shuffle_bound(sys);
    let mut n = 0;
    for a in ops.left_sizes(max) {
        for b in 0..=max - a {
            for u in members(ops.left, a)? {
                for v in members(ops.right, b)? {
                    let lhs = maps::invert_vector(&ops.product.apply(&u, &v)?);
                    require!(lhs == ops.cup.apply(&u.inverse(), &v.inverse())?, "{u} {v}");
                    n += 1;
                }
            }
        }
    }
    Ok(Ok(n))
}

/// `cap(u^{-1})` is the termwise inverse of `unshuffle(u)`.
fn inverse_coproducts(sys: &CoxeterSystem, ops: &Ops) -> Result<Outcome> {
    let mut n = 0;
    for k in ops.left_sizes(shuffle_bound(sys)) {
        for u in members(ops.left, k)? {
            let lhs = ops.cap.apply(&u.inverse())?;
            let rhs = ops.unshuffle.apply(&u)?.map_keys(|(a, b)| (a.inverse(), b.inverse()));
            require!(lhs == rhs, "{u}");
            n += 1;
        }
    }
    Ok(Ok(n))
}

/// The coproduct is multiplicative.
fn bialgebra(sys: &CoxeterSystem, ops: &Ops, p: Product, c: Coproduct) -> Result<Outcome> {
    let max = shuffle_bound(sys);
    let mut n = 0;
    for a in 0..=max {
        for b in 0..=max - a {
            for u in members(ops.left, a)? {
                for v in members(ops.right, b)? {
                    let lhs = coproduct_of(&p.apply(&u, &v)?, c)?;
                    let rhs = tensor_product(&c.apply(&u)?, &c.apply(&v)?, p, p)?;
                    require!(lhs == rhs, "{p} and {c} at {u} {v}");
                    n += 1;
                }
            }
        }
    }
    Ok(Ok(n))
}

/// Parabolic shapes of the type A products: shuffles are `mu_bar`, convolutions `mu`.
fn type_a_parabolic(sys: &CoxeterSystem) -> Result<Outcome> {
    let max = shuffle_bound(sys);
    let mut n = 0;
    for a in 0..=max {
        for b in 0..=max - a {
            let big = CoxeterSystem::a(a + b);
            let i = big.full_set().without(a);
            for u in members(Family::A, a)? {
                for v in members(Family::A, b)? {
                    let x = basis(&shuffle::cross(&u, &v));
                    require!(shuffle::shuffle_a(&u, &v)? == maps::mu_bar(&big, i, &x)?, "shuffle of {u} {v}");
                    require!(shuffle::cup_a(&u, &v)? == maps::mu(&big, i, &x)?, "convolution of {u} {v}");
                    n += 1;
                }
            }
        }
    }
    Ok(Ok(n))
}

/// Each `w` factors once through every split, with the expected number of distinct `z`.
fn factorization(sys: &CoxeterSystem, ops: &Ops) -> Result<Outcome> {
    let t = shuffle_bound(sys);
    let all = members(ops.left, t)?;
    let mut n = 0;
    for m in ops.left_sizes(t) {
        let mut zs = BTreeSet::new();
        for w in &all {
            let (u, v, z) = match ops.right {
                Family::B => shuffle::factor_bb(w, m)?,
                _ if ops.left == Family::D => shuffle::factor_d(w, m)?,
                _ => shuffle::factor_b(w, m)?,
            };
            let back = match ops.right {
                Family::B => &z * &shuffle::cross_signed(&u, &v),
                _ => &shuffle::cross(&u, &v) * &z,
            };
            require!(back == *w, "{w} at split {m}");
            require!(u.n() == m && v.n() == t - m, "factor sizes of {w} at split {m}");
            zs.insert(z);
            n += 1;
        }
        let expected = all.len() / (members(ops.left, m)?.len() * members(ops.right, t - m)?.len());
        require!(zs.len() == expected, "{} distinct z at split {m}, expected {expected}", zs.len());
    }
    Ok(Ok(n))
}

fn spread(w: &Element) -> Vec<i32> {
    w.window().iter().map(|&x| x.signum() * (3 * x.abs() + 1)).collect()
}

/// Standardizing an order- and sign-preserving relabeling gives back the element.
fn standardization(sys: &CoxeterSystem, family: Family) -> Result<Outcome> {
    let t = shuffle_bound(sys);
    let mut n = 0;
    for w in members(family, t)? {
        let a = spread(&w);
        match family {
            Family::A => require!(shuffle::st(&a) == w, "st at {w}"),
            Family::B => require!(shuffle::st_b(&a) == w, "signed st at {w}"),
            Family::D => {
                require!(shuffle::st_d_left(&a)? == w, "left type D st at {w}");
                require!(shuffle::st_d_right(&a)? == w, "right type D st at {w}");
            }
        }
        n += 1;
    }
    Ok(Ok(n))
}

macro_rules! family_checks {
    ($ops:expr, $family:expr, $prefix:literal) => {{
        let v: Vec<(&'static str, Check)> = vec![
            (concat!($prefix, ".cap_coassociative"), |s| coassociativity(s, &$ops, $ops.cap, $ops.right_cap)),
            (concat!($prefix, ".cup_associative"), |s| associativity(s, &$ops, $ops.cup, $ops.right_cup)),
            (concat!($prefix, ".cup_unshuffle_dual"), |s| duality(s, &$ops, $ops.cup, $ops.unshuffle)),
            (concat!($prefix, ".inverse_coproducts"), |s| inverse_coproducts(s, &$ops)),
            (concat!($prefix, ".inverse_products"), |s| inverse_products(s, &$ops)),
            (concat!($prefix, ".shuffle_associative"), |s| associativity(s, &$ops, $ops.product, $ops.right_product)),
            (concat!($prefix, ".shuffle_cap_dual"), |s| duality(s, &$ops, $ops.product, $ops.cap)),
            (concat!($prefix, ".standardization"), |s| standardization(s, $family)),
            (concat!($prefix, ".unshuffle_coassociative"), |s| {
                coassociativity(s, &$ops, $ops.unshuffle, $ops.right_unshuffle)
            }),
        ];
        v
    }};
}

fn shuffle_checks(family: Family) -> Vec<(&'static str, Check)> {
    match family {
        Family::A => {
            let mut v = family_checks!(OPS_A, Family::A, "a");
            v.push(("a.cup_cap_bialgebra", |s| bialgebra(s, &OPS_A, Product::CupA, Coproduct::CapA)));
            v.push(("a.parabolic_shape", type_a_parabolic));
            v.push(("a.shuffle_unshuffle_bialgebra", |s| {
                bialgebra(s, &OPS_A, Product::ShuffleA, Coproduct::UnshuffleA)
            }));
            v
        }
        Family::B => {
            let mut v = family_checks!(OPS_B, Family::B, "b");
            v.push(("b.factorization", |s| factorization(s, &OPS_B)));
            v.push(("b.module_coproduct_not_multiplicative", module_witness));
            v.extend(family_checks!(OPS_BB, Family::B, "bb"));
            v.push(("bb.cup_cap_bialgebra", |s| bialgebra(s, &OPS_BB, Product::CupBB, Coproduct::CapBB)));
            v.push(("bb.factorization", |s| factorization(s, &OPS_BB)));
            v.push(("bb.shuffle_unshuffle_bialgebra", |s| {
                bialgebra(s, &OPS_BB, Product::ShuffleBB, Coproduct::UnshuffleBB)
            }));
            v
        }
        Family::D => {
            let mut v = family_checks!(OPS_D, Family::D, "d");
            v.push(("d.factorization", |s| factorization(s, &OPS_D)));
            v
        }
    }
}

/// The type B coaction is not a map of modules: `1 shuffleB 1` already differs.
fn module_witness(_: &CoxeterSystem) -> Result<Outcome> {
    let one = el("1");
    let lhs = coproduct_of(&shuffle::shuffle_b(&one, &one)?, Coproduct::UnshuffleB)?;
    let rhs = tensor_product(
        &Coproduct::UnshuffleB.apply(&one)?,
        &Coproduct::UnshuffleA.apply(&one)?,
        Product::ShuffleB,
        Product::ShuffleA,
    )?;
    require!(lhs != rhs, "the coaction is multiplicative on 1 shuffleB 1");
    Ok(Ok(1))
}

// series

fn window_of(sys: &CoxeterSystem) -> i32 {
    sys.n() as i32 + 1
}

fn kinds(family: Family) -> [BasisKind; 2] {
    match family {
        Family::A => [BasisKind::SA, BasisKind::HA],
        Family::B => [BasisKind::SB, BasisKind::HB],
        Family::D => [BasisKind::SD, BasisKind::HD],
    }
}

fn series_constructions(sys: &CoxeterSystem) -> Result<Outcome> {
    let m = window_of(sys);
    let mut n = 0;
    for kind in kinds(sys.family()) {
        for alpha in Composition::all(sys.n(), sys.family() != Family::A) {
            let by_class = series::basis_element(kind, &alpha, m, Construction::DescentClass)?;
            let by_parset = series::basis_element(kind, &alpha, m, Construction::Parset)?;
            let by_tableau = series::basis_element(kind, &alpha, m, Construction::Tableau)?;
            require!(by_class == by_parset, "{kind}{alpha}: descent classes versus parsets");
            require!(by_class == by_tableau, "{kind}{alpha}: descent classes versus tableaux");
            n += 1;
        }
    }
    Ok(Ok(n))
}

fn series_roundtrip(sys: &CoxeterSystem) -> Result<Outcome> {
    let m = window_of(sys);
    let mut n = 0;
    for w in sys.elements()?.iter() {
        for level in [Level::F, Level::S] {
            let x = series::level_series(sys, level, w, m);
            require!(series::expand_in_basis(sys, level, &x)? == basis(w), "{level:?} series of {w}");
            n += 1;
        }
    }
    Ok(Ok(n))
}

fn series_fundamental(sys: &CoxeterSystem) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ sys.n() as u64);
    let m = window_of(sys).min(4);
    let mut n = 0;
    for _ in 0..20 {
        let p = series::random_parset(sys, &mut rng);
        let mut lhs = p.p_partitions(m);
        let mut rhs = Vec::new();
        for w in p.jordan_holder(sys)? {
            rhs.extend(Parset::of_element(sys, &w).p_partitions(m));
        }
        lhs.sort();
        rhs.sort();
        require!(lhs == rhs, "a parset with {} roots", p.len());
        n += lhs.len();
    }
    Ok(Ok(n))
}

fn series_d_from_b(sys: &CoxeterSystem) -> Result<Outcome> {
    let m = window_of(sys);
    let b = CoxeterSystem::b(sys.n());
    let mut n = 0;
    for w in sys.elements()?.iter() {
        let rhs = series::s_series(&b, w, m).add(&series::s_series(&b, &b.left_mul_gen(0, w), m))?;
        require!(series::s_series(sys, w, m) == rhs, "type D series of {w}");
        n += 1;
    }
    Ok(Ok(n))
}

/// Degree-two complete functions of type B against `x_0^2, x_0 h_1, h_2, h_11`.
fn series_transition(_: &CoxeterSystem) -> Result<Outcome> {
    let m = 3;
    let keys = ["(2)", "(1,1)", "(0,2)", "(0,1,1)"];
    let mut hb = Vec::new();
    for k in keys {
        hb.push(series::hb_sym(&Composition::parse(k)?, m)?);
    }
    let x0sq = series::x0_power(2, m);
    let x0h1 = series::x0_power(1, m).mul(&series::h_k(1, m))?;
    let h2 = series::h_k(2, m);
    let h11 = series::h_sym(&Composition::new(vec![1, 1]), m)?;
    let forward = [[1, 1, 1, 0], [1, 3, 0, 2], [1, 2, 2, 1], [1, 4, 0, 4]];
    for (row, target) in forward.iter().zip(&hb) {
        let mut built = series::CPoly::zero(2, m);
        for (c, p) in row.iter().zip([&x0sq, &x0h1, &h2, &h11]) {
            built = built.add(&p.scale(*c))?;
        }
        require!(&built == target, "forward row {row:?}");
    }
    let basis: Vec<_> = hb.iter().map(|p| p.terms().clone()).collect();
    let expected = [
        (&x0sq, [qfrac(8, 3), qfrac(-4, 3), qfrac(-4, 3), q(1)]),
        (&x0h1, [qfrac(-4, 3), qfrac(5, 3), qfrac(2, 3), q(-1)]),
        (&h2, [qfrac(-1, 3), qfrac(-1, 3), qfrac(2, 3), q(0)]),
        (&h11, [qfrac(2, 3), qfrac(-4, 3), qfrac(-1, 3), q(1)]),
    ];
    for (target, coeffs) in expected {
        let got = series::express_in_basis(target.terms(), &basis)?;
        require!(got == coeffs, "inverse row {:?}", got.iter().map(linalg::fmt_q).collect::<Vec<_>>());
    }
    Ok(Ok(8))
}

// hecke

fn maximal_subsets(sys: &CoxeterSystem) -> Vec<SubsetMask> {
    let full = sys.full_set();
    sys.generators().into_iter().map(|s| full.without(s)).collect()
}

fn hecke_regular(sys: &CoxeterSystem) -> Result<Outcome> {
    let m = hecke::regular_module(sys)?;
    m.check_relations()?;
    Ok(Ok(m.dim()))
}

fn hecke_projective_dims(sys: &CoxeterSystem) -> Result<Outcome> {
    let mut total = 0;
    let mut n = 0;
    for i in sys.full_set().subsets() {
        let p = hecke::indecomposable_projective(sys, i)?;
        p.check_relations()?;
        require!(p.dim() == sys.descent_class(i)?.len(), "dim P_{i}");
        total += p.dim();
        n += 1;
    }
    require!(total as u128 == sys.order(), "projective dimensions sum to {total}");
    Ok(Ok(n))
}

fn hecke_induced_simples(sys: &CoxeterSystem) -> Result<Outcome> {
    let mut n = 0;
    for i in maximal_subsets(sys) {
        for k in i.subsets() {
            let w = sys.descent_class_within(k, i)?[0].clone();
            let c = hecke::simple_module(sys, i, k)?;
            let got = hecke::composition_factors(&hecke::induce(&c)?);
            require!(got == hecke::induced_simple_prediction(sys, i, &w)?, "Ind C_{k} from {i}: {got}");
            n += 1;
        }
    }
    Ok(Ok(n))
}

fn hecke_induced_projectives(sys: &CoxeterSystem) -> Result<Outcome> {
    let mut n = 0;
    for i in maximal_subsets(sys) {
        for k in i.subsets() {
            let p = hecke::projective_module_within(sys, i, k, i)?;
            let got = hecke::projective_multiplicities(&hecke::induce(&p)?)?;
            require!(got == hecke::induced_projective_prediction(sys, k, i), "Ind P_{k} from {i}: {got}");
            n += 1;
        }
    }
    Ok(Ok(n))
}

fn hecke_restricted_projectives(sys: &CoxeterSystem) -> Result<Outcome> {
    let mut n = 0;
    for i in maximal_subsets(sys) {
        for k in sys.full_set().subsets() {
            let p = hecke::indecomposable_projective(sys, k)?;
            let got = hecke::projective_multiplicities(&hecke::restrict(&p, i)?)?;
            require!(got == hecke::restricted_projective_prediction(sys, i, k)?, "Res P_{k} to {i}: {got}");
            n += 1;
        }
    }
    Ok(Ok(n))
}

fn hecke_characteristic(sys: &CoxeterSystem) -> Result<Outcome> {
    let kind = kinds(sys.family())[0];
    let m = window_of(sys);
    let mut n = 0;
    for alpha in Composition::all(sys.n(), true) {
        let p = hecke::indecomposable_projective(sys, alpha.descent_set())?;
        let ch = hecke::ch_quasisymmetric(sys, &hecke::composition_factors(&p), m)?;
        require!(ch == series::ribbon_qsym(kind, &alpha, m)?, "Ch(P_{alpha})");
        n += 1;
    }
    Ok(Ok(n))
}

// worked examples

fn splits(c: Coproduct, w: &str) -> Result<Tensor> {
    c.apply(&el(w))
}

fn examples_a(_: &CoxeterSystem) -> Result<Outcome> {
    require!(shuffle::st(&[3, 2, 2, 3, 6, 2, 5]) == el("4,1,2,5,7,3,6"), "st(3223625)");
    require!(
        shuffle::shuffle_a(&el("2,1"), &el("1,2"))?
            == gv(&["2,1,3,4", "2,3,1,4", "3,2,1,4", "2,3,4,1", "3,2,4,1", "3,4,2,1"]),
        "21 shuffle 12"
    );
    require!(
        shuffle::cup_a(&el("2,1"), &el("1,2"))?
            == gv(&["2,1,3,4", "3,1,2,4", "3,2,1,4", "4,1,2,3", "4,2,1,3", "4,3,1,2"]),
        "21 cup 12"
    );
    require!(
        splits(Coproduct::UnshuffleA, "2,4,3,1")?
            == tv(&[("", "2,4,3,1"), ("1", "3,2,1"), ("1,2", "2,1"), ("1,3,2", "1"), ("2,4,3,1", "")]),
        "unshuffle 2431"
    );
    require!(
        splits(Coproduct::CapA, "2,4,3,1")?
            == tv(&[("", "2,4,3,1"), ("1", "1,3,2"), ("2,1", "2,1"), ("2,3,1", "1"), ("2,4,3,1", "")]),
        "cap 2431"
    );
    Ok(Ok(5))
}

fn examples_b(_: &CoxeterSystem) -> Result<Outcome> {
    require!(shuffle::st_b(&[2, -4, 3, -2, 0, 2, 0, -2]) == el("5,-8,7,-4,1,6,2,-3"), "signed st");
    require!(
        shuffle::shuffle_b(&el("-1"), &el("2,1"))?
            == gv(&[
                "-1,3,2", "3,-1,2", "3,2,-1", "-1,-3,2", "-3,-1,2", "-3,2,-1", "-1,2,-3", "2,-1,-3", "2,-3,-1",
                "-1,-2,-3", "-2,-1,-3", "-2,-3,-1",
            ]),
        "-1 shuffleB 21"
    );
    require!(
        shuffle::cup_b(&el("-1"), &el("2,1"))?
            == gv(&[
                "-1,3,2", "-2,3,1", "-3,2,1", "-1,3,-2", "-2,3,-1", "-3,2,-1", "-1,2,-3", "-2,1,-3", "-3,1,-2",
                "-1,-2,-3", "-2,-1,-3", "-3,-1,-2",
            ]),
        "-1 cupB 21"
    );
    require!(
        splits(Coproduct::UnshuffleB, "2,-4,-3,1")?
            == tv(&[("", "4,1,2,3"), ("1", "1,2,3"), ("1,-2", "1,2"), ("1,-3,-2", "1"), ("2,-4,-3,1", "")]),
        "unshuffleB 2,-4,-3,1"
    );
    require!(
        splits(Coproduct::CapB, "2,-4,-3,1")?
            == tv(&[("", "3,4,2,1"), ("1", "2,3,1"), ("2,1", "1,2"), ("2,-3,1", "1"), ("2,-4,-3,1", "")]),
        "capB 2,-4,-3,1"
    );
    Ok(Ok(5))
}

fn examples_bb(_: &CoxeterSystem) -> Result<Outcome> {
    require!(
        shuffle::shuffle_bb(&el("-2,1"), &el("1,-2"))?
            == gv(&["-2,1,3,-4", "-2,3,1,-4", "3,-2,1,-4", "-2,3,-4,1", "3,-2,-4,1", "3,-4,-2,1"]),
        "-2,1 shuffle 1,-2"
    );
    require!(
        shuffle::cup_bb(&el("-2,1"), &el("1,-2"))?
            == gv(&["-2,1,3,-4", "-3,1,2,-4", "-3,2,1,-4", "-4,1,2,-3", "-4,2,1,-3", "-4,3,1,-2"]),
        "-2,1 cup 1,-2"
    );
    require!(
        splits(Coproduct::UnshuffleBB, "-2,4,-3,1")?
            == tv(&[("", "-2,4,-3,1"), ("-1", "3,-2,1"), ("-1,2", "-2,1"), ("-1,3,-2", "1"), ("-2,4,-3,1", "")]),
        "signed unshuffle of -2,4,-3,1"
    );
    require!(
        splits(Coproduct::CapBB, "-2,4,-3,1")?
            == tv(&[("", "-2,4,-3,1"), ("1", "-1,3,-2"), ("-2,1", "2,-1"), ("-2,-3,1", "1"), ("-2,4,-3,1", "")]),
        "signed cap of -2,4,-3,1"
    );
    Ok(Ok(4))
}

fn examples_d(_: &CoxeterSystem) -> Result<Outcome> {
    let a = [2, 1, 1, -3, 2, -1];
    let target = el("4,2,3,-6,5,-1");
    require!(
        shuffle::st_b(&a) == target && shuffle::st_d_left(&a)? == target && shuffle::st_d_right(&a)? == target,
        "standardizations of 2,1,1,-3,2,-1"
    );
    let b = [2, 1, -1, -3, 2, -1];
    require!(shuffle::st_b(&b) == el("4,3,-2,-6,5,-1"), "signed st of 2,1,-1,-3,2,-1");
    require!(shuffle::st_d_left(&b)? == el("4,3,-2,-6,5,1"), "left type D st of 2,1,-1,-3,2,-1");
    require!(shuffle::st_d_right(&b)? == el("-4,3,-2,-6,5,-1"), "right type D st of 2,1,-1,-3,2,-1");
    let w = el("2,-5,1,-3,4");
    let (u, v, z) = shuffle::factor_d(&w, 3)?;
    require!(u == el("-2,1,-3") && v == el("2,1") && z == el("-1,-4,2,3,5"), "factorization of 2,-5,1,-3,4");
    require!(w.inverse() == el("3,1,-4,5,-2"), "inverse of 2,-5,1,-3,4");
    require!(z.inverse() == el("-1,3,4,-2,5") && u.inverse() == el("2,-1,-3"), "inverse factors");
    require!(
        shuffle::shuffle_d(&el("-2,3,-1"), &el("1"))?
            == gv(&[
                "-2,3,-1,4",
                "-2,3,4,-1",
                "-2,4,3,-1",
                "4,-2,3,-1",
                "2,3,-1,-4",
                "2,3,-4,-1",
                "2,-4,3,-1",
                "-4,2,3,-1",
            ]),
        "-2,3,-1 shuffleD 1"
    );
    require!(
        shuffle::cup_d(&el("-2,3,-1"), &el("1"))?
            == gv(&[
                "-2,3,-1,4",
                "-2,4,-1,3",
                "-3,4,-1,2",
                "-3,4,-2,1",
                "-2,3,1,-4",
                "-2,4,1,-3",
                "-3,4,1,-2",
                "-3,4,2,-1",
            ]),
        "-2,3,-1 cupD 1"
    );
    require!(
        splits(Coproduct::UnshuffleD, "2,-4,-3,1")? == tv(&[("-1,-2", "1,2"), ("1,-3,-2", "1"), ("2,-4,-3,1", "")]),
        "unshuffleD 2,-4,-3,1"
    );
    require!(
        splits(Coproduct::CapD, "2,-4,-3,1")? == tv(&[("2,1", "1,2"), ("-2,-3,1", "1"), ("2,-4,-3,1", "")]),
        "capD 2,-4,-3,1"
    );
    Ok(Ok(10))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!("paper-examples".parse::<Suite>().unwrap(), Suite::WorkedExamples);
        assert_eq!(Suite::parse_list("all").unwrap().len(), 6);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn large_groups_are_capped() {
        let err = run(&CoxeterSystem::b(5), &[Suite::Hecke]).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
        assert!(run(&CoxeterSystem::b(5), &[Suite::WorkedExamples]).is_ok());
        let err = run(&CoxeterSystem::a(5), &[Suite::Series]).unwrap_err();
        assert!(matches!(err, Error::RankCap(_)));
    }
}
