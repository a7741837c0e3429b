//! Descent algebras `Sigma(W)`, their duals `Sigma*(W)`, the images `Lambda(W)`,
//! closed induction/restriction formulas and the `c_IJ` form.

use crate::coxeter::{CoxeterSystem, Element, Side};
use crate::error::{Error, Result};
use crate::linalg::{self, QMatrix, Q};
use crate::maps::{GroupVector, SubsetVector};
use crate::subset::SubsetMask;
use crate::vector::FormalVector;

/// The sets `L(z,I,K)` and `L'(z,I,K)` attached to a right coset representative `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LkSets {
    pub z: Element,
    pub i: SubsetMask,
    pub k: SubsetMask,
    pub l: SubsetMask,
    pub l_prime: SubsetMask,
    /// Conditions (i) and (ii): `D(z)` inside `K`, and no forced ascent lands in `K`.
    pub admissible: bool,
}

impl LkSets {
    /// `z` is the `^I`-part of some `w` with `D(w) = K`.
    pub fn is_member(&self) -> bool {
        self.admissible && self.l.is_subset(self.l_prime)
    }

    /// All `K'` with `L <= K' <= L'`.
    pub fn interval(&self) -> Vec<SubsetMask> {
        if !self.l.is_subset(self.l_prime) {
            return Vec::new();
        }
        self.l_prime.difference(self.l).subsets().into_iter().map(|m| m.union(self.l)).collect()
    }
}

/// Computes `L(z,I,K)`, `L'(z,I,K)` and the admissibility conditions for `z` in `^I W`.
pub fn compute_lk(sys: &CoxeterSystem, z: &Element, i: SubsetMask, k: SubsetMask) -> Result<LkSets> {
    if !sys.left_descent_set(z).intersection(i).is_empty() {
        return Err(Error::Invalid(format!("{z} is not a minimal right coset representative for {i}")));
    }
    let full = sys.full_set();
    let dz = sys.descent_set(z);
    let zinv = z.inverse();
    let mut l = SubsetMask::EMPTY;
    let mut l_prime = i;
    let mut admissible = dz.is_subset(k);
    for s in full.difference(dz).iter() {
        let d = sys.descent_set(&sys.left_mul_gen(s, &zinv)).intersection(i);
        if k.contains(s) {
            l = l.union(d);
            if d.is_empty() {
                admissible = false;
            }
        } else {
            l_prime = l_prime.difference(d);
        }
    }
    Ok(LkSets { z: z.clone(), i, k, l, l_prime, admissible })
}

/// `iota: Sigma(W_I) -> Z W_I`, `D_J(W_I)` to the sum of its descent class.
pub fn iota(sys: &CoxeterSystem, i: SubsetMask, x: &SubsetVector) -> Result<GroupVector> {
    x.try_map_linear(|&j| {
        if !j.is_subset(i) {
            return Err(Error::Invalid(format!("{j} is not a subset of {i}")));
        }
        Ok(FormalVector::from_keys(sys.descent_class_within(j, i)?.iter().cloned()))
    })
}

/// Inverse of `iota` on its image; fails unless `x` is constant on descent classes of `W_I`.
pub fn collect(sys: &CoxeterSystem, i: SubsetMask, x: &GroupVector) -> Result<SubsetVector> {
    let mut out = SubsetVector::new();
    for j in i.subsets() {
        let class = sys.descent_class_within(j, i)?;
        let c = x.coeff(&class[0]);
        if class.iter().any(|w| x.coeff(w) != c) {
            return Err(Error::NotInSpan(format!("coefficients vary on the descent class {j}")));
        }
        out.add_term(j, c);
    }
    let total: usize = x.keys().count();
    let covered = x.keys().filter(|w| sys.in_parabolic(w, i)).count();
    if covered != total {
        return Err(Error::OutsideParabolic(format!("vector is not supported on W_{i}")));
    }
    Ok(out)
}

/// `Sigma(W_I) -> Sigma(W)`: `D_J(W_I)` to the sum of `D_J'` over `J'` with `J' & I = J`.
pub fn sigma_induce(sys: &CoxeterSystem, i: SubsetMask, x: &SubsetVector) -> Result<SubsetVector> {
    let rest = sys.full_set().difference(i);
    x.try_map_linear(|&j| {
        if !j.is_subset(i) {
            return Err(Error::Invalid(format!("{j} is not a subset of {i}")));
        }
        Ok(FormalVector::from_keys(rest.subsets().into_iter().map(|e| e.union(j))))
    })
}

/// `Sigma(W) -> Sigma(W_I)` through the `L`/`L'` intervals.
pub fn sigma_restrict(sys: &CoxeterSystem, i: SubsetMask, x: &SubsetVector) -> Result<SubsetVector> {
    let reps = sys.min_coset_reps(i, Side::Right)?;
    x.try_map_linear(|&k| {
        let mut out = SubsetVector::new();
        for z in reps.iter() {
            let lk = compute_lk(sys, z, i, k)?;
            if lk.is_member() {
                for kp in lk.interval() {
                    out.add_term(kp, 1);
                }
            }
        }
        Ok(out)
    })
}

/// `D(uz)` for any `u` in `W_I` with `D(u) = J`, given `z` in `^I W`.
pub fn descent_of_product(sys: &CoxeterSystem, z: &Element, i: SubsetMask, j: SubsetMask) -> SubsetMask {
    let dz = sys.descent_set(z);
    let zinv = z.inverse();
    let mut k = dz;
    for s in sys.full_set().difference(dz).iter() {
        let d = sys.descent_set(&sys.left_mul_gen(s, &zinv)).intersection(i);
        if let Some(r) = d.min() {
            if j.contains(r) {
                k.insert(s);
            }
        }
    }
    k
}

/// `Sigma*(W_I) -> Sigma*(W)`: `D*_J(W_I)` to the sum of `D*_{D(uz)}` over `z` in `^I W`.
pub fn sigma_star_induce(sys: &CoxeterSystem, i: SubsetMask, x: &SubsetVector) -> Result<SubsetVector> {
    let reps = sys.min_coset_reps(i, Side::Right)?;
    x.try_map_linear(|&j| {
        if !j.is_subset(i) {
            return Err(Error::Invalid(format!("{j} is not a subset of {i}")));
        }
        Ok(FormalVector::from_keys(reps.iter().map(|z| descent_of_product(sys, z, i, j))))
    })
}

/// `Sigma*(W) -> Sigma*(W_I)`: `D*_K` to `D*_{K & I}`.
pub fn sigma_star_restrict(i: SubsetMask, x: &SubsetVector) -> SubsetVector {
    x.map_keys(|k| k.intersection(i))
}

/// `Lambda_J(W_I)` written in `Sigma*(W_I)` coordinates.
pub fn lambda_to_sigma_star(sys: &CoxeterSystem, i: SubsetMask, x: &SubsetVector) -> Result<SubsetVector> {
    x.try_map_linear(|&j| {
        let class = sys.descent_class_within(j, i)?;
        Ok(FormalVector::from_keys(class.iter().map(|w| sys.left_descent_set(w))))
    })
}

/// Induction on formal `Lambda` labels; same shape as [`sigma_induce`].
pub fn lambda_induce(sys: &CoxeterSystem, i: SubsetMask, x: &SubsetVector) -> Result<SubsetVector> {
    sigma_induce(sys, i, x)
}

/// Restriction on formal `Lambda` labels; same shape as [`sigma_restrict`].
pub fn lambda_restrict(sys: &CoxeterSystem, i: SubsetMask, x: &SubsetVector) -> Result<SubsetVector> {
    sigma_restrict(sys, i, x)
}

/// `c_IJ = #{w : D(w^{-1}) = I, D(w) = J}`.
pub fn c_form(sys: &CoxeterSystem, i: SubsetMask, j: SubsetMask) -> Result<i64> {
    let g = sys.group()?;
    Ok(g.elements.iter().filter(|w| g.descents_of(w) == j && sys.left_descent_set(w) == i).count() as i64)
}

/// All `c_IJ`, rows and columns indexed by subsets in increasing order.
pub fn c_matrix(sys: &CoxeterSystem) -> Result<(Vec<SubsetMask>, Vec<Vec<i64>>)> {
    let subsets = sys.full_set().subsets();
    let pos = |m: SubsetMask| subsets.binary_search(&m).expect("subset of S");
    let mut c = vec![vec![0i64; subsets.len()]; subsets.len()];
    let g = sys.group()?;
    for w in g.elements.iter() {
        c[pos(sys.left_descent_set(w))][pos(g.descents_of(w))] += 1;
    }
    Ok((subsets, c))
}

/// Exact determinant of the `c` matrix.
pub fn c_determinant(sys: &CoxeterSystem) -> Result<Q> {
    let (_, c) = c_matrix(sys)?;
    Ok(linalg::determinant(&linalg::from_int_matrix(&c)))
}

/// The `c` matrix over the rationals, for solving.
pub fn c_matrix_q(sys: &CoxeterSystem) -> Result<QMatrix> {
    Ok(linalg::from_int_matrix(&c_matrix(sys)?.1))
}

/// Number of double cosets `W_L \ W / W_R`, counted by orbit enumeration.
pub fn double_coset_count(sys: &CoxeterSystem, l: SubsetMask, r: SubsetMask) -> Result<usize> {
    let g = sys.group()?;
    let left: Vec<Element> = l.iter().map(|s| sys.generator(s)).collect();
    let right: Vec<Element> = r.iter().map(|s| sys.generator(s)).collect();
    let mut seen = vec![false; g.len()];
    let mut count = 0;
    for start in 0..g.len() {
        if seen[start] {
            continue;
        }
        count += 1;
        seen[start] = true;
        let mut stack = vec![g.elements[start].clone()];
        while let Some(w) = stack.pop() {
            let next = left.iter().map(|s| s * &w).chain(right.iter().map(|s| &w * s));
            for v in next {
                let k = g.index_of(&v).expect("closed under generators");
                if !seen[k] {
                    seen[k] = true;
                    stack.push(v);
                }
            }
        }
    }
    Ok(count)
}

/// Order of the normalizer of `W_I` in `W`, by brute force.
pub fn normalizer_order(sys: &CoxeterSystem, i: SubsetMask) -> Result<usize> {
    let gens: Vec<Element> = i.iter().map(|s| sys.generator(s)).collect();
    let mut n = 0;
    for w in sys.elements()?.iter() {
        let winv = w.inverse();
        if gens.iter().all(|s| sys.in_parabolic(&(&(w * s) * &winv), i)) {
            n += 1;
        }
    }
    Ok(n)
}

/// `<h_I, h_J> = #{w : D(w) <= I, D(w^{-1}) <= J}`.
pub fn h_gram(sys: &CoxeterSystem, i: SubsetMask, j: SubsetMask) -> Result<i64> {
    let g = sys.group()?;
    Ok(g.elements.iter().filter(|w| g.descents_of(w).is_subset(i) && sys.left_descent_set(w).is_subset(j)).count()
        as i64)
}

/// `h_I` in the `M` basis: the coefficient of `M_K` is `#{w : D(w) <= I, D(w^{-1}) <= K}`.
pub fn h_in_m(sys: &CoxeterSystem, i: SubsetMask) -> Result<SubsetVector> {
    let g = sys.group()?;
    let mut out = SubsetVector::new();
    for w in g.elements.iter().filter(|w| g.descents_of(w).is_subset(i)) {
        let d = sys.left_descent_set(w);
        for k in sys.full_set().difference(d).subsets() {
            out.add_term(k.union(d), 1);
        }
    }
    Ok(out)
}

/// The classes `Pi(W,S)` together with the symmetric-function bases they index.
#[derive(Clone, Debug)]
pub struct SymBases {
    pub classes: Vec<Vec<SubsetMask>>,
    /// `h_lambda` in `M` coordinates.
    pub h: Vec<SubsetVector>,
    /// `m_lambda = sum of M_I over I in lambda`.
    pub m: Vec<SubsetVector>,
    /// `p_lambda` in `m` coordinates, keyed by class index.
    pub p: Vec<FormalVector<usize>>,
}

impl SymBases {
    pub fn class_of(&self, i: SubsetMask) -> usize {
        self.classes.iter().position(|c| c.contains(&i)).expect("every subset has a class")
    }

    /// `<h_lambda, h_mu>`, evaluated on class representatives.
    pub fn gram(&self, sys: &CoxeterSystem) -> Result<Vec<Vec<i64>>> {
        let reps: Vec<SubsetMask> = self.classes.iter().map(|c| c[0]).collect();
        reps.iter().map(|&i| reps.iter().map(|&j| h_gram(sys, i, j)).collect()).collect()
    }

    /// Coordinates of `x` (in `M` coordinates) in the `h` basis, over the rationals.
    pub fn h_coordinates(&self, sys: &CoxeterSystem, x: &SubsetVector) -> Result<Vec<Q>> {
        let keys = sys.full_set().subsets();
        let a: QMatrix = keys.iter().map(|k| self.h.iter().map(|h| linalg::q(h.coeff(k))).collect()).collect();
        let b: Vec<Q> = keys.iter().map(|k| linalg::q(x.coeff(k))).collect();
        linalg::solve(&a, &b).ok_or_else(|| Error::NotInSpan("not in the span of the h basis".into()))
    }

    /// The matrix `<h_lambda, m_mu>`: each `m_mu` is written in the `h` basis and paired through the Gram matrix.
    pub fn hm_matrix(&self, sys: &CoxeterSystem) -> Result<QMatrix> {
        let gram = self.gram(sys)?;
        let mut out = vec![vec![linalg::q(0); self.m.len()]; self.h.len()];
        for (mu, m) in self.m.iter().enumerate() {
            let coords = self.h_coordinates(sys, m)?;
            for (lambda, row) in gram.iter().enumerate() {
                out[lambda][mu] = row.iter().zip(&coords).map(|(&g, c)| linalg::q(g) * c).sum();
            }
        }
        Ok(out)
    }
}

/// Builds `h_lambda`, `m_lambda` and `p_lambda`, checking that `h_I` is constant on each class.
pub fn sym_bases(sys: &CoxeterSystem) -> Result<SymBases> {
    let classes = sys.parabolic_conjugacy_classes()?;
    let full = sys.full_set();
    let mut h = Vec::new();
    for class in &classes {
        let rep = h_in_m(sys, class[0])?;
        for &i in &class[1..] {
            if h_in_m(sys, i)? != rep {
                return Err(Error::Invalid(format!("h_{i} differs from h_{} in the same class", class[0])));
            }
        }
        h.push(rep);
    }
    let m = classes.iter().map(|c| FormalVector::from_keys(c.iter().copied())).collect();
    let mut weight = Vec::new();
    for class in &classes {
        let jc = full.difference(class[0]);
        let sub = sys.parabolic(jc)?.len();
        weight.push((normalizer_order(sys, jc)? / sub) as i64);
    }
    let mut bases = SymBases { classes, h, m, p: Vec::new() };
    let p = bases
        .classes
        .iter()
        .map(|c| {
            c[0].subsets()
                .into_iter()
                .map(|j| {
                    let k = bases.class_of(j);
                    (k, weight[k])
                })
                .collect()
        })
        .collect();
    bases.p = p;
    Ok(bases)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lk_of_identity() {
        let b3 = CoxeterSystem::b(3);
        let i = SubsetMask::from_indices([0, 1]);
        for k in i.subsets() {
            let lk = compute_lk(&b3, &b3.identity(), i, k).unwrap();
            assert_eq!(lk.l, k);
            assert_eq!(lk.l_prime, k);
        }
    }

    #[test]
    fn c_form_identity_entry() {
        let s3 = CoxeterSystem::a(3);
        assert_eq!(c_form(&s3, SubsetMask::EMPTY, SubsetMask::EMPTY).unwrap(), 1);
        let (subs, c) = c_matrix(&s3).unwrap();
        assert_eq!(subs.len(), 4);
        for (r, &i) in subs.iter().enumerate() {
            let class = s3.descent_class(i).unwrap().len() as i64;
            assert_eq!(c[r].iter().sum::<i64>(), class);
        }
    }

    #[test]
    fn induce_in_s2() {
        let s2 = CoxeterSystem::a(2);
        let x = SubsetVector::basis(SubsetMask::EMPTY);
        let y = sigma_induce(&s2, SubsetMask::EMPTY, &x).unwrap();
        assert_eq!(y, FormalVector::from_keys([SubsetMask::EMPTY, SubsetMask::singleton(1)]));
    }

    #[test]
    fn sym_bases_a3() {
        let s4 = CoxeterSystem::a(4);
        let b = sym_bases(&s4).unwrap();
        assert_eq!(b.classes.len(), 5);
        let hm = b.hm_matrix(&s4).unwrap();
        assert_eq!(hm, linalg::identity(5));
    }

    #[test]
    fn double_cosets_trivial() {
        let b2 = CoxeterSystem::b(2);
        assert_eq!(double_coset_count(&b2, SubsetMask::EMPTY, SubsetMask::EMPTY).unwrap(), 8);
        assert_eq!(double_coset_count(&b2, b2.full_set(), SubsetMask::EMPTY).unwrap(), 1);
    }
}
