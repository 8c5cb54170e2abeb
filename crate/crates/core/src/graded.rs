//! Graded modules over `A[x_0..x_N]`, standing for coherent sheaves on the
//! projective bundle `P^N_A`.
//!
//! For large twists the degree-`m` piece of `M ⊗ A/m^(n+1)` computes the
//! sections of the restriction to the `n`-th neighborhood, so the eventual
//! Hilbert polynomial of each restriction, divided by the neighborhood's
//! length, is the projective varpi function. Flatness is equivalent to that
//! polynomial not depending on `n`.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::artin::ArtinAlgebra;
use crate::criterion::{Evidence, FlatnessVerdict, Status, Witness};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, FreeModuleElement, GroebnerBasis, ModuleOrder};
use crate::linalg::{RowEchelon, SparseRow};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{PolyRing, Polynomial};

/// `coker(⊕ S(-e_j) -> ⊕ S(-d_i))` over `S = A[x_0..x_N]`.
///
/// Polynomials live in `k[x_0..x_N, y_1..y_s]` with the x-variables first and
/// a block order that compares x-parts before y-parts.
#[derive(Debug, Clone)]
pub struct GradedModule {
    base: Arc<ArtinAlgebra>,
    ring: Arc<PolyRing>,
    x_count: usize,
    degrees: Vec<i64>,
    relations: Vec<FreeModuleElement>,
    relation_degrees: Vec<i64>,
}

impl GradedModule {
    /// The bigraded polynomial ring for `base` with the given x-variables.
    pub fn ring_for(base: &ArtinAlgebra, xvars: &[String]) -> Arc<PolyRing> {
        let mut vars = xvars.to_vec();
        vars.extend(base.variables().iter().cloned());
        PolyRing::new(base.field(), vars, MonomialOrder::Block { split: xvars.len() })
    }

    pub fn new(
        base: Arc<ArtinAlgebra>,
        xvars: Vec<String>,
        degrees: Vec<i64>,
        relations: Vec<FreeModuleElement>,
    ) -> Result<Self> {
        if xvars.is_empty() {
            return Err(Error::Invalid("a graded module needs at least one x-variable".into()));
        }
        let ring = Self::ring_for(&base, &xvars);
        let x_count = xvars.len();
        let rank = degrees.len();
        let ident: Vec<usize> = (0..ring.nvars()).collect();
        let mut rels = Vec::with_capacity(relations.len());
        let mut relation_degrees = Vec::with_capacity(relations.len());
        for (j, col) in relations.into_iter().enumerate() {
            if col.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    found: col.rank(),
                });
            }
            let col = FreeModuleElement::new(col.components.iter().map(|f| f.embed(&ring, &ident)).collect());
            let mut deg: Option<i64> = None;
            for (i, f) in col.components.iter().enumerate() {
                for (m, _) in f.terms() {
                    let d = m.partial_degree(0..x_count) as i64 + degrees[i];
                    match deg {
                        None => deg = Some(d),
                        Some(e) if e != d => return Err(Error::Inhomogeneous { column: j }),
                        _ => {}
                    }
                }
            }
            if let Some(d) = deg {
                rels.push(col);
                relation_degrees.push(d);
            }
        }
        Ok(GradedModule {
            base,
            ring,
            x_count,
            degrees,
            relations: rels,
            relation_degrees,
        })
    }

    /// `⊕ S(-d_i)`.
    pub fn free(base: Arc<ArtinAlgebra>, xvars: Vec<String>, degrees: Vec<i64>) -> Result<Self> {
        Self::new(base, xvars, degrees, Vec::new())
    }

    pub fn base(&self) -> &Arc<ArtinAlgebra> {
        &self.base
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn x_count(&self) -> usize {
        self.x_count
    }

    /// `N` of `P^N`.
    pub fn projective_dim(&self) -> usize {
        self.x_count - 1
    }

    pub fn y_count(&self) -> usize {
        self.ring.nvars() - self.x_count
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn relations(&self) -> &[FreeModuleElement] {
        &self.relations
    }

    fn y_embedding(&self) -> Vec<usize> {
        (0..self.y_count()).map(|k| self.x_count + k).collect()
    }

    fn y_monomial(&self, v: &Monomial) -> Monomial {
        let mut e = vec![0; self.x_count];
        e.extend_from_slice(v.exps());
        Monomial::new(e)
    }

    /// `M ⊗ A/m^(n+1)` as a Gröbner basis ready for degree counting.
    pub fn restriction(&self, n: usize) -> GradedFiber<'_> {
        let emb = self.y_embedding();
        let one = self.ring.field.one();
        let mut extra: Vec<Polynomial> = self
            .base
            .defining_generators()
            .iter()
            .map(|g| g.embed(&self.ring, &emb))
            .collect();
        extra.extend(
            Monomial::all_of_degree(self.y_count(), n as u32 + 1)
                .into_iter()
                .map(|v| Polynomial::monomial(&self.ring, self.y_monomial(&v), one.clone())),
        );
        let mut gens = self.relations.clone();
        for i in 0..self.rank() {
            for g in &extra {
                gens.push(FreeModuleElement::basis_multiple(&self.ring, self.rank(), i, g.clone()));
            }
        }
        let gb = buchberger(
            &self.ring,
            self.rank(),
            &gens,
            ModuleOrder::top(self.ring.order),
        )
        .expect("ranks checked at construction");
        GradedFiber {
            module: self,
            order: n,
            gb,
        }
    }
}

/// The restriction of a graded module to one infinitesimal neighborhood.
pub struct GradedFiber<'a> {
    module: &'a GradedModule,
    order: usize,
    gb: GroebnerBasis,
}

impl GradedFiber<'_> {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Largest twisted x-degree among the terms of the Gröbner basis.
    pub fn max_basis_degree(&self) -> i64 {
        let x = self.module.x_count;
        self.gb
            .generators()
            .iter()
            .flat_map(|v| {
                v.components.iter().enumerate().flat_map(move |(i, f)| {
                    f.terms()
                        .iter()
                        .map(move |(m, _)| m.partial_degree(0..x) as i64 + self.module.degrees[i])
                })
            })
            .max()
            .unwrap_or(0)
    }

    /// Dimension of the degree-`m` piece: standard monomials of twisted
    /// x-degree `m`.
    pub fn piece_dim(&self, m: i64) -> usize {
        let gm = self.module;
        let ys = Monomial::all_up_to_degree(gm.y_count(), self.order as u32);
        let mut count = 0;
        for (i, d) in gm.degrees.iter().enumerate() {
            let e = m - d;
            if e < 0 {
                continue;
            }
            for u in Monomial::all_of_degree(gm.x_count, e as u32) {
                for v in &ys {
                    let mut exps = u.exps().to_vec();
                    exps.extend_from_slice(v.exps());
                    if !self.gb.is_leading_multiple(i, &Monomial::new(exps)) {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    /// Hilbert series numerator `Q(t)` (Laurent, as degree -> coefficient) with
    /// `HS(t) = Q(t) / (1-t)^(N+1)`, read off the leading-term module.
    pub fn hilbert_numerator(&self) -> HashMap<i64, BigInt> {
        let gm = self.module;
        let x = gm.x_count;
        let leads = self.gb.leading_terms();
        let mut total: HashMap<i64, BigInt> = HashMap::new();
        for (i, d) in gm.degrees.iter().enumerate() {
            for v in Monomial::all_up_to_degree(gm.y_count(), self.order as u32) {
                // x-parts of the leading terms in component i whose y-part divides v
                let gens: Vec<Vec<u32>> = leads
                    .iter()
                    .filter(|(c, lm)| {
                        *c == i && lm.exps()[x..].iter().zip(v.exps()).all(|(a, b)| a <= b)
                    })
                    .map(|(_, lm)| lm.exps()[..x].to_vec())
                    .collect();
                for (deg, c) in monomial_ideal_numerator(minimalize(gens)) {
                    *total.entry(deg as i64 + d).or_insert_with(BigInt::zero) += c;
                }
            }
        }
        total.retain(|_, c| !c.is_zero());
        total
    }
}

fn minimalize(mut gens: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    gens.sort();
    gens.dedup();
    let divides = |a: &[u32], b: &[u32]| a.iter().zip(b).all(|(x, y)| x <= y);
    let keep: Vec<bool> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| !gens.iter().enumerate().any(|(k, h)| k != i && divides(h, g)))
        .collect();
    gens.into_iter().zip(keep).filter(|(_, k)| *k).map(|(g, _)| g).collect()
}

/// Numerator of the Hilbert series of `k[x]/K` for a monomial ideal `K` given
/// by minimal generators, via `N(K) = N(K') - t^deg(g) N(K' : g)`.
fn monomial_ideal_numerator(gens: Vec<Vec<u32>>) -> HashMap<u32, BigInt> {
    let mut out = HashMap::new();
    let Some((last, rest)) = gens.split_last() else {
        out.insert(0, BigInt::one());
        return out;
    };
    let deg: u32 = last.iter().sum();
    let colon: Vec<Vec<u32>> = rest
        .iter()
        .map(|h| h.iter().zip(last).map(|(a, b)| a.saturating_sub(*b)).collect())
        .collect();
    out = monomial_ideal_numerator(rest.to_vec());
    for (d, c) in monomial_ideal_numerator(minimalize(colon)) {
        *out.entry(d + deg).or_insert_with(BigInt::zero) -= c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Polynomials in `m` with exact coefficients, constant term first.
pub type RationalPoly = Vec<BigRational>;

fn trim(mut p: RationalPoly) -> RationalPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_mul_linear(p: &RationalPoly, a: &BigRational, b: &BigRational) -> RationalPoly {
    // p * (a*m + b)
    let mut out = vec![BigRational::zero(); p.len() + 1];
    for (k, c) in p.iter().enumerate() {
        out[k] += c * b;
        out[k + 1] += c * a;
    }
    out
}

/// `C(m - shift, k)` as a polynomial in `m`.
fn binomial_poly(shift: i64, k: usize) -> RationalPoly {
    let mut p: RationalPoly = vec![BigRational::one()];
    let mut fact = BigInt::one();
    for j in 0..k {
        let b = BigRational::from_integer(BigInt::from(-shift - j as i64));
        p = poly_mul_linear(&p, &BigRational::one(), &b);
        fact *= BigInt::from(j as u64 + 1);
    }
    let f = BigRational::from_integer(fact);
    p.into_iter().map(|c| c / &f).collect()
}

fn poly_add_scaled(acc: &mut RationalPoly, p: &RationalPoly, s: &BigRational) {
    if acc.len() < p.len() {
        acc.resize(p.len(), BigRational::zero());
    }
    for (k, c) in p.iter().enumerate() {
        acc[k] += c * s;
    }
}

pub fn eval_poly(p: &RationalPoly, m: i64) -> BigRational {
    let x = BigRational::from_integer(BigInt::from(m));
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * &x + c)
}

/// Newton forward-difference interpolation through `values[k] = h(start + k)`.
pub fn newton_interpolate(start: i64, values: &[i64]) -> RationalPoly {
    let mut diffs: Vec<BigRational> = values
        .iter()
        .map(|v| BigRational::from_integer(BigInt::from(*v)))
        .collect();
    let mut acc: RationalPoly = Vec::new();
    for k in 0..values.len() {
        poly_add_scaled(&mut acc, &binomial_poly(start, k), &diffs[0]);
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    trim(acc)
}

/// Hilbert polynomial from the series numerator:
/// `P(m) = sum_j q_j C(m - j + N, N)`, valid for `m >= deg Q - N`.
fn polynomial_from_numerator(num: &HashMap<i64, BigInt>, n: usize) -> (RationalPoly, i64) {
    let mut acc: RationalPoly = Vec::new();
    for (j, q) in num {
        let p = binomial_poly(j - n as i64, n);
        poly_add_scaled(&mut acc, &p, &BigRational::from_integer(q.clone()));
    }
    let bound = num.keys().max().map(|d| d - n as i64).unwrap_or(i64::MIN);
    (trim(acc), bound)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertTable {
    pub order: usize,
    pub window: (i64, i64),
    /// `h(m)` for each `m` in the window.
    pub values: Vec<usize>,
    pub stabilized: bool,
    /// Agreement with `polynomial` holds from here on.
    pub threshold: i64,
    pub polynomial: Option<RationalPoly>,
}

impl HilbertTable {
    pub fn value(&self, m: i64) -> Option<usize> {
        let k = m - self.window.0;
        (k >= 0).then(|| self.values.get(k as usize).copied()).flatten()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarpiPolynomial {
    pub order: usize,
    /// Colength of `m^(order+1)`.
    pub colength: usize,
    /// Constant term first.
    pub coefficients: RationalPoly,
    pub threshold: i64,
}

/// `dim_k` of the degree-`m` piece of `M ⊗ A/m^(n+1)`.
pub fn graded_piece_dim(gm: &GradedModule, n: usize, m: i64) -> usize {
    gm.restriction(n).piece_dim(m)
}

/// Window used when the caller gives none: `[0, D]` with `D` the larger of
/// (max basis degree + N + 2) and (exact regularity bound + N + 1).
pub fn default_window(fiber: &GradedFiber<'_>) -> (i64, i64) {
    let n = fiber.module.projective_dim() as i64;
    let (_, bound) = polynomial_from_numerator(&fiber.hilbert_numerator(), n as usize);
    let hi = (fiber.max_basis_degree() + n + 2).max(bound + n + 1).max(n + 1);
    (0, hi)
}

/// Values of `h(n, m)` over a window, with the eventual polynomial.
///
/// The polynomial is accepted when the `(N+1)`-st difference vanishes on a
/// tail run covering at least `N+2` points and the exact regularity bound from
/// the Hilbert series lies inside that run; otherwise the window is too small.
pub fn hilbert_table(gm: &GradedModule, n: usize, window: Option<(i64, i64)>) -> Result<HilbertTable> {
    let fiber = gm.restriction(n);
    let (lo, hi) = window.unwrap_or_else(|| default_window(&fiber));
    if hi < lo {
        return Err(Error::WindowTooSmall { lo, hi });
    }
    let values: Vec<usize> = (lo..=hi).map(|m| fiber.piece_dim(m)).collect();
    let big_n = gm.projective_dim();

    let as_i64: Vec<i64> = values.iter().map(|v| *v as i64).collect();
    let mut diffs = as_i64.clone();
    for _ in 0..=big_n {
        diffs = diffs.windows(2).map(|w| w[1] - w[0]).collect();
    }
    // diffs[k] covers points lo+k ..= lo+k+N+1
    let mut start = diffs.len();
    while start > 0 && diffs[start - 1] == 0 {
        start -= 1;
    }
    let run_start = lo + start as i64;
    let run_points = hi - run_start + 1;
    let (exact, bound) = polynomial_from_numerator(&fiber.hilbert_numerator(), big_n);
    let stabilized = !diffs.is_empty()
        && start < diffs.len()
        && run_points >= big_n as i64 + 2
        && bound < hi - big_n as i64;
    if !stabilized {
        return Err(Error::WindowTooSmall { lo, hi });
    }
    let k0 = (run_start - lo) as usize;
    let poly = newton_interpolate(run_start, &as_i64[k0..k0 + big_n + 1]);
    if poly != exact {
        return Err(Error::Disagreement(format!(
            "interpolated Hilbert polynomial at order {n} differs from the Hilbert series"
        )));
    }
    Ok(HilbertTable {
        order: n,
        window: (lo, hi),
        values,
        stabilized,
        threshold: run_start,
        polynomial: Some(poly),
    })
}

/// Hilbert polynomial of the restriction to order `n`, divided by the length
/// of that neighborhood.
pub fn varpi_projective(gm: &GradedModule, n: usize, window: Option<(i64, i64)>) -> Result<VarpiPolynomial> {
    let table = hilbert_table(gm, n, window)?;
    let colength = gm.base.infinitesimal_neighborhood(n).colength;
    let den = BigRational::from_integer(BigInt::from(colength));
    Ok(VarpiPolynomial {
        order: n,
        colength,
        coefficients: table
            .polynomial
            .expect("stabilized")
            .into_iter()
            .map(|c| c / &den)
            .collect(),
        threshold: table.threshold,
    })
}

/// Flat iff the varpi polynomial is the same for every order
/// `0 .. nil_index - 1`.
pub fn projective_flat_verdict(gm: &GradedModule, window: Option<(i64, i64)>) -> Result<FlatnessVerdict> {
    if !gm.base.is_definitive() {
        return Err(Error::ModeUnsupported(
            "projective verdicts need an Artinian base".into(),
        ));
    }
    let polys: Vec<VarpiPolynomial> = (0..gm.base.nil_index())
        .map(|n| varpi_projective(gm, n, window))
        .collect::<Result<_>>()?;
    let witness = polys
        .iter()
        .find(|p| p.coefficients != polys[0].coefficients)
        .map(|p| Witness::Polynomial {
            order: p.order,
            base: polys[0].coefficients.clone(),
            at: p.coefficients.clone(),
        });
    Ok(FlatnessVerdict {
        status: if witness.is_some() {
            Status::NotFlat
        } else {
            Status::Flat
        },
        witness,
        evidence: Evidence::Polynomials(polys),
        oracle: None,
    })
}

/// Degree-`m` piece dimension by plain linear algebra on the explicit basis
/// `(generator, x-monomial, y-monomial)`, with no Gröbner basis.
///
/// The y-part is truncated at degree `T = min(n+1, nil_index)`; both
/// `m^(n+1)` and `m^(nil_index) ⊆ J` vanish there, so the submodule's image
/// is spanned by the truncated monomial multiples of the relations and of the
/// `J e_i`.
pub fn brute_force_piece_dim(gm: &GradedModule, n: usize, m: i64) -> usize {
    let x = gm.x_count;
    let t = (n as u32 + 1).min(gm.base.nil_index() as u32);
    let ys = Monomial::all_up_to_degree(gm.y_count(), t - 1);

    let mut index: HashMap<(usize, Monomial), usize> = HashMap::new();
    for (i, d) in gm.degrees.iter().enumerate() {
        if m - d < 0 {
            continue;
        }
        for u in Monomial::all_of_degree(x, (m - d) as u32) {
            for v in &ys {
                let mut e = u.exps().to_vec();
                e.extend_from_slice(v.exps());
                let k = index.len();
                index.insert((i, Monomial::new(e)), k);
            }
        }
    }
    if index.is_empty() {
        return 0;
    }

    let emb = gm.y_embedding();
    let mut spanning: Vec<(FreeModuleElement, i64)> = gm
        .relations
        .iter()
        .cloned()
        .zip(gm.relation_degrees.iter().copied())
        .collect();
    for i in 0..gm.rank() {
        for g in gm.base.defining_generators() {
            spanning.push((
                FreeModuleElement::basis_multiple(&gm.ring, gm.rank(), i, g.embed(&gm.ring, &emb)),
                gm.degrees[i],
            ));
        }
    }

    let mut ech = RowEchelon::new(gm.ring.field);
    for (col, deg) in &spanning {
        if m - deg < 0 {
            continue;
        }
        for u in Monomial::all_of_degree(x, (m - deg) as u32) {
            for v in &ys {
                let mut e = u.exps().to_vec();
                e.extend_from_slice(v.exps());
                let shift = Monomial::new(e);
                let mut row: SparseRow = Vec::new();
                for (i, f) in col.components.iter().enumerate() {
                    for (mon, c) in f.terms() {
                        let prod = mon.mul(&shift);
                        if prod.partial_degree(x..prod.nvars()) < t {
                            row.push((index[&(i, prod)], c.clone()));
                        }
                    }
                }
                if !row.is_empty() {
                    ech.insert(&row);
                }
            }
        }
    }
    index.len() - ech.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artin::make_algebra;
    use crate::scalar::Field;

    fn dual_numbers() -> Arc<ArtinAlgebra> {
        let r = PolyRing::new(Field::Rational, vec!["e".into()], MonomialOrder::DegRevLex);
        Arc::new(make_algebra(Field::Rational, vec!["e".into()], vec![Polynomial::var(&r, 0).pow(2)]).unwrap())
    }

    fn point() -> Arc<ArtinAlgebra> {
        Arc::new(make_algebra(Field::Rational, vec![], vec![]).unwrap())
    }

    fn xs(k: usize) -> Vec<String> {
        (0..k).map(|i| format!("x{i}")).collect()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    /// `S/(rel)` for a single relation built from the ring.
    fn cyclic(base: Arc<ArtinAlgebra>, k: usize, rel: impl Fn(&Arc<PolyRing>) -> Polynomial) -> GradedModule {
        let ring = GradedModule::ring_for(&base, &xs(k));
        let f = rel(&ring);
        GradedModule::new(base, xs(k), vec![0], vec![FreeModuleElement::new(vec![f])]).unwrap()
    }

    #[test]
    fn binomials_and_interpolation() {
        // C(m + 1, 1) = m + 1
        assert_eq!(binomial_poly(-1, 1), vec![q(1, 1), q(1, 1)]);
        assert_eq!(newton_interpolate(0, &[1, 2, 3]), vec![q(1, 1), q(1, 1)]);
        assert_eq!(newton_interpolate(3, &[4, 5]), vec![q(1, 1), q(1, 1)]);
        // squares
        assert_eq!(newton_interpolate(2, &[4, 9, 16]), vec![q(0, 1), q(0, 1), q(1, 1)]);
    }

    #[test]
    fn free_module_pieces() {
        let gm = GradedModule::free(dual_numbers(), xs(2), vec![0]).unwrap();
        assert_eq!(graded_piece_dim(&gm, 1, 3), 8);
        assert_eq!(brute_force_piece_dim(&gm, 1, 3), 8);
    }

    #[test]
    fn eps_x0_pieces() {
        let gm = cyclic(dual_numbers(), 2, |r| &Polynomial::var(r, 2) * &Polynomial::var(r, 0));
        for m in 0..5 {
            assert_eq!(graded_piece_dim(&gm, 0, m), m as usize + 1);
            assert_eq!(brute_force_piece_dim(&gm, 0, m), m as usize + 1);
            assert_eq!(graded_piece_dim(&gm, 1, m), m as usize + 2);
            assert_eq!(brute_force_piece_dim(&gm, 1, m), m as usize + 2);
        }
    }

    #[test]
    fn tables_and_polynomials() {
        let p1 = GradedModule::free(point(), xs(2), vec![0]).unwrap();
        let t = hilbert_table(&p1, 0, None).unwrap();
        assert_eq!(t.polynomial, Some(vec![q(1, 1), q(1, 1)]));
        assert_eq!(&t.values[..3], &[1, 2, 3]);

        let line = cyclic(point(), 3, |r| Polynomial::var(r, 0));
        assert_eq!(hilbert_table(&line, 0, None).unwrap().polynomial, Some(vec![q(1, 1), q(1, 1)]));

        let gm = cyclic(dual_numbers(), 2, |r| &Polynomial::var(r, 2) * &Polynomial::var(r, 0));
        assert_eq!(hilbert_table(&gm, 1, None).unwrap().polynomial, Some(vec![q(2, 1), q(1, 1)]));
    }

    #[test]
    fn varpi_polynomials() {
        let free = GradedModule::free(dual_numbers(), xs(2), vec![0]).unwrap();
        for n in 0..2 {
            assert_eq!(varpi_projective(&free, n, None).unwrap().coefficients, vec![q(1, 1), q(1, 1)]);
        }
        let gm = cyclic(dual_numbers(), 2, |r| &Polynomial::var(r, 2) * &Polynomial::var(r, 0));
        assert_eq!(varpi_projective(&gm, 0, None).unwrap().coefficients, vec![q(1, 1), q(1, 1)]);
        assert_eq!(varpi_projective(&gm, 1, None).unwrap().coefficients, vec![q(1, 1), q(1, 2)]);
        let pt = GradedModule::free(point(), xs(1), vec![0]).unwrap();
        assert_eq!(varpi_projective(&pt, 0, None).unwrap().coefficients, vec![q(1, 1)]);
    }

    #[test]
    fn projective_verdicts() {
        let free = GradedModule::free(dual_numbers(), xs(2), vec![0, 1]).unwrap();
        assert_eq!(projective_flat_verdict(&free, None).unwrap().status, Status::Flat);

        let gm = cyclic(dual_numbers(), 2, |r| &Polynomial::var(r, 2) * &Polynomial::var(r, 0));
        let v = projective_flat_verdict(&gm, None).unwrap();
        assert_eq!(v.status, Status::NotFlat);
        assert_eq!(
            v.witness,
            Some(Witness::Polynomial {
                order: 1,
                base: vec![q(1, 1), q(1, 1)],
                at: vec![q(1, 1), q(1, 2)],
            })
        );

        let flat = cyclic(dual_numbers(), 2, |r| Polynomial::var(r, 0));
        let v = projective_flat_verdict(&flat, None).unwrap();
        assert_eq!(v.status, Status::Flat);
        for n in 0..2 {
            for m in 0..5 {
                assert_eq!(brute_force_piece_dim(&flat, n, m), n + 1);
            }
        }
    }

    #[test]
    fn inhomogeneous_relation_rejected() {
        let base = dual_numbers();
        let ring = GradedModule::ring_for(&base, &xs(2));
        let f = &Polynomial::var(&ring, 0) + &Polynomial::var(&ring, 0).pow(2);
        let err = GradedModule::new(base, xs(2), vec![0], vec![FreeModuleElement::new(vec![f])]);
        assert!(matches!(err, Err(Error::Inhomogeneous { column: 0 })));
    }

    #[test]
    fn small_window_errors() {
        // the Hilbert function of k[x0,x1,x2]/(x0^4, x1^4) only settles at m = 6
        let base = point();
        let ring = GradedModule::ring_for(&base, &xs(3));
        let rels = vec![
            FreeModuleElement::new(vec![Polynomial::var(&ring, 0).pow(4)]),
            FreeModuleElement::new(vec![Polynomial::var(&ring, 1).pow(4)]),
        ];
        let gm = GradedModule::new(base, xs(3), vec![0], rels).unwrap();
        assert!(matches!(hilbert_table(&gm, 0, Some((0, 7))), Err(Error::WindowTooSmall { .. })));
        let t = hilbert_table(&gm, 0, None).unwrap();
        assert_eq!(t.polynomial, Some(vec![q(16, 1)]));
        assert_eq!(t.threshold, 6);
    }
}
