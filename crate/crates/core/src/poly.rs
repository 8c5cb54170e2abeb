//! Sparse distributed multivariate polynomials.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::scalar::{Field, Scalar};

/// A polynomial ring `k[v_1..v_s]` with a fixed monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    pub field: Field,
    pub vars: Vec<String>,
    pub order: MonomialOrder,
}

impl PolyRing {
    pub fn new(field: Field, vars: Vec<String>, order: MonomialOrder) -> Arc<PolyRing> {
        Arc::new(PolyRing { field, vars, order })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

/// Terms are kept sorted descending in the ring's order; no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, Scalar)>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Scalar) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, ring.field.one())
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: Scalar) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &Arc<PolyRing>, index: usize) -> Self {
        Self::monomial(
            ring,
            Monomial::var_power(ring.nvars(), index, 1),
            ring.field.one(),
        )
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(ring: &Arc<PolyRing>, mut terms: Vec<(Monomial, Scalar)>) -> Self {
        let order = ring.order;
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        let mut out: Vec<(Monomial, Scalar)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.add(&c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Scalar)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of the monomial 1.
    pub fn constant_term(&self) -> Scalar {
        self.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.ring.field.zero())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// The maximal term in the ring's own order.
    pub fn leading_term(&self) -> Result<(&Monomial, &Scalar)> {
        self.terms
            .first()
            .map(|(m, c)| (m, c))
            .ok_or(Error::ZeroPolynomial)
    }

    /// The maximal term under an arbitrary order.
    pub fn leading_term_in(&self, order: MonomialOrder) -> Result<(&Monomial, &Scalar)> {
        self.terms
            .iter()
            .max_by(|a, b| order.compare(&a.0, &b.0))
            .map(|(m, c)| (m, c))
            .ok_or(Error::ZeroPolynomial)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::VariableMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut acc = Polynomial::zero(&self.ring);
        for (m, c) in &other.terms {
            acc = acc.merge(&self.mul_term(m, c), false);
        }
        Ok(acc)
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let order = self.ring.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let fix = |c: &Scalar| if negate { c.neg() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match order.compare(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), fix(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a[i].1.add(&fix(&b[j].1));
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), fix(c))));
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    /// `c * m * self`; order is preserved because monomial orders are multiplicative.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), tc.mul(c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        self.mul_term(&Monomial::one(self.ring.nvars()), c)
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&self.ring.field.from_i64(-1))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Rewrites this polynomial in another ring, sending variable `i` to
    /// variable `var_map[i]` of the target.
    pub fn embed(&self, target: &Arc<PolyRing>, var_map: &[usize]) -> Polynomial {
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; n];
                for (i, x) in m.exps().iter().enumerate() {
                    e[var_map[i]] += x;
                }
                (Monomial::new(e), c.clone())
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }
}

/// Exact sum of two polynomials over the same ring.
pub fn poly_add(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    f.checked_add(g)
}

/// Exact product of two polynomials over the same ring.
pub fn poly_mul(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    f.checked_mul(g)
}

/// Leading term of `f` under `ord`.
pub fn leading_term(f: &Polynomial, ord: MonomialOrder) -> Result<(Monomial, Scalar)> {
    f.leading_term_in(ord).map(|(m, c)| (m.clone(), c.clone()))
}

// Operator forms panic on ring mismatch; use the `checked_*` methods for
// untrusted input.
impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ring mismatch")
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ring mismatch")
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ring mismatch")
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

pub(crate) fn fmt_monomial(m: &Monomial, vars: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars[i].clone()),
            _ => parts.push(format!("{}^{}", vars[i], e)),
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { c.neg() } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", fmt_monomial(m, &self.ring.vars))?;
            } else {
                write!(f, "{abs}*{}", fmt_monomial(m, &self.ring.vars))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ring(field: Field, n: usize) -> Arc<PolyRing> {
        PolyRing::new(
            field,
            (1..=n).map(|i| format!("y{i}")).collect(),
            MonomialOrder::DegRevLex,
        )
    }

    fn random_poly(r: &Arc<PolyRing>, rng: &mut ChaCha8Rng) -> Polynomial {
        let k = rng.gen_range(0..5);
        let terms = (0..k)
            .map(|_| {
                let e = (0..r.nvars()).map(|_| rng.gen_range(0..3)).collect();
                (Monomial::new(e), r.field.from_i64(rng.gen_range(-5..=5)))
            })
            .collect();
        Polynomial::from_terms(r, terms)
    }

    #[test]
    fn additive_inverse_and_disjoint_sums() {
        let r = ring(Field::Rational, 1);
        let y = Polynomial::var(&r, 0);
        assert!(poly_add(&y, &-&y).unwrap().is_zero());
        let one = Polynomial::one(&r);
        let s = poly_add(&(&(&y * &y) + &one), &y).unwrap();
        assert_eq!(s.to_string(), "y1^2 + y1 + 1");
    }

    #[test]
    fn modular_sum() {
        let r = ring(Field::prime(5).unwrap(), 1);
        let y = Polynomial::var(&r, 0);
        let f = y.scale(&r.field.from_i64(3));
        let g = y.scale(&r.field.from_i64(4));
        assert_eq!(poly_add(&f, &g).unwrap(), y.scale(&r.field.from_i64(2)));
    }

    #[test]
    fn products() {
        let r = ring(Field::Rational, 1);
        let y = Polynomial::var(&r, 0);
        let one = Polynomial::one(&r);
        assert_eq!((&y * &y).to_string(), "y1^2");
        assert_eq!(
            poly_mul(&(&y + &one), &(&y - &one)).unwrap().to_string(),
            "y1^2 - 1"
        );
        assert!(poly_mul(&Polynomial::zero(&r), &y).unwrap().is_zero());
    }

    #[test]
    fn leading_terms() {
        let r = ring(Field::Rational, 2);
        let y1 = Polynomial::var(&r, 0);
        let y2 = Polynomial::var(&r, 1);
        let f = &y1.pow(2) + &y2.pow(3);
        let (m, c) = leading_term(&f, MonomialOrder::DegRevLex).unwrap();
        assert_eq!(m.exps(), &[0, 3]);
        assert!(c.is_one());
        let g = &(&y1 * &y2) + &y1;
        assert_eq!(leading_term(&g, r.order).unwrap().0.exps(), &[1, 1]);
        let seven = Polynomial::constant(&r, r.field.from_i64(7));
        let (m, c) = leading_term(&seven, r.order).unwrap();
        assert!(m.is_one());
        assert_eq!(c, r.field.from_i64(7));
        assert!(matches!(
            leading_term(&Polynomial::zero(&r), r.order),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = ring(Field::Rational, 1);
        let b = ring(Field::Rational, 2);
        assert!(matches!(
            poly_add(&Polynomial::var(&a, 0), &Polynomial::var(&b, 0)),
            Err(Error::VariableMismatch)
        ));
    }

    #[test]
    fn ring_axioms_randomized() {
        for field in [Field::Rational, Field::prime(7).unwrap()] {
            let r = ring(field, 3);
            let mut rng = ChaCha8Rng::seed_from_u64(11);
            for _ in 0..10_000 {
                let (a, b, c) = (
                    random_poly(&r, &mut rng),
                    random_poly(&r, &mut rng),
                    random_poly(&r, &mut rng),
                );
                assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
                assert_eq!(&a * &b, &b * &a);
            }
        }
    }
}
