//! The flatness test over a local Artinian base.
//!
//! For a finitely generated `A`-module `M` and each order `n`, the normalized
//! fiber length
//!
//! ```text
//! varpi(n) = dim_k (M ⊗ A/m^(n+1)) / dim_k (A/m^(n+1))
//! ```
//!
//! is constant in `n` exactly when `M` is free (equivalently flat). Orders
//! beyond `nil_index - 1` repeat the last row, so the profile is finite. The
//! Tor oracle (`Tor_1(k, M) = 0`) decides the same question independently and
//! is used to cross-check every verdict.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::artin::IdealInA;
use crate::error::{Error, Result};
use crate::fiber::{fiber_dim, minimal_generator_count, tor1_dim, ModulePresentation};
use crate::graded::VarpiPolynomial;
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileRow {
    pub order: usize,
    /// `dim_k A/m^(order+1)`
    pub colength: usize,
    pub fiber_dim: usize,
    pub varpi: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfinitesimalProfile {
    pub rows: Vec<ProfileRow>,
    pub algebra_length: usize,
    pub nil_index: usize,
}

impl InfinitesimalProfile {
    pub fn is_constant(&self) -> bool {
        self.rows.windows(2).all(|w| w[0].varpi == w[1].varpi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Decide from the powers of the maximal ideal alone.
    PowersOnly,
    /// Additionally re-verify the fiber equality on every monomial ideal of
    /// colength `<= c_max`.
    Enumeration { c_max: usize },
    /// Check orders `0..=max_order` only; never answers `Flat`.
    Truncated { max_order: usize },
}

impl Mode {
    /// `min(6, length)`, the default enumeration bound.
    pub fn default_enumeration(length: usize) -> Mode {
        Mode::Enumeration { c_max: length.min(6) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Flat,
    NotFlat,
    FlatUpToOrder(usize),
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Flat => "Flat",
            Status::NotFlat => "NotFlat",
            Status::FlatUpToOrder(_) => "FlatUpToOrder",
        }
    }
}

/// Where the fiber equality fails, with both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `varpi(order) != varpi(0)`.
    Neighborhood {
        order: usize,
        colength: usize,
        fiber_dim: usize,
        varpi: BigRational,
        varpi_base: BigRational,
    },
    /// `dim(M ⊗ A/I) != colength(I) * dim(M ⊗ k)` for an enumerated ideal.
    Ideal {
        generators: Vec<Polynomial>,
        display: String,
        colength: usize,
        fiber_dim: usize,
        expected: usize,
    },
    /// The varpi polynomials at order 0 and `order` differ.
    Polynomial {
        order: usize,
        base: Vec<BigRational>,
        at: Vec<BigRational>,
    },
}

/// The independent Tor-based verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleCheck {
    pub tor1: usize,
    pub agrees: bool,
}

#[derive(Debug, Clone)]
pub enum Evidence {
    Profile(InfinitesimalProfile),
    Polynomials(Vec<VarpiPolynomial>),
}

#[derive(Debug, Clone)]
pub struct FlatnessVerdict {
    pub status: Status,
    pub witness: Option<Witness>,
    pub evidence: Evidence,
    pub oracle: Option<OracleCheck>,
}

impl FlatnessVerdict {
    pub fn profile(&self) -> Option<&InfinitesimalProfile> {
        match &self.evidence {
            Evidence::Profile(p) => Some(p),
            Evidence::Polynomials(_) => None,
        }
    }
}

fn ratio(num: usize, den: usize) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `varpi(n)` as an exact fraction.
pub fn varpi_affine(m: &ModulePresentation, n: usize) -> BigRational {
    let nb = m.algebra().infinitesimal_neighborhood(n);
    ratio(fiber_dim(m, &nb.ideal), nb.colength)
}

fn profile_rows(m: &ModulePresentation, max_order: usize) -> Vec<ProfileRow> {
    (0..=max_order)
        .map(|n| {
            let nb = m.algebra().infinitesimal_neighborhood(n);
            let fd = fiber_dim(m, &nb.ideal);
            ProfileRow {
                order: n,
                colength: nb.colength,
                fiber_dim: fd,
                varpi: ratio(fd, nb.colength),
            }
        })
        .collect()
}

/// The rows `n = 0 .. nil_index - 1`.
pub fn infinitesimal_profile(m: &ModulePresentation) -> InfinitesimalProfile {
    let alg = m.algebra();
    InfinitesimalProfile {
        rows: profile_rows(m, alg.nil_index() - 1),
        algebra_length: alg.length(),
        nil_index: alg.nil_index(),
    }
}

fn first_break(rows: &[ProfileRow]) -> Option<Witness> {
    let base = &rows.first()?.varpi;
    rows.iter().find(|r| r.varpi != *base).map(|r| Witness::Neighborhood {
        order: r.order,
        colength: r.colength,
        fiber_dim: r.fiber_dim,
        varpi: r.varpi.clone(),
        varpi_base: base.clone(),
    })
}

/// Checks `dim(M ⊗ A/I) = colength(I) * generators` on one ideal.
fn ideal_witness(m: &ModulePresentation, ideal: &IdealInA, generators: usize) -> Option<Witness> {
    let fd = fiber_dim(m, ideal);
    let expected = ideal.colength * generators;
    (fd != expected).then(|| Witness::Ideal {
        generators: ideal.generators.clone(),
        display: ideal.display(),
        colength: ideal.colength,
        fiber_dim: fd,
        expected,
    })
}

pub fn flat_verdict(m: &ModulePresentation, mode: Mode) -> Result<FlatnessVerdict> {
    let alg = m.algebra();
    let definitive = alg.is_definitive();
    match mode {
        Mode::PowersOnly | Mode::Enumeration { .. } if !definitive => {
            return Err(Error::ModeUnsupported(
                "base is not Artinian; only truncated mode is available".into(),
            ))
        }
        _ => {}
    }

    if let Mode::Truncated { max_order } = mode {
        if let Some(t) = alg.truncated_at() {
            if max_order > t {
                return Err(Error::ModeUnsupported(format!(
                    "base was truncated at order {t}, cannot check order {max_order}"
                )));
            }
        }
        let last = max_order.min(alg.nil_index() - 1);
        let rows = profile_rows(m, last);
        let witness = first_break(&rows);
        let status = if witness.is_some() {
            Status::NotFlat
        } else {
            Status::FlatUpToOrder(max_order)
        };
        let profile = InfinitesimalProfile {
            rows,
            algebra_length: alg.length(),
            nil_index: alg.nil_index(),
        };
        return Ok(FlatnessVerdict {
            status,
            witness,
            evidence: Evidence::Profile(profile),
            oracle: None,
        });
    }

    let profile = infinitesimal_profile(m);
    let mut witness = first_break(&profile.rows);
    if witness.is_none() {
        if let Mode::Enumeration { c_max } = mode {
            let mu = profile.rows[0].fiber_dim;
            'outer: for c in 1..=c_max.min(alg.length()) {
                for ideal in alg.enumerate_monomial_ideals(c) {
                    if let Some(w) = ideal_witness(m, &ideal, mu) {
                        witness = Some(w);
                        break 'outer;
                    }
                }
            }
        }
    }
    Ok(FlatnessVerdict {
        status: if witness.is_some() {
            Status::NotFlat
        } else {
            Status::Flat
        },
        witness,
        evidence: Evidence::Profile(profile),
        oracle: None,
    })
}

/// Recomputes both sides of a witness and confirms that they differ.
pub fn witness_holds(m: &ModulePresentation, w: &Witness) -> bool {
    match w {
        Witness::Neighborhood {
            order, varpi_base, ..
        } => varpi_affine(m, *order) != *varpi_base && varpi_affine(m, 0) == *varpi_base,
        Witness::Ideal { generators, .. } => {
            let Ok(ideal) = m.algebra().ideal(generators.clone()) else {
                return false;
            };
            ideal_witness(m, &ideal, minimal_generator_count(m)).is_some()
        }
        Witness::Polynomial { base, at, .. } => base != at,
    }
}

/// Both evidence trails of a cross-validated verdict.
#[derive(Debug, Clone)]
pub struct CrossValidation {
    pub verdict: FlatnessVerdict,
    pub tor1: usize,
    /// `dim_k M`
    pub total_dim: usize,
    /// `length(A) * varpi(0)`
    pub free_dim: usize,
}

/// Runs the varpi verdict and the Tor oracle and insists they agree:
/// `Flat <=> Tor_1(k, M) = 0 <=> dim M = length(A) * varpi(0)`.
pub fn cross_validate(m: &ModulePresentation) -> Result<CrossValidation> {
    let alg = m.algebra();
    let mut verdict = flat_verdict(m, Mode::PowersOnly)?;
    let tor1 = tor1_dim(m, &alg.maximal_ideal());
    let total_dim = fiber_dim(m, &alg.zero_ideal());
    let mu = verdict.profile().map(|p| p.rows[0].fiber_dim).unwrap_or(0);
    let free_dim = alg.length() * mu;
    let flat = verdict.status == Status::Flat;
    let agrees = flat == (tor1 == 0) && flat == (total_dim == free_dim);
    verdict.oracle = Some(OracleCheck { tor1, agrees });
    if !agrees {
        return Err(Error::Disagreement(format!(
            "verdict {}, Tor_1 = {tor1}, dim M = {total_dim}, length * generators = {free_dim}",
            verdict.status.label()
        )));
    }
    Ok(CrossValidation {
        verdict,
        tor1,
        total_dim,
        free_dim,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CofiltrationStep {
    /// Colength of the smaller ideal `I'` (one more than `to`).
    pub from_colength: usize,
    pub to_colength: usize,
    /// `dim M ⊗ A/I'`
    pub fiber_large: usize,
    /// `dim M ⊗ A/I`
    pub fiber_small: usize,
    pub inequality_holds: bool,
    pub equality_holds: bool,
}

#[derive(Debug, Clone)]
pub struct CofiltrationReport {
    pub generators: usize,
    pub flat: bool,
    pub steps: Vec<CofiltrationStep>,
}

impl CofiltrationReport {
    /// Inequality at every step, and equality at every step for flat modules.
    pub fn ok(&self) -> bool {
        self.steps
            .iter()
            .all(|s| s.inequality_holds && (!self.flat || s.equality_holds))
    }
}

/// Walks a chain `I_c ⊂ I_(c-1) ⊂ ... ⊂ m` (colengths dropping by one) and
/// checks `dim M ⊗ A/I' <= dim M ⊗ A/I + dim M ⊗ k` at each step, with
/// equality when `M` is flat.
pub fn cofiltration_check(m: &ModulePresentation, chain: &[IdealInA]) -> Result<CofiltrationReport> {
    if chain.is_empty() {
        return Err(Error::BadChain("empty chain".into()));
    }
    for w in chain.windows(2) {
        if w[0].colength != w[1].colength + 1 {
            return Err(Error::BadChain(format!(
                "colengths {} then {}",
                w[0].colength, w[1].colength
            )));
        }
        if !w[0].generators.iter().all(|g| w[1].contains(g)) {
            return Err(Error::BadChain(format!(
                "{} is not contained in {}",
                w[0].display(),
                w[1].display()
            )));
        }
    }
    if chain.last().unwrap().colength != 1 {
        return Err(Error::BadChain("chain must end at the maximal ideal".into()));
    }
    let mu = minimal_generator_count(m);
    let flat = flat_verdict(m, Mode::PowersOnly)?.status == Status::Flat;
    let dims: Vec<usize> = chain.iter().map(|i| fiber_dim(m, i)).collect();
    let steps = chain
        .windows(2)
        .zip(dims.windows(2))
        .map(|(ideals, d)| CofiltrationStep {
            from_colength: ideals[0].colength,
            to_colength: ideals[1].colength,
            fiber_large: d[0],
            fiber_small: d[1],
            inequality_holds: d[0] <= d[1] + mu,
            equality_holds: d[0] == d[1] + mu,
        })
        .collect();
    Ok(CofiltrationReport {
        generators: mu,
        flat,
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artin::{make_algebra, ArtinAlgebra};
    use crate::monomial::MonomialOrder;
    use crate::poly::PolyRing;
    use num_traits::Zero;
    use crate::scalar::Field;
    use std::sync::Arc;

    fn truncated_line(k: u32) -> Arc<ArtinAlgebra> {
        let r = PolyRing::new(Field::Rational, vec!["y".into()], MonomialOrder::DegRevLex);
        Arc::new(make_algebra(Field::Rational, vec!["y".into()], vec![Polynomial::var(&r, 0).pow(k)]).unwrap())
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn dual_numbers_module() -> ModulePresentation {
        let a = truncated_line(2);
        let y = Polynomial::var(a.ring(), 0);
        ModulePresentation::cyclic(a, vec![y]).unwrap()
    }

    fn truncated_line_module() -> ModulePresentation {
        let a = truncated_line(3);
        let y = Polynomial::var(a.ring(), 0);
        ModulePresentation::cyclic(a, vec![y.pow(2)]).unwrap()
    }

    #[test]
    fn varpi_values() {
        let m = dual_numbers_module();
        assert_eq!(varpi_affine(&m, 0), q(1, 1));
        assert_eq!(varpi_affine(&m, 1), q(1, 2));
        let m = truncated_line_module();
        let v: Vec<_> = (0..3).map(|n| varpi_affine(&m, n)).collect();
        assert_eq!(v, vec![q(1, 1), q(1, 1), q(2, 3)]);
        let free = ModulePresentation::free(truncated_line(4), 3);
        for n in 0..5 {
            assert_eq!(varpi_affine(&free, n), q(3, 1));
        }
    }

    #[test]
    fn profiles() {
        let rows: Vec<_> = infinitesimal_profile(&dual_numbers_module())
            .rows
            .into_iter()
            .map(|r| (r.order, r.colength, r.fiber_dim, r.varpi))
            .collect();
        assert_eq!(rows, vec![(0, 1, 1, q(1, 1)), (1, 2, 1, q(1, 2))]);
        let rows: Vec<_> = infinitesimal_profile(&truncated_line_module())
            .rows
            .into_iter()
            .map(|r| (r.order, r.colength, r.fiber_dim, r.varpi))
            .collect();
        assert_eq!(
            rows,
            vec![(0, 1, 1, q(1, 1)), (1, 2, 2, q(1, 1)), (2, 3, 2, q(2, 3))]
        );
        let zero = ModulePresentation::free(truncated_line(3), 0);
        assert!(infinitesimal_profile(&zero)
            .rows
            .iter()
            .all(|r| r.fiber_dim == 0 && r.varpi.is_zero()));
    }

    #[test]
    fn verdicts() {
        let v = flat_verdict(&dual_numbers_module(), Mode::PowersOnly).unwrap();
        assert_eq!(v.status, Status::NotFlat);
        assert!(matches!(v.witness, Some(Witness::Neighborhood { order: 1, .. })));
        assert!(witness_holds(&dual_numbers_module(), v.witness.as_ref().unwrap()));

        let v = flat_verdict(&truncated_line_module(), Mode::default_enumeration(3)).unwrap();
        assert_eq!(v.status, Status::NotFlat);
        assert!(matches!(v.witness, Some(Witness::Neighborhood { order: 2, .. })));

        let free = ModulePresentation::free(truncated_line(3), 3);
        let v = flat_verdict(&free, Mode::default_enumeration(3)).unwrap();
        assert_eq!(v.status, Status::Flat);
        assert!(v.profile().unwrap().rows.iter().all(|r| r.varpi == q(3, 1)));

        let v = flat_verdict(&free, Mode::Truncated { max_order: 1 }).unwrap();
        assert_eq!(v.status, Status::FlatUpToOrder(1));
    }

    #[test]
    fn truncated_base_refuses_definitive_modes() {
        let vars = vec!["y".to_string()];
        let t = Arc::new(ArtinAlgebra::truncation(Field::Rational, vars, vec![], 3).unwrap());
        let free = ModulePresentation::free(t.clone(), 1);
        assert!(matches!(
            flat_verdict(&free, Mode::PowersOnly),
            Err(Error::ModeUnsupported(_))
        ));
        assert!(matches!(
            flat_verdict(&free, Mode::Truncated { max_order: 4 }),
            Err(Error::ModeUnsupported(_))
        ));
        let v = flat_verdict(&free, Mode::Truncated { max_order: 3 }).unwrap();
        assert_eq!(v.status, Status::FlatUpToOrder(3));
        let y = Polynomial::var(t.ring(), 0);
        let k = ModulePresentation::cyclic(t, vec![y]).unwrap();
        assert_eq!(flat_verdict(&k, Mode::Truncated { max_order: 3 }).unwrap().status, Status::NotFlat);
    }

    #[test]
    fn cross_validation() {
        let cv = cross_validate(&dual_numbers_module()).unwrap();
        assert_eq!((cv.verdict.status, cv.tor1), (Status::NotFlat, 1));
        let cv = cross_validate(&ModulePresentation::free(truncated_line(3), 2)).unwrap();
        assert_eq!((cv.verdict.status, cv.tor1), (Status::Flat, 0));
        assert!(cv.verdict.oracle.unwrap().agrees);
    }

    #[test]
    fn cofiltrations() {
        let a = truncated_line(3);
        let free = ModulePresentation::free(a.clone(), 1);
        let chain = vec![a.power_of_maximal(2), a.maximal_ideal()];
        let rep = cofiltration_check(&free, &chain).unwrap();
        assert_eq!(rep.steps.len(), 1);
        assert_eq!((rep.steps[0].fiber_large, rep.steps[0].fiber_small), (2, 1));
        assert!(rep.ok());

        let m = truncated_line_module();
        let chain = vec![a.power_of_maximal(3), a.power_of_maximal(2), a.maximal_ideal()];
        let rep = cofiltration_check(&m, &chain).unwrap();
        let dims: Vec<_> = rep.steps.iter().map(|s| (s.fiber_large, s.fiber_small)).collect();
        assert_eq!(dims, vec![(2, 2), (2, 1)]);
        assert!(rep.steps.iter().all(|s| s.inequality_holds));
        assert!(!rep.steps[0].equality_holds);
        assert!(rep.steps[1].equality_holds);

        let bad = vec![a.power_of_maximal(3), a.maximal_ideal()];
        assert!(matches!(cofiltration_check(&m, &bad), Err(Error::BadChain(_))));
    }
}
