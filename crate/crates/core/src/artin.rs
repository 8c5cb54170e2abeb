//! Local Artinian algebras `A = k[y_1..y_s]/J` supported at the origin, their
//! ideals, and the infinitesimal neighborhoods cut out by powers of the
//! maximal ideal.
//!
//! Two indexings coexist here and must not be confused: neighborhoods are
//! indexed by their *order* `n` (ideal `m^(n+1)`), ideals by their *colength*.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, quotient_dim, standard_monomials, FreeModuleElement, GroebnerBasis, ModuleOrder};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{PolyRing, Polynomial};
use crate::scalar::Field;

#[derive(Debug, Clone)]
pub struct ArtinAlgebra {
    ring: Arc<PolyRing>,
    generators: Vec<Polynomial>,
    gb: GroebnerBasis,
    standard_basis: Vec<Monomial>,
    length: usize,
    nil_index: usize,
    truncated_at: Option<usize>,
}

/// An ideal of `A`, stored by generators (lifted to `k[y]`) together with a
/// Gröbner basis of its preimage `J + I`.
#[derive(Debug, Clone)]
pub struct IdealInA {
    pub generators: Vec<Polynomial>,
    pub colength: usize,
    gb: GroebnerBasis,
}

impl IdealInA {
    /// Gröbner basis of `J + I` in `k[y]`.
    pub fn preimage_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.gb.reduce_poly(f).is_zero()
    }

    /// `(g1, g2, ...)`, or `0` for the zero ideal.
    pub fn display(&self) -> String {
        if self.generators.is_empty() {
            "0".into()
        } else {
            format!(
                "({})",
                self.generators
                    .iter()
                    .map(|g| g.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )
        }
    }
}

/// The `n`-th infinitesimal neighborhood of the closed point: `A / m^(n+1)`.
#[derive(Debug, Clone)]
pub struct InfinitesimalNeighborhood {
    pub order: usize,
    pub ideal: IdealInA,
    pub colength: usize,
}

fn ideal_gens(gens: &[Polynomial]) -> Vec<FreeModuleElement> {
    gens.iter()
        .map(|g| FreeModuleElement::new(vec![g.clone()]))
        .collect()
}

fn order() -> ModuleOrder {
    ModuleOrder::top(MonomialOrder::DegRevLex)
}

/// Builds `k[vars]/J` and checks it is Artinian and local at the origin.
pub fn make_algebra(field: Field, vars: Vec<String>, j_generators: Vec<Polynomial>) -> Result<ArtinAlgebra> {
    ArtinAlgebra::new(field, vars, j_generators)
}

impl ArtinAlgebra {
    pub fn new(field: Field, vars: Vec<String>, j_generators: Vec<Polynomial>) -> Result<Self> {
        let ring = PolyRing::new(field, vars, MonomialOrder::DegRevLex);
        let gens: Vec<Polynomial> = j_generators
            .into_iter()
            .map(|g| g.embed(&ring, &(0..ring.nvars()).collect::<Vec<_>>()))
            .collect();
        Self::from_ring(ring, gens, None)
    }

    /// For a base that is not Artinian: replaces `J` by `J + m^(order+1)`,
    /// which has the same neighborhoods of order `<= order`. Verdicts over such
    /// an algebra are never definitive.
    pub fn truncation(field: Field, vars: Vec<String>, j_generators: Vec<Polynomial>, order: usize) -> Result<Self> {
        let ring = PolyRing::new(field, vars, MonomialOrder::DegRevLex);
        let mut gens: Vec<Polynomial> = j_generators
            .into_iter()
            .map(|g| g.embed(&ring, &(0..ring.nvars()).collect::<Vec<_>>()))
            .collect();
        check_local_generators(&gens)?;
        gens.extend(
            Monomial::all_of_degree(ring.nvars(), order as u32 + 1)
                .into_iter()
                .map(|m| Polynomial::monomial(&ring, m, field.one())),
        );
        Self::from_ring(ring, gens, Some(order))
    }

    fn from_ring(ring: Arc<PolyRing>, gens: Vec<Polynomial>, truncated_at: Option<usize>) -> Result<Self> {
        check_local_generators(&gens)?;
        let gb = buchberger(&ring, 1, &ideal_gens(&gens), order())?;
        let standard_basis: Vec<Monomial> = match standard_monomials(&gb) {
            Ok(s) => s.into_iter().map(|(_, m)| m).collect(),
            Err(Error::InfiniteDimensional) => return Err(Error::NotArtinian),
            Err(e) => return Err(e),
        };
        let length = standard_basis.len();
        if length == 0 {
            return Err(Error::NotLocalAtOrigin("defining ideal is the unit ideal".into()));
        }
        let n = ring.nvars();
        let one = ring.field.one();
        let nil_index = (1..=length)
            .find(|&d| {
                Monomial::all_of_degree(n, d as u32)
                    .into_iter()
                    .all(|m| gb.reduce_poly(&Polynomial::monomial(&ring, m, one.clone())).is_zero())
            })
            .ok_or_else(|| {
                Error::NotLocalAtOrigin("quotient has points away from the origin".into())
            })?;
        Ok(ArtinAlgebra {
            ring,
            generators: gens,
            gb,
            standard_basis,
            length,
            nil_index,
            truncated_at,
        })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn variables(&self) -> &[String] {
        &self.ring.vars
    }

    /// Generators of `J` as supplied (plus the truncating power, if any).
    pub fn defining_generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn defining_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn standard_basis(&self) -> &[Monomial] {
        &self.standard_basis
    }

    /// `dim_k A`.
    pub fn length(&self) -> usize {
        self.length
    }

    /// Smallest `N` with `m^N = 0`.
    pub fn nil_index(&self) -> usize {
        self.nil_index
    }

    /// `Some(order)` when this algebra stands in for a non-Artinian base.
    pub fn truncated_at(&self) -> Option<usize> {
        self.truncated_at
    }

    pub fn is_definitive(&self) -> bool {
        self.truncated_at.is_none()
    }

    /// Normal form modulo `J`.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        self.gb.reduce_poly(f)
    }

    pub fn monomial(&self, m: Monomial) -> Polynomial {
        Polynomial::monomial(&self.ring, m, self.ring.field.one())
    }

    /// The ideal of `A` generated by `gens`.
    pub fn ideal(&self, gens: Vec<Polynomial>) -> Result<IdealInA> {
        let gens: Vec<Polynomial> = gens
            .into_iter()
            .map(|g| self.reduce(&g))
            .filter(|g| !g.is_zero())
            .collect();
        let mut all = self.generators.clone();
        all.extend(gens.iter().cloned());
        let gb = buchberger(&self.ring, 1, &ideal_gens(&all), order())?;
        if gb.contains_unit_in(0) {
            return Err(Error::UnitIdeal);
        }
        let colength = quotient_dim(&gb)?;
        Ok(IdealInA {
            generators: gens,
            colength,
            gb,
        })
    }

    pub fn zero_ideal(&self) -> IdealInA {
        self.ideal(Vec::new()).expect("J is proper")
    }

    pub fn maximal_ideal(&self) -> IdealInA {
        self.power_of_maximal(1)
    }

    /// `m^k`; generated by the degree-`k` monomials that survive modulo `J`.
    pub fn power_of_maximal(&self, k: usize) -> IdealInA {
        let gens = Monomial::all_of_degree(self.nvars(), k as u32)
            .into_iter()
            .map(|m| self.monomial(m))
            .collect();
        self.ideal(gens).expect("powers of m are proper for k >= 1")
    }

    pub fn infinitesimal_neighborhood(&self, n: usize) -> InfinitesimalNeighborhood {
        let ideal = self.power_of_maximal(n + 1);
        InfinitesimalNeighborhood {
            order: n,
            colength: ideal.colength,
            ideal,
        }
    }

    /// All ideals of `A` generated by monomials with colength exactly `c`.
    ///
    /// Such an ideal contains `m^c`, so it is `J + m^c + (S)` for a set `S` of
    /// monomials of degree `< c`. The search adds monomials one at a time from
    /// `J + m^c` and identifies ideals by the set of low-degree monomials they
    /// contain.
    pub fn enumerate_monomial_ideals(&self, c: usize) -> Vec<IdealInA> {
        if c == 0 || c > self.length {
            return Vec::new();
        }
        let candidates: Vec<Monomial> = Monomial::all_up_to_degree(self.nvars(), c as u32 - 1)
            .into_iter()
            .filter(|m| !m.is_one() && !self.reduce(&self.monomial(m.clone())).is_zero())
            .collect();
        let base: Vec<Polynomial> = Monomial::all_of_degree(self.nvars(), c as u32)
            .into_iter()
            .map(|m| self.monomial(m))
            .collect();

        let key_of = |ideal: &IdealInA| -> Vec<bool> {
            candidates
                .iter()
                .map(|m| ideal.contains(&self.monomial(m.clone())))
                .collect()
        };
        let build = |key: &[bool]| -> Option<IdealInA> {
            let mut gens = base.clone();
            gens.extend(
                candidates
                    .iter()
                    .zip(key)
                    .filter(|(_, k)| **k)
                    .map(|(m, _)| self.monomial(m.clone())),
            );
            self.ideal(gens).ok()
        };

        let start = self.ideal(base.clone()).expect("m^c is proper");
        let mut seen: HashSet<Vec<bool>> = HashSet::new();
        let mut found: BTreeSet<Vec<bool>> = BTreeSet::new();
        let mut stack = vec![key_of(&start)];
        seen.insert(stack[0].clone());
        while let Some(key) = stack.pop() {
            let Some(ideal) = build(&key) else { continue };
            if ideal.colength < c {
                continue;
            }
            if ideal.colength == c {
                found.insert(key);
                continue;
            }
            for (i, _) in key.iter().enumerate().filter(|(_, k)| !**k) {
                let mut gens = ideal.generators.clone();
                gens.push(self.monomial(candidates[i].clone()));
                let Ok(next) = self.ideal(gens) else { continue };
                if next.colength < c {
                    continue;
                }
                let nk = key_of(&next);
                if seen.insert(nk.clone()) {
                    stack.push(nk);
                }
            }
        }

        // present each ideal by its minimal monomial generators
        found
            .into_iter()
            .rev()
            .map(|key| {
                let members: Vec<Monomial> = candidates
                    .iter()
                    .zip(&key)
                    .filter(|(_, k)| **k)
                    .map(|(m, _)| m.clone())
                    .chain(
                        Monomial::all_of_degree(self.nvars(), c as u32)
                            .into_iter()
                            .filter(|m| !self.reduce(&self.monomial(m.clone())).is_zero()),
                    )
                    .collect();
                let minimal: Vec<Polynomial> = members
                    .iter()
                    .filter(|m| !members.iter().any(|d| d != *m && d.divides(m)))
                    .map(|m| self.monomial(m.clone()))
                    .collect();
                let ideal = self.ideal(minimal).expect("enumerated ideal is proper");
                debug_assert_eq!(ideal.colength, c);
                ideal
            })
            .collect()
    }

    /// A maximal chain `m^j = I_c ⊂ I_(c-1) ⊂ ... ⊂ I_1 = m`, listed from the
    /// largest colength down, each step dropping colength by exactly one.
    /// With `rng`, the monomial adjoined at each step is chosen at random.
    pub fn maximal_chain<R: Rng>(&self, j: usize, mut rng: Option<&mut R>) -> Vec<IdealInA> {
        let j = j.max(1);
        let mut current = self.power_of_maximal(j);
        let mut chain = vec![current.clone()];
        let low: Vec<Monomial> = Monomial::all_up_to_degree(self.nvars(), j as u32 - 1)
            .into_iter()
            .filter(|m| !m.is_one())
            .collect();
        while current.colength > 1 {
            let outside: Vec<&Monomial> = low
                .iter()
                .filter(|m| !current.contains(&self.monomial((*m).clone())))
                .collect();
            let top = outside.iter().map(|m| m.degree()).max().expect("colength > 1");
            let socle: Vec<&Monomial> = outside.into_iter().filter(|m| m.degree() == top).collect();
            let pick = match rng.as_deref_mut() {
                Some(r) => socle[r.gen_range(0..socle.len())],
                None => socle[0],
            };
            let mut gens = current.generators.clone();
            gens.push(self.monomial(pick.clone()));
            current = self.ideal(gens).expect("proper");
            chain.push(current.clone());
        }
        chain
    }
}

fn check_local_generators(gens: &[Polynomial]) -> Result<()> {
    for g in gens {
        if !g.constant_term().is_zero() {
            return Err(Error::NotLocalAtOrigin(format!(
                "generator {g} has a nonzero constant term"
            )));
        }
    }
    Ok(())
}

/// `dim_k A/I`.
pub fn colength(_a: &ArtinAlgebra, i: &IdealInA) -> usize {
    i.colength
}
