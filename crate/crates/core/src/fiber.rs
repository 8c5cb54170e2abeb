//! Finitely generated modules over an Artinian algebra, given by
//! presentations, and the dimensions the flatness tests are built from:
//! fibers `M ⊗ A/I`, `Tor_1(A/I, M)` and the kernel of `I ⊗ M -> M`.

use std::collections::HashMap;
use std::sync::Arc;

use crate::artin::{ArtinAlgebra, IdealInA};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, quotient_dim, standard_monomials, syzygies_mod, FreeModuleElement, ModuleOrder};
use crate::linalg::{RowEchelon, SparseRow};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;

/// `M = coker(A^q -> A^p)`; each relation is a column of length `p`.
#[derive(Debug, Clone)]
pub struct ModulePresentation {
    algebra: Arc<ArtinAlgebra>,
    rank: usize,
    relations: Vec<FreeModuleElement>,
}

/// `dim_k (M ⊗ A/I)` for one ideal.
#[derive(Debug, Clone)]
pub struct FiberDatum {
    pub ideal: IdealInA,
    pub fiber_dim: usize,
}

fn top() -> ModuleOrder {
    ModuleOrder::top(MonomialOrder::DegRevLex)
}

impl ModulePresentation {
    pub fn new(algebra: Arc<ArtinAlgebra>, rank: usize, relations: Vec<FreeModuleElement>) -> Result<Self> {
        let ring = algebra.ring().clone();
        let mut reduced = Vec::with_capacity(relations.len());
        for col in relations {
            if col.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    found: col.rank(),
                });
            }
            let comps = col
                .components
                .iter()
                .map(|f| {
                    let f = f.embed(&ring, &(0..ring.nvars()).collect::<Vec<_>>());
                    algebra.reduce(&f)
                })
                .collect();
            reduced.push(FreeModuleElement::new(comps));
        }
        Ok(ModulePresentation {
            algebra,
            rank,
            relations: reduced,
        })
    }

    /// `A^r`.
    pub fn free(algebra: Arc<ArtinAlgebra>, rank: usize) -> Self {
        ModulePresentation {
            algebra,
            rank,
            relations: Vec::new(),
        }
    }

    /// The cyclic module `A/(gens)`.
    pub fn cyclic(algebra: Arc<ArtinAlgebra>, gens: Vec<Polynomial>) -> Result<Self> {
        let rels = gens
            .into_iter()
            .map(|g| FreeModuleElement::new(vec![g]))
            .collect();
        Self::new(algebra, 1, rels)
    }

    pub fn algebra(&self) -> &Arc<ArtinAlgebra> {
        &self.algebra
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn relations(&self) -> &[FreeModuleElement] {
        &self.relations
    }

    /// Submodule generators of `relations + (J + I) e_i` inside `k[y]^p`.
    fn lifted_relations(&self, ideal: &IdealInA) -> Vec<FreeModuleElement> {
        let ring = self.algebra.ring();
        let mut gens = self.relations.clone();
        let ideal_gens = ideal.preimage_basis().generators();
        for i in 0..self.rank {
            for g in &ideal_gens {
                gens.push(FreeModuleElement::basis_multiple(
                    ring,
                    self.rank,
                    i,
                    g.components[0].clone(),
                ));
            }
        }
        gens
    }
}

/// `dim_k (M ⊗_A A/I)`, by counting standard monomials of
/// `relations + J e_i + I e_i` in `k[y]^p`.
pub fn fiber_dim(m: &ModulePresentation, ideal: &IdealInA) -> usize {
    if m.rank == 0 {
        return 0;
    }
    let gens = m.lifted_relations(ideal);
    let gb = buchberger(m.algebra.ring(), m.rank, &gens, top()).expect("ranks checked at construction");
    quotient_dim(&gb).expect("quotients of an Artinian algebra are finite")
}

/// Same value as [`fiber_dim`], computed without Gröbner bases.
///
/// Works in `V = k[y]^p / m^D k[y]^p` with `D` the nilpotency index (so
/// `m^D ⊆ J`), whose basis is all `(i, monomial)` with degree `< D`. The
/// submodule image is spanned by the truncated products of monomials with the
/// relation columns and the generators of `J` and `I`; the answer is
/// `dim V - rank`.
pub fn brute_force_fiber_dim(m: &ModulePresentation, ideal: &IdealInA) -> usize {
    if m.rank == 0 {
        return 0;
    }
    let alg = &m.algebra;
    let bound = alg.nil_index() as u32;
    let monos = Monomial::all_up_to_degree(alg.nvars(), bound - 1);
    let index: HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(k, u)| (u, k)).collect();
    let width = monos.len();

    let mut columns: Vec<FreeModuleElement> = m.relations.clone();
    for i in 0..m.rank {
        for g in alg.defining_generators().iter().chain(&ideal.generators) {
            columns.push(FreeModuleElement::basis_multiple(alg.ring(), m.rank, i, g.clone()));
        }
    }

    let mut ech = RowEchelon::new(alg.field());
    for col in &columns {
        for u in &monos {
            let mut row: SparseRow = Vec::new();
            for (i, f) in col.components.iter().enumerate() {
                for (t, c) in f.terms() {
                    let prod = t.mul(u);
                    if prod.degree() < bound {
                        row.push((i * width + index[&prod], c.clone()));
                    }
                }
            }
            if !row.is_empty() {
                ech.insert(&row);
            }
        }
    }
    m.rank * width - ech.rank()
}

/// `dim_k (M ⊗ k)`, the minimal number of generators.
pub fn minimal_generator_count(m: &ModulePresentation) -> usize {
    fiber_dim(m, &m.algebra.maximal_ideal())
}

/// Coordinates of polynomials in the standard-monomial basis of `A/I`.
struct QuotientCoords<'a> {
    ideal: &'a IdealInA,
    index: HashMap<Monomial, usize>,
}

impl<'a> QuotientCoords<'a> {
    fn new(ideal: &'a IdealInA) -> Self {
        let basis = standard_monomials(ideal.preimage_basis()).expect("finite colength");
        let index = basis.into_iter().enumerate().map(|(k, (_, u))| (u, k)).collect();
        QuotientCoords { ideal, index }
    }

    fn dim(&self) -> usize {
        self.index.len()
    }

    fn basis(&self) -> Vec<&Monomial> {
        let mut b: Vec<(&Monomial, usize)> = self.index.iter().map(|(u, k)| (u, *k)).collect();
        b.sort_by_key(|x| x.1);
        b.into_iter().map(|x| x.0).collect()
    }

    /// Appends the coordinates of `f` (reduced modulo `J + I`) at `offset`.
    fn push(&self, f: &Polynomial, offset: usize, row: &mut SparseRow) {
        let nf = self.ideal.preimage_basis().reduce_poly(f);
        for (u, c) in nf.terms() {
            row.push((offset + self.index[u], c.clone()));
        }
    }
}

/// Rank of the k-linear map `(A/I)^cols.len() -> (A/I)^target_rank` given by
/// the columns, expanded on the standard-monomial basis.
fn expanded_rank(coords: &QuotientCoords<'_>, columns: &[FreeModuleElement], field: crate::scalar::Field) -> usize {
    let c = coords.dim();
    let mut ech = RowEchelon::new(field);
    for col in columns {
        for b in coords.basis() {
            let mut row = Vec::new();
            for (i, f) in col.components.iter().enumerate() {
                if f.is_zero() {
                    continue;
                }
                let shifted = f.mul_term(b, &field.one());
                coords.push(&shifted, i * c, &mut row);
            }
            if !row.is_empty() {
                ech.insert(&row);
            }
        }
    }
    ech.rank()
}

/// Second syzygies: generators of the kernel of `A^q -> A^p` over `A`.
pub fn relation_syzygies(m: &ModulePresentation) -> Vec<FreeModuleElement> {
    if m.relations.is_empty() {
        return Vec::new();
    }
    let alg = &m.algebra;
    let syz = syzygies_mod(alg.ring(), m.rank, &m.relations, alg.defining_basis_polys().as_slice(), top())
        .expect("ranks checked at construction");
    syz.into_iter()
        .map(|s| FreeModuleElement::new(s.components.iter().map(|f| alg.reduce(f)).collect()))
        .filter(|s| !s.is_zero())
        .collect()
}

/// `dim_k Tor_1^A(A/I, M)`, as the homology at `F_1` of
/// `F_2 -> F_1 -> F_0` tensored with `A/I`.
pub fn tor1_dim(m: &ModulePresentation, ideal: &IdealInA) -> usize {
    let q = m.relations.len();
    if q == 0 {
        return 0;
    }
    let coords = QuotientCoords::new(ideal);
    let field = m.algebra.field();
    let rank_phi = expanded_rank(&coords, &m.relations, field);
    let psi = relation_syzygies(m);
    let rank_psi = expanded_rank(&coords, &psi, field);
    q * coords.dim() - rank_phi - rank_psi
}

/// Both computations of `dim ker(I ⊗ M -> M)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MilnePaths {
    /// Through `Tor_1(A/I, M)`.
    pub via_tor: usize,
    /// As `dim(I ⊗ M) - dim(IM)`.
    pub via_tensor: usize,
}

/// Presentation of `I ⊗_A M` on `A^(r p)`, where `r` counts the generators of `I`.
pub fn ideal_tensor_module(m: &ModulePresentation, ideal: &IdealInA) -> ModulePresentation {
    let alg = &m.algebra;
    let ring = alg.ring();
    let r = ideal.generators.len();
    let p = m.rank;
    let cols: Vec<FreeModuleElement> = ideal
        .generators
        .iter()
        .map(|g| FreeModuleElement::new(vec![g.clone()]))
        .collect();
    let syz = syzygies_mod(ring, 1, &cols, alg.defining_basis_polys().as_slice(), top())
        .expect("rank-1 columns");
    let mut rels = Vec::new();
    for s in &syz {
        for i in 0..p {
            let mut v = FreeModuleElement::zero(ring, r * p);
            for (a, f) in s.components.iter().enumerate() {
                v.components[a * p + i] = f.clone();
            }
            rels.push(v);
        }
    }
    for a in 0..r {
        for col in &m.relations {
            let mut v = FreeModuleElement::zero(ring, r * p);
            for (i, f) in col.components.iter().enumerate() {
                v.components[a * p + i] = f.clone();
            }
            rels.push(v);
        }
    }
    ModulePresentation::new(alg.clone(), r * p, rels).expect("consistent ranks")
}

pub fn milne_paths(m: &ModulePresentation, ideal: &IdealInA) -> MilnePaths {
    let via_tor = tor1_dim(m, ideal);
    let zero = m.algebra.zero_ideal();
    let tensor = ideal_tensor_module(m, ideal);
    let dim_tensor = fiber_dim(&tensor, &zero);
    let dim_im = fiber_dim(m, &zero) - fiber_dim(m, ideal);
    MilnePaths {
        via_tor,
        via_tensor: dim_tensor - dim_im,
    }
}

/// `None` when `I ⊗ M -> M` is injective, otherwise the kernel dimension.
/// Errors if the two independent computations disagree.
pub fn milne_injectivity_witness(m: &ModulePresentation, ideal: &IdealInA) -> Result<Option<usize>> {
    let paths = milne_paths(m, ideal);
    if paths.via_tor != paths.via_tensor {
        return Err(Error::Disagreement(format!(
            "kernel of I ⊗ M -> M: {} via Tor, {} via tensor presentation",
            paths.via_tor, paths.via_tensor
        )));
    }
    Ok((paths.via_tor > 0).then_some(paths.via_tor))
}

impl ArtinAlgebra {
    /// Reduced Gröbner basis of `J` as plain polynomials.
    pub fn defining_basis_polys(&self) -> Vec<Polynomial> {
        self.defining_basis()
            .generators()
            .into_iter()
            .map(|g| g.components.into_iter().next().unwrap())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artin::make_algebra;
    use crate::poly::PolyRing;
    use crate::scalar::Field;

    fn truncated_line(k: u32) -> Arc<ArtinAlgebra> {
        let r = PolyRing::new(Field::Rational, vec!["y".into()], MonomialOrder::DegRevLex);
        Arc::new(make_algebra(Field::Rational, vec!["y".into()], vec![Polynomial::var(&r, 0).pow(k)]).unwrap())
    }

    fn fat_point() -> Arc<ArtinAlgebra> {
        let vars = vec!["y1".to_string(), "y2".to_string()];
        let r = PolyRing::new(Field::Rational, vars.clone(), MonomialOrder::DegRevLex);
        let (a, b) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        Arc::new(make_algebra(Field::Rational, vars, vec![a.pow(2), &a * &b, b.pow(2)]).unwrap())
    }

    fn y(a: &ArtinAlgebra) -> Polynomial {
        Polynomial::var(a.ring(), 0)
    }

    #[test]
    fn fiber_dims_of_fixtures() {
        let a = truncated_line(2);
        let k = ModulePresentation::cyclic(a.clone(), vec![y(&a)]).unwrap();
        assert_eq!(fiber_dim(&k, &a.maximal_ideal()), 1);
        assert_eq!(brute_force_fiber_dim(&k, &a.maximal_ideal()), 1);

        let a = truncated_line(3);
        let b = ModulePresentation::cyclic(a.clone(), vec![y(&a).pow(2)]).unwrap();
        assert_eq!(fiber_dim(&b, &a.zero_ideal()), 2);
        assert_eq!(brute_force_fiber_dim(&b, &a.zero_ideal()), 2);

        let free = ModulePresentation::free(a.clone(), 1);
        let i = a.ideal(vec![y(&a).pow(2)]).unwrap();
        assert_eq!(fiber_dim(&free, &i), 2);
        assert_eq!(brute_force_fiber_dim(&free, &i), 2);
    }

    #[test]
    fn brute_force_on_fat_point() {
        let a = fat_point();
        let m = ModulePresentation::cyclic(a.clone(), vec![y(&a)]).unwrap();
        assert_eq!(brute_force_fiber_dim(&m, &a.power_of_maximal(2)), 2);
        assert_eq!(fiber_dim(&m, &a.power_of_maximal(2)), 2);
        let zero = ModulePresentation::free(a.clone(), 0);
        assert_eq!(brute_force_fiber_dim(&zero, &a.maximal_ideal()), 0);
        assert_eq!(fiber_dim(&zero, &a.maximal_ideal()), 0);
    }

    #[test]
    fn generator_counts() {
        let a = truncated_line(3);
        let b = ModulePresentation::cyclic(a.clone(), vec![y(&a).pow(2)]).unwrap();
        assert_eq!(minimal_generator_count(&b), 1);
        assert_eq!(minimal_generator_count(&ModulePresentation::free(a.clone(), 4)), 4);
        assert_eq!(minimal_generator_count(&ModulePresentation::free(a.clone(), 0)), 0);
        // a unit relation kills the generator
        let dead = ModulePresentation::cyclic(a.clone(), vec![&y(&a) + &Polynomial::one(a.ring())]).unwrap();
        assert_eq!(minimal_generator_count(&dead), 0);
    }

    #[test]
    fn tor_of_fixtures() {
        let a = truncated_line(2);
        let k = ModulePresentation::cyclic(a.clone(), vec![y(&a)]).unwrap();
        assert_eq!(tor1_dim(&k, &a.maximal_ideal()), 1);

        let a3 = truncated_line(3);
        let b = ModulePresentation::cyclic(a3.clone(), vec![y(&a3).pow(2)]).unwrap();
        assert_eq!(tor1_dim(&b, &a3.maximal_ideal()), 1);

        let free = ModulePresentation::free(a3.clone(), 2);
        for i in [a3.maximal_ideal(), a3.power_of_maximal(2), a3.zero_ideal()] {
            assert_eq!(tor1_dim(&free, &i), 0);
        }
    }

    #[test]
    fn milne_kernel_both_paths() {
        let a = truncated_line(2);
        let k = ModulePresentation::cyclic(a.clone(), vec![y(&a)]).unwrap();
        assert_eq!(milne_injectivity_witness(&k, &a.maximal_ideal()).unwrap(), Some(1));

        let a3 = truncated_line(3);
        let b = ModulePresentation::cyclic(a3.clone(), vec![y(&a3).pow(2)]).unwrap();
        let i = a3.ideal(vec![y(&a3).pow(2)]).unwrap();
        let paths = milne_paths(&b, &i);
        assert_eq!(paths, MilnePaths { via_tor: 1, via_tensor: 1 });

        let free = ModulePresentation::free(a3.clone(), 3);
        assert_eq!(milne_injectivity_witness(&free, &i).unwrap(), None);
        assert_eq!(milne_injectivity_witness(&free, &a3.zero_ideal()).unwrap(), None);
    }
}
