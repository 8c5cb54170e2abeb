//! Buchberger's algorithm for submodules of free modules `k[v]^p`, with
//! normal forms, standard monomials and syzygies.
//!
//! Ideals are the rank-1 case. Module terms are compared term-over-position:
//! monomials first, and on a tie the lower component index is larger. The
//! syzygy computation additionally uses an elimination variant in which every
//! term in the first `k` components dominates every term in the rest.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{PolyRing, Polynomial};
use crate::scalar::Scalar;

/// An element of the free module `R^p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeModuleElement {
    pub components: Vec<Polynomial>,
}

impl FreeModuleElement {
    pub fn new(components: Vec<Polynomial>) -> Self {
        FreeModuleElement { components }
    }

    pub fn zero(ring: &Arc<PolyRing>, rank: usize) -> Self {
        FreeModuleElement {
            components: vec![Polynomial::zero(ring); rank],
        }
    }

    /// `f * e_i`
    pub fn basis_multiple(ring: &Arc<PolyRing>, rank: usize, index: usize, f: Polynomial) -> Self {
        let mut v = Self::zero(ring, rank);
        v.components[index] = f;
        v
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }
}

/// Term-over-position module order, optionally eliminating the first
/// `elimination` components.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModuleOrder {
    pub base: MonomialOrder,
    pub elimination: Option<usize>,
}

impl ModuleOrder {
    pub fn top(base: MonomialOrder) -> Self {
        ModuleOrder {
            base,
            elimination: None,
        }
    }

    pub fn compare(&self, a: (&Monomial, usize), b: (&Monomial, usize)) -> Ordering {
        if let Some(k) = self.elimination {
            let ord = (a.1 < k).cmp(&(b.1 < k));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        self.base
            .compare(a.0, b.0)
            .then_with(|| b.1.cmp(&a.1))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Term {
    pub mon: Monomial,
    pub comp: usize,
    pub coeff: Scalar,
}

/// Internal flat representation: terms sorted descending in the module order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Vector {
    pub terms: Vec<Term>,
}

impl Vector {
    fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    fn from_element(v: &FreeModuleElement, ord: ModuleOrder) -> Vector {
        let mut terms: Vec<Term> = v
            .components
            .iter()
            .enumerate()
            .flat_map(|(comp, p)| {
                p.terms().iter().map(move |(m, c)| Term {
                    mon: m.clone(),
                    comp,
                    coeff: c.clone(),
                })
            })
            .collect();
        terms.sort_by(|a, b| ord.compare((&b.mon, b.comp), (&a.mon, a.comp)));
        Vector { terms }
    }

    fn to_element(&self, ring: &Arc<PolyRing>, rank: usize) -> FreeModuleElement {
        let mut buckets: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            buckets[t.comp].push((t.mon.clone(), t.coeff.clone()));
        }
        FreeModuleElement {
            components: buckets
                .into_iter()
                .map(|b| Polynomial::from_terms(ring, b))
                .collect(),
        }
    }

    fn make_monic(&mut self) {
        if let Some(lc) = self.lead().map(|t| t.coeff.clone()) {
            if !lc.is_one() {
                let inv = lc.inv().expect("nonzero leading coefficient");
                for t in &mut self.terms {
                    t.coeff = t.coeff.mul(&inv);
                }
            }
        }
    }
}

/// `a - c * m * b`, all sorted descending.
fn sub_scaled(a: &[Term], c: &Scalar, m: &Monomial, b: &[Term], ord: ModuleOrder) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut shifted = b.iter().map(|t| Term {
        mon: t.mon.mul(m),
        comp: t.comp,
        coeff: t.coeff.mul(c),
    });
    let mut next_b = shifted.next();
    while i < a.len() || next_b.is_some() {
        let cmp = match (a.get(i), next_b.as_ref()) {
            (Some(x), Some(y)) => ord.compare((&x.mon, x.comp), (&y.mon, y.comp)),
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (None, None) => unreachable!(),
        };
        match cmp {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let y = next_b.take().unwrap();
                out.push(Term {
                    coeff: y.coeff.neg(),
                    ..y
                });
                next_b = shifted.next();
            }
            Ordering::Equal => {
                let y = next_b.take().unwrap();
                let coeff = a[i].coeff.sub(&y.coeff);
                if !coeff.is_zero() {
                    out.push(Term { coeff, ..y });
                }
                i += 1;
                next_b = shifted.next();
            }
        }
    }
    out
}

fn find_reducer<'a>(t: &Term, basis: &'a [Vector]) -> Option<&'a Vector> {
    basis.iter().find(|g| {
        let l = g.lead().expect("nonzero basis element");
        l.comp == t.comp && l.mon.divides(&t.mon)
    })
}

/// Full reduction of `v` by `basis` (whose elements are monic).
fn reduce(mut v: Vector, basis: &[Vector], ord: ModuleOrder) -> Vector {
    let mut rem: Vec<Term> = Vec::new();
    let mut work = std::mem::take(&mut v.terms);
    // `work` is consumed from the front; keep an offset to avoid shifting.
    let mut start = 0;
    while start < work.len() {
        let t = &work[start];
        match find_reducer(t, basis) {
            Some(g) => {
                let l = g.lead().unwrap();
                let q = l.mon.quotient_of(&t.mon).unwrap();
                let c = t.coeff.div(&l.coeff).unwrap();
                // g is monic at l, so the leading term cancels exactly
                work = sub_scaled(&work[start..], &c, &q, &g.terms, ord);
                start = 0;
            }
            None => {
                rem.push(t.clone());
                start += 1;
            }
        }
    }
    Vector { terms: rem }
}

/// A Gröbner basis of a submodule of `ring^rank`.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    rank: usize,
    order: ModuleOrder,
    elements: Vec<Vector>,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> ModuleOrder {
        self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn generators(&self) -> Vec<FreeModuleElement> {
        self.elements
            .iter()
            .map(|v| v.to_element(&self.ring, self.rank))
            .collect()
    }

    /// Leading `(component, monomial)` of each element.
    pub fn leading_terms(&self) -> Vec<(usize, Monomial)> {
        self.elements
            .iter()
            .map(|v| {
                let l = v.lead().unwrap();
                (l.comp, l.mon.clone())
            })
            .collect()
    }

    /// True when some element has a constant leading term in `comp`, i.e. the
    /// whole component `e_comp` lies in the submodule.
    pub fn contains_unit_in(&self, comp: usize) -> bool {
        self.elements.iter().any(|v| {
            let l = v.lead().unwrap();
            l.comp == comp && l.mon.is_one()
        })
    }

    /// Largest degree of a leading or trailing term over a variable range.
    pub fn max_partial_degree(&self, range: std::ops::Range<usize>) -> u32 {
        self.elements
            .iter()
            .flat_map(|v| v.terms.iter())
            .map(|t| t.mon.partial_degree(range.clone()))
            .max()
            .unwrap_or(0)
    }

    /// Normal form of a single polynomial, for rank-1 bases.
    pub fn reduce_poly(&self, f: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.rank, 1);
        let v = FreeModuleElement::new(vec![f.clone()]);
        let r = reduce(Vector::from_element(&v, self.order), &self.elements, self.order);
        r.to_element(&self.ring, 1).components.pop().unwrap()
    }

    pub(crate) fn reduce_vector(&self, v: &FreeModuleElement) -> Vector {
        reduce(Vector::from_element(v, self.order), &self.elements, self.order)
    }

    /// Is `(comp, m)` divisible by some leading term?
    pub fn is_leading_multiple(&self, comp: usize, m: &Monomial) -> bool {
        self.elements.iter().any(|v| {
            let l = v.lead().unwrap();
            l.comp == comp && l.mon.divides(m)
        })
    }
}

fn check_ranks(gens: &[FreeModuleElement], rank: usize, ring: &Arc<PolyRing>) -> Result<()> {
    for g in gens {
        if g.rank() != rank {
            return Err(Error::RankMismatch {
                expected: rank,
                found: g.rank(),
            });
        }
        for c in &g.components {
            if c.ring() != ring {
                return Err(Error::VariableMismatch);
            }
        }
    }
    Ok(())
}

/// Reduced Gröbner basis of the submodule of `ring^rank` generated by `gens`.
pub fn buchberger(
    ring: &Arc<PolyRing>,
    rank: usize,
    gens: &[FreeModuleElement],
    ord: ModuleOrder,
) -> Result<GroebnerBasis> {
    check_ranks(gens, rank, ring)?;
    let mut basis: Vec<Vector> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let push = |v: Vector, basis: &mut Vec<Vector>, pending: &mut HashSet<(usize, usize)>| {
        let comp = v.lead().unwrap().comp;
        let idx = basis.len();
        for (k, b) in basis.iter().enumerate() {
            if b.lead().unwrap().comp == comp {
                pending.insert((k, idx));
            }
        }
        basis.push(v);
    };

    for g in gens {
        let mut v = reduce(Vector::from_element(g, ord), &basis, ord);
        if !v.terms.is_empty() {
            v.make_monic();
            push(v, &mut basis, &mut pending);
        }
    }

    while !pending.is_empty() {
        // normal strategy: smallest lcm first; ties broken by index for determinism
        let &(i, j) = pending
            .iter()
            .min_by(|a, b| {
                let la = pair_lcm(&basis, **a);
                let lb = pair_lcm(&basis, **b);
                ord.compare((&la.0, la.1), (&lb.0, lb.1)).then_with(|| a.cmp(b))
            })
            .unwrap();
        pending.remove(&(i, j));
        let (lcm, comp) = pair_lcm(&basis, (i, j));
        let li = basis[i].lead().unwrap();
        let lj = basis[j].lead().unwrap();

        if rank == 1 && ord.elimination.is_none() && li.mon.is_coprime(&lj.mon) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            if k == i || k == j {
                return false;
            }
            let lk = basis[k].lead().unwrap();
            lk.comp == comp
                && lk.mon.divides(&lcm)
                && !pending.contains(&ordered(i, k))
                && !pending.contains(&ordered(j, k))
        });
        if chain {
            continue;
        }

        let qi = li.mon.quotient_of(&lcm).unwrap();
        let qj = lj.mon.quotient_of(&lcm).unwrap();
        let one = ring.field.one();
        let si = sub_scaled(&[], &one.neg(), &qi, &basis[i].terms, ord);
        let s = sub_scaled(&si, &one, &qj, &basis[j].terms, ord);
        let mut h = reduce(Vector { terms: s }, &basis, ord);
        if !h.terms.is_empty() {
            h.make_monic();
            push(h, &mut basis, &mut pending);
        }
    }

    Ok(GroebnerBasis {
        ring: ring.clone(),
        rank,
        order: ord,
        elements: interreduce(basis, ord),
        reduced: true,
    })
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn pair_lcm(basis: &[Vector], (i, j): (usize, usize)) -> (Monomial, usize) {
    let li = basis[i].lead().unwrap();
    let lj = basis[j].lead().unwrap();
    (li.mon.lcm(&lj.mon), li.comp)
}

fn interreduce(basis: Vec<Vector>, ord: ModuleOrder) -> Vec<Vector> {
    // drop elements whose leading term is divisible by another's
    let mut minimal: Vec<Vector> = Vec::new();
    for (i, v) in basis.iter().enumerate() {
        let l = v.lead().unwrap();
        let redundant = basis.iter().enumerate().any(|(k, w)| {
            if k == i {
                return false;
            }
            let lw = w.lead().unwrap();
            lw.comp == l.comp
                && lw.mon.divides(&l.mon)
                && (lw.mon != l.mon || k < i)
        });
        if !redundant {
            minimal.push(v.clone());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let head = minimal[i].terms[0].clone();
        let others: Vec<Vector> = minimal
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, v)| v.clone())
            .collect();
        let tail = reduce(
            Vector {
                terms: minimal[i].terms[1..].to_vec(),
            },
            &others,
            ord,
        );
        let mut terms = vec![head];
        terms.extend(tail.terms);
        let mut v = Vector { terms };
        v.make_monic();
        out.push(v);
    }
    out.sort_by(|a, b| {
        let (x, y) = (a.lead().unwrap(), b.lead().unwrap());
        ord.compare((&y.mon, y.comp), (&x.mon, x.comp))
    });
    out
}

/// Remainder of `v` on division by `gb`; `v - result` lies in the submodule.
pub fn normal_form(v: &FreeModuleElement, gb: &GroebnerBasis) -> Result<FreeModuleElement> {
    check_ranks(std::slice::from_ref(v), gb.rank, &gb.ring)?;
    Ok(gb.reduce_vector(v).to_element(&gb.ring, gb.rank))
}

/// The `(component, monomial)` pairs outside the leading-term module, grouped
/// by component and listed in ascending order. Their classes form a basis of
/// the quotient.
pub fn standard_monomials(gb: &GroebnerBasis) -> Result<Vec<(usize, Monomial)>> {
    let n = gb.ring.nvars();
    let leads = gb.leading_terms();
    let mut out = Vec::new();
    for comp in 0..gb.rank {
        let in_comp: Vec<&Monomial> = leads
            .iter()
            .filter(|(c, _)| *c == comp)
            .map(|(_, m)| m)
            .collect();
        if in_comp.iter().any(|m| m.is_one()) {
            continue;
        }
        let mut bounds = vec![u32::MAX; n];
        for m in &in_comp {
            if let Some(v) = m.pure_power_var() {
                bounds[v] = bounds[v].min(m.exps()[v]);
            }
        }
        if bounds.contains(&u32::MAX) {
            return Err(Error::InfiniteDimensional);
        }
        let mut found = Vec::new();
        let mut exps = vec![0u32; n];
        box_walk(&mut exps, 0, &bounds, &mut |e| {
            let m = Monomial::new(e.to_vec());
            if !in_comp.iter().any(|l| l.divides(&m)) {
                found.push(m);
            }
        });
        let base = gb.order.base;
        found.sort_by(|a, b| base.compare(a, b));
        out.extend(found.into_iter().map(|m| (comp, m)));
    }
    Ok(out)
}

fn box_walk(exps: &mut [u32], at: usize, bounds: &[u32], f: &mut impl FnMut(&[u32])) {
    if at == exps.len() {
        f(exps);
        return;
    }
    for e in 0..bounds[at] {
        exps[at] = e;
        box_walk(exps, at + 1, bounds, f);
    }
    exps[at] = 0;
}

/// Dimension of the quotient `ring^rank / submodule`.
pub fn quotient_dim(gb: &GroebnerBasis) -> Result<usize> {
    standard_monomials(gb).map(|s| s.len())
}

/// Generators of the module of relations among `columns` (all in `ring^rank`),
/// computed over the polynomial ring by elimination.
pub fn syzygy_basis(
    ring: &Arc<PolyRing>,
    rank: usize,
    columns: &[FreeModuleElement],
    ord: ModuleOrder,
) -> Result<Vec<FreeModuleElement>> {
    check_ranks(columns, rank, ring)?;
    let q = columns.len();
    let total = rank + q;
    let gens: Vec<FreeModuleElement> = columns
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let mut comps = c.components.clone();
            comps.extend((0..q).map(|k| {
                if k == j {
                    Polynomial::one(ring)
                } else {
                    Polynomial::zero(ring)
                }
            }));
            FreeModuleElement::new(comps)
        })
        .collect();
    let elim = ModuleOrder {
        base: ord.base,
        elimination: Some(rank),
    };
    let gb = buchberger(ring, total, &gens, elim)?;
    Ok(gb
        .elements
        .iter()
        .filter(|v| v.lead().unwrap().comp >= rank)
        .map(|v| {
            let full = v.to_element(ring, total);
            FreeModuleElement::new(full.components[rank..].to_vec())
        })
        .collect())
}

/// Syzygies of `columns` over the quotient `ring / J`: relations that hold
/// modulo `J` in every component. The `J * e_i` multiples are adjoined and
/// then projected away.
pub fn syzygies_mod(
    ring: &Arc<PolyRing>,
    rank: usize,
    columns: &[FreeModuleElement],
    ideal: &[Polynomial],
    ord: ModuleOrder,
) -> Result<Vec<FreeModuleElement>> {
    let q = columns.len();
    let mut all = columns.to_vec();
    for i in 0..rank {
        for g in ideal {
            all.push(FreeModuleElement::basis_multiple(ring, rank, i, g.clone()));
        }
    }
    let syz = syzygy_basis(ring, rank, &all, ord)?;
    Ok(syz
        .into_iter()
        .map(|s| FreeModuleElement::new(s.components[..q].to_vec()))
        .filter(|s| !s.is_zero())
        .collect())
}

/// Evaluates `sum_j coeffs[j] * columns[j]`.
pub fn combine(
    ring: &Arc<PolyRing>,
    rank: usize,
    columns: &[FreeModuleElement],
    coeffs: &FreeModuleElement,
) -> FreeModuleElement {
    let mut acc = FreeModuleElement::zero(ring, rank);
    for (col, c) in columns.iter().zip(&coeffs.components) {
        for (a, x) in acc.components.iter_mut().zip(&col.components) {
            *a = &*a + &(c * x);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn ring(n: usize) -> Arc<PolyRing> {
        let vars = if n == 1 {
            vec!["y".to_string()]
        } else {
            (1..=n).map(|i| format!("y{i}")).collect()
        };
        PolyRing::new(Field::Rational, vars, MonomialOrder::DegRevLex)
    }

    fn ideal(gens: Vec<Polynomial>) -> Vec<FreeModuleElement> {
        gens.into_iter()
            .map(|g| FreeModuleElement::new(vec![g]))
            .collect()
    }

    fn top() -> ModuleOrder {
        ModuleOrder::top(MonomialOrder::DegRevLex)
    }

    #[test]
    fn principal_ideal() {
        let r = ring(1);
        let y = Polynomial::var(&r, 0);
        let gb = buchberger(&r, 1, &ideal(vec![y.pow(2)]), top()).unwrap();
        assert_eq!(gb.generators(), ideal(vec![y.pow(2)]));
    }

    #[test]
    fn square_of_maximal_ideal_is_already_a_basis() {
        let r = ring(2);
        let (a, b) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let gens = vec![a.pow(2), &a * &b, b.pow(2)];
        let gb = buchberger(&r, 1, &ideal(gens.clone()), top()).unwrap();
        assert_eq!(gb.len(), 3);
        for g in &gens {
            assert!(gb.reduce_poly(g).is_zero());
        }
        let sm = standard_monomials(&gb).unwrap();
        assert_eq!(sm.len(), 3);
    }

    #[test]
    fn redundant_module_generator_drops() {
        let r = ring(1);
        let y = Polynomial::var(&r, 0);
        let z = Polynomial::zero(&r);
        let gens = vec![
            FreeModuleElement::new(vec![y.clone(), z.clone()]),
            FreeModuleElement::new(vec![z.clone(), y.clone()]),
            FreeModuleElement::new(vec![y.pow(2), y.pow(2)]),
        ];
        let gb = buchberger(&r, 2, &gens, top()).unwrap();
        assert_eq!(gb.generators(), gens[..2].to_vec());
        let nf = normal_form(&FreeModuleElement::new(vec![y.pow(2), y.clone()]), &gb).unwrap();
        assert!(nf.is_zero());
    }

    #[test]
    fn normal_forms_in_one_variable() {
        let r = ring(1);
        let y = Polynomial::var(&r, 0);
        let gb = buchberger(&r, 1, &ideal(vec![y.pow(2)]), top()).unwrap();
        assert!(gb.reduce_poly(&y.pow(3)).is_zero());
        assert_eq!(gb.reduce_poly(&(&y.pow(2) + &y)), y);
        let bad = FreeModuleElement::new(vec![y.clone(), y.clone()]);
        assert!(matches!(normal_form(&bad, &gb), Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn standard_monomials_and_infinite_quotients() {
        let r = ring(1);
        let y = Polynomial::var(&r, 0);
        for k in [2u32, 3] {
            let gb = buchberger(&r, 1, &ideal(vec![y.pow(k)]), top()).unwrap();
            assert_eq!(quotient_dim(&gb).unwrap(), k as usize);
        }
        let r2 = ring(2);
        let gb = buchberger(&r2, 1, &ideal(vec![Polynomial::var(&r2, 0)]), top()).unwrap();
        assert!(matches!(standard_monomials(&gb), Err(Error::InfiniteDimensional)));
    }

    #[test]
    fn syzygies_over_truncated_line() {
        let r = ring(1);
        let y = Polynomial::var(&r, 0);
        let col = FreeModuleElement::new(vec![y.pow(2)]);
        let syz = syzygies_mod(&r, 1, std::slice::from_ref(&col), &[y.pow(3)], top()).unwrap();
        assert_eq!(syz, vec![FreeModuleElement::new(vec![y.clone()])]);

        let syz = syzygies_mod(&r, 1, &[FreeModuleElement::new(vec![y.clone()])], &[y.pow(2)], top()).unwrap();
        assert_eq!(syz, vec![FreeModuleElement::new(vec![y.clone()])]);

        let one = Polynomial::one(&r);
        let z = Polynomial::zero(&r);
        let free = [
            FreeModuleElement::new(vec![one.clone(), z.clone()]),
            FreeModuleElement::new(vec![z, one]),
        ];
        assert!(syzygy_basis(&r, 2, &free, top()).unwrap().is_empty());
    }

    #[test]
    fn syzygies_vanish_when_substituted() {
        let r = ring(2);
        let (a, b) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let cols = ideal(vec![a.pow(2), &a * &b, b.pow(2), &a + &b.pow(3)]);
        let syz = syzygy_basis(&r, 1, &cols, top()).unwrap();
        assert!(!syz.is_empty());
        for s in &syz {
            assert!(combine(&r, 1, &cols, s).is_zero());
        }
    }

    #[test]
    fn input_order_does_not_matter() {
        let r = ring(3);
        let v: Vec<Polynomial> = (0..3).map(|i| Polynomial::var(&r, i)).collect();
        let gens = vec![
            &v[0].pow(2) - &v[1].pow(3),
            &v[0] * &v[1],
            v[1].pow(4),
            &v[2].pow(2) - &(&v[0] * &v[1]),
            &v[1] * &v[2],
        ];
        let base = buchberger(&r, 1, &ideal(gens.clone()), top()).unwrap().generators();
        let mut perm = gens.clone();
        for k in 0..gens.len() {
            perm.rotate_left(1);
            if k % 2 == 0 {
                perm.swap(0, 2);
            }
            let gb = buchberger(&r, 1, &ideal(perm.clone()), top()).unwrap();
            assert_eq!(gb.generators(), base);
        }
    }
}
