//! Seeded random algebras, presentations and ideals.
//!
//! Every random algebra contains a pure power of each variable, so it is
//! Artinian and local at the origin. A small share of relation entries are
//! units, which is what makes flat (free) instances appear.

use std::path::Path;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::artin::{ArtinAlgebra, IdealInA};
use crate::dsl::{GradedDecl, ModuleDecl, Problem, RingDecl};
use crate::error::Result;
use crate::fiber::ModulePresentation;
use crate::groebner::FreeModuleElement;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{PolyRing, Polynomial};
use crate::report::{digest, VERSION};
use crate::scalar::Field;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn coefficient<R: Rng>(rng: &mut R, field: Field) -> crate::scalar::Scalar {
    let mut v = 0;
    while v == 0 {
        v = rng.gen_range(-3i64..=3);
    }
    field.from_i64(v)
}

fn variables(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("y{i}")).collect()
}

/// Defining ideal generators: `y_i^(a_i)` plus a few random binomials
/// without constant term.
pub fn random_generators<R: Rng>(rng: &mut R, ring: &Arc<PolyRing>) -> Vec<Polynomial> {
    let n = ring.nvars();
    let mut gens: Vec<Polynomial> = (0..n)
        .map(|i| Polynomial::var(ring, i).pow(rng.gen_range(1..=4)))
        .collect();
    for _ in 0..rng.gen_range(0..=2) {
        let mut f = Polynomial::zero(ring);
        for _ in 0..rng.gen_range(1..=2) {
            let d = rng.gen_range(1..=3);
            let monos = Monomial::all_of_degree(n, d);
            let m = monos.choose(rng).expect("n > 0").clone();
            f = &f + &Polynomial::monomial(ring, m, coefficient(rng, ring.field));
        }
        if !f.is_zero() {
            gens.push(f);
        }
    }
    gens
}

/// A random local Artinian algebra in 1..=3 variables whose length lies in
/// `min_len..=max_len`.
pub fn random_algebra<R: Rng>(rng: &mut R, field: Field, min_len: usize, max_len: usize) -> ArtinAlgebra {
    loop {
        let n = rng.gen_range(1..=3);
        let ring = PolyRing::new(field, variables(n), MonomialOrder::DegRevLex);
        let gens = random_generators(rng, &ring);
        if let Ok(a) = ArtinAlgebra::new(field, ring.vars.clone(), gens) {
            if (min_len..=max_len).contains(&a.length()) {
                return a;
            }
        }
    }
}

/// A random element of `A`: a combination of standard monomials, the unit
/// monomial allowed only when `allow_unit`.
pub fn random_element<R: Rng>(rng: &mut R, alg: &ArtinAlgebra, allow_unit: bool) -> Polynomial {
    let ring = alg.ring();
    let basis: Vec<&Monomial> = alg
        .standard_basis()
        .iter()
        .filter(|m| allow_unit || !m.is_one())
        .collect();
    let mut f = Polynomial::zero(ring);
    if basis.is_empty() {
        return f;
    }
    for _ in 0..rng.gen_range(1..=2) {
        let m = (*basis.choose(rng).expect("nonempty")).clone();
        f = &f + &Polynomial::monomial(ring, m, coefficient(rng, ring.field));
    }
    f
}

/// Relation columns for a `p`-generator module with `q` relations.
pub fn random_columns<R: Rng>(rng: &mut R, alg: &ArtinAlgebra, p: usize, q: usize) -> Vec<Vec<Polynomial>> {
    let ring = alg.ring();
    (0..q)
        .map(|_| {
            (0..p)
                .map(|_| {
                    if rng.gen_bool(0.35) {
                        Polynomial::zero(ring)
                    } else {
                        let unit = rng.gen_bool(0.15);
                        random_element(rng, alg, unit)
                    }
                })
                .collect()
        })
        .collect()
}

pub fn random_presentation<R: Rng>(
    rng: &mut R,
    alg: Arc<ArtinAlgebra>,
    p: usize,
    q: usize,
) -> ModulePresentation {
    let cols = random_columns(rng, &alg, p, q);
    ModulePresentation::new(alg, p, cols.into_iter().map(FreeModuleElement::new).collect())
        .expect("columns have rank p")
}

/// A random proper ideal generated by combinations of standard monomials of
/// degree at least one. Usually not monomial.
pub fn random_ideal<R: Rng>(rng: &mut R, alg: &ArtinAlgebra) -> IdealInA {
    let count = rng.gen_range(1..=2);
    let gens = (0..count).map(|_| random_element(rng, alg, false)).collect();
    alg.ideal(gens).expect("no unit among generators of positive degree")
}

/// A random problem: an affine module, and every fourth case also a graded
/// module over one or two x-variables.
pub fn random_problem<R: Rng>(rng: &mut R, index: usize) -> Problem {
    let field = if rng.gen_bool(0.8) {
        Field::Rational
    } else {
        Field::Prime(32003)
    };
    let alg = random_algebra(rng, field, 1, 12);
    let p = rng.gen_range(1..=3);
    let q = rng.gen_range(0..=4);
    let relations = random_columns(rng, &alg, p, q);
    let ring = alg.ring().clone();
    let graded = (index % 4 == 3).then(|| {
        let xvars: Vec<String> = (0..rng.gen_range(1..=2)).map(|i| format!("x{i}")).collect();
        let mut vars = xvars.clone();
        vars.extend(ring.vars.iter().cloned());
        let gr = PolyRing::new(field, vars, MonomialOrder::Block { split: xvars.len() });
        let emb: Vec<usize> = (0..ring.nvars()).map(|k| xvars.len() + k).collect();
        let relations = (0..rng.gen_range(0..=1))
            .map(|_| {
                let x = Polynomial::var(&gr, rng.gen_range(0..xvars.len()));
                let unit = rng.gen_bool(0.3);
                let c = random_element(rng, &alg, unit).embed(&gr, &emb);
                vec![&x * &c]
            })
            .collect();
        GradedDecl {
            name: "G".into(),
            xvars,
            ring: gr,
            degrees: vec![0],
            relations,
        }
    });
    Problem {
        field,
        ring: RingDecl {
            name: "A".into(),
            ring,
            ideal: alg.defining_generators().to_vec(),
        },
        module: Some(ModuleDecl {
            name: "M".into(),
            generators: p,
            relations,
        }),
        graded,
        mode: None,
        window: None,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ManifestEntry {
    pub file: String,
    pub input_digest: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Manifest {
    pub version: String,
    pub seed: u64,
    pub count: usize,
    pub files: Vec<ManifestEntry>,
}

/// Writes `count` problem files and `manifest.json` into `out`.
pub fn write_corpus(seed: u64, count: usize, out: &Path) -> Result<Manifest> {
    std::fs::create_dir_all(out)?;
    let mut rng = rng(seed);
    let mut files = Vec::with_capacity(count);
    for i in 0..count {
        let problem = random_problem(&mut rng, i);
        let text = format!("# generated with seed {seed}, case {i}\n{problem}");
        let file = format!("case-{i:04}.flat");
        std::fs::write(out.join(&file), &text)?;
        files.push(ManifestEntry {
            file,
            input_digest: digest(text.as_bytes()),
        });
    }
    let manifest = Manifest {
        version: VERSION.into(),
        seed,
        count,
        files,
    };
    std::fs::write(
        out.join("manifest.json"),
        serde_json::to_string_pretty(&manifest).expect("manifest serializes") + "\n",
    )?;
    Ok(manifest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_problem;
    use crate::fiber::{brute_force_fiber_dim, fiber_dim};

    #[test]
    fn seeded_generation_is_reproducible() {
        let a: Vec<String> = (0..6).map(|i| random_problem(&mut rng(7), i).to_string()).collect();
        let b: Vec<String> = (0..6).map(|i| random_problem(&mut rng(7), i).to_string()).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn generated_problems_round_trip_and_build() {
        let mut r = rng(1);
        for i in 0..20 {
            let p = random_problem(&mut r, i);
            let q = parse_problem(&p.to_string()).unwrap();
            assert_eq!(q, p);
            let inst = q.build().unwrap();
            assert!(inst.algebra.length() <= 12);
        }
    }

    #[test]
    fn non_monomial_ideals_match_oracle() {
        let mut r = rng(3);
        for _ in 0..30 {
            let alg = Arc::new(random_algebra(&mut r, Field::Rational, 2, 8));
            let m = random_presentation(&mut r, alg.clone(), 2, 2);
            let i = random_ideal(&mut r, &alg);
            assert!(i.colength >= 1);
            assert_eq!(fiber_dim(&m, &i), brute_force_fiber_dim(&m, &i));
        }
    }

    #[test]
    fn corpus_files_and_manifest() {
        let dir = tempfile::tempdir().unwrap();
        let m = write_corpus(5, 4, dir.path()).unwrap();
        assert_eq!(m.files.len(), 4);
        let text = std::fs::read_to_string(dir.path().join(&m.files[2].file)).unwrap();
        assert_eq!(digest(text.as_bytes()), m.files[2].input_digest);
        parse_problem(&text).unwrap();
        let manifest = std::fs::read_to_string(dir.path().join("manifest.json")).unwrap();
        assert!(manifest.contains("\"seed\": 5"));
    }
}
