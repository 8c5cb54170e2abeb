//! `P^1` over the dual numbers: the free module and `S/(e*x0)`.
//!
//! The free module restricts to `m + 1` on both neighborhoods. For
//! `S/(e*x0)` the Hilbert polynomial over the first neighborhood is `m + 2`,
//! so varpi drops from `m + 1` to `(m + 2)/2` and the family is not flat.

use std::sync::Arc;

use flatlab::artin::make_algebra;
use flatlab::graded::{brute_force_piece_dim, hilbert_table, projective_flat_verdict, GradedModule};
use flatlab::groebner::FreeModuleElement;
use flatlab::monomial::MonomialOrder;
use flatlab::poly::{PolyRing, Polynomial};
use flatlab::report::WitnessEntry;
use flatlab::report::rationals;
use flatlab::scalar::Field;

fn show(name: &str, g: &GradedModule) -> flatlab::error::Result<()> {
    println!("{name}");
    for n in 0..2 {
        let t = hilbert_table(g, n, Some((0, 6)))?;
        let brute: Vec<usize> = (0..=6).map(|m| brute_force_piece_dim(g, n, m)).collect();
        assert_eq!(brute, t.values);
        println!(
            "  n = {n}: h = {:?}, polynomial [{}] from m = {}",
            t.values,
            rationals(t.polynomial.as_deref().unwrap()).join(", "),
            t.threshold
        );
    }
    let v = projective_flat_verdict(g, None)?;
    println!("  verdict {}, witness {:?}", v.status.label(), v.witness.as_ref().map(WitnessEntry::from));
    Ok(())
}

fn main() -> flatlab::error::Result<()> {
    let r = PolyRing::new(Field::Rational, vec!["e".into()], MonomialOrder::DegRevLex);
    let base = Arc::new(make_algebra(Field::Rational, vec!["e".into()], vec![Polynomial::var(&r, 0).pow(2)])?);
    let xs = vec!["x0".to_string(), "x1".to_string()];

    show("O_P1", &GradedModule::free(base.clone(), xs.clone(), vec![0])?)?;

    let ring = GradedModule::ring_for(&base, &xs);
    let rel = &Polynomial::var(&ring, 2) * &Polynomial::var(&ring, 0);
    show(
        "S/(e*x0)",
        &GradedModule::new(base, xs, vec![0], vec![FreeModuleElement::new(vec![rel])])?,
    )
}
