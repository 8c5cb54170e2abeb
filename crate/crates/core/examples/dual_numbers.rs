//! A closed point inside the dual numbers: `M = k` over `A = k[y]/(y^2)`.
//!
//! The fiber over the reduced point has Hilbert polynomial 1, but over the
//! first neighborhood varpi drops to 1/2, so the inclusion is not flat. The
//! Milne test sees the same failure as a non-injective `(y) ⊗ M -> M`.

use std::sync::Arc;

use flatlab::artin::make_algebra;
use flatlab::criterion::{flat_verdict, Mode};
use flatlab::fiber::{milne_injectivity_witness, ModulePresentation};
use flatlab::monomial::MonomialOrder;
use flatlab::poly::{PolyRing, Polynomial};
use flatlab::scalar::Field;

fn main() -> flatlab::error::Result<()> {
    let ring = PolyRing::new(Field::Rational, vec!["y".into()], MonomialOrder::DegRevLex);
    let y = Polynomial::var(&ring, 0);
    let a = Arc::new(make_algebra(Field::Rational, vec!["y".into()], vec![y.pow(2)])?);
    let m = ModulePresentation::cyclic(a.clone(), vec![y.clone()])?;

    let verdict = flat_verdict(&m, Mode::PowersOnly)?;
    println!("n  colength  fiber  varpi");
    for r in &verdict.profile().unwrap().rows {
        println!("{}  {}         {}      {}", r.order, r.colength, r.fiber_dim, r.varpi);
    }
    println!("verdict: {}", verdict.status.label());

    let ideal = a.ideal(vec![y])?;
    match milne_injectivity_witness(&m, &ideal)? {
        Some(k) => println!("kernel of {} ⊗ M -> M has dimension {k}", ideal.display()),
        None => println!("{} ⊗ M -> M is injective", ideal.display()),
    }
    Ok(())
}
