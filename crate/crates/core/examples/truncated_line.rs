//! `B = k[y]/(y^2)` over `A = k[y]/(y^3)`: varpi is 1, 1, then 2/3, and
//! `Tor_1(k, B)` is one-dimensional.

use std::sync::Arc;

use flatlab::artin::make_algebra;
use flatlab::criterion::cross_validate;
use flatlab::fiber::ModulePresentation;
use flatlab::monomial::MonomialOrder;
use flatlab::poly::{PolyRing, Polynomial};
use flatlab::report::WitnessEntry;
use flatlab::scalar::Field;

fn main() -> flatlab::error::Result<()> {
    let ring = PolyRing::new(Field::Rational, vec!["y".into()], MonomialOrder::DegRevLex);
    let y = Polynomial::var(&ring, 0);
    let a = Arc::new(make_algebra(Field::Rational, vec!["y".into()], vec![y.pow(3)])?);
    let b = ModulePresentation::cyclic(a, vec![y.pow(2)])?;

    let cv = cross_validate(&b)?;
    for r in &cv.verdict.profile().unwrap().rows {
        println!("varpi({}) = {}", r.order, r.varpi);
    }
    println!("verdict {}, witness {:?}", cv.verdict.status.label(), cv.verdict.witness.as_ref().map(WitnessEntry::from));
    println!("Tor_1(k, B) = {}, dim B = {}, length * generators = {}", cv.tor1, cv.total_dim, cv.free_dim);
    Ok(())
}
