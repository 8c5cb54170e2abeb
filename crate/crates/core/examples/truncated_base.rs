//! A base that is not Artinian: the node `y*z = 0`. Only the neighborhoods
//! up to a chosen order are examined, so the best possible answer is
//! "flat up to order N".

use std::sync::Arc;

use flatlab::artin::ArtinAlgebra;
use flatlab::criterion::{flat_verdict, Mode};
use flatlab::fiber::ModulePresentation;
use flatlab::monomial::MonomialOrder;
use flatlab::poly::{PolyRing, Polynomial};
use flatlab::scalar::Field;

fn main() -> flatlab::error::Result<()> {
    let vars = vec!["y".to_string(), "z".to_string()];
    let ring = PolyRing::new(Field::Rational, vars.clone(), MonomialOrder::DegRevLex);
    let (y, z) = (Polynomial::var(&ring, 0), Polynomial::var(&ring, 1));
    assert!(ArtinAlgebra::new(Field::Rational, vars.clone(), vec![&y * &z]).is_err());

    let a = Arc::new(ArtinAlgebra::truncation(Field::Rational, vars, vec![&y * &z], 3)?);
    let mode = Mode::Truncated { max_order: 3 };
    for (name, m) in [
        ("A", ModulePresentation::free(a.clone(), 1)),
        ("A/(y)", ModulePresentation::cyclic(a.clone(), vec![y.clone()])?),
    ] {
        let v = flat_verdict(&m, mode)?;
        let fibers: Vec<usize> = v.profile().unwrap().rows.iter().map(|r| r.fiber_dim).collect();
        println!("{name}: {:?} fibers {fibers:?}", v.status);
    }
    println!("powers-only mode: {}", flat_verdict(&ModulePresentation::free(a, 1), Mode::PowersOnly).unwrap_err());
    Ok(())
}
