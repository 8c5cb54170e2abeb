//! Monomial ideals of small colength in `k[y, z]/(y^3, z^3)`, and the fiber
//! dimensions of a module along a maximal chain of them.

use std::sync::Arc;

use rand_chacha::ChaCha8Rng;

use flatlab::artin::make_algebra;
use flatlab::criterion::cofiltration_check;
use flatlab::fiber::{fiber_dim, ModulePresentation};
use flatlab::monomial::MonomialOrder;
use flatlab::poly::{PolyRing, Polynomial};
use flatlab::scalar::Field;

fn main() -> flatlab::error::Result<()> {
    let vars = vec!["y".to_string(), "z".to_string()];
    let ring = PolyRing::new(Field::Rational, vars.clone(), MonomialOrder::DegRevLex);
    let (y, z) = (Polynomial::var(&ring, 0), Polynomial::var(&ring, 1));
    let a = Arc::new(make_algebra(Field::Rational, vars, vec![y.pow(3), z.pow(3)])?);
    let m = ModulePresentation::cyclic(a.clone(), vec![&y * &z])?;

    for c in 1..=4 {
        let ideals = a.enumerate_monomial_ideals(c);
        let listed: Vec<String> = ideals
            .iter()
            .map(|i| format!("{} [{}]", i.display(), fiber_dim(&m, i)))
            .collect();
        println!("colength {c}: {}", listed.join("  "));
    }

    let chain = a.maximal_chain::<ChaCha8Rng>(a.nil_index(), None);
    let report = cofiltration_check(&m, &chain)?;
    println!("chain of {} ideals, {} generators, flat {}", chain.len(), report.generators, report.flat);
    for s in &report.steps {
        println!(
            "  colength {} -> {}: {} <= {} + {} ({})",
            s.from_colength,
            s.to_colength,
            s.fiber_large,
            s.fiber_small,
            report.generators,
            if s.equality_holds { "equal" } else { "strict" }
        );
    }
    Ok(())
}
