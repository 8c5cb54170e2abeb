//! Free modules of several ranks over random fat points: varpi is the rank
//! at every order and `Tor_1(k, -)` vanishes.

use std::sync::Arc;

use flatlab::corpus::{random_algebra, rng};
use flatlab::criterion::{flat_verdict, Mode};
use flatlab::fiber::{tor1_dim, ModulePresentation};
use flatlab::scalar::Field;

fn main() -> flatlab::error::Result<()> {
    let mut r = rng(42);
    for _ in 0..5 {
        let a = Arc::new(random_algebra(&mut r, Field::Rational, 2, 12));
        let gens: Vec<String> = a.defining_generators().iter().map(|g| g.to_string()).collect();
        println!("A = k[{}]/({}), length {}", a.variables().join(", "), gens.join(", "), a.length());
        for rank in [1, 2, 5] {
            let m = ModulePresentation::free(a.clone(), rank);
            let v = flat_verdict(&m, Mode::PowersOnly)?;
            let varpis: Vec<String> = v.profile().unwrap().rows.iter().map(|r| r.varpi.to_string()).collect();
            println!(
                "  rank {rank}: {} varpi [{}] Tor_1 {}",
                v.status.label(),
                varpis.join(", "),
                tor1_dim(&m, &a.maximal_ideal())
            );
        }
    }
    Ok(())
}
