//! The varpi verdict against the Tor oracle on random presentations, and the
//! two routes to the kernel of `I ⊗ M -> M`.

use std::sync::Arc;

use rand::Rng;

use flatlab::corpus::{random_algebra, random_ideal, random_presentation, rng};
use flatlab::criterion::cross_validate;
use flatlab::fiber::milne_paths;
use flatlab::scalar::Field;

fn main() -> flatlab::error::Result<()> {
    let mut r = rng(7);
    for k in 0..12 {
        let a = Arc::new(random_algebra(&mut r, Field::Rational, 2, 10));
        let (p, q) = (r.gen_range(1..=3), r.gen_range(0..=4));
        let m = random_presentation(&mut r, a.clone(), p, q);
        let cv = cross_validate(&m)?;
        let i = random_ideal(&mut r, &a);
        let paths = milne_paths(&m, &i);
        println!(
            "#{k:2} length {:2} p {p} q {q}: {:7} Tor_1(k,M) {}  I = {}: Tor_1 {} / tensor kernel {}",
            a.length(),
            cv.verdict.status.label(),
            cv.tor1,
            i.display(),
            paths.via_tor,
            paths.via_tensor
        );
    }
    Ok(())
}
