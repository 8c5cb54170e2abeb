//! The Gröbner engine on its own: an ideal, its standard monomials, and the
//! syzygies among `y`, `z` and `y*z`.

use flatlab::groebner::{buchberger, quotient_dim, standard_monomials, syzygy_basis, FreeModuleElement, ModuleOrder};
use flatlab::monomial::MonomialOrder;
use flatlab::poly::{PolyRing, Polynomial};
use flatlab::scalar::Field;

fn main() -> flatlab::error::Result<()> {
    let ring = PolyRing::new(Field::Rational, vec!["y".into(), "z".into()], MonomialOrder::DegRevLex);
    let (y, z) = (Polynomial::var(&ring, 0), Polynomial::var(&ring, 1));
    let ord = ModuleOrder::top(ring.order);

    let ideal: Vec<FreeModuleElement> = [&y.pow(2) - &z.pow(3), &y * &z, z.pow(4)]
        .into_iter()
        .map(|f| FreeModuleElement::new(vec![f]))
        .collect();
    let gb = buchberger(&ring, 1, &ideal, ord)?;
    for g in gb.generators() {
        println!("  {}", g.components[0]);
    }
    let basis: Vec<String> = standard_monomials(&gb)?
        .into_iter()
        .map(|(_, m)| Polynomial::monomial(&ring, m, ring.field.one()).to_string())
        .collect();
    println!("standard monomials ({}): {}", quotient_dim(&gb)?, basis.join(" "));

    let cols: Vec<FreeModuleElement> = [y.clone(), z.clone(), &y * &z]
        .into_iter()
        .map(|f| FreeModuleElement::new(vec![f]))
        .collect();
    for s in syzygy_basis(&ring, 1, &cols, ord)? {
        let entries: Vec<String> = s.components.iter().map(|f| f.to_string()).collect();
        println!("syzygy ({})", entries.join(", "));
    }
    Ok(())
}
