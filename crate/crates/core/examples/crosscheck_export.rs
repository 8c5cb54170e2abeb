//! Macaulay2 and Singular scripts that recompute this crate's numbers.

use flatlab::dsl::parse_problem;
use flatlab::export::{export_crosscheck, Dialect};

fn main() -> flatlab::error::Result<()> {
    let affine = parse_problem(include_str!("../fixtures/truncated_line.flat"))?;
    let graded = parse_problem(include_str!("../fixtures/graded_eps_x0.flat"))?;
    println!("{}", export_crosscheck(&affine, Dialect::M2)?);
    println!("{}", export_crosscheck(&affine, Dialect::Singular)?);
    println!("{}", export_crosscheck(&graded, Dialect::M2)?);
    Ok(())
}
