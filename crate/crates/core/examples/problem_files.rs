//! Parsing, printing and building problem files, including the diagnostics
//! for malformed input.

use flatlab::cli::analyze;
use flatlab::dsl::parse_problem;

const TEXT: &str = "\
field Fp 32003
ring A = k[y, z] / (y^2, z^2)   # a fat point of length 4
module M over A generators 2 relations [[y, 1 + z], [z, 0]]
option mode = enum 4
";

fn main() -> flatlab::error::Result<()> {
    let p = parse_problem(TEXT)?;
    print!("{p}");
    assert_eq!(parse_problem(&p.to_string())?, p);
    let report = analyze(TEXT)?;
    print!("{}", report.to_table());

    for bad in [
        "ring A = k[y] / (y - 1)\n",
        "ring A = k[y] / (y^2\n",
        "ring A = k[y] / (z)\n",
        "ring A = k[e] / (e^2)\ngraded G over A xvars [x] degrees [0] relations [[x + x^2]]\n",
    ] {
        println!("{:?}\n  -> {}", bad, parse_problem(bad).unwrap_err());
    }
    Ok(())
}
