//! The `flatlab` command line.
//!
//! Exit codes: 0 Flat, 10 NotFlat, 11 FlatUpToOrder, 2 input error,
//! 3 disagreement between a result and its independent oracle. Commands
//! without a verdict exit 0 on success.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};

use crate::criterion::{flat_verdict, varpi_affine, witness_holds, Mode, ProfileRow, Status};
use crate::dsl::{parse_polynomials, parse_problem, Instance, Problem};
use crate::error::{Error, Result};
use crate::export::{export_crosscheck, Dialect};
use crate::fiber::{brute_force_fiber_dim, fiber_dim, milne_paths, ModulePresentation};
use crate::graded::{
    brute_force_piece_dim, hilbert_table, newton_interpolate, projective_flat_verdict, varpi_projective, GradedModule,
    VarpiPolynomial,
};
use crate::report::{PolynomialEntry, ProfileEntry, Report, TorEntry};

pub const EXIT_FLAT: i32 = 0;
pub const EXIT_NOT_FLAT: i32 = 10;
pub const EXIT_FLAT_UP_TO_ORDER: i32 = 11;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DISAGREEMENT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "flatlab", version, about = "Flatness tests over local Artinian bases")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide flatness and cross-check the verdict.
    Analyze {
        file: PathBuf,
        /// Write the JSON report here (`-` for standard output).
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print the varpi profile, or the varpi polynomials of a graded module.
    Varpi {
        file: PathBuf,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Dimension of Tor_1(A/I, M), by default for the maximal ideal.
    Tor {
        file: PathBuf,
        /// Comma-separated generators of I.
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Hilbert function of the graded module restricted to one neighborhood.
    Hilbert {
        file: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_window)]
        window: Option<(i64, i64)>,
    },
    /// List the monomial ideals of the base with a given colength.
    EnumIdeals {
        file: PathBuf,
        #[arg(long)]
        colength: usize,
    },
    /// Emit a cross-check script for Macaulay2 or Singular.
    Export {
        file: PathBuf,
        /// `m2` or `singular`.
        #[arg(long)]
        dialect: Dialect,
    },
    /// Write a seeded random corpus of problem files.
    GenCorpus {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

pub fn parse_window(s: &str) -> std::result::Result<(i64, i64), String> {
    let (a, b) = s.split_once("..").ok_or("expected a..b")?;
    let a: i64 = a.trim().parse().map_err(|e| format!("{e}"))?;
    let b: i64 = b.trim().parse().map_err(|e| format!("{e}"))?;
    if b < a {
        return Err("empty window".into());
    }
    Ok((a, b))
}

pub fn exit_code_for_error(e: &Error) -> i32 {
    match e {
        Error::Disagreement(_) => EXIT_DISAGREEMENT,
        _ => EXIT_INPUT,
    }
}

/// Exit code of an `analyze` report.
pub fn exit_code_for_report(r: &Report) -> i32 {
    if !r.oracle_agreement {
        return EXIT_DISAGREEMENT;
    }
    match r.verdict.as_deref() {
        Some("NotFlat") => EXIT_NOT_FLAT,
        Some("FlatUpToOrder") => EXIT_FLAT_UP_TO_ORDER,
        _ => EXIT_FLAT,
    }
}

fn load(text: &str) -> Result<(Problem, Instance)> {
    let problem = parse_problem(text)?;
    let inst = problem.build()?;
    Ok((problem, inst))
}

fn neighborhood_rows_agree(m: &ModulePresentation, rows: &[ProfileRow]) -> bool {
    let alg = m.algebra();
    rows.iter()
        .all(|r| brute_force_fiber_dim(m, &alg.infinitesimal_neighborhood(r.order).ideal) == r.fiber_dim)
}

/// Recomputes a varpi polynomial from brute-force piece dimensions at the
/// `N+1` points starting at its threshold.
fn polynomial_agrees(g: &GradedModule, p: &VarpiPolynomial) -> bool {
    let values: Vec<i64> = (0..=g.projective_dim() as i64)
        .map(|k| brute_force_piece_dim(g, p.order, p.threshold + k) as i64)
        .collect();
    let den = num_rational::BigRational::from_integer(p.colength.into());
    let expect: Vec<_> = p.coefficients.iter().map(|c| c * &den).collect();
    newton_interpolate(p.threshold, &values) == expect
}

/// Runs the decision procedure and every applicable oracle.
pub fn analyze(text: &str) -> Result<Report> {
    let start = Instant::now();
    let (problem, inst) = load(text)?;
    let mut report = Report::new(text.as_bytes());
    let alg = &inst.algebra;
    if let Some(m) = &inst.module {
        let verdict = flat_verdict(m, problem.mode.unwrap_or(Mode::PowersOnly))?;
        let rows = &verdict.profile().expect("affine verdicts carry a profile").rows;
        let mut agree = neighborhood_rows_agree(m, rows);
        if let Some(w) = &verdict.witness {
            agree &= witness_holds(m, w);
        }
        if alg.is_definitive() {
            let maximal = alg.maximal_ideal();
            let paths = milne_paths(m, &maximal);
            let flat = verdict.status == Status::Flat;
            let total = fiber_dim(m, &alg.zero_ideal());
            agree &= paths.via_tor == paths.via_tensor;
            agree &= flat == (paths.via_tor == 0);
            agree &= flat == (total == alg.length() * rows[0].fiber_dim);
            report.tor = Some(TorEntry {
                ideal: maximal.display(),
                dim: paths.via_tor,
            });
        }
        report.set_verdict(&verdict);
        report.oracle_agreement = agree;
    } else if let Some(g) = &inst.graded {
        let verdict = projective_flat_verdict(g, problem.window)?;
        if let crate::criterion::Evidence::Polynomials(ps) = &verdict.evidence {
            report.oracle_agreement = ps.iter().all(|p| polynomial_agrees(g, p));
        }
        report.set_verdict(&verdict);
    } else {
        return Err(Error::Invalid("the problem declares neither a module nor a graded module".into()));
    }
    report.timing_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Profile rows (all orders below the nilpotency index, or only `n`), or the
/// varpi polynomials of a graded problem.
pub fn varpi(text: &str, n: Option<usize>) -> Result<Report> {
    let start = Instant::now();
    let (problem, inst) = load(text)?;
    let mut report = Report::new(text.as_bytes());
    let alg = &inst.algebra;
    let orders: Vec<usize> = match n {
        Some(n) => vec![n],
        None => (0..alg.nil_index()).collect(),
    };
    if let Some(m) = &inst.module {
        let mut agree = true;
        for &k in &orders {
            let nb = alg.infinitesimal_neighborhood(k);
            let fd = fiber_dim(m, &nb.ideal);
            agree &= fd == brute_force_fiber_dim(m, &nb.ideal);
            report.profile.push(ProfileEntry::from(&ProfileRow {
                order: k,
                colength: nb.colength,
                fiber_dim: fd,
                varpi: varpi_affine(m, k),
            }));
        }
        report.oracle_agreement = agree;
    } else if let Some(g) = &inst.graded {
        let ps: Vec<VarpiPolynomial> = orders
            .iter()
            .map(|&k| varpi_projective(g, k, problem.window))
            .collect::<Result<_>>()?;
        report.oracle_agreement = ps.iter().all(|p| polynomial_agrees(g, p));
        report.polynomials = Some(ps.iter().map(PolynomialEntry::from).collect());
    } else {
        return Err(Error::Invalid("the problem declares neither a module nor a graded module".into()));
    }
    report.timing_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// `Tor_1(A/I, M)` computed two ways; they must agree.
pub fn tor(text: &str, ideal: Option<&str>) -> Result<Report> {
    let start = Instant::now();
    let (_, inst) = load(text)?;
    let alg = &inst.algebra;
    let m = inst
        .module
        .as_ref()
        .ok_or_else(|| Error::Invalid("tor needs a module declaration".into()))?;
    let i = match ideal {
        Some(s) => alg.ideal(parse_polynomials(s, alg.ring())?)?,
        None => alg.maximal_ideal(),
    };
    let paths = milne_paths(m, &i);
    if paths.via_tor != paths.via_tensor {
        return Err(Error::Disagreement(format!(
            "Tor_1 = {} but dim(I ⊗ M) - dim(IM) = {}",
            paths.via_tor, paths.via_tensor
        )));
    }
    let mut report = Report::new(text.as_bytes());
    report.tor = Some(TorEntry {
        ideal: i.display(),
        dim: paths.via_tor,
    });
    report.timing_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Tab-separated `m h(n, m)` rows followed by the Hilbert polynomial.
pub fn hilbert(text: &str, n: usize, window: Option<(i64, i64)>) -> Result<String> {
    let (problem, inst) = load(text)?;
    let g = inst
        .graded
        .as_ref()
        .ok_or_else(|| Error::Invalid("hilbert needs a graded declaration".into()))?;
    let table = hilbert_table(g, n, window.or(problem.window))?;
    let mut out = String::from("m\th\n");
    for (k, v) in table.values.iter().enumerate() {
        let m = table.window.0 + k as i64;
        if brute_force_piece_dim(g, n, m) != *v {
            return Err(Error::Disagreement(format!("h({n}, {m}) differs from the brute-force count")));
        }
        out.push_str(&format!("{m}\t{v}\n"));
    }
    let coeffs = crate::report::rationals(table.polynomial.as_deref().unwrap_or_default());
    out.push_str(&format!(
        "polynomial (constant first): [{}] for m >= {}\n",
        coeffs.join(", "),
        table.threshold
    ));
    Ok(out)
}

pub fn enum_ideals(text: &str, colength: usize) -> Result<String> {
    let (_, inst) = load(text)?;
    let alg = &inst.algebra;
    if !alg.is_definitive() {
        return Err(Error::ModeUnsupported("enumeration needs an Artinian base".into()));
    }
    let ideals = alg.enumerate_monomial_ideals(colength);
    let mut out = format!("{} monomial ideals of colength {colength}\n", ideals.len());
    for i in &ideals {
        match &inst.module {
            Some(m) => {
                let mu = fiber_dim(m, &alg.maximal_ideal());
                out.push_str(&format!(
                    "{}\tfiber_dim {}\tcolength * mu {}\n",
                    i.display(),
                    fiber_dim(m, i),
                    colength * mu
                ));
            }
            None => out.push_str(&format!("{}\n", i.display())),
        }
    }
    Ok(out)
}

fn read(path: &Path) -> Result<String> {
    let bytes = std::fs::read(path)?;
    String::from_utf8(bytes).map_err(|e| Error::Invalid(format!("{}: not UTF-8: {e}", path.display())))
}

fn emit_report(r: &Report, json: &Option<PathBuf>, out: &mut dyn Write) -> Result<()> {
    match json {
        Some(p) if p.as_os_str() == "-" => out.write_all(r.to_json().as_bytes())?,
        Some(p) => {
            std::fs::write(p, r.to_json())?;
            out.write_all(r.to_table().as_bytes())?;
        }
        None => out.write_all(r.to_table().as_bytes())?,
    }
    Ok(())
}

fn dispatch(cmd: &Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Analyze { file, json } => {
            let r = analyze(&read(file)?)?;
            emit_report(&r, json, out)?;
            Ok(exit_code_for_report(&r))
        }
        Command::Varpi { file, n, json } => {
            let r = varpi(&read(file)?, *n)?;
            emit_report(&r, json, out)?;
            Ok(if r.oracle_agreement { 0 } else { EXIT_DISAGREEMENT })
        }
        Command::Tor { file, ideal, json } => {
            let r = tor(&read(file)?, ideal.as_deref())?;
            emit_report(&r, json, out)?;
            Ok(0)
        }
        Command::Hilbert { file, n, window } => {
            out.write_all(hilbert(&read(file)?, *n, *window)?.as_bytes())?;
            Ok(0)
        }
        Command::EnumIdeals { file, colength } => {
            out.write_all(enum_ideals(&read(file)?, *colength)?.as_bytes())?;
            Ok(0)
        }
        Command::Export { file, dialect } => {
            let problem = parse_problem(&read(file)?)?;
            out.write_all(export_crosscheck(&problem, *dialect)?.as_bytes())?;
            Ok(0)
        }
        Command::GenCorpus { seed, count, out: dir } => {
            let m = crate::corpus::write_corpus(*seed, *count, dir)?;
            writeln!(out, "wrote {} problems with seed {} to {}", m.count, m.seed, dir.display())?;
            Ok(0)
        }
    }
}

/// Runs one command, writing results to `out` and errors to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code_for_error(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const DUAL_NUMBERS: &str = "ring A = k[y] / (y^2)\nmodule M over A generators 1 relations [[y]]\n";
    const TRUNCATED_LINE: &str = "ring A = k[y] / (y^3)\nmodule M over A generators 1 relations [[y^2]]\n";

    #[test]
    fn analyze_dual_numbers() {
        let r = analyze(DUAL_NUMBERS).unwrap();
        assert_eq!(exit_code_for_report(&r), EXIT_NOT_FLAT);
        assert!(matches!(r.witness, Some(crate::report::WitnessEntry::Neighborhood { n: 1, .. })));
        assert_eq!(r.tor.as_ref().unwrap().dim, 1);
        assert!(r.oracle_agreement);
    }

    #[test]
    fn varpi_row_truncated_line() {
        let r = varpi(TRUNCATED_LINE, Some(2)).unwrap();
        let row = &r.profile[0];
        assert_eq!((row.n, row.colength, row.fiber_dim, row.varpi.as_str()), (2, 3, 2, "2/3"));
    }

    #[test]
    fn free_module_exits_zero() {
        let r = analyze("ring A = k[y, z] / (y^2, z^3)\nmodule M over A generators 2 relations []\n").unwrap();
        assert_eq!(exit_code_for_report(&r), EXIT_FLAT);
    }

    #[test]
    fn truncated_and_graded_verdicts() {
        let r = analyze("ring A = k[y, z] / (y*z)\nmodule M over A generators 1 relations [[y]]\noption mode = truncated 2\n")
            .unwrap();
        assert_eq!(exit_code_for_report(&r), EXIT_NOT_FLAT);
        let r = analyze("ring A = k[y, z] / (y*z)\nmodule M over A generators 1 relations []\noption mode = truncated 2\n")
            .unwrap();
        assert_eq!(exit_code_for_report(&r), EXIT_FLAT_UP_TO_ORDER);
        assert_eq!(r.max_order, Some(2));
        let r = analyze("ring A = k[e] / (e^2)\ngraded G over A xvars [x0, x1] degrees [0] relations [[e*x0]]\n").unwrap();
        assert_eq!(exit_code_for_report(&r), EXIT_NOT_FLAT);
        assert_eq!(r.polynomials.as_ref().unwrap()[1].coeffs, vec!["1/1", "1/2"]);
    }

    #[test]
    fn tor_for_given_ideal_and_hilbert_rows() {
        let r = tor(TRUNCATED_LINE, Some("y^2")).unwrap();
        // Tor_1(A/I, A/K) = (I ∩ K)/IK, here (y^2)/0
        assert_eq!(r.tor.as_ref().unwrap().dim, 1);
        let h = hilbert(
            "ring A = k[e] / (e^2)\ngraded G over A xvars [x0, x1] degrees [0] relations [[e*x0]]\n",
            1,
            Some((0, 4)),
        )
        .unwrap();
        assert!(h.starts_with("m\th\n0\t2\n1\t3\n"));
        assert!(h.contains("[2/1, 1/1]"));
    }

    #[test]
    fn windows_parse() {
        assert_eq!(parse_window("0..8"), Ok((0, 8)));
        assert_eq!(parse_window("-2..3"), Ok((-2, 3)));
        assert!(parse_window("3..1").is_err());
    }
}
