//! Cross-check scripts for Macaulay2 and Singular.
//!
//! The scripts recompute the fiber dimensions over every neighborhood, the
//! dimension of `Tor_1(k, M)` and, for graded problems, the Hilbert function
//! rows. The values this crate computed are embedded as comments next to
//! each print statement.

use crate::dsl::{Instance, Problem};
use crate::error::{Error, Result};
use crate::fiber::{fiber_dim, tor1_dim};
use crate::graded::{default_window, GradedModule};
use crate::poly::Polynomial;
use crate::scalar::Field;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dialect {
    M2,
    Singular,
}

impl std::str::FromStr for Dialect {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m2" => Ok(Dialect::M2),
            "singular" => Ok(Dialect::Singular),
            _ => Err(Error::Invalid(format!("unknown dialect '{s}', expected m2 or singular"))),
        }
    }
}

struct Expected {
    fibers: Vec<usize>,
    tor1: Option<usize>,
    /// `(n, window start, values)` per order.
    hilbert: Vec<(usize, i64, Vec<usize>)>,
}

fn expected(problem: &Problem, inst: &Instance) -> Expected {
    let alg = &inst.algebra;
    let orders = 0..alg.nil_index();
    let (fibers, tor1) = match &inst.module {
        Some(m) => (
            orders
                .clone()
                .map(|n| fiber_dim(m, &alg.infinitesimal_neighborhood(n).ideal))
                .collect(),
            Some(tor1_dim(m, &alg.maximal_ideal())),
        ),
        None => (Vec::new(), None),
    };
    let hilbert = match &inst.graded {
        Some(g) => orders.map(|n| hilbert_rows(g, n, problem.window)).collect(),
        None => Vec::new(),
    };
    Expected { fibers, tor1, hilbert }
}

fn hilbert_rows(g: &GradedModule, n: usize, window: Option<(i64, i64)>) -> (usize, i64, Vec<usize>) {
    let fiber = g.restriction(n);
    let (lo, hi) = window.unwrap_or_else(|| default_window(&fiber));
    (n, lo, (lo..=hi).map(|m| fiber.piece_dim(m)).collect())
}

fn polys(ps: &[Polynomial]) -> String {
    ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
}

/// Rows are generators, columns are relations.
fn m2_matrix(ring: &str, rank: usize, cols: &[Vec<Polynomial>]) -> String {
    if cols.is_empty() {
        return format!("map({ring}^{rank}, {ring}^0, 0)");
    }
    let rows: Vec<String> = (0..rank)
        .map(|i| format!("{{{}}}", cols.iter().map(|c| c[i].to_string()).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("matrix({ring}, {{{}}})", rows.join(", "))
}

fn export_m2(problem: &Problem, exp: &Expected) -> String {
    let mut s = String::from("-- fiber dimensions, Tor_1 and Hilbert rows for the problem below\n");
    let kk = match problem.field {
        Field::Rational => "QQ".to_string(),
        Field::Prime(p) => format!("ZZ/{p}"),
    };
    let vars = &problem.ring.ring.vars;
    s.push_str(&format!("R = {kk}[{}];\n", vars.join(", ")));
    let ideal = if problem.ring.ideal.is_empty() {
        "ideal(0_R)".to_string()
    } else {
        format!("ideal({})", polys(&problem.ring.ideal))
    };
    s.push_str(&format!("J = {ideal};\nA = R/J;\n"));
    s.push_str(&format!("mm = ideal({});\n", if vars.is_empty() { "0_A".into() } else { vars.join(", ") }));
    if let Some(m) = &problem.module {
        s.push_str(&format!("M = coker {};\n", m2_matrix("A", m.generators, &m.relations)));
        for (n, d) in exp.fibers.iter().enumerate() {
            s.push_str(&format!(
                "print numgens source basis(M ** (A^1 / mm^{})); -- expected {d}\n",
                n + 1
            ));
        }
        if let Some(t) = exp.tor1 {
            s.push_str(&format!(
                "print numgens source basis Tor_1(coker vars A, M); -- expected {t}\n"
            ));
        }
    }
    if let Some(g) = &problem.graded {
        let degs: Vec<String> = g
            .xvars
            .iter()
            .map(|_| "1".to_string())
            .chain(vars.iter().map(|_| "0".to_string()))
            .collect();
        s.push_str(&format!(
            "T = {kk}[{}, Degrees => {{{}}}];\n",
            g.ring.vars.join(", "),
            degs.join(", ")
        ));
        let jt = if problem.ring.ideal.is_empty() {
            "ideal(0_T)".to_string()
        } else {
            "sub(J, T)".to_string()
        };
        s.push_str(&format!("S = T/{jt};\n"));
        let twists: Vec<String> = g.degrees.iter().map(|d| format!("{{{}}}", -d)).collect();
        let rows: Vec<String> = if g.relations.is_empty() {
            Vec::new()
        } else {
            (0..g.degrees.len())
                .map(|i| {
                    format!(
                        "{{{}}}",
                        g.relations.iter().map(|c| c[i].to_string()).collect::<Vec<_>>().join(", ")
                    )
                })
                .collect()
        };
        let pres = if rows.is_empty() {
            format!("map(S^{{{}}}, S^0, 0)", twists.join(", "))
        } else {
            format!("map(S^{{{}}}, , {{{}}})", twists.join(", "), rows.join(", "))
        };
        s.push_str(&format!("G = coker {pres};\n"));
        let ys = if vars.is_empty() {
            "0_S".to_string()
        } else {
            vars.join(", ")
        };
        s.push_str(&format!("ny = ideal({ys});\n"));
        for (n, lo, values) in &exp.hilbert {
            for (k, v) in values.iter().enumerate() {
                let m = lo + k as i64;
                s.push_str(&format!(
                    "print numgens source basis({m}, G ** (S^1 / ny^{})); -- expected h({n}, {m}) = {v}\n",
                    n + 1
                ));
            }
        }
    }
    s
}

fn singular_poly(p: &Polynomial) -> String {
    p.to_string()
}

fn export_singular(problem: &Problem, exp: &Expected) -> Result<String> {
    let mut s = String::from("// fiber dimensions, Tor_1 and Hilbert rows for the problem below\nLIB \"homolog.lib\";\n");
    let ch = match problem.field {
        Field::Rational => 0,
        Field::Prime(p) => p,
    };
    let vars = &problem.ring.ring.vars;
    if vars.is_empty() {
        return Err(Error::Unsupported("Singular rings need at least one variable".into()));
    }
    s.push_str(&format!("ring R = {ch}, ({}), dp;\n", vars.join(", ")));
    let ideal = if problem.ring.ideal.is_empty() {
        "0".to_string()
    } else {
        problem.ring.ideal.iter().map(singular_poly).collect::<Vec<_>>().join(", ")
    };
    s.push_str(&format!("ideal J = {ideal};\nqring A = std(J);\n"));
    if let Some(m) = &problem.module {
        if m.relations.is_empty() {
            s.push_str(&format!("module N = 0 * freemodule({});\n", m.generators));
        } else {
            let cols: Vec<String> = m
                .relations
                .iter()
                .map(|c| format!("[{}]", c.iter().map(singular_poly).collect::<Vec<_>>().join(", ")))
                .collect();
            s.push_str(&format!("module N = {};\n", cols.join(", ")));
        }
        s.push_str(&format!("module F = freemodule({});\n", m.generators));
        for (n, d) in exp.fibers.iter().enumerate() {
            s.push_str(&format!(
                "vdim(std(N + maxideal({}) * F)); // expected {d}\n",
                n + 1
            ));
        }
        if let Some(t) = exp.tor1 {
            s.push_str(&format!(
                "vdim(std(Tor(1, module(maxideal(1)), N))); // expected {t}\n"
            ));
        }
    }
    if let Some(g) = &problem.graded {
        if !g.relations.is_empty() && g.degrees.len() > 1 {
            return Err(Error::Unsupported(
                "graded export to Singular supports cyclic modules only".into(),
            ));
        }
        let weights: Vec<String> = g
            .xvars
            .iter()
            .map(|_| "1".to_string())
            .chain(vars.iter().map(|_| "0".to_string()))
            .collect();
        s.push_str(&format!(
            "ring T = {ch}, ({}), (a({}), dp);\n",
            g.ring.vars.join(", "),
            weights.join(", ")
        ));
        s.push_str(&format!(
            "ideal JT = imap(R, J);\nideal Y = {};\nideal X = {};\n",
            vars.join(", "),
            g.xvars.join(", ")
        ));
        let rels: Vec<String> = g
            .relations
            .iter()
            .filter_map(|c| c.first().map(singular_poly))
            .collect();
        let rels = if rels.is_empty() { "0".to_string() } else { rels.join(", ") };
        s.push_str(&format!("ideal G = {rels};\n"));
        s.push_str(&format!(
            "proc piece(int n, int m) {{ ideal I = std(G + JT + Y^(n+1) + X^(m - ({d}) + 1)); ideal B = kbase(I); int c = 0; int i; for (i = 1; i <= size(B); i++) {{ if (deg(B[i], intvec({w})) == m - ({d})) {{ c++; }} }} return(c); }}\n",
            w = weights.join(", "),
            d = g.degrees.first().copied().unwrap_or(0)
        ));
        for (n, lo, values) in &exp.hilbert {
            for (k, v) in values.iter().enumerate() {
                let m = lo + k as i64;
                s.push_str(&format!(
                    "piece({n}, {m}); // expected h({n}, {m}) = {v}\n"
                ));
            }
        }
    }
    Ok(s)
}

/// A script for `dialect` with the expected values as comments.
pub fn export_crosscheck(problem: &Problem, dialect: Dialect) -> Result<String> {
    let inst = problem.build()?;
    if !inst.algebra.is_definitive() {
        return Err(Error::Unsupported("export needs an Artinian base".into()));
    }
    let exp = expected(problem, &inst);
    match dialect {
        Dialect::M2 => Ok(export_m2(problem, &exp)),
        Dialect::Singular => export_singular(problem, &exp),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_problem;

    fn expected_comments(script: &str) -> Vec<String> {
        script
            .lines()
            .filter_map(|l| l.split("expected ").nth(1))
            .map(|s| s.to_string())
            .collect()
    }

    #[test]
    fn truncated_line_m2() {
        let p = parse_problem("ring A = k[y] / (y^3)\nmodule M over A generators 1 relations [[y^2]]\n").unwrap();
        let s = export_crosscheck(&p, Dialect::M2).unwrap();
        assert_eq!(expected_comments(&s), vec!["1", "2", "2", "1"]);
        assert!(s.contains("M = coker matrix(A, {{y^2}});"));
    }

    #[test]
    fn free_module_scripts() {
        let p = parse_problem("ring A = k[y, z] / (y^2, z^2)\nmodule M over A generators 2 relations []\n").unwrap();
        let s = export_crosscheck(&p, Dialect::Singular).unwrap();
        // 2 * colength(m^(n+1)) for n = 0, 1, 2 and Tor_1 = 0
        assert_eq!(expected_comments(&s), vec!["2", "6", "8", "0"]);
        assert!(s.contains("module N = 0 * freemodule(2);"));
    }

    #[test]
    fn graded_rows() {
        let p = parse_problem(
            "ring A = k[e] / (e^2)\ngraded G over A xvars [x0, x1] degrees [0] relations [[e*x0]]\noption window = 0..3\n",
        )
        .unwrap();
        let s = export_crosscheck(&p, Dialect::M2).unwrap();
        let rows = expected_comments(&s);
        assert_eq!(rows[..4], ["h(0, 0) = 1", "h(0, 1) = 2", "h(0, 2) = 3", "h(0, 3) = 4"]);
        assert_eq!(rows[4..], ["h(1, 0) = 2", "h(1, 1) = 3", "h(1, 2) = 4", "h(1, 3) = 5"]);
    }
}
