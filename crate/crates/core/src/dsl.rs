//! The problem-file language.
//!
//! ```text
//! # comments run to end of line
//! field Q                                   | field Fp <prime>
//! ring A = k[y, z] / (y^2, y*z, z^3)        # the ideal part is optional
//! module M over A generators 2 relations [[y, 0], [z, y]]
//! graded G over A xvars [x0, x1] degrees [0] relations [[y*x0]]
//! option mode = powers-only                 | enum <c_max> | truncated <N_max>
//! option window = 0..8
//! ```
//!
//! One declaration per line. Relation columns list coordinates in the
//! generators. Parsing never computes a Gröbner basis; [`Problem::build`]
//! turns the abstract form into algebraic objects.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::artin::ArtinAlgebra;
use crate::criterion::Mode;
use crate::error::{Diagnostic, Error, Result};
use crate::fiber::ModulePresentation;
use crate::graded::GradedModule;
use crate::groebner::FreeModuleElement;
use crate::monomial::MonomialOrder;
use crate::poly::{PolyRing, Polynomial};
use crate::scalar::Field;

const MAX_VAR_EXPONENT: u32 = 255;
const MAX_COMPOUND_EXPONENT: u32 = 32;
const MAX_PRODUCT_WORK: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingDecl {
    pub name: String,
    /// `k[vars]` with the degree-reverse-lexicographic order.
    pub ring: Arc<PolyRing>,
    pub ideal: Vec<Polynomial>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleDecl {
    pub name: String,
    pub generators: usize,
    /// Relation columns, each of length `generators`.
    pub relations: Vec<Vec<Polynomial>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedDecl {
    pub name: String,
    pub xvars: Vec<String>,
    /// `k[xvars, ring vars]` with the x-block first.
    pub ring: Arc<PolyRing>,
    pub degrees: Vec<i64>,
    pub relations: Vec<Vec<Polynomial>>,
}

/// The abstract form of a problem file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Problem {
    pub field: Field,
    pub ring: RingDecl,
    pub module: Option<ModuleDecl>,
    pub graded: Option<GradedDecl>,
    pub mode: Option<Mode>,
    pub window: Option<(i64, i64)>,
}

/// Algebraic objects built from a [`Problem`].
#[derive(Debug, Clone)]
pub struct Instance {
    pub algebra: Arc<ArtinAlgebra>,
    pub module: Option<ModulePresentation>,
    pub graded: Option<GradedModule>,
}

impl Problem {
    /// Builds the base algebra and the declared modules. A non-Artinian base
    /// is accepted only under `truncated` mode, as `J + m^(N+1)`.
    pub fn build(&self) -> Result<Instance> {
        let vars = self.ring.ring.vars.clone();
        let algebra = match ArtinAlgebra::new(self.field, vars.clone(), self.ring.ideal.clone()) {
            Ok(a) => a,
            Err(Error::NotArtinian) => match self.mode {
                Some(Mode::Truncated { max_order }) => {
                    ArtinAlgebra::truncation(self.field, vars, self.ring.ideal.clone(), max_order)?
                }
                _ => return Err(Error::NotArtinian),
            },
            Err(e) => return Err(e),
        };
        let algebra = Arc::new(algebra);
        let module = match &self.module {
            Some(m) => Some(ModulePresentation::new(
                algebra.clone(),
                m.generators,
                m.relations.iter().map(|c| FreeModuleElement::new(c.clone())).collect(),
            )?),
            None => None,
        };
        let graded = match &self.graded {
            Some(g) => Some(GradedModule::new(
                algebra.clone(),
                g.xvars.clone(),
                g.degrees.clone(),
                g.relations.iter().map(|c| FreeModuleElement::new(c.clone())).collect(),
            )?),
            None => None,
        };
        Ok(Instance {
            algebra,
            module,
            graded,
        })
    }
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn columns(cols: &[Vec<Polynomial>]) -> String {
    let inner: Vec<String> = cols.iter().map(|c| format!("[{}]", join(c))).collect();
    format!("[{}]", inner.join(", "))
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.field {
            Field::Rational => writeln!(f, "field Q")?,
            Field::Prime(p) => writeln!(f, "field Fp {p}")?,
        }
        write!(f, "ring {} = k[{}]", self.ring.name, self.ring.ring.vars.join(", "))?;
        if !self.ring.ideal.is_empty() {
            write!(f, " / ({})", join(&self.ring.ideal))?;
        }
        writeln!(f)?;
        if let Some(m) = &self.module {
            writeln!(
                f,
                "module {} over {} generators {} relations {}",
                m.name,
                self.ring.name,
                m.generators,
                columns(&m.relations)
            )?;
        }
        if let Some(g) = &self.graded {
            writeln!(
                f,
                "graded {} over {} xvars [{}] degrees [{}] relations {}",
                g.name,
                self.ring.name,
                g.xvars.join(", "),
                join(&g.degrees),
                columns(&g.relations)
            )?;
        }
        match self.mode {
            Some(Mode::PowersOnly) => writeln!(f, "option mode = powers-only")?,
            Some(Mode::Enumeration { c_max }) => writeln!(f, "option mode = enum {c_max}")?,
            Some(Mode::Truncated { max_order }) => writeln!(f, "option mode = truncated {max_order}")?,
            None => {}
        }
        if let Some((a, b)) = self.window {
            writeln!(f, "option window = {a}..{b}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
    DotDot,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Int(n) => format!("'{n}'"),
            Tok::Sym(c) => format!("'{c}'"),
            Tok::DotDot => "'..'".into(),
        }
    }
}

struct Line {
    number: usize,
    toks: Vec<(Tok, usize)>,
    end_col: usize,
}

fn diag(line: usize, column: usize, message: impl Into<String>, expected: &[&str]) -> Error {
    Error::Parse(Diagnostic {
        line,
        column,
        message: message.into(),
        expected: expected.iter().map(|s| s.to_string()).collect(),
    })
}

fn lex(number: usize, text: &str) -> Result<Line> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            toks.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            toks.push((Tok::Int(digits.parse().expect("ascii digits")), col));
        } else if c == '.' && chars.get(i + 1) == Some(&'.') {
            toks.push((Tok::DotDot, col));
            i += 2;
        } else if "=[](),/+-*^".contains(c) {
            toks.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(diag(number, col, format!("unexpected character {c:?}"), &[]));
        }
    }
    Ok(Line {
        number,
        toks,
        end_col: chars.len() + 1,
    })
}

struct Cursor<'a> {
    line: &'a Line,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<&'a Tok> {
        self.line.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.line
            .toks
            .get(self.pos)
            .map(|(_, c)| *c)
            .unwrap_or(self.line.end_col)
    }

    fn fail<T>(&self, message: &str, expected: &[&str]) -> Result<T> {
        let found = match self.peek() {
            Some(t) => format!("{message}, found {}", t.describe()),
            None => format!("{message}, found end of line"),
        };
        Err(diag(self.line.number, self.col(), found, expected))
    }

    fn semantic<T>(&self, col: usize, message: impl Into<String>) -> Result<T> {
        Err(diag(self.line.number, col, message, &[]))
    }

    fn bump(&mut self) -> Option<&'a Tok> {
        let t = self.peek();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn at_sym(&self, c: char) -> bool {
        self.peek() == Some(&Tok::Sym(c))
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.at_sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sym(&mut self, c: char) -> Result<()> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            self.fail("syntax error", &[&format!("'{c}'")])
        }
    }

    fn keyword(&mut self, word: &str) -> Result<()> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == word => {
                self.pos += 1;
                Ok(())
            }
            _ => self.fail("syntax error", &[&format!("'{word}'")]),
        }
    }

    fn ident(&mut self, what: &str) -> Result<String> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(s.clone())
            }
            _ => self.fail("syntax error", &[what]),
        }
    }

    fn int(&mut self, what: &str) -> Result<BigInt> {
        match self.peek() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(n.clone())
            }
            _ => self.fail("syntax error", &[what]),
        }
    }

    fn small(&mut self, what: &str, max: u64) -> Result<u64> {
        let col = self.col();
        let n = self.int(what)?;
        match n.to_u64() {
            Some(v) if v <= max => Ok(v),
            _ => self.semantic(col, format!("{what} {n} exceeds {max}")),
        }
    }

    fn signed(&mut self, what: &str) -> Result<i64> {
        let neg = self.eat_sym('-');
        let col = self.col();
        let n = self.int(what)?;
        let n = if neg { -n } else { n };
        match n.to_i64() {
            Some(v) if v.abs() <= 1 << 20 => Ok(v),
            _ => self.semantic(col, format!("{what} {n} out of range")),
        }
    }

    fn end(&self) -> Result<()> {
        if self.peek().is_none() {
            Ok(())
        } else {
            self.fail("syntax error", &["end of line"])
        }
    }

    fn ident_list(&mut self, close: char, what: &str) -> Result<Vec<(String, usize)>> {
        let mut out = Vec::new();
        if self.eat_sym(close) {
            return Ok(out);
        }
        loop {
            let col = self.col();
            out.push((self.ident(what)?, col));
            if self.eat_sym(close) {
                return Ok(out);
            }
            if !self.eat_sym(',') {
                return self.fail("syntax error", &["','", &format!("'{close}'")]);
            }
        }
    }

    fn poly_list(&mut self, ring: &Arc<PolyRing>, close: char) -> Result<Vec<(Polynomial, usize)>> {
        let mut out = Vec::new();
        if self.eat_sym(close) {
            return Ok(out);
        }
        loop {
            let col = self.col();
            out.push((self.expr(ring)?, col));
            if self.eat_sym(close) {
                return Ok(out);
            }
            if !self.eat_sym(',') {
                return self.fail("syntax error", &["','", &format!("'{close}'")]);
            }
        }
    }

    /// `[[p, ...], ...]` with the column start positions.
    fn columns(&mut self, ring: &Arc<PolyRing>) -> Result<Vec<(Vec<Polynomial>, usize)>> {
        self.sym('[')?;
        let mut out = Vec::new();
        if self.eat_sym(']') {
            return Ok(out);
        }
        loop {
            let col = self.col();
            self.sym('[')?;
            let entries = self.poly_list(ring, ']')?;
            out.push((entries.into_iter().map(|(p, _)| p).collect(), col));
            if self.eat_sym(']') {
                return Ok(out);
            }
            if !self.eat_sym(',') {
                return self.fail("syntax error", &["','", "']'"]);
            }
        }
    }

    fn expr(&mut self, ring: &Arc<PolyRing>) -> Result<Polynomial> {
        let mut acc = if self.eat_sym('-') {
            self.term(ring)?.neg()
        } else {
            self.eat_sym('+');
            self.term(ring)?
        };
        loop {
            if self.eat_sym('+') {
                acc = &acc + &self.term(ring)?;
            } else if self.eat_sym('-') {
                acc = &acc - &self.term(ring)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self, ring: &Arc<PolyRing>) -> Result<Polynomial> {
        let mut acc = self.factor(ring)?;
        while self.at_sym('*') {
            let col = self.col();
            self.pos += 1;
            let f = self.factor(ring)?;
            if acc.num_terms() * f.num_terms() > MAX_PRODUCT_WORK {
                return self.semantic(col, "product too large");
            }
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self, ring: &Arc<PolyRing>) -> Result<Polynomial> {
        let (base, simple) = self.atom(ring)?;
        if !self.at_sym('^') {
            return Ok(base);
        }
        self.pos += 1;
        let cap = if simple { MAX_VAR_EXPONENT } else { MAX_COMPOUND_EXPONENT };
        let e = self.small("exponent", cap as u64)? as u32;
        let mut acc = Polynomial::one(ring);
        for _ in 0..e {
            if acc.num_terms() * base.num_terms() > MAX_PRODUCT_WORK {
                return self.semantic(self.col(), "power too large");
            }
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Returns the atom and whether it is a single term.
    fn atom(&mut self, ring: &Arc<PolyRing>) -> Result<(Polynomial, bool)> {
        let col = self.col();
        match self.peek() {
            Some(Tok::Int(_)) => {
                let num = self.int("integer")?;
                let den = if self.eat_sym('/') {
                    let dcol = self.col();
                    let d = self.int("integer")?;
                    if d.is_zero() {
                        return self.semantic(dcol, "division by zero");
                    }
                    d
                } else {
                    BigInt::from(1)
                };
                let q = BigRational::new(num, den);
                match ring.field.from_rational(&q) {
                    Some(c) => Ok((Polynomial::constant(ring, c), true)),
                    None => self.semantic(col, "denominator vanishes in the field"),
                }
            }
            Some(Tok::Ident(name)) => match ring.var_index(name) {
                Some(i) => {
                    self.pos += 1;
                    Ok((Polynomial::var(ring, i), true))
                }
                None => self.semantic(col, format!("unknown variable '{name}'")),
            },
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr(ring)?;
                self.sym(')')?;
                let simple = e.num_terms() <= 1;
                Ok((e, simple))
            }
            _ => self.fail("syntax error", &["integer", "variable", "'('"]),
        }
    }
}

fn check_distinct(line: usize, names: &[(String, usize)], taken: &[String]) -> Result<()> {
    for (k, (n, col)) in names.iter().enumerate() {
        if names[..k].iter().any(|(m, _)| m == n) || taken.contains(n) {
            return Err(diag(line, *col, format!("duplicate variable '{n}'"), &[]));
        }
        if n == "k" {
            return Err(diag(line, *col, "'k' names the coefficient field", &[]));
        }
    }
    Ok(())
}

/// Parses a problem file into its abstract form.
pub fn parse_problem(text: &str) -> Result<Problem> {
    let mut field: Option<Field> = None;
    let mut ring: Option<RingDecl> = None;
    let mut module: Option<ModuleDecl> = None;
    let mut graded: Option<GradedDecl> = None;
    let mut mode: Option<Mode> = None;
    let mut window: Option<(i64, i64)> = None;
    let mut last_line = 1;

    for (k, raw) in text.lines().enumerate() {
        let line = lex(k + 1, raw)?;
        last_line = k + 1;
        if line.toks.is_empty() {
            continue;
        }
        let mut c = Cursor { line: &line, pos: 0 };
        let head_col = c.col();
        let head = c.ident("declaration")?;
        let once = |present: bool, what: &str| -> Result<()> {
            if present {
                Err(diag(line.number, head_col, format!("duplicate {what} declaration"), &[]))
            } else {
                Ok(())
            }
        };
        match head.as_str() {
            "field" => {
                once(field.is_some(), "field")?;
                if ring.is_some() {
                    return c.semantic(head_col, "field must precede the ring");
                }
                let col = c.col();
                let name = c.ident("'Q' or 'Fp'")?;
                field = Some(match name.as_str() {
                    "Q" => Field::Rational,
                    "Fp" => {
                        let pcol = c.col();
                        let p = c.int("prime")?;
                        match p.to_u64().map(Field::prime) {
                            Some(Ok(f)) => f,
                            _ => return c.semantic(pcol, format!("{p} is not a prime below 2^31")),
                        }
                    }
                    _ => return Err(diag(line.number, col, format!("unknown field '{name}'"), &["'Q'", "'Fp'"])),
                });
            }
            "ring" => {
                once(ring.is_some(), "ring")?;
                let f = *field.get_or_insert(Field::Rational);
                let name = c.ident("ring name")?;
                c.sym('=')?;
                c.keyword("k")?;
                c.sym('[')?;
                let vars = c.ident_list(']', "variable")?;
                check_distinct(line.number, &vars, &[])?;
                let pr = PolyRing::new(
                    f,
                    vars.into_iter().map(|(v, _)| v).collect(),
                    MonomialOrder::DegRevLex,
                );
                let mut ideal = Vec::new();
                if c.eat_sym('/') {
                    c.sym('(')?;
                    for (g, col) in c.poly_list(&pr, ')')? {
                        if !g.constant_term().is_zero() {
                            return Err(Error::NotLocalAtOrigin(
                                Diagnostic {
                                    line: line.number,
                                    column: col,
                                    message: format!("defining generator {g} has a nonzero constant term"),
                                    expected: Vec::new(),
                                }
                                .to_string(),
                            ));
                        }
                        if !g.is_zero() {
                            ideal.push(g);
                        }
                    }
                }
                c.end()?;
                ring = Some(RingDecl { name, ring: pr, ideal });
            }
            "module" | "graded" => {
                let is_module = head == "module";
                once(if is_module { module.is_some() } else { graded.is_some() }, &head)?;
                let name = c.ident("name")?;
                c.keyword("over")?;
                let rcol = c.col();
                let over = c.ident("ring name")?;
                let Some(r) = &ring else {
                    return c.semantic(rcol, format!("unknown ring '{over}'"));
                };
                if r.name != over {
                    return c.semantic(rcol, format!("unknown ring '{over}'"));
                }
                if is_module {
                    c.keyword("generators")?;
                    let p = c.small("generator count", 64)? as usize;
                    c.keyword("relations")?;
                    let cols = c.columns(&r.ring)?;
                    c.end()?;
                    for (col_entries, col) in &cols {
                        if col_entries.len() != p {
                            return c.semantic(
                                *col,
                                format!("relation column has {} entries, expected {p}", col_entries.len()),
                            );
                        }
                    }
                    module = Some(ModuleDecl {
                        name,
                        generators: p,
                        relations: cols.into_iter().map(|(e, _)| e).collect(),
                    });
                } else {
                    c.keyword("xvars")?;
                    c.sym('[')?;
                    let xs = c.ident_list(']', "variable")?;
                    check_distinct(line.number, &xs, &r.ring.vars)?;
                    if xs.is_empty() {
                        return c.semantic(c.col(), "at least one x-variable is required");
                    }
                    let xvars: Vec<String> = xs.into_iter().map(|(v, _)| v).collect();
                    c.keyword("degrees")?;
                    c.sym('[')?;
                    let mut degrees = Vec::new();
                    if !c.eat_sym(']') {
                        loop {
                            degrees.push(c.signed("degree")?);
                            if c.eat_sym(']') {
                                break;
                            }
                            if !c.eat_sym(',') {
                                return c.fail("syntax error", &["','", "']'"]);
                            }
                        }
                    }
                    if degrees.len() > 64 {
                        return c.semantic(head_col, "too many generators");
                    }
                    c.keyword("relations")?;
                    let mut vars = xvars.clone();
                    vars.extend(r.ring.vars.iter().cloned());
                    let gr = PolyRing::new(r.ring.field, vars, MonomialOrder::Block { split: xvars.len() });
                    let cols = c.columns(&gr)?;
                    c.end()?;
                    for (j, (entries, col)) in cols.iter().enumerate() {
                        if entries.len() != degrees.len() {
                            return c.semantic(
                                *col,
                                format!(
                                    "relation column has {} entries, expected {}",
                                    entries.len(),
                                    degrees.len()
                                ),
                            );
                        }
                        if !homogeneous(entries, &degrees, xvars.len()) {
                            return c.semantic(*col, format!("inhomogeneous graded relation in column {j}"));
                        }
                    }
                    graded = Some(GradedDecl {
                        name,
                        xvars,
                        ring: gr,
                        degrees,
                        relations: cols.into_iter().map(|(e, _)| e).collect(),
                    });
                }
            }
            "option" => {
                let kcol = c.col();
                let key = c.ident("'mode' or 'window'")?;
                c.sym('=')?;
                match key.as_str() {
                    "mode" => {
                        once(mode.is_some(), "mode")?;
                        let vcol = c.col();
                        let v = c.ident("'powers-only', 'enum' or 'truncated'")?;
                        mode = Some(match v.as_str() {
                            "powers" => {
                                c.sym('-')?;
                                c.keyword("only")?;
                                Mode::PowersOnly
                            }
                            "enum" => Mode::Enumeration {
                                c_max: c.small("c_max", 1 << 16)? as usize,
                            },
                            "truncated" => Mode::Truncated {
                                max_order: c.small("N_max", 1 << 10)? as usize,
                            },
                            _ => {
                                return Err(diag(
                                    line.number,
                                    vcol,
                                    format!("unknown mode '{v}'"),
                                    &["'powers-only'", "'enum'", "'truncated'"],
                                ))
                            }
                        });
                    }
                    "window" => {
                        once(window.is_some(), "window")?;
                        let lo = c.signed("window start")?;
                        if c.peek() != Some(&Tok::DotDot) {
                            return c.fail("syntax error", &["'..'"]);
                        }
                        c.bump();
                        let hcol = c.col();
                        let hi = c.signed("window end")?;
                        if hi < lo {
                            return c.semantic(hcol, "empty window");
                        }
                        window = Some((lo, hi));
                    }
                    _ => {
                        return Err(diag(line.number, kcol, format!("unknown option '{key}'"), &["'mode'", "'window'"]))
                    }
                }
                c.end()?;
            }
            _ => {
                return Err(diag(
                    line.number,
                    head_col,
                    format!("unknown declaration '{head}'"),
                    &["'field'", "'ring'", "'module'", "'graded'", "'option'"],
                ))
            }
        }
    }

    let Some(ring) = ring else {
        return Err(diag(last_line, 1, "missing ring declaration", &["'ring'"]));
    };
    Ok(Problem {
        field: field.unwrap_or(Field::Rational),
        ring,
        module,
        graded,
        mode,
        window,
    })
}

fn homogeneous(entries: &[Polynomial], degrees: &[i64], x_count: usize) -> bool {
    let mut deg: Option<i64> = None;
    for (f, d) in entries.iter().zip(degrees) {
        for (m, _) in f.terms() {
            let e = m.partial_degree(0..x_count) as i64 + d;
            if *deg.get_or_insert(e) != e {
                return false;
            }
        }
    }
    true
}

/// Parses a comma-separated list of polynomials in `ring`.
pub fn parse_polynomials(text: &str, ring: &Arc<PolyRing>) -> Result<Vec<Polynomial>> {
    if text.contains('\n') {
        return Err(diag(1, 1, "expected a single line", &[]));
    }
    let line = lex(1, text)?;
    let mut c = Cursor { line: &line, pos: 0 };
    let mut out = Vec::new();
    if c.peek().is_none() {
        return Ok(out);
    }
    loop {
        out.push(c.expr(ring)?);
        if c.peek().is_none() {
            return Ok(out);
        }
        if !c.eat_sym(',') {
            return c.fail("syntax error", &["','", "end of line"]);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) const DUAL_NUMBERS: &str = "field Q\nring A = k[y] / (y^2)\nmodule M over A generators 1 relations [[y]]\n";

    #[test]
    fn dual_numbers_parse() {
        let p = parse_problem(DUAL_NUMBERS).unwrap();
        assert_eq!(p.ring.ring.vars, vec!["y".to_string()]);
        assert_eq!(p.ring.ideal[0].to_string(), "y^2");
        let m = p.module.as_ref().unwrap();
        assert_eq!(m.generators, 1);
        assert_eq!(m.relations[0][0].to_string(), "y");
        let inst = p.build().unwrap();
        assert_eq!(inst.algebra.length(), 2);
    }

    #[test]
    fn constant_term_rejected() {
        let err = parse_problem("field Q\nring A = k[y] / (y - 1)\n").unwrap_err();
        match err {
            Error::NotLocalAtOrigin(msg) => assert!(msg.starts_with("2:18:"), "{msg}"),
            e => panic!("{e:?}"),
        }
    }

    #[test]
    fn diagnostics_carry_positions() {
        let Error::Parse(d) = parse_problem("field Q\nring A = k[y / (y^2)\n").unwrap_err() else {
            panic!()
        };
        assert_eq!((d.line, d.column), (2, 14));
        assert!(d.expected.contains(&"']'".to_string()));

        let Error::Parse(d) = parse_problem("ring A = k[y] / (z)\n").unwrap_err() else {
            panic!()
        };
        assert!(d.message.contains("unknown variable"));

        let Error::Parse(d) = parse_problem("ring A = k[e] / (e^2)\ngraded G over A xvars [x0, x1] degrees [0] relations [[x0 + x1^2]]\n").unwrap_err() else {
            panic!()
        };
        assert!(d.message.contains("inhomogeneous"));
        assert_eq!(d.line, 2);

        assert!(matches!(parse_problem("field Fp 8\nring A = k[y]\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_problem("# nothing\n"), Err(Error::Parse(_))));
    }

    #[test]
    fn graded_fixture_builds() {
        let text = "field Q\nring A = k[e] / (e^2)\ngraded G over A xvars [x0, x1] degrees [0] relations [[e*x0]]\noption window = 0..6\n";
        let p = parse_problem(text).unwrap();
        let g = p.graded.as_ref().unwrap();
        assert_eq!(g.ring.vars, vec!["x0", "x1", "e"]);
        let gm = p.build().unwrap().graded.unwrap();
        assert_eq!(gm.rank(), 1);
        assert_eq!(crate::graded::graded_piece_dim(&gm, 1, 3), 5);
        assert_eq!(parse_problem(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn truncated_mode_builds_non_artinian_base() {
        let p = parse_problem("ring A = k[y, z] / (y*z)\nmodule M over A generators 1 relations []\noption mode = truncated 3\n").unwrap();
        let inst = p.build().unwrap();
        assert_eq!(inst.algebra.truncated_at(), Some(3));
        let q = parse_problem("ring A = k[y, z] / (y*z)\n").unwrap();
        assert!(matches!(q.build(), Err(Error::NotArtinian)));
    }

    #[test]
    fn fp_coefficients() {
        let p = parse_problem("field Fp 7\nring A = k[y] / (3/2*y^2 + 14*y^3)\n").unwrap();
        // 3/2 = 5 mod 7, and 14 vanishes
        assert_eq!(p.ring.ideal[0].to_string(), "5*y^2");
        assert!(parse_problem("field Fp 7\nring A = k[y] / (1/7*y^2)\n").is_err());
    }

    #[test]
    fn polynomial_lists() {
        let p = parse_problem(DUAL_NUMBERS).unwrap();
        let gens = parse_polynomials("y, 2*y^2 - y", &p.ring.ring).unwrap();
        assert_eq!(gens.len(), 2);
        assert!(parse_polynomials("y,", &p.ring.ring).is_err());
    }

    fn arb_poly(vars: &'static [&'static str]) -> impl Strategy<Value = String> {
        let term = (any::<bool>(), 0i64..6, 1i64..4, proptest::collection::vec((0..vars.len(), 0u32..4), 0..3))
            .prop_map(move |(neg, n, d, mons)| {
                let mut s = format!("{} {n}/{d}", if neg { "-" } else { "+" });
                for (v, e) in mons {
                    s.push_str(&format!("*{}^{e}", vars[v]));
                }
                s
            });
        proptest::collection::vec(term, 1..4).prop_map(|ts| ts.join(" "))
    }

    fn arb_problem() -> impl Strategy<Value = String> {
        (
            prop_oneof![Just("Q".to_string()), Just("Fp 5".to_string()), Just("Fp 101".to_string())],
            proptest::collection::vec(arb_poly(&["y", "z"]), 0..3),
            proptest::collection::vec(proptest::collection::vec(arb_poly(&["y", "z"]), 2), 0..3),
            proptest::collection::vec(-2i64..3, 1..3),
            prop_oneof![Just(None), (0usize..5).prop_map(Some)],
            prop_oneof![Just(None), (-3i64..3, 0i64..5).prop_map(Some)],
        )
            .prop_map(|(field, ideal, rels, degrees, mode, window)| {
                let mut s = format!("field {field}\nring A = k[y, z]");
                if !ideal.is_empty() {
                    // drop constants so the ring stays local
                    let gens: Vec<String> = ideal.iter().map(|g| format!("y*({g})")).collect();
                    s.push_str(&format!(" / ({})", gens.join(", ")));
                }
                s.push('\n');
                let cols: Vec<String> = rels.iter().map(|c| format!("[{}]", c.join(", "))).collect();
                s.push_str(&format!("module M over A generators 2 relations [{}]\n", cols.join(", ")));
                let d0 = degrees[0];
                let entries: Vec<String> = degrees
                    .iter()
                    .map(|d| {
                        let k = 2 + d0 - d;
                        if k >= 0 { format!("y*x0^{k}") } else { "0".into() }
                    })
                    .collect();
                let degs: Vec<String> = degrees.iter().map(|d| d.to_string()).collect();
                s.push_str(&format!(
                    "graded G over A xvars [x0, x1] degrees [{}] relations [[{}]]\n",
                    degs.join(", "),
                    entries.join(", ")
                ));
                if let Some(c) = mode {
                    s.push_str(&format!("option mode = enum {c}\n"));
                }
                if let Some((a, w)) = window {
                    s.push_str(&format!("option window = {a}..{}\n", a + w));
                }
                s
            })
    }

    proptest! {
        #[test]
        fn print_then_parse_is_identity(text in arb_problem()) {
            let p = parse_problem(&text).unwrap();
            let printed = p.to_string();
            let q = parse_problem(&printed).unwrap();
            prop_assert_eq!(&q, &p);
            prop_assert_eq!(q.to_string(), printed);
        }

        #[test]
        fn never_panics_on_bytes(bytes in proptest::collection::vec(any::<u8>(), 0..256)) {
            let _ = parse_problem(&String::from_utf8_lossy(&bytes));
        }
    }
}
