//! The JSON report, the single machine-readable output.
//!
//! Keys are emitted in a fixed order and every rational is a `"p/q"` string
//! in lowest terms, so two runs on the same input differ only in
//! `timing_ms`.

use num_rational::BigRational;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::criterion::{Evidence, FlatnessVerdict, ProfileRow, Status, Witness};
use crate::graded::VarpiPolynomial;
use crate::scalar::rational_string;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProfileEntry {
    pub n: usize,
    pub colength: usize,
    pub fiber_dim: usize,
    pub varpi: String,
}

impl From<&ProfileRow> for ProfileEntry {
    fn from(r: &ProfileRow) -> Self {
        ProfileEntry {
            n: r.order,
            colength: r.colength,
            fiber_dim: r.fiber_dim,
            varpi: rational_string(&r.varpi),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolynomialEntry {
    pub n: usize,
    /// Constant term first.
    pub coeffs: Vec<String>,
    pub threshold: i64,
}

impl From<&VarpiPolynomial> for PolynomialEntry {
    fn from(p: &VarpiPolynomial) -> Self {
        PolynomialEntry {
            n: p.order,
            coeffs: rationals(&p.coefficients),
            threshold: p.threshold,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorEntry {
    pub ideal: String,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessEntry {
    Neighborhood {
        n: usize,
        colength: usize,
        fiber_dim: usize,
        varpi: String,
        varpi_base: String,
    },
    Ideal {
        ideal: String,
        colength: usize,
        fiber_dim: usize,
        expected: usize,
    },
    Polynomial {
        n: usize,
        base: Vec<String>,
        at: Vec<String>,
    },
}

impl From<&Witness> for WitnessEntry {
    fn from(w: &Witness) -> Self {
        match w {
            Witness::Neighborhood {
                order,
                colength,
                fiber_dim,
                varpi,
                varpi_base,
            } => WitnessEntry::Neighborhood {
                n: *order,
                colength: *colength,
                fiber_dim: *fiber_dim,
                varpi: rational_string(varpi),
                varpi_base: rational_string(varpi_base),
            },
            Witness::Ideal {
                display,
                colength,
                fiber_dim,
                expected,
                ..
            } => WitnessEntry::Ideal {
                ideal: display.clone(),
                colength: *colength,
                fiber_dim: *fiber_dim,
                expected: *expected,
            },
            Witness::Polynomial { order, base, at } => WitnessEntry::Polynomial {
                n: *order,
                base: rationals(base),
                at: rationals(at),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub version: String,
    pub input_digest: String,
    /// `Flat`, `NotFlat`, `FlatUpToOrder`, or null for commands without a verdict.
    pub verdict: Option<String>,
    /// The order bound of a `FlatUpToOrder` verdict.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessEntry>,
    pub profile: Vec<ProfileEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polynomials: Option<Vec<PolynomialEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tor: Option<TorEntry>,
    pub oracle_agreement: bool,
    pub timing_ms: u64,
}

pub fn rationals(v: &[BigRational]) -> Vec<String> {
    v.iter().map(rational_string).collect()
}

/// Lowercase hex SHA-256 of the input bytes.
pub fn digest(input: &[u8]) -> String {
    hex::encode(Sha256::digest(input))
}

impl Report {
    pub fn new(input: &[u8]) -> Self {
        Report {
            version: VERSION.to_string(),
            input_digest: digest(input),
            verdict: None,
            max_order: None,
            witness: None,
            profile: Vec::new(),
            polynomials: None,
            tor: None,
            oracle_agreement: true,
            timing_ms: 0,
        }
    }

    pub fn set_verdict(&mut self, v: &FlatnessVerdict) {
        self.verdict = Some(v.status.label().to_string());
        if let Status::FlatUpToOrder(n) = v.status {
            self.max_order = Some(n);
        }
        self.witness = v.witness.as_ref().map(WitnessEntry::from);
        match &v.evidence {
            Evidence::Profile(p) => self.profile = p.rows.iter().map(ProfileEntry::from).collect(),
            Evidence::Polynomials(ps) => self.polynomials = Some(ps.iter().map(PolynomialEntry::from).collect()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// Plain-text rendering of the same content.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        if let Some(v) = &self.verdict {
            match self.max_order {
                Some(n) => out.push_str(&format!("verdict: {v} (orders 0..={n})\n")),
                None => out.push_str(&format!("verdict: {v}\n")),
            }
        }
        if let Some(w) = &self.witness {
            let line = match w {
                WitnessEntry::Neighborhood {
                    n, varpi, varpi_base, ..
                } => format!("witness: n = {n}, varpi = {varpi} but varpi(0) = {varpi_base}"),
                WitnessEntry::Ideal {
                    ideal,
                    fiber_dim,
                    expected,
                    ..
                } => format!("witness: ideal {ideal}, fiber dim {fiber_dim} but expected {expected}"),
                WitnessEntry::Polynomial { n, base, at } => {
                    format!("witness: n = {n}, varpi = [{}] but at n = 0 [{}]", at.join(", "), base.join(", "))
                }
            };
            out.push_str(&line);
            out.push('\n');
        }
        if !self.profile.is_empty() {
            out.push_str("n\tcolength\tfiber_dim\tvarpi\n");
            for r in &self.profile {
                out.push_str(&format!("{}\t{}\t{}\t{}\n", r.n, r.colength, r.fiber_dim, r.varpi));
            }
        }
        if let Some(ps) = &self.polynomials {
            out.push_str("n\tthreshold\tcoefficients (constant first)\n");
            for p in ps {
                out.push_str(&format!("{}\t{}\t[{}]\n", p.n, p.threshold, p.coeffs.join(", ")));
            }
        }
        if let Some(t) = &self.tor {
            out.push_str(&format!("Tor_1(A/{}, M) = {}\n", t.ideal, t.dim));
        }
        out.push_str(&format!(
            "oracle agreement: {}\n",
            if self.oracle_agreement { "yes" } else { "NO" }
        ));
        out
    }
}
