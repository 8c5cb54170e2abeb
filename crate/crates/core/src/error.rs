use std::fmt;

use thiserror::Error;

/// A parse or semantic problem located in the input text (1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub column: usize,
    pub message: String,
    /// Tokens that would have been accepted at this position (syntax errors only).
    pub expected: Vec<String>,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected one of: {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomials live in different rings")]
    VariableMismatch,
    #[error("leading term of the zero polynomial")]
    ZeroPolynomial,
    #[error("free module rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("quotient is infinite-dimensional")]
    InfiniteDimensional,
    #[error("defining ideal is not zero-dimensional at the origin (not Artinian)")]
    NotArtinian,
    #[error("algebra is not local at the origin: {0}")]
    NotLocalAtOrigin(String),
    #[error("ideal contains a unit")]
    UnitIdeal,
    #[error("mode unsupported: {0}")]
    ModeUnsupported(String),
    #[error("oracle disagreement: {0}")]
    Disagreement(String),
    #[error("bad cofiltration chain: {0}")]
    BadChain(String),
    #[error("Hilbert function does not stabilize inside window {lo}..{hi}")]
    WindowTooSmall { lo: i64, hi: i64 },
    #[error("relation column {column} is not homogeneous in the x-variables")]
    Inhomogeneous { column: usize },
    #[error("invalid field: {0}")]
    BadField(String),
    #[error("{0}")]
    Parse(Diagnostic),
    #[error("export: {0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
