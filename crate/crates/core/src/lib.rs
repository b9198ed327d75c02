//! Computational commutative algebra toolkit centered on generic initial
//! ideals (gin) in the degrevlex order and the invariants that can be read
//! off them: codimension and codepth bounds, sporadic zeros, regularity,
//! saturation degree, reduction numbers, and Hilbert function growth.
//!
//! The coefficient side is deliberately small: a prime field `F_p` (default
//! p = 32003) standing in for characteristic zero, plus exact rationals for
//! cross-checks. Everything downstream of a Groebner basis (Hilbert series,
//! Borel combinatorics, truncation pipelines) is exact integer arithmetic.

pub mod borel;
pub mod change;
pub mod exec;
pub mod field;
pub mod gin;
pub mod growth;
pub mod hilbert;
pub mod groebner;
pub mod ideal_ops;
pub mod linalg;
pub mod monomial;
pub mod monomial_ideal;
pub mod order;
pub mod parse;
pub mod points;
pub mod poly;
pub mod reduction;
pub mod report;
pub mod wlp;

/// Errors shared across the crate. Parse errors carry source positions so
/// the CLI can report them; theorem violations are kept distinct from
/// ordinary computation failures because they map to a different exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    Parse { line: usize, col: usize, msg: String },
    Computation(String),
    TheoremViolation(String),
}

impl std::fmt::Display for Error {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Error::Parse { line, col, msg } => {
                write!(f, "parse error at line {line}, column {col}: {msg}")
            }
            Error::Computation(msg) => write!(f, "computation error: {msg}"),
            Error::TheoremViolation(msg) => write!(f, "theorem assertion failed: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
