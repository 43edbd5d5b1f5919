use std::path::PathBuf;

use thiserror::Error;

/// Failures while parsing the canonical text forms.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("malformed number `{0}`")]
    BadNumber(String),
    #[error("malformed term `{0}`")]
    BadTerm(String),
    #[error("unbalanced parentheses in `{0}`")]
    Unbalanced(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
}

#[derive(Debug, Error)]
pub enum GroebnerError {
    #[error("no nonzero generators given")]
    EmptyInput,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("generators must have rational coefficients")]
    NonRationalGenerator,
    #[error("time budget exhausted after {reductions} reductions ({pending} pairs pending)")]
    BudgetExceeded { reductions: usize, pending: usize },
    #[error("cache file {path}: {reason}")]
    Cache { path: PathBuf, reason: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymplecticError {
    #[error("unsupported genus {0}; expected 1, 2 or 3")]
    UnsupportedG(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CensusError {
    #[error("curve y^2 = x^3 + {a}x + {b} is singular")]
    Singular { a: i64, b: i64 },
    #[error("bad reduction at p = {0}")]
    BadReduction(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid census range: x_max = {0} (need at least 5)")]
    Range(u64),
    #[error("residue degree must be at least 1")]
    InvalidDegree,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ForgeError {
    #[error("identity mismatch at {monomial}: expected multiple of {expected}, found {actual}")]
    IdentityMismatch { monomial: String, expected: String, actual: String },
}
