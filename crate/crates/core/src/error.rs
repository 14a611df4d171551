use thiserror::Error;

use crate::rla::Violation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported prime {0}; supported primes are 2, 3, 5, 7")]
    UnsupportedPrime(u32),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u8, right: u8 },

    #[error("size cap exceeded: {what} has dimension {dim}, cap is {cap}")]
    SizeCap { what: String, dim: u64, cap: u64 },

    #[error("restricted Lie algebra axioms violated: {}", format_violations(.0))]
    Axiom(Vec<Violation>),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("line {line}: unknown basis name `{name}`")]
    UnknownName { line: usize, name: String },

    #[error("not p-nilpotent: {0}")]
    NotPNilpotent(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid structure data: {0}")]
    Invalid(String),
}

fn format_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
