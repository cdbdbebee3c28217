use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("monomials of degrees {0} and {1} cannot be compared")]
    OrderUndefined(u32, u32),
    #[error("expected {expected} variables, found {found}")]
    VariableCount { expected: usize, found: usize },
    #[error("degree mismatch: expected {expected}, found {found}")]
    Degree { expected: u32, found: u32 },
    #[error("no spike of degree {n} in {h} variables (mu = {mu})")]
    NoSpike { h: usize, n: u32, mu: u32 },
    #[error("index {index} out of range (allowed {min}..={max})")]
    IndexOutOfRange { index: usize, min: usize, max: usize },
    #[error("{columns} monomials exceed the capacity limit of {limit}; pass force to override")]
    Capacity { columns: usize, limit: usize },
    #[error("degree {n} and variable count {h} have different parity")]
    Parity { h: usize, n: u32 },
    #[error("element is not annihilated by Sq^{0}")]
    NotAnnihilated(u32),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
