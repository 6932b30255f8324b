use alloc::string::String;
use thiserror::Error;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parameter out of range for {algebra}: requires {bound}")]
    ParameterRange {
        algebra: String,
        bound: &'static str,
    },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("{root} is not a root of {algebra}")]
    NotARoot { root: String, algebra: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("constraint violated: {0}")]
    Constraint(String),
    #[error("not a Π-system: {0}")]
    NotPiSystem(String),
    #[error("unrecognized cominuscule position: {0}")]
    UnrecognizedCominuscule(String),
    #[error("not a valid Cartan type: {0}")]
    CartanType(String),
    #[error("outside the domain of definition: {0}")]
    Domain(String),
    #[error("ill-typed map: {0}")]
    IllTyped(String),
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;
