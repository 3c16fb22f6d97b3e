use thiserror::Error;

use crate::complex::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("indices must be distinct, got {0} more than once")]
    RepeatedIndex(u32),

    #[error("component index {index} is outside 1..={n}")]
    ComponentOutOfRange { index: u32, n: usize },

    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },

    #[error("invalid C-complex ({} violation(s)): {}", .0.len(), display_violations(.0))]
    InvalidComplex(Vec<Violation>),

    #[error("bounds are only available for 2 or 3 components, got {0}")]
    UnsupportedComponents(usize),

    #[error("{what} {value} is above the configured cap {cap}")]
    CapExceeded { what: &'static str, value: usize, cap: usize },

    #[error("{0}")]
    OutOfDomain(String),
}

fn display_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}
