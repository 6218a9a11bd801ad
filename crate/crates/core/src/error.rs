use thiserror::Error;

use crate::polysym::Basis;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("invalid block {degree}^{mult}: degree and multiplicity must be positive")]
    InvalidBlock { degree: usize, mult: usize },

    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("inner shape {inner:?} is not contained in outer shape {outer:?}")]
    NotContained {
        outer: Vec<usize>,
        inner: Vec<usize>,
    },

    #[error("expression is not homogeneous of degree {expected}")]
    NotHomogeneous { expected: usize },

    #[error("expected an expression in basis {expected}, found {found}")]
    BasisMismatch { expected: Basis, found: Basis },

    #[error("no registered conversion from {from} to {to}")]
    NoPath { from: Basis, to: Basis },

    #[error("variable width {width} is too small for degree cap {cap}")]
    WidthTooSmall { width: usize, cap: usize },

    #[error("polynomial is not symmetric within each variable degree")]
    Asymmetric,

    #[error("singular linear system")]
    Singular,

    #[error("weight mismatch: {0}")]
    WeightMismatch(String),

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
