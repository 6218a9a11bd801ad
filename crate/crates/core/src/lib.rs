//! Exact computation in the ring of polysymmetric functions.
//!
//! Expressions live in one of nine bases: the pure tensor bases built from
//! `m, h, e, p, s` and the non-pure bases `P, H, E+, E`. Transition matrices
//! between them come from combinatorial rules and can be checked against a
//! brute-force monomial expansion.

pub mod bricks;
pub mod convert;
pub mod error;
pub mod linalg;
pub mod matrix;
pub mod monomial_rules;
pub mod oracle;
pub mod partition;
pub mod polysym;
pub mod power_rules;
pub mod rational;
pub mod schur_rules;
pub mod shapes;
pub mod sym;
pub mod types;

pub use convert::{convert, multiply, transition, Engine};
pub use error::{Error, Result};
pub use matrix::{ClassicalMatrix, PolyMatrix, TransitionMatrix};
pub use partition::Partition;
pub use polysym::{Basis, PolyExpr};
pub use rational::Rational;
pub use sym::{ClassicalBasis, SymExpr};
pub use types::{Block, BlockSequence, SplitType};
