//! Public Good index and value computations for simple games, TU games and
//! (j,k) simple games.
//!
//! Every game is stored as an explicit table and every index value is an
//! exact rational, so results are reproducible bit for bit.

pub mod algebra;
pub mod average;
pub mod critical;
mod error;
pub mod file;
pub mod game;
pub mod indices;
pub mod random;

pub use error::{Error, Result};
pub use game::{Coalition, JKGame, Profile, SimpleGame, TUGame, WeightedRule};

/// Exact rational number used for worths and index values.
pub type Rational = num_rational::BigRational;

/// Default upper bound on the number of table entries (`j^n` or `2^n`).
pub const DEFAULT_CAP: usize = 1 << 24;

pub(crate) fn int(value: impl Into<num_bigint::BigInt>) -> Rational {
    Rational::from_integer(value.into())
}
