//! Coefficient arithmetic in `ℤ[q]`, free-module linear combinations over
//! packed words, tensor combinations, and exact rank computation.

mod lincomb;
mod qpoly;
mod rank;

pub use lincomb::{LinearCombination, TensorCombination};
pub use qpoly::{bigint_json, QPolynomial};
pub use rank::{rank_at, rank_at_int, rank_symbolic, AlgebraError};
