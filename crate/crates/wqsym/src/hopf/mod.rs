//! Bialgebra structure on packed words: coproduct, graded products,
//! primitive projector, and brace operations.
//!
//! The module splits along the four layers of structure:
//!
//! * [`coproduct`] — deconcatenation by values, its iterates, `Δ⁺`;
//! * [`products`] — quasi-shuffle `*`, the q-tridendriform triple, the
//!   dendriform pair at `q = 0`, all with exact `ℤ[q]` coefficients and a
//!   fault-injection hook ([`Ops`]) for the axiom suites;
//! * [`primitives`] — the idempotent `E` projecting onto primitives and the
//!   reconstruction identity;
//! * [`braces`] — `ω` folds and the brace operations `M₁ₙ` over either
//!   dendriform pair.

pub mod braces;
pub mod coproduct;
pub mod primitives;
pub mod products;

pub use braces::{brace, omega_prec, omega_succ, BracePair};
pub use coproduct::{
    augmented_coproduct, augmented_coproduct_lc, coproduct, coproduct_lc, expand_slot,
    is_primitive, reduced_power,
};
pub use primitives::{eulerian_lc, eulerian_projector, reconstruct};
pub use products::{
    concat_lc, dendriform, dendriform_lc, shuffle_product, star, star_lc, tridendriform,
    tridendriform_lc, weak_right_direct, DendKind, HopfError, Ops, TriKind,
};
