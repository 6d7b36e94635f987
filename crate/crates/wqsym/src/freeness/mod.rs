//! Generator bases, free-structure morphisms, normal-form trees, and the
//! rank reports verifying the freeness theorems.
//!
//! * [`bases`] — the per-degree tables `Irr`, `Indec`, `𝒟`, `𝒞`, `ℬ`;
//! * [`morphisms`] — `η` (brace morphism over `𝒟`) and `ψ^q` (GV morphism
//!   over `ℬ`), plus the greedy-rightmost `·`-factorization they rely on;
//! * [`trees`] — normal forms for the two free structures with word-level
//!   and bialgebra-level realizations;
//! * [`report`] — rank computations tying everything to `|Irrₙ|`.

pub mod bases;
pub mod morphisms;
pub mod report;
pub mod trees;

pub use bases::BasisTables;
pub use morphisms::{br_factorization, FreeMorphisms, FreenessError};
pub use report::{freeness_report, prim_rank, FreenessReport};
pub use trees::{brace_trees, gv_trees, BraceTree, GvTree};
