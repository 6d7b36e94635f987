//! Exact computer algebra for the bialgebra of packed words.
//!
//! The basis of this algebra in each degree `n` is the set `STₙ` of
//! surjections `[n] ↠ [r]`, written as *packed words* — sequences using
//! every value `1..=r` at least once. The crate provides:
//!
//! - [`words`]: the combinatorics of packed words — standardization,
//!   restriction, concatenation `×`, substitution, the irreducible and
//!   `·`-indecomposable factorizations, the `\` and `·` decompositions, and
//!   the right weak order.
//! - [`shuffles`]: enumeration of (quasi-)shuffle surjections `SH(n₁,…,n_p)`
//!   with block-end refinements, and the maximal elements `ε`.
//! - [`algebra`]: exact linear algebra over `ℤ[q]` — polynomial scalars,
//!   linear combinations of words, tensors, and rank computation over `ℚ(q)`
//!   or at a rational specialization of `q`.
//! - [`hopf`]: the coproduct `Δ̄`, the unital quasi-shuffle `*_q` with its
//!   q-tridendriform refinement `(≺_q, ≻_q, ·_q)`, the idempotent projector
//!   `E` onto primitives, and the brace operations `M₁ₙ`.
//! - [`freeness`]: the generator families `𝒟`, `𝒞`, `ℬ`, the normal-form
//!   morphisms `η` and `ψ`, brace/GV normal-form trees, and per-degree rank
//!   reports certifying freeness.
//! - [`checks`]: executable suites that verify every structural identity up
//!   to a degree bound and report minimal counterexamples, including under
//!   deliberate fault injection.
//!
//! Scalars are polynomials in a formal parameter `q` with integer
//! coefficients; every computation is exact.

pub mod algebra;
pub mod checks;
pub mod freeness;
pub mod hopf;
pub mod shuffles;
pub mod words;

pub use algebra::{
    rank_at, rank_at_int, rank_symbolic, AlgebraError, LinearCombination, QPolynomial,
    TensorCombination,
};
pub use checks::{run_suite, SuiteKind, SuiteReport};
pub use freeness::{
    br_factorization, brace_trees, freeness_report, gv_trees, prim_rank, BasisTables, BraceTree,
    FreeMorphisms, FreenessError, FreenessReport, GvTree,
};
pub use hopf::{
    augmented_coproduct, brace, coproduct, dendriform, dendriform_lc, eulerian_projector,
    is_primitive, reconstruct, shuffle_product, star, star_lc, tridendriform, tridendriform_lc,
    BracePair, DendKind, HopfError, Ops, TriKind,
};
pub use shuffles::{enumerate_shuffles, enumerate_stuffles, epsilon, BlockEndFilter, Stuffle};
pub use words::{all_surjections, all_surjections_with_arity, word, Surjection, Value, WordError};
