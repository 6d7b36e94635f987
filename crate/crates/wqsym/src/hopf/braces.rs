//! Brace operations built from a dendriform pair.
//!
//! For a dendriform pair `(≻, ≺)` the half-products fold into
//! `ω^≺(y₁,…,y_r) = y₁ ≺ (y₂ ≺ (… ≺ y_r))` (right-nested) and
//! `ω^≻(y₁,…,y_r) = ((y₁ ≻ y₂) ≻ …) ≻ y_r` (left-nested), and the brace is
//!
//! `M₁ₙ(x; y₁,…,yₙ) = Σ_{r=0}^n (−1)^r ω^≺(y₁,…,y_r) ≻ x ≺ ω^≻(y_{r+1},…,yₙ)`
//!
//! with the empty fold acting as the unit on its side. Two pairs matter
//! here: `(≻, ≺)` at `q = 0` (shuffle dendriform) and `(≽_q, ≺_q)` for
//! generic `q`; the brace over the latter is compatible with `·_q` in the
//! Gerstenhaber–Voronov sense.

use crate::algebra::{LinearCombination, QPolynomial};

use super::products::{dendriform_lc, tridendriform_lc, DendKind, HopfError, Ops, TriKind};

/// Which dendriform pair the brace operations fold over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BracePair {
    /// `(≻, ≺)` at `q = 0`.
    AtZero,
    /// `(≽_q, ≺_q)` with exact `ℤ[q]` coefficients.
    Symbolic,
}

fn pair_succ(
    ops: &Ops,
    pair: BracePair,
    a: &LinearCombination,
    b: &LinearCombination,
) -> Result<LinearCombination, HopfError> {
    match pair {
        BracePair::AtZero => dendriform_lc(ops, a, b, DendKind::Right),
        BracePair::Symbolic => tridendriform_lc(ops, a, b, TriKind::WeakRight),
    }
}

fn pair_prec(
    ops: &Ops,
    pair: BracePair,
    a: &LinearCombination,
    b: &LinearCombination,
) -> Result<LinearCombination, HopfError> {
    match pair {
        BracePair::AtZero => dendriform_lc(ops, a, b, DendKind::Left),
        BracePair::Symbolic => tridendriform_lc(ops, a, b, TriKind::Left),
    }
}

/// Right-nested fold `ω^≺(y₁,…,y_r)`; `r ≥ 1`.
pub fn omega_prec(
    ops: &Ops,
    pair: BracePair,
    ys: &[LinearCombination],
) -> Result<LinearCombination, HopfError> {
    assert!(!ys.is_empty(), "ω^≺ needs at least one argument");
    let mut acc = ys[ys.len() - 1].clone();
    for y in ys[..ys.len() - 1].iter().rev() {
        acc = pair_prec(ops, pair, y, &acc)?;
    }
    Ok(acc)
}

/// Left-nested fold `ω^≻(y₁,…,y_r)`; `r ≥ 1`.
pub fn omega_succ(
    ops: &Ops,
    pair: BracePair,
    ys: &[LinearCombination],
) -> Result<LinearCombination, HopfError> {
    assert!(!ys.is_empty(), "ω^≻ needs at least one argument");
    let mut acc = ys[0].clone();
    for y in &ys[1..] {
        acc = pair_succ(ops, pair, &acc, y)?;
    }
    Ok(acc)
}

/// The brace operation `M₁ₙ(x; y₁,…,yₙ)`; `M₁₀ = Id`.
pub fn brace(
    ops: &Ops,
    pair: BracePair,
    x: &LinearCombination,
    ys: &[LinearCombination],
) -> Result<LinearCombination, HopfError> {
    let n = ys.len();
    let mut out = LinearCombination::zero();
    for r in 0..=n {
        // Bracket right-to-left; (a ≻ b) ≺ c = a ≻ (b ≺ c) makes the
        // grouping immaterial.
        let mut term = x.clone();
        if r < n {
            let right = omega_succ(ops, pair, &ys[r..])?;
            term = pair_prec(ops, pair, &term, &right)?;
        }
        if r > 0 {
            let left = omega_prec(ops, pair, &ys[..r])?;
            term = pair_succ(ops, pair, &left, &term)?;
        }
        let sign = QPolynomial::constant(if r % 2 == 0 { 1 } else { -1 });
        out.add_assign_scaled(&term, &sign);
    }
    Ok(out)
}
