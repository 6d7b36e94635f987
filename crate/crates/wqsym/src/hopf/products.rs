//! The graded products on `K[ST]`: quasi-shuffle `*`, the q-tridendriform
//! triple `(≻_q, ·_q, ≺_q)`, the derived `≽_q = q·_q + ≻_q`, and the
//! dendriform pair at `q = 0`.
//!
//! Every product is a sum `Σ_f w(f) · f∘(x×y)` over a refined (stuffle or
//! shuffle) set for the composition `(r, s)` of the two arities, where `f`
//! relabels the *values* of the concatenation and the weight is a power of
//! `q` in the defect of `f`. The [`Ops`] handle owns the enumeration so the
//! test harness can inject a deliberate fault (dropping one map from one
//! product's set) and watch the axiom suites catch it.

use thiserror::Error;

use crate::algebra::{LinearCombination, QPolynomial};
use crate::shuffles::{enumerate_shuffles, enumerate_stuffles, BlockEndFilter, Stuffle};
use crate::words::Surjection;

/// Errors raised by bialgebra-level operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    /// A word-level product was asked to multiply an empty word.
    #[error("product requires nonempty words")]
    EmptyOperand,
    /// `1 ∘ 1` for `∘ ∈ {≺, ·, ≻, ≽}`: no coherent unit extension exists.
    #[error("the unit has no coherent image under this operation")]
    UndefinedUnit,
}

/// The three partial products of the q-tridendriform structure plus the
/// derived weak-right combination.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriKind {
    /// `≺_q`: weight `q^{s(f)}` over `SH^≺`.
    Left,
    /// `·_q`: weight `q^{s(f)−1}` over `SH^•`.
    Middle,
    /// `≻_q`: weight `q^{s(f)}` over `SH^≻`.
    Right,
    /// `≽_q = q·_q + ≻_q`.
    WeakRight,
}

/// The dendriform pair at `q = 0` (shuffle-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DendKind {
    Left,
    Right,
}

/// Product-set provider. [`Ops::exact`] is the faithful structure;
/// [`Ops::with_fault`] drops the last map (canonical order) from every
/// enumeration feeding the chosen product, which must make the axiom suites
/// fail — a sanity check that they can detect wrong structure constants.
#[derive(Debug, Clone, Default)]
pub struct Ops {
    fault: Option<TriKind>,
}

impl Ops {
    pub fn exact() -> Self {
        Ops { fault: None }
    }

    pub fn with_fault(kind: TriKind) -> Self {
        assert!(
            kind != TriKind::WeakRight,
            "≽ is derived; inject the fault into ≻ or ·"
        );
        Ops { fault: Some(kind) }
    }

    pub fn fault(&self) -> Option<TriKind> {
        self.fault
    }

    fn stuffle_maps(&self, kind: TriKind, r: usize, s: usize) -> Vec<Stuffle> {
        let filter = match kind {
            TriKind::Left => BlockEndFilter::Left,
            TriKind::Middle => BlockEndFilter::Merged,
            TriKind::Right => BlockEndFilter::Right,
            TriKind::WeakRight => BlockEndFilter::WeakRight,
        };
        let mut maps = enumerate_stuffles(&[r, s], filter);
        if self.fault == Some(kind) {
            maps.pop();
        }
        maps
    }

    fn shuffle_maps(&self, kind: DendKind, r: usize, s: usize) -> Vec<Surjection> {
        let filter = match kind {
            DendKind::Left => BlockEndFilter::Left,
            DendKind::Right => BlockEndFilter::Right,
        };
        let mut maps = enumerate_shuffles(&[r, s], filter);
        let faulted = match kind {
            DendKind::Left => self.fault == Some(TriKind::Left),
            DendKind::Right => self.fault == Some(TriKind::Right),
        };
        if faulted {
            maps.pop();
        }
        maps
    }
}

fn relabeled(f: &Surjection, x: &Surjection, y: &Surjection) -> Surjection {
    f.compose(&x.concat(y))
}

/// One q-tridendriform product of two nonempty words, with exact `ℤ[q]`
/// coefficients.
pub fn tridendriform(
    ops: &Ops,
    x: &Surjection,
    y: &Surjection,
    kind: TriKind,
) -> Result<LinearCombination, HopfError> {
    if x.is_empty() || y.is_empty() {
        return Err(HopfError::EmptyOperand);
    }
    if kind == TriKind::WeakRight {
        let mut out = tridendriform(ops, x, y, TriKind::Right)?;
        let middle = tridendriform(ops, x, y, TriKind::Middle)?;
        out.add_assign_scaled(&middle, &QPolynomial::q());
        return Ok(out);
    }
    let (r, s) = (x.arity() as usize, y.arity() as usize);
    let mut out = LinearCombination::zero();
    for st in ops.stuffle_maps(kind, r, s) {
        let exponent = match kind {
            TriKind::Middle => st.defect() - 1,
            _ => st.defect(),
        };
        out.add_term(
            relabeled(&st.map, x, y),
            &QPolynomial::monomial(1, exponent),
        );
    }
    Ok(out)
}

/// `≽_q` enumerated directly over `SH^≽` with weight `q^{s(f)}`; the axiom
/// suite checks this against the composite `q·_q + ≻_q`.
pub fn weak_right_direct(x: &Surjection, y: &Surjection) -> Result<LinearCombination, HopfError> {
    if x.is_empty() || y.is_empty() {
        return Err(HopfError::EmptyOperand);
    }
    let (r, s) = (x.arity() as usize, y.arity() as usize);
    let mut out = LinearCombination::zero();
    for st in enumerate_stuffles(&[r, s], BlockEndFilter::WeakRight) {
        out.add_term(
            relabeled(&st.map, x, y),
            &QPolynomial::monomial(1, st.defect()),
        );
    }
    Ok(out)
}

/// One dendriform product (`q = 0` structure) of two nonempty words: a plain
/// sum over the refined shuffle set.
pub fn dendriform(
    ops: &Ops,
    x: &Surjection,
    y: &Surjection,
    kind: DendKind,
) -> Result<LinearCombination, HopfError> {
    if x.is_empty() || y.is_empty() {
        return Err(HopfError::EmptyOperand);
    }
    let (r, s) = (x.arity() as usize, y.arity() as usize);
    let mut out = LinearCombination::zero();
    for f in ops.shuffle_maps(kind, r, s) {
        out.add_term(relabeled(&f, x, y), &QPolynomial::one());
    }
    Ok(out)
}

/// The shuffle product `x*y = Σ_{f∈Sh(r,s)} f∘(x×y)`: the associative
/// product of the dendriform structure at `q = 0`.
pub fn shuffle_product(x: &Surjection, y: &Surjection) -> Result<LinearCombination, HopfError> {
    if x.is_empty() || y.is_empty() {
        return Err(HopfError::EmptyOperand);
    }
    let (r, s) = (x.arity() as usize, y.arity() as usize);
    let mut out = LinearCombination::zero();
    for f in enumerate_shuffles(&[r, s], BlockEndFilter::All) {
        out.add_term(relabeled(&f, x, y), &QPolynomial::one());
    }
    Ok(out)
}

/// The quasi-shuffle product `x *_q y = Σ_{f∈SH(r,s)} q^{s(f)} f∘(x×y)`,
/// which equals `≽_q + ≺_q`: the associative product the bialgebra
/// compatibilities refer to. Specializes to [`shuffle_product`] at `q = 0`.
pub fn star(x: &Surjection, y: &Surjection) -> Result<LinearCombination, HopfError> {
    if x.is_empty() || y.is_empty() {
        return Err(HopfError::EmptyOperand);
    }
    let (r, s) = (x.arity() as usize, y.arity() as usize);
    let mut out = LinearCombination::zero();
    for st in enumerate_stuffles(&[r, s], BlockEndFilter::All) {
        out.add_term(
            relabeled(&st.map, x, y),
            &QPolynomial::monomial(1, st.defect()),
        );
    }
    Ok(out)
}

/// How a bilinear product treats terms carrying the unit (empty word).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum UnitRule {
    /// `x ≺ 1 = x`, `1 ≺ x = 0`.
    KeepLeft,
    /// `1 ≻ x = x`, `x ≻ 1 = 0` (also the `≽` convention).
    KeepRight,
    /// `x · 1 = 1 · x = 0`.
    Kill,
    /// `1 * x = x * 1 = x`, `1 * 1 = 1`.
    Unital,
}

fn bilinear(
    a: &LinearCombination,
    b: &LinearCombination,
    rule: UnitRule,
    mut product: impl FnMut(&Surjection, &Surjection) -> Result<LinearCombination, HopfError>,
) -> Result<LinearCombination, HopfError> {
    let mut out = LinearCombination::zero();
    for (u, cu) in a.terms() {
        for (v, cv) in b.terms() {
            let coeff = cu * cv;
            match (u.is_empty(), v.is_empty()) {
                (false, false) => out.add_assign_scaled(&product(u, v)?, &coeff),
                (true, true) => match rule {
                    UnitRule::Unital => out.add_term(Surjection::empty(), &coeff),
                    _ => return Err(HopfError::UndefinedUnit),
                },
                (true, false) => match rule {
                    UnitRule::KeepRight | UnitRule::Unital => out.add_term(v.clone(), &coeff),
                    UnitRule::KeepLeft | UnitRule::Kill => {}
                },
                (false, true) => match rule {
                    UnitRule::KeepLeft | UnitRule::Unital => out.add_term(u.clone(), &coeff),
                    UnitRule::KeepRight | UnitRule::Kill => {}
                },
            }
        }
    }
    Ok(out)
}

/// Bilinear extension of a q-tridendriform product, honoring the partial
/// unit conventions on empty-word terms.
pub fn tridendriform_lc(
    ops: &Ops,
    a: &LinearCombination,
    b: &LinearCombination,
    kind: TriKind,
) -> Result<LinearCombination, HopfError> {
    let rule = match kind {
        TriKind::Left => UnitRule::KeepLeft,
        TriKind::Middle => UnitRule::Kill,
        TriKind::Right | TriKind::WeakRight => UnitRule::KeepRight,
    };
    bilinear(a, b, rule, |u, v| tridendriform(ops, u, v, kind))
}

/// Bilinear extension of a dendriform product with unit conventions.
pub fn dendriform_lc(
    ops: &Ops,
    a: &LinearCombination,
    b: &LinearCombination,
    kind: DendKind,
) -> Result<LinearCombination, HopfError> {
    let rule = match kind {
        DendKind::Left => UnitRule::KeepLeft,
        DendKind::Right => UnitRule::KeepRight,
    };
    bilinear(a, b, rule, |u, v| dendriform(ops, u, v, kind))
}

/// Bilinear quasi-shuffle product on the augmented module (`1` is a genuine
/// unit here).
pub fn star_lc(
    a: &LinearCombination,
    b: &LinearCombination,
) -> Result<LinearCombination, HopfError> {
    bilinear(a, b, UnitRule::Unital, star)
}

/// Bilinear concatenation on the augmented module (`1` acts as the unit).
pub fn concat_lc(a: &LinearCombination, b: &LinearCombination) -> LinearCombination {
    let mut out = LinearCombination::zero();
    for (u, cu) in a.terms() {
        for (v, cv) in b.terms() {
            out.add_term(u.concat(v), &(cu * cv));
        }
    }
    out
}
