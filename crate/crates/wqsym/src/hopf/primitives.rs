//! The idempotent projector `E` onto the primitive part.
//!
//! `E(x) = Σ_{l̲} (−1)^{p(l̲)} x^{l̲}`, summing over all value-cut tuples
//! `0 < l₁ < … < l_p < r` (including the empty tuple, which contributes
//! `+x`), where `x^{l̲}` glues the corestrictions of `x` to the cut
//! intervals back together by concatenation. `E` kills concatenation
//! products, fixes primitives, and together with `Δ̄^j` reconstructs the
//! identity: `Id = Σ_j ×^j ∘ E^{⊗j} ∘ Δ̄^j`.

use crate::algebra::{LinearCombination, QPolynomial, TensorCombination};
use crate::words::{Surjection, Value};

use super::coproduct::reduced_power;

/// `E(x)` for a nonempty word `x`, exact over `ℤ`.
pub fn eulerian_projector(x: &Surjection) -> LinearCombination {
    assert!(!x.is_empty(), "E is defined on nonempty words");
    let r = x.arity();
    let inner: Vec<Value> = (1..r).collect();
    let mut out = LinearCombination::zero();
    for mask in 0u64..(1 << inner.len()) {
        let cuts: Vec<Value> = inner
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &l)| l)
            .collect();
        let sign = if cuts.len().is_multiple_of(2) { 1 } else { -1 };
        out.add_term(
            x.value_split(&cuts)
                .expect("cuts are strictly increasing in range"),
            &QPolynomial::constant(sign),
        );
    }
    out
}

/// Linear extension of [`eulerian_projector`]; empty-word terms are killed.
pub fn eulerian_lc(a: &LinearCombination) -> LinearCombination {
    let mut out = LinearCombination::zero();
    for (w, c) in a.terms() {
        if w.is_empty() {
            continue;
        }
        out.add_assign_scaled(&eulerian_projector(w), c);
    }
    out
}

/// `×^j ∘ E^{⊗j}` applied to a `j`-slot tensor: project every slot with `E`
/// and concatenate the results.
fn concat_projected(t: &TensorCombination) -> LinearCombination {
    let mut out = LinearCombination::zero();
    for (factors, c) in t.terms() {
        let mut pieces = LinearCombination::unit();
        for f in factors {
            let projected = eulerian_projector(f);
            let mut next = LinearCombination::zero();
            for (u, cu) in pieces.terms() {
                for (v, cv) in projected.terms() {
                    next.add_term(u.concat(v), &(cu * cv));
                }
            }
            pieces = next;
        }
        out.add_assign_scaled(&pieces, c);
    }
    out
}

/// Evaluates `Σ_{j≥1} ×^j ∘ E^{⊗j} ∘ Δ̄^j` on `a`; equals `a` identically.
pub fn reconstruct(a: &LinearCombination) -> LinearCombination {
    let mut out = LinearCombination::zero();
    let max_arity = a.words().map(|w| w.arity() as usize).max().unwrap_or(0);
    for j in 1..=max_arity {
        out.add_assign_scaled(&concat_projected(&reduced_power(a, j)), &QPolynomial::one());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::coproduct::is_primitive;
    use crate::words::{all_surjections, word};

    fn lc(entries: &[(&[u32], i64)]) -> LinearCombination {
        let mut out = LinearCombination::zero();
        for (w, c) in entries {
            out.add_term(word(w), &QPolynomial::constant(*c));
        }
        out
    }

    #[test]
    fn projector_golden_values() {
        assert_eq!(
            eulerian_projector(&word(&[2, 3, 1])),
            lc(&[(&[2, 3, 1], 1), (&[2, 1, 3], -1)])
        );
        assert_eq!(
            eulerian_projector(&word(&[1, 2, 1])),
            lc(&[(&[1, 2, 1], 1), (&[1, 1, 2], -1)])
        );
        assert_eq!(
            eulerian_projector(&word(&[2, 3, 4, 1])),
            lc(&[(&[2, 3, 4, 1], 1), (&[2, 3, 1, 4], -1)])
        );
        assert_eq!(
            eulerian_projector(&word(&[2, 4, 3, 1])),
            lc(&[
                (&[2, 4, 3, 1], 1),
                (&[2, 1, 4, 3], -1),
                (&[2, 1, 3, 4], 1),
                (&[2, 3, 1, 4], -1),
            ])
        );
        // Arity-1 words are fixed outright.
        assert_eq!(eulerian_projector(&word(&[1, 1])), lc(&[(&[1, 1], 1)]));
    }

    #[test]
    fn projector_is_idempotent_small() {
        for n in 1..=4 {
            for x in all_surjections(n) {
                let e = eulerian_projector(&x);
                assert_eq!(eulerian_lc(&e), e, "E∘E ≠ E at {x}");
            }
        }
    }

    #[test]
    fn projector_kills_concatenations() {
        for (a, b) in [
            (word(&[1]), word(&[1])),
            (word(&[1, 2]), word(&[1])),
            (word(&[1, 1]), word(&[2, 1])),
            (word(&[2, 1, 2]), word(&[1, 2])),
        ] {
            let x = a.concat(&b);
            assert!(eulerian_projector(&x).is_zero(), "E({a} × {b}) ≠ 0");
        }
    }

    #[test]
    fn projector_image_is_primitive() {
        for n in 1..=4 {
            for x in all_surjections(n) {
                assert!(is_primitive(&eulerian_projector(&x)), "Δ̄(E({x})) ≠ 0");
            }
        }
    }

    #[test]
    fn reconstruction_small() {
        for n in 1..=4 {
            for x in all_surjections(n) {
                let a = LinearCombination::from_word(x.clone());
                assert_eq!(reconstruct(&a), a, "reconstruction fails at {x}");
            }
        }
    }
}
