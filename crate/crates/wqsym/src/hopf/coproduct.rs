//! The deconcatenation-by-values coproduct.
//!
//! For a word `x` of arity `r`, the reduced coproduct cuts the *value*
//! interval: `Δ̄(x) = Σ_{i=1}^{r−1} x|^{1..i} ⊗ x|^{i+1..r}`, where each
//! corestriction is repacked. `Δ⁺` adds the unit terms `1⊗x + x⊗1` and is
//! coassociative and compatible with the quasi-shuffle product.

use crate::algebra::{LinearCombination, QPolynomial, TensorCombination};
use crate::words::Surjection;

/// Reduced coproduct `Δ̄(x)` as a 2-slot tensor. `Δ̄ = 0` on arity ≤ 1
/// (primitive single-letter words) and on the empty word.
pub fn coproduct(x: &Surjection) -> TensorCombination {
    let mut out = TensorCombination::zero(2);
    let r = x.arity();
    for i in 1..r {
        out.add_term(
            vec![x.corestrict(1, i), x.corestrict(i + 1, r)],
            &QPolynomial::one(),
        );
    }
    out
}

/// Linear extension of [`coproduct`]. Empty-word terms are killed (the unit
/// is primitive for the *reduced* coproduct by convention).
pub fn coproduct_lc(a: &LinearCombination) -> TensorCombination {
    let mut out = TensorCombination::zero(2);
    for (w, c) in a.terms() {
        for (factors, inner) in coproduct(w).terms() {
            out.add_term(factors.clone(), &(c * inner));
        }
    }
    out
}

/// A linear combination is primitive iff its reduced coproduct vanishes.
pub fn is_primitive(a: &LinearCombination) -> bool {
    coproduct_lc(a).is_zero()
}

/// Augmented coproduct `Δ⁺(x) = 1⊗x + x⊗1 + Δ̄(x)`, with `Δ⁺(1) = 1⊗1`.
pub fn augmented_coproduct(x: &Surjection) -> TensorCombination {
    let mut out = coproduct(x);
    let one = QPolynomial::one();
    if x.is_empty() {
        out.add_term(vec![Surjection::empty(), Surjection::empty()], &one);
    } else {
        out.add_term(vec![x.clone(), Surjection::empty()], &one);
        out.add_term(vec![Surjection::empty(), x.clone()], &one);
    }
    out
}

/// Linear extension of [`augmented_coproduct`].
pub fn augmented_coproduct_lc(a: &LinearCombination) -> TensorCombination {
    let mut out = TensorCombination::zero(2);
    for (w, c) in a.terms() {
        for (factors, inner) in augmented_coproduct(w).terms() {
            out.add_term(factors.clone(), &(c * inner));
        }
    }
    out
}

/// Replaces slot `slot` (0-based) of every tensor term by its reduced
/// coproduct, yielding a tensor with one more slot.
pub fn expand_slot(t: &TensorCombination, slot: usize) -> TensorCombination {
    let slots = t.slots();
    assert!(slot < slots);
    t.map_linear(slots + 1, |factors| {
        let mut out = TensorCombination::zero(slots + 1);
        for (pair, c) in coproduct(&factors[slot]).terms() {
            let mut v = Vec::with_capacity(slots + 1);
            v.extend_from_slice(&factors[..slot]);
            v.extend(pair.iter().cloned());
            v.extend_from_slice(&factors[slot + 1..]);
            out.add_term(v, c);
        }
        out
    })
}

/// Iterated reduced coproduct `Δ̄^j: Δ̄^1 = Id`, `Δ̄^j = (Id^{⊗j−1} ⊗ Δ̄) ∘ Δ̄^{j−1}`.
///
/// Coassociativity makes the slot choice immaterial; the convention here is
/// to expand the last slot.
pub fn reduced_power(a: &LinearCombination, j: usize) -> TensorCombination {
    assert!(j >= 1, "Δ̄^j needs j ≥ 1");
    let mut t = TensorCombination::from_combination(a);
    for step in 1..j {
        t = expand_slot(&t, step - 1);
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::word;

    #[test]
    fn coproduct_golden() {
        // Δ(2,1,2,3) = (1)⊗(1,1,2) + (2,1,2)⊗(1) : cut after values 1 and 2.
        let t = coproduct(&word(&[2, 1, 2, 3]));
        assert_eq!(t.num_terms(), 2);
        assert_eq!(t.coeff(&[word(&[1]), word(&[1, 1, 2])]), QPolynomial::one());
        assert_eq!(t.coeff(&[word(&[2, 1, 2]), word(&[1])]), QPolynomial::one());
        // Single letters are primitive.
        assert!(coproduct(&word(&[1, 1, 1])).is_zero());
        assert!(coproduct(&Surjection::empty()).is_zero());
    }

    #[test]
    fn acceptance_word_coproduct() {
        // Δ(3,4,2,5,1,1,3,5): four terms, one per inner value cut.
        let t = coproduct(&word(&[3, 4, 2, 5, 1, 1, 3, 5]));
        assert_eq!(t.num_terms(), 4);
        for (left, right) in [
            (vec![1u32, 1], vec![2u32, 3, 1, 4, 2, 4]),
            (vec![2, 1, 1], vec![1, 2, 3, 1, 3]),
            (vec![3, 2, 1, 1, 3], vec![1, 2, 2]),
            (vec![3, 4, 2, 1, 1, 3], vec![1, 1]),
        ] {
            assert_eq!(
                t.coeff(&[word(&left), word(&right)]),
                QPolynomial::one(),
                "missing term {left:?} ⊗ {right:?}"
            );
        }
    }

    #[test]
    fn augmented_adds_unit_terms() {
        let x = word(&[1, 2]);
        let t = augmented_coproduct(&x);
        assert_eq!(t.num_terms(), 3);
        assert_eq!(
            t.coeff(&[x.clone(), Surjection::empty()]),
            QPolynomial::one()
        );
        assert_eq!(
            t.coeff(&[Surjection::empty(), x.clone()]),
            QPolynomial::one()
        );
        assert_eq!(t.coeff(&[word(&[1]), word(&[1])]), QPolynomial::one());

        let u = augmented_coproduct(&Surjection::empty());
        assert_eq!(u.num_terms(), 1);
        assert_eq!(
            u.coeff(&[Surjection::empty(), Surjection::empty()]),
            QPolynomial::one()
        );
    }

    #[test]
    fn reduced_powers() {
        let a = LinearCombination::from_word(word(&[1, 2, 3]));
        assert_eq!(reduced_power(&a, 1).num_terms(), 1);
        let d2 = reduced_power(&a, 2);
        assert_eq!(d2.num_terms(), 2);
        // Δ̄³(1,2,3) = (1)⊗(1)⊗(1): the only double cut.
        let d3 = reduced_power(&a, 3);
        assert_eq!(d3.num_terms(), 1);
        assert_eq!(
            d3.coeff(&[word(&[1]), word(&[1]), word(&[1])]),
            QPolynomial::one()
        );
        // Arity r admits no (r+1)-fold reduced power terms.
        assert!(reduced_power(&a, 4).is_zero());
    }

    #[test]
    fn coassociativity_small() {
        for n in 1..=4 {
            for x in crate::words::all_surjections(n) {
                let t = coproduct(&x);
                assert_eq!(expand_slot(&t, 0), expand_slot(&t, 1), "Δ̄ coassoc at {x}");
            }
        }
    }
}
