//! Randomized invariants of the word calculus: standardization, restriction,
//! the two concatenation-like products and their factorizations, and the two
//! order relations.

use std::cmp::Ordering;

use proptest::collection::vec;
use proptest::prelude::*;
use wqsym::shuffles::epsilon;
use wqsym::words::{word, Surjection, Value};

/// Arbitrary packed word of length 0..=7 via standardization.
fn packed_word() -> impl Strategy<Value = Surjection> {
    vec(1u32..=7, 0..=7).prop_map(|seq| Surjection::standardize(&seq))
}

/// Arbitrary nonempty packed word of length 1..=max.
fn nonempty_word(max: usize) -> impl Strategy<Value = Surjection> {
    vec(1u32..=7, 1..=max).prop_map(|seq| Surjection::standardize(&seq))
}

proptest! {
    #[test]
    fn standardize_is_idempotent(seq in vec(1u32..=9, 0..=8)) {
        let x = Surjection::standardize(&seq);
        prop_assert_eq!(Surjection::standardize(x.letters()), x);
    }

    #[test]
    fn standardize_preserves_comparisons(seq in vec(1u32..=9, 0..=8)) {
        let x = Surjection::standardize(&seq);
        prop_assert_eq!(x.len(), seq.len());
        for i in 0..seq.len() {
            for j in 0..seq.len() {
                prop_assert_eq!(
                    seq[i].cmp(&seq[j]),
                    x.letters()[i].cmp(&x.letters()[j]),
                    "order at positions {} and {} changed", i, j
                );
            }
        }
    }

    #[test]
    fn restriction_to_all_positions_is_identity(x in packed_word()) {
        let all: Vec<usize> = (1..=x.len()).collect();
        prop_assert_eq!(x.restrict(&all).unwrap(), x);
    }

    #[test]
    fn restriction_glues_with_complement(x in nonempty_word(7), mask in vec(any::<bool>(), 7)) {
        let chosen: Vec<usize> = (1..=x.len()).filter(|&p| mask[p - 1]).collect();
        let complement: Vec<usize> = (1..=x.len()).filter(|&p| !mask[p - 1]).collect();
        let a = x.restrict(&chosen).unwrap();
        let b = x.restrict(&complement).unwrap();
        prop_assert_eq!(a.len() + b.len(), x.len());
    }

    #[test]
    fn corestriction_splits_length(x in nonempty_word(7), cut in 0u32..=7) {
        let r = x.arity();
        let i = cut.min(r);
        let low = x.corestrict(1, i);
        let high = x.corestrict(i + 1, r);
        prop_assert_eq!(low.len() + high.len(), x.len());
        prop_assert_eq!(low.arity() + high.arity(), r);
    }

    #[test]
    fn concat_factorization_round_trips(x in packed_word()) {
        let factors = x.irreducible_factorization();
        for f in &factors {
            prop_assert!(f.is_irreducible());
        }
        let glued = factors
            .iter()
            .fold(Surjection::empty(), |acc, f| acc.concat(f));
        prop_assert_eq!(glued, x);
    }

    #[test]
    fn dot_factorization_round_trips(x in nonempty_word(7)) {
        let fact = x.indecomposable_factorization().unwrap();
        for f in &fact.full {
            prop_assert!(f.is_dot_indecomposable());
        }
        let mut rebuilt = fact.full[0].clone();
        for f in &fact.full[1..] {
            rebuilt = rebuilt.dot(f).unwrap();
        }
        prop_assert_eq!(&rebuilt, &x);
        let mut canonical = fact.canonical[0].clone();
        for f in &fact.canonical[1..] {
            canonical = canonical.dot(f).unwrap();
        }
        prop_assert_eq!(&canonical, &x);
        for f in &fact.canonical[1..] {
            prop_assert!(f.is_irreducible());
        }
    }

    #[test]
    fn backslash_is_twisted_concatenation(
        x in nonempty_word(4),
        y in nonempty_word(4),
    ) {
        let lhs = x.backslash(&y).unwrap();
        let rhs = epsilon(&[x.arity() as usize, y.arity() as usize]).compose(&x.concat(&y));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn backslash_split_recovers_operands(
        x in nonempty_word(4),
        y in nonempty_word(4),
    ) {
        let w = x.backslash(&y).unwrap();
        prop_assert!(w.backslash_split_points().contains(&x.len()));
        let (head, tail) = w.backslash_split_at(x.len());
        prop_assert_eq!(head, x);
        prop_assert_eq!(tail, y);
    }

    #[test]
    fn backslash_is_associative(
        x in nonempty_word(3),
        y in nonempty_word(3),
        z in nonempty_word(3),
    ) {
        let left = x.backslash(&y).unwrap().backslash(&z).unwrap();
        let right = x.backslash(&y.backslash(&z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn top_decomposition_round_trips(x in nonempty_word(7)) {
        let top = x.top_decomposition().unwrap();
        prop_assert_eq!(top.reassemble().unwrap(), x.clone());
        // Positions, entries and the head gap tile the whole length.
        let gaps = x.gap_vector().unwrap();
        let occupied: usize = gaps.entries.iter().sum::<usize>() + gaps.head_gap;
        prop_assert_eq!(occupied + top.positions.len(), x.len());
    }

    #[test]
    fn bruhat_covers_are_strictly_above(x in nonempty_word(5)) {
        for c in x.bruhat_covers() {
            prop_assert_eq!(c.len(), x.len());
            prop_assert_eq!(c.arity(), x.arity());
            prop_assert!(x.bruhat_leq(&c).unwrap());
            prop_assert!(!c.bruhat_leq(&x).unwrap());
        }
    }

    #[test]
    fn strong_order_extends_weak_order(x in nonempty_word(5)) {
        for c in x.bruhat_covers() {
            prop_assert!(x.strong_leq(&c).unwrap());
        }
        for s in x.separated_value_swaps() {
            prop_assert!(x.strong_leq(&s).unwrap() || s.strong_leq(&x).unwrap());
        }
    }
}

#[test]
fn orders_agree_with_manual_comparisons() {
    // A miniature deterministic cross-check of the two relations.
    let chain = [word(&[1, 2, 2]), word(&[2, 1, 1])];
    assert_eq!(
        chain[0].bruhat_leq(&chain[1]),
        chain[0].strong_leq(&chain[1])
    );
    let id = word(&[1, 2, 3]);
    let rev = word(&[3, 2, 1]);
    assert!(id.bruhat_leq(&rev).unwrap());
    assert_eq!(id.letters(), &[1, 2, 3]);
    assert_eq!(id.at(2), 2 as Value);
    assert_eq!(id.letters().iter().copied().max(), Some(id.arity()));
    assert_eq!(
        word(&[2, 1]).letters().cmp(word(&[1, 2]).letters()),
        Ordering::Greater
    );
}
