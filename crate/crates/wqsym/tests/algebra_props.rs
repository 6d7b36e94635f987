//! Randomized ring and module laws for the scalar polynomials, the formal
//! linear combinations, and the exact rank routines.

use num::{BigInt, BigRational};
use proptest::collection::vec;
use proptest::prelude::*;
use wqsym::words::{all_surjections, Surjection};
use wqsym::{rank_at, rank_at_int, rank_symbolic, LinearCombination, QPolynomial};

fn poly() -> impl Strategy<Value = QPolynomial> {
    vec(-6i64..=6, 0..=4)
        .prop_map(|coeffs| QPolynomial::from_coeffs(coeffs.into_iter().map(BigInt::from).collect()))
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

/// A random homogeneous combination of degree-3 words.
fn combo() -> impl Strategy<Value = LinearCombination> {
    let basis = all_surjections(3);
    vec(-4i64..=4, basis.len()).prop_map(move |coeffs| {
        let mut out = LinearCombination::zero();
        for (x, c) in basis.iter().zip(coeffs) {
            out.add_term(x.clone(), &QPolynomial::constant(c));
        }
        out
    })
}

proptest! {
    #[test]
    fn polynomial_ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, QPolynomial::zero());
        prop_assert_eq!(&a * &QPolynomial::one(), a.clone());
        prop_assert_eq!(&a + &QPolynomial::zero(), a);
    }

    #[test]
    fn polynomial_evaluation_is_a_homomorphism(a in poly(), b in poly(), x in rational()) {
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
        let zero = BigRational::from_integer(0.into());
        prop_assert_eq!(a.eval(&zero), BigRational::from_integer(a.eval_at_zero()));
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b), a);
    }

    #[test]
    fn polynomial_degree_is_multiplicative(a in poly(), b in poly()) {
        match (a.degree(), b.degree()) {
            (Some(da), Some(db)) => {
                prop_assert_eq!((&a * &b).degree(), Some(da + db));
            }
            _ => prop_assert!((&a * &b).is_zero()),
        }
    }

    #[test]
    fn combination_module_laws(a in combo(), b in combo(), s in poly()) {
        let sum = a.combine(&b, &QPolynomial::one());
        prop_assert_eq!(sum.coeff(&Surjection::standardize(&[1, 2, 3])),
            &a.coeff(&Surjection::standardize(&[1, 2, 3]))
                + &b.coeff(&Surjection::standardize(&[1, 2, 3])));
        // (a + b)·s = a·s + b·s, term by term.
        let lhs = sum.scaled(&s);
        let rhs = a.scaled(&s).combine(&b.scaled(&s), &QPolynomial::one());
        prop_assert_eq!(lhs, rhs);
        // a − a = 0 and zero has no stored terms.
        let cancel = a.combine(&a, &-&QPolynomial::one());
        prop_assert!(cancel.is_zero());
        prop_assert_eq!(cancel.num_terms(), 0);
    }

    #[test]
    fn combination_specialization_drops_q_terms(a in combo()) {
        let shifted = a.scaled(&QPolynomial::q());
        prop_assert!(shifted.specialize_at_zero().is_zero());
        let mixed = a.combine(&shifted, &QPolynomial::one());
        prop_assert_eq!(mixed.specialize_at_zero(), a.specialize_at_zero());
    }

    #[test]
    fn rank_is_invariant_under_scaling_and_duplication(a in combo(), b in combo()) {
        let family = vec![a.clone(), b.clone()];
        let rank = rank_at_int(&family, 1).unwrap();
        prop_assert!(rank <= 2);
        let redundant = vec![
            a.clone(),
            b.clone(),
            a.scaled(&QPolynomial::constant(3)),
            a.combine(&b, &QPolynomial::one()),
        ];
        prop_assert_eq!(rank_at_int(&redundant, 1).unwrap(), rank);
    }

    #[test]
    fn symbolic_rank_dominates_every_specialization(a in combo(), b in combo(), x in rational()) {
        let q = QPolynomial::q();
        let family = vec![a.scaled(&q), b.clone(), a.combine(&b, &q)];
        let symbolic = rank_symbolic(&family).unwrap();
        let at_x = rank_at(&family, &x).unwrap();
        prop_assert!(at_x <= symbolic);
    }
}

#[test]
fn rank_of_the_standard_basis_is_full() {
    let basis = all_surjections(3);
    let vectors: Vec<LinearCombination> = basis
        .iter()
        .map(|x| LinearCombination::from_word(x.clone()))
        .collect();
    assert_eq!(rank_at_int(&vectors, 0).unwrap(), basis.len());
    assert_eq!(rank_symbolic(&vectors).unwrap(), basis.len());
}

#[test]
fn rank_detects_a_q_only_dependency() {
    // v₁ = q·x, v₂ = x: dependent at every point and symbolically (rank 1),
    // but both nonzero — the pencil never gains rank 2.
    let x = Surjection::standardize(&[1, 2]);
    let v1 = LinearCombination::singleton(x.clone(), QPolynomial::q());
    let v2 = LinearCombination::from_word(x);
    let family = vec![v1, v2];
    assert_eq!(rank_symbolic(&family).unwrap(), 1);
    assert_eq!(rank_at_int(&family, 0).unwrap(), 1);
    assert_eq!(rank_at_int(&family, 5).unwrap(), 1);
}
