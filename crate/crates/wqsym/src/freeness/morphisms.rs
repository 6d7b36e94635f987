//! The free-structure morphisms `η` (dendriform/brace, over `𝒟`) and
//! `ψ^q` (Gerstenhaber–Voronov, over `ℬ`).
//!
//! Both send an irreducible word to a primitive homogeneous combination:
//!
//! * `η(x) = E(x)` for `x ∈ 𝒟`; otherwise `x = y\(z¹×…×z^p)` for a unique
//!   splitting with `y ∈ 𝒟`, and `η(x) = M₁ₚ(η(y); η(z¹),…,η(z^p))` over
//!   the dendriform pair at `q = 0`.
//! * `ψ(x) = E(x)` for `x ∈ ℬ`; for `·`-indecomposable `x ∉ ℬ` the unique
//!   splitting `x = y\(z¹×…×z^p)` with `y ∈ ℬ` gives
//!   `ψ(x) = M₁ₚ(E(y); ψ(z¹),…,ψ(z^p))` over `(≽_q, ≺_q)`; otherwise `ψ`
//!   multiplies along the factorization into `·`-indecomposables,
//!   `ψ(x) = ψ(x¹) ·_q … ·_q ψ(x^p)`.
//!
//! For the last branch the factorization must keep every factor
//! `×`-irreducible (so that `ψ` stays defined); splitting greedily at the
//! *largest* `·`-split point does, and [`br_factorization`] below is exactly
//! that. The leftmost-greedy factorization does not: `(2,1,2) = (1)·(1,2)`
//! has the reducible tail `(1,2)`, while `(2,1,2) = (2,1)·(1)` stays inside
//! the irreducibles.

use std::cell::RefCell;
use std::collections::BTreeMap;

use thiserror::Error;

use crate::algebra::LinearCombination;
use crate::hopf::{brace, eulerian_projector, tridendriform_lc, BracePair, Ops, TriKind};
use crate::words::Surjection;

use super::bases::BasisTables;

/// Errors raised by the freeness layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreenessError {
    /// `η`/`ψ` are defined on irreducible words only.
    #[error("input must be a nonempty irreducible word, got {0}")]
    Reducible(Surjection),
    /// The word is longer than the tabulated basis ceiling.
    #[error("degree {0} exceeds the tabulated ceiling {1}")]
    DegreeTooLarge(usize, usize),
}

/// Factorization into `·`-indecomposables by greedy splitting at the
/// largest split point. If the input is `×`-irreducible, so is every
/// factor.
pub fn br_factorization(x: &Surjection) -> Vec<Surjection> {
    assert!(!x.is_empty(), "factorization needs a nonempty word");
    let irreducible_input = x.is_irreducible();
    let mut rest = x.clone();
    let mut reversed = Vec::new();
    while let Some(&a) = rest.dot_split_points().last() {
        let (head, tail) = rest
            .dot_split_at(a)
            .expect("enumerated split point is valid");
        reversed.push(tail);
        rest = head;
    }
    reversed.push(rest);
    reversed.reverse();
    if irreducible_input {
        debug_assert!(
            reversed.iter().all(|f| f.is_irreducible()),
            "greedy-rightmost factors of an irreducible word stay irreducible"
        );
    }
    reversed
}

/// Memoizing evaluator for `η` and `ψ^q` over a fixed set of basis tables.
/// `ψ` is computed with symbolic `q`; specialize the result to evaluate at
/// a rational point.
pub struct FreeMorphisms<'a> {
    tables: &'a BasisTables,
    ops: Ops,
    eta_memo: RefCell<BTreeMap<Surjection, LinearCombination>>,
    psi_memo: RefCell<BTreeMap<Surjection, LinearCombination>>,
}

impl<'a> FreeMorphisms<'a> {
    pub fn new(tables: &'a BasisTables) -> Self {
        FreeMorphisms {
            tables,
            ops: Ops::exact(),
            eta_memo: RefCell::new(BTreeMap::new()),
            psi_memo: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn tables(&self) -> &BasisTables {
        self.tables
    }

    fn admit(&self, x: &Surjection) -> Result<(), FreenessError> {
        if x.is_empty() || !x.is_irreducible() {
            return Err(FreenessError::Reducible(x.clone()));
        }
        if x.len() > self.tables.max_n() {
            return Err(FreenessError::DegreeTooLarge(x.len(), self.tables.max_n()));
        }
        Ok(())
    }

    /// The unique backslash splitting `x = y\z` whose head lies in the
    /// given generator set.
    fn unique_split(
        &self,
        x: &Surjection,
        head_in: impl Fn(&Surjection) -> bool,
        set_name: &str,
    ) -> (Surjection, Surjection) {
        let hits: Vec<(Surjection, Surjection)> = x
            .backslash_splits()
            .into_iter()
            .filter(|(y, _)| head_in(y))
            .collect();
        assert_eq!(
            hits.len(),
            1,
            "{x} must admit exactly one splitting with head in {set_name}, found {}",
            hits.len()
        );
        hits.into_iter().next().unwrap()
    }

    /// `η(x)` for irreducible `x`: exact integer coefficients.
    pub fn eta(&self, x: &Surjection) -> Result<LinearCombination, FreenessError> {
        self.admit(x)?;
        if let Some(hit) = self.eta_memo.borrow().get(x) {
            return Ok(hit.clone());
        }
        let value = if self.tables.in_d(x) {
            eulerian_projector(x)
        } else {
            let (y, z) = self.unique_split(x, |w| self.tables.in_d(w), "𝒟");
            let head = self.eta(&y)?;
            let mut args = Vec::new();
            for factor in z.irreducible_factorization() {
                args.push(self.eta(&factor)?);
            }
            brace(&self.ops, BracePair::AtZero, &head, &args)
                .expect("brace of homogeneous combinations avoids unit cases")
        };
        self.eta_memo.borrow_mut().insert(x.clone(), value.clone());
        Ok(value)
    }

    /// `ψ^q(x)` for irreducible `x`, with exact `ℤ[q]` coefficients.
    pub fn psi(&self, x: &Surjection) -> Result<LinearCombination, FreenessError> {
        self.admit(x)?;
        if let Some(hit) = self.psi_memo.borrow().get(x) {
            return Ok(hit.clone());
        }
        let value = if self.tables.in_b(x) {
            eulerian_projector(x)
        } else if x.is_dot_indecomposable() {
            let (y, z) = self.unique_split(x, |w| self.tables.in_b(w), "ℬ");
            let head = eulerian_projector(&y);
            let mut args = Vec::new();
            for factor in z.irreducible_factorization() {
                args.push(self.psi(&factor)?);
            }
            brace(&self.ops, BracePair::Symbolic, &head, &args)
                .expect("brace of homogeneous combinations avoids unit cases")
        } else {
            let factors = br_factorization(x);
            let mut acc = self.psi(&factors[0])?;
            for factor in &factors[1..] {
                let rhs = self.psi(factor)?;
                acc = tridendriform_lc(&self.ops, &acc, &rhs, TriKind::Middle)
                    .expect("·_q of homogeneous combinations avoids unit cases");
            }
            acc
        };
        self.psi_memo.borrow_mut().insert(x.clone(), value.clone());
        Ok(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::QPolynomial;
    use crate::hopf::is_primitive;
    use crate::words::word;

    fn lc(entries: &[(&[u32], i64)]) -> LinearCombination {
        let mut out = LinearCombination::zero();
        for (w, c) in entries {
            out.add_term(word(w), &QPolynomial::constant(*c));
        }
        out
    }

    #[test]
    fn br_factorization_golden() {
        assert_eq!(
            br_factorization(&word(&[2, 1, 2])),
            vec![word(&[2, 1]), word(&[1])]
        );
        assert_eq!(
            br_factorization(&word(&[1, 1, 1])),
            vec![word(&[1]), word(&[1]), word(&[1])]
        );
        assert_eq!(br_factorization(&word(&[2, 1])), vec![word(&[2, 1])]);
        // Contrast with the leftmost-greedy factorization, whose tail
        // factor (1,2) is ×-reducible.
        let full = word(&[2, 1, 2])
            .indecomposable_factorization()
            .unwrap()
            .full;
        assert_eq!(full, vec![word(&[1]), word(&[1, 2])]);
        assert!(!full[1].is_irreducible());
    }

    // Independent oracle: enumerate *all* maximal `·`-factorizations by
    // recursing over every split of the last factor, then check that the
    // greedy-rightmost one is the unique all-irreducible factorization.
    fn all_factorizations(x: &Surjection) -> Vec<Vec<Surjection>> {
        let mut out = Vec::new();
        if x.is_dot_indecomposable() {
            out.push(vec![x.clone()]);
            return out;
        }
        for &a in &x.dot_split_points() {
            let (head, tail) = x.dot_split_at(a).unwrap();
            if !tail.is_dot_indecomposable() {
                continue;
            }
            for mut prefix in all_factorizations(&head) {
                prefix.push(tail.clone());
                out.push(prefix);
            }
        }
        out
    }

    #[test]
    fn br_is_the_unique_irreducible_factorization() {
        for n in 1..=4 {
            for x in crate::words::all_surjections(n) {
                if !x.is_irreducible() {
                    continue;
                }
                let all = all_factorizations(&x);
                let irreducible_ones: Vec<&Vec<Surjection>> = all
                    .iter()
                    .filter(|fs| fs.iter().all(|f| f.is_irreducible()))
                    .collect();
                assert_eq!(
                    irreducible_ones.len(),
                    1,
                    "expected a unique all-irreducible factorization of {x}"
                );
                assert_eq!(irreducible_ones[0], &br_factorization(&x));
            }
        }
    }

    #[test]
    fn eta_goldens() {
        let tables = BasisTables::new(3);
        let m = FreeMorphisms::new(&tables);
        assert_eq!(m.eta(&word(&[1])).unwrap(), lc(&[(&[1], 1)]));
        assert_eq!(m.eta(&word(&[1, 1])).unwrap(), lc(&[(&[1, 1], 1)]));
        // (2,1) = (1)\(1): the brace M₁₁((1);(1)) = (1)≺(1) − (1)≻(1).
        assert_eq!(
            m.eta(&word(&[2, 1])).unwrap(),
            lc(&[(&[2, 1], 1), (&[1, 2], -1)])
        );
        assert_eq!(
            m.eta(&word(&[1, 2])),
            Err(FreenessError::Reducible(word(&[1, 2])))
        );
    }

    #[test]
    fn psi_goldens() {
        let tables = BasisTables::new(4);
        let m = FreeMorphisms::new(&tables);
        // Values on ℬ are pure E-images.
        assert_eq!(
            m.psi(&word(&[2, 3, 1])).unwrap(),
            lc(&[(&[2, 3, 1], 1), (&[2, 1, 3], -1)])
        );
        assert_eq!(
            m.psi(&word(&[1, 2, 1])).unwrap(),
            lc(&[(&[1, 2, 1], 1), (&[1, 1, 2], -1)])
        );
        assert_eq!(
            m.psi(&word(&[2, 3, 4, 1])).unwrap(),
            lc(&[(&[2, 3, 4, 1], 1), (&[2, 3, 1, 4], -1)])
        );
        // (2,1) = (1)\(1) with (1) ∈ ℬ: M₁₁((1);(1)) over (≽_q, ≺_q).
        let mut expected = lc(&[(&[2, 1], 1), (&[1, 2], -1)]);
        expected.add_term(word(&[1, 1]), &QPolynomial::monomial(-1, 1));
        assert_eq!(m.psi(&word(&[2, 1])).unwrap(), expected);
    }

    #[test]
    fn images_are_primitive_and_homogeneous() {
        let tables = BasisTables::new(4);
        let m = FreeMorphisms::new(&tables);
        for n in 1..=4 {
            for x in tables.irreducibles(n) {
                let e = m.eta(x).unwrap();
                let p = m.psi(x).unwrap();
                assert_eq!(e.homogeneous_degree(), Some(n), "η({x}) inhomogeneous");
                assert_eq!(p.homogeneous_degree(), Some(n), "ψ({x}) inhomogeneous");
                assert!(is_primitive(&e), "η({x}) not primitive");
                assert!(is_primitive(&p), "ψ({x}) not primitive");
            }
        }
    }
}
