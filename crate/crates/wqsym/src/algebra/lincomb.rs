//! Linear combinations of packed words (and of tensors of packed words) with
//! coefficients in `ℤ[q]`.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigRational, Zero};
use serde::{Serialize, Serializer};

use super::qpoly::QPolynomial;
use crate::words::Surjection;

/// An element of the free `ℤ[q]`-module on packed words. Only nonzero
/// coefficients are stored; iteration follows the canonical word order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinearCombination {
    terms: BTreeMap<Surjection, QPolynomial>,
}

impl LinearCombination {
    pub fn zero() -> Self {
        LinearCombination {
            terms: BTreeMap::new(),
        }
    }

    /// The basis element `x` with coefficient 1.
    pub fn from_word(x: Surjection) -> Self {
        LinearCombination::singleton(x, QPolynomial::one())
    }

    pub fn singleton(x: Surjection, coeff: QPolynomial) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(x, coeff);
        }
        LinearCombination { terms }
    }

    /// The unit of the augmented algebra: the empty word with coefficient 1.
    pub fn unit() -> Self {
        LinearCombination::from_word(Surjection::empty())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Surjection, &QPolynomial)> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Surjection> {
        self.terms.keys()
    }

    /// Coefficient of `x` (zero when absent).
    pub fn coeff(&self, x: &Surjection) -> QPolynomial {
        self.terms.get(x).cloned().unwrap_or_else(QPolynomial::zero)
    }

    pub fn add_term(&mut self, x: Surjection, coeff: &QPolynomial) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(x) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
        }
    }

    /// In-place `self += scalar · other`.
    pub fn add_assign_scaled(&mut self, other: &LinearCombination, scalar: &QPolynomial) {
        if scalar.is_zero() {
            return;
        }
        for (x, c) in &other.terms {
            self.add_term(x.clone(), &(scalar * c));
        }
    }

    /// `a + scalar · b`.
    pub fn combine(&self, other: &LinearCombination, scalar: &QPolynomial) -> LinearCombination {
        let mut out = self.clone();
        out.add_assign_scaled(other, scalar);
        out
    }

    pub fn scaled(&self, scalar: &QPolynomial) -> LinearCombination {
        let mut out = LinearCombination::zero();
        out.add_assign_scaled(self, scalar);
        out
    }

    /// Linear extension of a word-level map.
    pub fn map_linear(&self, f: impl Fn(&Surjection) -> LinearCombination) -> LinearCombination {
        let mut out = LinearCombination::zero();
        for (x, c) in &self.terms {
            out.add_assign_scaled(&f(x), c);
        }
        out
    }

    /// Common length of all words, when homogeneous. The zero combination is
    /// homogeneous of every degree and reports `None` like mixed input; call
    /// sites that allow zero handle it explicitly.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut lengths = self.terms.keys().map(Surjection::len);
        let first = lengths.next()?;
        lengths.all(|l| l == first).then_some(first)
    }

    /// Exact specialization of every coefficient, dropping vanished terms.
    pub fn evaluate(&self, q: &BigRational) -> Vec<(Surjection, BigRational)> {
        self.terms
            .iter()
            .map(|(x, c)| (x.clone(), c.eval(q)))
            .filter(|(_, v)| !v.is_zero())
            .collect()
    }

    /// Specialization at `q = 0` (constant terms), staying in `ℤ[q]`.
    pub fn specialize_at_zero(&self) -> LinearCombination {
        let mut out = LinearCombination::zero();
        for (x, c) in &self.terms {
            out.add_term(x.clone(), &QPolynomial::from_coeffs(vec![c.eval_at_zero()]));
        }
        out
    }

    /// JSON encoding `{"degree": n, "terms": [{"coeff": [...], "word": [...]}]}`
    /// with terms in canonical word order.
    pub fn to_json(&self, degree: usize) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(x, c)| {
                serde_json::json!({
                    "coeff": c.to_json(),
                    "word": x.letters(),
                })
            })
            .collect();
        serde_json::json!({ "degree": degree, "terms": terms })
    }
}

impl Serialize for LinearCombination {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json(self.homogeneous_degree().unwrap_or(0))
            .serialize(serializer)
    }
}

/// Splits a coefficient into a sign and an unsigned rendering: a single
/// monomial absorbs its sign (`-q`, `2q^2`); longer polynomials are
/// parenthesized and always carried with '+'. A bare `1` renders empty so
/// combinations read `(2,1)-(1,2)` rather than `1(2,1)+(-1)(1,2)`.
fn signed_coeff(coeff: &QPolynomial) -> (char, String) {
    let nonzero = coeff.coeffs().iter().filter(|c| !c.is_zero()).count();
    let (sign, body) = if nonzero == 1 {
        let display = coeff.to_string();
        match display.strip_prefix('-') {
            Some(rest) => ('-', rest.to_string()),
            None => ('+', display),
        }
    } else {
        ('+', format!("({coeff})"))
    };
    let body = if body == "1" { String::new() } else { body };
    (sign, body)
}

fn write_signed_term(
    f: &mut fmt::Formatter<'_>,
    coeff: &QPolynomial,
    rendered: &str,
    first: bool,
) -> fmt::Result {
    let (sign, body) = signed_coeff(coeff);
    if first {
        if sign == '-' {
            write!(f, "-")?;
        }
    } else {
        write!(f, " {sign} ")?;
    }
    if rendered == "1" && !body.is_empty() {
        // The unit slot only carries its coefficient.
        write!(f, "{body}")
    } else if body.is_empty() {
        write!(f, "{rendered}")
    } else {
        write!(f, "{body}{rendered}")
    }
}

impl fmt::Display for LinearCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (x, c)) in self.terms.iter().enumerate() {
            let rendered = if x.is_empty() {
                "1".to_string()
            } else {
                x.to_string()
            };
            write_signed_term(f, c, &rendered, i == 0)?;
        }
        Ok(())
    }
}

/// An element of the free `ℤ[q]`-module on `k`-fold tensors of packed words.
/// All terms of one combination have the same number of slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorCombination {
    slots: usize,
    terms: BTreeMap<Vec<Surjection>, QPolynomial>,
}

impl TensorCombination {
    pub fn zero(slots: usize) -> Self {
        TensorCombination {
            slots,
            terms: BTreeMap::new(),
        }
    }

    pub fn slots(&self) -> usize {
        self.slots
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Surjection>, &QPolynomial)> {
        self.terms.iter()
    }

    pub fn coeff(&self, factors: &[Surjection]) -> QPolynomial {
        self.terms
            .get(factors)
            .cloned()
            .unwrap_or_else(QPolynomial::zero)
    }

    pub fn add_term(&mut self, factors: Vec<Surjection>, coeff: &QPolynomial) {
        assert_eq!(factors.len(), self.slots, "tensor slot mismatch");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(factors) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
        }
    }

    pub fn add_assign_scaled(&mut self, other: &TensorCombination, scalar: &QPolynomial) {
        assert_eq!(self.slots, other.slots, "tensor slot mismatch");
        if scalar.is_zero() {
            return;
        }
        for (t, c) in &other.terms {
            self.add_term(t.clone(), &(scalar * c));
        }
    }

    /// Linear extension of a map on tensor basis elements.
    pub fn map_linear(
        &self,
        slots: usize,
        f: impl Fn(&[Surjection]) -> TensorCombination,
    ) -> TensorCombination {
        let mut out = TensorCombination::zero(slots);
        for (t, c) in &self.terms {
            out.add_assign_scaled(&f(t), c);
        }
        out
    }

    /// Collapse each tensor term through a word-valued linear map.
    pub fn contract(&self, f: impl Fn(&[Surjection]) -> LinearCombination) -> LinearCombination {
        let mut out = LinearCombination::zero();
        for (t, c) in &self.terms {
            out.add_assign_scaled(&f(t), c);
        }
        out
    }

    /// The 1-slot tensor carried by a plain combination.
    pub fn from_combination(a: &LinearCombination) -> TensorCombination {
        let mut out = TensorCombination::zero(1);
        for (x, c) in a.terms() {
            out.add_term(vec![x.clone()], c);
        }
        out
    }

    /// JSON encoding mirrors `LinearCombination` with a `factors` list per
    /// term.
    pub fn to_json(&self, degree: usize) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(t, c)| {
                serde_json::json!({
                    "coeff": c.to_json(),
                    "factors": t.iter().map(|x| x.letters()).collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::json!({ "degree": degree, "slots": self.slots, "terms": terms })
    }
}

impl fmt::Display for TensorCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (t, c)) in self.terms.iter().enumerate() {
            let rendered = t
                .iter()
                .map(|x| {
                    if x.is_empty() {
                        "1".to_string()
                    } else {
                        x.to_string()
                    }
                })
                .collect::<Vec<_>>()
                .join("⊗");
            write_signed_term(f, c, &rendered, i == 0)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::word;

    #[test]
    fn cancellation() {
        let x = LinearCombination::from_word(word(&[1, 2]));
        let zero = x.combine(&x, &QPolynomial::constant(-1));
        assert!(zero.is_zero());
    }

    #[test]
    fn map_linear_preserves_coefficients() {
        let x = LinearCombination::singleton(word(&[1, 2]), QPolynomial::constant(3));
        let mapped = x.map_linear(|w| {
            LinearCombination::singleton(
                w.clone(),
                QPolynomial::constant(w.irreducible_factorization().len() as i64),
            )
        });
        assert_eq!(mapped.coeff(&word(&[1, 2])), QPolynomial::constant(6));
    }

    #[test]
    fn termwise_evaluation() {
        // (2,1) − (1,2) at q = 1 keeps the same integer combination.
        let mut a = LinearCombination::from_word(word(&[2, 1]));
        a.add_term(word(&[1, 2]), &QPolynomial::constant(-1));
        let at_one = a.evaluate(&BigRational::from(num::BigInt::from(1)));
        assert_eq!(
            at_one,
            vec![
                (word(&[1, 2]), BigRational::from(num::BigInt::from(-1))),
                (word(&[2, 1]), BigRational::from(num::BigInt::from(1))),
            ]
        );
    }

    #[test]
    fn display_rules() {
        let mut a = LinearCombination::from_word(word(&[2, 1]));
        a.add_term(word(&[1, 2]), &QPolynomial::constant(-1));
        assert_eq!(a.to_string(), "-(1,2) + (2,1)");

        let mut b = LinearCombination::singleton(word(&[1, 1]), QPolynomial::q());
        b.add_term(
            word(&[1, 2]),
            &QPolynomial::from_coeffs(vec![1.into(), 1.into()]),
        );
        assert_eq!(b.to_string(), "q(1,1) + (1+q)(1,2)");
        assert_eq!(LinearCombination::zero().to_string(), "0");
        assert_eq!(LinearCombination::unit().to_string(), "1");
        assert_eq!(
            LinearCombination::singleton(word(&[1]), QPolynomial::constant(-2)).to_string(),
            "-2(1)"
        );
    }

    #[test]
    fn json_shape() {
        let a = LinearCombination::singleton(word(&[1, 2]), QPolynomial::q());
        let v = a.to_json(2);
        assert_eq!(
            v,
            serde_json::json!({
                "degree": 2,
                "terms": [{"coeff": [0, 1], "word": [1, 2]}]
            })
        );
    }

    #[test]
    fn tensor_roundtrip() {
        let mut t = TensorCombination::zero(2);
        t.add_term(vec![word(&[1]), word(&[1, 2])], &QPolynomial::one());
        t.add_term(vec![word(&[1]), word(&[1, 2])], &QPolynomial::constant(-1));
        assert!(t.is_zero());
    }
}
