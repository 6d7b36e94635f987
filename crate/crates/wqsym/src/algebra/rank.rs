//! Exact rank computation for families of linear combinations.
//!
//! Ranks are taken over ℚ after substituting a rational value for `q`
//! ([`rank_at`]) or over the rational function field ℚ(q) ([`rank_symbolic`]).
//! Both paths reduce to fraction-free Bareiss elimination in an integral
//! domain (ℤ respectively ℤ[q]), so no floating point and no fraction growth
//! beyond determinant size occurs. The symbolic rank additionally follows the
//! specialization strategy: evaluate at `maxdeg + 1` integer points and take
//! the maximum, cross-checking that it matches the elimination result
//! (specializing can only lower the rank).

use num::{BigInt, BigRational, Integer, One, Zero};
use thiserror::Error;

use super::lincomb::LinearCombination;
use super::qpoly::QPolynomial;
use crate::words::Surjection;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    /// Rank input mixed words of different lengths.
    #[error("rank input must be homogeneous: found lengths {0} and {1}")]
    Inhomogeneous(usize, usize),
}

/// Minimal integral-domain interface for Bareiss elimination.
trait Domain: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    /// Division known to be exact (guaranteed by the Bareiss identity).
    fn exact_div(&self, rhs: &Self) -> Self;
}

impl Domain for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        let (q, r) = self.div_rem(rhs);
        debug_assert!(
            Zero::is_zero(&r),
            "non-exact integer division in elimination"
        );
        q
    }
}

impl Domain for QPolynomial {
    fn zero() -> Self {
        QPolynomial::zero()
    }
    fn one() -> Self {
        QPolynomial::one()
    }
    fn is_zero(&self) -> bool {
        QPolynomial::is_zero(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        QPolynomial::exact_div(self, rhs)
    }
}

/// Fraction-free Gaussian elimination (Bareiss) with row pivoting and column
/// skipping; returns the rank over the domain's fraction field.
fn bareiss_rank<D: Domain>(mut m: Vec<Vec<D>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = D::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let t = m[rank][col].mul(&m[i][j]).sub(&m[i][col].mul(&m[rank][j]));
                m[i][j] = t.exact_div(&prev);
            }
            m[i][col] = D::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Checks degree homogeneity and collects the union of supporting words, in
/// canonical order. Zero combinations are accepted (they never constrain the
/// degree).
fn column_support(vectors: &[LinearCombination]) -> Result<Vec<Surjection>, AlgebraError> {
    let mut degree: Option<usize> = None;
    let mut support = std::collections::BTreeSet::new();
    for v in vectors {
        for w in v.words() {
            match degree {
                None => degree = Some(w.len()),
                Some(d) if d != w.len() => {
                    return Err(AlgebraError::Inhomogeneous(d, w.len()));
                }
                _ => {}
            }
            support.insert(w.clone());
        }
    }
    Ok(support.into_iter().collect())
}

/// Exact rank over ℚ of the combinations after substituting `q ↦ value`.
pub fn rank_at(vectors: &[LinearCombination], value: &BigRational) -> Result<usize, AlgebraError> {
    let support = column_support(vectors)?;
    let index: std::collections::BTreeMap<&Surjection, usize> =
        support.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(vectors.len());
    for v in vectors {
        let mut row_q = vec![BigRational::zero(); support.len()];
        for (w, c) in v.terms() {
            row_q[index[w]] = c.eval(value);
        }
        // Clear denominators: rank over ℚ is invariant under row scaling.
        let lcm = row_q
            .iter()
            .filter(|x| !x.is_zero())
            .fold(<BigInt as One>::one(), |acc, x| acc.lcm(x.denom()));
        m.push(
            row_q
                .into_iter()
                .map(|x| (x * BigRational::from(lcm.clone())).to_integer())
                .collect(),
        );
    }
    Ok(bareiss_rank(m))
}

/// Exact rank over the rational function field ℚ(q).
pub fn rank_symbolic(vectors: &[LinearCombination]) -> Result<usize, AlgebraError> {
    let support = column_support(vectors)?;
    let index: std::collections::BTreeMap<&Surjection, usize> =
        support.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut m: Vec<Vec<QPolynomial>> = Vec::with_capacity(vectors.len());
    let mut maxdeg = 0usize;
    for v in vectors {
        let mut row = vec![QPolynomial::zero(); support.len()];
        for (w, c) in v.terms() {
            maxdeg = maxdeg.max(c.degree().unwrap_or(0));
            row[index[w]] = c.clone();
        }
        m.push(row);
    }
    let eliminated = bareiss_rank(m.clone());

    // Specialization strategy: ranks at maxdeg+1 integer points, extended (a
    // nonvanishing minor has degree ≤ rows·maxdeg) until the elimination rank
    // is witnessed; specializing can only lower the rank.
    let mut best = 0usize;
    let cap = vectors.len() * maxdeg + 1;
    for point in 1..=cap.max(maxdeg + 1) {
        let p = BigInt::from(point as i64);
        let evaluated: Vec<Vec<BigInt>> = m
            .iter()
            .map(|row| row.iter().map(|c| c.eval_int(&p)).collect())
            .collect();
        let r = bareiss_rank(evaluated);
        assert!(r <= eliminated, "specialized rank exceeded symbolic rank");
        best = best.max(r);
        if best == eliminated && point > maxdeg {
            break;
        }
    }
    assert_eq!(
        best, eliminated,
        "specialization strategy failed to witness the symbolic rank"
    );
    Ok(eliminated)
}

/// Rank at `q = 0` and `q = 1`, the two specializations every report uses.
pub fn rank_at_int(vectors: &[LinearCombination], value: i64) -> Result<usize, AlgebraError> {
    rank_at(vectors, &BigRational::from(BigInt::from(value)))
}
