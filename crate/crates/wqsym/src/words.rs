//! Packed words (surjective maps) and their combinatorial operations.
//!
//! A *packed word* of length `n` and arity `r` is a word `x = (x₁,…,xₙ)` over
//! positive integers whose set of letters is exactly `{1,…,r}`; equivalently a
//! surjection `[n] → [r]`. The number of packed words of length `n` is the
//! Fubini (ordered Bell) number: 1, 3, 13, 75, 541, …
//!
//! This module provides the raw combinatorics: standardization, restriction
//! and co-restriction, the three graded products `×` (concatenation), `\`
//! (over) and `·` (top gluing), the decompositions attached to each product,
//! gap vectors, and the right weak order.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Letter type used in packed words. Lengths stay small (exhaustive suites run
/// up to n = 6), so `u32` leaves ample headroom.
pub type Value = u32;

/// Errors raised by word-level operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    /// The letter multiset is not exactly `{1,…,max}`.
    #[error("word {0:?} is not packed: letters must cover 1..=max exactly")]
    NotPacked(Vec<Value>),
    /// A nonempty word was required.
    #[error("operation requires a nonempty word")]
    EmptyWord,
    /// A 1-based position fell outside the word.
    #[error("position {pos} out of range 1..={len}")]
    PositionOutOfRange { pos: usize, len: usize },
    /// Positions must be given strictly increasing.
    #[error("positions {0:?} must be strictly increasing")]
    UnsortedPositions(Vec<usize>),
    /// A value-cut sequence violated `0 < l₁ < … < l_p < r`.
    #[error("cuts {cuts:?} must satisfy 0 < l1 < ... < lp < {arity}")]
    BadCuts { cuts: Vec<Value>, arity: Value },
    /// Two words were expected to share length and arity.
    #[error("shape mismatch: length {0} arity {1} vs length {2} arity {3}")]
    ShapeMismatch(usize, Value, usize, Value),
}

/// A packed word. The empty word is allowed and stands for the unit scalar
/// when words index basis elements of the free module.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Value>", into = "Vec<Value>")]
pub struct Surjection {
    word: Vec<Value>,
}

impl TryFrom<Vec<Value>> for Surjection {
    type Error = WordError;
    fn try_from(word: Vec<Value>) -> Result<Self, WordError> {
        Surjection::new(word)
    }
}

impl From<Surjection> for Vec<Value> {
    fn from(s: Surjection) -> Vec<Value> {
        s.word
    }
}

/// Canonical total order: by length, then lexicographic. All reports and
/// serialized combinations list words in this order.
impl Ord for Surjection {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.word.cmp(&other.word))
    }
}

impl PartialOrd for Surjection {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Surjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.word.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Surjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Surjection {
    /// Validates and wraps a packed word.
    pub fn new(word: Vec<Value>) -> Result<Self, WordError> {
        let r = word.iter().copied().max().unwrap_or(0);
        let mut seen = vec![false; r as usize];
        for &v in &word {
            if v == 0 {
                return Err(WordError::NotPacked(word));
            }
            seen[(v - 1) as usize] = true;
        }
        if seen.iter().any(|s| !s) {
            return Err(WordError::NotPacked(word));
        }
        Ok(Surjection { word })
    }

    /// The empty word (unit of the concatenation algebra).
    pub fn empty() -> Self {
        Surjection { word: Vec::new() }
    }

    /// The identity permutation `(1,2,…,n)`.
    pub fn identity(n: usize) -> Self {
        Surjection {
            word: (1..=n as Value).collect(),
        }
    }

    /// Internal constructor for words already known to be packed.
    pub(crate) fn from_packed_unchecked(word: Vec<Value>) -> Self {
        debug_assert!(
            Surjection::new(word.clone()).is_ok(),
            "not packed: {word:?}"
        );
        Surjection { word }
    }

    /// The unique packed word with the same strict-order comparisons as `seq`:
    /// `std(x)ᵢ < std(x)ⱼ ⇔ xᵢ < xⱼ`.
    pub fn standardize(seq: &[Value]) -> Self {
        let mut distinct: Vec<Value> = seq.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let word = seq
            .iter()
            .map(|v| (distinct.binary_search(v).unwrap() + 1) as Value)
            .collect();
        Surjection { word }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// The arity `r`: number of distinct letters (0 for the empty word).
    pub fn arity(&self) -> Value {
        self.word.iter().copied().max().unwrap_or(0)
    }

    /// The defect `s(x) = n − r`: number of merged levels. 0 exactly for
    /// permutations.
    pub fn defect(&self) -> usize {
        self.len() - self.arity() as usize
    }

    pub fn letters(&self) -> &[Value] {
        &self.word
    }

    /// Value at the 1-based position `pos`.
    pub fn at(&self, pos: usize) -> Value {
        self.word[pos - 1]
    }

    /// Restriction `x|_J`: keep the 1-based positions in `J` (strictly
    /// increasing) and standardize.
    pub fn restrict(&self, positions: &[usize]) -> Result<Surjection, WordError> {
        let mut letters = Vec::with_capacity(positions.len());
        let mut prev = 0usize;
        for &p in positions {
            if p == 0 || p > self.len() {
                return Err(WordError::PositionOutOfRange {
                    pos: p,
                    len: self.len(),
                });
            }
            if p <= prev {
                return Err(WordError::UnsortedPositions(positions.to_vec()));
            }
            prev = p;
            letters.push(self.word[p - 1]);
        }
        Ok(Self::standardize(&letters))
    }

    /// Co-restriction `x|^{lo..hi}`: keep the positions whose value lies in
    /// the interval `lo..=hi` (in place) and standardize. An empty interval
    /// gives the empty word.
    pub fn corestrict(&self, lo: Value, hi: Value) -> Surjection {
        let letters: Vec<Value> = self
            .word
            .iter()
            .copied()
            .filter(|&v| lo <= v && v <= hi)
            .collect();
        Self::standardize(&letters)
    }

    /// Concatenation `x × y = (x₁,…,xₙ, y₁+r,…,y_m+r)`.
    pub fn concat(&self, other: &Surjection) -> Surjection {
        let r = self.arity();
        let mut word = self.word.clone();
        word.extend(other.word.iter().map(|v| v + r));
        Surjection { word }
    }

    /// Composition `self ∘ inner`, relabelling the values of `inner` through
    /// `self`. Requires `self.len() == inner.arity()`.
    pub fn compose(&self, inner: &Surjection) -> Surjection {
        assert_eq!(
            self.len(),
            inner.arity() as usize,
            "composition shape mismatch: |f| = {} but arity(x) = {}",
            self.len(),
            inner.arity()
        );
        Surjection {
            word: inner
                .word
                .iter()
                .map(|&v| self.word[(v - 1) as usize])
                .collect(),
        }
    }

    /// Prefix lengths `0 < i < n` at which the word splits as a
    /// concatenation: `max(x₁..xᵢ) < min(xᵢ₊₁..xₙ)`.
    #[allow(clippy::needless_range_loop)]
    pub fn concat_split_points(&self) -> Vec<usize> {
        let n = self.len();
        if n == 0 {
            return Vec::new();
        }
        let mut pts = Vec::new();
        let mut suffix_min = vec![Value::MAX; n + 1];
        for i in (0..n).rev() {
            suffix_min[i] = suffix_min[i + 1].min(self.word[i]);
        }
        let mut prefix_max = 0;
        for i in 1..n {
            prefix_max = prefix_max.max(self.word[i - 1]);
            if prefix_max < suffix_min[i] {
                pts.push(i);
            }
        }
        pts
    }

    /// A nonempty word is irreducible when it is not a concatenation of two
    /// nonempty packed words.
    pub fn is_irreducible(&self) -> bool {
        !self.is_empty() && self.concat_split_points().is_empty()
    }

    /// The unique maximal factorization `x = x¹ × … × x^p` into irreducible
    /// words. The empty word yields the empty factorization.
    pub fn irreducible_factorization(&self) -> Vec<Surjection> {
        if self.is_empty() {
            return Vec::new();
        }
        let mut factors = Vec::new();
        let mut start = 0usize;
        let mut base = 0 as Value;
        for p in self
            .concat_split_points()
            .into_iter()
            .chain(std::iter::once(self.len()))
        {
            let letters: Vec<Value> = self.word[start..p].iter().map(|v| v - base).collect();
            base += letters.iter().copied().max().unwrap_or(0);
            factors.push(Surjection { word: letters });
            start = p;
        }
        factors
    }

    /// The top decomposition `x = ∏_{j₁<…<j_λ} x′`: the 1-based positions of
    /// the maximal value `r` together with the lower word `x′ = x|^{1..r−1}`.
    pub fn top_decomposition(&self) -> Result<TopDecomposition, WordError> {
        if self.is_empty() {
            return Err(WordError::EmptyWord);
        }
        let r = self.arity();
        let mut positions = Vec::new();
        let mut lower = Vec::new();
        for (i, &v) in self.word.iter().enumerate() {
            if v == r {
                positions.push(i + 1);
            } else {
                lower.push(v);
            }
        }
        Ok(TopDecomposition {
            positions,
            lower: Surjection { word: lower },
        })
    }

    /// Inverse of [`top_decomposition`](Self::top_decomposition): insert a new
    /// maximal value at the given 1-based positions of the result.
    pub fn insert_top(lower: &Surjection, positions: &[usize]) -> Result<Surjection, WordError> {
        if positions.is_empty() {
            return Err(WordError::EmptyWord);
        }
        let n = lower.len() + positions.len();
        let mut prev = 0usize;
        for &p in positions {
            if p == 0 || p > n {
                return Err(WordError::PositionOutOfRange { pos: p, len: n });
            }
            if p <= prev {
                return Err(WordError::UnsortedPositions(positions.to_vec()));
            }
            prev = p;
        }
        let top = lower.arity() + 1;
        let mut word = Vec::with_capacity(n);
        let mut next_pos = positions.iter().peekable();
        let mut lower_iter = lower.word.iter();
        for i in 1..=n {
            if next_pos.peek() == Some(&&i) {
                next_pos.next();
                word.push(top);
            } else {
                word.push(*lower_iter.next().expect("position bookkeeping"));
            }
        }
        Ok(Surjection { word })
    }

    /// The gap vector `𝕄(x) = (𝕄_λ,…,𝕄₁)` of distances between consecutive
    /// top positions, most significant entry first, plus the head gap
    /// `𝕄₀ = j₁ − 1` stored separately.
    pub fn gap_vector(&self) -> Result<GapVector, WordError> {
        let td = self.top_decomposition()?;
        let j = &td.positions;
        let lam = j.len();
        let mut entries = Vec::with_capacity(lam);
        entries.push(self.len() - j[lam - 1]);
        for i in (1..lam).rev() {
            entries.push(j[i] - j[i - 1] - 1);
        }
        Ok(GapVector {
            entries,
            head_gap: j[0] - 1,
        })
    }

    /// The split `x^l̲ = x|^{1..l₁} × x|^{l₁+1..l₂} × … × x|^{l_p+1..r}` along
    /// value cuts `0 < l₁ < … < l_p < r`. An empty cut list returns `x`.
    pub fn value_split(&self, cuts: &[Value]) -> Result<Surjection, WordError> {
        let r = self.arity();
        let mut prev = 0 as Value;
        for &c in cuts {
            if c <= prev || c >= r {
                return Err(WordError::BadCuts {
                    cuts: cuts.to_vec(),
                    arity: r,
                });
            }
            prev = c;
        }
        let mut out = Surjection::empty();
        let mut lo = 1;
        for &c in cuts {
            out = out.concat(&self.corestrict(lo, c));
            lo = c + 1;
        }
        Ok(out.concat(&self.corestrict(lo, r)))
    }

    /// The over product `y \ z = ε(r,s) ∘ (y × z)`: `y`'s letters shifted
    /// above all of `z`'s, then `z` unchanged.
    pub fn backslash(&self, other: &Surjection) -> Result<Surjection, WordError> {
        if self.is_empty() || other.is_empty() {
            return Err(WordError::EmptyWord);
        }
        let s = other.arity();
        let mut word: Vec<Value> = self.word.iter().map(|v| v + s).collect();
        word.extend_from_slice(&other.word);
        Ok(Surjection { word })
    }

    /// Prefix lengths `m` realizing `x = y \ z` with `|y| = m`: every letter
    /// of the prefix exceeds every letter of the suffix.
    #[allow(clippy::needless_range_loop)]
    pub fn backslash_split_points(&self) -> Vec<usize> {
        let n = self.len();
        if n == 0 {
            return Vec::new();
        }
        let mut suffix_max = vec![0 as Value; n + 1];
        for i in (0..n).rev() {
            suffix_max[i] = suffix_max[i + 1].max(self.word[i]);
        }
        let mut prefix_min = Value::MAX;
        let mut pts = Vec::new();
        for m in 1..n {
            prefix_min = prefix_min.min(self.word[m - 1]);
            if prefix_min > suffix_max[m] {
                pts.push(m);
            }
        }
        pts
    }

    /// All ways of writing `x = y \ z`, as pairs `(y, z)`.
    pub fn backslash_splits(&self) -> Vec<(Surjection, Surjection)> {
        self.backslash_split_points()
            .into_iter()
            .map(|m| self.backslash_split_at(m))
            .collect()
    }

    /// The split `x = y \ z` with `|y| = m`. Panics unless `m` is one of the
    /// [`backslash_split_points`](Self::backslash_split_points).
    pub fn backslash_split_at(&self, m: usize) -> (Surjection, Surjection) {
        let z = Surjection {
            word: self.word[m..].to_vec(),
        };
        let s = z.arity();
        let y = Surjection {
            word: self.word[..m].iter().map(|v| v - s).collect(),
        };
        debug_assert_eq!(y.backslash(&z).as_ref(), Ok(self));
        (y, z)
    }

    /// The glued product `x · y`: concatenate the lower words and re-insert a
    /// common maximal value at the top positions of `x` together with the top
    /// positions of `y` shifted by `|x|`.
    pub fn dot(&self, other: &Surjection) -> Result<Surjection, WordError> {
        let tx = self.top_decomposition()?;
        let ty = other.top_decomposition()?;
        let mut positions = tx.positions;
        positions.extend(ty.positions.into_iter().map(|p| p + self.len()));
        Surjection::insert_top(&tx.lower.concat(&ty.lower), &positions)
    }

    /// Prefix lengths `0 < a < n` realizing `x = u · v` with `|u| = a`: the
    /// top positions must split across `a` and the lower word must split as a
    /// concatenation (either side may be empty) at `a − #{tops ≤ a}`.
    pub fn dot_split_points(&self) -> Vec<usize> {
        let Ok(td) = self.top_decomposition() else {
            return Vec::new();
        };
        let lam = td.positions.len();
        if lam < 2 {
            return Vec::new();
        }
        let lower = &td.lower.word;
        let k_max = lower.len();
        let mut suffix_min = vec![Value::MAX; k_max + 1];
        for i in (0..k_max).rev() {
            suffix_min[i] = suffix_min[i + 1].min(lower[i]);
        }
        let mut prefix_max = vec![0 as Value; k_max + 1];
        for i in 0..k_max {
            prefix_max[i + 1] = prefix_max[i].max(lower[i]);
        }
        let mut pts = Vec::new();
        let mut lam1 = 0usize;
        for a in 1..self.len() {
            if td.positions.binary_search(&a).is_ok() {
                lam1 += 1;
            }
            if lam1 == 0 || lam1 == lam {
                continue;
            }
            let k = a - lam1;
            if prefix_max[k] < suffix_min[k] {
                pts.push(a);
            }
        }
        pts
    }

    /// The split `x = u · v` with `|u| = a`. Returns `None` unless `a` is one
    /// of the [`dot_split_points`](Self::dot_split_points).
    pub fn dot_split_at(&self, a: usize) -> Option<(Surjection, Surjection)> {
        if !self.dot_split_points().contains(&a) {
            return None;
        }
        let td = self.top_decomposition().ok()?;
        let lam1 = td.positions.iter().take_while(|&&p| p <= a).count();
        let k = a - lam1;
        let u_lower = Surjection {
            word: td.lower.word[..k].to_vec(),
        };
        let m = u_lower.arity();
        let v_lower = Surjection {
            word: td.lower.word[k..].iter().map(|v| v - m).collect(),
        };
        let u = Surjection::insert_top(&u_lower, &td.positions[..lam1]).ok()?;
        let v_positions: Vec<usize> = td.positions[lam1..].iter().map(|p| p - a).collect();
        let v = Surjection::insert_top(&v_lower, &v_positions).ok()?;
        debug_assert_eq!(u.dot(&v).as_ref(), Ok(self));
        Some((u, v))
    }

    /// A nonempty word is `·`-indecomposable when it is not a glued product
    /// of two nonempty words.
    pub fn is_dot_indecomposable(&self) -> bool {
        !self.is_empty() && self.dot_split_points().is_empty()
    }

    /// Full factorization into `·`-indecomposables (repeatedly splitting off
    /// the shortest left factor) plus the canonical grouping whose factors
    /// after the first are all irreducible.
    pub fn indecomposable_factorization(&self) -> Result<DotFactorization, WordError> {
        if self.is_empty() {
            return Err(WordError::EmptyWord);
        }
        let mut full = Vec::new();
        let mut rest = self.clone();
        loop {
            match rest.dot_split_points().first() {
                Some(&a) => {
                    let (u, v) = rest.dot_split_at(a).expect("listed split point");
                    full.push(u);
                    rest = v;
                }
                None => {
                    full.push(rest);
                    break;
                }
            }
        }
        // Merge the shortest prefix of the full factorization such that every
        // remaining factor is irreducible.
        let k = full.len();
        let mut j = k;
        while j > 1 && full[j - 1].is_irreducible() {
            j -= 1;
        }
        let mut head = full[0].clone();
        for f in &full[1..j] {
            head = head.dot(f).expect("nonempty factors");
        }
        let mut canonical = vec![head];
        canonical.extend_from_slice(&full[j..]);
        Ok(DotFactorization { full, canonical })
    }

    /// Upward covers of `x` in the right weak order on `STₙʳ`: for each value
    /// `i` whose occurrences all end before those of `i+1` start, swap the two
    /// values.
    pub fn bruhat_covers(&self) -> Vec<Surjection> {
        let r = self.arity();
        let mut covers = Vec::new();
        for i in 1..r {
            let last_i = self.word.iter().rposition(|&v| v == i);
            let first_next = self.word.iter().position(|&v| v == i + 1);
            if let (Some(last_i), Some(first_next)) = (last_i, first_next) {
                if last_i < first_next {
                    let word = self
                        .word
                        .iter()
                        .map(|&v| match v {
                            v if v == i => i + 1,
                            v if v == i + 1 => i,
                            v => v,
                        })
                        .collect();
                    covers.push(Surjection { word });
                }
            }
        }
        covers
    }

    /// Order test in the right weak order on `STₙʳ` (reflexive closure of the
    /// cover relation). Errors if the two words live in different `STₙʳ`.
    pub fn bruhat_leq(&self, other: &Surjection) -> Result<bool, WordError> {
        if self.len() != other.len() || self.arity() != other.arity() {
            return Err(WordError::ShapeMismatch(
                self.len(),
                self.arity(),
                other.len(),
                other.arity(),
            ));
        }
        if self == other {
            return Ok(true);
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut frontier = vec![self.clone()];
        while let Some(x) = frontier.pop() {
            for c in x.bruhat_covers() {
                if c == *other {
                    return Ok(true);
                }
                if seen.insert(c.clone()) {
                    frontier.push(c);
                }
            }
        }
        Ok(false)
    }

    /// Words reached by transposing one pair of value classes `a < b` whose
    /// supports are separated: every position of `a` precedes every position
    /// of `b`. Restricted to adjacent pairs `b = a + 1` these are exactly the
    /// [`Self::bruhat_covers`]; allowing arbitrary pairs generates the strong
    /// refinement of the weak order, the second way the permutation order
    /// extends to `STₙʳ`.
    pub fn separated_value_swaps(&self) -> Vec<Surjection> {
        let r = self.arity();
        let mut out = Vec::new();
        for a in 1..r {
            for b in a + 1..=r {
                let last_a = self.word.iter().rposition(|&v| v == a);
                let first_b = self.word.iter().position(|&v| v == b);
                if let (Some(last_a), Some(first_b)) = (last_a, first_b) {
                    if last_a < first_b {
                        let word = self
                            .word
                            .iter()
                            .map(|&v| match v {
                                v if v == a => b,
                                v if v == b => a,
                                v => v,
                            })
                            .collect();
                        out.push(Surjection { word });
                    }
                }
            }
        }
        out
    }

    /// Order test in the strong refinement of the weak order on `STₙʳ`: the
    /// transitive closure of separated value-class transpositions. Coarser
    /// than [`Self::bruhat_leq`]; products of words are monotone with respect
    /// to this order in each argument.
    pub fn strong_leq(&self, other: &Surjection) -> Result<bool, WordError> {
        if self.len() != other.len() || self.arity() != other.arity() {
            return Err(WordError::ShapeMismatch(
                self.len(),
                self.arity(),
                other.len(),
                other.arity(),
            ));
        }
        if self == other {
            return Ok(true);
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut frontier = vec![self.clone()];
        while let Some(x) = frontier.pop() {
            for c in x.separated_value_swaps() {
                if c == *other {
                    return Ok(true);
                }
                if seen.insert(c.clone()) {
                    frontier.push(c);
                }
            }
        }
        Ok(false)
    }
}

/// Result of a top decomposition: 1-based positions of the maximal value and
/// remaining lower word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopDecomposition {
    pub positions: Vec<usize>,
    pub lower: Surjection,
}

impl TopDecomposition {
    /// Re-insert the maximal value, recovering the original word.
    pub fn reassemble(&self) -> Result<Surjection, WordError> {
        Surjection::insert_top(&self.lower, &self.positions)
    }
}

/// Gap vector `(𝕄_λ,…,𝕄₁)` with the head gap `𝕄₀` kept apart. Compare gap
/// vectors lexicographically on `entries`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapVector {
    pub entries: Vec<usize>,
    pub head_gap: usize,
}

/// Full and canonical factorizations with respect to the glued product `·`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DotFactorization {
    /// Greedy factorization into `·`-indecomposables.
    pub full: Vec<Surjection>,
    /// Grouping `x = x¹ · … · x^p` with `x²,…,x^p` irreducible.
    pub canonical: Vec<Surjection>,
}

/// All packed words of length `n`, in canonical order.
pub fn all_surjections(n: usize) -> Vec<Surjection> {
    if n == 0 {
        return vec![Surjection::empty()];
    }
    let mut words = Vec::new();
    let mut current: Vec<Value> = Vec::with_capacity(n);
    // Words over [r] that hit every value, pruned by the count of values
    // still missing versus positions left.
    fn extend(
        n: usize,
        r: Value,
        used: &mut [bool],
        missing: usize,
        current: &mut Vec<Value>,
        out: &mut Vec<Surjection>,
    ) {
        let left = n - current.len();
        if missing > left {
            return;
        }
        if left == 0 {
            out.push(Surjection {
                word: current.clone(),
            });
            return;
        }
        for v in 1..=r {
            let first = !used[v as usize - 1];
            if first {
                used[v as usize - 1] = true;
            }
            current.push(v);
            extend(n, r, used, missing - usize::from(first), current, out);
            current.pop();
            if first {
                used[v as usize - 1] = false;
            }
        }
    }
    for r in 1..=(n as Value) {
        let mut used = vec![false; r as usize];
        extend(n, r, &mut used, r as usize, &mut current, &mut words);
    }
    words.sort();
    words
}

/// All packed words of length `n` and arity `r`, in canonical order.
pub fn all_surjections_with_arity(n: usize, r: Value) -> Vec<Surjection> {
    all_surjections(n)
        .into_iter()
        .filter(|x| x.arity() == r)
        .collect()
}

/// Convenience constructor used pervasively in tests: panics on non-packed
/// input.
pub fn word(letters: &[Value]) -> Surjection {
    Surjection::new(letters.to_vec()).expect("word literal must be packed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standardize_golden() {
        assert_eq!(
            Surjection::standardize(&[1, 5, 4, 7, 5]),
            word(&[1, 3, 2, 4, 3])
        );
        assert_eq!(Surjection::standardize(&[2, 1, 2]), word(&[2, 1, 2]));
        assert_eq!(Surjection::standardize(&[]), Surjection::empty());
    }

    #[test]
    fn packing_validation() {
        assert!(Surjection::new(vec![1, 3]).is_err());
        assert!(Surjection::new(vec![0, 1]).is_err());
        assert!(Surjection::new(vec![2, 1, 2]).is_ok());
        assert!(Surjection::new(vec![]).is_ok());
    }

    #[test]
    fn restrict_golden() {
        let x = word(&[3, 1, 2, 5, 1, 4, 3, 5, 4, 2]);
        assert_eq!(x.restrict(&[4, 8]).unwrap(), word(&[1, 1]));
        assert!(x.restrict(&[8, 4]).is_err());
        assert!(x.restrict(&[0]).is_err());
        assert!(x.restrict(&[11]).is_err());
    }

    #[test]
    fn corestrict_golden() {
        let x = word(&[3, 4, 2, 5, 1, 1, 3, 5]);
        assert_eq!(x.corestrict(1, 2), word(&[2, 1, 1]));
        assert_eq!(x.corestrict(3, 5), word(&[1, 2, 3, 1, 3]));
        assert_eq!(x.corestrict(2, 1), Surjection::empty());
    }

    #[test]
    fn concat_and_factorization() {
        let x = word(&[2, 1]).concat(&word(&[1, 1, 2]));
        assert_eq!(x, word(&[2, 1, 3, 3, 4]));
        // (1,1,2) = (1,1)×(1) splits further: three irreducible factors.
        assert_eq!(
            x.irreducible_factorization(),
            vec![word(&[2, 1]), word(&[1, 1]), word(&[1])]
        );
        assert!(word(&[1, 2, 1]).is_irreducible());
        assert!(!word(&[1, 2]).is_irreducible());
        assert!(!Surjection::empty().is_irreducible());
    }

    #[test]
    fn top_decomposition_golden() {
        let x = word(&[3, 1, 2, 5, 1, 4, 3, 5, 4, 2]);
        let td = x.top_decomposition().unwrap();
        assert_eq!(td.positions, vec![4, 8]);
        assert_eq!(td.lower, word(&[3, 1, 2, 1, 4, 3, 4, 2]));
        assert_eq!(td.reassemble().unwrap(), x);

        let ones = word(&[1, 1]);
        let td = ones.top_decomposition().unwrap();
        assert_eq!(td.positions, vec![1, 2]);
        assert_eq!(td.lower, Surjection::empty());
    }

    #[test]
    fn gap_vector_golden() {
        let x = word(&[3, 1, 2, 5, 1, 4, 3, 5, 4, 2]);
        let g = x.gap_vector().unwrap();
        assert_eq!(g.entries, vec![2, 3]);
        assert_eq!(g.head_gap, 3);

        let g = word(&[2, 1]).gap_vector().unwrap();
        assert_eq!(g.entries, vec![1]);
        assert_eq!(g.head_gap, 0);
    }

    #[test]
    fn value_split_golden() {
        let x = word(&[2, 3, 1]);
        assert_eq!(x.value_split(&[2]).unwrap(), word(&[2, 1, 3]));
        assert_eq!(x.value_split(&[]).unwrap(), x);
        let y = word(&[2, 4, 3, 1]);
        assert_eq!(y.value_split(&[1, 3]).unwrap(), word(&[1, 2, 3, 4]));
        assert!(y.value_split(&[4]).is_err());
        assert!(y.value_split(&[2, 2]).is_err());
    }

    #[test]
    fn backslash_golden() {
        assert_eq!(
            word(&[3, 4, 1, 2]).backslash(&word(&[1])).unwrap(),
            word(&[4, 5, 2, 3, 1])
        );
        assert_eq!(word(&[1]).backslash(&word(&[1])).unwrap(), word(&[2, 1]));
        assert!(Surjection::empty().backslash(&word(&[1])).is_err());
        let x = word(&[4, 5, 2, 3, 1]);
        assert_eq!(
            x.backslash_splits(),
            vec![
                (word(&[1, 2]), word(&[2, 3, 1])),
                (word(&[3, 4, 1, 2]), word(&[1])),
            ]
        );
    }

    #[test]
    fn dot_golden() {
        assert_eq!(word(&[1]).dot(&word(&[1])).unwrap(), word(&[1, 1]));
        assert_eq!(
            word(&[2, 4, 1, 3, 2]).dot(&word(&[1, 2, 1])).unwrap(),
            word(&[2, 5, 1, 3, 2, 4, 5, 4])
        );
        let chain = word(&[2, 3, 4, 1, 3])
            .dot(&word(&[1, 2]))
            .unwrap()
            .dot(&word(&[1, 2, 3, 1]))
            .unwrap();
        assert_eq!(chain, word(&[2, 3, 7, 1, 3, 4, 7, 5, 6, 7, 5]));
    }

    #[test]
    fn dot_factorization_golden() {
        let x = word(&[2, 3, 7, 1, 3, 4, 7, 5, 6, 7, 5]);
        let f = x.indecomposable_factorization().unwrap();
        assert_eq!(
            f.full,
            vec![word(&[2, 3, 4, 1, 3]), word(&[1, 2]), word(&[1, 2, 3, 1])]
        );
        assert_eq!(
            f.canonical,
            vec![word(&[2, 3, 5, 1, 3, 4, 5]), word(&[1, 2, 3, 1])]
        );

        let f = word(&[2, 1]).indecomposable_factorization().unwrap();
        assert_eq!(f.full, vec![word(&[2, 1])]);
        assert_eq!(f.canonical, vec![word(&[2, 1])]);

        let f = word(&[1, 1]).indecomposable_factorization().unwrap();
        assert_eq!(f.full, vec![word(&[1]), word(&[1])]);
        assert_eq!(f.canonical, vec![word(&[1]), word(&[1])]);
    }

    #[test]
    fn bruhat_golden() {
        let x = word(&[1, 4, 1, 3, 4, 2]);
        let y = word(&[2, 4, 2, 3, 4, 1]);
        assert!(x.bruhat_leq(&y).unwrap());
        assert!(!y.bruhat_leq(&x).unwrap());
        let z = word(&[1, 3, 1, 4, 3, 2]);
        assert!(!x.bruhat_leq(&z).unwrap());
        assert!(!z.bruhat_leq(&x).unwrap());
        assert!(x.bruhat_leq(&x).unwrap());
        assert!(x.bruhat_leq(&word(&[1, 2, 1])).is_err());
    }

    #[test]
    fn strong_order_refines_weak_order() {
        // The separated swap 1 ↔ 3 relates words the adjacent-swap order
        // cannot: (1,3,2) and (3,1,2) sit on different weak-order chains.
        let x = word(&[1, 3, 2]);
        let y = word(&[3, 1, 2]);
        assert!(!x.bruhat_leq(&y).unwrap());
        assert!(x.strong_leq(&y).unwrap());
        assert!(!y.strong_leq(&x).unwrap());
        // Weak-order comparabilities are preserved.
        for n in 1..=4 {
            for u in all_surjections(n) {
                for v in all_surjections_with_arity(n, u.arity()) {
                    if u.bruhat_leq(&v).unwrap() {
                        assert!(u.strong_leq(&v).unwrap(), "{u} ≤ {v} lost");
                    }
                }
            }
        }
    }

    #[test]
    fn surjection_counts() {
        let fubini = [1usize, 1, 3, 13, 75, 541];
        for (n, &count) in fubini.iter().enumerate() {
            assert_eq!(all_surjections(n).len(), count);
        }
    }
}
