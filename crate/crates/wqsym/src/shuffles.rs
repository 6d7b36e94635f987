//! Shuffles, stuffles, and their refined block-end subsets.
//!
//! For a composition `(n₁,…,n_p)` of `n`, an *(n₁,…,n_p)-stuffle* is a packed
//! word `f` of length `n` that is strictly increasing inside each block of
//! consecutive positions of sizes `n₁,…,n_p`. Stuffles that are permutations
//! (defect 0) are *shuffles*. Applying a stuffle to the values of a
//! concatenation `x₁ × … × x_p` produces one term of the various (quasi-)
//! shuffle products; the refined subsets below compare the images of the
//! block-end positions and slice those products into left, right and middle
//! parts.

use itertools::Itertools;

use crate::words::{Surjection, Value};

/// A stuffle together with the composition it shuffles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stuffle {
    pub map: Surjection,
    pub composition: Vec<usize>,
}

impl Stuffle {
    /// The defect `s(f) = n − r`: how many value levels `f` merges.
    pub fn defect(&self) -> usize {
        self.map.defect()
    }
}

/// Conditions on the images `f(n₁), f(n₁+n₂), …, f(n)` of the block-end
/// positions, selecting the refined subsets of `Sh` and `SH`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockEndFilter {
    /// No condition: the full set.
    All,
    /// `≺`: block-end images strictly decreasing.
    Left,
    /// `≻`: block-end images strictly increasing.
    Right,
    /// `•`: all block-end images equal (necessarily to the maximum).
    Merged,
    /// `≽`: block-end images weakly increasing; equals `Right ⊔ Merged`.
    WeakRight,
}

fn end_positions(parts: &[usize]) -> Vec<usize> {
    let mut ends = Vec::with_capacity(parts.len());
    let mut acc = 0;
    for &p in parts {
        acc += p;
        ends.push(acc);
    }
    ends
}

fn passes(map: &Surjection, ends: &[usize], filter: BlockEndFilter) -> bool {
    let vals: Vec<Value> = ends.iter().map(|&e| map.at(e)).collect();
    match filter {
        BlockEndFilter::All => true,
        BlockEndFilter::Left => vals.windows(2).all(|w| w[0] > w[1]),
        BlockEndFilter::Right => vals.windows(2).all(|w| w[0] < w[1]),
        BlockEndFilter::Merged => vals.windows(2).all(|w| w[0] == w[1]),
        BlockEndFilter::WeakRight => vals.windows(2).all(|w| w[0] <= w[1]),
    }
}

/// Enumerate the stuffle set `SH(n₁,…,n_p)` restricted by `filter`, in
/// canonical (lexicographic) order.
pub fn enumerate_stuffles(parts: &[usize], filter: BlockEndFilter) -> Vec<Stuffle> {
    assert!(
        parts.iter().all(|&p| p >= 1),
        "composition parts must be ≥ 1"
    );
    let n: usize = parts.iter().sum();
    let max_part = parts.iter().copied().max().unwrap_or(0);
    let ends = end_positions(parts);
    let mut maps = Vec::new();
    // Pick, for each block, a strictly increasing image set A_i ⊆ {1..R} of
    // size n_i; the union must cover {1..R}.
    for big_r in max_part..=n {
        let mut word: Vec<Value> = Vec::with_capacity(n);
        collect_blocks(parts, 0, big_r as Value, 0u64, &mut word, &mut maps);
    }
    maps.sort();
    maps.into_iter()
        .filter(|m| passes(m, &ends, filter))
        .map(|map| Stuffle {
            map,
            composition: parts.to_vec(),
        })
        .collect()
}

fn collect_blocks(
    parts: &[usize],
    idx: usize,
    big_r: Value,
    covered: u64,
    word: &mut Vec<Value>,
    out: &mut Vec<Surjection>,
) {
    if idx == parts.len() {
        if covered == (1u64 << big_r) - 1 {
            out.push(Surjection::from_packed_unchecked(word.clone()));
        }
        return;
    }
    let len = word.len();
    for combo in (1..=big_r).combinations(parts[idx]) {
        let mask = combo.iter().fold(covered, |m, &v| m | 1u64 << (v - 1));
        word.extend(&combo);
        collect_blocks(parts, idx + 1, big_r, mask, word, out);
        word.truncate(len);
    }
}

/// Enumerate the shuffle set `Sh(n₁,…,n_p)` restricted by `filter`.
///
/// For `All`, `Left` and `Right` this is the defect-0 part of the matching
/// stuffle set. `Merged` selects `Sh^•(n₁,…,n_p)`: the stuffles obtained by
/// inserting a common maximal value at every block end of a shuffle of
/// `(n₁−1,…,n_p−1)`, i.e. the defect-(p−1) part of `SH^•`. `WeakRight` is the
/// union of `Right` and `Merged`.
pub fn enumerate_shuffles(parts: &[usize], filter: BlockEndFilter) -> Vec<Surjection> {
    let target_defect = |f: BlockEndFilter| match f {
        BlockEndFilter::Merged => parts.len().saturating_sub(1),
        _ => 0,
    };
    match filter {
        BlockEndFilter::WeakRight => {
            let mut out = enumerate_shuffles(parts, BlockEndFilter::Right);
            out.extend(enumerate_shuffles(parts, BlockEndFilter::Merged));
            out.sort();
            out
        }
        f => enumerate_stuffles(parts, f)
            .into_iter()
            .filter(|s| s.defect() == target_defect(f))
            .map(|s| s.map)
            .collect(),
    }
}

/// The maximal `(n₁,…,n_p)`-shuffle `ε(n₁,…,n_p)`: block `i` maps increasingly
/// onto the values just above those of all later blocks. For two parts its
/// image is `(m+1,…,m+n,1,…,m)`.
pub fn epsilon(parts: &[usize]) -> Surjection {
    let total: usize = parts.iter().sum();
    let mut word: Vec<Value> = Vec::with_capacity(total);
    let mut consumed = 0usize;
    for &p in parts {
        let hi = total - consumed;
        word.extend((hi - p + 1..=hi).map(|v| v as Value));
        consumed += p;
    }
    Surjection::from_packed_unchecked(word)
}
