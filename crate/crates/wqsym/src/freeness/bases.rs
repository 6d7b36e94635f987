//! Generator bases for the free-structure theorems.
//!
//! Working degree by degree over the irreducibles `Irrₙ` (words with no
//! `×`-splitting):
//!
//! * `𝒟ₙ` — irreducibles admitting **no** backslash splitting `x = y\z`
//!   with `y ∈ 𝒟` (lower degree): the dendriform/brace generators;
//! * `𝒞ₙ` — irreducibles that either admit a splitting `x = y\z` with
//!   `y ∈ ℬ = Irr∖𝒞` (lower degree) or are `·`-decomposable;
//! * `ℬₙ = Irrₙ∖𝒞ₙ` — the Gerstenhaber–Voronov generators.
//!
//! Membership is decided by exhaustive search over splittings with the
//! lower-degree tables memoized; there is no closed form.

use std::collections::BTreeSet;

use crate::words::{all_surjections, Surjection};

/// Per-degree tables of `STₙ`, irreducibles, `·`-indecomposables, and the
/// generator sets `𝒟ₙ`, `𝒞ₙ`, `ℬₙ`, for all degrees up to a ceiling.
#[derive(Debug, Clone)]
pub struct BasisTables {
    max_n: usize,
    st: Vec<Vec<Surjection>>,
    irr: Vec<Vec<Surjection>>,
    indec: Vec<Vec<Surjection>>,
    d: Vec<Vec<Surjection>>,
    c: Vec<Vec<Surjection>>,
    b: Vec<Vec<Surjection>>,
    d_members: Vec<BTreeSet<Surjection>>,
    b_members: Vec<BTreeSet<Surjection>>,
}

impl BasisTables {
    /// Builds all tables for degrees `1..=max_n`.
    pub fn new(max_n: usize) -> Self {
        let mut tables = BasisTables {
            max_n,
            st: vec![Vec::new()],
            irr: vec![Vec::new()],
            indec: vec![Vec::new()],
            d: vec![Vec::new()],
            c: vec![Vec::new()],
            b: vec![Vec::new()],
            d_members: vec![BTreeSet::new()],
            b_members: vec![BTreeSet::new()],
        };
        for n in 1..=max_n {
            let st_n = all_surjections(n);
            let irr_n: Vec<Surjection> = st_n
                .iter()
                .filter(|x| x.is_irreducible())
                .cloned()
                .collect();
            let indec_n: Vec<Surjection> = st_n
                .iter()
                .filter(|x| x.is_dot_indecomposable())
                .cloned()
                .collect();

            let mut d_n = Vec::new();
            let mut c_n = Vec::new();
            let mut b_n = Vec::new();
            for x in &irr_n {
                let splits = x.backslash_splits();
                let has_d_head = splits
                    .iter()
                    .any(|(y, _)| tables.d_members[y.len()].contains(y));
                if !has_d_head {
                    d_n.push(x.clone());
                }
                let has_b_head = splits
                    .iter()
                    .any(|(y, _)| tables.b_members[y.len()].contains(y));
                if has_b_head || !x.is_dot_indecomposable() {
                    c_n.push(x.clone());
                } else {
                    b_n.push(x.clone());
                }
            }

            tables.d_members.push(d_n.iter().cloned().collect());
            tables.b_members.push(b_n.iter().cloned().collect());
            tables.st.push(st_n);
            tables.irr.push(irr_n);
            tables.indec.push(indec_n);
            tables.d.push(d_n);
            tables.c.push(c_n);
            tables.b.push(b_n);
        }
        tables
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    fn deg(&self, n: usize) -> usize {
        assert!(
            n >= 1 && n <= self.max_n,
            "degree {n} outside tabulated range 1..={}",
            self.max_n
        );
        n
    }

    /// All packed words of length `n`.
    pub fn st(&self, n: usize) -> &[Surjection] {
        &self.st[self.deg(n)]
    }

    /// `×`-irreducible words of length `n`.
    pub fn irreducibles(&self, n: usize) -> &[Surjection] {
        &self.irr[self.deg(n)]
    }

    /// `·`-indecomposable words of length `n`.
    pub fn indecomposables(&self, n: usize) -> &[Surjection] {
        &self.indec[self.deg(n)]
    }

    /// The dendriform/brace generator set `𝒟ₙ`.
    pub fn d_basis(&self, n: usize) -> &[Surjection] {
        &self.d[self.deg(n)]
    }

    /// The complement set `𝒞ₙ ⊆ Irrₙ`.
    pub fn c_basis(&self, n: usize) -> &[Surjection] {
        &self.c[self.deg(n)]
    }

    /// The Gerstenhaber–Voronov generator set `ℬₙ`.
    pub fn b_basis(&self, n: usize) -> &[Surjection] {
        &self.b[self.deg(n)]
    }

    pub fn in_d(&self, x: &Surjection) -> bool {
        self.d_members[self.deg(x.len())].contains(x)
    }

    pub fn in_b(&self, x: &Surjection) -> bool {
        self.b_members[self.deg(x.len())].contains(x)
    }
}
