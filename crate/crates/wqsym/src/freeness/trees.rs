//! Normal-form trees for the two free structures.
//!
//! * [`BraceTree`] — planar rooted trees with nodes decorated by `𝒟`; the
//!   word realization evaluates a node as `head\(c₁×…×c_p)`, and the trees
//!   of degree `n` biject with `Irrₙ`.
//! * [`GvTree`] — alternating trees for the Gerstenhaber–Voronov structure:
//!   brace nodes decorated by `ℬ` plus product nodes (`≥ 2` factors, none
//!   itself a product, evaluated by `·`); again a bijection with `Irrₙ`.
//!
//! Each tree also evaluates *inside the bialgebra*: decorations map through
//! `E`, brace nodes through `M₁ₚ`, product nodes through `·_q`. The two
//! routes are intertwined by `η` (brace trees) and `ψ^q` (GV trees), which
//! the freeness suite exploits as a cross-check.

use crate::algebra::LinearCombination;
use crate::hopf::{brace, eulerian_projector, tridendriform_lc, BracePair, Ops, TriKind};
use crate::words::Surjection;

use super::bases::BasisTables;

/// Normal form for the free brace structure: a head in `𝒟` with an ordered
/// (possibly empty) list of subtrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraceTree {
    pub head: Surjection,
    pub children: Vec<BraceTree>,
}

impl BraceTree {
    pub fn degree(&self) -> usize {
        self.head.len() + self.children.iter().map(BraceTree::degree).sum::<usize>()
    }

    /// Word realization `head\(c₁×…×c_p)`.
    pub fn evaluate_word(&self) -> Surjection {
        if self.children.is_empty() {
            return self.head.clone();
        }
        let mut tail = Surjection::empty();
        for child in &self.children {
            tail = tail.concat(&child.evaluate_word());
        }
        self.head
            .backslash(&tail)
            .expect("head and tail are nonempty")
    }

    /// Bialgebra realization: `E` on the head, brace over `(≻, ≺)` at
    /// `q = 0` on the children.
    pub fn evaluate_combination(&self, ops: &Ops) -> LinearCombination {
        let head = eulerian_projector(&self.head);
        if self.children.is_empty() {
            return head;
        }
        let args: Vec<LinearCombination> = self
            .children
            .iter()
            .map(|c| c.evaluate_combination(ops))
            .collect();
        brace(ops, BracePair::AtZero, &head, &args)
            .expect("brace of homogeneous combinations avoids unit cases")
    }
}

/// Normal form for the free Gerstenhaber–Voronov structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GvTree {
    /// Head in `ℬ` with ordered subtrees (any kind).
    Brace {
        head: Surjection,
        children: Vec<GvTree>,
    },
    /// Ordered product of `≥ 2` factors, none itself a product.
    Product { factors: Vec<GvTree> },
}

impl GvTree {
    pub fn degree(&self) -> usize {
        match self {
            GvTree::Brace { head, children } => {
                head.len() + children.iter().map(GvTree::degree).sum::<usize>()
            }
            GvTree::Product { factors } => factors.iter().map(GvTree::degree).sum(),
        }
    }

    /// Word realization: brace nodes via backslash, product nodes via `·`.
    pub fn evaluate_word(&self) -> Surjection {
        match self {
            GvTree::Brace { head, children } => {
                if children.is_empty() {
                    return head.clone();
                }
                let mut tail = Surjection::empty();
                for child in children {
                    tail = tail.concat(&child.evaluate_word());
                }
                head.backslash(&tail).expect("head and tail are nonempty")
            }
            GvTree::Product { factors } => {
                assert!(factors.len() >= 2, "product nodes need ≥ 2 factors");
                let mut acc = factors[0].evaluate_word();
                for f in &factors[1..] {
                    assert!(
                        !matches!(f, GvTree::Product { .. }),
                        "product factors must not be products"
                    );
                    acc = acc.dot(&f.evaluate_word()).expect("factors are nonempty");
                }
                acc
            }
        }
    }

    /// Bialgebra realization: `E` on heads, `M₁ₚ` over `(≽_q, ≺_q)` on
    /// brace nodes, `·_q` on product nodes.
    pub fn evaluate_combination(&self, ops: &Ops) -> LinearCombination {
        match self {
            GvTree::Brace { head, children } => {
                let head_lc = eulerian_projector(head);
                if children.is_empty() {
                    return head_lc;
                }
                let args: Vec<LinearCombination> = children
                    .iter()
                    .map(|c| c.evaluate_combination(ops))
                    .collect();
                brace(ops, BracePair::Symbolic, &head_lc, &args)
                    .expect("brace of homogeneous combinations avoids unit cases")
            }
            GvTree::Product { factors } => {
                let mut acc = factors[0].evaluate_combination(ops);
                for f in &factors[1..] {
                    let rhs = f.evaluate_combination(ops);
                    acc = tridendriform_lc(ops, &acc, &rhs, TriKind::Middle)
                        .expect("·_q of homogeneous combinations avoids unit cases");
                }
                acc
            }
        }
    }
}

/// Ordered lists of trees with prescribed total degree, built from
/// per-degree pools.
fn lists_of<T: Clone>(pool: &[Vec<T>], total: usize) -> Vec<Vec<T>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first_deg in 1..=total.min(pool.len() - 1) {
        for first in &pool[first_deg] {
            for mut rest in lists_of(pool, total - first_deg) {
                rest.insert(0, first.clone());
                out.push(rest);
            }
        }
    }
    out
}

/// All brace normal forms of each degree `1..=n`.
pub fn brace_trees(tables: &BasisTables, n: usize) -> Vec<Vec<BraceTree>> {
    assert!(n <= tables.max_n());
    let mut pool: Vec<Vec<BraceTree>> = vec![Vec::new()];
    for deg in 1..=n {
        let mut level = Vec::new();
        for head_deg in 1..=deg {
            for head in tables.d_basis(head_deg) {
                for children in lists_of(&pool, deg - head_deg) {
                    level.push(BraceTree {
                        head: head.clone(),
                        children,
                    });
                }
            }
        }
        pool.push(level);
    }
    pool.remove(0);
    pool
}

/// All Gerstenhaber–Voronov normal forms of each degree `1..=n`.
pub fn gv_trees(tables: &BasisTables, n: usize) -> Vec<Vec<GvTree>> {
    assert!(n <= tables.max_n());
    // `all` holds every tree, `plain` only the non-product ones (the legal
    // product factors).
    let mut all: Vec<Vec<GvTree>> = vec![Vec::new()];
    let mut plain: Vec<Vec<GvTree>> = vec![Vec::new()];
    for deg in 1..=n {
        let mut braces = Vec::new();
        for head_deg in 1..=deg {
            for head in tables.b_basis(head_deg) {
                for children in lists_of(&all, deg - head_deg) {
                    braces.push(GvTree::Brace {
                        head: head.clone(),
                        children,
                    });
                }
            }
        }
        let mut level = braces.clone();
        for factors in lists_of(&plain, deg) {
            if factors.len() >= 2 {
                level.push(GvTree::Product { factors });
            }
        }
        plain.push(braces);
        all.push(level);
    }
    all.remove(0);
    all
}
