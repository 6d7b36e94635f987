//! Rank-based verification of the two freeness theorems.
//!
//! For each degree `n` the report compares, against `|Irrₙ|`:
//!
//! * `rank{E(x) : x ∈ STₙ}` — the dimension of the primitive part;
//! * `rank{η(x) : x ∈ Irrₙ}` — the dendriform/brace morphism image;
//! * `rank{ψ^q(x) : x ∈ Irrₙ}` — the GV morphism image, at each requested
//!   rational `q` and symbolically over `ℚ(q)`;
//! * the normal-form tree counts `#𝕄(𝒟)ₙ` and `#G(ℬ)ₙ`, plus bijectivity
//!   of their word realizations onto `Irrₙ`.

use std::collections::BTreeSet;

use num::BigRational;
use serde_json::json;

use crate::algebra::{rank_at, rank_at_int, rank_symbolic, LinearCombination};
use crate::hopf::eulerian_projector;
use crate::words::Surjection;

use super::bases::BasisTables;
use super::morphisms::FreeMorphisms;
use super::trees::{brace_trees, gv_trees, BraceTree, GvTree};

/// Everything the freeness verification measures at one degree.
#[derive(Debug, Clone)]
pub struct FreenessReport {
    pub n: usize,
    pub st_count: usize,
    pub irr_count: usize,
    pub indec_count: usize,
    pub d_count: usize,
    pub c_count: usize,
    pub b_count: usize,
    pub e_rank: usize,
    pub eta_rank: usize,
    /// `("0", r₀), ("1", r₁), …, ("symbolic", r)` in request order.
    pub psi_ranks: Vec<(String, usize)>,
    pub brace_tree_count: usize,
    pub gv_tree_count: usize,
    pub normal_forms_bijective: bool,
    pub pass: bool,
}

/// `rank{E(x) : x ∈ STₙ}`: the primitive dimension in degree `n`.
pub fn prim_rank(tables: &BasisTables, n: usize) -> usize {
    let vectors: Vec<LinearCombination> = tables.st(n).iter().map(eulerian_projector).collect();
    rank_at_int(&vectors, 0).expect("E-images are homogeneous")
}

/// Runs the full degree-`n` verification.
pub fn freeness_report(
    morphisms: &FreeMorphisms,
    n: usize,
    q_values: &[BigRational],
    include_symbolic: bool,
) -> FreenessReport {
    let tables = morphisms.tables();
    let irr_count = tables.irreducibles(n).len();

    let e_rank = prim_rank(tables, n);

    let eta_vectors: Vec<LinearCombination> = tables
        .irreducibles(n)
        .iter()
        .map(|x| morphisms.eta(x).expect("tabulated irreducible"))
        .collect();
    let eta_rank = rank_at_int(&eta_vectors, 0).expect("η-images are homogeneous");

    let psi_vectors: Vec<LinearCombination> = tables
        .irreducibles(n)
        .iter()
        .map(|x| morphisms.psi(x).expect("tabulated irreducible"))
        .collect();
    let mut psi_ranks = Vec::new();
    for q in q_values {
        let r = rank_at(&psi_vectors, q).expect("ψ-images are homogeneous");
        psi_ranks.push((q.to_string(), r));
    }
    if include_symbolic {
        let r = rank_symbolic(&psi_vectors).expect("ψ-images are homogeneous");
        psi_ranks.push(("symbolic".to_string(), r));
    }

    let brace_level = brace_trees(tables, n).pop().unwrap_or_default();
    let gv_level = gv_trees(tables, n).pop().unwrap_or_default();
    let irr_set: BTreeSet<Surjection> = tables.irreducibles(n).iter().cloned().collect();
    let brace_images: BTreeSet<Surjection> =
        brace_level.iter().map(BraceTree::evaluate_word).collect();
    let gv_images: BTreeSet<Surjection> = gv_level.iter().map(GvTree::evaluate_word).collect();
    let normal_forms_bijective = brace_images.len() == brace_level.len()
        && gv_images.len() == gv_level.len()
        && brace_images == irr_set
        && gv_images == irr_set;

    let pass = e_rank == irr_count
        && eta_rank == irr_count
        && psi_ranks.iter().all(|(_, r)| *r == irr_count)
        && brace_level.len() == irr_count
        && gv_level.len() == irr_count
        && normal_forms_bijective;

    FreenessReport {
        n,
        st_count: tables.st(n).len(),
        irr_count,
        indec_count: tables.indecomposables(n).len(),
        d_count: tables.d_basis(n).len(),
        c_count: tables.c_basis(n).len(),
        b_count: tables.b_basis(n).len(),
        e_rank,
        eta_rank,
        psi_ranks,
        brace_tree_count: brace_level.len(),
        gv_tree_count: gv_level.len(),
        normal_forms_bijective,
        pass,
    }
}

impl FreenessReport {
    pub fn to_json(&self) -> serde_json::Value {
        let mut psi = serde_json::Map::new();
        for (key, rank) in &self.psi_ranks {
            psi.insert(key.clone(), json!(rank));
        }
        json!({
            "n": self.n,
            "counts": {
                "ST": self.st_count,
                "Irr": self.irr_count,
                "Indec": self.indec_count,
                "D": self.d_count,
                "C": self.c_count,
                "B": self.b_count,
            },
            "ranks": {
                "E": self.e_rank,
                "eta": self.eta_rank,
                "psi": serde_json::Value::Object(psi),
            },
            "normalForms": {
                "brace": self.brace_tree_count,
                "gv": self.gv_tree_count,
                "bijective": self.normal_forms_bijective,
            },
            "pass": self.pass,
        })
    }

    /// The default `q` specializations every report checks.
    pub fn default_q_values() -> Vec<BigRational> {
        [0i64, 1, -1, 2]
            .into_iter()
            .map(|v| BigRational::from_integer(v.into()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    use crate::hopf::{is_primitive, Ops};

    #[test]
    fn degree_three_report() {
        let tables = BasisTables::new(3);
        let m = FreeMorphisms::new(&tables);
        let report = freeness_report(&m, 3, &FreenessReport::default_q_values(), true);
        assert_eq!(report.st_count, 13);
        assert_eq!(report.irr_count, 8);
        assert_eq!(report.d_count, 4);
        assert_eq!(report.b_count, 2);
        assert_eq!(report.e_rank, 8);
        assert_eq!(report.eta_rank, 8);
        assert!(report.psi_ranks.iter().all(|(_, r)| *r == 8));
        assert_eq!(report.brace_tree_count, 8);
        assert_eq!(report.gv_tree_count, 8);
        assert!(report.normal_forms_bijective);
        assert!(report.pass);

        let js = report.to_json();
        assert_eq!(js["counts"]["ST"], 13);
        assert_eq!(js["ranks"]["psi"]["symbolic"], 8);
        assert_eq!(js["pass"], true);
    }

    #[test]
    fn degree_one_and_two_reports() {
        let tables = BasisTables::new(2);
        let m = FreeMorphisms::new(&tables);
        let r1 = freeness_report(&m, 1, &FreenessReport::default_q_values(), true);
        assert!(r1.pass);
        assert_eq!(r1.e_rank, 1);
        let r2 = freeness_report(&m, 2, &FreenessReport::default_q_values(), true);
        assert!(r2.pass);
        assert_eq!(r2.d_count, 1);
        assert_eq!(r2.b_count, 0);
        assert_eq!(r2.e_rank, 2);
    }

    #[test]
    fn tree_realizations_intertwine_with_morphisms() {
        // Brace trees: bialgebra evaluation equals η of the word
        // realization; GV trees likewise with ψ. Degree ≤ 3 keeps it quick;
        // the freeness suite pushes this to 4.
        let tables = BasisTables::new(3);
        let m = FreeMorphisms::new(&tables);
        let ops = Ops::exact();
        for level in brace_trees(&tables, 3) {
            for t in level {
                let via_tree = t.evaluate_combination(&ops);
                let via_eta = m.eta(&t.evaluate_word()).unwrap();
                assert_eq!(via_tree, via_eta, "η does not intertwine {t:?}");
                assert!(is_primitive(&via_tree));
            }
        }
        for level in gv_trees(&tables, 3) {
            for t in level {
                let via_tree = t.evaluate_combination(&ops);
                let via_psi = m.psi(&t.evaluate_word()).unwrap();
                assert_eq!(via_tree, via_psi, "ψ does not intertwine {t:?}");
            }
        }
    }
}
