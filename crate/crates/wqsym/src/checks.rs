//! Executable verification suites.
//!
//! Each suite exhaustively checks one family of structural identities up to
//! a total-degree bound, reporting the number of identities tested and the
//! first (minimal-degree) counterexample if any. All suites accept the
//! [`Ops`] handle so that a deliberately perturbed product is caught with a
//! concrete witness.

use std::collections::BTreeSet;

use crate::algebra::{LinearCombination, QPolynomial, TensorCombination};
use crate::freeness::{
    brace_trees, freeness_report, gv_trees, BasisTables, FreeMorphisms, FreenessReport,
};
use crate::hopf::{
    augmented_coproduct, augmented_coproduct_lc, brace, coproduct, dendriform_lc, expand_slot,
    is_primitive, shuffle_product, star, star_lc, tridendriform, tridendriform_lc,
    weak_right_direct, BracePair, DendKind, Ops, TriKind,
};
use crate::shuffles::{enumerate_shuffles, enumerate_stuffles, epsilon, BlockEndFilter};
use crate::words::{all_surjections, all_surjections_with_arity, Surjection};

/// The verification suites exposed by the library and the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteKind {
    Dendriform,
    Tridendriform,
    Bialgebra,
    Infinitesimal,
    Brace,
    Gv,
    Order,
    ShuffleSets,
    Freeness,
}

impl SuiteKind {
    pub const ALL: [SuiteKind; 9] = [
        SuiteKind::Dendriform,
        SuiteKind::Tridendriform,
        SuiteKind::Bialgebra,
        SuiteKind::Infinitesimal,
        SuiteKind::Brace,
        SuiteKind::Gv,
        SuiteKind::Order,
        SuiteKind::ShuffleSets,
        SuiteKind::Freeness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteKind::Dendriform => "dendriform",
            SuiteKind::Tridendriform => "tridendriform",
            SuiteKind::Bialgebra => "bialgebra",
            SuiteKind::Infinitesimal => "infinitesimal",
            SuiteKind::Brace => "brace",
            SuiteKind::Gv => "gv",
            SuiteKind::Order => "order",
            SuiteKind::ShuffleSets => "shuffle-sets",
            SuiteKind::Freeness => "freeness",
        }
    }

    pub fn parse(s: &str) -> Option<SuiteKind> {
        SuiteKind::ALL.into_iter().find(|k| k.name() == s)
    }

    /// Degree bound keeping the suite exhaustive yet quick.
    pub fn default_bound(self) -> usize {
        match self {
            SuiteKind::Dendriform | SuiteKind::Tridendriform | SuiteKind::ShuffleSets => 6,
            SuiteKind::Bialgebra | SuiteKind::Infinitesimal => 5,
            SuiteKind::Brace | SuiteKind::Gv | SuiteKind::Order | SuiteKind::Freeness => 4,
        }
    }
}

/// Outcome of one suite run.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    pub bound: usize,
    pub checks: usize,
    pub counterexample: Option<String>,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.counterexample.is_none()
    }
}

struct Runner {
    name: &'static str,
    bound: usize,
    checks: usize,
    failure: Option<String>,
}

impl Runner {
    fn new(name: &'static str, bound: usize) -> Self {
        Runner {
            name,
            bound,
            checks: 0,
            failure: None,
        }
    }

    fn ok(&self) -> bool {
        self.failure.is_none()
    }

    fn check(&mut self, cond: bool, msg: impl FnOnce() -> String) {
        if self.failure.is_some() {
            return;
        }
        self.checks += 1;
        if !cond {
            self.failure = Some(msg());
        }
    }

    fn check_lc(
        &mut self,
        lhs: &LinearCombination,
        rhs: &LinearCombination,
        ctx: impl FnOnce() -> String,
    ) {
        if self.failure.is_some() {
            return;
        }
        self.checks += 1;
        if lhs != rhs {
            let diff = lhs.combine(rhs, &QPolynomial::constant(-1));
            self.failure = Some(format!("{}; lhs − rhs = {diff}", ctx()));
        }
    }

    fn check_tensor(
        &mut self,
        lhs: &TensorCombination,
        rhs: &TensorCombination,
        ctx: impl FnOnce() -> String,
    ) {
        if self.failure.is_some() {
            return;
        }
        self.checks += 1;
        if lhs != rhs {
            let mut diff = lhs.clone();
            diff.add_assign_scaled(rhs, &QPolynomial::constant(-1));
            self.failure = Some(format!("{}; lhs − rhs = {diff}", ctx()));
        }
    }

    fn into_report(self) -> SuiteReport {
        SuiteReport {
            name: self.name,
            bound: self.bound,
            checks: self.checks,
            counterexample: self.failure,
        }
    }
}

/// Ordered tuples of nonempty words with total length exactly `total`.
fn word_tuples(count: usize, total: usize) -> Vec<Vec<Surjection>> {
    if count == 0 {
        return if total == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    if total < count {
        return Vec::new();
    }
    let mut out = Vec::new();
    for first_len in 1..=(total - (count - 1)) {
        for w in all_surjections(first_len) {
            for mut rest in word_tuples(count - 1, total - first_len) {
                rest.insert(0, w.clone());
                out.push(rest);
            }
        }
    }
    out
}

fn lcw(x: &Surjection) -> LinearCombination {
    LinearCombination::from_word(x.clone())
}

fn sum(a: &LinearCombination, b: &LinearCombination) -> LinearCombination {
    a.combine(b, &QPolynomial::one())
}

/// The three dendriform axioms for `(≻, ≺)` at `q = 0`, exhaustively over
/// word triples of total degree ≤ `bound`.
pub fn dendriform_suite(ops: &Ops, bound: usize) -> SuiteReport {
    let mut r = Runner::new("dendriform", bound);
    let prec = |a: &LinearCombination, b: &LinearCombination| {
        dendriform_lc(ops, a, b, DendKind::Left).expect("plain words")
    };
    let succ = |a: &LinearCombination, b: &LinearCombination| {
        dendriform_lc(ops, a, b, DendKind::Right).expect("plain words")
    };
    'outer: for total in 3..=bound {
        for tuple in word_tuples(3, total) {
            let (a, b, c) = (lcw(&tuple[0]), lcw(&tuple[1]), lcw(&tuple[2]));
            let ctx = |axiom: &'static str| {
                let t = tuple.clone();
                move || format!("{axiom} fails at a={}, b={}, c={}", t[0], t[1], t[2])
            };
            r.check_lc(
                &prec(&prec(&a, &b), &c),
                &prec(&a, &sum(&prec(&b, &c), &succ(&b, &c))),
                ctx("(a≺b)≺c = a≺(b≺c + b≻c)"),
            );
            r.check_lc(
                &prec(&succ(&a, &b), &c),
                &succ(&a, &prec(&b, &c)),
                ctx("(a≻b)≺c = a≻(b≺c)"),
            );
            r.check_lc(
                &succ(&sum(&prec(&a, &b), &succ(&a, &b)), &c),
                &succ(&a, &succ(&b, &c)),
                ctx("(a≺b + a≻b)≻c = a≻(b≻c)"),
            );
            if !r.ok() {
                break 'outer;
            }
        }
    }
    r.into_report()
}

/// The seven q-tridendriform axioms with symbolic `q`, plus the dual-route
/// identities tying `≽_q`, `*_q`, and the `q = 0` dendriform pair to their
/// direct enumerations.
pub fn tridendriform_suite(ops: &Ops, bound: usize) -> SuiteReport {
    let mut r = Runner::new("tridendriform", bound);
    let op = |a: &LinearCombination, b: &LinearCombination, kind: TriKind| {
        tridendriform_lc(ops, a, b, kind).expect("plain words")
    };
    let q = QPolynomial::q();

    'pairs: for total in 2..=bound {
        for tuple in word_tuples(2, total) {
            let (x, y) = (&tuple[0], &tuple[1]);
            r.check_lc(
                &tridendriform(ops, x, y, TriKind::WeakRight).expect("nonempty"),
                &weak_right_direct(x, y).expect("nonempty"),
                || format!("≽_q ≠ q·_q + ≻_q at x={x}, y={y}"),
            );
            let star_route = sum(
                &tridendriform(ops, x, y, TriKind::WeakRight).expect("nonempty"),
                &tridendriform(ops, x, y, TriKind::Left).expect("nonempty"),
            );
            r.check_lc(&star(x, y).expect("nonempty"), &star_route, || {
                format!("*_q ≠ ≽_q + ≺_q at x={x}, y={y}")
            });
            r.check_lc(
                &star(x, y).expect("nonempty").specialize_at_zero(),
                &shuffle_product(x, y).expect("nonempty"),
                || format!("*_q at q=0 ≠ shuffle product at x={x}, y={y}"),
            );
            for (kind, dend) in [
                (TriKind::Right, DendKind::Right),
                (TriKind::Left, DendKind::Left),
            ] {
                r.check_lc(
                    &tridendriform(ops, x, y, kind)
                        .expect("nonempty")
                        .specialize_at_zero(),
                    &dendriform_lc(ops, &lcw(x), &lcw(y), dend).expect("plain words"),
                    || format!("q=0 specialization mismatch for {kind:?} at x={x}, y={y}"),
                );
            }
            if !r.ok() {
                break 'pairs;
            }
        }
    }

    'triples: for total in 3..=bound {
        for tuple in word_tuples(3, total) {
            let (a, b, c) = (lcw(&tuple[0]), lcw(&tuple[1]), lcw(&tuple[2]));
            let ctx = |axiom: &'static str| {
                let t = tuple.clone();
                move || format!("{axiom} fails at a={}, b={}, c={}", t[0], t[1], t[2])
            };
            let prec = |u: &LinearCombination, v: &LinearCombination| op(u, v, TriKind::Left);
            let succ = |u: &LinearCombination, v: &LinearCombination| op(u, v, TriKind::Right);
            let mid = |u: &LinearCombination, v: &LinearCombination| op(u, v, TriKind::Middle);

            let bc_all = sum(&sum(&prec(&b, &c), &succ(&b, &c)), &mid(&b, &c).scaled(&q));
            r.check_lc(
                &prec(&prec(&a, &b), &c),
                &prec(&a, &bc_all),
                ctx("(a≺b)≺c = a≺(b≺c + b≻c + q b·c)"),
            );
            r.check_lc(
                &prec(&succ(&a, &b), &c),
                &succ(&a, &prec(&b, &c)),
                ctx("(a≻b)≺c = a≻(b≺c)"),
            );
            let ab_all = sum(&sum(&prec(&a, &b), &succ(&a, &b)), &mid(&a, &b).scaled(&q));
            r.check_lc(
                &succ(&ab_all, &c),
                &succ(&a, &succ(&b, &c)),
                ctx("(a≺b + a≻b + q a·b)≻c = a≻(b≻c)"),
            );
            r.check_lc(
                &mid(&mid(&a, &b), &c),
                &mid(&a, &mid(&b, &c)),
                ctx("(a·b)·c = a·(b·c)"),
            );
            r.check_lc(
                &mid(&succ(&a, &b), &c),
                &succ(&a, &mid(&b, &c)),
                ctx("(a≻b)·c = a≻(b·c)"),
            );
            r.check_lc(
                &mid(&prec(&a, &b), &c),
                &mid(&a, &succ(&b, &c)),
                ctx("(a≺b)·c = a·(b≻c)"),
            );
            r.check_lc(
                &prec(&mid(&a, &b), &c),
                &mid(&a, &prec(&b, &c)),
                ctx("(a·b)≺c = a·(b≺c)"),
            );
            if !r.ok() {
                break 'triples;
            }
        }
    }
    r.into_report()
}

/// Right-hand side of the coproduct compatibility for `∘ ∈ {≻, ·, ≺}`:
/// `Σ (x₍₁₎ * y₍₁₎) ⊗ (x₍₂₎ ∘ y₍₂₎)` over `Δ⁺⊗Δ⁺`, where a term with both
/// right parts trivial contributes `(x₍₁₎ ∘ y₍₁₎) ⊗ 1` instead.
fn compat_rhs(ops: &Ops, x: &Surjection, y: &Surjection, kind: TriKind) -> TensorCombination {
    let dx = augmented_coproduct(x);
    let dy = augmented_coproduct(y);
    let mut out = TensorCombination::zero(2);
    for (fx, cx) in dx.terms() {
        let (x1, x2) = (&fx[0], &fx[1]);
        for (fy, cy) in dy.terms() {
            let (y1, y2) = (&fy[0], &fy[1]);
            let c = cx * cy;
            if x2.is_empty() && y2.is_empty() {
                for (w, cw) in tridendriform(ops, x1, y1, kind)
                    .expect("full words are nonempty")
                    .terms()
                {
                    out.add_term(vec![w.clone(), Surjection::empty()], &(&c * cw));
                }
            } else {
                let first = star_lc(&lcw(x1), &lcw(y1)).expect("a slot may be a unit");
                let second = tridendriform_lc(ops, &lcw(x2), &lcw(y2), kind)
                    .expect("not both slots are units");
                for (u, cu) in first.terms() {
                    for (v, cv) in second.terms() {
                        out.add_term(vec![u.clone(), v.clone()], &(&(&c * cu) * cv));
                    }
                }
            }
        }
    }
    out
}

/// Coassociativity of `Δ̄` and the `Δ⁺`-compatibilities of `≻_q`, `·_q`,
/// `≺_q`, and `*_q`.
pub fn bialgebra_suite(ops: &Ops, bound: usize) -> SuiteReport {
    let mut r = Runner::new("bialgebra", bound);
    for n in 1..=(bound + 1) {
        for x in all_surjections(n) {
            let t = coproduct(&x);
            r.check_tensor(&expand_slot(&t, 0), &expand_slot(&t, 1), || {
                format!("Δ̄ fails coassociativity at {x}")
            });
        }
        if !r.ok() {
            break;
        }
    }

    'pairs: for total in 2..=bound {
        for tuple in word_tuples(2, total) {
            let (x, y) = (&tuple[0], &tuple[1]);
            for kind in [TriKind::Right, TriKind::Middle, TriKind::Left] {
                let lhs =
                    augmented_coproduct_lc(&tridendriform(ops, x, y, kind).expect("nonempty"));
                r.check_tensor(&lhs, &compat_rhs(ops, x, y, kind), || {
                    format!("Δ⁺ compatibility fails for {kind:?} at x={x}, y={y}")
                });
            }
            // Δ⁺ is a morphism for the unital quasi-shuffle *.
            let lhs = augmented_coproduct_lc(&star(x, y).expect("nonempty"));
            let dx = augmented_coproduct(x);
            let dy = augmented_coproduct(y);
            let mut rhs = TensorCombination::zero(2);
            for (fx, cx) in dx.terms() {
                for (fy, cy) in dy.terms() {
                    let c = cx * cy;
                    let first = star_lc(&lcw(&fx[0]), &lcw(&fy[0])).expect("star is unital");
                    let second = star_lc(&lcw(&fx[1]), &lcw(&fy[1])).expect("star is unital");
                    for (u, cu) in first.terms() {
                        for (v, cv) in second.terms() {
                            rhs.add_term(vec![u.clone(), v.clone()], &(&(&c * cu) * cv));
                        }
                    }
                }
            }
            r.check_tensor(&lhs, &rhs, || {
                format!("Δ⁺(x*y) ≠ Δ⁺(x)*Δ⁺(y) at x={x}, y={y}")
            });
            if !r.ok() {
                break 'pairs;
            }
        }
    }
    r.into_report()
}

/// The unital-infinitesimal relation for concatenation:
/// `Δ⁺(x×y) = Σ x₍₁₎⊗(x₍₂₎×y) + Σ (x×y₍₁₎)⊗y₍₂₎ − x⊗y`.
pub fn infinitesimal_suite(_ops: &Ops, bound: usize) -> SuiteReport {
    let mut r = Runner::new("infinitesimal", bound);
    'pairs: for total in 2..=bound {
        for tuple in word_tuples(2, total) {
            let (x, y) = (&tuple[0], &tuple[1]);
            let lhs = augmented_coproduct(&x.concat(y));
            let mut rhs = TensorCombination::zero(2);
            for (fx, c) in augmented_coproduct(x).terms() {
                rhs.add_term(vec![fx[0].clone(), fx[1].concat(y)], c);
            }
            for (fy, c) in augmented_coproduct(y).terms() {
                rhs.add_term(vec![x.concat(&fy[0]), fy[1].clone()], c);
            }
            rhs.add_term(vec![x.clone(), y.clone()], &QPolynomial::constant(-1));
            r.check_tensor(&lhs, &rhs, || {
                format!("unital-infinitesimal relation fails at x={x}, y={y}")
            });
            if !r.ok() {
                break 'pairs;
            }
        }
    }
    r.into_report()
}

/// All interleaved index sequences `0 ≤ i₁ ≤ j₁ ≤ … ≤ iₙ ≤ jₙ ≤ m`.
fn interleavings(n: usize, m: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(
        k: usize,
        n: usize,
        m: usize,
        lo: usize,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if k == n {
            out.push(cur.clone());
            return;
        }
        for i in lo..=m {
            for j in i..=m {
                cur.push((i, j));
                rec(k + 1, n, m, j, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(0, n, m, 0, &mut Vec::new(), &mut out);
    out
}

fn brace_composition_rhs(
    ops: &Ops,
    pair: BracePair,
    x: &Surjection,
    ys: &[Surjection],
    zs: &[Surjection],
) -> LinearCombination {
    let m = zs.len();
    let mut total = LinearCombination::zero();
    for seq in interleavings(ys.len(), m) {
        let mut args: Vec<LinearCombination> = Vec::new();
        let mut pos = 0usize;
        for (k, &(i, j)) in seq.iter().enumerate() {
            for z in &zs[pos..i] {
                args.push(lcw(z));
            }
            let inner_args: Vec<LinearCombination> = zs[i..j].iter().map(lcw).collect();
            args.push(brace(ops, pair, &lcw(&ys[k]), &inner_args).expect("plain words"));
            pos = j;
        }
        for z in &zs[pos..] {
            args.push(lcw(z));
        }
        let term = brace(ops, pair, &lcw(x), &args).expect("plain words");
        total.add_assign_scaled(&term, &QPolynomial::one());
    }
    total
}

/// The brace composition relation
/// `M₁ₘ(M₁ₙ(x; y⃗); z⃗) = Σ M₁ᵣ(x; …, M₁_{jₖ−iₖ}(yₖ; …), …)` over both
/// dendriform pairs.
pub fn brace_suite(ops: &Ops, bound: usize) -> SuiteReport {
    let mut r = Runner::new("brace", bound);
    'outer: for pair in [BracePair::AtZero, BracePair::Symbolic] {
        for n in 1..=bound.saturating_sub(2) {
            for m in 1..=(bound.saturating_sub(1 + n)) {
                for total in (1 + n + m)..=bound {
                    for tuple in word_tuples(1 + n + m, total) {
                        let x = &tuple[0];
                        let ys = &tuple[1..1 + n];
                        let zs = &tuple[1 + n..];
                        let ys_lc: Vec<LinearCombination> = ys.iter().map(lcw).collect();
                        let zs_lc: Vec<LinearCombination> = zs.iter().map(lcw).collect();
                        let inner = brace(ops, pair, &lcw(x), &ys_lc).expect("plain words");
                        let lhs = brace(ops, pair, &inner, &zs_lc).expect("plain words");
                        let rhs = brace_composition_rhs(ops, pair, x, ys, zs);
                        r.check_lc(&lhs, &rhs, || {
                            format!(
                                "brace composition fails ({pair:?}) at x={x}, ys={ys:?}, zs={zs:?}"
                            )
                        });
                        if !r.ok() {
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    r.into_report()
}

/// Gerstenhaber–Voronov distributivity of the brace over `·_q`:
/// `M₁ₙ(x·y; z⃗) = Σ_{0≤i≤j≤n} q^{j−i} M₁ᵢ(x; z₁..zᵢ) · z_{i+1} · … · z_j · M₁_{n−j}(y; z_{j+1}..zₙ)`.
pub fn gv_suite(ops: &Ops, bound: usize) -> SuiteReport {
    let mut r = Runner::new("gv", bound);
    let mid = |a: &LinearCombination, b: &LinearCombination| {
        tridendriform_lc(ops, a, b, TriKind::Middle).expect("homogeneous combinations")
    };
    'outer: for n in 1..=bound.saturating_sub(2) {
        for total in (2 + n)..=bound {
            for tuple in word_tuples(2 + n, total) {
                let (x, y) = (&tuple[0], &tuple[1]);
                let zs = &tuple[2..];
                let zs_lc: Vec<LinearCombination> = zs.iter().map(lcw).collect();
                let lhs = brace(ops, BracePair::Symbolic, &mid(&lcw(x), &lcw(y)), &zs_lc)
                    .expect("plain words");
                let mut rhs = LinearCombination::zero();
                for i in 0..=n {
                    for j in i..=n {
                        let left = brace(ops, BracePair::Symbolic, &lcw(x), &zs_lc[..i])
                            .expect("plain words");
                        let right = brace(ops, BracePair::Symbolic, &lcw(y), &zs_lc[j..])
                            .expect("plain words");
                        let mut chain = left;
                        for z in &zs_lc[i..j] {
                            chain = mid(&chain, z);
                        }
                        chain = mid(&chain, &right);
                        rhs.add_assign_scaled(&chain, &QPolynomial::monomial(1, j - i));
                    }
                }
                r.check_lc(&lhs, &rhs, || {
                    format!("GV distributivity fails at x={x}, y={y}, zs={zs:?}")
                });
                if !r.ok() {
                    break 'outer;
                }
            }
        }
    }
    r.into_report()
}

/// All compositions of `n` into positive parts.
fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Weak-order identities: `Sh(n₁,…,n_p)` as the interval `[1ₙ, ε]` of the
/// weak-order lattice, strict monotonicity of shuffled products in both the
/// map and the arguments, and lexicographic decrease of gap vectors under
/// value splits.
pub fn order_suite(_ops: &Ops, bound: usize) -> SuiteReport {
    let mut r = Runner::new("order", bound);

    for n in 1..=bound {
        let id = Surjection::identity(n);
        for parts in compositions(n) {
            if parts.is_empty() {
                continue;
            }
            let eps = epsilon(&parts);
            let set: BTreeSet<Surjection> = enumerate_shuffles(&parts, BlockEndFilter::All)
                .into_iter()
                .collect();
            let interval: BTreeSet<Surjection> = all_surjections_with_arity(n, n as u32)
                .into_iter()
                .filter(|w| {
                    id.bruhat_leq(w).expect("same length")
                        && w.bruhat_leq(&eps).expect("same length")
                })
                .collect();
            r.check(set == interval, || {
                format!("Sh{parts:?} differs from the weak-order interval [1, ε{parts:?}]")
            });
        }
        if !r.ok() {
            return r.into_report();
        }
    }

    // Strict monotonicity of w ↦ f∘(x₁×…×x_p) in f and in each argument.
    for big_r in 2..=3 {
        for parts in compositions(big_r) {
            if parts.len() < 2 {
                continue;
            }
            let maps = enumerate_shuffles(&parts, BlockEndFilter::All);
            // Argument tuples with prescribed arities and total length ≤ bound.
            let mut stacks: Vec<Vec<Vec<Surjection>>> = vec![vec![Vec::new()]];
            for &arity in &parts {
                let mut next = Vec::new();
                for partial in &stacks[stacks.len() - 1] {
                    let used: usize = partial.iter().map(Surjection::len).sum();
                    for len in arity..=(bound.saturating_sub(used)) {
                        for w in all_surjections_with_arity(len, arity as u32) {
                            let mut t = partial.clone();
                            t.push(w);
                            next.push(t);
                        }
                    }
                }
                stacks.push(next);
            }
            let tuples = &stacks[stacks.len() - 1];
            for tuple in tuples {
                let glued = tuple
                    .iter()
                    .fold(Surjection::empty(), |acc, w| acc.concat(w));
                for sigma in &maps {
                    for tau in &maps {
                        if sigma != tau && sigma.bruhat_leq(tau).expect("permutations") {
                            let a = sigma.compose(&glued);
                            let b = tau.compose(&glued);
                            r.check(a.bruhat_leq(&b).expect("same length") && a != b, || {
                                format!("σ={sigma} < τ={tau} not preserved on {tuple:?}")
                            });
                        }
                    }
                    // Covers in one argument slot: the product moves up by a
                    // single separated value-class transposition, hence
                    // strictly up in the strong refinement of the order.
                    for (slot, w) in tuple.iter().enumerate() {
                        for cover in w.bruhat_covers() {
                            let mut bumped = tuple.clone();
                            bumped[slot] = cover;
                            let glued_up = bumped
                                .iter()
                                .fold(Surjection::empty(), |acc, v| acc.concat(v));
                            let a = sigma.compose(&glued);
                            let b = sigma.compose(&glued_up);
                            r.check(
                                a.separated_value_swaps().contains(&b)
                                    && a.strong_leq(&b).expect("same length")
                                    && a != b,
                                || {
                                    format!(
                                        "argument monotonicity fails for σ={sigma} at {tuple:?}, slot {slot}"
                                    )
                                },
                            );
                        }
                    }
                }
                if !r.ok() {
                    return r.into_report();
                }
            }
        }
    }

    // Gap vectors never grow under value splits (same top multiplicity,
    // lexicographic comparison most-significant gap first).
    for n in 1..=bound {
        for x in all_surjections(n) {
            let gx = x.gap_vector().expect("nonempty");
            let inner: Vec<u32> = (1..x.arity()).collect();
            for mask in 0u64..(1 << inner.len()) {
                let cuts: Vec<u32> = inner
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &l)| l)
                    .collect();
                let split = x.value_split(&cuts).expect("valid cuts");
                let gs = split.gap_vector().expect("nonempty");
                r.check(
                    gs.entries.len() == gx.entries.len() && gs.entries <= gx.entries,
                    || format!("gap vector grows: 𝕄({split}) > 𝕄({x}) after cuts {cuts:?}"),
                );
            }
        }
        if !r.ok() {
            break;
        }
    }
    r.into_report()
}

/// Set-level identities of the refined shuffle calculus: operand recovery,
/// associativity of `Sh`, the three dendriform set identities, the `ε`
/// recursion, and the block-end partition of `SH`.
pub fn shuffle_sets_suite(_ops: &Ops, bound: usize) -> SuiteReport {
    let mut r = Runner::new("shuffle-sets", bound);

    // Operand recovery: f∘(x×y) restricted to each block of positions.
    'pairs: for total in 2..=bound.min(5) {
        for tuple in word_tuples(2, total) {
            let (x, y) = (&tuple[0], &tuple[1]);
            let glued = x.concat(y);
            let left_pos: Vec<usize> = (1..=x.len()).collect();
            let right_pos: Vec<usize> = (x.len() + 1..=glued.len()).collect();
            for f in enumerate_shuffles(
                &[x.arity() as usize, y.arity() as usize],
                BlockEndFilter::All,
            ) {
                let w = f.compose(&glued);
                r.check(
                    w.restrict(&left_pos).expect("valid positions") == *x
                        && w.restrict(&right_pos).expect("valid positions") == *y,
                    || format!("operand recovery fails for f={f} at x={x}, y={y}"),
                );
            }
            if !r.ok() {
                break 'pairs;
            }
        }
    }

    let compose_left = |outer: &[Surjection], inner: &[Surjection], tail: usize| {
        let mut set = BTreeSet::new();
        for f in outer {
            for g in inner {
                set.insert(f.compose(&g.concat(&Surjection::identity(tail))));
            }
        }
        set
    };
    let compose_right = |outer: &[Surjection], inner: &[Surjection], head: usize| {
        let mut set = BTreeSet::new();
        for f in outer {
            for h in inner {
                set.insert(f.compose(&Surjection::identity(head).concat(h)));
            }
        }
        set
    };
    let sh = |parts: &[usize], filter: BlockEndFilter| enumerate_shuffles(parts, filter);

    for n in 1..=bound.saturating_sub(2) {
        for m in 1..=(bound - n).saturating_sub(1) {
            for k in 1..=(bound - n - m) {
                use BlockEndFilter::{All, Left, Right};
                let triple: BTreeSet<Surjection> = sh(&[n, m, k], All).into_iter().collect();
                let left_assoc = compose_left(&sh(&[n + m, k], All), &sh(&[n, m], All), k);
                let right_assoc = compose_right(&sh(&[n, m + k], All), &sh(&[m, k], All), n);
                r.check(left_assoc == triple && right_assoc == triple, || {
                    format!("Sh associativity fails at ({n},{m},{k})")
                });

                let d1l = compose_left(&sh(&[n + m, k], Right), &sh(&[n, m], All), k);
                let d1r = compose_right(&sh(&[n, m + k], Right), &sh(&[m, k], Right), n);
                r.check(d1l == d1r, || {
                    format!("Sh^≻ set identity (1) fails at ({n},{m},{k})")
                });
                let d2l = compose_left(&sh(&[n + m, k], Left), &sh(&[n, m], Right), k);
                let d2r = compose_right(&sh(&[n, m + k], Right), &sh(&[m, k], Left), n);
                r.check(d2l == d2r, || {
                    format!("Sh^≺/Sh^≻ set identity (2) fails at ({n},{m},{k})")
                });
                let d3l = compose_left(&sh(&[n + m, k], Left), &sh(&[n, m], Left), k);
                let d3r = compose_right(&sh(&[n, m + k], Left), &sh(&[m, k], All), n);
                r.check(d3l == d3r, || {
                    format!("Sh^≺ set identity (3) fails at ({n},{m},{k})")
                });
                if !r.ok() {
                    return r.into_report();
                }
            }
        }
    }

    // ε recursion: ε(parts) = ε(Σ prefix, last)∘(ε(prefix)×1_last).
    for n in 2..=bound {
        for parts in compositions(n) {
            if parts.len() < 2 {
                continue;
            }
            let (prefix, last) = parts.split_at(parts.len() - 1);
            let head: usize = prefix.iter().sum();
            let recursed = epsilon(&[head, last[0]])
                .compose(&epsilon(prefix).concat(&Surjection::identity(last[0])));
            r.check(recursed == epsilon(&parts), || {
                format!("ε recursion fails at {parts:?}")
            });
        }
        if !r.ok() {
            return r.into_report();
        }
    }

    // Block-end trichotomy: SH(r,s) = SH^≺ ⊔ SH^≻ ⊔ SH^•.
    for total in 2..=bound.min(6) {
        for s in 1..total {
            let parts = [total - s, s];
            let all: BTreeSet<Surjection> = enumerate_stuffles(&parts, BlockEndFilter::All)
                .into_iter()
                .map(|st| st.map)
                .collect();
            let mut disjoint = BTreeSet::new();
            let mut overlap = false;
            for filter in [
                BlockEndFilter::Left,
                BlockEndFilter::Right,
                BlockEndFilter::Merged,
            ] {
                for st in enumerate_stuffles(&parts, filter) {
                    overlap |= !disjoint.insert(st.map);
                }
            }
            r.check(!overlap && disjoint == all, || {
                format!("block-end trichotomy fails for SH{parts:?}")
            });
        }
        if !r.ok() {
            break;
        }
    }
    r.into_report()
}

/// Freeness: per-degree rank reports, primitivity, leading terms, the
/// specialization consistency of `ψ^q`, homomorphism properties of `η` and
/// `ψ`, tree intertwiners, and primitive closure under brace and `·_q`.
pub fn freeness_suite(ops: &Ops, bound: usize) -> SuiteReport {
    let mut r = Runner::new("freeness", bound);
    let n_max = bound.max(1);
    let tables = BasisTables::new(n_max);
    let morphisms = FreeMorphisms::new(&tables);

    for n in 1..=n_max {
        let report = freeness_report(&morphisms, n, &FreenessReport::default_q_values(), true);
        r.check(report.pass, || {
            format!("freeness report fails at degree {n}: {}", report.to_json())
        });
        if !r.ok() {
            return r.into_report();
        }

        for x in tables.irreducibles(n) {
            let eta = morphisms.eta(x).expect("tabulated");
            let psi = morphisms.psi(x).expect("tabulated");
            r.check(is_primitive(&eta), || format!("η({x}) is not primitive"));
            r.check(is_primitive(&psi), || format!("ψ({x}) is not primitive"));
            if tables.in_b(x) {
                r.check(psi.coeff(x).is_one(), || {
                    format!("ψ({x}) does not have unit leading coefficient on {x}")
                });
            }
            // Terms of top arity carry q-free coefficients (the q = 0
            // reduction sees exactly them).
            for (w, c) in psi.terms() {
                if w.arity() == x.arity() {
                    r.check(c.degree().unwrap_or(0) == 0, || {
                        format!("ψ({x}) has a q-dependent coefficient {c} on top-arity word {w}")
                    });
                }
            }
        }
        if !r.ok() {
            return r.into_report();
        }
    }

    // Homomorphism property of ψ for the product: ψ(x·y) = ψ(x) ·_q ψ(y).
    for total in 2..=n_max {
        for i in 1..total {
            for x in tables.irreducibles(i) {
                for y in tables.irreducibles(total - i) {
                    let glued = x.dot(y).expect("nonempty");
                    r.check(glued.is_irreducible(), || {
                        format!("· does not preserve irreducibility at {x}, {y}")
                    });
                    let lhs = morphisms.psi(&glued).expect("tabulated");
                    let rhs = tridendriform_lc(
                        ops,
                        &morphisms.psi(x).expect("tabulated"),
                        &morphisms.psi(y).expect("tabulated"),
                        TriKind::Middle,
                    )
                    .expect("homogeneous combinations");
                    r.check_lc(&lhs, &rhs, || {
                        format!("ψ(x·y) ≠ ψ(x)·_qψ(y) at x={x}, y={y}")
                    });
                }
            }
        }
        if !r.ok() {
            return r.into_report();
        }
    }

    // Homomorphism property for braces with one argument: when the head
    // belongs to the generator family, the word-level M₁₁(x; z) = x\z is
    // sent to the bialgebra brace with the same head.
    for total in 2..=n_max {
        for i in 1..total {
            for z in tables.irreducibles(total - i) {
                for x in tables.d_basis(i) {
                    let w = x.backslash(z).expect("nonempty");
                    r.check(w.is_irreducible(), || {
                        format!("backslash does not preserve irreducibility at {x}, {z}")
                    });
                    let eta_lhs = morphisms.eta(&w).expect("tabulated");
                    let eta_rhs = brace(
                        ops,
                        BracePair::AtZero,
                        &morphisms.eta(x).expect("tabulated"),
                        &[morphisms.eta(z).expect("tabulated")],
                    )
                    .expect("homogeneous combinations");
                    r.check_lc(&eta_lhs, &eta_rhs, || {
                        format!("η(x\\z) ≠ M₁₁(η(x); η(z)) at x={x}, z={z}")
                    });
                }
                for x in tables.b_basis(i) {
                    let w = x.backslash(z).expect("nonempty");
                    let psi_lhs = morphisms.psi(&w).expect("tabulated");
                    let psi_rhs = brace(
                        ops,
                        BracePair::Symbolic,
                        &morphisms.psi(x).expect("tabulated"),
                        &[morphisms.psi(z).expect("tabulated")],
                    )
                    .expect("homogeneous combinations");
                    r.check_lc(&psi_lhs, &psi_rhs, || {
                        format!("ψ(x\\z) ≠ M₁₁(ψ(x); ψ(z)) at x={x}, z={z}")
                    });
                }
            }
        }
        if !r.ok() {
            return r.into_report();
        }
    }

    // Normal-form intertwiners: tree evaluation in the bialgebra equals the
    // morphism applied to the word realization.
    let tree_bound = n_max.min(4);
    for (n, level) in brace_trees(&tables, tree_bound).into_iter().enumerate() {
        for t in level {
            let via_tree = t.evaluate_combination(ops);
            let via_eta = morphisms.eta(&t.evaluate_word()).expect("tabulated");
            r.check_lc(&via_tree, &via_eta, || {
                format!("brace tree at degree {} disagrees with η: {t:?}", n + 1)
            });
        }
        if !r.ok() {
            return r.into_report();
        }
    }
    for (n, level) in gv_trees(&tables, tree_bound).into_iter().enumerate() {
        for t in level {
            let via_tree = t.evaluate_combination(ops);
            let via_psi = morphisms.psi(&t.evaluate_word()).expect("tabulated");
            r.check_lc(&via_tree, &via_psi, || {
                format!("GV tree at degree {} disagrees with ψ: {t:?}", n + 1)
            });
        }
        if !r.ok() {
            return r.into_report();
        }
    }

    // Primitive closure on the E-image spanning set.
    'closure: for total in 2..=n_max.min(4) {
        for i in 1..total {
            for x in all_surjections(i) {
                for y in all_surjections(total - i) {
                    let ex = crate::hopf::eulerian_projector(&x);
                    let ey = crate::hopf::eulerian_projector(&y);
                    let braced = brace(ops, BracePair::Symbolic, &ex, std::slice::from_ref(&ey))
                        .expect("homogeneous combinations");
                    r.check(is_primitive(&braced), || {
                        format!("M₁₁(E({x}); E({y})) is not primitive")
                    });
                    let middled = tridendriform_lc(ops, &ex, &ey, TriKind::Middle)
                        .expect("homogeneous combinations");
                    r.check(is_primitive(&middled), || {
                        format!("E({x}) ·_q E({y}) is not primitive")
                    });
                    if !r.ok() {
                        break 'closure;
                    }
                }
            }
        }
    }
    r.into_report()
}

/// Runs one suite at its default or an explicit bound.
pub fn run_suite(ops: &Ops, kind: SuiteKind, bound: Option<usize>) -> SuiteReport {
    let bound = bound.unwrap_or_else(|| kind.default_bound());
    match kind {
        SuiteKind::Dendriform => dendriform_suite(ops, bound),
        SuiteKind::Tridendriform => tridendriform_suite(ops, bound),
        SuiteKind::Bialgebra => bialgebra_suite(ops, bound),
        SuiteKind::Infinitesimal => infinitesimal_suite(ops, bound),
        SuiteKind::Brace => brace_suite(ops, bound),
        SuiteKind::Gv => gv_suite(ops, bound),
        SuiteKind::Order => order_suite(ops, bound),
        SuiteKind::ShuffleSets => shuffle_sets_suite(ops, bound),
        SuiteKind::Freeness => freeness_suite(ops, bound),
    }
}
