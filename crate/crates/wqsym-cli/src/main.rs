//! `wqsym`: evaluate operations on packed words, print basis and dimension
//! tables, and run the verification suites.
//!
//! Exit codes: 0 on success, 1 when a requested check fails, 2 on usage or
//! input errors. Output is deterministic: terms print in canonical word
//! order and polynomials in ascending powers of `q`.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num::{BigRational, One, Signed};
use serde_json::json;
use wqsym::words::Surjection;
use wqsym::{
    coproduct, eulerian_projector, freeness_report, prim_rank, run_suite, star, tridendriform,
    BasisTables, FreeMorphisms, FreenessReport, LinearCombination, Ops, SuiteKind, TriKind,
};

#[derive(Parser)]
#[command(
    name = "wqsym",
    version,
    about = "Exact computations in the bialgebra of packed words",
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two packed words with a chosen product.
    Op {
        /// Product to apply.
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Coefficient parameter: a rational like `2` or `-1/3`, or `q` for
        /// symbolic output. Ignored by the word-level kinds
        /// (concat/dot/backslash).
        #[arg(long, default_value = "q", value_parser = parse_q, allow_hyphen_values = true)]
        q: QArg,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Left operand, e.g. `2,1,1`.
        x: String,
        /// Right operand, e.g. `1,2`.
        y: String,
    },
    /// Reduced coproduct of one packed word.
    Coproduct {
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        x: String,
    },
    /// Image of one packed word under the primitive projector E.
    Primitive {
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        x: String,
    },
    /// Image of an irreducible word under the free dendriform morphism η.
    Eta {
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        x: String,
    },
    /// Image of an irreducible word under the free morphism ψ (symbolic q
    /// unless --q gives a rational).
    Psi {
        #[arg(long, default_value = "q", value_parser = parse_q, allow_hyphen_values = true)]
        q: QArg,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        x: String,
    },
    /// List the word families ST, Irr, 𝒟, 𝒞, ℬ degree by degree.
    Basis {
        /// Largest degree to tabulate.
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Dimension and rank table: |ST|, |Irr|, the primitive rank, |𝒟|, |ℬ|.
    Dims {
        /// Largest degree to tabulate.
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run one verification suite; exits 1 with a counterexample on failure.
    Check {
        /// Which suite to run.
        #[arg(long, value_enum)]
        suite: SuiteArg,
        /// Exhaustive bound on the total degree of product arguments.
        #[arg(long)]
        max_total: Option<usize>,
        /// Alternative spelling of the bound for the degree-indexed suites.
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Concat,
    Shuffle,
    Left,
    Right,
    Middle,
    WeakRight,
    Dot,
    Backslash,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
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

impl SuiteArg {
    fn kind(self) -> SuiteKind {
        match self {
            SuiteArg::Dendriform => SuiteKind::Dendriform,
            SuiteArg::Tridendriform => SuiteKind::Tridendriform,
            SuiteArg::Bialgebra => SuiteKind::Bialgebra,
            SuiteArg::Infinitesimal => SuiteKind::Infinitesimal,
            SuiteArg::Brace => SuiteKind::Brace,
            SuiteArg::Gv => SuiteKind::Gv,
            SuiteArg::Order => SuiteKind::Order,
            SuiteArg::ShuffleSets => SuiteKind::ShuffleSets,
            SuiteArg::Freeness => SuiteKind::Freeness,
        }
    }
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug)]
enum QArg {
    Symbolic,
    Value(BigRational),
}

fn parse_q(s: &str) -> Result<QArg, String> {
    if s == "q" {
        return Ok(QArg::Symbolic);
    }
    s.parse::<BigRational>()
        .map(QArg::Value)
        .map_err(|_| format!("`{s}` is neither a rational number nor the token `q`"))
}

fn parse_word(s: &str) -> Result<Surjection, String> {
    let mut letters = Vec::new();
    for piece in s.split(',') {
        let trimmed = piece.trim();
        let v: u32 = trimmed
            .parse()
            .map_err(|_| format!("`{trimmed}` is not a positive integer in word `{s}`"))?;
        letters.push(v);
    }
    Surjection::new(letters).map_err(|e| format!("`{s}` is not a packed word: {e}"))
}

/// Renders an evaluated combination `Σ cᵢ (wᵢ)` with rational coefficients.
fn render_evaluated(terms: &[(Surjection, BigRational)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (x, c)) in terms.iter().enumerate() {
        let mag = if c.is_negative() { -c } else { c.clone() };
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if !mag.is_one() {
            out.push_str(&mag.to_string());
        }
        out.push_str(&x.to_string());
    }
    out
}

fn evaluated_json(
    degree: usize,
    q: &BigRational,
    terms: &[(Surjection, BigRational)],
) -> serde_json::Value {
    json!({
        "degree": degree,
        "q": q.to_string(),
        "terms": terms
            .iter()
            .map(|(x, c)| json!({ "coeff": c.to_string(), "word": x.letters() }))
            .collect::<Vec<_>>(),
    })
}

/// Prints a symbolic or specialized combination according to `--q`/`--format`.
fn emit_combination(lc: &LinearCombination, degree: usize, q: &QArg, format: Format) {
    match q {
        QArg::Symbolic => match format {
            Format::Text => println!("{lc}"),
            Format::Json => println!("{}", lc.to_json(degree)),
        },
        QArg::Value(v) => {
            let evaluated = lc.evaluate(v);
            match format {
                Format::Text => println!("{}", render_evaluated(&evaluated)),
                Format::Json => println!("{}", evaluated_json(degree, v, &evaluated)),
            }
        }
    }
}

fn emit_word(x: &Surjection, format: Format) {
    match format {
        Format::Text => println!("{x}"),
        Format::Json => println!("{}", json!({ "word": x.letters() })),
    }
}

fn words_json(words: &[Surjection]) -> serde_json::Value {
    serde_json::Value::Array(words.iter().map(|x| json!(x.letters())).collect())
}

fn words_line(words: &[Surjection]) -> String {
    if words.is_empty() {
        return "∅".to_string();
    }
    words
        .iter()
        .map(Surjection::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn run_op(kind: KindArg, q: &QArg, format: Format, x: &str, y: &str) -> Result<ExitCode, String> {
    let x = parse_word(x)?;
    let y = parse_word(y)?;
    let degree = x.len() + y.len();
    let ops = Ops::exact();
    let product = |tri: TriKind| -> Result<LinearCombination, String> {
        tridendriform(&ops, &x, &y, tri).map_err(|e| e.to_string())
    };
    match kind {
        KindArg::Concat => emit_word(&x.concat(&y), format),
        KindArg::Dot => emit_word(&x.dot(&y).map_err(|e| e.to_string())?, format),
        KindArg::Backslash => emit_word(&x.backslash(&y).map_err(|e| e.to_string())?, format),
        KindArg::Shuffle => {
            let lc = star(&x, &y).map_err(|e| e.to_string())?;
            emit_combination(&lc, degree, q, format);
        }
        KindArg::Left => emit_combination(&product(TriKind::Left)?, degree, q, format),
        KindArg::Right => emit_combination(&product(TriKind::Right)?, degree, q, format),
        KindArg::Middle => emit_combination(&product(TriKind::Middle)?, degree, q, format),
        KindArg::WeakRight => emit_combination(&product(TriKind::WeakRight)?, degree, q, format),
    }
    Ok(ExitCode::SUCCESS)
}

fn run_unary(which: &str, q: &QArg, format: Format, x: &str) -> Result<ExitCode, String> {
    let x = parse_word(x)?;
    let degree = x.len();
    match which {
        "coproduct" => {
            let t = coproduct(&x);
            match format {
                Format::Text => println!("{t}"),
                Format::Json => println!("{}", t.to_json(degree)),
            }
        }
        "primitive" => {
            let e = eulerian_projector(&x);
            emit_combination(&e, degree, q, format);
        }
        "eta" | "psi" => {
            let tables = BasisTables::new(degree);
            let morphisms = FreeMorphisms::new(&tables);
            let image = if which == "eta" {
                morphisms.eta(&x)
            } else {
                morphisms.psi(&x)
            }
            .map_err(|e| e.to_string())?;
            emit_combination(&image, degree, q, format);
        }
        _ => unreachable!("internal dispatch"),
    }
    Ok(ExitCode::SUCCESS)
}

fn run_basis(max_n: usize, format: Format) -> Result<ExitCode, String> {
    let tables = BasisTables::new(max_n);
    match format {
        Format::Text => {
            for n in 1..=max_n {
                println!("n={n}");
                println!("  ST:  {}", words_line(tables.st(n)));
                println!("  Irr: {}", words_line(tables.irreducibles(n)));
                println!("  D:   {}", words_line(tables.d_basis(n)));
                println!("  C:   {}", words_line(tables.c_basis(n)));
                println!("  B:   {}", words_line(tables.b_basis(n)));
            }
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = (1..=max_n)
                .map(|n| {
                    json!({
                        "n": n,
                        "ST": words_json(tables.st(n)),
                        "Irr": words_json(tables.irreducibles(n)),
                        "D": words_json(tables.d_basis(n)),
                        "C": words_json(tables.c_basis(n)),
                        "B": words_json(tables.b_basis(n)),
                    })
                })
                .collect();
            println!("{}", serde_json::Value::Array(rows));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_dims(max_n: usize, format: Format) -> Result<ExitCode, String> {
    let tables = BasisTables::new(max_n);
    let rows: Vec<(usize, usize, usize, usize, usize, usize)> = (1..=max_n)
        .map(|n| {
            (
                n,
                tables.st(n).len(),
                tables.irreducibles(n).len(),
                prim_rank(&tables, n),
                tables.d_basis(n).len(),
                tables.b_basis(n).len(),
            )
        })
        .collect();
    match format {
        Format::Text => {
            println!(
                "{:>3} {:>6} {:>6} {:>9} {:>6} {:>6}",
                "n", "ST", "Irr", "primRank", "D", "B"
            );
            for (n, st, irr, rank, d, b) in rows {
                println!("{n:>3} {st:>6} {irr:>6} {rank:>9} {d:>6} {b:>6}");
            }
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = rows
                .into_iter()
                .map(|(n, st, irr, rank, d, b)| {
                    json!({ "n": n, "ST": st, "Irr": irr, "primRank": rank, "D": d, "B": b })
                })
                .collect();
            println!("{}", serde_json::Value::Array(rows));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_check(
    suite: SuiteArg,
    max_total: Option<usize>,
    max_n: Option<usize>,
    format: Format,
) -> Result<ExitCode, String> {
    let ops = Ops::exact();
    let bound = max_total.or(max_n);
    let report = run_suite(&ops, suite.kind(), bound);
    match format {
        Format::Text => {
            if report.pass() {
                println!(
                    "suite {}: pass (bound {}, {} checks)",
                    report.name, report.bound, report.checks
                );
            } else {
                println!(
                    "suite {}: FAIL (bound {}, {} checks)",
                    report.name, report.bound, report.checks
                );
                if let Some(counterexample) = &report.counterexample {
                    println!("counterexample: {counterexample}");
                }
            }
        }
        Format::Json => {
            let mut payload = json!({
                "suite": report.name,
                "bound": report.bound,
                "checks": report.checks,
                "pass": report.pass(),
                "counterexample": report.counterexample,
            });
            if matches!(suite, SuiteArg::Freeness) {
                // The freeness suite additionally exposes its per-degree
                // reports (counts, ranks, normal-form tallies).
                let tables = BasisTables::new(report.bound);
                let morphisms = FreeMorphisms::new(&tables);
                let rows: Vec<serde_json::Value> = (1..=report.bound)
                    .map(|n| {
                        freeness_report(&morphisms, n, &FreenessReport::default_q_values(), true)
                            .to_json()
                    })
                    .collect();
                payload["reports"] = serde_json::Value::Array(rows);
            }
            println!("{payload}");
        }
    }
    if report.pass() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Op {
            kind,
            q,
            format,
            x,
            y,
        } => run_op(kind, &q, format, &x, &y),
        Command::Coproduct { format, x } => run_unary("coproduct", &QArg::Symbolic, format, &x),
        Command::Primitive { format, x } => run_unary("primitive", &QArg::Symbolic, format, &x),
        Command::Eta { format, x } => run_unary("eta", &QArg::Symbolic, format, &x),
        Command::Psi { q, format, x } => run_unary("psi", &q, format, &x),
        Command::Basis { max_n, format } => run_basis(max_n, format),
        Command::Dims { max_n, format } => run_dims(max_n, format),
        Command::Check {
            suite,
            max_total,
            max_n,
            format,
        } => run_check(suite, max_total, max_n, format),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
