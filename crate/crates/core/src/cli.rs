//! Command-line front end.
//!
//! Exit codes: 0 for success or a true verdict, 1 for a false verdict or a
//! counterexample, 2 for usage and data errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::algebra::{self, check_identity, load_algebra, FiniteAlgebra, Identity, IdentityCheck};
use crate::congruence::{self, Congruence, Partition, DEFAULT_LATTICE_LIMIT};
use crate::free_group::{self, fg_inv, fg_mul, heap_group_ops, heap_mu, HeapWord, ReducedWord};
use crate::homomorphism::{self, hom_to_group, separating_hom};
use crate::random;
use crate::rewrite::{self, CountMode, RewriteSystem, Strategy, DEFAULT_ENUMERATION_BUDGET};
use crate::search::{self, SearchOutcome, DEFAULT_SEARCH_BUDGET};
use crate::term::{count_w, parse_term, Signature, Term};

pub const BUDGET_ENV: &str = "MW_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "maltsev", version, about = "Word problems in free Mal'tsev algebras and congruences of finite algebras")]
pub struct RunConfig {
    /// Output format: tabular text or line-delimited JSON.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normal form of a mu-term.
    Normalize {
        #[arg(long)]
        term: String,
    },
    /// Decide equality of two mu-terms in the free Mal'tsev algebra.
    Equal {
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    /// Number of elements of depth at most LEVEL over GENERATORS generators.
    CountM {
        #[arg(long)]
        generators: usize,
        #[arg(long)]
        level: usize,
        /// Enumerate and normalize every term instead of counting directly.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Number of mu-terms of depth exactly LEVEL.
    CountW {
        #[arg(long)]
        generators: u64,
        #[arg(long)]
        level: usize,
    },
    /// Critical pairs of the Mal'tsev rewrite system.
    ConfluenceReport,
    /// Free group operations.
    #[command(subcommand)]
    Fg(FgCommand),
    /// Free heap operations.
    #[command(subcommand)]
    Heap(HeapCommand),
    /// Homomorphisms out of the free Mal'tsev algebra.
    #[command(subcommand)]
    Hom(HomCommand),
    /// Finite algebras given as JSON operation tables.
    #[command(subcommand)]
    Algebra(AlgebraCommand),
    /// Randomized property checks.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        cases: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum FgCommand {
    Reduce {
        #[arg(long)]
        word: String,
    },
    Mul {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    Inv {
        #[arg(long)]
        word: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum HeapCommand {
    Mu {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        c: String,
    },
    Member {
        #[arg(long)]
        word: String,
    },
    /// Derived group at a basepoint: identity, inverse of U, and U * V.
    GroupOps {
        #[arg(long)]
        base: String,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum HomCommand {
    /// Image in the free group under mu(a,b,c) = a b^-1 c.
    Group {
        #[arg(long)]
        term: String,
        /// Variable-to-generator map `x=a,y=b`; unmapped variables map to themselves.
        #[arg(long)]
        map: Option<String>,
    },
    /// Value in {0,1} under the indicator of WITNESS.
    Separate {
        #[arg(long)]
        term: String,
        #[arg(long)]
        witness: String,
    },
}

#[derive(Debug, Args)]
pub struct FileArg {
    #[arg(long)]
    pub file: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Structure {
    Group,
    LeftLoop,
    Quasigroup,
}

#[derive(Debug, Subcommand)]
pub enum AlgebraCommand {
    CheckIdentity {
        #[command(flatten)]
        file: FileArg,
        /// `lhs = rhs`
        #[arg(long)]
        identity: String,
    },
    MaltsevCheck {
        #[command(flatten)]
        file: FileArg,
        #[arg(long, default_value = "mu")]
        symbol: String,
    },
    /// Adds a derived Mal'tsev operation `mu` and prints the document.
    DeriveMaltsev {
        #[command(flatten)]
        file: FileArg,
        #[arg(long, value_enum)]
        from: Structure,
    },
    Congruences {
        #[command(flatten)]
        file: FileArg,
        #[arg(long)]
        check_permutability: bool,
        /// Largest carrier for which the lattice is computed.
        #[arg(long, default_value_t = DEFAULT_LATTICE_LIMIT)]
        limit: usize,
    },
    Principal {
        #[command(flatten)]
        file: FileArg,
        /// `a,b`
        #[arg(long)]
        pair: String,
    },
    Quotient {
        #[command(flatten)]
        file: FileArg,
        /// Blocks separated by `|`, elements by `,`.
        #[arg(long)]
        partition: String,
    },
    MaltsevTerm {
        #[command(flatten)]
        file: FileArg,
        #[arg(long)]
        budget: Option<usize>,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Accumulates text lines or JSON records.
struct Out {
    format: Format,
    command: &'static str,
    stdout: String,
}

impl Out {
    fn emit(&mut self, text: impl AsRef<str>, record: Value) {
        match self.format {
            Format::Text => {
                self.stdout.push_str(text.as_ref());
                self.stdout.push('\n');
            }
            Format::Json => {
                let mut obj = serde_json::Map::new();
                obj.insert("command".into(), Value::from(self.command));
                if let Value::Object(m) = record {
                    obj.extend(m);
                } else {
                    obj.insert("result".into(), record);
                }
                self.stdout.push_str(&Value::Object(obj).to_string());
                self.stdout.push('\n');
            }
        }
    }
}

#[derive(Debug)]
struct CliError(String);

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

type CliResult = Result<i32, CliError>;

fn env_budget() -> Option<usize> {
    std::env::var(BUDGET_ENV).ok().and_then(|v| v.trim().parse().ok())
}

/// Parses arguments (including the program name) and dispatches.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(cfg) => dispatch(&cfg),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                Outcome {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            }
        }
    }
}

pub fn dispatch(cfg: &RunConfig) -> Outcome {
    let mut out = Out {
        format: cfg.format,
        command: command_name(&cfg.command),
        stdout: String::new(),
    };
    match execute(&cfg.command, &mut out) {
        Ok(code) => Outcome {
            code,
            stdout: out.stdout,
            stderr: String::new(),
        },
        Err(CliError(msg)) => {
            let stderr = match cfg.format {
                Format::Text => format!("error: {msg}\n"),
                Format::Json => format!("{}\n", json!({"command": out.command, "error": msg})),
            };
            Outcome {
                code: 2,
                stdout: out.stdout,
                stderr,
            }
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Normalize { .. } => "normalize",
        Command::Equal { .. } => "equal",
        Command::CountM { .. } => "count-m",
        Command::CountW { .. } => "count-w",
        Command::ConfluenceReport => "confluence-report",
        Command::Fg(FgCommand::Reduce { .. }) => "fg reduce",
        Command::Fg(FgCommand::Mul { .. }) => "fg mul",
        Command::Fg(FgCommand::Inv { .. }) => "fg inv",
        Command::Heap(HeapCommand::Mu { .. }) => "heap mu",
        Command::Heap(HeapCommand::Member { .. }) => "heap member",
        Command::Heap(HeapCommand::GroupOps { .. }) => "heap group-ops",
        Command::Hom(HomCommand::Group { .. }) => "hom group",
        Command::Hom(HomCommand::Separate { .. }) => "hom separate",
        Command::Algebra(a) => match a {
            AlgebraCommand::CheckIdentity { .. } => "algebra check-identity",
            AlgebraCommand::MaltsevCheck { .. } => "algebra maltsev-check",
            AlgebraCommand::DeriveMaltsev { .. } => "algebra derive-maltsev",
            AlgebraCommand::Congruences { .. } => "algebra congruences",
            AlgebraCommand::Principal { .. } => "algebra principal",
            AlgebraCommand::Quotient { .. } => "algebra quotient",
            AlgebraCommand::MaltsevTerm { .. } => "algebra maltsev-term",
        },
        Command::Selftest { .. } => "selftest",
    }
}

fn mu_term(s: &str) -> Result<Term, CliError> {
    Ok(parse_term(s, &Signature::maltsev())?)
}

fn read_algebra(f: &FileArg) -> Result<FiniteAlgebra, CliError> {
    let text = std::fs::read_to_string(&f.file)
        .map_err(|e| CliError(format!("{}: {e}", f.file.display())))?;
    load_algebra(&text).map_err(|e| CliError(format!("{}: {e}", f.file.display())))
}

fn verdict(b: bool) -> i32 {
    if b {
        0
    } else {
        1
    }
}

fn execute(cmd: &Command, out: &mut Out) -> CliResult {
    match cmd {
        Command::Normalize { term } => {
            let nf = rewrite::normalize(&mu_term(term)?);
            out.emit(nf.to_string(), json!({"result": nf.to_string(), "level": nf.depth()}));
            Ok(0)
        }
        Command::Equal { lhs, rhs } => {
            let (l, r) = (rewrite::normalize(&mu_term(lhs)?), rewrite::normalize(&mu_term(rhs)?));
            let eq = l == r;
            out.emit(
                eq.to_string(),
                json!({"result": eq, "lhs_normal": l.to_string(), "rhs_normal": r.to_string()}),
            );
            Ok(verdict(eq))
        }
        Command::CountM {
            generators,
            level,
            oracle,
            budget,
        } => {
            let budget = budget.or_else(env_budget).unwrap_or(DEFAULT_ENUMERATION_BUDGET);
            let mode = if *oracle { CountMode::Oracle } else { CountMode::Fast };
            let n = rewrite::count_m(*generators, *level, mode, budget)?;
            out.emit(n.to_string(), json!({"result": n.to_string()}));
            Ok(0)
        }
        Command::CountW { generators, level } => {
            let n = count_w(*generators, *level);
            out.emit(n.to_string(), json!({"result": n.to_string()}));
            Ok(0)
        }
        Command::ConfluenceReport => {
            let report = rewrite::check_confluence(&RewriteSystem::maltsev())?;
            for cp in &report.pairs {
                out.emit(
                    format!(
                        "peak {}  ->  {} | {}  joinable: {}",
                        cp.peak, cp.left_result, cp.right_result, cp.joinable
                    ),
                    json!({
                        "peak": cp.peak.to_string(),
                        "left": cp.left_result.to_string(),
                        "right": cp.right_result.to_string(),
                        "rules": [cp.outer_rule, cp.inner_rule],
                        "position": cp.position,
                        "joinable": cp.joinable,
                    }),
                );
            }
            out.emit(
                format!(
                    "critical pairs: {}  locally confluent: {}",
                    report.pairs.len(),
                    report.locally_confluent
                ),
                json!({"pairs": report.pairs.len(), "locally_confluent": report.locally_confluent}),
            );
            Ok(verdict(report.locally_confluent))
        }
        Command::Fg(fg) => {
            let w = match fg {
                FgCommand::Reduce { word } => word.parse::<ReducedWord>()?,
                FgCommand::Mul { a, b } => fg_mul(&a.parse()?, &b.parse()?),
                FgCommand::Inv { word } => fg_inv(&word.parse()?),
            };
            out.emit(w.to_string(), json!({"result": w.to_string(), "length": w.len()}));
            Ok(0)
        }
        Command::Heap(h) => match h {
            HeapCommand::Mu { a, b, c } => {
                let r = heap_mu(&a.parse()?, &b.parse()?, &c.parse()?);
                out.emit(r.to_string(), json!({"result": r.to_string(), "stratum": r.stratum()}));
                Ok(0)
            }
            HeapCommand::Member { word } => {
                let w: ReducedWord = word.parse()?;
                let m = free_group::is_heap_word(&w);
                out.emit(m.to_string(), json!({"result": m, "reduced": w.to_string()}));
                Ok(verdict(m))
            }
            HeapCommand::GroupOps { base, u, v } => {
                let g = heap_group_ops(base.parse()?);
                let u: HeapWord = u.parse()?;
                let inv = g.inv(&u);
                out.emit(format!("identity: {}", g.identity()), json!({"identity": g.identity().to_string()}));
                out.emit(format!("inverse: {inv}"), json!({"inverse": inv.to_string()}));
                if let Some(v) = v {
                    let p = g.mul(&u, &v.parse()?);
                    out.emit(format!("product: {p}"), json!({"product": p.to_string()}));
                }
                Ok(0)
            }
        },
        Command::Hom(h) => match h {
            HomCommand::Group { term, map } => {
                let t = mu_term(term)?;
                let mut gen_map: BTreeMap<String, String> =
                    t.variables().iter().map(|v| (v.to_string(), v.to_string())).collect();
                if let Some(map) = map {
                    for item in map.split(',').filter(|s| !s.trim().is_empty()) {
                        let (k, v) = item
                            .split_once('=')
                            .ok_or_else(|| CliError(format!("malformed map entry `{item}`")))?;
                        gen_map.insert(k.trim().to_string(), v.trim().to_string());
                    }
                }
                let w = hom_to_group(&t, &gen_map)?;
                out.emit(w.to_string(), json!({"result": w.to_string()}));
                Ok(0)
            }
            HomCommand::Separate { term, witness } => {
                let v = separating_hom(&mu_term(term)?, witness)?;
                out.emit(v.to_string(), json!({"result": v}));
                Ok(0)
            }
        },
        Command::Algebra(a) => execute_algebra(a, out),
        Command::Selftest { seed, cases } => {
            let results = selftest(*seed, *cases);
            let mut ok = true;
            for (name, passed, detail) in &results {
                ok &= passed;
                out.emit(
                    format!("{} {name}: {detail}", if *passed { "PASS" } else { "FAIL" }),
                    json!({"check": name, "passed": passed, "detail": detail}),
                );
            }
            Ok(verdict(ok))
        }
    }
}

fn execute_algebra(cmd: &AlgebraCommand, out: &mut Out) -> CliResult {
    match cmd {
        AlgebraCommand::CheckIdentity { file, identity } => {
            let alg = read_algebra(file)?;
            let id = Identity::parse(identity, alg.signature())?;
            match check_identity(&alg, &id)? {
                IdentityCheck::Holds => {
                    out.emit("holds", json!({"result": "holds"}));
                    Ok(0)
                }
                IdentityCheck::Counterexample(cx) => {
                    let text = cx.iter().map(|(v, x)| format!("{v}={x}")).collect::<Vec<_>>().join(",");
                    let obj: serde_json::Map<String, Value> =
                        cx.iter().map(|(v, x)| (v.clone(), Value::from(*x))).collect();
                    out.emit(
                        format!("counterexample: {text}"),
                        json!({"result": "counterexample", "assignment": obj}),
                    );
                    Ok(1)
                }
            }
        }
        AlgebraCommand::MaltsevCheck { file, symbol } => {
            let alg = read_algebra(file)?;
            let ok = algebra::is_maltsev_operation(&alg, symbol)?;
            out.emit(ok.to_string(), json!({"result": ok}));
            Ok(verdict(ok))
        }
        AlgebraCommand::DeriveMaltsev { file, from } => {
            let alg = read_algebra(file)?;
            let table = match from {
                Structure::Group => algebra::maltsev_from_group(&alg)?,
                Structure::LeftLoop => algebra::maltsev_from_left_loop(&alg)?,
                Structure::Quasigroup => algebra::maltsev_from_quasigroup(&alg)?,
            };
            let derived = alg.with_operation("mu", table)?;
            let doc = serde_json::to_value(derived.to_document()).expect("serializable");
            out.emit(serde_json::to_string_pretty(&doc).expect("serializable"), json!({"result": doc}));
            Ok(0)
        }
        AlgebraCommand::Congruences {
            file,
            check_permutability,
            limit,
        } => {
            let alg = read_algebra(file)?;
            let cons = congruence::all_congruences(&alg, *limit)?;
            let list: Vec<String> = cons.iter().map(Congruence::to_string).collect();
            match out.format {
                Format::Text => {
                    for c in &list {
                        out.emit(c, Value::Null);
                    }
                    out.emit(format!("count: {}", cons.len()), Value::Null);
                }
                Format::Json => out.emit("", json!({"congruences": list, "count": cons.len()})),
            }
            if *check_permutability {
                let violation = congruence::permutability_violation(&cons);
                let ok = violation.is_none();
                let detail = violation.map(|(a, b)| format!("{a} and {b} do not permute"));
                out.emit(
                    match &detail {
                        None => "permutable: true".to_string(),
                        Some(d) => format!("permutable: false ({d})"),
                    },
                    json!({"permutable": ok, "violation": detail}),
                );
                return Ok(verdict(ok));
            }
            Ok(0)
        }
        AlgebraCommand::Principal { file, pair } => {
            let alg = read_algebra(file)?;
            let (a, b) = pair
                .split_once(',')
                .ok_or_else(|| CliError(format!("expected `a,b`, got `{pair}`")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| CliError(format!("`{s}` is not an element")))
            };
            let c = congruence::principal_congruence(&alg, parse(a)?, parse(b)?)?;
            out.emit(c.to_string(), json!({"result": c.to_string()}));
            Ok(0)
        }
        AlgebraCommand::Quotient { file, partition } => {
            let alg = read_algebra(file)?;
            let p: Partition = partition.parse()?;
            match Congruence::new(&alg, p) {
                Ok(theta) => {
                    let q = congruence::quotient(&alg, &theta);
                    let doc = serde_json::to_value(q.to_document()).expect("serializable");
                    out.emit(serde_json::to_string_pretty(&doc).expect("serializable"), json!({"result": doc}));
                    Ok(0)
                }
                Err(congruence::CongruenceError::NotCompatible { symbol, args }) => {
                    out.emit(
                        format!("not a congruence: `{symbol}` at {args:?}"),
                        json!({"result": "not-a-congruence", "symbol": symbol, "args": args}),
                    );
                    Ok(1)
                }
                Err(e) => Err(e.into()),
            }
        }
        AlgebraCommand::MaltsevTerm { file, budget } => {
            let alg = read_algebra(file)?;
            let budget = budget.or_else(env_budget).unwrap_or(DEFAULT_SEARCH_BUDGET);
            let report = search::find_maltsev_term(&alg, budget);
            let scope = "Mal'tsev term for the variety generated by the algebra";
            match &report.outcome {
                SearchOutcome::Found { term, verified, .. } => {
                    out.emit(term.to_string(), json!({"result": term.to_string(), "verified": verified}));
                    out.emit(
                        format!("verified: {verified}"),
                        json!({"explored": report.explored, "levels": report.levels, "scope": scope}),
                    );
                    Ok(if *verified { 0 } else { 2 })
                }
                SearchOutcome::NoTerm => {
                    out.emit("none", json!({"result": "none"}));
                    out.emit(
                        format!("closure complete: {} vectors", report.explored),
                        json!({"explored": report.explored, "levels": report.levels, "scope": scope}),
                    );
                    Ok(1)
                }
                SearchOutcome::BudgetExhausted => {
                    out.emit("budget-exhausted", json!({"result": "budget-exhausted"}));
                    out.emit(
                        format!("explored: {}", report.explored),
                        json!({"explored": report.explored, "budget": budget, "scope": scope}),
                    );
                    Ok(2)
                }
            }
        }
    }
}

/// Randomized property checks; returns `(name, passed, detail)` per check.
pub fn selftest(seed: u64, cases: usize) -> Vec<(&'static str, bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vars = ["x", "y", "z"];
    let rs = RewriteSystem::maltsev();
    let mut results = Vec::new();

    let mut bad = 0;
    for _ in 0..cases {
        let t = random::random_term(&mut rng, &vars, 6, 0.3);
        if rs.normalize_with(&t, Strategy::LeftmostInnermost) != rs.normalize_with(&t, Strategy::LeftmostOutermost) {
            bad += 1;
        }
    }
    results.push(("strategy-independence", bad == 0, format!("{bad} of {cases} differ")));

    let mut bad = 0;
    for _ in 0..cases {
        let t = random::random_term(&mut rng, &vars, 4, 0.3);
        let s = random::axiom_walk(&mut rng, &t, &vars, 8);
        if !rewrite::equal_in_free(&t, &s) {
            bad += 1;
        }
    }
    results.push(("axiom-walk", bad == 0, format!("{bad} of {cases} walks not identified")));

    let mut bad = 0;
    for _ in 0..cases {
        let w = free_group::reduce(random::random_letters(&mut rng, &vars, 12));
        if free_group::reduce(w.letters().to_vec()) != w {
            bad += 1;
        }
    }
    results.push(("reduction-idempotent", bad == 0, format!("{bad} of {cases} failures")));

    let mut bad = 0;
    for _ in 0..cases {
        let h: Vec<HeapWord> = (0..5).map(|_| random::random_heap_word(&mut rng, &vars, 3)).collect();
        let a = heap_mu(&heap_mu(&h[0], &h[1], &h[2]), &h[3], &h[4]);
        let b = heap_mu(&h[0], &heap_mu(&h[3], &h[2], &h[1]), &h[4]);
        let c = heap_mu(&h[0], &h[1], &heap_mu(&h[2], &h[3], &h[4]));
        if a != b || b != c {
            bad += 1;
        }
    }
    results.push(("heap-para-associativity", bad == 0, format!("{bad} of {cases} failures")));

    let mut bad = 0;
    for _ in 0..cases {
        let t = random::random_term(&mut rng, &vars, 5, 0.3);
        let lhs = homomorphism::hom_to_group_identity(&t);
        let rhs = homomorphism::hom_to_group_identity(rewrite::normalize(&t).term());
        if lhs.is_err() || lhs != rhs {
            bad += 1;
        }
    }
    results.push(("hom-factorization", bad == 0, format!("{bad} of {cases} failures")));
    results
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("maltsev").chain(args.iter().copied()))
    }

    #[test]
    fn normalize_prints_normal_form() {
        let o = run_args(&["normalize", "--term", "mu(x,y,y)"]);
        assert_eq!((o.code, o.stdout.as_str()), (0, "x\n"));
    }

    #[test]
    fn reduce_prints_reduced_word() {
        let o = run_args(&["fg", "reduce", "--word", "x y z z^-1 y^-1 x"]);
        assert_eq!((o.code, o.stdout.as_str()), (0, "x x\n"));
    }

    #[test]
    fn equal_uses_exit_code() {
        assert_eq!(run_args(&["equal", "--lhs", "mu(x,y,y)", "--rhs", "x"]).code, 0);
        assert_eq!(run_args(&["equal", "--lhs", "mu(x,y,z)", "--rhs", "mu(z,y,x)"]).code, 1);
        assert_eq!(run_args(&["equal", "--lhs", "mu(x,y)", "--rhs", "x"]).code, 2);
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_args(&["frobnicate"]).code, 2);
        assert_eq!(run_args(&["normalize"]).code, 2);
        let help = run_args(&["--help"]);
        assert_eq!(help.code, 0);
        for cmd in ["normalize", "equal", "count-m", "confluence-report", "fg", "heap", "hom", "algebra", "selftest"] {
            assert!(help.stdout.contains(cmd), "help lists {cmd}");
        }
    }

    #[test]
    fn json_records_are_line_delimited() {
        let o = run_args(&["--format", "json", "normalize", "--term", "mu(x,y,x)"]);
        let v: Value = serde_json::from_str(o.stdout.trim()).unwrap();
        assert_eq!(v["command"], "normalize");
        assert_eq!(v["result"], "mu(x,y,x)");
        assert_eq!(v["level"], 1);
    }

    #[test]
    fn selftest_is_deterministic() {
        let a = run_args(&["--format", "json", "selftest", "--seed", "3", "--cases", "50"]);
        let b = run_args(&["--format", "json", "selftest", "--seed", "3", "--cases", "50"]);
        assert_eq!(a, b);
        assert_eq!(a.code, 0);
    }
}
