//! Command-line front end for the largeness toolkit.
//!
//! Results go to stdout (text by default, JSON with `--format json`);
//! diagnostics go to stderr. Exit codes: 0 success or positive verdict,
//! 1 negative verdict, counterexample found, or permissive extraction
//! failure, 2 usage or input error, 3 budget exceeded.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use ordinal_ramsey::colouring::{self, PairColouring};
use ordinal_ramsey::extract::{
    ads_homogeneous, em_transitive_subset, grouping, hmph, ks_descent_trace, ks_homogeneous,
    rt22_homogeneous, validate_grouping, ExtractError,
};
use ordinal_ramsey::ordinal::{parse_ordinal, Ordinal};
use ordinal_ramsey::sets::{
    is_exp_sparse, is_sparse, partition_decompose, parts_total, residual, restrict,
    sparse_subset, FiniteSet, SetError,
};
use ordinal_ramsey::verify::{
    adversarial_colouring, exhaustive_rt_check, run_suite, suite_names, RtVerdict, Verification,
    VerifyError,
};
use ordinal_ramsey::Mode;

#[derive(Parser)]
#[command(
    name = "oramsey",
    about = "Ordinal largeness calculus, homogeneous-set extraction, and brute-force verification",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Colouring: a JSON file path, or inline JSON starting with '{'.
    #[arg(long, global = true)]
    colouring: Option<String>,
    /// Seed for seeded commands (suites).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Budget for enumeration and search commands.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Worker threads for parallel verification.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the residual of an ordinal over a set and report largeness.
    Large { ordinal: String, set: String },
    /// The smallest large initial segment of a set.
    Restrict { ordinal: String, set: String },
    /// Split a set into consecutive blocks along a dominated sum.
    Decompose {
        #[arg(long)]
        set: String,
        /// Comma-separated ordinal parts, largest first.
        #[arg(long)]
        parts: String,
    },
    /// Check interval sparseness (--alpha) or exponential sparseness (--exp).
    SparseCheck {
        #[arg(long)]
        set: String,
        #[arg(long, conflicts_with = "exp")]
        alpha: Option<String>,
        #[arg(long)]
        exp: bool,
    },
    /// Extract a large sparse subset.
    SparseSubset {
        #[arg(long)]
        set: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        strict: bool,
    },
    /// Print the prehomogeneous records of a colouring.
    Hmph {
        #[arg(long)]
        set: Option<String>,
    },
    /// Extract a large homogeneous set via prehomogeneous candidates.
    Ks {
        #[arg(long)]
        set: Option<String>,
        #[arg(long, default_value = "w")]
        target: String,
        #[arg(long)]
        strict: bool,
    },
    /// The ordinal descent bookkeeping, one JSON line per index.
    TraceKs {
        #[arg(long)]
        set: Option<String>,
        #[arg(long, default_value_t = 2)]
        n: u32,
    },
    /// Extract a grouping.
    Grouping {
        #[arg(long)]
        set: Option<String>,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        strict: bool,
    },
    /// Extract a subset on which the colouring is transitive.
    Em {
        #[arg(long)]
        set: Option<String>,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        strict: bool,
    },
    /// Extract a homogeneous chain of a transitive colouring.
    Ads {
        #[arg(long)]
        set: Option<String>,
        #[arg(long, default_value = "w")]
        target: String,
        #[arg(long)]
        strict: bool,
    },
    /// The full pipeline: sparse core, transitive subset, homogeneous chain.
    Rt22 {
        #[arg(long)]
        set: Option<String>,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        strict: bool,
    },
    /// Brute-force verification.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Check every colouring of a base for a large homogeneous subset.
    Exhaustive {
        #[arg(long)]
        set: String,
        #[arg(long, default_value_t = 2)]
        colours: u16,
        #[arg(long)]
        alpha: String,
    },
    /// Search for a colouring with no large homogeneous subset.
    Adversarial {
        #[arg(long)]
        set: String,
        #[arg(long, default_value_t = 2)]
        colours: u16,
        #[arg(long)]
        alpha: String,
    },
    /// Run a registered property suite.
    Suite {
        #[arg(long, required_unless_present = "list")]
        name: Option<String>,
        /// List the registered suites.
        #[arg(long)]
        list: bool,
    },
}

/// Exit disposition carried alongside errors.
enum Failure {
    /// Mathematically negative verdict or permissive extraction failure.
    Verdict(String),
    /// Bad usage or input.
    Input(String),
    /// A budget was exhausted.
    Budget(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verdict(_) => 1,
            Failure::Input(_) => 2,
            Failure::Budget(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verdict(m) | Failure::Input(m) | Failure::Budget(m) => m,
        }
    }
}

impl From<SetError> for Failure {
    fn from(e: SetError) -> Failure {
        match e {
            SetError::NotLarge { .. }
            | SetError::NoMajority { .. }
            | SetError::SparseUnattainable { .. } => Failure::Verdict(e.to_string()),
            SetError::Internal(_) => Failure::Verdict(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<ExtractError> for Failure {
    fn from(e: ExtractError) -> Failure {
        match e {
            ExtractError::Stage { .. }
            | ExtractError::NoCandidate { .. }
            | ExtractError::Internal(_)
            | ExtractError::TraceUndefined { .. } => Failure::Verdict(e.to_string()),
            ExtractError::Set(inner) => inner.into(),
            ExtractError::Colouring(inner) => inner.into(),
            ExtractError::Input(_) | ExtractError::Precondition(_) | ExtractError::NotTransitive => {
                Failure::Input(e.to_string())
            }
        }
    }
}

impl From<colouring::ColouringError> for Failure {
    fn from(e: colouring::ColouringError) -> Failure {
        match e {
            colouring::ColouringError::BudgetExceeded { .. }
            | colouring::ColouringError::SpaceOverflow
            | colouring::ColouringError::RejectionBudget(_) => Failure::Budget(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Failure {
        match e {
            VerifyError::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            VerifyError::Colouring(inner) => inner.into(),
            VerifyError::Set(inner) => inner.into(),
            VerifyError::Input(_) | VerifyError::UnknownSuite(_) => Failure::Input(e.to_string()),
        }
    }
}

impl From<ordinal_ramsey::OrdinalError> for Failure {
    fn from(e: ordinal_ramsey::OrdinalError) -> Failure {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn ordinal(text: &str) -> Result<Ordinal, Failure> {
    Ok(parse_ordinal(text)?)
}

fn finite_set(text: &str) -> Result<FiniteSet, Failure> {
    Ok(FiniteSet::parse(text)?)
}

fn load_colouring(global: &Global) -> Result<PairColouring, Failure> {
    let Some(arg) = &global.colouring else {
        return Err(Failure::Input("this command needs --colouring".into()));
    };
    let text = if arg.trim_start().starts_with('{') {
        arg.clone()
    } else {
        std::fs::read_to_string(arg)
            .map_err(|e| Failure::Input(format!("cannot read colouring file {arg:?}: {e}")))?
    };
    Ok(colouring::from_json(&text)?)
}

fn extraction_set(global: &Global, set: &Option<String>) -> Result<(PairColouring, FiniteSet), Failure> {
    let p = load_colouring(global)?;
    let x = match set {
        Some(s) => finite_set(s)?,
        None => p.base().clone(),
    };
    Ok((p, x))
}

fn mode_of(strict: bool) -> Mode {
    if strict {
        Mode::Strict
    } else {
        Mode::Permissive
    }
}

/// Prints one line to stdout, exiting quietly when the consumer has closed
/// the pipe.
fn out_line(line: impl std::fmt::Display) {
    use std::io::Write;
    if writeln!(std::io::stdout(), "{line}").is_err() {
        std::process::exit(0);
    }
}

fn emit(global: &Global, json: serde_json::Value, text: String) {
    match global.format {
        Format::Json => out_line(json),
        Format::Text => out_line(text),
    }
}

fn extraction_json(kind: &str, witness: &FiniteSet, colour: Option<u8>, stages: &[String]) -> serde_json::Value {
    json!({
        "kind": kind,
        "witness": witness.elements(),
        "colour": colour,
        "validated": true,
        "stages": stages,
    })
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let global = &cli.global;
    match &cli.command {
        Command::Large { ordinal: o, set } => {
            let a = ordinal(o)?;
            let x = finite_set(set)?;
            let r = residual(&a, &x);
            let large = r.is_zero();
            emit(
                global,
                json!({"ordinal": a.to_string(), "set": x.elements(), "residual": r.to_string(), "large": large}),
                format!("residual {r}; {}", if large { "large" } else { "not large" }),
            );
            Ok(if large { 0 } else { 1 })
        }
        Command::Restrict { ordinal: o, set } => {
            let a = ordinal(o)?;
            let x = finite_set(set)?;
            let r = restrict(&x, &a)?;
            emit(
                global,
                json!({"ordinal": a.to_string(), "restriction": r.elements()}),
                format!("{r}"),
            );
            Ok(0)
        }
        Command::Decompose { set, parts } => {
            let x = finite_set(set)?;
            let parts: Vec<Ordinal> = parts
                .split(',')
                .map(|s| ordinal(s.trim()))
                .collect::<Result<_, _>>()?;
            let total = parts_total(&parts)?;
            let blocks = partition_decompose(&x, &parts)?;
            let mut text = format!("total {total}\n");
            for (i, b) in blocks.iter().enumerate() {
                let _ = writeln!(text, "block {i} ({}-large): {b}", parts[parts.len() - 1 - i]);
            }
            emit(
                global,
                json!({
                    "total": total.to_string(),
                    "parts": parts.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                    "blocks": blocks.iter().map(|b| b.elements().to_vec()).collect::<Vec<_>>(),
                }),
                text.trim_end().to_string(),
            );
            Ok(0)
        }
        Command::SparseCheck { set, alpha, exp } => {
            let x = finite_set(set)?;
            let (label, sparse) = if *exp {
                ("exp".to_string(), is_exp_sparse(&x)?)
            } else {
                let a = ordinal(alpha.as_deref().unwrap_or("w"))?;
                (a.to_string(), is_sparse(&x, &a))
            };
            emit(
                global,
                json!({"alpha": label, "sparse": sparse}),
                format!("{}", if sparse { "sparse" } else { "not sparse" }),
            );
            Ok(if sparse { 0 } else { 1 })
        }
        Command::SparseSubset { set, n, m, strict } => {
            let x = finite_set(set)?;
            let y = sparse_subset(&x, *n, *m, mode_of(*strict))?;
            emit(
                global,
                extraction_json("sparse-subset", &y, None, &[]),
                format!("{y}"),
            );
            Ok(0)
        }
        Command::Hmph { set } => {
            let (p, x) = extraction_set(global, set)?;
            let records = hmph(&x, &p)?;
            let mut text = String::new();
            for r in &records {
                let _ = writeln!(
                    text,
                    "{}: sigma {}, colours {:?}{}",
                    r.owner,
                    r.sigma,
                    r.col,
                    r.sigma_minus
                        .as_ref()
                        .map_or_else(String::new, |s| format!(", shortened prefix {s}")),
                );
            }
            emit(
                global,
                serde_json::to_value(&records).expect("records serialize"),
                text.trim_end().to_string(),
            );
            Ok(0)
        }
        Command::Ks { set, target, strict } => {
            let (p, x) = extraction_set(global, set)?;
            let t = ordinal(target)?;
            let (w, c) = ks_homogeneous(&x, &p, &t, mode_of(*strict))?;
            emit(
                global,
                extraction_json("ks-homogeneous", &w, Some(c), &[]),
                format!("{w} (colour {c})"),
            );
            Ok(0)
        }
        Command::TraceKs { set, n } => {
            let (p, x) = extraction_set(global, set)?;
            let trace = ks_descent_trace(&x, &p, *n)?;
            match global.format {
                Format::Json => {
                    for row in &trace.rows {
                        out_line(serde_json::to_string(row).expect("rows serialize"));
                    }
                }
                Format::Text => {
                    for row in &trace.rows {
                        out_line(format!(
                            "{} (x = {}): gamma {}{}{}",
                            row.index,
                            row.element,
                            row.gamma,
                            row.critical_degree
                                .map_or_else(String::new, |d| format!(", {d}-critical")),
                            if row.step_ok && row.mc_ok { "" } else { ", CHECK FAILED" },
                        ));
                    }
                }
            }
            Ok(if trace.all_checks_hold() { 0 } else { 1 })
        }
        Command::Grouping { set, n, k, strict } => {
            let (p, x) = extraction_set(global, set)?;
            let g = grouping(&x, &p, *n, *k, mode_of(*strict))?;
            let alpha = Ordinal::power(*n);
            let beta = Ordinal::power(*k);
            let validated = validate_grouping(&g, &p, &alpha, &beta).is_ok();
            let mut text = format!("({alpha}, {beta})-grouping, {} blocks\n", g.len());
            for (i, b) in g.blocks().iter().enumerate() {
                let _ = writeln!(text, "block {i}: {b}");
            }
            emit(
                global,
                json!({
                    "kind": "grouping",
                    "alpha": alpha.to_string(),
                    "beta": beta.to_string(),
                    "blocks": g.blocks().iter().map(|b| b.elements().to_vec()).collect::<Vec<_>>(),
                    "maxima": g.maxima().elements(),
                    "strong_colour": g.strong_colour(),
                    "validated": validated,
                }),
                text.trim_end().to_string(),
            );
            Ok(0)
        }
        Command::Em { set, n, strict } => {
            let (p, x) = extraction_set(global, set)?;
            let r = em_transitive_subset(&x, &p, *n, mode_of(*strict))?;
            emit(
                global,
                extraction_json("em-transitive", &r.subset, None, &r.stages),
                format!("{}", r.subset),
            );
            Ok(0)
        }
        Command::Ads { set, target, strict } => {
            let (p, x) = extraction_set(global, set)?;
            let t = ordinal(target)?;
            let (w, c) = ads_homogeneous(&x, &p, &t, mode_of(*strict))?;
            emit(
                global,
                extraction_json("ads-homogeneous", &w, Some(c), &[]),
                format!("{w} (colour {c})"),
            );
            Ok(0)
        }
        Command::Rt22 { set, n, strict } => {
            let (p, x) = extraction_set(global, set)?;
            let r = rt22_homogeneous(&x, &p, *n, mode_of(*strict))?;
            emit(
                global,
                extraction_json("rt22-homogeneous", &r.witness, Some(r.colour), &r.stages),
                format!("{} (colour {})", r.witness, r.colour),
            );
            Ok(0)
        }
        Command::Verify(v) => run_verify(global, v),
    }
}

fn run_verify(global: &Global, command: &VerifyCommand) -> Result<u8, Failure> {
    match command {
        VerifyCommand::Exhaustive { set, colours, alpha } => {
            let x = finite_set(set)?;
            let a = ordinal(alpha)?;
            let budget = u128::from(global.budget.unwrap_or(1 << 26));
            match exhaustive_rt_check(&x, *colours, &a, budget, global.jobs)? {
                RtVerdict::AllPass { checked } => {
                    emit(
                        global,
                        json!({"verdict": "all-pass", "checked": checked}),
                        format!("all {checked} colourings admit a {a}-large homogeneous set"),
                    );
                    Ok(0)
                }
                RtVerdict::Counterexample { index, colouring } => {
                    let cjson: serde_json::Value =
                        serde_json::from_str(&colouring::to_json(&colouring)).expect("valid json");
                    emit(
                        global,
                        json!({"verdict": "counterexample", "index": index, "colouring": cjson}),
                        format!("counterexample at index {index}: {}", colouring::to_json(&colouring)),
                    );
                    Ok(1)
                }
            }
        }
        VerifyCommand::Adversarial { set, colours, alpha } => {
            let x = finite_set(set)?;
            let a = ordinal(alpha)?;
            let report = adversarial_colouring(&x, *colours, &a, global.budget.unwrap_or(1 << 24))?;
            let found = report.colouring.is_some();
            let verification = report.verification.map(|v| match v {
                Verification::Exact => "exact",
                Verification::Budgeted => "budgeted",
            });
            let cjson = report
                .colouring
                .as_ref()
                .map(|c| serde_json::from_str::<serde_json::Value>(&colouring::to_json(c)).unwrap());
            emit(
                global,
                json!({
                    "found": found,
                    "complete": report.complete,
                    "verification": verification,
                    "colouring": cjson,
                }),
                if let Some(c) = &report.colouring {
                    format!("found ({} verification): {}", verification.unwrap_or("-"), colouring::to_json(c))
                } else if report.complete {
                    "no adversarial colouring exists".to_string()
                } else {
                    "none found within budget (inconclusive)".to_string()
                },
            );
            Ok(if found { 1 } else { 0 })
        }
        VerifyCommand::Suite { name, list } => {
            if *list {
                let names = suite_names();
                emit(
                    global,
                    json!({"suites": names}),
                    names.join("\n"),
                );
                return Ok(0);
            }
            let name = name.as_deref().expect("clap enforces name unless --list");
            let report = run_suite(name, global.seed)?;
            let passed = report.passed();
            emit(
                global,
                serde_json::to_value(&report).expect("report serializes"),
                format!(
                    "suite {}: {} cases, {}",
                    report.suite,
                    report.cases,
                    if passed {
                        "all passed".to_string()
                    } else {
                        format!("{} failures: {:?}", report.failures.len(), report.failures)
                    }
                ),
            );
            Ok(if passed { 0 } else { 1 })
        }
    }
}
