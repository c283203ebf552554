mod cache;
mod export;
mod sweep;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use lambda_power::exact::{lambda_exact, ExactOptions, LambdaReport, Method};
use lambda_power::groups::{FiniteGroup, DEFAULT_MAX_ORDER};
use lambda_power::limits::{Limits, DEFAULT_DP_LIMIT, MAX_DP_LIMIT};
use lambda_power::parse_group_spec;

use cache::Cache;

pub const EXIT_OK: u8 = 0;
pub const EXIT_ERROR: u8 = 1;
pub const EXIT_INEXACT: u8 = 2;
pub const EXIT_MISMATCH: u8 = 3;

const DP_LIMIT_ENV: &str = "LAMBDA_POWER_DP_LIMIT";

#[derive(Parser)]
#[command(name = "lambda-power", version)]
#[command(about = "L(2,1)-labeling numbers of power graphs of finite groups")]
struct Cli {
    /// Per-component vertex limit for the subset DP (default 24, or
    /// LAMBDA_POWER_DP_LIMIT).
    #[arg(long, global = true)]
    dp_limit: Option<usize>,

    /// Largest group order to construct.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER)]
    max_group_order: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute λ of the power graph of a group.
    Lambda {
        /// Group spec, e.g. Z6, D12, Q8, Z2xZ2, A5, "perm:(1 2 3);(1 2)".
        spec: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Run every applicable method and require agreement.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
        /// Wall-clock budget for backtracking, in milliseconds.
        #[arg(long)]
        budget_ms: Option<u64>,
        /// Skip witness construction for ledger-pinned results.
        #[arg(long)]
        no_witness: bool,
        /// JSON-lines result cache.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Compare solver λ with the closed forms over a family.
    Verify {
        #[arg(value_enum)]
        family: Family,
        /// Family parameter range, e.g. 3..8 (inclusive) or 5.
        range: Option<String>,
        /// Prime for the elementary-abelian family.
        #[arg(long, default_value_t = 2)]
        prime: usize,
        /// Treat skipped (capacity-limited) instances as failures.
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Print graph invariants and the bound ledger.
    Invariants {
        spec: String,
        #[arg(long)]
        json: bool,
    },
    /// Export the power graph.
    Graph {
        spec: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Sweep the built-in corpus and check the classifications.
    Enumerate {
        #[arg(long, default_value_t = 16)]
        max_order: usize,
        /// Allow --max-order above 30.
        #[arg(long)]
        no_cap: bool,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Ledger,
    #[value(alias = "path-cover")]
    Pathcover,
    Backtrack,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Ledger => Method::Ledger,
            MethodArg::Pathcover => Method::PathCover,
            MethodArg::Backtrack => Method::Backtrack,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Dihedral,
    Quaternion,
    Cyclic,
    ElementaryAbelian,
    Zpqn,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Json,
    Csv,
}

pub struct Context {
    pub limits: Limits,
    pub max_group_order: usize,
}

impl Context {
    pub fn group(&self, spec: &str) -> Result<FiniteGroup, String> {
        let parsed = parse_group_spec(spec).map_err(|e| format!("{spec}: {e}"))?;
        parsed.build(self.max_group_order).map_err(|e| format!("{spec}: {e}"))
    }

    pub fn options(&self) -> ExactOptions {
        ExactOptions {
            limits: self.limits,
            ..Default::default()
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_ERROR } else { EXIT_OK });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn dp_limit(flag: Option<usize>) -> Result<usize, String> {
    let limit = match flag {
        Some(l) => l,
        None => match std::env::var(DP_LIMIT_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| format!("{DP_LIMIT_ENV}={v} is not a nonnegative integer"))?,
            Err(_) => DEFAULT_DP_LIMIT,
        },
    };
    if limit > MAX_DP_LIMIT {
        return Err(format!("DP limit {limit} exceeds the maximum of {MAX_DP_LIMIT}"));
    }
    Ok(limit)
}

fn run(cli: Cli) -> Result<u8, String> {
    let ctx = Context {
        limits: Limits {
            dp: dp_limit(cli.dp_limit)?,
            ..Limits::default()
        },
        max_group_order: cli.max_group_order,
    };
    match cli.command {
        Command::Lambda {
            spec,
            method,
            verify,
            json,
            budget_ms,
            no_witness,
            cache,
        } => {
            let opts = ExactOptions {
                method: method.into(),
                verify,
                budget: budget_ms.map(Duration::from_millis),
                witness: !no_witness,
                ..ctx.options()
            };
            let g = ctx.group(&spec)?;
            let mut cache = cache.map(Cache::open).transpose()?;
            let key = Cache::key(&g.descriptor().to_string(), &opts);
            let report = match cache.as_ref().and_then(|c| c.get(&key)) {
                Some(r) => r.clone(),
                None => {
                    let r = lambda_exact(&g, &opts).map_err(|e| e.to_string())?;
                    if let Some(c) = cache.as_mut() {
                        c.insert(key, &r)?;
                    }
                    r
                }
            };
            if json {
                emit(&(serde_json::to_string_pretty(&report).map_err(|e| e.to_string())? + "\n"))?;
            } else {
                emit(&export::lambda_table(&report))?;
            }
            Ok(lambda_exit_code(&report, verify))
        }
        Command::Verify {
            family,
            range,
            prime,
            strict,
            cache,
        } => sweep::verify(&ctx, family, range.as_deref(), prime, strict, cache),
        Command::Invariants { spec, json } => {
            let g = ctx.group(&spec)?;
            let inv = export::invariants(&g, &ctx.limits).map_err(|e| e.to_string())?;
            if json {
                emit(&(serde_json::to_string_pretty(&inv).map_err(|e| e.to_string())? + "\n"))?;
            } else {
                emit(&export::invariants_table(&inv))?;
            }
            Ok(EXIT_OK)
        }
        Command::Graph { spec, format } => {
            let g = ctx.group(&spec)?;
            emit(&export::graph(&g, format)?)?;
            Ok(EXIT_OK)
        }
        Command::Enumerate {
            max_order,
            no_cap,
            json,
            cache,
        } => {
            if max_order > 30 && !no_cap {
                return Err(format!("--max-order {max_order} is above the cap of 30; pass --no-cap to allow it"));
            }
            sweep::enumerate(&ctx, max_order, json, cache)
        }
    }
}

/// Writes to stdout, treating a closed pipe as success.
pub fn emit(text: &str) -> Result<(), String> {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.to_string()),
        _ => Ok(()),
    }
}

fn lambda_exit_code(report: &LambdaReport, verify: bool) -> u8 {
    if report.verified == Some(false) {
        let values: Vec<String> = report.checks.iter().map(|c| format!("{}={}", c.method, c.lambda)).collect();
        eprintln!("verification failed: {}", values.join(", "));
        if let Some(note) = &report.note {
            eprintln!("{note}");
        }
        EXIT_MISMATCH
    } else if verify && report.verified.is_none() {
        eprintln!("not verified: fewer than two methods could run");
        EXIT_INEXACT
    } else if report.exact {
        EXIT_OK
    } else {
        EXIT_INEXACT
    }
}
