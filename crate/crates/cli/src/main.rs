use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use derangement_cli::render::{cone_pretty, table_csv, table_pretty};
use derangement_cli::verify::{self, Suite, VerifyConfig};
use derangement_cli::{json, Basis, BasisTable, Cache, CliError, Result, WallClock};
use derangement_core::cone::{analyze, unipotent_conjecture_probe, Certificate};
use derangement_core::{Budget, CoeffTable};
use num_rational::BigRational;

#[derive(Parser)]
#[command(name = "derangement", version, about = "Derangement characters of GL(n, q)")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Cache directory (default: $DERANGEMENT_CACHE_DIR, then the platform data dir).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Neither read nor write cached tables.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Abort once this many seconds have elapsed.
    #[arg(long, global = true, value_name = "SECONDS")]
    time_budget: Option<f64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Psi,
    Sigma,
    Tau,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::Psi => Basis::Psi,
            BasisArg::Sigma => Basis::Sigma,
            BasisArg::Tau => Basis::Tau,
        }
    }
}

fn rational(s: &str) -> std::result::Result<BigRational, String> {
    BigRational::from_str(s.trim()).map_err(|_| format!("{s:?} is not a rational number"))
}

#[derive(Subcommand)]
enum Command {
    /// Block coefficients of the psi, sigma or tau characters.
    Table {
        #[arg(long, value_enum, default_value = "psi")]
        basis: BasisArg,
        #[arg(long)]
        n: usize,
        /// Only this column.
        #[arg(long)]
        k: Option<usize>,
        /// Specialize at this value of q.
        #[arg(long, value_parser = rational)]
        q: Option<BigRational>,
        #[arg(long, value_enum, default_value = "pretty")]
        format: Format,
    },
    /// Extreme rays of the cone of derangement characters.
    Cone {
        #[arg(long)]
        n: usize,
        /// Also test every lower-degree row against the full-degree rows at this q.
        #[arg(long, value_parser = rational)]
        probe_q: Option<BigRational>,
        #[arg(long, value_enum, default_value = "pretty")]
        format: Format,
    },
    /// Run verification suites.
    Verify {
        /// Suite to run (repeatable; default all).
        #[arg(long = "suite")]
        suites: Vec<String>,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Prime for the finite-group suites.
        #[arg(long)]
        p: Option<u32>,
        /// Degree for the finite-group suites.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        z: Option<BigRational>,
        #[arg(long, value_parser = rational)]
        q: Option<BigRational>,
    },
    /// Inspect or manage the table cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand)]
enum CacheAction {
    /// Print the cache directory.
    Path,
    /// List cached levels.
    List,
    /// Delete all cached tables.
    Clear,
    /// Compute and store the tables for levels 0..=n.
    Build {
        #[arg(long)]
        n: usize,
    },
}

struct Ctx {
    cache: Option<Cache>,
    budget: WallClock,
}

impl Ctx {
    fn table(&self, n: usize) -> Result<CoeffTable> {
        load(self.cache.as_ref(), n, &self.budget)
    }
}

fn load<B: Budget + ?Sized>(cache: Option<&Cache>, n: usize, budget: &B) -> Result<CoeffTable> {
    match cache {
        Some(c) => c.load_or_build(n, budget),
        None => Ok(CoeffTable::with_budget(n, budget)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx {
        cache: if cli.global.no_cache {
            None
        } else {
            Cache::resolve(cli.global.cache_dir.as_deref())
        },
        budget: WallClock::from_secs(cli.global.time_budget),
    };
    match run(cli.command, &ctx) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cmd: Command, ctx: &Ctx) -> Result<u8> {
    match cmd {
        Command::Table { basis, n, k, q, format } => {
            let t = ctx.table(n)?;
            let mut bt = BasisTable::build(&t, basis.into(), &ctx.budget)?;
            if let Some(k) = k {
                bt.select_column(k)?;
            }
            if let Some(q) = &q {
                bt.evaluate(q)?;
            }
            let first = k.unwrap_or(0);
            print!(
                "{}",
                match format {
                    Format::Pretty => table_pretty(&bt, first),
                    Format::Csv => table_csv(&bt, first),
                    Format::Json => json::to_string(&json::table_to_json(&bt, first)),
                }
            );
            Ok(0)
        }
        Command::Cone { n, probe_q, format } => {
            let t = ctx.table(n)?;
            let report = analyze(&t, &ctx.budget)?;
            match format {
                Format::Json => print!("{}", json::to_string(&json::cone_to_json(&report))),
                Format::Pretty | Format::Csv => print!("{}", cone_pretty(&report)),
            }
            if let Some(x) = probe_q {
                let rows = unipotent_conjecture_probe(&t, &x)?;
                let outside = rows.iter().filter(|r| !r.certificate.is_feasible()).count();
                println!(
                    "\nprobe at q = {x}: {} rows, {outside} outside the full-degree cone",
                    rows.len()
                );
                for r in rows.iter().filter(|r| matches!(r.certificate, Certificate::Farkas(_))) {
                    println!("  outside: {}", r.lambda);
                }
            }
            Ok(if report.sample_disagreement { 3 } else { 0 })
        }
        Command::Verify {
            suites,
            n_max,
            p,
            n,
            z,
            q,
        } => {
            let suites = if suites.is_empty() {
                Suite::ALL.to_vec()
            } else {
                suites.iter().map(|s| s.parse()).collect::<Result<Vec<Suite>>>()?
            };
            let mut cfg = VerifyConfig {
                n_max,
                z,
                q,
                ..VerifyConfig::default()
            };
            match (n, p) {
                (None, None) => {}
                (n, p) => cfg.groups = vec![(n.unwrap_or(2), p.unwrap_or(2))],
            }
            let cache = ctx.cache.clone();
            let source = move |n: usize, b: &WallClock| load(cache.as_ref(), n, b);
            let reports = verify::run(&suites, &cfg, &ctx.budget, &source)?;
            for r in &reports {
                println!("{r}");
            }
            Ok(if reports.iter().all(|r| r.passed()) { 0 } else { 1 })
        }
        Command::Cache { action } => {
            let cache = ctx
                .cache
                .as_ref()
                .ok_or_else(|| CliError::Usage(String::from("no cache directory available")))?;
            match action {
                CacheAction::Path => println!("{}", cache.dir().display()),
                CacheAction::List => {
                    for (n, p) in cache.entries()? {
                        println!("{n}\t{}", p.display());
                    }
                }
                CacheAction::Clear => println!("removed {} files", cache.clear()?),
                CacheAction::Build { n } => {
                    for m in 0..=n {
                        if cache.load(m).is_none() {
                            let t = CoeffTable::with_budget(m, &ctx.budget)?;
                            cache.store(&t)?;
                        }
                        println!("{}", cache.path_for(m).display());
                    }
                }
            }
            Ok(0)
        }
    }
}
