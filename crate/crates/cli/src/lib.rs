//! Command-line front end.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use plr_atop::bench::{
    emit_csv, emit_summary_csv, generate, run_bench, verify_agreement, AgreementError, AtopMethod,
    BenchConfig, Suite,
};
use plr_atop::budget::DEFAULT_CAP;
use plr_atop::generators::{derive_seed, RngStream};
use plr_atop::methods::parse_invariant;
use plr_atop::text::{format_group, parse_plr, write_plr};
use plr_atop::{
    compute_atop, InvariantKind, InvariantTable, Limits, MethodSpec, PartialLatinRectangle,
};

#[derive(Debug, Parser)]
#[command(
    name = "plr-atop",
    version,
    about = "Autotopism groups of partial Latin rectangles"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the autotopism group of a rectangle file.
    Compute(ComputeArgs),
    /// Write a random rectangle from set A or set B.
    Generate(GenerateArgs),
    /// Print the rectangle with entries replaced by invariant classes.
    Invariants(InvariantsArgs),
    /// Check that several methods give the same groups on random rectangles.
    Agree(AgreeArgs),
    /// Run a benchmark described by a key=value config file.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Method, optionally with an invariant: `plr-expanded` or `plr-expanded:square`.
    #[arg(long, default_value = "plr-expanded")]
    pub method: MethodSpec,
    /// Entry invariant (none, sei, square, combined); overrides one given in --method.
    #[arg(long)]
    pub invariant: Option<String>,
    #[arg(long)]
    pub timeout_ms: Option<u64>,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    pub file: PathBuf,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long)]
    pub suite: Suite,
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub s: usize,
    #[arg(long)]
    pub n: usize,
    /// Attempts (set A) or entries kept (set B).
    #[arg(long)]
    pub x: usize,
    #[arg(long, env = "PLR_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Markov chain moves for set B; defaults to 10 n^3.
    #[arg(long)]
    pub moves: Option<usize>,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct InvariantsArgs {
    #[arg(long, default_value = "sei")]
    pub kind: InvariantKind,
    pub file: PathBuf,
}

#[derive(Debug, Args)]
pub struct AgreeArgs {
    /// Comma-separated method specs; `all` for every family and invariant.
    #[arg(long, default_value = "all")]
    pub methods: String,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, env = "PLR_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value = "a")]
    pub suite: Suite,
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub s: usize,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long)]
    pub config: PathBuf,
    /// Overrides the seed in the config file.
    #[arg(long, env = "PLR_SEED")]
    pub seed: Option<u64>,
    /// Per-sample CSV; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Per-(method, x) summary CSV.
    #[arg(long)]
    pub summary: Option<PathBuf>,
}

/// How a successful run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Divergence,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Divergence => 2,
        }
    }
}

fn read_plr(path: &Path) -> Result<PartialLatinRectangle> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_plr(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_out(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => out.write_all(text.as_bytes()).context("writing output"),
    }
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<Status> {
    match cli.command {
        Command::Compute(args) => {
            let l = read_plr(&args.file)?;
            let mut spec = args.method;
            if let Some(k) = &args.invariant {
                spec.invariant = parse_invariant(k).map_err(anyhow::Error::msg)?;
            }
            let limits = Limits {
                cap: args.cap,
                deadline: args
                    .timeout_ms
                    .map(|ms| Instant::now() + Duration::from_millis(ms)),
            };
            let g = compute_atop(&l, spec, &limits)
                .with_context(|| format!("computing with {spec}"))?;
            write!(out, "{}", format_group(&g))?;
        }
        Command::Generate(args) => {
            if args.suite == Suite::B && args.n < args.r.max(args.s) {
                bail!("set B needs n >= max(r, s)");
            }
            let mut rng = RngStream::new(args.seed);
            let l = generate(
                args.suite, args.r, args.s, args.n, args.x, args.moves, &mut rng,
            )?;
            write_out(args.out.as_deref(), &write_plr(&l), out)?;
        }
        Command::Invariants(args) => {
            let l = read_plr(&args.file)?;
            let table = InvariantTable::compute(&l, args.kind);
            writeln!(out, "# {} classes: {}", args.kind, table.class_count)?;
            write!(out, "{}", table.format_relabeled())?;
        }
        Command::Agree(args) => {
            let specs: Vec<MethodSpec> = if args.methods.trim() == "all" {
                MethodSpec::all()
            } else {
                args.methods
                    .split(',')
                    .map(|m| m.trim().parse::<MethodSpec>())
                    .collect::<Result<_, _>>()
                    .map_err(anyhow::Error::msg)?
            };
            if args.suite == Suite::B && args.n < args.r.max(args.s) {
                bail!("set B needs n >= max(r, s)");
            }
            let cells = args.r * args.s;
            let samples = (0..args.samples)
                .map(|i| {
                    let x = match args.suite {
                        Suite::A => i % (2 * cells + 1),
                        Suite::B => i % (cells + 1),
                    };
                    let mut rng = RngStream::new(derive_seed(args.seed, &[i as u64]));
                    generate(args.suite, args.r, args.s, args.n, x, None, &mut rng)
                })
                .collect::<Result<Vec<_>, _>>()?;
            let methods: Vec<&dyn AtopMethod> =
                specs.iter().map(|s| s as &dyn AtopMethod).collect();
            let limits = Limits {
                cap: DEFAULT_CAP,
                deadline: None,
            };
            match verify_agreement(&methods, &samples, &limits) {
                Ok(report) => writeln!(
                    out,
                    "agreement: {} samples, {} methods",
                    report.samples, report.methods
                )?,
                Err(AgreementError::DivergenceFound(d)) => {
                    writeln!(out, "{d}")?;
                    return Ok(Status::Divergence);
                }
                Err(e) => bail!(e),
            }
        }
        Command::Bench(args) => {
            let text = std::fs::read_to_string(&args.config)
                .with_context(|| format!("reading {}", args.config.display()))?;
            let mut cfg = BenchConfig::parse(&text)?;
            if let Some(seed) = args.seed {
                cfg.seed = seed;
            }
            let report = run_bench(&cfg)?;
            write_out(args.out.as_deref(), &emit_csv(&report.records), out)?;
            if let Some(path) = &args.summary {
                write_out(Some(path), &emit_summary_csv(&report.aggregates), out)?;
            }
        }
    }
    Ok(Status::Ok)
}
