//! `cordial`: check, construct, and search for cordial labelings of paths
//! and cycles over finite abelian groups.
//!
//! Exit status: 0 found or cordial, 1 proven negative, 2 input error,
//! 3 inconclusive.

mod render;

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cordial_core::constructors::{construct_cycle, construct_path, ConstructOutcome};
use cordial_core::format::{parse_labeling, parse_labels};
use cordial_core::search::{
    count_labelings, search_cycle, search_path, sweep_conjecture, verify_exp2_argument,
    SearchOptions, SweepOptions, Verdict, DEFAULT_ORACLE_BOUND,
};
use cordial_core::{GraphKind, GraphLabeling, GroupSpec};

use render::Output;

const EXIT_INPUT: u8 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "cordial",
    version,
    about = "Cordial labelings of paths and cycles over finite abelian groups"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true, env = "CORDIAL_JSON")]
    json: bool,
    /// Worker threads for search.
    #[arg(long, global = true, env = "CORDIAL_THREADS")]
    threads: Option<usize>,
    /// Stop a search after this many nodes and report it as inconclusive.
    #[arg(long, global = true, env = "CORDIAL_NODE_BUDGET")]
    node_budget: Option<u64>,
    /// Largest labeling space `count` will enumerate.
    #[arg(long, global = true, env = "CORDIAL_ORACLE_BOUND", default_value_t = DEFAULT_ORACLE_BOUND)]
    oracle_bound: u64,
    /// Seed for randomized checks.
    #[arg(long, global = true, env = "CORDIAL_SEED", default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check whether a labeling is cordial.
    Check(CheckArgs),
    /// Build a cordial labeling by construction, falling back to search.
    Construct(ShapeArgs),
    /// Exhaustive backtracking search.
    Search(SearchArgs),
    /// Count cordial labelings by brute force.
    Count(ShapeArgs),
    /// Run the small-order sweep.
    Sweep(SweepArgs),
    /// Property-check the parity argument over (Z_2)^r.
    VerifyExp2(Exp2Args),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Path,
    Cycle,
}

impl From<Kind> for GraphKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Path => GraphKind::Path,
            Kind::Cycle => GraphKind::Cycle,
        }
    }
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// Labeling file in the text format; `-` reads stdin.
    #[arg(conflicts_with_all = ["group", "labels"])]
    file: Option<PathBuf>,
    #[arg(long, requires = "labels")]
    group: Option<String>,
    /// Inline labels such as `00-12-10`.
    #[arg(long, requires = "group", allow_hyphen_values = true)]
    labels: Option<String>,
    #[arg(long, value_enum, default_value_t = Kind::Path)]
    kind: Kind,
}

#[derive(Args, Debug)]
struct ShapeArgs {
    #[arg(long)]
    group: String,
    #[arg(long)]
    length: usize,
    #[arg(long, value_enum, default_value_t = Kind::Path)]
    kind: Kind,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    /// Sequential search with a reproducible witness.
    #[arg(long)]
    canonical: bool,
    /// Disable shift and reversal symmetry reduction.
    #[arg(long)]
    no_symmetry: bool,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long)]
    max_order: usize,
    #[arg(long, default_value_t = 3)]
    max_multiple: usize,
}

#[derive(Args, Debug)]
struct Exp2Args {
    #[arg(long)]
    rank: usize,
    #[arg(long, default_value_t = 100_000)]
    trials: u64,
}

/// Failure before any mathematical verdict.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = Output::new(cli.json);
    let code = match run(&cli, &out) {
        Ok(code) => code,
        Err(InputError(msg)) => {
            out.error(&msg);
            EXIT_INPUT
        }
    };
    out.flush();
    ExitCode::from(code)
}

fn search_options(cli: &Cli) -> SearchOptions {
    SearchOptions::default()
        .with_budget(cli.node_budget)
        .with_threads(cli.threads)
}

fn parse_group(s: &str) -> Result<GroupSpec, InputError> {
    s.parse::<GroupSpec>()
        .map_err(|e| InputError(format!("group {s:?}: column {}: {}", e.column, e.message)))
}

fn run(cli: &Cli, out: &Output) -> Result<u8, InputError> {
    match &cli.command {
        Command::Check(a) => {
            let l = read_labeling(a)?;
            let report = l.check_cordial();
            out.check(&l, &report);
            Ok(if report.cordial { 0 } else { 1 })
        }
        Command::Construct(a) => {
            let g = parse_group(&a.group)?;
            let opts = search_options(cli);
            let outcome = match a.kind {
                Kind::Path => construct_path(&g, a.length, &opts)?,
                Kind::Cycle => construct_cycle(&g, a.length, &opts)?,
            };
            out.construct(&g, a.kind.into(), a.length, &outcome);
            Ok(match outcome {
                ConstructOutcome::Built(_) => 0,
                ConstructOutcome::Impossible { .. } => 1,
                ConstructOutcome::Inconclusive { .. } => 3,
            })
        }
        Command::Search(a) => {
            let g = parse_group(&a.shape.group)?;
            let mut opts = search_options(cli);
            opts.canonical_witness = a.canonical;
            opts.symmetry_reduction = !a.no_symmetry;
            let result = match a.shape.kind {
                Kind::Path => search_path(&g, a.shape.length, &opts)?,
                Kind::Cycle => search_cycle(&g, a.shape.length, &opts)?,
            };
            out.search(&g, a.shape.kind.into(), a.shape.length, &result);
            Ok(match result.verdict {
                Verdict::Found => 0,
                Verdict::Exhausted => 1,
                Verdict::BudgetExceeded => 3,
            })
        }
        Command::Count(a) => {
            let g = parse_group(&a.group)?;
            let count = count_labelings(&g, a.kind.into(), a.length, cli.oracle_bound)?;
            out.count(&g, a.kind.into(), a.length, count);
            Ok(0)
        }
        Command::Sweep(a) => {
            let mut opts = SweepOptions::new(a.max_order, a.max_multiple);
            opts.search = search_options(cli);
            let report = sweep_conjecture(&opts);
            out.sweep(&report);
            Ok(if report.all_consistent() { 0 } else { 1 })
        }
        Command::VerifyExp2(a) => {
            let report = verify_exp2_argument(a.rank, a.trials, cli.seed)?;
            out.exp2(&report);
            Ok(if report.holds { 0 } else { 1 })
        }
    }
}

fn read_labeling(a: &CheckArgs) -> Result<GraphLabeling, InputError> {
    if let (Some(group), Some(labels)) = (&a.group, &a.labels) {
        let g = parse_group(group)?;
        return parse_labels(&g, a.kind.into(), labels)
            .map_err(|e| InputError(format!("labels: column {}: {}", e.column, e.message)));
    }
    let text = match a.file.as_deref() {
        None => {
            return Err(InputError(
                "give a file, `-`, or --group with --labels".into(),
            ))
        }
        Some(p) if p.as_os_str() == "-" => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
        Some(p) => {
            fs::read_to_string(p).map_err(|e| InputError(format!("{}: {e}", p.display())))?
        }
    };
    Ok(parse_labeling(&text)?)
}
