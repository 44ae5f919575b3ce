use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use forcing_lab::expr::GraphExpr;
use forcing_lab::report::{self, ComputeOptions, MatrixKind};
use forcing_lab::solvers::{Invariant, DEFAULT_BUDGET};
use forcing_lab::table::{self, Format};
use forcing_lab::verify::{self, Grid};
use forcing_lab::Family;

const PARSE_ERROR: u8 = 2;
const INVARIANT_VIOLATION: u8 = 3;

#[derive(Parser)]
#[command(name = "forcing-lab", version, about = "Zero forcing and power domination on graphs and graph products")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute invariants, bounds and certificates for one graph.
    Compute(ComputeArgs),
    /// Check a result over a parameter grid.
    Verify(VerifyArgs),
    /// Emit a table of values over a parameter grid.
    Table(TableArgs),
}

/// Accepts plain integers and float notation such as `1e7`.
fn parse_budget(s: &str) -> Result<u64, String> {
    let s = s.trim().replace('_', "");
    if let Ok(v) = s.parse::<u64>() {
        return Ok(v);
    }
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() && v >= 0.0 && v.fract() == 0.0 && v <= u64::MAX as f64 => Ok(v as u64),
        _ => Err(format!("budget must be a non-negative integer such as 100000 or 1e7, got {s:?}")),
    }
}

#[derive(Args)]
struct BudgetArg {
    /// Cap on candidate subsets per exact solve.
    #[arg(long, env = "FORCING_LAB_BUDGET", value_parser = parse_budget, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Graph expression, e.g. "tensor(path:3, complete:3)".
    #[arg(long)]
    family: Option<String>,
    /// Edge-list file.
    #[arg(long)]
    graph: Option<PathBuf>,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    source: Source,
    /// Invariants to compute: zf, skew, pd, dom, tdom (comma separated).
    #[arg(long = "inv", value_delimiter = ',', value_parser = report::parse_invariant, default_value = "zf,skew,pd,dom,tdom")]
    invariants: Vec<Invariant>,
    /// Matrix for the nullity bound on power domination.
    #[arg(long)]
    matrix: Option<MatrixKind>,
    /// Add wall time per computed field.
    #[arg(long)]
    timings: bool,
    #[command(flatten)]
    budget: BudgetArg,
}

#[derive(Args)]
struct GridArgs {
    /// Range `a..b` (inclusive) for the first family parameter.
    #[arg(long, value_parser = verify::parse_range)]
    t: Option<RangeInclusive<usize>>,
    /// Range for the complete-graph size, or graph orders for corpus checks.
    #[arg(long, value_parser = verify::parse_range)]
    n: Option<RangeInclusive<usize>>,
    /// Range for the second parameter (cycle length, second-factor order).
    #[arg(long, value_parser = verify::parse_range)]
    m: Option<RangeInclusive<usize>>,
    /// Restrict to the path or cycle family.
    #[arg(long)]
    family: Option<Family>,
    #[command(flatten)]
    budget: BudgetArg,
}

impl GridArgs {
    fn grid(&self) -> Grid {
        Grid {
            t: self.t.clone(),
            n: self.n.clone(),
            m: self.m.clone(),
            family: self.family,
            budget: self.budget.budget,
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// One of obs1.1 obs1.2 thm2.1 ex2.2 thm2.3 thm2.4 thm2.5 thm2.6 thm3.1
    /// thm3.2 cor3.3 prop3.4 thm3.6 eq1 eq2 thm3.7 cor3.8.
    id: String,
    #[command(flatten)]
    grid: GridArgs,
}

#[derive(Args)]
struct TableArgs {
    /// thm3.6 or certificates.
    id: String,
    #[command(flatten)]
    grid: GridArgs,
    #[arg(long, default_value = "csv")]
    format: Format,
}

fn compute(args: &ComputeArgs) -> ExitCode {
    let expr = match (&args.source.family, &args.source.graph) {
        (Some(src), _) => match GraphExpr::parse(src) {
            Ok(e) => e,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(PARSE_ERROR);
            }
        },
        (None, Some(path)) => GraphExpr::File(path.clone()),
        (None, None) => unreachable!("clap requires a graph source"),
    };
    let g = match expr.build() {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(PARSE_ERROR);
        }
    };
    let opts = ComputeOptions {
        invariants: args.invariants.clone(),
        budget: args.budget.budget,
        matrix: args.matrix,
        timings: args.timings,
    };
    let r = report::compute(&expr, &g, &opts);
    print!("{}", r.render());
    let bad = r.violations(&g);
    if bad.is_empty() {
        ExitCode::SUCCESS
    } else {
        for b in bad {
            eprintln!("invariant violation: {b}");
        }
        ExitCode::from(INVARIANT_VIOLATION)
    }
}

fn run_verify(args: &VerifyArgs) -> ExitCode {
    match verify::run(&args.id, &args.grid.grid()) {
        Ok(s) => {
            print!("{}", s.render());
            if s.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(PARSE_ERROR)
        }
    }
}

fn run_table(args: &TableArgs) -> ExitCode {
    match table::build(&args.id, &args.grid.grid()) {
        Ok(t) => {
            print!("{}", t.render(args.format));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: unknown table {:?}; known tables: {}", e.0, table::TABLE_IDS.join(", "));
            ExitCode::from(PARSE_ERROR)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Compute(a) => compute(a),
        Command::Verify(a) => run_verify(a),
        Command::Table(a) => run_table(a),
    }
}
