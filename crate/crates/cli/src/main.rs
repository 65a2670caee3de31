use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use chroma::bench::{run_benchmark, run_cell, BenchOptions};
use chroma::heuristics::DEFAULT_EXACT_LIMIT;
use chroma::results::{read_results_csv, read_results_json};
use chroma::search::{Clock, Cooling, Initializer};
use chroma::{
    chromatic_number_exact, compare_report, load_instance, Error, Manifest, Method, ReferenceTable,
    ResultFormat, SolverParams,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use log::error;

#[derive(Parser)]
#[command(name = "chroma", version, about = "Graph coloring with single-state metaheuristics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Color one DIMACS instance with one method.
    Solve(SolveArgs),
    /// Run every instance x method x seed cell of a manifest.
    Bench(BenchArgs),
    /// Tabulate a results file by instance and method.
    Report {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Chromatic number of a small instance by exhaustive search.
    Exact {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
        limit: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Hc,
    Sa,
    Ts,
    Ils,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Hc => Method::Hc,
            MethodArg::Sa => Method::Sa,
            MethodArg::Ts => Method::Ts,
            MethodArg::Ils => Method::Ils,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CoolingArg {
    Linear,
    Geometric,
}

#[derive(Clone, Copy, ValueEnum)]
enum InitArg {
    Dsatur,
    Random,
}

#[derive(Args)]
struct SolveArgs {
    file: PathBuf,
    #[arg(long, value_enum)]
    method: MethodArg,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Wall budget in seconds for the whole palette reduction.
    #[arg(long, default_value_t = 600.0)]
    budget: f64,
    /// Best-known color counts (`name colors` per line), merged over the
    /// built-in table.
    #[arg(long, value_name = "FILE")]
    reference: Option<PathBuf>,
    #[command(flatten)]
    params: ParamArgs,
}

#[derive(Args, Default)]
struct ParamArgs {
    #[arg(long)]
    hc_iterations: Option<u64>,
    /// Accept only strictly improving hill-climbing moves.
    #[arg(long)]
    hc_strict: bool,
    #[arg(long)]
    sa_iterations: Option<u64>,
    #[arg(long)]
    sa_decrement: Option<f64>,
    #[arg(long, value_enum)]
    sa_cooling: Option<CoolingArg>,
    #[arg(long)]
    ts_iterations: Option<u64>,
    #[arg(long)]
    ts_tabu_length: Option<usize>,
    #[arg(long)]
    ts_num_tweaks: Option<usize>,
    #[arg(long)]
    ils_inner_seconds: Option<f64>,
    #[arg(long)]
    ils_total_seconds: Option<f64>,
    #[arg(long)]
    ils_queue_length: Option<usize>,
    #[arg(long)]
    ils_perturbation: Option<f64>,
    #[arg(long, value_enum)]
    init: Option<InitArg>,
}

impl ParamArgs {
    fn apply(&self, p: &mut SolverParams) {
        macro_rules! set {
            ($($field:ident),*) => {$(
                if let Some(v) = self.$field {
                    p.$field = v;
                }
            )*};
        }
        set!(
            hc_iterations,
            sa_iterations,
            sa_decrement,
            ts_iterations,
            ts_tabu_length,
            ts_num_tweaks,
            ils_inner_seconds,
            ils_total_seconds,
            ils_queue_length,
            ils_perturbation
        );
        p.hc_strict |= self.hc_strict;
        if let Some(c) = self.sa_cooling {
            p.sa_cooling = match c {
                CoolingArg::Linear => Cooling::Linear,
                CoolingArg::Geometric => Cooling::Geometric,
            };
        }
        if let Some(i) = self.init {
            p.init = match i {
                InitArg::Dsatur => Initializer::Dsatur,
                InitArg::Random => Initializer::Random,
            };
        }
    }
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_name = "FILE")]
    manifest: PathBuf,
    #[arg(long, value_name = "FILE")]
    out: PathBuf,
    /// Write JSON instead of CSV.
    #[arg(long)]
    json: bool,
    /// Cells run concurrently (default: available processors).
    #[arg(long)]
    jobs: Option<usize>,
}

/// Exit 2 for unreadable or malformed input, 1 for internal failures.
fn exit_code(e: &Error) -> ExitCode {
    match e {
        Error::InvariantBreach(_) | Error::Write(_) => ExitCode::from(1),
        _ => ExitCode::from(2),
    }
}

fn references(extra: Option<&Path>) -> chroma::Result<ReferenceTable> {
    let table = ReferenceTable::dimacs();
    Ok(match extra {
        Some(path) => table.overridden_by(ReferenceTable::load(path)?),
        None => table,
    })
}

fn solve(args: &SolveArgs) -> chroma::Result<()> {
    let references = references(args.reference.as_deref())?;
    let instance = load_instance(&args.file, Some(&references))?;
    let method = Method::from(args.method);
    let mut params = SolverParams {
        method,
        wall_budget_seconds: args.budget,
        ..SolverParams::default()
    };
    args.params.apply(&mut params);
    let (row, solution) = run_cell(&instance, method, args.seed, &params, Clock::mode_from_env())?;

    let mut out = io::stdout().lock();
    writeln!(out, "instance: {}", row.instance)?;
    writeln!(out, "method: {}", row.method)?;
    writeln!(out, "seed: {}", row.seed)?;
    writeln!(out, "vertices: {}", instance.graph.vertex_count())?;
    writeln!(out, "edges: {}", instance.graph.edge_count())?;
    writeln!(out, "dsatur_k: {}", solution.initial_k)?;
    writeln!(out, "k: {}", row.k_colors)?;
    match (row.best_known, row.diff_percent) {
        (Some(best), Some(diff)) => {
            writeln!(out, "best_known: {best}")?;
            writeln!(out, "diff_percent: {diff:.2}")?;
        }
        _ => {
            writeln!(out, "best_known: -")?;
            writeln!(out, "diff_percent: -")?;
        }
    }
    writeln!(out, "wall_seconds: {:.3}", row.wall_seconds)?;
    Ok(())
}

fn bench(args: &BenchArgs) -> chroma::Result<()> {
    let manifest = Manifest::load(&args.manifest)?;
    let mut options = BenchOptions {
        clock: Clock::mode_from_env(),
        format: if args.json { ResultFormat::Json } else { ResultFormat::Csv },
        ..BenchOptions::default()
    };
    if let Some(jobs) = args.jobs {
        options.jobs = jobs;
    }
    let file = File::create(&args.out).map_err(|source| Error::Io {
        path: args.out.clone(),
        source,
    })?;
    let report = run_benchmark(&manifest, &options, BufWriter::new(file))?;
    for e in &report.errors {
        eprintln!(
            "skipped {} {} seed {}: {}",
            e.instance.display(),
            e.method,
            e.seed,
            e.message
        );
    }
    eprintln!("{} rows written to {}", report.rows.len(), args.out.display());
    Ok(())
}

fn report(input: &Path) -> chroma::Result<()> {
    let file = File::open(input).map_err(|source| Error::Io {
        path: input.to_path_buf(),
        source,
    })?;
    let is_json = input.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"));
    let rows = if is_json {
        read_results_json(file)?
    } else {
        read_results_csv(file)?
    };
    print!("{}", compare_report(&rows));
    Ok(())
}

fn exact(file: &Path, limit: usize) -> chroma::Result<()> {
    let instance = load_instance(file, None)?;
    let result = chromatic_number_exact(&instance.graph, limit)?;
    println!("instance: {}", instance.name);
    println!("chromatic_number: {}", result.chromatic_number);
    let witness: Vec<String> = result.witness.as_slice().iter().map(|c| c.to_string()).collect();
    println!("witness: {}", witness.join(" "));
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Solve(args) => solve(args),
        Command::Bench(args) => bench(args),
        Command::Report { input } => report(input),
        Command::Exact { file, limit } => exact(file, *limit),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            error!("{e}");
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
