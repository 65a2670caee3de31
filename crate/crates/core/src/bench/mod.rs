//! Benchmark harness: run (instance, method, seed) cells, score them against
//! best-known color counts, and tabulate the results.

mod manifest;
mod report;

pub use manifest::Manifest;
pub use report::compare_report;

use std::io::Write;
use std::path::PathBuf;

use log::{info, warn};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dimacs::{load_instance, InstanceRecord, ReferenceTable};
use crate::error::{Error, Result};
use crate::heuristics::RngSeed;
use crate::results::{write_results, ResultFormat};
use crate::search::{solve_k_reduction_in, Clock, ClockMode, Method, SearchEnv, Solution, SolverParams};

/// One benchmark row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunResult {
    pub instance: String,
    pub method: Method,
    pub seed: u64,
    pub k_colors: u32,
    pub proper: bool,
    pub wall_seconds: f64,
    pub best_known: Option<u32>,
    pub diff_percent: Option<f64>,
}

/// `100 * (obtained - reference) / reference`, rounded half-up to two
/// decimals. Computed in integer hundredths, so the rounding is exact.
pub fn diff_percent(obtained: u32, reference: u32) -> Result<f64> {
    if reference == 0 {
        return Err(Error::ZeroReference);
    }
    let numerator = 10_000 * (i64::from(obtained) - i64::from(reference));
    let reference = i64::from(reference);
    let hundredths = (2 * numerator + reference).div_euclid(2 * reference);
    Ok(hundredths as f64 / 100.0)
}

/// Solves one cell and checks the coloring before reporting it. Timing covers
/// the solver call only.
pub fn run_cell(
    instance: &InstanceRecord,
    method: Method,
    seed: u64,
    params: &SolverParams,
    clock: ClockMode,
) -> Result<(RunResult, Solution)> {
    let params = SolverParams {
        method,
        ..params.clone()
    };
    let mut env = SearchEnv::new(RngSeed(seed), Clock::new(clock), params.wall_budget_seconds);
    let solution = solve_k_reduction_in(&mut env, &instance.graph, &params)?;
    let wall_seconds = env.elapsed_seconds();
    if !instance.graph.is_proper(&solution.coloring)? {
        return Err(Error::InvariantBreach(format!(
            "{method} returned an improper coloring on {} (seed {seed})",
            instance.name
        )));
    }
    let k_colors = solution.k;
    let diff_percent = instance
        .best_known_colors
        .map(|reference| diff_percent(k_colors, reference))
        .transpose()?;
    let row = RunResult {
        instance: instance.name.clone(),
        method,
        seed,
        k_colors,
        proper: true,
        wall_seconds,
        best_known: instance.best_known_colors,
        diff_percent,
    };
    Ok((row, solution))
}

/// A cell that could not run because its instance failed to load.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellError {
    pub instance: PathBuf,
    pub method: Method,
    pub seed: u64,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct BenchReport {
    pub rows: Vec<RunResult>,
    pub errors: Vec<CellError>,
}

#[derive(Debug, Clone, Copy)]
pub struct BenchOptions {
    /// Cells run concurrently; each cell stays single-threaded.
    pub jobs: usize,
    pub clock: ClockMode,
    pub format: ResultFormat,
}

impl Default for BenchOptions {
    fn default() -> Self {
        Self {
            jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
            clock: ClockMode::Real,
            format: ResultFormat::Csv,
        }
    }
}

/// Runs every instance x method x seed cell of `manifest`, writes the rows to
/// `out`, and returns them sorted by (instance, method, seed).
///
/// Instances that fail to load are skipped and reported in
/// [`BenchReport::errors`]; an improper coloring aborts the whole run.
pub fn run_benchmark<W: Write>(manifest: &Manifest, options: &BenchOptions, out: W) -> Result<BenchReport> {
    let references = match &manifest.references {
        Some(path) => ReferenceTable::dimacs().overridden_by(ReferenceTable::load(path)?),
        None => ReferenceTable::dimacs(),
    };

    let mut instances = Vec::new();
    let mut errors = Vec::new();
    for path in &manifest.instances {
        match load_instance(path, Some(&references)) {
            Ok(record) => instances.push(record),
            Err(e) => {
                warn!("skipping {}: {e}", path.display());
                for &method in &manifest.methods {
                    for &seed in &manifest.seeds {
                        errors.push(CellError {
                            instance: path.clone(),
                            method,
                            seed,
                            message: e.to_string(),
                        });
                    }
                }
            }
        }
    }

    let cells: Vec<(usize, Method, u64)> = (0..instances.len())
        .flat_map(|i| {
            manifest
                .methods
                .iter()
                .flat_map(move |&m| manifest.seeds.iter().map(move |&s| (i, m, s)))
        })
        .collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs.max(1))
        .build()
        .map_err(|e| Error::Params(format!("thread pool: {e}")))?;
    let params = manifest.params.clone();
    let outcomes: Vec<Result<RunResult>> = pool.install(|| {
        cells
            .par_iter()
            .map(|&(i, method, seed)| {
                let (row, _) = run_cell(&instances[i], method, seed, &params, options.clock)?;
                info!(
                    "{} {} seed {}: k = {} in {:.3}s",
                    row.instance, row.method, row.seed, row.k_colors, row.wall_seconds
                );
                Ok(row)
            })
            .collect()
    });
    let mut rows = outcomes.into_iter().collect::<Result<Vec<_>>>()?;
    rows.sort_by(|a, b| {
        (&a.instance, a.method, a.seed).cmp(&(&b.instance, b.method, b.seed))
    });

    write_results(&rows, out, options.format)?;
    Ok(BenchReport { rows, errors })
}
