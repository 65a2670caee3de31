use crate::error::{Error, Result};
use crate::graph::{Color, Coloring, Graph};
use crate::heuristics::{dsatur, random_coloring_with, RngSeed};

use super::{
    hill_climbing_in, iterated_local_search_in, simulated_annealing_in, tabu_search_in, Clock,
    Initializer, Method, SearchEnv, SearchOutcome, SolverParams,
};

/// Result of a palette-reduction run.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    /// Proper coloring using exactly `k` colors, `0..k`.
    pub coloring: Coloring,
    pub k: u32,
    /// DSatur's color count, where the reduction started.
    pub initial_k: u32,
    /// One entry per attempted palette, in order.
    pub trace: Vec<SearchOutcome>,
}

/// Starts from DSatur's `k` colors and repeatedly tries a proper `(k-1)`
/// coloring with the configured method, stopping at the first failure or
/// when the wall budget is spent. Returns the smallest proper coloring found.
pub fn solve_k_reduction(graph: &Graph, params: &SolverParams, seed: RngSeed) -> Result<Solution> {
    let mut env = SearchEnv::new(seed, Clock::real(), params.wall_budget_seconds);
    solve_k_reduction_in(&mut env, graph, params)
}

pub fn solve_k_reduction_in(
    env: &mut SearchEnv<'_>,
    graph: &Graph,
    params: &SolverParams,
) -> Result<Solution> {
    params.validate()?;
    if graph.is_empty() {
        return Err(Error::Params("graph has no vertices".into()));
    }
    let start = dsatur(graph);
    let initial_k = start.color_count()? as u32;
    let mut best = start.clone();
    let mut k = initial_k;
    let mut trace = Vec::new();

    // A 1-coloring is proper only on an edgeless graph, which DSatur already
    // colors with one color, so the smallest palette worth searching is 2.
    while k > 2 && !env.expired() {
        let target = k - 1;
        let init = match params.init {
            Initializer::Dsatur => project_palette(graph, &start, target),
            Initializer::Random => random_coloring_with(graph, target, &mut env.rng)?,
        };
        let outcome = run_method(env, graph, target, &init, params)?;
        let solved = outcome.conflicts == 0;
        if solved {
            if !graph.is_proper(&outcome.coloring)? {
                return Err(Error::InvariantBreach(format!(
                    "{} reported a proper {target}-coloring that has conflicts",
                    params.method
                )));
            }
            best = compact(&outcome.coloring);
        }
        trace.push(outcome);
        if !solved {
            break;
        }
        k = best.color_count()? as u32;
    }

    Ok(Solution {
        coloring: best,
        k,
        initial_k,
        trace,
    })
}

fn run_method(
    env: &mut SearchEnv<'_>,
    graph: &Graph,
    k: u32,
    init: &Coloring,
    params: &SolverParams,
) -> Result<SearchOutcome> {
    match params.method {
        Method::Hc => hill_climbing_in(env, graph, k, init, params),
        Method::Sa => simulated_annealing_in(env, graph, k, init, params),
        Method::Ts => tabu_search_in(env, graph, k, init, params),
        Method::Ils => iterated_local_search_in(env, graph, k, init, params),
    }
}

/// Moves every vertex colored `k` or higher to the color in `0..k` that
/// conflicts with the fewest neighbors (lowest index on ties), in vertex
/// order, so later vertices see earlier reassignments.
pub fn project_palette(graph: &Graph, coloring: &Coloring, k: u32) -> Coloring {
    let mut out = coloring.clone();
    let mut counts = vec![0usize; k as usize];
    for v in 0..out.len() {
        if out.get(v) < k {
            continue;
        }
        counts.iter_mut().for_each(|c| *c = 0);
        for &u in graph.neighbors(v) {
            let c = out.get(u);
            if c < k {
                counts[c as usize] += 1;
            }
        }
        let color = (0..k)
            .min_by_key(|&c| counts[c as usize])
            .expect("palette is nonempty");
        out.set(v, color);
    }
    out
}

/// Relabels colors onto `0..count`, preserving their order.
fn compact(coloring: &Coloring) -> Coloring {
    let mut present: Vec<Color> = coloring.as_slice().to_vec();
    present.sort_unstable();
    present.dedup();
    Coloring::new(
        coloring
            .as_slice()
            .iter()
            .map(|c| present.binary_search(c).expect("color is present") as Color)
            .collect(),
    )
}
