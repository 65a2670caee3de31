use crate::error::Result;
use crate::graph::{Coloring, Graph};
use crate::heuristics::RngSeed;

use super::state::SearchState;
use super::{Clock, SearchEnv, SearchOutcome, SolverParams};

/// Hill climbing at palette `k` for `hc_iterations` tweaks.
///
/// A tweak is accepted when it does not increase the conflict count (or, with
/// `hc_strict`, when it decreases it). Stops early on a proper coloring or
/// when the wall budget runs out.
pub fn hill_climbing(
    graph: &Graph,
    k: u32,
    init: &Coloring,
    params: &SolverParams,
    seed: RngSeed,
) -> Result<SearchOutcome> {
    let mut env = SearchEnv::new(seed, Clock::real(), params.wall_budget_seconds);
    hill_climbing_in(&mut env, graph, k, init, params)
}

pub fn hill_climbing_in(
    env: &mut SearchEnv<'_>,
    graph: &Graph,
    k: u32,
    init: &Coloring,
    params: &SolverParams,
) -> Result<SearchOutcome> {
    params.validate()?;
    climb(env, graph, k, init, Some(params.hc_iterations), params.hc_strict)
}

/// With `iterations = None` the climb is bounded by the environment deadline
/// alone.
pub(crate) fn climb(
    env: &mut SearchEnv<'_>,
    graph: &Graph,
    k: u32,
    init: &Coloring,
    iterations: Option<u64>,
    strict: bool,
) -> Result<SearchOutcome> {
    let started = env.elapsed_seconds();
    let evaluations_before = env.clock.evaluations();
    let mut state = SearchState::new(graph, init, k)?;
    env.clock.count_evaluation();
    env.observe(k, 0, state.conflicts());

    let mut iteration = 0u64;
    while state.conflicts() > 0
        && iterations.is_none_or(|limit| iteration < limit)
        && !env.expired()
    {
        iteration += 1;
        let mv = state.propose(&mut env.rng);
        let delta = state.delta(graph, mv);
        env.clock.count_evaluation();
        let accept = if strict { delta < 0 } else { delta <= 0 };
        if accept {
            state.apply(graph, mv);
            env.observe(k, iteration, state.conflicts());
        }
    }

    Ok(SearchOutcome {
        k,
        coloring: state.coloring(),
        conflicts: state.conflicts(),
        evaluations: env.clock.evaluations() - evaluations_before,
        elapsed_seconds: env.elapsed_seconds() - started,
    })
}
