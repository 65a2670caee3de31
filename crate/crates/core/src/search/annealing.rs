use num_traits::Float;

use crate::error::Result;
use crate::graph::{Coloring, Graph};
use crate::heuristics::RngSeed;

use super::cooling::{AcceptanceRule, CoolingSchedule, Geometric, Linear, Metropolis};
use super::state::SearchState;
use super::{Clock, Cooling, SearchEnv, SearchOutcome, SolverParams};

/// Simulated annealing at palette `k` for `sa_iterations` tweaks, cooling by
/// `sa_decrement` per step under the configured schedule.
pub fn simulated_annealing(
    graph: &Graph,
    k: u32,
    init: &Coloring,
    params: &SolverParams,
    seed: RngSeed,
) -> Result<SearchOutcome> {
    let mut env = SearchEnv::new(seed, Clock::real(), params.wall_budget_seconds);
    simulated_annealing_in(&mut env, graph, k, init, params)
}

pub fn simulated_annealing_in(
    env: &mut SearchEnv<'_>,
    graph: &Graph,
    k: u32,
    init: &Coloring,
    params: &SolverParams,
) -> Result<SearchOutcome> {
    params.validate()?;
    let steps = params.sa_iterations;
    match params.sa_cooling {
        Cooling::Linear => {
            let schedule = Linear::new(params.sa_decrement, steps);
            simulated_annealing_with(env, graph, k, init, steps, &schedule, &Metropolis)
        }
        Cooling::Geometric => {
            let schedule = Geometric {
                initial: steps as f64 * params.sa_decrement,
                factor: 1.0 - params.sa_decrement,
            };
            simulated_annealing_with(env, graph, k, init, steps, &schedule, &Metropolis)
        }
    }
}

/// Annealing loop with an explicit schedule and acceptance rule.
///
/// Step `i` (1-based) proposes a tweak; non-worsening tweaks are always
/// taken, worsening ones only if `acceptance` agrees at `schedule(i)`. The
/// returned coloring is the best seen, which need not be the final state.
pub fn simulated_annealing_with<F, S, A>(
    env: &mut SearchEnv<'_>,
    graph: &Graph,
    k: u32,
    init: &Coloring,
    iterations: u64,
    schedule: &S,
    acceptance: &A,
) -> Result<SearchOutcome>
where
    F: Float,
    S: CoolingSchedule<F>,
    A: AcceptanceRule<F>,
{
    let started = env.elapsed_seconds();
    let evaluations_before = env.clock.evaluations();
    let mut state = SearchState::new(graph, init, k)?;
    env.clock.count_evaluation();
    env.observe(k, 0, state.conflicts());
    let mut best = state.coloring();
    let mut best_conflicts = state.conflicts();

    let mut step = 0u64;
    while best_conflicts > 0 && step < iterations && !env.expired() {
        step += 1;
        let mv = state.propose(&mut env.rng);
        let delta = state.delta(graph, mv);
        env.clock.count_evaluation();
        let accept = delta <= 0
            || acceptance.accept_worse(delta as usize, schedule.temperature(step), &mut env.rng);
        if accept {
            state.apply(graph, mv);
            env.observe(k, step, state.conflicts());
            if state.conflicts() < best_conflicts {
                best_conflicts = state.conflicts();
                best.as_mut_slice().copy_from_slice(state.colors());
            }
        }
    }

    Ok(SearchOutcome {
        k,
        coloring: best,
        conflicts: best_conflicts,
        evaluations: env.clock.evaluations() - evaluations_before,
        elapsed_seconds: env.elapsed_seconds() - started,
    })
}
