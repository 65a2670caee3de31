use rand::seq::index;

use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};
use crate::heuristics::{RngSeed, SearchRng};

use super::hill_climbing::climb;
use super::memory::{fingerprint, HomeBaseQueue};
use super::state::SearchState;
use super::{Clock, SearchEnv, SearchOutcome, SolverParams};

/// Iterated local search with time-bounded hill climbing as the inner search.
///
/// Each round climbs for `ils_inner_seconds` from the current start point. A
/// result with fewer conflicts than the home base, and not among the last
/// `ils_queue_length` home bases, becomes the new home base. The next start
/// point is a perturbation of the home base. Rounds repeat until
/// `ils_total_seconds` have passed; a round in progress at that moment runs
/// to completion.
pub fn iterated_local_search(
    graph: &Graph,
    k: u32,
    init: &Coloring,
    params: &SolverParams,
    seed: RngSeed,
) -> Result<SearchOutcome> {
    let mut env = SearchEnv::new(seed, Clock::real(), params.wall_budget_seconds);
    iterated_local_search_in(&mut env, graph, k, init, params)
}

pub fn iterated_local_search_in(
    env: &mut SearchEnv<'_>,
    graph: &Graph,
    k: u32,
    init: &Coloring,
    params: &SolverParams,
) -> Result<SearchOutcome> {
    params.validate()?;
    let started = env.elapsed_seconds();
    let evaluations_before = env.clock.evaluations();
    let stop_at = started + params.ils_total_seconds;

    let initial = SearchState::new(graph, init, k)?;
    let mut home = init.clone();
    let mut home_conflicts = initial.conflicts();
    let mut best = init.clone();
    let mut best_conflicts = home_conflicts;
    let mut homes = HomeBaseQueue::new(params.ils_queue_length);
    homes.push(fingerprint(home.as_slice()));

    let mut start = init.clone();
    while best_conflicts > 0 {
        let round_deadline = env.deadline().min(env.elapsed_seconds() + params.ils_inner_seconds);
        let outer_deadline = env.replace_deadline(round_deadline);
        let result = climb(env, graph, k, &start, None, params.hc_strict);
        env.replace_deadline(outer_deadline);
        let result = result?;

        if result.conflicts < best_conflicts {
            best_conflicts = result.conflicts;
            best = result.coloring.clone();
        }
        if best_conflicts == 0 {
            break;
        }
        let print = fingerprint(result.coloring.as_slice());
        if result.conflicts < home_conflicts && !homes.contains(print) {
            home_conflicts = result.conflicts;
            home = result.coloring;
            homes.push(print);
        }
        if env.elapsed_seconds() >= stop_at || env.expired() {
            break;
        }
        start = perturb(&home, k, params.ils_perturbation, &mut env.rng)?;
    }

    Ok(SearchOutcome {
        k,
        coloring: best,
        conflicts: best_conflicts,
        evaluations: env.clock.evaluations() - evaluations_before,
        elapsed_seconds: env.elapsed_seconds() - started,
    })
}

/// Recolors `ceil(fraction * n)` distinct vertices, chosen uniformly, each to
/// a uniform color other than its own.
pub fn perturb(coloring: &Coloring, k: u32, fraction: f64, rng: &mut SearchRng) -> Result<Coloring> {
    if k < 2 {
        return Err(Error::Palette {
            k,
            reason: "perturbation needs at least two colors",
        });
    }
    let n = coloring.len();
    let mut out = coloring.clone();
    if n == 0 {
        return Ok(out);
    }
    let count = ((fraction * n as f64).ceil() as usize).clamp(1, n);
    for v in index::sample(rng, n, count) {
        let from = out.get(v);
        let draw = rand::Rng::gen_range(rng, 0..k - 1);
        out.set(v, if draw >= from { draw + 1 } else { draw });
    }
    Ok(out)
}
