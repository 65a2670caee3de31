use crate::error::Result;
use crate::graph::{Coloring, Graph};
use crate::heuristics::RngSeed;

use super::memory::TabuList;
use super::state::{Move, SearchState};
use super::{Clock, SearchEnv, SearchOutcome, SolverParams};

/// Tabu search over whole-coloring fingerprints.
///
/// Each of the `ts_iterations` iterations samples `ts_num_tweaks` tweaks of
/// the current coloring, drops those whose result is in the tabu list, and
/// moves to the best remaining one (earliest on ties) even if it is worse.
/// When every sample is tabu the iteration makes no move.
pub fn tabu_search(
    graph: &Graph,
    k: u32,
    init: &Coloring,
    params: &SolverParams,
    seed: RngSeed,
) -> Result<SearchOutcome> {
    let mut env = SearchEnv::new(seed, Clock::real(), params.wall_budget_seconds);
    tabu_search_in(&mut env, graph, k, init, params)
}

pub fn tabu_search_in(
    env: &mut SearchEnv<'_>,
    graph: &Graph,
    k: u32,
    init: &Coloring,
    params: &SolverParams,
) -> Result<SearchOutcome> {
    params.validate()?;
    let started = env.elapsed_seconds();
    let evaluations_before = env.clock.evaluations();
    let mut state = SearchState::new(graph, init, k)?;
    env.clock.count_evaluation();
    env.observe(k, 0, state.conflicts());
    let mut best = state.coloring();
    let mut best_conflicts = state.conflicts();

    let mut tabu = TabuList::new(params.ts_tabu_length);
    tabu.push(state.fingerprint());

    let mut iteration = 0u64;
    while best_conflicts > 0 && iteration < params.ts_iterations && !env.expired() {
        iteration += 1;
        let mut chosen: Option<(Move, isize, u64)> = None;
        for _ in 0..params.ts_num_tweaks {
            let mv = state.propose(&mut env.rng);
            let print = state.fingerprint_after(mv);
            if tabu.contains(print) {
                continue;
            }
            let delta = state.delta(graph, mv);
            env.clock.count_evaluation();
            if chosen.is_none_or(|(_, best_delta, _)| delta < best_delta) {
                chosen = Some((mv, delta, print));
            }
        }
        let Some((mv, _, print)) = chosen else { continue };
        state.apply(graph, mv);
        tabu.push(print);
        env.observe(k, iteration, state.conflicts());
        if state.conflicts() < best_conflicts {
            best_conflicts = state.conflicts();
            best.as_mut_slice().copy_from_slice(state.colors());
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::search::AcceptEvent;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn triangle_from_monochrome_with_defaults() {
        // Every K3 state in 0..3 reaches a proper coloring in at most two
        // recolorings, and the reference settings allow ten moves.
        let g = generate::complete(3);
        for seed in 0..50 {
            let out = tabu_search(&g, 3, &Coloring::uniform(3, 0), &SolverParams::default(), RngSeed(seed)).unwrap();
            assert_eq!(out.conflicts, 0, "seed {seed}");
        }
    }

    #[test]
    fn exhausted_neighborhood_stops_moving() {
        // K3 has no proper 2-coloring and only 8 colorings in 0..2. A tabu
        // list of 20 remembers all of them, so at most 7 moves can ever be
        // made; every later iteration finds only tabu candidates and stays put.
        let g = generate::complete(3);
        let params = SolverParams {
            ts_iterations: 100,
            ts_tabu_length: 20,
            ..Default::default()
        };
        let mut moves = Vec::new();
        let mut observer = |e: &AcceptEvent| {
            if e.iteration > 0 {
                moves.push(e.iteration)
            }
        };
        let mut env = SearchEnv::new(RngSeed(3), Clock::virtual_time(), 1e9).with_observer(&mut observer);
        let out = tabu_search_in(&mut env, &g, 2, &Coloring::uniform(3, 0), &params).unwrap();
        assert_eq!(out.conflicts, 1);
        assert!(!moves.is_empty() && moves.len() <= 7, "{moves:?}");
        assert!(moves.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn best_ever_bounded_and_deterministic() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let g = generate::gnp(50, 0.5, &mut rng);
        let init = Coloring::uniform(50, 0);
        let params = SolverParams {
            ts_iterations: 200,
            ..Default::default()
        };
        let mut events = Vec::new();
        let mut observer = |e: &AcceptEvent| events.push(*e);
        let mut env = SearchEnv::new(RngSeed(6), Clock::virtual_time(), 1e9).with_observer(&mut observer);
        let out = tabu_search_in(&mut env, &g, 8, &init, &params).unwrap();
        assert!(events.iter().all(|e| out.conflicts <= e.conflicts));
        let again = tabu_search(&g, 8, &init, &params, RngSeed(6)).unwrap();
        assert_eq!((out.coloring, out.evaluations), (again.coloring, again.evaluations));
    }
}
