//! Graph vertex coloring with single-state metaheuristics.
//!
//! The crate provides an immutable [`Graph`] and a dense [`Coloring`], DIMACS
//! `.col` parsing, DSatur and random constructive colorings, an exact
//! backtracking oracle for small graphs, and four local searches (hill
//! climbing, simulated annealing, tabu search, iterated local search) that
//! minimize conflicts at a fixed palette size. [`solve_k_reduction`] drives
//! any of them downward from the DSatur palette. The [`bench`] module runs
//! seeded experiment grids and reports color counts against best-known values.
//!
//! Annealing schedules and acceptance rules are generic over
//! [`num_traits::Float`]; the aliases below fix the scalar type.

pub mod bench;
pub mod dimacs;
pub mod error;
pub mod generate;
pub mod graph;
pub mod heuristics;
pub mod results;
pub mod search;

pub use bench::{compare_report, diff_percent, run_benchmark, Manifest, RunResult};
pub use dimacs::{load_instance, parse_dimacs, InstanceRecord, ReferenceTable};
pub use error::{Error, Result};
pub use graph::{Color, Coloring, Graph};
pub use heuristics::{chromatic_number_exact, dsatur, random_coloring, RngSeed};
pub use results::{write_results, ResultFormat};
pub use search::{
    hill_climbing, iterated_local_search, simulated_annealing, solve_k_reduction, tabu_search, tweak,
    Method, SearchOutcome, Solution, SolverParams,
};

/// Linear cooling in double precision, the schedule used by default.
pub type LinearCooling = search::Linear<f64>;
pub type LinearCoolingF32 = search::Linear<f32>;
pub type GeometricCooling = search::Geometric<f64>;
pub type GeometricCoolingF32 = search::Geometric<f32>;
