//! Fixed-palette conflict minimization: hill climbing, simulated annealing,
//! tabu search, iterated local search, and the palette-reduction driver.
//!
//! Every search works on a palette `0..k` and minimizes the number of
//! monochromatic edges; a result with zero conflicts is a proper `k`-coloring.
//! [`solve_k_reduction`] wraps a search in an outer loop that lowers `k` one
//! step at a time, starting from DSatur.

mod annealing;
mod clock;
mod cooling;
mod driver;
mod hill_climbing;
mod ils;
mod memory;
mod state;
mod tabu;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Coloring;
use crate::heuristics::{RngSeed, SearchRng};

pub use annealing::{simulated_annealing, simulated_annealing_in, simulated_annealing_with};
pub use clock::{Clock, ClockMode, VIRTUAL_CLOCK_ENV, VIRTUAL_SECONDS_PER_EVALUATION};
pub use cooling::{acceptance_probability, AcceptanceRule, CoolingSchedule, Geometric, Linear, Metropolis, NeverWorse};
pub use driver::{project_palette, solve_k_reduction, solve_k_reduction_in, Solution};
pub use hill_climbing::{hill_climbing, hill_climbing_in};
pub use ils::{iterated_local_search, iterated_local_search_in, perturb};
pub use memory::{fingerprint, BoundedFifo, HomeBaseQueue, TabuList};
pub use state::tweak;
pub use tabu::{tabu_search, tabu_search_in};

/// Serialized as its upper-case label; parsed case-insensitively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Method {
    Hc,
    Sa,
    Ts,
    Ils,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Hc, Method::Sa, Method::Ts, Method::Ils];

    pub fn label(self) -> &'static str {
        match self {
            Method::Hc => "HC",
            Method::Sa => "SA",
            Method::Ts => "TS",
            Method::Ils => "ILS",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl From<Method> for String {
    fn from(method: Method) -> Self {
        method.label().to_string()
    }
}

impl TryFrom<String> for Method {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "hc" => Ok(Method::Hc),
            "sa" => Ok(Method::Sa),
            "ts" => Ok(Method::Ts),
            "ils" => Ok(Method::Ils),
            _ => Err(Error::Params(format!("unknown method {s:?}"))),
        }
    }
}

/// Temperature schedule for simulated annealing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Cooling {
    /// `t_i = (iterations - i) * decrement`, reaching zero at the last step.
    #[default]
    Linear,
    /// `t_i = iterations * decrement * (1 - decrement)^i`.
    Geometric,
}

/// Starting coloring at each palette size tried by the driver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Initializer {
    /// The DSatur coloring with out-of-palette vertices reassigned.
    #[default]
    Dsatur,
    /// Uniform random colors from the palette.
    Random,
}

/// Parameters for all four methods; only the fields of `method` are used.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SolverParams {
    pub method: Method,
    pub hc_iterations: u64,
    /// Accept only strictly improving moves in hill climbing.
    pub hc_strict: bool,
    pub sa_iterations: u64,
    pub sa_decrement: f64,
    pub sa_cooling: Cooling,
    pub ts_iterations: u64,
    pub ts_tabu_length: usize,
    pub ts_num_tweaks: usize,
    pub ils_inner_seconds: f64,
    pub ils_total_seconds: f64,
    pub ils_queue_length: usize,
    /// Fraction of vertices recolored by each perturbation.
    pub ils_perturbation: f64,
    pub init: Initializer,
    pub wall_budget_seconds: f64,
}

impl Default for SolverParams {
    fn default() -> Self {
        Self {
            method: Method::Hc,
            hc_iterations: 5000,
            hc_strict: false,
            sa_iterations: 10_000,
            sa_decrement: 0.005,
            sa_cooling: Cooling::Linear,
            ts_iterations: 10,
            ts_tabu_length: 20,
            ts_num_tweaks: 10,
            ils_inner_seconds: 10.0,
            ils_total_seconds: 100.0,
            ils_queue_length: 70,
            ils_perturbation: 0.05,
            init: Initializer::Dsatur,
            wall_budget_seconds: 600.0,
        }
    }
}

impl SolverParams {
    pub fn for_method(method: Method) -> Self {
        Self {
            method,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let counts = [
            ("hc_iterations", self.hc_iterations),
            ("sa_iterations", self.sa_iterations),
            ("ts_iterations", self.ts_iterations),
            ("ts_tabu_length", self.ts_tabu_length as u64),
            ("ts_num_tweaks", self.ts_num_tweaks as u64),
            ("ils_queue_length", self.ils_queue_length as u64),
        ];
        for (name, value) in counts {
            if value == 0 {
                return Err(Error::Params(format!("{name} must be at least 1")));
            }
        }
        let positives = [
            ("sa_decrement", self.sa_decrement),
            ("ils_inner_seconds", self.ils_inner_seconds),
            ("ils_total_seconds", self.ils_total_seconds),
            ("wall_budget_seconds", self.wall_budget_seconds),
        ];
        for (name, value) in positives {
            if value.is_nan() || value <= 0.0 {
                return Err(Error::Params(format!("{name} must be positive, got {value}")));
            }
        }
        if self.ils_inner_seconds > self.ils_total_seconds {
            return Err(Error::Params(
                "ils_inner_seconds must not exceed ils_total_seconds".into(),
            ));
        }
        if !(self.ils_perturbation > 0.0 && self.ils_perturbation <= 1.0) {
            return Err(Error::Params("ils_perturbation must lie in (0, 1]".into()));
        }
        if self.sa_cooling == Cooling::Geometric && self.sa_decrement >= 1.0 {
            return Err(Error::Params(
                "geometric cooling needs sa_decrement below 1".into(),
            ));
        }
        Ok(())
    }
}

/// Best coloring found by one fixed-palette search.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchOutcome {
    /// Palette size the search worked with.
    pub k: u32,
    pub coloring: Coloring,
    pub conflicts: usize,
    /// Objective evaluations performed, one per candidate scored.
    pub evaluations: u64,
    pub elapsed_seconds: f64,
}

/// An accepted search state, reported to a [`SearchObserver`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AcceptEvent {
    pub k: u32,
    pub iteration: u64,
    pub conflicts: usize,
    pub elapsed_seconds: f64,
}

pub trait SearchObserver {
    fn on_accept(&mut self, event: &AcceptEvent);
}

impl<F: FnMut(&AcceptEvent)> SearchObserver for F {
    fn on_accept(&mut self, event: &AcceptEvent) {
        self(event)
    }
}

/// Per-run resources: the random stream, the clock, the deadline, and an
/// optional observer. One environment drives one single-threaded run.
pub struct SearchEnv<'o> {
    pub rng: SearchRng,
    pub clock: Clock,
    deadline: f64,
    observer: Option<&'o mut dyn SearchObserver>,
}

impl<'o> SearchEnv<'o> {
    /// Environment whose deadline is `budget_seconds` from now on `clock`.
    pub fn new(seed: RngSeed, clock: Clock, budget_seconds: f64) -> Self {
        let deadline = clock.elapsed_seconds() + budget_seconds;
        Self {
            rng: seed.rng(),
            clock,
            deadline,
            observer: None,
        }
    }

    pub fn with_observer(mut self, observer: &'o mut dyn SearchObserver) -> Self {
        self.observer = Some(observer);
        self
    }

    pub fn deadline(&self) -> f64 {
        self.deadline
    }

    pub fn elapsed_seconds(&self) -> f64 {
        self.clock.elapsed_seconds()
    }

    pub fn expired(&self) -> bool {
        self.clock.elapsed_seconds() >= self.deadline
    }

    pub(crate) fn replace_deadline(&mut self, deadline: f64) -> f64 {
        std::mem::replace(&mut self.deadline, deadline)
    }

    pub(crate) fn observe(&mut self, k: u32, iteration: u64, conflicts: usize) {
        if let Some(observer) = self.observer.as_deref_mut() {
            let event = AcceptEvent {
                k,
                iteration,
                conflicts,
                elapsed_seconds: self.clock.elapsed_seconds(),
            };
            observer.on_accept(&event);
        }
    }
}
