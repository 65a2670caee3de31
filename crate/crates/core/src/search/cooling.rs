//! Annealing temperature schedules and acceptance rules, generic over the
//! floating-point type.

use num_traits::Float;
use rand::Rng;

use crate::heuristics::SearchRng;

/// Temperature at annealing step `step` (1-based).
pub trait CoolingSchedule<F: Float> {
    fn temperature(&self, step: u64) -> F;
}

/// `t_step = (steps - step) * decrement`: starts at `steps * decrement` and
/// reaches exactly zero at the last step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Linear<F> {
    pub decrement: F,
    pub steps: u64,
}

impl<F: Float> Linear<F> {
    pub fn new(decrement: F, steps: u64) -> Self {
        Self { decrement, steps }
    }

    pub fn initial(&self) -> F {
        self.temperature(0)
    }
}

impl<F: Float> CoolingSchedule<F> for Linear<F> {
    fn temperature(&self, step: u64) -> F {
        let remaining = self.steps.saturating_sub(step);
        F::from(remaining).unwrap_or_else(F::zero) * self.decrement
    }
}

/// `t_step = initial * factor^step`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Geometric<F> {
    pub initial: F,
    pub factor: F,
}

impl<F: Float> CoolingSchedule<F> for Geometric<F> {
    fn temperature(&self, step: u64) -> F {
        let exponent = F::from(step).unwrap_or_else(F::infinity);
        self.initial * self.factor.powf(exponent)
    }
}

/// Metropolis acceptance probability for a change of `delta` at temperature
/// `temperature`: 1 for non-worsening moves, `exp(-delta / t)` otherwise, and
/// 0 for worsening moves once the temperature is no longer positive.
pub fn acceptance_probability<F: Float>(delta: F, temperature: F) -> F {
    if delta <= F::zero() {
        F::one()
    } else if temperature <= F::zero() {
        F::zero()
    } else {
        (-delta / temperature).exp()
    }
}

/// Decides whether a worsening move (`delta > 0`) is taken.
pub trait AcceptanceRule<F: Float> {
    fn accept_worse(&self, delta: usize, temperature: F, rng: &mut SearchRng) -> bool;
}

/// Accept with probability `exp(-delta / t)`. Draws one uniform only when the
/// temperature is positive.
#[derive(Debug, Clone, Copy, Default)]
pub struct Metropolis;

impl<F: Float> AcceptanceRule<F> for Metropolis {
    fn accept_worse(&self, delta: usize, temperature: F, rng: &mut SearchRng) -> bool {
        if temperature <= F::zero() {
            return false;
        }
        let delta = F::from(delta).unwrap_or_else(F::infinity);
        let p = acceptance_probability(delta, temperature);
        let draw = F::from(rng.gen::<f64>()).unwrap_or_else(F::one);
        draw < p
    }
}

/// Never accepts a worsening move and never touches the random stream.
#[derive(Debug, Clone, Copy, Default)]
pub struct NeverWorse;

impl<F: Float> AcceptanceRule<F> for NeverWorse {
    fn accept_worse(&self, _: usize, _: F, _: &mut SearchRng) -> bool {
        false
    }
}
