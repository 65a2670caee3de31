use std::time::Instant;

/// Environment variable that switches runs to the evaluation-count clock.
pub const VIRTUAL_CLOCK_ENV: &str = "CHROMA_VIRTUAL_CLOCK";

/// Virtual time charged per objective evaluation.
pub const VIRTUAL_SECONDS_PER_EVALUATION: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClockMode {
    /// Monotonic wall time.
    Real,
    /// Time advances only with evaluations, so runs are reproducible.
    Virtual,
}

/// Run clock that also counts objective evaluations.
#[derive(Debug, Clone)]
pub struct Clock {
    mode: ClockMode,
    start: Instant,
    evaluations: u64,
}

impl Clock {
    pub fn new(mode: ClockMode) -> Self {
        Self {
            mode,
            start: Instant::now(),
            evaluations: 0,
        }
    }

    pub fn real() -> Self {
        Self::new(ClockMode::Real)
    }

    pub fn virtual_time() -> Self {
        Self::new(ClockMode::Virtual)
    }

    /// Virtual when `CHROMA_VIRTUAL_CLOCK=1`, real otherwise.
    pub fn from_env() -> Self {
        Self::new(Self::mode_from_env())
    }

    pub fn mode_from_env() -> ClockMode {
        match std::env::var(VIRTUAL_CLOCK_ENV) {
            Ok(v) if v.trim() == "1" => ClockMode::Virtual,
            _ => ClockMode::Real,
        }
    }

    pub fn mode(&self) -> ClockMode {
        self.mode
    }

    pub fn evaluations(&self) -> u64 {
        self.evaluations
    }

    pub fn elapsed_seconds(&self) -> f64 {
        match self.mode {
            ClockMode::Real => self.start.elapsed().as_secs_f64(),
            ClockMode::Virtual => self.evaluations as f64 * VIRTUAL_SECONDS_PER_EVALUATION,
        }
    }

    pub(crate) fn count_evaluation(&mut self) {
        self.evaluations += 1;
    }
}
