//! Constructive colorings and the exact chromatic-number oracle.

mod dsatur;
mod exact;
mod random;

pub use dsatur::dsatur;
pub use exact::{chromatic_number_exact, ExactColoring, DEFAULT_EXACT_LIMIT};
pub use random::random_coloring;
pub(crate) use random::random_coloring_with;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Generator behind every stochastic operation in the crate.
pub type SearchRng = ChaCha8Rng;

/// Seed for a reproducible random stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RngSeed(pub u64);

impl RngSeed {
    pub fn rng(self) -> SearchRng {
        ChaCha8Rng::seed_from_u64(self.0)
    }
}

impl From<u64> for RngSeed {
    fn from(seed: u64) -> Self {
        Self(seed)
    }
}
