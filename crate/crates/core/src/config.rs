//! Resource limits for searches and symbolic computations.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Largest dimension for which the generic characteristic polynomial is
    /// expanded symbolically.
    pub symbolic_dim: usize,
    /// Coordinate height bound for deterministic integer point search.
    pub search_height: u32,
    /// Cap on the number of integer points visited by height-ordered search.
    pub search_points: u64,
    /// Seeded random trials after the integer points.
    pub random_trials: u64,
    pub seed: u64,
    /// Cap on vectors scanned by an exhaustive search over a finite field.
    pub exhaustive_points: u64,
    /// Cap on raw tables produced by the enumerator.
    pub enum_tables: u64,
    /// Cap on subspaces visited by minimal-non checks.
    pub subspaces: u64,
    /// Largest dimension accepted by the derivation solver over a finite field.
    pub derivation_dim_fp: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            symbolic_dim: 8,
            search_height: 5,
            search_points: 20_000,
            random_trials: 1000,
            seed: 0x5eed_1a7e,
            exhaustive_points: 1 << 20,
            enum_tables: 1 << 22,
            subspaces: 250_000,
            derivation_dim_fp: 12,
        }
    }
}

impl Budget {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}
