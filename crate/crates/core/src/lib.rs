//! Exact computations with finite-dimensional Lie algebras over the rationals
//! and prime fields.

pub mod catalog;
pub mod commutator;
pub mod config;
pub mod error;
pub mod field;
pub mod format;
pub mod lie;
pub mod linalg;
pub mod mpoly;
pub mod poly;
pub mod regularity;
pub mod verdict;

pub use config::Budget;
pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use lie::{AssocAlgebra, LieAlgebra};
pub use verdict::{CertificateKind, Evidence, Status, Verdict, Witness};

/// Deterministic generator used by every seeded search.
pub fn rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}

/// Entries uniform in `[-bound, bound]`, reduced into the field.
pub fn random_vector(field: Field, n: usize, bound: i64, rng: &mut rand_chacha::ChaCha8Rng) -> Vec<Scalar> {
    use rand::Rng;
    (0..n).map(|_| field.from_i64(rng.gen_range(-bound..=bound))).collect()
}
