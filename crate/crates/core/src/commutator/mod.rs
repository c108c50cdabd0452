//! Orthogonal complements, Fitting orthogonality, commutator solvers, and
//! minimal-non-P checks over finite fields.

mod minimal;
mod solver;

pub use minimal::{gaussian_binomial, is_minimal_non, recheck_minimal_witness, Property};
pub use solver::{
    check_fitting_orthogonality, commutator_search, orthogonal_complement, quaternion_commutator, rank1_commutator,
    CommutatorWitness, Provenance, QuaternionCommutator,
};
