//! Lie algebras by structure constants, and the classical constructions on them.

mod algebra;
mod assoc;
mod cohomology;
mod constructions;
mod forms;
mod simple;
mod subspaces;

pub use algebra::{labels, numbered, JacobiViolation, LieAlgebra};
pub use assoc::AssocAlgebra;
pub use cohomology::{Cocycle, SecondCohomology};
pub use constructions::{Centroid, Derivations};
pub use forms::{BilinearForm, StructureReport};
pub use simple::index_vector;
