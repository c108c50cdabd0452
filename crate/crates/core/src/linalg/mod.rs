//! Exact dense linear algebra over a single [`Field`](crate::field::Field).

mod jordan;
mod matrix;
mod quadratic;
mod subspace;
mod system;

pub use jordan::jordan_chevalley;
pub use matrix::{berkowitz, char_poly, min_poly, Matrix, RingOps};
pub use quadratic::{diagonalize_quadratic, inertia};
pub use subspace::{image, kernel, solve, stable_image, stable_kernel, unit, Subspace};
pub use system::{Coordinatizer, LinearSystem};
