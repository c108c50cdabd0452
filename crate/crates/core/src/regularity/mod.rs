//! Characteristic coefficients of `ad`, rank, regular elements, Fitting
//! decompositions and the decision procedures built on them.

mod decide;
mod fitting;
mod generic;
mod points;

pub use decide::{is_definite, Mode};
pub use fitting::FittingDecomposition;
pub use generic::{ad_char_coeffs, zero_multiplicity, GenericCharPoly, RankMethod, RankReport};
pub use points::SearchPoints;
