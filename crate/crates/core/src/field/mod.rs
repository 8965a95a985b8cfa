//! Exact arithmetic over the Gaussian rationals Q(i).

mod poly;
mod roots;
mod scalar;

pub use poly::UniPoly;
pub use roots::{gaussian_roots, RootSplit};
pub use scalar::{parse_scalar, Scalar};
