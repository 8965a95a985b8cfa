//! Exact computations with finite-dimensional ω-Lie algebras given by
//! structure constants over the Gaussian rationals.

pub mod catalog;
pub mod derive;
pub mod error;
pub mod extend;
pub mod field;
pub mod linalg;
pub mod omega;
pub mod polysolve;
pub mod repr;

pub use derive::TailedDerivation;
pub use error::{Error, Result};
pub use field::{parse_scalar, Scalar, UniPoly};
pub use linalg::{Matrix, Partition, Subspace};
pub use omega::{LinearForm, OmegaAlgebra};
pub use polysolve::{MultiPoly, PolySystem};
pub use repr::Representation;
