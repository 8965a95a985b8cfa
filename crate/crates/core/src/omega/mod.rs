//! ω-Lie algebras: structure constants, the ω-Jacobi check, solubility,
//! ideals and degree, multiplicative forms and the ω-kernel.

mod algebra;
mod form;
mod ideals;
mod kernel;
mod solubility;

pub use algebra::{JacobiViolation, OmegaAlgebra, ValidationReport};
pub use form::{is_multiplicative, multiplicative_form, AffineFamily, LinearForm};
pub use ideals::{
    degree, degree_with_budget, ideals_of_dim, ideals_of_dim_with_budget, joint_eigenspaces, Completeness,
    IdealFamily, IdealReport, IdealSearch, Witness,
};
pub use kernel::{omega_kernel, OmegaKernel};
pub use solubility::{is_soluble, SolubilityReport};
