use serde::{Deserialize, Serialize};

use super::OmegaAlgebra;
use crate::linalg::{nullspace, Subspace};
use crate::repr::{ModuleReport, Representation};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OmegaKernel {
    pub subspace: Subspace,
    /// Basis elements whose adjoint map moves the kernel off itself.
    pub not_preserved_by: Vec<String>,
    /// `x·v = [x, v]` in the RREF basis of `subspace`, when every `ad(eᵢ)` preserves it.
    pub adjoint: Option<Representation>,
    pub report: Option<ModuleReport>,
}

/// Radical of ω with the adjoint action on it. The radical need not be
/// ad-invariant (in L2 it is span{y} while [y,z] = z), so the action is
/// only built when it is.
pub fn omega_kernel(a: &OmegaAlgebra) -> OmegaKernel {
    let subspace = nullspace(a.omega_matrix());
    let mut rho = Vec::with_capacity(a.dim());
    let mut not_preserved_by = Vec::new();
    for i in 0..a.dim() {
        match subspace.restrict_operator(&a.ad(i)).expect("square operator of matching size") {
            Some(m) => rho.push(m),
            None => not_preserved_by.push(a.basis_labels()[i].clone()),
        }
    }
    let adjoint = not_preserved_by
        .is_empty()
        .then(|| Representation::new(a.clone(), rho).expect("one matrix per basis element"));
    let report = adjoint.as_ref().map(Representation::validate);
    OmegaKernel {
        subspace,
        not_preserved_by,
        adjoint,
        report,
    }
}
