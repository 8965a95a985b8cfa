//! Modules of ω-Lie algebras: `[x,y]·v = x·(y·v) − y·(x·v) + ω(x,y)v`.

mod meataxe;
mod ops;
mod system;

use std::path::{Path, PathBuf};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{Matrix, Subspace};
use crate::omega::OmegaAlgebra;

pub use meataxe::{find_submodule, fitting_decompose, spin, Decomposition, SubmoduleSearch, Summand};
pub use ops::{
    antisymmetrizer, classify_indecomposable, cochain_defect, exterior_power, is_submodule, module_iso,
    semidirect, tensor_module, weight_decomposition, CochainDefect, ModuleClass, Weight, WeightDecomposition,
};
pub use system::{module_structure_system, variable_name, FixedAssignment, FixedEntry, FixedFile};

/// An action of an ω-Lie algebra on `Q(i)^dim`; `rho[i]` is the action of `eᵢ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Representation {
    algebra: OmegaAlgebra,
    dim: usize,
    rho: Vec<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleViolation {
    pub pair: [usize; 2],
    pub labels: [String; 2],
    /// `ρ([eᵢ,eⱼ]) − [ρᵢ,ρⱼ] − ω(eᵢ,eⱼ)·1`
    pub residual: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleReport {
    pub valid: bool,
    pub violations: Vec<ModuleViolation>,
}

impl Representation {
    /// Infers the module dimension from the first matrix.
    pub fn new(algebra: OmegaAlgebra, rho: Vec<Matrix>) -> Result<Self> {
        let dim = rho.first().map_or(0, Matrix::rows);
        Self::with_dim(algebra, dim, rho)
    }

    pub fn with_dim(algebra: OmegaAlgebra, dim: usize, rho: Vec<Matrix>) -> Result<Self> {
        if rho.len() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                context: "number of action matrices",
                expected: algebra.dim(),
                found: rho.len(),
            });
        }
        for m in &rho {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch {
                    context: "action matrix size",
                    expected: dim,
                    found: if m.rows() != dim { m.rows() } else { m.cols() },
                });
            }
        }
        Ok(Representation { algebra, dim, rho })
    }

    /// Every basis element acts by zero.
    pub fn zero(algebra: OmegaAlgebra, dim: usize) -> Self {
        let rho = vec![Matrix::zeros(dim, dim); algebra.dim()];
        Representation { algebra, dim, rho }
    }

    pub fn algebra(&self) -> &OmegaAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rho(&self) -> &[Matrix] {
        &self.rho
    }

    /// Action of `Σ uᵢeᵢ`.
    pub fn action(&self, u: &[Scalar]) -> Result<Matrix> {
        if u.len() != self.rho.len() {
            return Err(Error::DimensionMismatch {
                context: "algebra vector",
                expected: self.rho.len(),
                found: u.len(),
            });
        }
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (c, r) in u.iter().zip(&self.rho) {
            if !c.is_zero() {
                m = &m + &r.scale(c);
            }
        }
        Ok(m)
    }

    pub fn validate(&self) -> ModuleReport {
        let n = self.rho.len();
        let id = Matrix::identity(self.dim);
        let mut violations = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.action(self.algebra.bracket_basis(i, j)).expect("bracket has algebra length");
                let rhs = &self.rho[i].commutator(&self.rho[j]) + &id.scale(&self.algebra.omega_matrix()[(i, j)]);
                let residual = &lhs - &rhs;
                if !residual.is_zero() {
                    let labels = self.algebra.basis_labels();
                    violations.push(ModuleViolation {
                        pair: [i, j],
                        labels: [labels[i].clone(), labels[j].clone()],
                        residual,
                    });
                }
            }
        }
        ModuleReport {
            valid: violations.is_empty(),
            violations,
        }
    }

    pub(crate) fn require_valid(&self, what: &str) -> Result<()> {
        let report = self.validate();
        if let Some(v) = report.violations.first() {
            return Err(Error::InvalidModule(format!(
                "{what}: module axiom fails for ({}, {})",
                v.labels[0], v.labels[1]
            )));
        }
        Ok(())
    }

    /// The submodule `s` in its RREF basis, or `None` if `s` is not invariant.
    pub fn restrict(&self, s: &Subspace) -> Result<Option<Representation>> {
        let mut rho = Vec::with_capacity(self.rho.len());
        for m in &self.rho {
            match s.restrict_operator(m)? {
                Some(r) => rho.push(r),
                None => return Ok(None),
            }
        }
        Ok(Some(Representation {
            algebra: self.algebra.clone(),
            dim: s.dim(),
            rho,
        }))
    }

    /// `ρ'ᵢ = s·ρᵢ·s⁻¹`.
    pub fn conjugate(&self, s: &Matrix) -> Result<Representation> {
        let inv = s
            .inverse()
            .ok_or_else(|| Error::InvalidModule("conjugating matrix is singular".into()))?;
        let rho = self.rho.iter().map(|m| &(s * m) * &inv).collect();
        Representation::with_dim(self.algebra.clone(), self.dim, rho)
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        if self.algebra != other.algebra {
            return Err(Error::InvalidModule("direct sum of modules over different algebras".into()));
        }
        let d = self.dim + other.dim;
        let rho = self
            .rho
            .iter()
            .zip(&other.rho)
            .map(|(a, b)| {
                let mut m = Matrix::zeros(d, d);
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        m[(i, j)] = a[(i, j)].clone();
                    }
                }
                for i in 0..other.dim {
                    for j in 0..other.dim {
                        m[(self.dim + i, self.dim + j)] = b[(i, j)].clone();
                    }
                }
                m
            })
            .collect();
        Representation::with_dim(self.algebra.clone(), d, rho)
    }

    pub(crate) fn same_algebra(&self, other: &Representation) -> Result<()> {
        if self.algebra != other.algebra {
            return Err(Error::InvalidModule("modules over different algebras".into()));
        }
        Ok(())
    }
}

/// Inline algebra or a path to an algebra JSON file.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraSource {
    Inline(OmegaAlgebra),
    Path(PathBuf),
}

/// The JSON form of a representation: `{"algebra", "dim", "rho"}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RepresentationFile {
    pub algebra: AlgebraSource,
    pub dim: usize,
    pub rho: Vec<Matrix>,
}

impl RepresentationFile {
    /// Relative algebra paths are taken relative to `base`.
    pub fn resolve(self, base: Option<&Path>) -> Result<Representation> {
        let algebra = match self.algebra {
            AlgebraSource::Inline(a) => a,
            AlgebraSource::Path(p) => {
                let full = match base {
                    Some(b) if p.is_relative() => b.join(&p),
                    _ => p,
                };
                let text = std::fs::read_to_string(&full)
                    .map_err(|e| Error::Format(format!("{}: {e}", full.display())))?;
                serde_json::from_str(&text).map_err(|e| Error::Format(format!("{}: {e}", full.display())))?
            }
        };
        Representation::with_dim(algebra, self.dim, self.rho)
    }
}

impl<'de> Deserialize<'de> for Representation {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let file = RepresentationFile::deserialize(deserializer)?;
        if let AlgebraSource::Path(p) = &file.algebra {
            return Err(serde::de::Error::custom(format!(
                "algebra given by path {}; resolve it with RepresentationFile",
                p.display()
            )));
        }
        file.resolve(None).map_err(serde::de::Error::custom)
    }
}
