use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::OmegaAlgebra;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{solve_affine, Matrix};

/// `λ(v) = Σ coeffs[i]·vᵢ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LinearForm {
    coeffs: Vec<Scalar>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        LinearForm { coeffs }
    }

    pub fn zero(n: usize) -> Self {
        LinearForm::new(vec![Scalar::zero(); n])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        LinearForm::new(coeffs.iter().map(|&x| Scalar::from_int(x)).collect())
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn eval(&self, v: &[Scalar]) -> Result<Scalar> {
        if v.len() != self.len() {
            return Err(Error::DimensionMismatch {
                context: "linear form argument",
                expected: self.len(),
                found: v.len(),
            });
        }
        Ok(self.coeffs.iter().zip(v).map(|(a, b)| a * b).sum())
    }

    /// `λ ∘ m`, i.e. the row vector `λ·m`.
    pub fn compose(&self, m: &Matrix) -> LinearForm {
        LinearForm::new(m.vec_mul(&self.coeffs))
    }
}

/// `particular + span(homogeneous)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineFamily {
    pub particular: LinearForm,
    pub homogeneous: Vec<LinearForm>,
}

impl AffineFamily {
    pub fn contains(&self, lam: &LinearForm) -> bool {
        let diff: Vec<Scalar> = lam
            .coeffs()
            .iter()
            .zip(self.particular.coeffs())
            .map(|(a, b)| a - b)
            .collect();
        let n = diff.len();
        let vs: Vec<Vec<Scalar>> = self.homogeneous.iter().map(|h| h.coeffs().to_vec()).collect();
        crate::linalg::Subspace::span(n, &vs)
            .and_then(|s| s.contains_vector(&diff))
            .unwrap_or(false)
    }
}

/// All `λ` with `λ([eᵢ, eⱼ]) = ω(eᵢ, eⱼ)` for `i < j`, or `None`.
pub fn multiplicative_form(a: &OmegaAlgebra) -> Option<AffineFamily> {
    let n = a.dim();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            rows.extend(a.bracket_basis(i, j).iter().cloned());
            rhs.push(a.omega_matrix()[(i, j)].clone());
        }
    }
    let m = Matrix::new(rhs.len(), n, rows);
    let (x, kernel) = solve_affine(&m, &rhs)?;
    Some(AffineFamily {
        particular: LinearForm::new(x),
        homogeneous: kernel.basis_vectors().into_iter().map(LinearForm::new).collect(),
    })
}

/// Checks `λ([eᵢ, eⱼ]) = ω(eᵢ, eⱼ)` on all basis pairs.
pub fn is_multiplicative(a: &OmegaAlgebra, lam: &LinearForm) -> Result<bool> {
    let n = a.dim();
    if lam.len() != n {
        return Err(Error::DimensionMismatch {
            context: "multiplicative form",
            expected: n,
            found: lam.len(),
        });
    }
    for i in 0..n {
        for j in i + 1..n {
            if lam.eval(a.bracket_basis(i, j))? != a.omega_matrix()[(i, j)] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
