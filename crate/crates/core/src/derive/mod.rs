//! Derivations and tailed derivations as nullspaces of linear constraints.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{nullspace, Matrix, Subspace};
use crate::omega::{LinearForm, OmegaAlgebra};

/// A pair `(D, d)` with
/// `D[y,z] = [Dy,z] + [y,Dz] + d(z)·y − d(y)·z`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TailedDerivation {
    #[serde(rename = "D")]
    pub map: Matrix,
    #[serde(rename = "d")]
    pub tail: LinearForm,
}

impl TailedDerivation {
    pub fn new(map: Matrix, tail: LinearForm) -> Result<Self> {
        if !map.is_square() || map.rows() != tail.len() {
            return Err(Error::DimensionMismatch {
                context: "tailed derivation",
                expected: map.rows(),
                found: tail.len(),
            });
        }
        Ok(TailedDerivation { map, tail })
    }

    pub fn zero(n: usize) -> Self {
        TailedDerivation {
            map: Matrix::zeros(n, n),
            tail: LinearForm::zero(n),
        }
    }

    pub fn dim(&self) -> usize {
        self.tail.len()
    }

    /// Coordinates in the order `D` row-major, then `d`.
    pub fn flatten(&self) -> Vec<Scalar> {
        let mut v = self.map.entries().to_vec();
        v.extend(self.tail.coeffs().iter().cloned());
        v
    }

    pub fn unflatten(n: usize, v: &[Scalar]) -> Self {
        TailedDerivation {
            map: Matrix::new(n, n, v[..n * n].to_vec()),
            tail: LinearForm::new(v[n * n..n * n + n].to_vec()),
        }
    }
}

/// Rows of the defining identity on pairs `i < j`; columns are the
/// entries of `D` row-major, then (when `with_tail`) the tail.
fn constraints(a: &OmegaAlgebra, with_tail: bool) -> Matrix {
    let n = a.dim();
    let unknowns = n * n + if with_tail { n } else { 0 };
    let mut data = Vec::new();
    let mut rows = 0;
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let mut row = vec![Scalar::zero(); unknowns];
                // D[eᵢ,eⱼ], component k
                for (l, c) in a.bracket_basis(i, j).iter().enumerate() {
                    row[k * n + l] += c;
                }
                // −[Deᵢ, eⱼ] − [eᵢ, Deⱼ], component k
                for l in 0..n {
                    row[l * n + i] -= a.structure_constant(l, j, k);
                    row[l * n + j] -= a.structure_constant(i, l, k);
                }
                if with_tail {
                    // −d(eⱼ)·eᵢ + d(eᵢ)·eⱼ
                    if k == i {
                        row[n * n + j] -= &Scalar::from_int(1);
                    }
                    if k == j {
                        row[n * n + i] += &Scalar::from_int(1);
                    }
                }
                data.extend(row);
                rows += 1;
            }
        }
    }
    Matrix::new(rows, unknowns, data)
}

/// Solution space of the tailed-derivation identity in flattened coordinates.
pub fn tailed_derivation_space(a: &OmegaAlgebra) -> Subspace {
    nullspace(&constraints(a, true))
}

/// Canonical basis of `Der(a)`.
pub fn derivations(a: &OmegaAlgebra) -> Vec<Matrix> {
    let n = a.dim();
    nullspace(&constraints(a, false))
        .basis_vectors()
        .into_iter()
        .map(|v| Matrix::new(n, n, v))
        .collect()
}

/// Canonical basis of `TDer(a)`.
pub fn tailed_derivations(a: &OmegaAlgebra) -> Vec<TailedDerivation> {
    let n = a.dim();
    tailed_derivation_space(a)
        .basis_vectors()
        .into_iter()
        .map(|v| TailedDerivation::unflatten(n, &v))
        .collect()
}

/// Checks the defining identity on every basis pair.
pub fn is_tailed_derivation(a: &OmegaAlgebra, t: &TailedDerivation) -> Result<bool> {
    let n = a.dim();
    if t.dim() != n || t.map.rows() != n {
        return Err(Error::DimensionMismatch {
            context: "tailed derivation for algebra",
            expected: n,
            found: t.dim(),
        });
    }
    let cols: Vec<Vec<Scalar>> = (0..n).map(|i| t.map.column(i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = t.map.mul_vec(a.bracket_basis(i, j));
            let e = |k: usize| crate::linalg::unit_vector(n, k);
            let mut rhs = a.bracket(&cols[i], &e(j))?;
            for (r, v) in rhs.iter_mut().zip(a.bracket(&e(i), &cols[j])?) {
                *r += &v;
            }
            rhs[i] += &t.tail.coeffs()[j];
            rhs[j] -= &t.tail.coeffs()[i];
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `(S·T − T·S, s∘T − t∘S)` for `s = (S, s)` and `t = (T, t)`.
pub fn tder_bracket(s: &TailedDerivation, t: &TailedDerivation) -> Result<TailedDerivation> {
    if s.dim() != t.dim() {
        return Err(Error::DimensionMismatch {
            context: "tailed derivation bracket",
            expected: s.dim(),
            found: t.dim(),
        });
    }
    let tail: Vec<Scalar> = s
        .tail
        .compose(&t.map)
        .coeffs()
        .iter()
        .zip(t.tail.compose(&s.map).coeffs())
        .map(|(a, b)| a - b)
        .collect();
    Ok(TailedDerivation {
        map: s.map.commutator(&t.map),
        tail: LinearForm::new(tail),
    })
}
