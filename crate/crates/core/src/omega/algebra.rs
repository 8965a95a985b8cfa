use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{Matrix, Subspace};

/// Finite-dimensional ω-Lie algebra given by structure constants:
/// `[eᵢ, eⱼ] = Σₖ c[i][j][k]·eₖ` and `ω(eᵢ, eⱼ) = omega[i][j]`.
///
/// Construction enforces skewness only; the ω-Jacobi identity is checked
/// by [`OmegaAlgebra::validate`].
#[derive(Clone, Debug)]
pub struct OmegaAlgebra {
    basis: Vec<String>,
    c: Vec<Scalar>,
    omega: Matrix,
    validated: bool,
}

/// A basis triple where the ω-Jacobi identity fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JacobiViolation {
    pub triple: [usize; 3],
    pub labels: [String; 3],
    /// `[[x,y],z] + [[y,z],x] + [[z,x],y]`
    pub lhs: Vec<Scalar>,
    /// `ω(x,y)z + ω(y,z)x + ω(z,x)y`
    pub rhs: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub is_lie: bool,
    pub violations: Vec<JacobiViolation>,
}

impl OmegaAlgebra {
    /// `c[i][j]` is the coordinate vector of `[eᵢ, eⱼ]`.
    pub fn new(basis: Vec<String>, c: Vec<Vec<Vec<Scalar>>>, omega: Matrix) -> Result<Self> {
        let n = basis.len();
        let shape = |found: usize| -> Result<()> {
            if found != n {
                return Err(Error::DimensionMismatch {
                    context: "structure constants",
                    expected: n,
                    found,
                });
            }
            Ok(())
        };
        shape(c.len())?;
        let mut flat = Vec::with_capacity(n * n * n);
        for row in &c {
            shape(row.len())?;
            for v in row {
                shape(v.len())?;
                flat.extend(v.iter().cloned());
            }
        }
        shape(omega.rows())?;
        shape(omega.cols())?;
        Self::from_parts(basis, flat, omega)
    }

    fn from_parts(basis: Vec<String>, c: Vec<Scalar>, omega: Matrix) -> Result<Self> {
        let n = basis.len();
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    if c[(i * n + j) * n + k] != -&c[(j * n + i) * n + k] {
                        return Err(Error::NotSkew { what: "bracket", i, j });
                    }
                }
                if omega[(i, j)] != -&omega[(j, i)] {
                    return Err(Error::NotSkew { what: "omega", i, j });
                }
            }
        }
        Ok(OmegaAlgebra {
            basis,
            c,
            omega,
            validated: false,
        })
    }

    /// Builds an algebra from the brackets and ω-values of basis pairs
    /// `(i, j)`; the skew partners are filled in.
    pub fn from_relations(
        basis: &[&str],
        brackets: &[(usize, usize, Vec<Scalar>)],
        omega: &[(usize, usize, Scalar)],
    ) -> Result<Self> {
        let n = basis.len();
        let mut c = vec![Scalar::zero(); n * n * n];
        for (i, j, v) in brackets {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    context: "bracket value",
                    expected: n,
                    found: v.len(),
                });
            }
            for (k, x) in v.iter().enumerate() {
                c[(i * n + j) * n + k] = x.clone();
                c[(j * n + i) * n + k] = -x;
            }
        }
        let mut w = Matrix::zeros(n, n);
        for (i, j, x) in omega {
            w[(*i, *j)] = x.clone();
            w[(*j, *i)] = -x;
        }
        Self::from_parts(basis.iter().map(|s| s.to_string()).collect(), c, w)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                context: "basis labels",
                expected: self.dim(),
                found: labels.len(),
            });
        }
        self.basis = labels;
        Ok(self)
    }

    /// Index of a basis label.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == label)
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let n = self.dim();
        &self.c[(i * n + j) * n + k]
    }

    /// Coordinates of `[eᵢ, eⱼ]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Scalar] {
        let n = self.dim();
        &self.c[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn omega_matrix(&self) -> &Matrix {
        &self.omega
    }

    pub fn is_lie(&self) -> bool {
        self.omega.is_zero()
    }

    /// True once [`OmegaAlgebra::checked`] has accepted this value.
    pub fn is_validated(&self) -> bool {
        self.validated
    }

    fn check_len(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                context: "algebra vector",
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>> {
        self.check_len(u)?;
        self.check_len(v)?;
        Ok(self.bracket_unchecked(u, v))
    }

    fn bracket_unchecked(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() || i == j {
                    continue;
                }
                let f = ui * vj;
                for (o, ck) in out.iter_mut().zip(self.bracket_basis(i, j)) {
                    if !ck.is_zero() {
                        *o += &(&f * ck);
                    }
                }
            }
        }
        out
    }

    pub fn omega_form(&self, u: &[Scalar], v: &[Scalar]) -> Result<Scalar> {
        self.check_len(u)?;
        self.check_len(v)?;
        Ok(u.iter().zip(self.omega.mul_vec(v)).map(|(a, b)| a * &b).sum())
    }

    /// Matrix of `ad_{eᵢ} = [eᵢ, −]`.
    pub fn ad(&self, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for k in 0..n {
                m[(k, j)] = self.structure_constant(i, j, k).clone();
            }
        }
        m
    }

    /// Matrix of `ad_u = [u, −]`.
    pub fn ad_vec(&self, u: &[Scalar]) -> Result<Matrix> {
        self.check_len(u)?;
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, ui) in u.iter().enumerate() {
            if !ui.is_zero() {
                m = &m + &self.ad(i).scale(ui);
            }
        }
        Ok(m)
    }

    /// Checks the ω-Jacobi identity on every basis triple `i < j < k`.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let e = |i: usize| crate::linalg::unit_vector(n, i);
        let mut violations = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (x, y, z) = (e(i), e(j), e(k));
                    let mut lhs = self.bracket_unchecked(self.bracket_basis(i, j), &z);
                    add_into(&mut lhs, &self.bracket_unchecked(self.bracket_basis(j, k), &x));
                    add_into(&mut lhs, &self.bracket_unchecked(self.bracket_basis(k, i), &y));
                    let mut rhs = vec![Scalar::zero(); n];
                    rhs[k] += &self.omega[(i, j)];
                    rhs[i] += &self.omega[(j, k)];
                    rhs[j] += &self.omega[(k, i)];
                    if lhs != rhs {
                        violations.push(JacobiViolation {
                            triple: [i, j, k],
                            labels: [self.basis[i].clone(), self.basis[j].clone(), self.basis[k].clone()],
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
        ValidationReport {
            valid: violations.is_empty(),
            is_lie: self.is_lie(),
            violations,
        }
    }

    /// Validates and marks the value as checked.
    pub fn checked(mut self) -> Result<Self> {
        let report = self.validate();
        if let Some(v) = report.violations.first() {
            return Err(Error::InvalidAlgebra(format!(
                "omega-Jacobi identity fails at ({}, {}, {}); {} violating triple(s)",
                v.labels[0],
                v.labels[1],
                v.labels[2],
                report.violations.len()
            )));
        }
        self.validated = true;
        Ok(self)
    }

    /// Re-expresses the algebra in the basis `fⱼ = Σᵢ p[i][j]·eᵢ` (columns of `p`).
    pub fn change_basis(&self, p: &Matrix, labels: Vec<String>) -> Result<OmegaAlgebra> {
        let n = self.dim();
        if p.rows() != n || p.cols() != n || labels.len() != n {
            return Err(Error::DimensionMismatch {
                context: "change of basis",
                expected: n,
                found: p.rows().max(p.cols()),
            });
        }
        let inv = p
            .inverse()
            .ok_or_else(|| Error::InvalidAlgebra("change of basis matrix is singular".into()))?;
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| p.column(j)).collect();
        let mut c = vec![Scalar::zero(); n * n * n];
        for a in 0..n {
            for b in 0..n {
                let br = inv.mul_vec(&self.bracket_unchecked(&cols[a], &cols[b]));
                for (k, x) in br.into_iter().enumerate() {
                    c[(a * n + b) * n + k] = x;
                }
            }
        }
        let omega = &(&p.transpose() * &self.omega) * p;
        let mut out = Self::from_parts(labels, c, omega)?;
        out.validated = false;
        Ok(out)
    }

    /// Reorders the basis: new basis vector `i` is old basis vector `order[i]`.
    pub fn permute(&self, order: &[usize]) -> Result<OmegaAlgebra> {
        let n = self.dim();
        let mut p = Matrix::zeros(n, n);
        for (new, &old) in order.iter().enumerate() {
            p[(old, new)] = Scalar::from_int(1);
        }
        let labels = order.iter().map(|&o| self.basis[o].clone()).collect();
        self.change_basis(&p, labels)
    }

    /// `[A, B]` as a subspace, for subspaces of the algebra.
    pub fn bracket_span(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for u in a.basis_vectors() {
            for v in b.basis_vectors() {
                vs.push(self.bracket_unchecked(&u, &v));
            }
        }
        Subspace::span(self.dim(), &vs).expect("bracket vectors have algebra length")
    }

    /// The bracket-closed subspace `s` as an algebra in its RREF basis.
    /// Basis vectors that are standard basis vectors keep their labels.
    pub fn subalgebra(&self, s: &Subspace) -> Result<OmegaAlgebra> {
        let basis = s.basis_vectors();
        let k = basis.len();
        let mut c = vec![Scalar::zero(); k * k * k];
        let mut omega = Matrix::zeros(k, k);
        for a in 0..k {
            for b in 0..k {
                let br = self.bracket(&basis[a], &basis[b])?;
                let coords = s
                    .coordinates(&br)?
                    .ok_or_else(|| Error::InvalidAlgebra("subspace is not closed under the bracket".into()))?;
                for (i, x) in coords.into_iter().enumerate() {
                    c[(a * k + b) * k + i] = x;
                }
                omega[(a, b)] = self.omega_form(&basis[a], &basis[b])?;
            }
        }
        let labels = basis
            .iter()
            .enumerate()
            .map(|(a, v)| {
                let nonzero: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
                match nonzero[..] {
                    [i] if v[i] == Scalar::from_int(1) => self.basis[i].clone(),
                    _ => format!("b{}", a + 1),
                }
            })
            .collect();
        Self::from_parts(labels, c, omega)
    }

    /// `[eᵢ, S] ⊆ S` for every basis element.
    pub fn is_ideal(&self, s: &Subspace) -> Result<bool> {
        if s.ambient() != self.dim() {
            return Err(Error::DimensionMismatch {
                context: "ideal ambient dimension",
                expected: self.dim(),
                found: s.ambient(),
            });
        }
        let full = Subspace::full(self.dim());
        s.contains_subspace(&self.bracket_span(&full, s))
    }

    /// Bracket-closed with ω vanishing on it.
    pub fn is_lie_subalgebra(&self, s: &Subspace) -> Result<bool> {
        if !s.contains_subspace(&self.bracket_span(s, s))? {
            return Ok(false);
        }
        let b = s.basis_vectors();
        for u in &b {
            for v in &b {
                if !self.omega_form(u, v)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn add_into(acc: &mut [Scalar], v: &[Scalar]) {
    for (a, b) in acc.iter_mut().zip(v) {
        *a += b;
    }
}

impl PartialEq for OmegaAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis && self.c == other.c && self.omega == other.omega
    }
}

impl Eq for OmegaAlgebra {}

#[derive(Serialize, Deserialize)]
struct AlgebraRepr {
    dim: usize,
    basis: Vec<String>,
    c: Vec<Vec<Vec<Scalar>>>,
    omega: Vec<Vec<Scalar>>,
}

impl Serialize for OmegaAlgebra {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let n = self.dim();
        let c = (0..n)
            .map(|i| (0..n).map(|j| self.bracket_basis(i, j).to_vec()).collect())
            .collect();
        AlgebraRepr {
            dim: n,
            basis: self.basis.clone(),
            c,
            omega: self.omega.to_rows(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for OmegaAlgebra {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let r = AlgebraRepr::deserialize(deserializer)?;
        OmegaAlgebra::from_repr(r).map_err(serde::de::Error::custom)
    }
}

impl OmegaAlgebra {
    fn from_repr(r: AlgebraRepr) -> Result<Self> {
        if r.basis.len() != r.dim {
            return Err(Error::DimensionMismatch {
                context: "basis labels",
                expected: r.dim,
                found: r.basis.len(),
            });
        }
        if r.omega.len() != r.dim {
            return Err(Error::DimensionMismatch {
                context: "omega rows",
                expected: r.dim,
                found: r.omega.len(),
            });
        }
        for row in &r.omega {
            if row.len() != r.dim {
                return Err(Error::DimensionMismatch {
                    context: "omega columns",
                    expected: r.dim,
                    found: row.len(),
                });
            }
        }
        let omega = if r.dim == 0 {
            Matrix::zeros(0, 0)
        } else {
            Matrix::from_rows(r.omega)?
        };
        OmegaAlgebra::new(r.basis, r.c, omega)
    }
}
