use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Matrix;
use crate::error::{Error, Result};
use crate::field::Scalar;

/// A linear subspace of `Q(i)^n`, stored as the nonzero rows of the RREF of
/// any spanning set. The RREF is unique, so `==` is subspace equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
        }
    }

    /// Span of the rows of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        let (r, pivots) = m.rref();
        let k = pivots.len();
        let data = r.entries()[..k * m.cols()].to_vec();
        Subspace {
            ambient: m.cols(),
            basis: Matrix::new(k, m.cols(), data),
        }
    }

    pub fn span(ambient: usize, vectors: &[Vec<Scalar>]) -> Result<Self> {
        let mut data = Vec::with_capacity(vectors.len() * ambient);
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    context: "subspace spanning vector",
                    expected: ambient,
                    found: v.len(),
                });
            }
            data.extend(v.iter().cloned());
        }
        Ok(Subspace::row_space(&Matrix::new(vectors.len(), ambient, data)))
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        let vs: Vec<Vec<Scalar>> = indices.iter().map(|&i| unit_vector(ambient, i)).collect();
        Subspace::span(ambient, &vs).expect("coordinate subspace")
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Basis vectors as rows, in reduced row-echelon form.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.to_rows()
    }

    fn check_ambient(&self, other: usize) -> Result<()> {
        if self.ambient != other {
            return Err(Error::DimensionMismatch {
                context: "subspace ambient dimension",
                expected: self.ambient,
                found: other,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient)?;
        Ok(Subspace::row_space(&self.basis.vstack(&other.basis)?))
    }

    /// Vectors `w` with `⟨v, w⟩ = Σ vᵢwᵢ = 0` for every `v` in `self`.
    /// The pairing is bilinear (no conjugation), so this is the annihilator
    /// under the standard identification of the dual space.
    pub fn annihilator(&self) -> Subspace {
        nullspace(&self.basis)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> Result<bool> {
        self.check_ambient(v.len())?;
        Ok(self.coordinates(v)?.is_some())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other.ambient)?;
        for v in other.basis_vectors() {
            if self.coordinates(&v)?.is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Coordinates of `v` in the RREF basis, or `None` if `v ∉ self`.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        self.check_ambient(v.len())?;
        let pivots = self.pivots();
        let coords: Vec<Scalar> = pivots.iter().map(|&p| v[p].clone()).collect();
        let recon = self.basis.vec_mul(&coords);
        Ok((recon == v).then_some(coords))
    }

    /// Linear combination of the basis rows.
    pub fn vector(&self, coords: &[Scalar]) -> Vec<Scalar> {
        self.basis.vec_mul(coords)
    }

    fn pivots(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|i| {
                self.basis
                    .row(i)
                    .iter()
                    .position(|x| !x.is_zero())
                    .expect("RREF rows are nonzero")
            })
            .collect()
    }

    /// Image of the subspace under the operator `m` (acting on columns).
    pub fn image(&self, m: &Matrix) -> Result<Subspace> {
        self.check_ambient(m.cols())?;
        let rows: Vec<Vec<Scalar>> = self.basis_vectors().iter().map(|v| m.mul_vec(v)).collect();
        Subspace::span(m.rows(), &rows)
    }

    pub fn is_invariant(&self, m: &Matrix) -> Result<bool> {
        self.contains_subspace(&self.image(m)?)
    }

    /// Matrix of `m` restricted to this (invariant) subspace in the RREF
    /// basis; column `j` holds the coordinates of `m·bⱼ`.
    pub fn restrict_operator(&self, m: &Matrix) -> Result<Option<Matrix>> {
        self.check_ambient(m.cols())?;
        let k = self.dim();
        let mut out = Matrix::zeros(k, k);
        for (j, b) in self.basis_vectors().iter().enumerate() {
            let Some(c) = self.coordinates(&m.mul_vec(b))? else {
                return Ok(None);
            };
            for (i, x) in c.into_iter().enumerate() {
                out[(i, j)] = x;
            }
        }
        Ok(Some(out))
    }

    /// Largest `m`-invariant subspace contained in `self`.
    pub fn invariant_core(&self, m: &Matrix) -> Result<Subspace> {
        let mut cur = self.clone();
        loop {
            // {w ∈ cur : m·w ∈ cur}
            let pre = preimage(m, &cur)?.intersect(&cur)?;
            if pre.dim() == cur.dim() {
                return Ok(cur);
            }
            cur = pre;
        }
    }

    /// Canonical byte-free ordering: by dimension, then RREF entries.
    pub fn canonical_cmp(&self, other: &Subspace) -> Ordering {
        self.ambient
            .cmp(&other.ambient)
            .then(self.dim().cmp(&other.dim()))
            .then_with(|| self.basis.entries().cmp(other.basis.entries()))
    }
}

/// `{v : m·v ∈ target}`
pub fn preimage(m: &Matrix, target: &Subspace) -> Result<Subspace> {
    if m.rows() != target.ambient() {
        return Err(Error::DimensionMismatch {
            context: "preimage",
            expected: target.ambient(),
            found: m.rows(),
        });
    }
    // ann(target)·m·v = 0
    let ann = target.annihilator();
    Ok(nullspace(&(ann.basis() * m)))
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::from_int(1);
    v
}

/// `{v : m·v = 0}` with its canonical basis.
pub fn nullspace(m: &Matrix) -> Subspace {
    let (r, pivots) = m.rref();
    let n = m.cols();
    let mut vectors = Vec::new();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    for free in (0..n).filter(|&j| !is_pivot[j]) {
        let mut v = vec![Scalar::zero(); n];
        v[free] = Scalar::from_int(1);
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -&r[(row, free)];
        }
        vectors.push(v);
    }
    Subspace::span(n, &vectors).expect("nullspace vectors have ambient length")
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace({}; {:?})", self.ambient, self.basis)
    }
}

#[derive(Serialize, Deserialize)]
struct SubspaceRepr {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SubspaceRepr {
            ambient: self.ambient,
            basis: self.basis_vectors(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Subspace {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let r = SubspaceRepr::deserialize(deserializer)?;
        Subspace::span(r.ambient, &r.basis).map_err(serde::de::Error::custom)
    }
}
