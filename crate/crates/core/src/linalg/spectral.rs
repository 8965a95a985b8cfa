use std::fmt;

use serde::{Deserialize, Serialize};

use super::{nullspace, Matrix, Subspace};
use crate::error::{Error, Result};
use crate::field::{gaussian_roots, RootSplit, Scalar};

/// Jordan block sizes of a nilpotent matrix, weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// All partitions of `n`, largest parts first in lexicographically
    /// decreasing order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                prefix.push(p);
                rec(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Block-diagonal nilpotent matrix with one Jordan block per part
    /// (ones on the superdiagonal).
    pub fn nilpotent_matrix(&self) -> Matrix {
        let n = self.size();
        let mut m = Matrix::zeros(n, n);
        let mut offset = 0;
        for &p in &self.0 {
            for k in 0..p.saturating_sub(1) {
                m[(offset + k, offset + k + 1)] = Scalar::from_int(1);
            }
            offset += p;
        }
        m
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Eigenvalues in Q(i) with algebraic multiplicities, or an error carrying
/// the nonsplit factor of the characteristic polynomial.
pub fn split_spectrum(m: &Matrix) -> Result<RootSplit> {
    let cp = m.char_poly();
    let split = gaussian_roots(&cp)?;
    if !split.splits() {
        return Err(Error::NonSplitSpectrum {
            factor: split.nonsplit.to_string(),
        });
    }
    Ok(split)
}

/// `ker (m − λ)^n` for each eigenvalue `λ`, in ascending eigenvalue order.
pub fn generalized_eigenspaces(m: &Matrix) -> Result<Vec<(Scalar, Subspace)>> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch {
            context: "generalized eigenspaces of a non-square matrix",
            expected: m.rows(),
            found: m.cols(),
        });
    }
    let n = m.rows();
    let split = split_spectrum(m)?;
    Ok(split
        .roots
        .into_iter()
        .map(|(lambda, _)| {
            let shifted = m - &Matrix::scalar(n, &lambda);
            (lambda, nullspace(&shifted.pow(n as u32)))
        })
        .collect())
}

/// Jordan type of a nilpotent matrix from the rank sequence of its powers.
pub fn nilpotent_partition(m: &Matrix) -> Result<Partition> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch {
            context: "nilpotent partition of a non-square matrix",
            expected: m.rows(),
            found: m.cols(),
        });
    }
    let n = m.rows();
    let mut ranks = vec![n];
    let mut power = Matrix::identity(n);
    for _ in 0..n {
        power = &power * m;
        ranks.push(power.rank());
    }
    if ranks[n] != 0 {
        return Err(Error::NotNilpotent);
    }
    // Blocks of size ≥ k: r_{k-1} − r_k. Blocks of size exactly k: difference of that.
    let at_least: Vec<usize> = (1..=n).map(|k| ranks[k - 1] - ranks[k]).collect();
    let mut parts = Vec::new();
    for k in 1..=n {
        let next = at_least.get(k).copied().unwrap_or(0);
        let exact = at_least[k - 1] - next;
        parts.extend(std::iter::repeat_n(k, exact));
    }
    Ok(Partition::new(parts))
}
