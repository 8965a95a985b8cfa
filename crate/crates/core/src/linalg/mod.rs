//! Exact dense linear algebra over Q(i).

pub mod exterior;
mod matrix;
mod spectral;
mod subspace;

pub use matrix::Matrix;
pub use spectral::{generalized_eigenspaces, nilpotent_partition, split_spectrum, Partition};
pub use subspace::{nullspace, preimage, unit_vector, Subspace};

use crate::field::Scalar;

/// Solutions of `a·x = b` as a particular solution plus the kernel of `a`,
/// or `None` when the system is inconsistent.
pub fn solve_affine(a: &Matrix, b: &[Scalar]) -> Option<(Vec<Scalar>, Subspace)> {
    assert_eq!(a.rows(), b.len(), "right-hand side length");
    let n = a.cols();
    let mut aug = Matrix::zeros(a.rows(), n + 1);
    for i in 0..a.rows() {
        for j in 0..n {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, n)] = b[i].clone();
    }
    let (r, pivots) = aug.rref();
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![<Scalar as num_traits::Zero>::zero(); n];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r[(row, n)].clone();
    }
    Some((x, nullspace(a)))
}
