mod common;

use common::{config, invertible, matrix, s, small_int};
use omega_lie::linalg::{generalized_eigenspaces, nilpotent_partition, nullspace};
use omega_lie::{Matrix, Scalar, Subspace};
use proptest::prelude::*;

/// `p·t·p⁻¹` for upper-triangular `t` with the given diagonal.
fn conjugated_triangular(p: &Matrix, upper: &Matrix, diag: &[Scalar]) -> Matrix {
    let n = diag.len();
    let mut t = Matrix::zeros(n, n);
    for i in 0..n {
        t[(i, i)] = diag[i].clone();
        for j in i + 1..n {
            t[(i, j)] = upper[(i, j)].clone();
        }
    }
    &(p * &t) * &p.inverse().unwrap()
}

fn nilpotent(n: usize) -> impl Strategy<Value = Matrix> {
    (matrix(n, n), proptest::collection::vec(any::<bool>(), n)).prop_map(move |(m, keep)| {
        let mut t = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i + 1..n {
                // Zeroing whole superdiagonal entries varies the Jordan type.
                if keep[i] || j > i + 1 {
                    t[(i, j)] = m[(i, j)].clone();
                }
            }
        }
        t
    })
}

proptest! {
    #![proptest_config(config(100))]

    #[test]
    fn rank_nullity(m in (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| matrix(r, c))) {
        let ns = nullspace(&m);
        prop_assert_eq!(ns.dim() + m.rank(), m.cols());
        for v in ns.basis_vectors() {
            prop_assert!(m.mul_vec(&v).iter().all(num_traits::Zero::is_zero));
        }
    }

    #[test]
    fn generalized_eigenspaces_fill_the_space(
        p in invertible(4),
        upper in matrix(4, 4),
        diag in proptest::collection::vec((-2i64..=2).prop_map(s), 4),
    ) {
        let m = conjugated_triangular(&p, &upper, &diag);
        let spaces = generalized_eigenspaces(&m).unwrap();
        let total: usize = spaces.iter().map(|(_, w)| w.dim()).sum();
        prop_assert_eq!(total, 4);
        let mut sum = Subspace::zero(4);
        for (lambda, w) in &spaces {
            prop_assert!(w.image(&m).unwrap().dim() <= w.dim());
            prop_assert!(w.contains_subspace(&w.image(&m).unwrap()).unwrap());
            prop_assert_eq!(diag.iter().filter(|d| *d == lambda).count(), w.dim());
            sum = sum.sum(w).unwrap();
        }
        prop_assert!(sum.is_full());
    }

    #[test]
    fn partition_is_a_conjugation_invariant(n in nilpotent(4), p in invertible(4)) {
        let q = &(&p * &n) * &p.inverse().unwrap();
        let a = nilpotent_partition(&n).unwrap();
        prop_assert_eq!(a.size(), 4);
        prop_assert_eq!(nilpotent_partition(&q).unwrap(), a);
    }

    #[test]
    fn canonical_representative(
        m in matrix(3, 5),
        order in Just(vec![0usize, 1, 2]).prop_shuffle(),
        scales in proptest::collection::vec(small_int().prop_filter("nonzero", |c| !num_traits::Zero::is_zero(c)), 3),
    ) {
        let rows = m.to_rows();
        let a = Subspace::span(5, &rows).unwrap();
        let shuffled: Vec<Vec<Scalar>> = order
            .iter()
            .zip(&scales)
            .map(|(&i, c)| rows[i].iter().map(|x| x * c).collect())
            .collect();
        let b = Subspace::span(5, &shuffled).unwrap();
        prop_assert_eq!(a.basis(), b.basis());
        // Adding a combination of existing rows changes nothing either.
        let mut extra = shuffled.clone();
        extra.push(rows.iter().fold(vec![s(0); 5], |acc, r| acc.iter().zip(r).map(|(x, y)| x + y).collect()));
        prop_assert_eq!(&Subspace::span(5, &extra).unwrap(), &a);
    }
}
