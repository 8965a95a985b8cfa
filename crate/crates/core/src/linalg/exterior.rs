//! Exterior powers on the basis of increasing index tuples, listed in
//! lexicographic order.

use num_traits::Zero;

use super::{nullspace, Matrix, Subspace};
use crate::field::Scalar;

/// Increasing `k`-tuples drawn from `0..n`, in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Position of an increasing tuple in [`k_subsets`].
pub fn subset_index(n: usize, subset: &[usize]) -> usize {
    // Count tuples that precede `subset` lexicographically.
    let k = subset.len();
    let mut idx = 0;
    let mut prev = 0;
    for (pos, &s) in subset.iter().enumerate() {
        for skipped in prev..s {
            idx += binomial(n - skipped - 1, k - pos - 1);
        }
        prev = s + 1;
    }
    idx
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Sorts `indices` in place; returns the permutation sign, or `None` if an
/// index repeats.
pub fn sort_sign(indices: &mut [usize]) -> Option<bool> {
    let mut negative = false;
    for i in 1..indices.len() {
        let mut j = i;
        while j > 0 && indices[j - 1] > indices[j] {
            indices.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
    }
    if indices.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(negative)
    }
}

/// Matrix of `ξ ↦ Σ v₁∧…∧m·vᵢ∧…∧v_k` on `Λᵏ`.
pub fn derivation_extension(m: &Matrix, k: usize) -> Matrix {
    let n = m.rows();
    let basis = k_subsets(n, k);
    let mut out = Matrix::zeros(basis.len(), basis.len());
    for (col, subset) in basis.iter().enumerate() {
        for pos in 0..k {
            for r in 0..n {
                let coef = &m[(r, subset[pos])];
                if coef.is_zero() {
                    continue;
                }
                let mut idx = subset.clone();
                idx[pos] = r;
                let Some(neg) = sort_sign(&mut idx) else {
                    continue;
                };
                let row = subset_index(n, &idx);
                if neg {
                    out[(row, col)] -= coef;
                } else {
                    out[(row, col)] += coef;
                }
            }
        }
    }
    out
}

/// Matrix of `v ↦ v ∧ ξ` from `V` to `Λᵏ⁺¹V`.
pub fn wedge_map(xi: &[Scalar], n: usize, k: usize) -> Matrix {
    let basis = k_subsets(n, k);
    let mut out = Matrix::zeros(binomial(n, k + 1), n);
    for (c, subset) in basis.iter().enumerate() {
        if xi[c].is_zero() {
            continue;
        }
        for v in 0..n {
            let mut idx = Vec::with_capacity(k + 1);
            idx.push(v);
            idx.extend_from_slice(subset);
            let Some(neg) = sort_sign(&mut idx) else {
                continue;
            };
            let row = subset_index(n, &idx);
            if neg {
                out[(row, v)] -= &xi[c];
            } else {
                out[(row, v)] += &xi[c];
            }
        }
    }
    out
}

/// `{v : v ∧ ξ = 0}`; has dimension `k` exactly when `ξ ≠ 0` is decomposable.
pub fn wedge_annihilator(xi: &[Scalar], n: usize, k: usize) -> Subspace {
    nullspace(&wedge_map(xi, n, k))
}

/// Plücker coordinates (maximal minors) of the row basis of `s`.
pub fn plucker(s: &Subspace) -> Vec<Scalar> {
    let k = s.dim();
    let n = s.ambient();
    let b = s.basis();
    k_subsets(n, k)
        .into_iter()
        .map(|cols| {
            let mut data = Vec::with_capacity(k * k);
            for r in 0..k {
                for &c in &cols {
                    data.push(b[(r, c)].clone());
                }
            }
            Matrix::new(k, k, data).det()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_indexing() {
        for n in 0..7 {
            for k in 0..=n {
                let subs = k_subsets(n, k);
                assert_eq!(subs.len(), binomial(n, k));
                for (i, s) in subs.iter().enumerate() {
                    assert_eq!(subset_index(n, s), i);
                }
            }
        }
    }

    #[test]
    fn top_power_is_trace() {
        let m = Matrix::from_ints(&[&[1, 2, 0], &[3, -1, 4], &[0, 5, 2]]);
        let top = derivation_extension(&m, 3);
        assert_eq!(top, Matrix::scalar(1, &m.trace()));
        assert_eq!(derivation_extension(&m, 1), m);
    }

    #[test]
    fn plucker_vector_recovers_subspace() {
        let s = Subspace::span(
            4,
            &[
                vec![Scalar::from_int(1), Scalar::from_int(2), Scalar::zero(), Scalar::from_int(-1)],
                vec![Scalar::zero(), Scalar::from_int(1), Scalar::from_int(3), Scalar::i()],
            ],
        )
        .unwrap();
        assert_eq!(wedge_annihilator(&plucker(&s), 4, 2), s);
    }

    #[test]
    fn invariant_subspace_gives_eigenvector() {
        // Upper triangular: span{e₀, e₁} is invariant, so its Plücker vector is an eigenvector.
        let m = Matrix::from_ints(&[&[2, 1, 5], &[0, 3, 7], &[0, 0, 4]]);
        let s = Subspace::coordinate(3, &[0, 1]);
        let p = plucker(&s);
        let image = derivation_extension(&m, 2).mul_vec(&p);
        let scaled: Vec<Scalar> = p.iter().map(|x| x * &Scalar::from_int(5)).collect();
        assert_eq!(image, scaled);
    }
}
