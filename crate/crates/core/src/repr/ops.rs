use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::Representation;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::exterior::{binomial, derivation_extension, k_subsets};
use crate::linalg::{generalized_eigenspaces, nilpotent_partition, nullspace, split_spectrum, Matrix, Partition, Subspace};
use crate::omega::{is_multiplicative, LinearForm, OmegaAlgebra};

/// `L ⋉ V` with `[eᵢ, v_p] = eᵢ·v_p` and `Ω` extending `ω` by zero.
/// The basis is `L`'s followed by `v1, …, vm`.
pub fn semidirect(r: &Representation) -> Result<OmegaAlgebra> {
    r.require_valid("semidirect product")?;
    let a = r.algebra();
    let (n, m) = (a.dim(), r.dim());
    let d = n + m;
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut v = a.bracket_basis(i, j).to_vec();
            v.resize(d, Scalar::zero());
            brackets.push((i, j, v));
        }
        for p in 0..m {
            let mut v = vec![Scalar::zero(); d];
            for q in 0..m {
                v[n + q] = r.rho()[i][(q, p)].clone();
            }
            brackets.push((i, n + p, v));
        }
    }
    let omega: Vec<(usize, usize, Scalar)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, a.omega_matrix()[(i, j)].clone()))
        .collect();
    let mut labels: Vec<String> = a.basis_labels().to_vec();
    labels.extend((1..=m).map(|p| format!("v{p}")));
    let label_refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    OmegaAlgebra::from_relations(&label_refs, &brackets, &omega)?.checked()
}

pub fn is_submodule(s: &Subspace, r: &Representation) -> Result<bool> {
    if s.ambient() != r.dim() {
        return Err(Error::DimensionMismatch {
            context: "submodule ambient dimension",
            expected: r.dim(),
            found: s.ambient(),
        });
    }
    for m in r.rho() {
        if !s.is_invariant(m)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Weight {
    pub weight: Scalar,
    pub space: Subspace,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDecomposition {
    pub h_index: usize,
    pub weights: Vec<Weight>,
    /// Every weight space is a submodule.
    pub all_submodules: bool,
}

/// Generalized eigenspaces of the action of `e_h`.
pub fn weight_decomposition(r: &Representation, h_index: usize) -> Result<WeightDecomposition> {
    let m = r
        .rho()
        .get(h_index)
        .ok_or_else(|| Error::OutOfRange(format!("basis index {h_index}")))?;
    let weights: Vec<Weight> = generalized_eigenspaces(m)?
        .into_iter()
        .map(|(weight, space)| Weight { weight, space })
        .collect();
    let mut all_submodules = true;
    for w in &weights {
        all_submodules &= is_submodule(&w.space, r)?;
    }
    Ok(WeightDecomposition {
        h_index,
        weights,
        all_submodules,
    })
}

/// `(λ, N)` with the action of `e_h` equal to `λ·1 + N`, `N` nilpotent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModuleClass {
    pub lambda: Scalar,
    pub partition: Partition,
}

pub fn classify_indecomposable(r: &Representation, h_index: usize) -> Result<ModuleClass> {
    let m = r
        .rho()
        .get(h_index)
        .ok_or_else(|| Error::OutOfRange(format!("basis index {h_index}")))?;
    let split = split_spectrum(m)?;
    if split.roots.len() != 1 {
        return Err(Error::MultipleWeights {
            count: split.roots.len(),
        });
    }
    let lambda = split.roots[0].0.clone();
    let nilpotent = m - &Matrix::scalar(r.dim(), &lambda);
    Ok(ModuleClass {
        partition: nilpotent_partition(&nilpotent)?,
        lambda,
    })
}

/// An invertible `s` with `s·ρ₁(eᵢ) = ρ₂(eᵢ)·s` for all `i`, if one exists.
pub fn module_iso(r1: &Representation, r2: &Representation) -> Result<Option<Matrix>> {
    r1.same_algebra(r2)?;
    if r1.dim() != r2.dim() {
        return Err(Error::DimensionMismatch {
            context: "module isomorphism",
            expected: r1.dim(),
            found: r2.dim(),
        });
    }
    let m = r1.dim();
    let space = intertwiners(r1, r2);
    let basis: Vec<Matrix> = space
        .basis_vectors()
        .into_iter()
        .map(|v| Matrix::new(m, m, v))
        .collect();
    if m == 0 {
        return Ok(Some(Matrix::zeros(0, 0)));
    }
    let k = basis.len();
    if k == 0 {
        return Ok(None);
    }
    // det(Σ tⱼBⱼ) has degree ≤ m in each tⱼ, so it vanishes on {0..m}^k only if it is zero.
    // Points are visited by increasing max-norm.
    for shell in 0..=m as u32 {
        let mut t = vec![0u32; k];
        loop {
            if t.contains(&shell) {
                let mut s = Matrix::zeros(m, m);
                for (c, b) in t.iter().zip(&basis) {
                    if *c != 0 {
                        s = &s + &b.scale(&Scalar::from_int(i64::from(*c)));
                    }
                }
                if !s.det().is_zero() {
                    return Ok(Some(s));
                }
            }
            let mut pos = 0;
            while pos < k && t[pos] == shell {
                t[pos] = 0;
                pos += 1;
            }
            if pos == k {
                break;
            }
            t[pos] += 1;
        }
    }
    Ok(None)
}

/// `{s : s·ρ₁(eᵢ) = ρ₂(eᵢ)·s}` with `s` flattened row-major.
pub(crate) fn intertwiners(r1: &Representation, r2: &Representation) -> Subspace {
    let (m1, m2) = (r1.dim(), r2.dim());
    let unknowns = m2 * m1;
    let mut rows = Vec::new();
    for (a1, a2) in r1.rho().iter().zip(r2.rho()) {
        for a in 0..m2 {
            for b in 0..m1 {
                let mut row = vec![Scalar::zero(); unknowns];
                for c in 0..m1 {
                    row[a * m1 + c] += &a1[(c, b)];
                }
                for c in 0..m2 {
                    row[c * m1 + b] -= &a2[(a, c)];
                }
                rows.extend(row);
            }
        }
    }
    let count = rows.len() / unknowns.max(1);
    nullspace(&Matrix::new(if unknowns == 0 { 0 } else { count }, unknowns, rows))
}

fn check_lambda(r: &Representation, lam: &LinearForm) -> Result<()> {
    let a = r.algebra();
    if is_multiplicative(a, lam)? {
        return Ok(());
    }
    let n = a.dim();
    let (i, j) = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .find(|&(i, j)| lam.eval(a.bracket_basis(i, j)).ok().as_ref() != Some(&a.omega_matrix()[(i, j)]))
        .expect("a failing pair exists");
    Err(Error::NotMultiplicative { i, j })
}

/// `x·(v⊗w) = xv⊗w + v⊗xw − λ(x)v⊗w`; basis `(p, q)` at `p·dim(w) + q`.
pub fn tensor_module(v: &Representation, w: &Representation, lam: &LinearForm) -> Result<Representation> {
    v.same_algebra(w)?;
    check_lambda(v, lam)?;
    v.require_valid("tensor factor")?;
    w.require_valid("tensor factor")?;
    let (iv, iw) = (Matrix::identity(v.dim()), Matrix::identity(w.dim()));
    let d = v.dim() * w.dim();
    let rho = v
        .rho()
        .iter()
        .zip(w.rho())
        .zip(lam.coeffs())
        .map(|((a, b), l)| &(&a.kron(&iw) + &iv.kron(b)) - &Matrix::scalar(d, l))
        .collect();
    let out = Representation::with_dim(v.algebra().clone(), d, rho)?;
    out.require_valid("tensor product")?;
    Ok(out)
}

/// `x·(v₁∧…∧v_k) = Σ v₁∧…∧xvᵢ∧…∧v_k − (k−1)λ(x)·v₁∧…∧v_k` on the basis of
/// increasing index tuples.
pub fn exterior_power(v: &Representation, k: usize, lam: &LinearForm) -> Result<Representation> {
    check_lambda(v, lam)?;
    v.require_valid("exterior power")?;
    if k > v.dim() {
        return Err(Error::OutOfRange(format!(
            "exterior power {k} of a {}-dimensional module",
            v.dim()
        )));
    }
    let d = binomial(v.dim(), k);
    let twist = Scalar::from_int(k as i64 - 1);
    let rho = v
        .rho()
        .iter()
        .zip(lam.coeffs())
        .map(|(a, l)| &derivation_extension(a, k) - &Matrix::scalar(d, &(&twist * l)))
        .collect();
    let out = Representation::with_dim(v.algebra().clone(), d, rho)?;
    out.require_valid("exterior power")?;
    Ok(out)
}

/// The map `Λ²V → V⊗V`, `e_a∧e_b ↦ e_a⊗e_b − e_b⊗e_a`.
pub fn antisymmetrizer(m: usize) -> Matrix {
    let pairs = k_subsets(m, 2);
    let mut out = Matrix::zeros(m * m, pairs.len());
    for (c, p) in pairs.iter().enumerate() {
        out[(p[0] * m + p[1], c)] = Scalar::from_int(1);
        out[(p[1] * m + p[0], c)] = Scalar::from_int(-1);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochainDefect {
    /// `([x,y]f)(z) − (x(yf))(z) + (y(xf))(z) − ω(x,y)f(z)`
    pub defect: Vec<Scalar>,
    /// `−f(ω(y,z)x + ω(x,y)z + ω(z,x)y)`
    pub expected: Vec<Scalar>,
    pub agrees: bool,
}

/// Failure of `(xf)(z) = x·f(z) − f([x,z])` to be an action on 1-cochains.
pub fn cochain_defect(
    f: &Matrix,
    r: &Representation,
    x: &[Scalar],
    y: &[Scalar],
    z: &[Scalar],
) -> Result<CochainDefect> {
    let a = r.algebra();
    let n = a.dim();
    if f.rows() != r.dim() || f.cols() != n {
        return Err(Error::DimensionMismatch {
            context: "cochain shape",
            expected: r.dim(),
            found: f.rows(),
        });
    }
    let act = |u: &[Scalar], g: &Matrix| -> Result<Matrix> { Ok(&(&r.action(u)? * g) - &(g * &a.ad_vec(u)?)) };
    let xy = a.bracket(x, y)?;
    let yf = act(y, f)?;
    let xf = act(x, f)?;
    let total = &(&act(&xy, f)? - &act(x, &yf)?) + &act(y, &xf)?;
    let w = a.omega_form(x, y)?;
    let defect: Vec<Scalar> = total
        .mul_vec(z)
        .into_iter()
        .zip(f.mul_vec(z))
        .map(|(t, fz)| &t - &(&w * &fz))
        .collect();
    let arg: Vec<Scalar> = (0..n)
        .map(|i| {
            &(&(&a.omega_form(y, z).unwrap() * &x[i]) + &(&w * &z[i])) + &(&a.omega_form(z, x).unwrap() * &y[i])
        })
        .collect();
    let expected: Vec<Scalar> = f.mul_vec(&arg).into_iter().map(|v| -v).collect();
    Ok(CochainDefect {
        agrees: defect == expected,
        defect,
        expected,
    })
}
