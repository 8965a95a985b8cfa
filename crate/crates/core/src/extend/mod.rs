//! One-dimensional ω-extensions of Lie algebras and their tailed derivations.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::derive::{is_tailed_derivation, TailedDerivation};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{Matrix, Subspace};
use crate::omega::{LinearForm, OmegaAlgebra};

/// `g ⊕ Q(i)x` with `[x, v] = D(v)` and `ω(x, v) = d(v)`; `x` is appended last.
pub fn extend(g: &OmegaAlgebra, t: &TailedDerivation) -> Result<OmegaAlgebra> {
    if !g.is_lie() || !g.validate().valid {
        return Err(Error::NotLie);
    }
    if !is_tailed_derivation(g, t)? {
        return Err(Error::InvalidTailedDerivation(
            "the pair does not satisfy the tailed derivation identity".into(),
        ));
    }
    let n = g.dim();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut v = g.bracket_basis(i, j).to_vec();
            v.push(Scalar::zero());
            brackets.push((i, j, v));
        }
    }
    let mut omega = Vec::new();
    for j in 0..n {
        let mut v = t.map.column(j);
        v.push(Scalar::zero());
        brackets.push((n, j, v));
        omega.push((n, j, t.tail.coeffs()[j].clone()));
    }
    let mut labels: Vec<String> = g.basis_labels().to_vec();
    let mut x = String::from("x");
    while labels.contains(&x) {
        x.push('_');
    }
    labels.push(x);
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    OmegaAlgebra::from_relations(&refs, &brackets, &omega)?.checked()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Restriction {
    pub derivation: TailedDerivation,
    /// Rows are the basis of the subalgebra in which `D` and `d` are written.
    pub basis: Matrix,
    /// `[x, g] ⊄ g`; the `x`-components were dropped.
    pub projected: bool,
}

/// `ad_x` on a codimension-one Lie subalgebra `g`, with tail `ω(x, −)`.
pub fn restrict(l: &OmegaAlgebra, g: &Subspace, x: &[Scalar]) -> Result<Restriction> {
    let n = l.dim();
    if g.ambient() != n || x.len() != n {
        return Err(Error::DimensionMismatch {
            context: "restriction",
            expected: n,
            found: if g.ambient() != n { g.ambient() } else { x.len() },
        });
    }
    if g.dim() + 1 != n {
        return Err(Error::Restrict(format!(
            "subalgebra has dimension {}, expected {}",
            g.dim(),
            n.saturating_sub(1)
        )));
    }
    if g.contains_vector(x)? {
        return Err(Error::Restrict("x lies in the subalgebra".into()));
    }
    if !l.is_lie_subalgebra(g)? {
        return Err(Error::Restrict(
            "subspace is not a Lie subalgebra (not bracket-closed or omega does not vanish on it)".into(),
        ));
    }
    let basis = g.basis_vectors();
    let k = basis.len();
    // Coordinates with respect to (b₁, …, b_k, x).
    let mut full_rows = basis.clone();
    full_rows.push(x.to_vec());
    let frame = Matrix::from_rows(full_rows)?.transpose();
    let inv = frame.inverse().expect("g plus x spans the algebra");
    let mut map = Matrix::zeros(k, k);
    let mut projected = false;
    for (j, b) in basis.iter().enumerate() {
        let coords = inv.mul_vec(&l.bracket(x, b)?);
        projected |= !coords[k].is_zero();
        for i in 0..k {
            map[(i, j)] = coords[i].clone();
        }
    }
    let tail = basis.iter().map(|b| l.omega_form(x, b)).collect::<Result<Vec<_>>>()?;
    let derivation = TailedDerivation::new(map, LinearForm::new(tail))?;
    let sub = l.subalgebra(g)?;
    if !is_tailed_derivation(&sub, &derivation)? {
        return Err(Error::Restrict(
            "projected ad_x is not a tailed derivation of the subalgebra".into(),
        ));
    }
    Ok(Restriction {
        derivation,
        basis: g.basis().clone(),
        projected,
    })
}
