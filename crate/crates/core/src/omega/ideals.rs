use std::cmp::Ordering;
use std::sync::Arc;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::OmegaAlgebra;
use crate::error::{Error, Result};
use crate::field::{gaussian_roots, Scalar};
use crate::linalg::exterior::{derivation_extension, k_subsets, sort_sign, subset_index, wedge_annihilator};
use crate::linalg::{nullspace, Matrix, Subspace};
use crate::polysolve::{groebner, is_inconsistent, MultiPoly, PolySystem, DEFAULT_BUDGET};

/// A set of ideals of one dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IdealFamily {
    Single { ideal: Subspace },
    /// Every `dim`-dimensional subspace between `lower` and `upper` is an ideal.
    Interval {
        dim: usize,
        lower: Subspace,
        upper: Subspace,
    },
    /// Ideals whose Plücker vectors are the decomposable vectors of
    /// `plucker_span` (a subspace of `Λ^dim`) lying in the given chart, i.e.
    /// `b_chart + Σ_{j>chart} t_j·b_j` with `t` a zero of `equations`. The
    /// equations have a common zero over the complex numbers.
    Variety {
        dim: usize,
        plucker_span: Subspace,
        chart: usize,
        equations: PolySystem,
    },
}

impl IdealFamily {
    pub fn dim(&self) -> usize {
        match self {
            IdealFamily::Single { ideal } => ideal.dim(),
            IdealFamily::Interval { dim, .. } | IdealFamily::Variety { dim, .. } => *dim,
        }
    }

    /// A concrete member, when one is known exactly.
    pub fn representative(&self) -> Option<Subspace> {
        match self {
            IdealFamily::Single { ideal } => Some(ideal.clone()),
            IdealFamily::Interval { dim, lower, upper } => {
                let mut cur = lower.clone();
                for v in upper.basis_vectors() {
                    if cur.dim() == *dim {
                        break;
                    }
                    let next = cur.sum(&Subspace::span(cur.ambient(), &[v]).ok()?).ok()?;
                    cur = next;
                }
                (cur.dim() == *dim).then_some(cur)
            }
            IdealFamily::Variety { .. } => None,
        }
    }

    fn sort_key(&self) -> (u8, &Subspace, Option<&Subspace>) {
        match self {
            IdealFamily::Single { ideal } => (0, ideal, None),
            IdealFamily::Interval { lower, upper, .. } => (1, lower, Some(upper)),
            IdealFamily::Variety { plucker_span, .. } => (2, plucker_span, None),
        }
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        let (a0, a1, a2) = self.sort_key();
        let (b0, b1, b2) = other.sort_key();
        a0.cmp(&b0).then_with(|| a1.canonical_cmp(b1)).then_with(|| match (a2, b2) {
            (Some(x), Some(y)) => x.canonical_cmp(y),
            _ => Ordering::Equal,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealSearch {
    pub dim: usize,
    pub families: Vec<IdealFamily>,
    /// True when every ideal of this dimension lies in one of the families.
    pub exhaustive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub dim: usize,
    pub ideal: Subspace,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Completeness {
    pub dim: usize,
    pub exhaustive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealReport {
    /// A nonzero proper ideal was found.
    pub normal: bool,
    /// Minimal codimension of a nonzero proper ideal, when certified.
    pub degree: Option<usize>,
    pub witnesses: Vec<Witness>,
    pub completeness: Vec<Completeness>,
}

pub fn ideals_of_dim(a: &OmegaAlgebra, k: usize) -> Result<IdealSearch> {
    ideals_of_dim_with_budget(a, k, DEFAULT_BUDGET)
}

/// Ideals of dimension `k`; `budget` caps each Gröbner computation.
pub fn ideals_of_dim_with_budget(a: &OmegaAlgebra, k: usize, budget: usize) -> Result<IdealSearch> {
    let n = a.dim();
    if k == 0 || k >= n {
        return Err(Error::OutOfRange(format!(
            "ideal dimension {k} outside 1..={}",
            n.saturating_sub(1)
        )));
    }
    let ads: Vec<Matrix> = (0..n).map(|i| a.ad(i)).collect();
    let mut families = Vec::new();
    let exhaustive;
    if k == 1 {
        let (spaces, ex) = joint_eigenspaces(&ads, Subspace::full(n))?;
        exhaustive = ex;
        for w in spaces {
            families.push(if w.dim() == 1 {
                IdealFamily::Single { ideal: w }
            } else {
                IdealFamily::Interval {
                    dim: 1,
                    lower: Subspace::zero(n),
                    upper: w,
                }
            });
        }
    } else if k == n - 1 {
        let transposed: Vec<Matrix> = ads.iter().map(Matrix::transpose).collect();
        let (spaces, ex) = joint_eigenspaces(&transposed, Subspace::full(n))?;
        exhaustive = ex;
        for w in spaces {
            let lower = w.annihilator();
            families.push(if w.dim() == 1 {
                IdealFamily::Single { ideal: lower }
            } else {
                IdealFamily::Interval {
                    dim: k,
                    lower,
                    upper: Subspace::full(n),
                }
            });
        }
    } else {
        let lifted: Vec<Matrix> = ads.iter().map(|m| derivation_extension(m, k)).collect();
        let ambient = lifted[0].rows();
        let (spaces, ex) = joint_eigenspaces(&lifted, Subspace::full(ambient))?;
        exhaustive = ex;
        for w in spaces {
            decomposable_lines(n, k, &w, budget, &mut families)?;
        }
    }
    for f in &families {
        if let Some(s) = f.representative() {
            if !a.is_ideal(&s)? {
                return Err(Error::InvalidAlgebra(format!(
                    "ideal search produced a non-ideal subspace {s:?}"
                )));
            }
        }
    }
    families.sort_by(IdealFamily::canonical_cmp);
    families.dedup();
    Ok(IdealSearch {
        dim: k,
        families,
        exhaustive,
    })
}

/// Searches `k = n−1, …, 1` and stops at the largest dimension with an ideal.
pub fn degree(a: &OmegaAlgebra) -> Result<IdealReport> {
    degree_with_budget(a, DEFAULT_BUDGET)
}

pub fn degree_with_budget(a: &OmegaAlgebra, budget: usize) -> Result<IdealReport> {
    let n = a.dim();
    let mut completeness = Vec::new();
    let mut all_exhaustive = true;
    for k in (1..n).rev() {
        let search = ideals_of_dim_with_budget(a, k, budget)?;
        completeness.push(Completeness {
            dim: k,
            exhaustive: search.exhaustive,
        });
        if !search.families.is_empty() {
            let witnesses = search
                .families
                .iter()
                .filter_map(IdealFamily::representative)
                .map(|ideal| Witness { dim: k, ideal })
                .collect();
            return Ok(IdealReport {
                normal: true,
                degree: all_exhaustive.then_some(n - k),
                witnesses,
                completeness,
            });
        }
        all_exhaustive &= search.exhaustive;
    }
    Ok(IdealReport {
        normal: false,
        degree: None,
        witnesses: Vec::new(),
        completeness,
    })
}

/// Maximal subspaces of `space` on which every operator acts by a scalar,
/// one per eigenvalue tuple. The flag is false when some spectrum failed
/// to split over Q(i).
pub fn joint_eigenspaces(ops: &[Matrix], space: Subspace) -> Result<(Vec<Subspace>, bool)> {
    let mut out = Vec::new();
    let mut exhaustive = true;
    joint_rec(ops, space, &mut out, &mut exhaustive)?;
    out.sort_by(Subspace::canonical_cmp);
    Ok((out, exhaustive))
}

fn joint_rec(ops: &[Matrix], w: Subspace, out: &mut Vec<Subspace>, exhaustive: &mut bool) -> Result<()> {
    let Some((m, rest)) = ops.split_first() else {
        if !w.is_zero() {
            out.push(w);
        }
        return Ok(());
    };
    if m.is_zero() {
        return joint_rec(rest, w, out, exhaustive);
    }
    // Eigenvectors of m inside w lie in its largest m-invariant subspace.
    let core = w.invariant_core(m)?;
    if core.is_zero() {
        return Ok(());
    }
    let restricted = core.restrict_operator(m)?.expect("invariant core");
    let split = gaussian_roots(&restricted.char_poly())?;
    if !split.splits() && *exhaustive {
        // Joint eigenvectors over C for the missing eigenvalues lie in
        // ker q(m) and in its largest subspace invariant under the remaining
        // operators; that subspace is defined over Q(i).
        let kernel = nullspace(&restricted.eval_poly(&split.nonsplit));
        let lifted: Vec<Vec<Scalar>> = kernel.basis_vectors().iter().map(|c| core.vector(c)).collect();
        let mut hidden = Subspace::span(core.ambient(), &lifted)?;
        loop {
            let before = hidden.dim();
            for r in rest {
                hidden = hidden.invariant_core(r)?;
            }
            if hidden.dim() == before || hidden.is_zero() {
                break;
            }
        }
        if !hidden.is_zero() {
            *exhaustive = false;
        }
    }
    let n = m.rows();
    for (lambda, _) in split.roots {
        let eig = nullspace(&(m - &Matrix::scalar(n, &lambda)));
        joint_rec(rest, core.intersect(&eig)?, out, exhaustive)?;
    }
    Ok(())
}

/// Decomposable lines in `w ⊆ Λᵏ(Qⁿ)`, chart by chart.
fn decomposable_lines(
    n: usize,
    k: usize,
    w: &Subspace,
    budget: usize,
    families: &mut Vec<IdealFamily>,
) -> Result<()> {
    let basis = w.basis_vectors();
    let d = basis.len();
    for chart in 0..d {
        let free: Vec<usize> = (chart + 1..d).collect();
        if free.is_empty() {
            if let Some(s) = decomposed(&basis[chart], n, k) {
                families.push(IdealFamily::Single { ideal: s });
            }
            continue;
        }
        let vars: Arc<[String]> = free.iter().map(|j| format!("t{j}")).collect();
        // Coordinates of ξ(t) = b_chart + Σ t_j·b_j as affine polynomials.
        let coords: Vec<MultiPoly> = (0..basis[chart].len())
            .map(|c| {
                let mut p = MultiPoly::constant(vars.clone(), basis[chart][c].clone());
                for (v, &j) in free.iter().enumerate() {
                    if !basis[j][c].is_zero() {
                        let term = MultiPoly::var(vars.clone(), v).scale(&basis[j][c]);
                        p = p.add(&term)?;
                    }
                }
                Ok(p)
            })
            .collect::<Result<_>>()?;
        let relations = plucker_relations(n, k, &coords, &vars)?;
        let gb = groebner(&PolySystem::new(vars.clone(), relations)?, budget)?;
        if is_inconsistent(&gb) {
            continue;
        }
        match unique_point(&gb) {
            Some(point) => {
                let mut xi = basis[chart].clone();
                for (t, &j) in point.iter().zip(&free) {
                    for (x, b) in xi.iter_mut().zip(&basis[j]) {
                        *x += &(t * b);
                    }
                }
                let s = decomposed(&xi, n, k).expect("Plücker relations hold at the solution");
                families.push(IdealFamily::Single { ideal: s });
            }
            None => families.push(IdealFamily::Variety {
                dim: k,
                plucker_span: w.clone(),
                chart,
                equations: gb,
            }),
        }
    }
    Ok(())
}

fn decomposed(xi: &[Scalar], n: usize, k: usize) -> Option<Subspace> {
    let s = wedge_annihilator(xi, n, k);
    (s.dim() == k).then_some(s)
}

/// Grassmann–Plücker relations
/// `Σₗ (−1)ˡ p(I ∪ jₗ)·p(J ∖ jₗ) = 0` over `(k−1)`-sets `I` and `(k+1)`-sets `J`.
fn plucker_relations(n: usize, k: usize, p: &[MultiPoly], vars: &Arc<[String]>) -> Result<Vec<MultiPoly>> {
    let signed = |idx: &[usize]| -> Option<(usize, bool)> {
        let mut v = idx.to_vec();
        let neg = sort_sign(&mut v)?;
        Some((subset_index(n, &v), neg))
    };
    let mut out = Vec::new();
    for i_set in k_subsets(n, k - 1) {
        for j_set in k_subsets(n, k + 1) {
            let mut rel = MultiPoly::zero(vars.clone());
            for l in 0..=k {
                let mut left = i_set.clone();
                left.push(j_set[l]);
                let Some((li, lneg)) = signed(&left) else {
                    continue;
                };
                let right: Vec<usize> = j_set.iter().enumerate().filter(|&(m, _)| m != l).map(|(_, &x)| x).collect();
                let (ri, rneg) = signed(&right).expect("subset of an increasing tuple");
                let term = p[li].mul(&p[ri])?;
                if (l % 2 == 1) ^ lneg ^ rneg {
                    rel = rel.sub(&term)?;
                } else {
                    rel = rel.add(&term)?;
                }
            }
            if !rel.is_zero() {
                out.push(rel);
            }
        }
    }
    Ok(out)
}

/// The solution of a reduced basis of the form `{t_j − c_j}` covering every variable.
fn unique_point(gb: &PolySystem) -> Option<Vec<Scalar>> {
    let nv = gb.vars().len();
    if gb.len() != nv {
        return None;
    }
    let mut point = vec![Scalar::zero(); nv];
    let mut seen = vec![false; nv];
    for p in gb.polys() {
        let terms = p.terms();
        let (lead, _) = &terms[0];
        if lead.degree() != 1 || terms.len() > 2 {
            return None;
        }
        let v = lead.exponents().iter().position(|&e| e == 1)?;
        if let Some((m, c)) = terms.get(1) {
            if !m.is_one() {
                return None;
            }
            point[v] = -c;
        }
        seen[v] = true;
    }
    seen.iter().all(|&s| s).then_some(point)
}
