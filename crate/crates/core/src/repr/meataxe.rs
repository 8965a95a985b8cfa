use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::ops::{intertwiners, is_submodule};
use super::Representation;
use crate::error::Result;
use crate::field::{gaussian_roots, Scalar};
use crate::linalg::{nullspace, Matrix, Subspace};

const SEED: u64 = 0x6f6d_6567_615f_6c69;
const RANDOM_ELEMENTS: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum SubmoduleSearch {
    ProperSubmodule { subspace: Subspace },
    Irreducible,
    Inconclusive,
}

/// Smallest subspace containing `v` and closed under every matrix in `gens`.
pub fn spin(gens: &[Matrix], v: &[Scalar]) -> Subspace {
    let n = v.len();
    let mut space = Subspace::span(n, &[v.to_vec()]).expect("vector length");
    let mut frontier = vec![v.to_vec()];
    while let Some(w) = frontier.pop() {
        for g in gens {
            let img = g.mul_vec(&w);
            if !space.contains_vector(&img).expect("vector length") {
                space = space.sum(&Subspace::span(n, std::slice::from_ref(&img)).expect("vector length")).unwrap();
                frontier.push(img);
            }
        }
    }
    space
}

/// Deterministic sequence of elements of the enveloping algebra: the
/// generators, pairwise sums and differences, then fixed-seed random
/// combinations of generators and their pairwise products.
fn enveloping_elements(rho: &[Matrix]) -> Vec<Matrix> {
    let mut out: Vec<Matrix> = rho.to_vec();
    for i in 0..rho.len() {
        for j in i + 1..rho.len() {
            out.push(&rho[i] + &rho[j]);
            out.push(&rho[i] - &rho[j]);
        }
    }
    let Some(first) = rho.first() else {
        return out;
    };
    let m = first.rows();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..RANDOM_ELEMENTS {
        let mut theta = Matrix::zeros(m, m);
        for r in rho {
            let c: i64 = rng.gen_range(-2..=2);
            if c != 0 {
                theta = &theta + &r.scale(&Scalar::from_int(c));
            }
        }
        for a in rho {
            for b in rho {
                let c: i64 = rng.gen_range(-2..=2);
                if c != 0 {
                    theta = &theta + &(a * b).scale(&Scalar::from_int(c));
                }
            }
        }
        out.push(theta);
    }
    out
}

/// Meataxe-style search. `Irreducible` is returned only with a Norton
/// certificate: some `θ − λ` has a one-dimensional kernel whose spin, and
/// the spin of its transpose kernel under the transposed action, are both
/// the whole space.
pub fn find_submodule(r: &Representation) -> SubmoduleSearch {
    let m = r.dim();
    if m == 0 {
        return SubmoduleSearch::Inconclusive;
    }
    if m == 1 {
        return SubmoduleSearch::Irreducible;
    }
    let gens = r.rho();
    let transposed: Vec<Matrix> = gens.iter().map(Matrix::transpose).collect();
    for theta in enveloping_elements(gens) {
        let Ok(split) = gaussian_roots(&theta.char_poly()) else {
            continue;
        };
        for (lambda, _) in split.roots {
            let shifted = &theta - &Matrix::scalar(m, &lambda);
            let kernel = nullspace(&shifted);
            for v in kernel.basis_vectors() {
                let s = spin(gens, &v);
                if s.dim() < m {
                    return SubmoduleSearch::ProperSubmodule { subspace: s };
                }
            }
            let dual = nullspace(&shifted.transpose());
            for w in dual.basis_vectors() {
                let s = spin(&transposed, &w);
                if s.dim() < m {
                    return SubmoduleSearch::ProperSubmodule {
                        subspace: s.annihilator(),
                    };
                }
            }
            if kernel.dim() == 1 {
                return SubmoduleSearch::Irreducible;
            }
        }
    }
    SubmoduleSearch::Inconclusive
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub subspace: Subspace,
    pub module: Representation,
    /// The endomorphism algebra is one-dimensional.
    pub certified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub summands: Vec<Summand>,
    /// Every summand is certified indecomposable.
    pub certified: bool,
}

/// Splits along generalized eigenspaces of module endomorphisms.
pub fn fitting_decompose(r: &Representation) -> Result<Decomposition> {
    let mut summands = Vec::new();
    split_rec(r, &Subspace::full(r.dim()), &mut summands)?;
    summands.sort_by(|a: &Summand, b: &Summand| a.subspace.canonical_cmp(&b.subspace));
    let certified = summands.iter().all(|s| s.certified);
    Ok(Decomposition { summands, certified })
}

/// `sub` is the summand's RREF basis expressed in the top-level module;
/// `module` is the action in that basis.
fn split_rec(module: &Representation, sub: &Subspace, out: &mut Vec<Summand>) -> Result<()> {
    let m = module.dim();
    let ends: Vec<Matrix> = intertwiners(module, module)
        .basis_vectors()
        .into_iter()
        .map(|v| Matrix::new(m, m, v))
        .collect();
    if m <= 1 || ends.len() <= 1 {
        out.push(Summand {
            subspace: sub.clone(),
            module: module.clone(),
            certified: m >= 1 && ends.len() == 1,
        });
        return Ok(());
    }
    for f in endomorphism_candidates(&ends) {
        let Some(parts) = primary_split(&f) else {
            continue;
        };
        for part in parts {
            debug_assert!(is_submodule(&part, module)?);
            let piece = module.restrict(&part)?.expect("primary components of endomorphisms are submodules");
            // Coordinates of the part relative to the top-level module.
            let lifted: Vec<Vec<Scalar>> = part.basis_vectors().iter().map(|c| sub.vector(c)).collect();
            let lifted_space = Subspace::span(sub.ambient(), &lifted)?;
            // Re-express the piece in the RREF basis of the lifted space.
            let change = basis_change(&part, sub, &lifted_space);
            split_rec(&piece.conjugate(&change)?, &lifted_space, out)?;
        }
        return Ok(());
    }
    out.push(Summand {
        subspace: sub.clone(),
        module: module.clone(),
        certified: false,
    });
    Ok(())
}

/// Matrix taking coordinates in `part`'s basis (inside `sub`) to coordinates
/// in the RREF basis of `lifted`.
fn basis_change(part: &Subspace, sub: &Subspace, lifted: &Subspace) -> Matrix {
    let k = part.dim();
    let mut s = Matrix::zeros(k, k);
    for (j, c) in part.basis_vectors().iter().enumerate() {
        let coords = lifted.coordinates(&sub.vector(c)).unwrap().expect("vector of the lifted span");
        for (i, x) in coords.into_iter().enumerate() {
            s[(i, j)] = x;
        }
    }
    s
}

fn endomorphism_candidates(ends: &[Matrix]) -> Vec<Matrix> {
    let mut out: Vec<Matrix> = ends.to_vec();
    for i in 0..ends.len() {
        for j in i + 1..ends.len() {
            out.push(&ends[i] + &ends[j]);
            out.push(&ends[i] - &ends[j]);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    let m = ends[0].rows();
    for _ in 0..RANDOM_ELEMENTS / 2 {
        let mut f = Matrix::zeros(m, m);
        for e in ends {
            let c: i64 = rng.gen_range(-2..=2);
            if c != 0 {
                f = &f + &e.scale(&Scalar::from_int(c));
            }
        }
        out.push(f);
    }
    out
}

/// Primary decomposition of the space under `f` when it has at least two
/// coprime factors visible over Q(i): generalized eigenspaces plus the
/// kernel of the nonsplit part.
fn primary_split(f: &Matrix) -> Option<Vec<Subspace>> {
    let m = f.rows();
    let split = gaussian_roots(&f.char_poly()).ok()?;
    let nonsplit = split.nonsplit.degree().unwrap_or(0) > 0;
    if split.roots.len() + usize::from(nonsplit) < 2 {
        return None;
    }
    let mut parts: Vec<Subspace> = split
        .roots
        .iter()
        .map(|(lambda, _)| nullspace(&(f - &Matrix::scalar(m, lambda)).pow(m as u32)))
        .collect();
    if nonsplit {
        parts.push(nullspace(&f.eval_poly(&split.nonsplit).pow(m as u32)));
    }
    Some(parts)
}
