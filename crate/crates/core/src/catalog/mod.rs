//! Built-in algebras. Every entry is validated before it is returned.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{solve_affine, Matrix};
use crate::omega::OmegaAlgebra;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub params: &'static [&'static str],
    pub basis: &'static str,
    pub summary: &'static str,
}

const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "L1",
        params: &[],
        basis: "x, y, z",
        summary: "[x,y]=y, [y,z]=z, [x,z]=0, omega(x,y)=1",
    },
    CatalogEntry {
        name: "L2",
        params: &[],
        basis: "x, y, z",
        summary: "[x,z]=y, [y,z]=z, [x,y]=0, omega(x,z)=1",
    },
    CatalogEntry {
        name: "A",
        params: &["alpha"],
        basis: "x, y, z",
        summary: "[x,y]=x+alpha z, [x,z]=y-z, [y,z]=z, omega(x,y)=-1",
    },
    CatalogEntry {
        name: "B",
        params: &[],
        basis: "x, y, z",
        summary: "[x,y]=z-x, [x,z]=y, [y,z]=z, omega(x,z)=2",
    },
    CatalogEntry {
        name: "C",
        params: &["alpha (nonzero)"],
        basis: "x, y, z",
        summary: "[y,x]=alpha x, [z,x]=y, [y,z]=z, omega(z,x)=1+alpha",
    },
    CatalogEntry {
        name: "Btilde",
        params: &[],
        basis: "x, y, z, e",
        summary: "[e,x]=-2e, [x,y]=y, [x,z]=y+z, [y,z]=x, omega(y,z)=2",
    },
    CatalogEntry {
        name: "sl2",
        params: &[],
        basis: "e1, e2, e3",
        summary: "[e1,e2]=-e1, [e1,e3]=2e2, [e2,e3]=-e3",
    },
    CatalogEntry {
        name: "sl",
        params: &["n"],
        basis: "off-diagonal Ei_j row by row, then Hi = Ei_i - Ei+1_i+1",
        summary: "traceless n x n matrices",
    },
    CatalogEntry {
        name: "gl",
        params: &["n"],
        basis: "Ei_j row by row",
        summary: "[Eij,Ekl] = delta(j,k) Eil - delta(l,i) Ekj",
    },
    CatalogEntry {
        name: "heisenberg",
        params: &["n"],
        basis: "x1..xn, y1..yn, z",
        summary: "[xi,yi]=z",
    },
    CatalogEntry {
        name: "nonabelian2",
        params: &[],
        basis: "y, z",
        summary: "[y,z]=z",
    },
    CatalogEntry {
        name: "abelian",
        params: &["n"],
        basis: "e1..en",
        summary: "all brackets zero",
    },
];

pub fn list() -> &'static [CatalogEntry] {
    ENTRIES
}

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn v(xs: &[i64]) -> Vec<Scalar> {
    xs.iter().map(|&x| s(x)).collect()
}

fn size_param(name: &str, p: &Scalar, min: usize) -> Result<usize> {
    let bad = || Error::Catalog(format!("{name}: n must be an integer >= {min}, got {p}"));
    if !p.is_gaussian_integer() || !p.im().is_zero() {
        return Err(bad());
    }
    let n: i64 = p.re().to_integer().try_into().map_err(|_| bad())?;
    if n < min as i64 {
        return Err(bad());
    }
    Ok(n as usize)
}

/// Looks up a catalog algebra; parameters are positional.
pub fn get(name: &str, params: &[Scalar]) -> Result<OmegaAlgebra> {
    let entry = ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::Catalog(format!("unknown algebra {name:?}")))?;
    if params.len() != entry.params.len() {
        return Err(Error::Catalog(format!(
            "{name} takes {} parameter(s), got {}",
            entry.params.len(),
            params.len()
        )));
    }
    let a = match name {
        "L1" => OmegaAlgebra::from_relations(
            &["x", "y", "z"],
            &[(0, 1, v(&[0, 1, 0])), (1, 2, v(&[0, 0, 1]))],
            &[(0, 1, s(1))],
        )?,
        "L2" => OmegaAlgebra::from_relations(
            &["x", "y", "z"],
            &[(0, 2, v(&[0, 1, 0])), (1, 2, v(&[0, 0, 1]))],
            &[(0, 2, s(1))],
        )?,
        "A" => {
            let alpha = params[0].clone();
            OmegaAlgebra::from_relations(
                &["x", "y", "z"],
                &[
                    (0, 1, vec![s(1), s(0), alpha]),
                    (0, 2, v(&[0, 1, -1])),
                    (1, 2, v(&[0, 0, 1])),
                ],
                &[(0, 1, s(-1))],
            )?
        }
        "B" => OmegaAlgebra::from_relations(
            &["x", "y", "z"],
            &[(0, 1, v(&[-1, 0, 1])), (0, 2, v(&[0, 1, 0])), (1, 2, v(&[0, 0, 1]))],
            &[(0, 2, s(2))],
        )?,
        "C" => {
            let alpha = params[0].clone();
            if alpha.is_zero() {
                return Err(Error::Catalog("C requires a nonzero parameter".into()));
            }
            // [y,x] = αx, [z,x] = y, ω(z,x) = 1 + α
            OmegaAlgebra::from_relations(
                &["x", "y", "z"],
                &[
                    (1, 0, vec![alpha.clone(), s(0), s(0)]),
                    (2, 0, v(&[0, 1, 0])),
                    (1, 2, v(&[0, 0, 1])),
                ],
                &[(2, 0, &s(1) + &alpha)],
            )?
        }
        "Btilde" => OmegaAlgebra::from_relations(
            &["x", "y", "z", "e"],
            &[
                (3, 0, v(&[0, 0, 0, -2])),
                (0, 1, v(&[0, 1, 0, 0])),
                (0, 2, v(&[0, 1, 1, 0])),
                (1, 2, v(&[1, 0, 0, 0])),
            ],
            &[(1, 2, s(2))],
        )?,
        "sl2" => OmegaAlgebra::from_relations(
            &["e1", "e2", "e3"],
            &[(0, 1, v(&[-1, 0, 0])), (0, 2, v(&[0, 2, 0])), (1, 2, v(&[0, 0, -1]))],
            &[],
        )?,
        "gl" => gl(size_param(name, &params[0], 1)?)?,
        "sl" => sl(size_param(name, &params[0], 2)?)?,
        "heisenberg" => heisenberg(size_param(name, &params[0], 1)?)?,
        "nonabelian2" => OmegaAlgebra::from_relations(&["y", "z"], &[(0, 1, v(&[0, 1]))], &[])?,
        "abelian" => {
            let n = size_param(name, &params[0], 0)?;
            let labels: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
            let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
            OmegaAlgebra::from_relations(&refs, &[], &[])?
        }
        _ => unreachable!("entry table and constructors agree"),
    };
    a.checked()
}

/// `[E_ij, E_kl] = δ_jk E_il − δ_li E_kj`, with `E_ij` at index `i·n + j`.
fn gl_bracket(n: usize, (i, j): (usize, usize), (k, l): (usize, usize)) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); n * n];
    if j == k {
        out[i * n + l] += &s(1);
    }
    if l == i {
        out[k * n + j] -= &s(1);
    }
    out
}

fn gl(n: usize) -> Result<OmegaAlgebra> {
    let labels: Vec<String> = (0..n * n).map(|p| format!("E{}_{}", p / n + 1, p % n + 1)).collect();
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let mut brackets = Vec::new();
    for p in 0..n * n {
        for q in p + 1..n * n {
            brackets.push((p, q, gl_bracket(n, (p / n, p % n), (q / n, q % n))));
        }
    }
    OmegaAlgebra::from_relations(&refs, &brackets, &[])
}

fn sl(n: usize) -> Result<OmegaAlgebra> {
    // Columns of `embed` are the sl basis vectors written in gl coordinates.
    let mut labels = Vec::new();
    let mut cols: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                labels.push(format!("E{}_{}", i + 1, j + 1));
                let mut c = vec![Scalar::zero(); n * n];
                c[i * n + j] = s(1);
                cols.push(c);
            }
        }
    }
    for i in 0..n - 1 {
        labels.push(format!("H{}", i + 1));
        let mut c = vec![Scalar::zero(); n * n];
        c[i * n + i] = s(1);
        c[(i + 1) * n + i + 1] = s(-1);
        cols.push(c);
    }
    let d = cols.len();
    let embed = Matrix::from_rows(cols.clone())?.transpose();
    let glb = |u: &[Scalar], w: &[Scalar]| -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); n * n];
        for (p, a) in u.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (q, b) in w.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (o, x) in out.iter_mut().zip(gl_bracket(n, (p / n, p % n), (q / n, q % n))) {
                    *o += &(&ab * &x);
                }
            }
        }
        out
    };
    let mut brackets = Vec::new();
    for p in 0..d {
        for q in p + 1..d {
            let (coords, _) = solve_affine(&embed, &glb(&cols[p], &cols[q]))
                .ok_or_else(|| Error::Catalog("sl bracket left the traceless matrices".into()))?;
            brackets.push((p, q, coords));
        }
    }
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    OmegaAlgebra::from_relations(&refs, &brackets, &[])
}

fn heisenberg(n: usize) -> Result<OmegaAlgebra> {
    let mut labels: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    labels.extend((1..=n).map(|i| format!("y{i}")));
    labels.push("z".into());
    let d = 2 * n + 1;
    let brackets = (0..n)
        .map(|i| {
            let mut z = vec![Scalar::zero(); d];
            z[2 * n] = s(1);
            (i, n + i, z)
        })
        .collect::<Vec<_>>();
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    OmegaAlgebra::from_relations(&refs, &brackets, &[])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::omega::is_soluble;

    fn all() -> Vec<(String, OmegaAlgebra)> {
        let mut out = Vec::new();
        for e in list() {
            let params: Vec<Vec<Scalar>> = match e.name {
                "A" => vec![vec![s(1)], vec![Scalar::i()], vec![s(0)]],
                "C" => vec![vec![s(2)], vec![s(3)]],
                "sl" => vec![vec![s(2)], vec![s(3)]],
                "gl" | "heisenberg" | "abelian" => vec![vec![s(1)], vec![s(2)], vec![s(3)]],
                _ => vec![vec![]],
            };
            for p in params {
                out.push((format!("{}{:?}", e.name, p), get(e.name, &p).unwrap()));
            }
        }
        out
    }

    #[test]
    fn every_entry_validates() {
        for (name, a) in all() {
            let r = a.validate();
            assert!(r.valid, "{name}");
            let lie = !["L1", "L2", "A", "B", "C", "Btilde"].iter().any(|p| name.starts_with(p) && !name.starts_with("abelian"));
            assert_eq!(r.is_lie, lie, "{name}");
        }
    }

    #[test]
    fn printed_values() {
        let l1 = get("L1", &[]).unwrap();
        assert_eq!(l1.omega_matrix()[(0, 1)], s(1));
        assert!(l1.omega_matrix()[(0, 2)].is_zero() && l1.omega_matrix()[(1, 2)].is_zero());
        let c2 = get("C", &[s(2)]).unwrap();
        assert_eq!(c2.omega_matrix()[(2, 0)], s(3));
        let h1 = get("heisenberg", &[s(1)]).unwrap();
        let nonzero: Vec<(usize, usize)> = (0..3)
            .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
            .filter(|&(i, j)| h1.bracket_basis(i, j).iter().any(|c| !c.is_zero()))
            .collect();
        assert_eq!(nonzero, vec![(0, 1)]);
        assert_eq!(h1.bracket_basis(0, 1), &v(&[0, 0, 1])[..]);
        assert_eq!(get("sl", &[s(3)]).unwrap().dim(), 8);
        assert_eq!(get("gl", &[s(2)]).unwrap().dim(), 4);
    }

    #[test]
    fn rejected_requests() {
        assert!(get("C", &[s(0)]).is_err());
        assert!(get("L1", &[s(1)]).is_err());
        assert!(get("A", &[]).is_err());
        assert!(get("nope", &[]).is_err());
        assert!(get("gl", &[Scalar::from_ratio(1, 2)]).is_err());
    }

    #[test]
    fn solubility_flags() {
        for (name, p, soluble) in [
            ("L1", vec![], true),
            ("L2", vec![], true),
            ("nonabelian2", vec![], true),
            ("heisenberg", vec![s(2)], true),
            ("abelian", vec![s(3)], true),
            ("A", vec![s(1)], false),
            ("sl2", vec![], false),
        ] {
            assert_eq!(is_soluble(&get(name, &p).unwrap()).soluble, soluble, "{name}");
        }
        let a1 = is_soluble(&get("A", &[s(1)]).unwrap());
        assert_eq!(a1.derived_series[0].dim(), 3);
        assert_eq!(is_soluble(&get("abelian", &[s(3)]).unwrap()).derived_series.len(), 1);
    }
}
