use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::Matrix;
use crate::omega::OmegaAlgebra;
use crate::polysolve::{MultiPoly, PolySystem};

/// Known entries of the action matrices; keys are `(element, row, col)`, zero-based.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FixedAssignment {
    entries: BTreeMap<(usize, usize, usize), Scalar>,
}

impl FixedAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn fix_entry(&mut self, element: usize, row: usize, col: usize, value: Scalar) -> &mut Self {
        self.entries.insert((element, row, col), value);
        self
    }

    pub fn fix_matrix(&mut self, element: usize, m: &Matrix) -> &mut Self {
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                self.entries.insert((element, r, c), m[(r, c)].clone());
            }
        }
        self
    }

    pub fn get(&self, element: usize, row: usize, col: usize) -> Option<&Scalar> {
        self.entries.get(&(element, row, col))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Reads the JSON form against the algebra's basis labels.
    pub fn from_file(a: &OmegaAlgebra, file: FixedFile) -> Result<Self> {
        let index = |label: &str| {
            a.index_of(label)
                .ok_or_else(|| Error::Format(format!("unknown basis element {label:?}")))
        };
        let mut out = FixedAssignment::new();
        for (label, m) in file.matrices {
            out.fix_matrix(index(&label)?, &m);
        }
        for e in file.entries {
            if e.row == 0 || e.col == 0 {
                return Err(Error::Format(format!(
                    "fixed entry for {}: rows and columns are numbered from 1",
                    e.element
                )));
            }
            out.fix_entry(index(&e.element)?, e.row - 1, e.col - 1, e.value);
        }
        Ok(out)
    }
}

/// `{"matrices": {label: matrix}, "entries": [{"element", "row", "col", "value"}]}`
/// with one-based rows and columns.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct FixedFile {
    #[serde(default)]
    pub matrices: BTreeMap<String, Matrix>,
    #[serde(default)]
    pub entries: Vec<FixedEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FixedEntry {
    pub element: String,
    pub row: usize,
    pub col: usize,
    pub value: Scalar,
}

/// `{label}_{row}_{col}` with one-based row and column.
pub fn variable_name(a: &OmegaAlgebra, element: usize, row: usize, col: usize) -> String {
    format!("{}_{}_{}", a.basis_labels()[element], row + 1, col + 1)
}

/// The module axiom on every basis pair as polynomial equations in the
/// unfixed entries of the `m×m` action matrices.
pub fn module_structure_system(a: &OmegaAlgebra, m: usize, fixed: &FixedAssignment) -> Result<PolySystem> {
    let n = a.dim();
    for &(e, r, c) in fixed.entries.keys() {
        if e >= n || r >= m || c >= m {
            return Err(Error::OutOfRange(format!(
                "fixed entry ({e}, {r}, {c}) outside {n} matrices of size {m}"
            )));
        }
    }
    let mut names = Vec::new();
    let mut slot = HashMap::new();
    for e in 0..n {
        for r in 0..m {
            for c in 0..m {
                if fixed.get(e, r, c).is_none() {
                    slot.insert((e, r, c), names.len());
                    names.push(variable_name(a, e, r, c));
                }
            }
        }
    }
    let vars: Arc<[String]> = names.into();
    let entry = |e: usize, r: usize, c: usize| -> MultiPoly {
        match fixed.get(e, r, c) {
            Some(v) => MultiPoly::constant(vars.clone(), v.clone()),
            None => MultiPoly::var(vars.clone(), slot[&(e, r, c)]),
        }
    };
    let mut polys = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let bracket = a.bracket_basis(i, j);
            for r in 0..m {
                for c in 0..m {
                    // ρ([eᵢ,eⱼ]) − ρᵢρⱼ + ρⱼρᵢ − ω(eᵢ,eⱼ)·1, entry (r, c)
                    let mut p = MultiPoly::zero(vars.clone());
                    for (k, coef) in bracket.iter().enumerate() {
                        if !coef.is_zero() {
                            p = p.add(&entry(k, r, c).scale(coef))?;
                        }
                    }
                    for s in 0..m {
                        p = p.sub(&entry(i, r, s).mul(&entry(j, s, c))?)?;
                        p = p.add(&entry(j, r, s).mul(&entry(i, s, c))?)?;
                    }
                    if r == c {
                        let w = &a.omega_matrix()[(i, j)];
                        if !w.is_zero() {
                            p = p.sub(&MultiPoly::constant(vars.clone(), w.clone()))?;
                        }
                    }
                    if !p.is_zero() {
                        polys.push(p);
                    }
                }
            }
        }
    }
    PolySystem::new(vars, polys)
}
