use serde::{Deserialize, Serialize};

use super::OmegaAlgebra;
use crate::linalg::Subspace;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolubilityReport {
    pub soluble: bool,
    /// `[L,L] ⊇ [[L,L],[L,L]] ⊇ …`, ending at zero or at the first repeat.
    pub derived_series: Vec<Subspace>,
}

pub fn is_soluble(a: &OmegaAlgebra) -> SolubilityReport {
    let mut cur = Subspace::full(a.dim());
    let mut series = Vec::new();
    loop {
        let next = a.bracket_span(&cur, &cur);
        let stable = next.dim() == cur.dim();
        let zero = next.is_zero();
        if !stable || series.is_empty() {
            series.push(next.clone());
        }
        if zero || stable {
            return SolubilityReport {
                soluble: zero,
                derived_series: series,
            };
        }
        cur = next;
    }
}
