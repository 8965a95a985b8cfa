//! Buchberger's algorithm with the Gebauer–Möller pair criteria and the
//! normal selection strategy.

use std::sync::Arc;

use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::{from_terms_repr, merge_sub, terms_repr, Monomial, MultiPoly, Terms};
use crate::error::{Error, Result};
use crate::field::Scalar;

/// Default cap on S-pair reductions.
pub const DEFAULT_BUDGET: usize = 100_000;

/// Polynomials over one shared, ordered variable list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolySystem {
    vars: Arc<[String]>,
    polys: Vec<MultiPoly>,
}

impl PolySystem {
    pub fn new(vars: Arc<[String]>, polys: Vec<MultiPoly>) -> Result<Self> {
        for p in &polys {
            if p.vars() != &vars {
                return Err(Error::VariableMismatch(format!(
                    "polynomial over {:?} in system over {:?}",
                    p.vars(),
                    vars
                )));
            }
        }
        Ok(PolySystem { vars, polys })
    }

    /// Parses each string with [`MultiPoly::parse`].
    pub fn parse(vars: &[&str], polys: &[&str]) -> Result<Self> {
        let vars: Arc<[String]> = vars.iter().map(|v| v.to_string()).collect();
        let polys = polys
            .iter()
            .map(|p| MultiPoly::parse(vars.clone(), p))
            .collect::<Result<_>>()?;
        PolySystem::new(vars, polys)
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn polys(&self) -> &[MultiPoly] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Gröbner basis (monic, sorted by decreasing leading monomial).
pub fn groebner(sys: &PolySystem, budget: usize) -> Result<PolySystem> {
    let vars = sys.vars.clone();
    let mut basis: Vec<Terms> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut inputs: Vec<Terms> = sys
        .polys
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| monic_terms(p.terms().to_vec()))
        .collect();
    inputs.sort_by(|a, b| a[0].0.cmp(&b[0].0));
    for p in inputs {
        if p[0].0.is_one() {
            return Ok(unit_basis(vars));
        }
        let reduced = reduce_terms(p, &basis, &active);
        if reduced.is_empty() {
            continue;
        }
        if reduced[0].0.is_one() {
            return Ok(unit_basis(vars));
        }
        update(&mut basis, &mut active, &mut pairs, monic_terms(reduced));
    }

    let mut spent = 0usize;
    while !pairs.is_empty() {
        // Normal strategy: smallest lcm first; ties broken by insertion order.
        let (k, _) = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| a.lcm.cmp(&b.lcm))
            .unwrap();
        let pair = pairs.remove(k);
        if spent == budget {
            return Err(Error::BudgetExhausted { budget });
        }
        spent += 1;
        let s = s_poly(&basis[pair.i], &basis[pair.j], &pair.lcm);
        let h = reduce_terms(s, &basis, &active);
        if h.is_empty() {
            continue;
        }
        if h[0].0.is_one() {
            return Ok(unit_basis(vars));
        }
        update(&mut basis, &mut active, &mut pairs, monic_terms(h));
    }

    // Minimal basis: drop elements whose leading monomial is divisible by another's.
    let mut minimal: Vec<Terms> = Vec::new();
    let mut live: Vec<Terms> = basis
        .into_iter()
        .zip(active)
        .filter_map(|(p, a)| a.then_some(p))
        .collect();
    live.sort_by(|a, b| a[0].0.cmp(&b[0].0));
    for p in live {
        if !minimal.iter().any(|q| q[0].0.divides(&p[0].0)) {
            minimal.push(p);
        }
    }
    // Interreduce the tails.
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Terms> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, p)| p.clone())
            .collect();
        let flags = vec![true; others.len()];
        let head = minimal[k][0].clone();
        let tail = reduce_terms(minimal[k][1..].to_vec(), &others, &flags);
        let mut p = vec![head];
        p.extend(tail);
        reduced.push(p);
    }
    reduced.sort_by(|a, b| b[0].0.cmp(&a[0].0));
    let polys = reduced
        .into_iter()
        .map(|t| MultiPoly::from_sorted(vars.clone(), t))
        .collect();
    Ok(PolySystem { vars, polys })
}

/// The basis is exactly `{1}`: no common zero over any extension field.
pub fn is_inconsistent(gb: &PolySystem) -> bool {
    gb.polys.len() == 1 && gb.polys[0].is_unit()
}

/// Normal form of `p` modulo a Gröbner basis; zero iff `p` is in the ideal.
pub fn reduce(p: &MultiPoly, gb: &PolySystem) -> Result<MultiPoly> {
    if p.vars() != &gb.vars {
        return Err(Error::VariableMismatch(format!(
            "polynomial over {:?}, basis over {:?}",
            p.vars(),
            gb.vars
        )));
    }
    let basis: Vec<Terms> = gb.polys.iter().map(|g| g.terms().to_vec()).collect();
    let flags = vec![true; basis.len()];
    Ok(MultiPoly::from_sorted(
        gb.vars.clone(),
        reduce_terms(p.terms().to_vec(), &basis, &flags),
    ))
}

fn unit_basis(vars: Arc<[String]>) -> PolySystem {
    let one = MultiPoly::constant(vars.clone(), Scalar::one());
    PolySystem {
        vars,
        polys: vec![one],
    }
}

fn monic_terms(mut t: Terms) -> Terms {
    let inv = t[0].1.inv().unwrap();
    if !inv.is_one() {
        for (_, c) in t.iter_mut() {
            *c = &*c * &inv;
        }
    }
    t
}

fn s_poly(f: &Terms, g: &Terms, lcm: &Monomial) -> Terms {
    // Both are monic.
    let mf = f[0].0.quotient_of(lcm);
    let mg = g[0].0.quotient_of(lcm);
    let fs = merge_sub(&[], &f[1..], &-Scalar::one(), Some(&mf));
    merge_sub(&fs, &g[1..], &Scalar::one(), Some(&mg))
}

/// Full reduction of `p` by the active basis elements.
fn reduce_terms(mut p: Terms, basis: &[Terms], active: &[bool]) -> Terms {
    let mut rem: Terms = Vec::new();
    while !p.is_empty() {
        let (lm, lc) = p[0].clone();
        let divisor = basis
            .iter()
            .zip(active)
            .find(|(g, &a)| a && g[0].0.divides(&lm));
        match divisor {
            Some((g, _)) => {
                let q = g[0].0.quotient_of(&lm);
                let c = &lc / &g[0].1;
                p = merge_sub(&p[1..], &g[1..], &c, Some(&q));
            }
            None => {
                rem.push(p.remove(0));
            }
        }
    }
    rem
}

/// Gebauer–Möller update: insert `h` and prune redundant pairs.
fn update(basis: &mut Vec<Terms>, active: &mut Vec<bool>, pairs: &mut Vec<Pair>, h: Terms) {
    let hn = basis.len();
    let lh = h[0].0.clone();
    let candidates: Vec<(usize, Monomial, bool)> = (0..hn)
        .filter(|&g| active[g])
        .map(|g| {
            let lg = &basis[g][0].0;
            (g, lh.lcm(lg), lh.coprime(lg))
        })
        .collect();

    // Chain criterion among the new pairs.
    let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
    for (idx, (g, lcm, coprime)) in candidates.iter().enumerate() {
        let dominated = |other: &(usize, Monomial, bool)| other.1.divides(lcm) && &other.1 != lcm;
        let later_equal_or_smaller = candidates[idx + 1..].iter().any(|o| o.1.divides(lcm));
        let earlier_kept = kept.iter().any(|o| o.1.divides(lcm));
        let strictly = candidates.iter().any(dominated);
        if *coprime || !(later_equal_or_smaller || earlier_kept || strictly) {
            kept.push((*g, lcm.clone(), *coprime));
        }
    }
    // Product criterion.
    let new_pairs: Vec<Pair> = kept
        .into_iter()
        .filter(|(_, _, coprime)| !coprime)
        .map(|(g, lcm, _)| Pair { i: g, j: hn, lcm })
        .collect();

    // Old pairs made redundant by h.
    pairs.retain(|p| {
        !(lh.divides(&p.lcm)
            && lh.lcm(&basis[p.i][0].0) != p.lcm
            && lh.lcm(&basis[p.j][0].0) != p.lcm)
    });
    pairs.extend(new_pairs);

    for g in 0..hn {
        if active[g] && lh.divides(&basis[g][0].0) {
            active[g] = false;
        }
    }
    basis.push(h);
    active.push(true);
}

#[derive(Serialize, Deserialize)]
struct SystemRepr {
    variables: Vec<String>,
    polys: Vec<Vec<(Vec<u32>, Scalar)>>,
}

impl Serialize for PolySystem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SystemRepr {
            variables: self.vars.to_vec(),
            polys: self.polys.iter().map(terms_repr).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PolySystem {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let r = SystemRepr::deserialize(deserializer)?;
        let vars: Arc<[String]> = r.variables.into();
        let polys = r
            .polys
            .into_iter()
            .map(|t| from_terms_repr(vars.clone(), t))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Ok(PolySystem { vars, polys })
    }
}
