mod common;

use std::sync::Arc;

use common::{config, scalar, small_int};
use num_traits::Zero;
use omega_lie::polysolve::{groebner, is_inconsistent, reduce, Monomial};
use omega_lie::{MultiPoly, PolySystem, Scalar};
use proptest::prelude::*;

const VARS: usize = 3;
const BUDGET: usize = 20_000;

fn vars() -> Arc<[String]> {
    ["a", "b", "c"].iter().map(|v| v.to_string()).collect()
}

/// Up to four terms of total degree at most two.
fn poly() -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec((proptest::collection::vec(0u32..=2, VARS), small_int()), 1..=4).prop_map(|terms| {
        let terms = terms
            .into_iter()
            .map(|(mut e, c)| {
                while e.iter().sum::<u32>() > 2 {
                    let i = e.iter().position(|&x| x > 0).unwrap();
                    e[i] -= 1;
                }
                (Monomial::from_exponents(&e), c)
            })
            .collect();
        MultiPoly::new(vars(), terms).unwrap()
    })
}

/// Shifts each polynomial so that it vanishes at `point`.
fn planted(polys: Vec<MultiPoly>, point: &[Scalar]) -> PolySystem {
    let shifted = polys
        .into_iter()
        .map(|p| {
            let v = p.eval(point).unwrap();
            p.sub(&MultiPoly::constant(vars(), v)).unwrap()
        })
        .collect();
    PolySystem::new(vars(), shifted).unwrap()
}

fn monomial_times(p: &MultiPoly, m: &Monomial, c: &Scalar) -> MultiPoly {
    MultiPoly::new(vars(), p.terms().iter().map(|(t, a)| (t.mul(m), a * c)).collect()).unwrap()
}

fn s_poly(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let (mf, cf) = f.leading().unwrap();
    let (mg, cg) = g.leading().unwrap();
    let l = mf.lcm(mg);
    let a = monomial_times(f, &mf.quotient_of(&l), &cf.inv().unwrap());
    let b = monomial_times(g, &mg.quotient_of(&l), &cg.inv().unwrap());
    a.sub(&b).unwrap()
}

proptest! {
    #![proptest_config(config(100))]

    #[test]
    fn groebner_is_idempotent(polys in proptest::collection::vec(poly(), 1..=3)) {
        let sys = PolySystem::new(vars(), polys).unwrap();
        let gb = groebner(&sys, BUDGET).unwrap();
        prop_assert_eq!(groebner(&gb, BUDGET).unwrap(), gb.clone());
        for p in sys.polys() {
            prop_assert!(reduce(p, &gb).unwrap().is_zero());
        }
    }

    #[test]
    fn planted_solutions_survive(
        polys in proptest::collection::vec(poly(), 1..=3),
        point in proptest::collection::vec(scalar(), VARS),
    ) {
        let sys = planted(polys, &point);
        let gb = groebner(&sys, BUDGET).unwrap();
        prop_assert!(!is_inconsistent(&gb));
        for g in gb.polys() {
            prop_assert!(g.eval(&point).unwrap().is_zero());
        }
    }

    #[test]
    fn s_polynomials_reduce_to_zero(polys in proptest::collection::vec(poly(), 1..=3)) {
        let gb = groebner(&PolySystem::new(vars(), polys).unwrap(), BUDGET).unwrap();
        let g = gb.polys();
        for i in 0..g.len() {
            prop_assert_eq!(&g[i].leading().unwrap().1, &Scalar::from_int(1));
            for j in i + 1..g.len() {
                prop_assert!(reduce(&s_poly(&g[i], &g[j]), &gb).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn budget_is_respected(polys in proptest::collection::vec(poly(), 2..=3)) {
        let sys = PolySystem::new(vars(), polys).unwrap();
        // A zero budget either finishes without S-pair reductions or reports exhaustion.
        match groebner(&sys, 0) {
            Ok(gb) => prop_assert_eq!(gb, groebner(&sys, BUDGET).unwrap()),
            Err(e) => {
                let exhausted = matches!(e, omega_lie::Error::BudgetExhausted { .. });
                prop_assert!(exhausted);
            }
        }
    }
}
