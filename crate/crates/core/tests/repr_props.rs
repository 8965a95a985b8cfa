mod common;

use common::{config, int_vector, invertible, l1_family1, l1_family2, l1_scalar, l2_scalar, l2_triangular, rational, s, small_int, vector};
use num_traits::Zero;
use omega_lie::catalog::get;
use omega_lie::linalg::exterior::binomial;
use omega_lie::repr::{
    antisymmetrizer, cochain_defect, exterior_power, find_submodule, fitting_decompose, is_submodule, semidirect,
    tensor_module, weight_decomposition, SubmoduleSearch,
};
use omega_lie::{LinearForm, Matrix, OmegaAlgebra, Representation, Scalar};
use proptest::prelude::*;

fn l1_module() -> impl Strategy<Value = Representation> {
    (0u8..3, small_int(), small_int()).prop_map(|(kind, b, c)| match kind {
        0 => l1_family1(&b, &c),
        1 => l1_family2(&c),
        _ => l1_scalar(&c).direct_sum(&l1_scalar(&b)).unwrap(),
    })
}

fn a_module(alpha: &Scalar, copies: usize) -> Representation {
    let a = get("A", std::slice::from_ref(alpha)).unwrap();
    let rho = vec![Matrix::scalar(copies, &s(-1)), Matrix::zeros(copies, copies), Matrix::zeros(copies, copies)];
    Representation::new(a, rho).unwrap()
}

fn binom(n: usize, k: usize) -> Scalar {
    s(binomial(n, k) as i64)
}

/// `(M + c)^k v`
fn shifted_power(m: &Matrix, c: &Scalar, k: usize, v: &[Scalar]) -> Vec<Scalar> {
    let op = m + &Matrix::scalar(m.rows(), c);
    (0..k).fold(v.to_vec(), |acc, _| op.mul_vec(&acc))
}

/// Both sides of the binomial identity for `ad_h(u) = [u, h]`.
fn lemma_sides(d: &OmegaAlgebra, u: &[Scalar], v: &[Scalar], h: &[Scalar], alpha: &Scalar, beta: &Scalar, n: usize) -> (Vec<Scalar>, Vec<Scalar>) {
    let ad_h = -&d.ad_vec(h).unwrap();
    let dim = d.dim();
    let mut lhs = vec![Scalar::zero(); dim];
    for j in 0..=n {
        let a = shifted_power(&ad_h, alpha, n - j, u);
        let b = shifted_power(&ad_h, beta, j, v);
        let c = binom(n, j);
        for (l, x) in lhs.iter_mut().zip(d.bracket(&a, &b).unwrap()) {
            *l += &(&x * &c);
        }
    }
    let ab = alpha + beta;
    let mut rhs = shifted_power(&ad_h, &ab, n, &d.bracket(u, v).unwrap());
    if n > 0 {
        let coef = &(&s(n as i64) * &ab.pow(n as u32 - 1)) * &d.omega_form(u, v).unwrap();
        for (r, x) in rhs.iter_mut().zip(h) {
            *r -= &(&coef * x);
        }
    }
    (lhs, rhs)
}

proptest! {
    #![proptest_config(config(100))]

    #[test]
    fn binomial_identity_on_semidirect_products(
        m in l1_module(),
        u in vector(5),
        v in vector(5),
        hc in int_vector(3),
        alpha in rational(),
        beta in rational(),
        n in 0usize..=4,
    ) {
        let d = semidirect(&m).unwrap();
        // h in span{z, v1, v2}: abelian, z acts trivially on V and Ω(h, ·) = 0.
        let h = vec![s(0), s(0), hc[0].clone(), hc[1].clone(), hc[2].clone()];
        prop_assert!((0..5).all(|i| d.omega_form(&h, &omega_lie::linalg::unit_vector(5, i)).unwrap().is_zero()));
        let (lhs, rhs) = lemma_sides(&d, &u, &v, &h, &alpha, &beta, n);
        prop_assert_eq!(lhs, rhs);
        // α = 0, u in L, v in V.
        let u_l: Vec<Scalar> = u.iter().take(3).cloned().chain([s(0), s(0)]).collect();
        let v_v: Vec<Scalar> = [s(0), s(0), s(0)].into_iter().chain(v.iter().skip(3).cloned()).collect();
        let (lhs, rhs) = lemma_sides(&d, &u_l, &v_v, &h, &Scalar::zero(), &beta, n);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn weight_spaces_are_submodules(m in l1_module(), p in invertible(2), alpha_pick in 0u8..2, copies in 1usize..=3) {
        let conj = m.conjugate(&p).unwrap();
        prop_assert!(conj.validate().valid);
        let w = weight_decomposition(&conj, 2).unwrap();
        prop_assert!(w.all_submodules);
        for wt in &w.weights {
            prop_assert!(is_submodule(&wt.space, &conj).unwrap());
        }
        let alpha = if alpha_pick == 0 { s(1) } else { Scalar::i() };
        let am = a_module(&alpha, copies);
        prop_assert!(am.validate().valid);
        prop_assert!(weight_decomposition(&am, 2).unwrap().all_submodules);
    }

    #[test]
    fn certified_indecomposables_have_one_weight(m in l1_module(), p in invertible(2)) {
        let conj = m.conjugate(&p).unwrap();
        for summand in fitting_decompose(&conj).unwrap().summands {
            prop_assert!(is_submodule(&summand.subspace, &conj).unwrap());
            if summand.certified {
                prop_assert_eq!(weight_decomposition(&summand.module, 2).unwrap().weights.len(), 1);
            }
        }
    }

    #[test]
    fn two_dimensional_modules_are_reducible(
        m in l1_module(),
        abc in (small_int(), small_int(), small_int()),
        cs in (small_int(), small_int()),
        p in invertible(2),
    ) {
        let l2a = l2_triangular(&abc.0, &abc.1, &abc.2);
        let l2b = l2_scalar(&cs.0).direct_sum(&l2_scalar(&cs.1)).unwrap();
        for r in [m.clone(), m.conjugate(&p).unwrap(), l2a.conjugate(&p).unwrap(), l2b] {
            prop_assert!(r.validate().valid);
            match find_submodule(&r) {
                SubmoduleSearch::ProperSubmodule { subspace } => {
                    prop_assert!(subspace.dim() == 1 && is_submodule(&subspace, &r).unwrap());
                }
                other => prop_assert!(false, "expected a proper submodule, got {:?}", other),
            }
        }
    }

    #[test]
    fn tensor_and_exterior_constructions_are_modules(v in l1_module(), w in l1_module(), c0 in small_int(), k in 1usize..=2) {
        let lam = LinearForm::new(vec![c0, s(1), s(0)]);
        let t = tensor_module(&v, &w, &lam).unwrap();
        prop_assert!(t.validate().valid);
        let e = exterior_power(&v, k, &lam).unwrap();
        prop_assert!(e.validate().valid);
        let vv = tensor_module(&v, &v, &lam).unwrap();
        let e2 = exterior_power(&v, 2, &lam).unwrap();
        let anti = antisymmetrizer(v.dim());
        for (a, b) in vv.rho().iter().zip(e2.rho()) {
            prop_assert_eq!(a * &anti, &anti * b);
        }
    }

    #[test]
    fn cochain_defect_formula(m in l1_module(), f in int_vector(6), x in vector(3), y in vector(3), z in vector(3)) {
        let f = Matrix::new(2, 3, f);
        let d = cochain_defect(&f, &m, &x, &y, &z).unwrap();
        prop_assert!(d.agrees);
        prop_assert_eq!(d.defect, d.expected);
    }

    #[test]
    fn cochain_defect_vanishes_for_lie_algebras(f in int_vector(6), x in vector(3), y in vector(3), z in vector(3)) {
        let half = Scalar::from_ratio(1, 2);
        let rho = vec![
            Matrix::from_ints(&[&[0, 1], &[0, 0]]),
            Matrix::diag(&[half.clone(), -half]),
            Matrix::from_ints(&[&[0, 0], &[1, 0]]),
        ];
        let r = Representation::new(get("sl2", &[]).unwrap(), rho).unwrap();
        let d = cochain_defect(&Matrix::new(2, 3, f), &r, &x, &y, &z).unwrap();
        prop_assert!(d.agrees && d.defect.iter().all(Zero::is_zero));
    }
}
