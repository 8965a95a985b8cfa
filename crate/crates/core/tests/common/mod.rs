#![allow(dead_code)]

use omega_lie::catalog::get;
use omega_lie::{Matrix, OmegaAlgebra, Representation, Scalar};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

pub fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(0x6f6d_6567_615f_6c69),
        failure_persistence: None,
        ..Config::default()
    }
}

pub fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

pub fn rational() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| Scalar::from_ratio(n, d))
}

pub fn scalar() -> impl Strategy<Value = Scalar> {
    (rational(), rational()).prop_map(|(a, b)| &a + &(&b * &Scalar::i()))
}

pub fn small_int() -> impl Strategy<Value = Scalar> {
    (-3i64..=3).prop_map(Scalar::from_int)
}

pub fn vector(n: usize) -> impl Strategy<Value = Vec<Scalar>> {
    proptest::collection::vec(scalar(), n)
}

pub fn int_vector(n: usize) -> impl Strategy<Value = Vec<Scalar>> {
    proptest::collection::vec(small_int(), n)
}

pub fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(small_int(), rows * cols).prop_map(move |v| Matrix::new(rows, cols, v))
}

/// Unit lower times unit upper triangular: always invertible.
pub fn invertible(n: usize) -> impl Strategy<Value = Matrix> {
    (matrix(n, n), matrix(n, n)).prop_map(move |(a, b)| {
        let mut lo = Matrix::identity(n);
        let mut up = Matrix::identity(n);
        for i in 0..n {
            for j in 0..n {
                if i > j {
                    lo[(i, j)] = a[(i, j)].clone();
                } else if i < j {
                    up[(i, j)] = b[(i, j)].clone();
                }
            }
        }
        &lo * &up
    })
}

pub fn l1() -> OmegaAlgebra {
    get("L1", &[]).unwrap()
}

pub fn l2() -> OmegaAlgebra {
    get("L2", &[]).unwrap()
}

fn two_dim(a: OmegaAlgebra, x: [[Scalar; 2]; 2], y: [[Scalar; 2]; 2]) -> Representation {
    let m = |r: [[Scalar; 2]; 2]| Matrix::from_rows(r.iter().map(|row| row.to_vec()).collect()).unwrap();
    Representation::new(a, vec![m(x), m(y), Matrix::zeros(2, 2)]).unwrap()
}

/// L1-module with `z = 0`, `y = [[1,1],[0,1]]`, `x = [[c+1,b],[0,c]]`.
pub fn l1_family1(b: &Scalar, c: &Scalar) -> Representation {
    let one = s(1);
    let zero = s(0);
    two_dim(
        l1(),
        [[c + &one, b.clone()], [zero.clone(), c.clone()]],
        [[one.clone(), one.clone()], [zero, one]],
    )
}

/// L1-module with `z = 0`, `y = 1`, `x = [[c,1],[0,c]]`.
pub fn l1_family2(c: &Scalar) -> Representation {
    let (one, zero) = (s(1), s(0));
    two_dim(
        l1(),
        [[c.clone(), one.clone()], [zero.clone(), c.clone()]],
        [[one.clone(), zero.clone()], [zero, one]],
    )
}

/// One-dimensional L1-module `(c, 1, 0)`.
pub fn l1_scalar(c: &Scalar) -> Representation {
    let rho = [c.clone(), s(1), s(0)].iter().map(|v| Matrix::scalar(1, v)).collect();
    Representation::new(l1(), rho).unwrap()
}

/// One-dimensional L2-module `(c, 1, 0)`.
pub fn l2_scalar(c: &Scalar) -> Representation {
    let rho = [c.clone(), s(1), s(0)].iter().map(|v| Matrix::scalar(1, v)).collect();
    Representation::new(l2(), rho).unwrap()
}

/// L2-module with `z = 0`, `y = 1` and upper-triangular `x = [[a,b],[0,c]]`.
pub fn l2_triangular(a: &Scalar, b: &Scalar, c: &Scalar) -> Representation {
    let (one, zero) = (s(1), s(0));
    two_dim(
        l2(),
        [[a.clone(), b.clone()], [zero.clone(), c.clone()]],
        [[one.clone(), zero.clone()], [zero, one]],
    )
}
