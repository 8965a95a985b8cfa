//! Root extraction over Q(i).
//!
//! Candidates are quotients of Gaussian-integer divisors of the constant and
//! leading coefficients (rational root theorem in the UFD Z[i]); each is
//! tested by exact evaluation.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Scalar, UniPoly};
use crate::error::{Error, Result};

/// Result of [`gaussian_roots`]: `p = nonsplit · Π (t − λ)^m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSplit {
    /// Distinct roots in ascending canonical order with multiplicities.
    pub roots: Vec<(Scalar, usize)>,
    /// Cofactor with no root in Q(i); carries the leading coefficient of `p`.
    pub nonsplit: UniPoly,
}

impl RootSplit {
    pub fn splits(&self) -> bool {
        self.nonsplit.degree() == Some(0)
    }
}

pub fn gaussian_roots(p: &UniPoly) -> Result<RootSplit> {
    if p.is_zero() {
        return Err(Error::OutOfRange("root extraction needs a nonzero polynomial".into()));
    }
    let mut rest = p.clone();
    let mut roots = Vec::new();
    let mut sf = p.squarefree_part();
    if sf.coeff(0).is_zero() && sf.degree().unwrap_or(0) > 0 {
        roots.push(Scalar::zero());
        sf = sf.div_rem(&UniPoly::linear(&Scalar::zero())).0;
    }
    if sf.degree().unwrap_or(0) > 0 {
        for cand in candidates(&sf) {
            if sf.degree().unwrap_or(0) == 0 {
                break;
            }
            if sf.eval(&cand).is_zero() {
                sf = sf.div_rem(&UniPoly::linear(&cand)).0;
                roots.push(cand);
            }
        }
    }
    roots.sort();
    let mut out = Vec::with_capacity(roots.len());
    for r in roots {
        let lin = UniPoly::linear(&r);
        let mut mult = 0;
        loop {
            let (q, rem) = rest.div_rem(&lin);
            if !rem.is_zero() {
                break;
            }
            rest = q;
            mult += 1;
        }
        debug_assert!(mult > 0);
        out.push((r, mult));
    }
    Ok(RootSplit {
        roots: out,
        nonsplit: rest,
    })
}

/// Gaussian integer `re + im·i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct GInt {
    re: BigInt,
    im: BigInt,
}

impl GInt {
    fn new(re: BigInt, im: BigInt) -> Self {
        GInt { re, im }
    }

    fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn mul(&self, o: &GInt) -> GInt {
        GInt::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    fn conj(&self) -> GInt {
        GInt::new(self.re.clone(), -self.im.clone())
    }

    fn exact_div(&self, d: &GInt) -> Option<GInt> {
        let n = d.norm();
        let num = self.mul(&d.conj());
        if (&num.re % &n).is_zero() && (&num.im % &n).is_zero() {
            Some(GInt::new(num.re / &n, num.im / &n))
        } else {
            None
        }
    }

    /// Remainder of division with the quotient rounded to the nearest lattice point.
    fn rem(&self, d: &GInt) -> GInt {
        let n = d.norm();
        let num = self.mul(&d.conj());
        let round = |x: &BigInt| -> BigInt {
            let two_n = &n * 2;
            let t: BigInt = x * 2u32 + &n;
            t.div_floor(&two_n)
        };
        let q = GInt::new(round(&num.re), round(&num.im));
        let qd = q.mul(d);
        GInt::new(&self.re - qd.re, &self.im - qd.im)
    }

    fn gcd(&self, other: &GInt) -> GInt {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::new(
            BigRational::from_integer(self.re.clone()),
            BigRational::from_integer(self.im.clone()),
        )
    }
}

fn to_gint(s: &Scalar) -> GInt {
    debug_assert!(s.is_gaussian_integer());
    GInt::new(s.re().to_integer(), s.im().to_integer())
}

fn candidates(p: &UniPoly) -> Vec<Scalar> {
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(&c.denominator_lcm()));
    let scaled = p.scale(&Scalar::from_rational(BigRational::from_integer(lcm)));
    let coeffs: Vec<GInt> = scaled.coeffs().iter().map(to_gint).collect();
    let nums = divisors(&coeffs[0]);
    let dens = divisors(coeffs.last().unwrap());
    let units = [
        GInt::new(1.into(), 0.into()),
        GInt::new(0.into(), 1.into()),
        GInt::new((-1).into(), 0.into()),
        GInt::new(0.into(), (-1).into()),
    ];
    // A reduced root a/b of an integral P satisfies (b·m − a) | P(m) for every
    // Gaussian integer m. Unreduced pairs may fail the test, but their reduced
    // form is enumerated as well.
    let probes: Vec<(GInt, GInt)> = units.iter().map(|m| (m.clone(), eval_gint(&coeffs, m))).collect();
    let mut out = BTreeSet::new();
    for a in &nums {
        for u in &units {
            let ua = a.mul(u);
            for b in &dens {
                let passes = probes.iter().all(|(m, pm)| {
                    let bm = b.mul(m);
                    let d = GInt::new(&bm.re - &ua.re, &bm.im - &ua.im);
                    if d.is_zero() {
                        pm.is_zero()
                    } else {
                        pm.exact_div(&d).is_some()
                    }
                });
                if passes {
                    out.insert(&ua.to_scalar() / &b.to_scalar());
                }
            }
        }
    }
    out.into_iter().collect()
}

fn eval_gint(coeffs: &[GInt], x: &GInt) -> GInt {
    coeffs.iter().rev().fold(GInt::new(0.into(), 0.into()), |acc, c| {
        let t = acc.mul(x);
        GInt::new(t.re + &c.re, t.im + &c.im)
    })
}

/// Divisors of `g` up to unit factors.
fn divisors(g: &GInt) -> Vec<GInt> {
    let mut rest = g.clone();
    let mut primes: Vec<(GInt, usize)> = Vec::new();
    for (p, e) in factor_integer(&g.norm()) {
        let p_small = p.to_u64();
        if p_small == Some(2) {
            let pi = GInt::new(1.into(), 1.into());
            strip(&mut rest, &pi);
            primes.push((pi, e));
        } else if (&p % 4u32) == BigInt::from(3) {
            primes.push((GInt::new(p.clone(), 0.into()), e / 2));
            strip(&mut rest, &GInt::new(p, 0.into()));
        } else {
            let pi = split_prime(&p);
            let pi_bar = pi.conj();
            let a = strip(&mut rest, &pi);
            let b = strip(&mut rest, &pi_bar);
            if a > 0 {
                primes.push((pi, a));
            }
            if b > 0 {
                primes.push((pi_bar, b));
            }
        }
    }
    let mut divs = vec![GInt::new(1.into(), 0.into())];
    for (pi, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (e + 1));
        for d in &divs {
            let mut cur = d.clone();
            next.push(cur.clone());
            for _ in 0..e {
                cur = cur.mul(&pi);
                next.push(cur.clone());
            }
        }
        divs = next;
    }
    divs
}

fn strip(g: &mut GInt, pi: &GInt) -> usize {
    let mut count = 0;
    while let Some(q) = g.exact_div(pi) {
        *g = q;
        count += 1;
    }
    count
}

/// A Gaussian prime above the rational prime `p ≡ 1 (mod 4)`.
fn split_prime(p: &BigInt) -> GInt {
    let exp_half = (p - 1u32) / 2u32;
    let exp_quarter = (p - 1u32) / 4u32;
    let minus_one = p - 1u32;
    let mut c = BigInt::from(2);
    loop {
        if c.modpow(&exp_half, p) == minus_one {
            let x = c.modpow(&exp_quarter, p);
            return GInt::new(p.clone(), 0.into()).gcd(&GInt::new(x, 1.into()));
        }
        c += 1;
    }
}

/// Prime factorization of `n > 0` as `(prime, exponent)` pairs.
fn factor_integer(n: &BigInt) -> Vec<(BigInt, usize)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    let mut d = 2u64;
    while d < 10_000 {
        let bd = BigInt::from(d);
        if &bd * &bd > n {
            break;
        }
        let mut e = 0;
        while (&n % &bd).is_zero() {
            n /= &bd;
            e += 1;
        }
        if e > 0 {
            out.push((bd, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > BigInt::one() {
        let mut stack = vec![n];
        let mut big: Vec<BigInt> = Vec::new();
        while let Some(m) = stack.pop() {
            if m.is_one() {
                continue;
            }
            if is_probable_prime(&m) {
                big.push(m);
            } else {
                let f = pollard_rho(&m);
                stack.push(&m / &f);
                stack.push(f);
            }
        }
        big.sort();
        for p in big {
            match out.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => out.push((p, 1)),
            }
        }
    }
    out
}

fn is_probable_prime(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    const BASES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for b in BASES {
        let b = BigInt::from(b);
        if n == &b {
            return true;
        }
        if (n % &b).is_zero() {
            return false;
        }
    }
    let one = BigInt::one();
    let n_minus_one = n - &one;
    let mut d = n_minus_one.clone();
    let mut s = 0;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    'witness: for b in BASES {
        let mut x = BigInt::from(b).modpow(&d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigInt::from(2), n);
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Nontrivial factor of a composite `n` (Brent's variant).
fn pollard_rho(n: &BigInt) -> BigInt {
    if n.is_even() {
        return BigInt::from(2);
    }
    let mut c = BigInt::one();
    loop {
        let f = |x: &BigInt| (x * x + &c) % n;
        let mut x = BigInt::from(2);
        let mut y = x.clone();
        let mut d = BigInt::one();
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            d = (&x - &y).abs().gcd(n);
        }
        if &d != n {
            return d;
        }
        c += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_square() {
        let r = gaussian_roots(&UniPoly::from_ints(&[1, -2, 1])).unwrap();
        assert_eq!(r.roots, vec![(Scalar::one(), 2)]);
        assert_eq!(r.nonsplit, UniPoly::one());
    }

    #[test]
    fn plus_one_splits_over_gaussian() {
        let r = gaussian_roots(&UniPoly::from_ints(&[1, 0, 1])).unwrap();
        assert_eq!(r.roots, vec![(-Scalar::i(), 1), (Scalar::i(), 1)]);
        assert!(r.splits());
    }

    #[test]
    fn sqrt_two_does_not_split() {
        let p = UniPoly::from_ints(&[-2, 0, 1]);
        let r = gaussian_roots(&p).unwrap();
        assert!(r.roots.is_empty());
        assert_eq!(r.nonsplit, p);
    }

    #[test]
    fn rational_and_gaussian_mixture() {
        // (2t - 3)(t - (1+2i))(t + 5) t^2
        let a = UniPoly::new(vec![Scalar::from_int(-3), Scalar::from_int(2)]);
        let b = UniPoly::linear(&Scalar::from_gaussian(1, 2));
        let c = UniPoly::from_ints(&[5, 1]);
        let d = UniPoly::from_ints(&[0, 0, 1]);
        let p = &(&(&a * &b) * &c) * &d;
        let r = gaussian_roots(&p).unwrap();
        let roots: Vec<_> = r.roots.iter().map(|(x, m)| (x.to_string(), *m)).collect();
        assert_eq!(
            roots,
            vec![
                ("-5".to_string(), 1),
                ("0".to_string(), 2),
                ("1+2i".to_string(), 1),
                ("3/2".to_string(), 1)
            ]
        );
        assert_eq!(r.nonsplit, UniPoly::constant(Scalar::from_int(2)));
    }

    #[test]
    fn factors_large_norms() {
        let f = factor_integer(&BigInt::from(1_000_003u64 * 999_983u64 * 4));
        assert_eq!(
            f,
            vec![
                (BigInt::from(2), 2),
                (BigInt::from(999_983u64), 1),
                (BigInt::from(1_000_003u64), 1)
            ]
        );
    }

    #[test]
    fn gaussian_divisors_of_five() {
        // 5 = (2+i)(2-i): divisors up to units are 1, 2±i, 5.
        let d = divisors(&GInt::new(5.into(), 0.into()));
        assert_eq!(d.len(), 4);
    }
}
