//! Multivariate polynomials over Q(i) and reduced Gröbner bases in grevlex.

mod groebner;
mod poly;

pub use groebner::{groebner, is_inconsistent, reduce, PolySystem, DEFAULT_BUDGET};
pub use poly::{Monomial, MultiPoly};
