//! Exact arithmetic: bivariate polynomials, canonical rational functions and
//! truncated power series.

pub(crate) mod gcd;
mod poly;
mod ratfunc;
mod series;
pub(crate) mod upoly;

pub use gcd::gcd;
pub use poly::{Monomial, Poly, Var};
pub use ratfunc::{Evaluated, RatFunc};
pub use series::TruncSeries;
