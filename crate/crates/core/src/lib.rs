//! Exact workbench for Carlitz q-Bernoulli numbers, q-Stirling numbers and
//! p-adic q-integrals.
//!
//! The algebra is generic over a coefficient field ([`Scalar`]); the aliases
//! below fix it to arbitrary-precision rationals, which is what every
//! identity check runs on. A single variable `u` stands for `q^x`, so
//! `[x]_q = (1 - u)/(1 - q)` and everything symbolic in `x` is a rational
//! function of `q` and `u`.

pub mod arith;
pub mod bernoulli;
pub mod error;
pub mod identity;
pub mod padic;
pub mod qcore;
pub mod scalar;
pub mod stirling;

pub use arith::{Evaluated, Monomial, Var};
pub use error::{ArithError, PadicError};
pub use identity::{IdentityResult, VariantTag, Verdict};
pub use scalar::Scalar;

pub type Rational = num_rational::BigRational;
pub type BiPoly = arith::Poly<Rational>;
pub type RatFunc = arith::RatFunc<Rational>;
pub type Series = arith::TruncSeries<Rational>;
