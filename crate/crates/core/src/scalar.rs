//! Coefficient fields.
//!
//! Everything above this module is generic over [`Scalar`]. The workbench
//! itself runs on [`Rational`](crate::Rational); the floating point impls
//! exist so the same formulas can be evaluated numerically, without the
//! gcd-based canonicalization (which is meaningless for inexact values).

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, Zero};

pub trait Scalar:
    Num + Clone + PartialEq + Debug + Display + FromPrimitive + std::ops::Neg<Output = Self> + Send + Sync + 'static
{
    /// Exact fields get gcd-reduced rational functions; inexact ones keep
    /// numerator and denominator as built.
    const EXACT: bool;

    fn is_negative(&self) -> bool;

    /// Factor `c` such that `c * coeffs` is the canonical associate of the
    /// polynomial with these coefficients, `lead` being the coefficient of
    /// its leading monomial.
    fn normalizing_factor<'a, I>(coeffs: I, lead: &Self) -> Self
    where
        I: Iterator<Item = &'a Self>;

    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer conversion")
    }

    /// Exact binomial coefficient C(n, k); zero outside 0..=n.
    fn binomial(n: i64, k: i64) -> Self {
        if k < 0 || k > n || n < 0 {
            return Self::zero();
        }
        let k = k.min(n - k);
        let mut acc = Self::one();
        for i in 0..k {
            acc = acc * Self::from_int(n - i) / Self::from_int(i + 1);
        }
        acc
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    // content 1 (integer coefficients, coprime) and positive leading coefficient
    fn normalizing_factor<'a, I>(coeffs: I, lead: &Self) -> Self
    where
        I: Iterator<Item = &'a Self>,
    {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in coeffs {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        if num_gcd.is_zero() {
            return BigRational::one();
        }
        let f = BigRational::new(den_lcm, num_gcd);
        if Signed::is_negative(lead) {
            -f
        } else {
            f
        }
    }
}

macro_rules! float_scalar {
    ($($t:ty)*) => ($(
        impl Scalar for $t {
            const EXACT: bool = false;

            fn is_negative(&self) -> bool {
                *self < 0.0
            }

            fn normalizing_factor<'a, I>(_coeffs: I, lead: &Self) -> Self
            where
                I: Iterator<Item = &'a Self>,
            {
                if *lead == 0.0 { 1.0 } else { 1.0 / *lead }
            }
        }
    )*)
}

float_scalar!(f32 f64);

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn binomials() {
        assert_eq!(<BigRational as Scalar>::binomial(8, 3), r(56, 1));
        assert_eq!(<BigRational as Scalar>::binomial(3, 5), r(0, 1));
        assert_eq!(<BigRational as Scalar>::binomial(3, -1), r(0, 1));
        assert_eq!(<f64 as Scalar>::binomial(10, 5), 252.0);
    }

    #[test]
    fn rational_normalizer_clears_content() {
        let cs = [r(-2, 3), r(4, 9)];
        let f = BigRational::normalizing_factor(cs.iter(), &cs[0]);
        let scaled: Vec<_> = cs.iter().map(|c| c * &f).collect();
        assert_eq!(scaled, vec![r(3, 1), r(-2, 1)]);
    }
}
