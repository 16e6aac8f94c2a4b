//! Truncated power series in one of the two variables, with polynomial
//! coefficients in the other.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::poly::{Poly, Var};
use super::ratfunc::RatFunc;
use crate::error::ArithError;
use crate::Scalar;

/// `sum_{i <= order} coeffs[i] * var^i`; every coefficient is free of `var`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries<C> {
    var: Var,
    order: usize,
    coeffs: Vec<Poly<C>>,
}

impl<C: Scalar> TruncSeries<C> {
    pub fn zero(var: Var, order: usize) -> Self {
        TruncSeries {
            var,
            order,
            coeffs: vec![Poly::zero(); order + 1],
        }
    }

    pub fn one(var: Var, order: usize) -> Self {
        let mut s = Self::zero(var, order);
        s.coeffs[0] = Poly::one();
        s
    }

    /// Truncation of a polynomial.
    pub fn from_poly(p: &Poly<C>, var: Var, order: usize) -> Self {
        let mut s = Self::zero(var, order);
        for (i, c) in p.coeffs_in(var).into_iter().enumerate().take(order + 1) {
            s.coeffs[i] = c;
        }
        s
    }

    pub fn from_coeffs(var: Var, order: usize, coeffs: Vec<Poly<C>>) -> Self {
        let mut s = Self::zero(var, order);
        for (i, c) in coeffs.into_iter().enumerate().take(order + 1) {
            debug_assert!(c.is_free_of(var));
            s.coeffs[i] = c;
        }
        s
    }

    /// Expansion of `f` around `var = 0` through `var^order`.
    pub fn expand(f: &RatFunc<C>, var: Var, order: usize) -> Result<Self, ArithError> {
        let num = Self::from_poly(f.num(), var, order);
        if f.is_polynomial() {
            return Ok(num);
        }
        let den = Self::from_poly(f.den(), var, order);
        Ok(&num * &den.inverse()?)
    }

    /// Multiplicative inverse; the constant term must be a nonzero scalar.
    pub fn inverse(&self) -> Result<Self, ArithError> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(ArithError::PoleAtOrigin {
                var: self.var.name(),
            });
        }
        let Some(d0) = c0.as_constant() else {
            return Err(ArithError::NonUnitConstantTerm {
                constant: c0.to_canonical_string(),
            });
        };
        let inv0 = C::one() / d0;
        let mut out = Self::zero(self.var, self.order);
        out.coeffs[0] = Poly::constant(inv0.clone());
        let neg_inv0 = -inv0;
        for i in 1..=self.order {
            let mut acc = Poly::zero();
            for j in 1..=i {
                if !self.coeffs[j].is_zero() && !out.coeffs[i - j].is_zero() {
                    acc = &acc + &(&self.coeffs[j] * &out.coeffs[i - j]);
                }
            }
            out.coeffs[i] = acc.scale(&neg_inv0);
        }
        Ok(out)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, i: usize) -> &Poly<C> {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Poly<C>] {
        &self.coeffs
    }

    pub fn scale(&self, c: &C) -> Self {
        TruncSeries {
            var: self.var,
            order: self.order,
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Multiply by a polynomial free of the series variable.
    pub fn scale_poly(&self, p: &Poly<C>) -> Self {
        TruncSeries {
            var: self.var,
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }

    /// Multiply by `var^k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = Self::zero(self.var, self.order);
        for i in k..=self.order {
            out.coeffs[i] = self.coeffs[i - k].clone();
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.var, self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn to_poly(&self) -> Poly<C> {
        Poly::from_coeffs_in(self.var, &self.coeffs)
    }

    fn check(&self, rhs: &Self) {
        assert!(
            self.var == rhs.var && self.order == rhs.order,
            "series variable or order mismatch"
        );
    }
}

impl<C: Scalar> Add for &TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn add(self, rhs: &TruncSeries<C>) -> TruncSeries<C> {
        self.check(rhs);
        TruncSeries {
            var: self.var,
            order: self.order,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<C: Scalar> Sub for &TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn sub(self, rhs: &TruncSeries<C>) -> TruncSeries<C> {
        self + &(-rhs)
    }
}

impl<C: Scalar> Neg for &TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn neg(self) -> TruncSeries<C> {
        TruncSeries {
            var: self.var,
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<C: Scalar> Mul for &TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn mul(self, rhs: &TruncSeries<C>) -> TruncSeries<C> {
        self.check(rhs);
        let mut out = TruncSeries::zero(self.var, self.order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(self.order + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
                }
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => ($(
        impl<C: Scalar> $tr for TruncSeries<C> {
            type Output = TruncSeries<C>;
            fn $f(self, rhs: TruncSeries<C>) -> TruncSeries<C> { (&self).$f(&rhs) }
        }
    )*)
}

forward_owned!(Add add, Sub sub, Mul mul);

impl<C: Scalar> fmt::Display for TruncSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.var.name();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*{v}")?,
                _ => write!(f, "({c})*{v}^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O({v}^{})", self.order + 1)
    }
}

impl<C: Scalar> fmt::Debug for TruncSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{BiPoly, RatFunc as RF, Series};

    fn q() -> BiPoly {
        BiPoly::q()
    }
    fn one() -> BiPoly {
        BiPoly::one()
    }

    #[test]
    fn geometric_series() {
        let f = RF::new(one(), one() - q()).unwrap();
        let s = Series::expand(&f, Var::Q, 3).unwrap();
        assert_eq!(s.to_poly(), one() + q() + q().pow(2) + q().pow(3));
    }

    #[test]
    fn coefficients_carry_the_other_variable() {
        let f = RF::new(one() - BiPoly::u(), one() - q()).unwrap();
        let s = Series::expand(&f, Var::Q, 2).unwrap();
        for i in 0..=2 {
            assert_eq!(s.coeff(i), &(one() - BiPoly::u()));
        }
    }

    #[test]
    fn beta_one_series_alternates() {
        let f = RF::new(BiPoly::int(-1), one() + q()).unwrap();
        let s = Series::expand(&f, Var::Q, 3).unwrap();
        // long division of -1 by 1+q
        let expect = -one() + q() - q().pow(2) + q().pow(3);
        assert_eq!(s.to_poly(), expect);
    }

    #[test]
    fn pole_at_origin() {
        let f = RF::new(one(), q()).unwrap();
        let err = Series::expand(&f, Var::Q, 2).unwrap_err();
        assert_eq!(err, ArithError::PoleAtOrigin { var: "q" });
        assert!(err.to_string().starts_with("pole at origin"));
    }

    #[test]
    fn polynomial_expands_to_itself() {
        let p = (one() + q() * BiPoly::u()).pow(3);
        assert_eq!(Series::expand(&RF::from_poly(p.clone()), Var::Q, 5).unwrap().to_poly(), p);
        assert_eq!(Series::expand(&RF::from_poly(p.clone()), Var::U, 1).unwrap().to_poly(), one() + (q() * BiPoly::u()).scale(&crate::Rational::from_integer(3.into())));
    }
}
