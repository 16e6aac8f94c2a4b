//! Canonical rational functions in `q` and `u`.
//!
//! A [`RatFunc`] is always stored reduced: numerator and denominator are
//! coprime, and the denominator is the canonical associate (content one,
//! positive leading coefficient under the graded-lex order). Equality is
//! therefore structural.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::gcd;
use super::poly::{Poly, Var};
use crate::error::ArithError;
use crate::Scalar;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc<C> {
    num: Poly<C>,
    den: Poly<C>,
}

/// Result of a (possibly partial) substitution.
#[derive(Clone, Debug, PartialEq)]
pub enum Evaluated<C: Scalar> {
    Scalar(C),
    Func(RatFunc<C>),
}

impl<C: Scalar> RatFunc<C> {
    /// Reduce `num / den` to canonical form.
    pub fn new(num: Poly<C>, den: Poly<C>) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: Poly<C>, den: Poly<C>) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if C::EXACT && den.as_constant().is_none() {
            let g = gcd::gcd(&num, &den);
            if g.as_constant().is_some() {
                (num, den)
            } else {
                (
                    gcd::div_exact(&num, &g).expect("gcd divides numerator"),
                    gcd::div_exact(&den, &g).expect("gcd divides denominator"),
                )
            }
        } else {
            (num, den)
        };
        let f = den.normalizing_factor();
        RatFunc {
            num: num.scale(&f),
            den: den.scale(&f),
        }
    }

    /// `num/den` already coprime; only fixes the denominator's scale.
    fn reduced(num: Poly<C>, den: Poly<C>) -> Self {
        let f = den.normalizing_factor();
        RatFunc {
            num: num.scale(&f),
            den: den.scale(&f),
        }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn constant(c: C) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn int(n: i64) -> Self {
        Self::constant(C::from_int(n))
    }

    pub fn from_poly(p: Poly<C>) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn q() -> Self {
        Self::from_poly(Poly::q())
    }

    pub fn u() -> Self {
        Self::from_poly(Poly::u())
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        if k >= 0 {
            Self::from_poly(Poly::q_pow(k as u32))
        } else {
            RatFunc {
                num: Poly::one(),
                den: Poly::q_pow((-k) as u32),
            }
        }
    }

    /// `(-1)^k`
    pub fn sign(k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            Self::one()
        } else {
            Self::int(-1)
        }
    }

    pub fn num(&self) -> &Poly<C> {
        &self.num
    }

    pub fn den(&self) -> &Poly<C> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&Poly<C>> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<C> {
        if self.is_polynomial() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn is_free_of(&self, var: Var) -> bool {
        self.num.is_free_of(var) && self.den.is_free_of(var)
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::normalize(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::normalize(self.num.scale(c), self.den.clone())
    }

    /// Integer power; negative exponents invert (panics on `0^-k`).
    pub fn pow(&self, e: i64) -> Self {
        let p = RatFunc {
            num: self.num.pow(e.unsigned_abs() as u32),
            den: self.den.pow(e.unsigned_abs() as u32),
        };
        let p = Self::normalize(p.num, p.den);
        if e < 0 {
            p.inv().expect("negative power of zero")
        } else {
            p
        }
    }

    /// Substitute for `q` and optionally `u`.
    pub fn eval_at(&self, q0: &C, u0: Option<&C>) -> Result<Evaluated<C>, ArithError> {
        match u0 {
            Some(u0) => {
                let d = self.den.eval(q0, u0);
                if d.is_zero() {
                    return Err(ArithError::Pole {
                        point: format!("q = {q0}, u = {u0}"),
                        factor: self.den.to_canonical_string(),
                    });
                }
                Ok(Evaluated::Scalar(self.num.eval(q0, u0) / d))
            }
            None => {
                let d = self.den.eval_q(q0);
                if d.is_zero() {
                    return Err(ArithError::Pole {
                        point: format!("q = {q0}"),
                        factor: self.den.to_canonical_string(),
                    });
                }
                Ok(Evaluated::Func(Self::normalize(self.num.eval_q(q0), d)))
            }
        }
    }

    /// Value of a function free of `u` at `q = q0`.
    pub fn eval(&self, q0: &C) -> Result<C, ArithError> {
        assert!(self.is_free_of(Var::U), "eval of a function of u needs a value for u");
        match self.eval_at(q0, Some(&C::zero()))? {
            Evaluated::Scalar(c) => Ok(c),
            Evaluated::Func(_) => unreachable!(),
        }
    }

    /// Substitute a value for `u`, leaving a function of `q`.
    pub fn eval_u(&self, u0: &C) -> Result<Self, ArithError> {
        let d = self.den.eval_u(u0);
        if d.is_zero() {
            return Err(ArithError::Pole {
                point: format!("u = {u0}"),
                factor: self.den.to_canonical_string(),
            });
        }
        Ok(Self::normalize(self.num.eval_u(u0), d))
    }

    /// Specialize `x` to the integer `k`, i.e. `u -> q^k`.
    pub fn u_to_q_pow(&self, k: u32) -> Result<Self, ArithError> {
        Self::new(self.num.u_to_q_pow(k), self.den.u_to_q_pow(k))
    }

    /// `q -> q^base`, `u -> u * q^shift`; see [`Poly::substitute_base`].
    pub fn substitute_base(&self, base: u32, shift: u32) -> Self {
        Self::normalize(
            self.num.substitute_base(base, shift),
            self.den.substitute_base(base, shift),
        )
    }

    /// `num/den` with multi-term parts parenthesized; a polynomial prints
    /// bare.
    pub fn to_canonical_string(&self) -> String {
        if self.is_polynomial() {
            return self.num.to_canonical_string();
        }
        format!("{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

fn wrap<C: Scalar>(p: &Poly<C>) -> String {
    let s = p.to_canonical_string();
    if p.num_terms() == 1 && !s.contains('/') {
        s
    } else {
        format!("({s})")
    }
}

impl<C: Scalar> From<Poly<C>> for RatFunc<C> {
    fn from(p: Poly<C>) -> Self {
        Self::from_poly(p)
    }
}

impl<C: Scalar> Default for RatFunc<C> {
    fn default() -> Self {
        Self::zero()
    }
}

fn exact<C: Scalar>(a: &Poly<C>, d: &Poly<C>) -> Poly<C> {
    gcd::div_exact(a, d).expect("gcd divides")
}

impl<C: Scalar> Add for &RatFunc<C> {
    type Output = RatFunc<C>;
    fn add(self, rhs: &RatFunc<C>) -> RatFunc<C> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::normalize(&self.num + &rhs.num, self.den.clone());
        }
        if !C::EXACT {
            return RatFunc::normalize(
                &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
                &self.den * &rhs.den,
            );
        }
        // a/b + c/d with g = gcd(b, d): only g can share factors with the
        // new numerator
        let g = gcd::gcd(&self.den, &rhs.den);
        if g.as_constant().is_some() {
            return RatFunc::reduced(
                &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
                &self.den * &rhs.den,
            );
        }
        let b1 = exact(&self.den, &g);
        let d1 = exact(&rhs.den, &g);
        let t = &(&self.num * &d1) + &(&rhs.num * &b1);
        if t.is_zero() {
            return RatFunc::zero();
        }
        let g2 = gcd::gcd(&t, &g);
        let (t, g) = if g2.as_constant().is_some() { (t, g) } else { (exact(&t, &g2), exact(&g, &g2)) };
        RatFunc::reduced(t, &(&b1 * &d1) * &g)
    }
}

impl<C: Scalar> Sub for &RatFunc<C> {
    type Output = RatFunc<C>;
    fn sub(self, rhs: &RatFunc<C>) -> RatFunc<C> {
        self + &(-rhs)
    }
}

impl<C: Scalar> Mul for &RatFunc<C> {
    type Output = RatFunc<C>;
    fn mul(self, rhs: &RatFunc<C>) -> RatFunc<C> {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        if !C::EXACT {
            return RatFunc::normalize(&self.num * &rhs.num, &self.den * &rhs.den);
        }
        // cross-cancel: gcd(a, d) and gcd(c, b) for (a/b)(c/d)
        let cancel = |x: &Poly<C>, y: &Poly<C>| -> (Poly<C>, Poly<C>) {
            if y.as_constant().is_some() {
                return (x.clone(), y.clone());
            }
            let g = gcd::gcd(x, y);
            if g.as_constant().is_some() {
                (x.clone(), y.clone())
            } else {
                (exact(x, &g), exact(y, &g))
            }
        };
        let (a, d) = cancel(&self.num, &rhs.den);
        let (c, b) = cancel(&rhs.num, &self.den);
        RatFunc::reduced(&a * &c, &b * &d)
    }
}

impl<C: Scalar> Div for &RatFunc<C> {
    type Output = RatFunc<C>;
    /// Panics on division by zero; see [`RatFunc::checked_div`].
    fn div(self, rhs: &RatFunc<C>) -> RatFunc<C> {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl<C: Scalar> Neg for &RatFunc<C> {
    type Output = RatFunc<C>;
    fn neg(self) -> RatFunc<C> {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<C: Scalar> Neg for RatFunc<C> {
    type Output = RatFunc<C>;
    fn neg(self) -> RatFunc<C> {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => ($(
        impl<C: Scalar> $tr for RatFunc<C> {
            type Output = RatFunc<C>;
            fn $f(self, rhs: RatFunc<C>) -> RatFunc<C> { (&self).$f(&rhs) }
        }
        impl<C: Scalar> $tr<&RatFunc<C>> for RatFunc<C> {
            type Output = RatFunc<C>;
            fn $f(self, rhs: &RatFunc<C>) -> RatFunc<C> { (&self).$f(rhs) }
        }
        impl<C: Scalar> $tr<RatFunc<C>> for &RatFunc<C> {
            type Output = RatFunc<C>;
            fn $f(self, rhs: RatFunc<C>) -> RatFunc<C> { self.$f(&rhs) }
        }
    )*)
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl<C: Scalar> std::iter::Sum for RatFunc<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

impl<C: Scalar> std::iter::Product for RatFunc<C> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |a, b| a * b)
    }
}

impl<C: Scalar> fmt::Display for RatFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl<C: Scalar> fmt::Debug for RatFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({})", self.to_canonical_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{BiPoly, RatFunc as RF, Rational};

    fn q() -> BiPoly {
        BiPoly::q()
    }
    fn u() -> BiPoly {
        BiPoly::u()
    }
    fn one() -> BiPoly {
        BiPoly::one()
    }
    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn telescoping_factor_cancels() {
        let f = RF::new(one() - q().pow(2), one() - q()).unwrap();
        assert_eq!(f, RF::from_poly(one() + q()));
    }

    #[test]
    fn zero_numerator_is_canonical_zero() {
        let f = RF::new(BiPoly::zero(), one() - q()).unwrap();
        assert_eq!(f, RF::zero());
        assert_eq!(f.den(), &one());
    }

    #[test]
    fn common_bivariate_factor_cancels() {
        let f = RF::new((one() - u()) * (one() + q()), (one() - q()) * (one() + q())).unwrap();
        let expect = RF::new(one() - u(), one() - q()).unwrap();
        assert_eq!(f, expect);
        assert_eq!(f.to_string(), "(-1+u)/(-1+q)");
    }

    #[test]
    fn zero_denominator_errors() {
        assert_eq!(RF::new(one(), BiPoly::zero()), Err(ArithError::DivisionByZero));
        assert_eq!(
            ArithError::DivisionByZero.to_string(),
            "division by zero polynomial"
        );
    }

    #[test]
    fn canonical_denominator_has_positive_lead_and_unit_content() {
        let f = RF::new(BiPoly::int(3), (one() - q()).scale(&rat(-6, 1))).unwrap();
        assert_eq!(f.den(), &(q() - one()));
        assert_eq!(f.num(), &BiPoly::constant(rat(1, 2)));
    }

    #[test]
    fn beta_one_limit() {
        let b1 = RF::new(BiPoly::int(-1), one() + q()).unwrap();
        assert_eq!(b1.eval(&rat(1, 1)).unwrap(), rat(-1, 2));
        assert_eq!(b1.to_string(), "-1/(1+q)");
    }

    #[test]
    fn removable_singularity_evaluates() {
        let f = RF::new(one() - q().pow(2), one() - q()).unwrap();
        assert_eq!(f.eval(&rat(1, 1)).unwrap(), rat(2, 1));
    }

    #[test]
    fn pole_reports_factor() {
        let f = RF::new(one(), one() - q()).unwrap();
        let err = f.eval(&rat(1, 1)).unwrap_err();
        assert!(matches!(err, ArithError::Pole { .. }));
        assert!(err.to_string().contains("pole"));
    }

    #[test]
    fn partial_substitution_keeps_u() {
        let f = RF::new(one() - u(), one() - q()).unwrap();
        match f.eval_at(&rat(2, 1), None).unwrap() {
            Evaluated::Func(g) => assert_eq!(g, RF::from_poly(u() - one())),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn negative_q_powers() {
        let f = RF::q_pow(-3) * RF::q_pow(5);
        assert_eq!(f, RF::q_pow(2));
    }

    #[test]
    fn float_functions_stay_unreduced_but_evaluate() {
        let f: RatFunc<f64> = RatFunc::new(Poly::one() - Poly::q().pow(2), Poly::one() - Poly::q()).unwrap();
        assert!((f.eval(&0.5).unwrap() - 1.5).abs() < 1e-12);
    }
}
