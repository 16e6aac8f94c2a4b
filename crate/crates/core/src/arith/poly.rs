//! Sparse bivariate polynomials in `q` and `u`, where `u` stands for `q^x`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::upoly;
use crate::Scalar;

/// Exponent pair of a monomial `q^q * u^u`.
///
/// Ordered graded-lexicographically with `q > u`: total degree first, then
/// the degree in `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub q: u32,
    pub u: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { q: 0, u: 0 };

    pub fn new(q: u32, u: u32) -> Self {
        Monomial { q, u }
    }

    pub fn total(self) -> u32 {
        self.q + self.u
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then(self.q.cmp(&other.q))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Which of the two variables an operation singles out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q,
    U,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::U => "u",
        }
    }

    pub fn other(self) -> Var {
        match self {
            Var::Q => Var::U,
            Var::U => Var::Q,
        }
    }
}

/// A polynomial in `q` and `u` with no stored zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Scalar> Poly<C> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(C::from_int(n))
    }

    pub fn monomial(c: C, q: u32, u: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::new(q, u), c);
        }
        Poly { terms }
    }

    pub fn q() -> Self {
        Self::monomial(C::one(), 1, 0)
    }

    pub fn u() -> Self {
        Self::monomial(C::one(), 0, 1)
    }

    pub fn q_pow(k: u32) -> Self {
        Self::monomial(C::one(), k, 0)
    }

    /// `1 - q^k`
    pub fn one_minus_q_pow(k: u32) -> Self {
        Self::one() - Self::q_pow(k)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Polynomial in `q` alone from ascending coefficients.
    pub fn from_q_coeffs(coeffs: &[C]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::new(i as u32, 0), c.clone())),
        )
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The coefficient if this polynomial is a constant (zero included).
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, q: u32, u: u32) -> C {
        self.terms
            .get(&Monomial::new(q, u))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    pub fn leading(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self, var: Var) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| match var {
                Var::Q => m.q,
                Var::U => m.u,
            })
            .max()
    }

    /// Smallest exponent of `var` among the terms.
    pub fn valuation(&self, var: Var) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| match var {
                Var::Q => m.q,
                Var::U => m.u,
            })
            .min()
    }

    pub fn is_free_of(&self, var: Var) -> bool {
        self.degree(var).unwrap_or(0) == 0
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (*m, x.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn shift(&self, dq: u32, du: u32) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (Monomial::new(m.q + dq, m.u + du), x.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
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

    pub fn eval(&self, q0: &C, u0: &C) -> C {
        self.terms.iter().fold(C::zero(), |acc, (m, c)| {
            acc + c.clone() * pow_scalar(q0, m.q) * pow_scalar(u0, m.u)
        })
    }

    /// Substitute a value for `q`, leaving a polynomial in `u`.
    pub fn eval_q(&self, q0: &C) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (Monomial::new(0, m.u), c.clone() * pow_scalar(q0, m.q))),
        )
    }

    /// Substitute a value for `u`, leaving a polynomial in `q`.
    pub fn eval_u(&self, u0: &C) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.q, 0), c.clone() * pow_scalar(u0, m.u))),
        )
    }

    /// The monomial map `q -> q^base`, `u -> u * q^shift`.
    ///
    /// With `u = q^x` this realizes a change of base `q -> q^m` together with
    /// an argument shift, e.g. `(q^m)^((x+i)/m) = u * q^i`.
    pub fn substitute_base(&self, base: u32, shift: u32) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.q * base + m.u * shift, m.u), c.clone())),
        )
    }

    /// The map `u -> q^k` (specialize `x` to the integer `k`).
    pub fn u_to_q_pow(&self, k: u32) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.q + k * m.u, 0), c.clone())),
        )
    }

    /// Coefficients with respect to `var`, each a polynomial in the other
    /// variable. Index = exponent of `var`.
    pub fn coeffs_in(&self, var: Var) -> Vec<Poly<C>> {
        let Some(deg) = self.degree(var) else {
            return Vec::new();
        };
        let mut out = vec![Poly::zero(); deg as usize + 1];
        for (m, c) in &self.terms {
            let (e, rest) = match var {
                Var::Q => (m.q, Monomial::new(0, m.u)),
                Var::U => (m.u, Monomial::new(m.q, 0)),
            };
            out[e as usize].add_term(rest, c.clone());
        }
        out
    }

    pub fn from_coeffs_in(var: Var, coeffs: &[Poly<C>]) -> Self {
        let mut p = Self::zero();
        for (e, c) in coeffs.iter().enumerate() {
            for (m, x) in c.terms() {
                let mono = match var {
                    Var::Q => Monomial::new(e as u32 + m.q, m.u),
                    Var::U => Monomial::new(m.q, e as u32 + m.u),
                };
                p.add_term(mono, x.clone());
            }
        }
        p
    }

    /// Dense coefficients of a polynomial free of the other variable.
    pub(crate) fn dense_in(&self, var: Var) -> Vec<C> {
        debug_assert!(self.is_free_of(var.other()));
        let deg = self.degree(var).map_or(0, |d| d as usize + 1);
        let mut out = vec![C::zero(); deg];
        for (m, c) in &self.terms {
            let e = match var {
                Var::Q => m.q,
                Var::U => m.u,
            };
            out[e as usize] = c.clone();
        }
        out
    }

    pub(crate) fn from_dense_in(var: Var, coeffs: &[C]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, c)| {
            let m = match var {
                Var::Q => Monomial::new(i as u32, 0),
                Var::U => Monomial::new(0, i as u32),
            };
            (m, c.clone())
        }))
    }

    /// Coefficient sequence in `q` of a polynomial free of `u`.
    pub fn q_coeffs(&self) -> Vec<C> {
        self.dense_in(Var::Q)
    }

    /// Multiplier making this polynomial its canonical associate.
    pub(crate) fn normalizing_factor(&self) -> C {
        match self.leading() {
            Some((_, lead)) => C::normalizing_factor(self.terms.values(), lead),
            None => C::one(),
        }
    }

    /// Exact quotient `self / d` when `d` divides `self`; `None` otherwise.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        super::gcd::div_exact(self, d)
    }
}

fn pow_scalar<C: Scalar>(x: &C, e: u32) -> C {
    let mut acc = C::one();
    for _ in 0..e {
        acc = acc * x.clone();
    }
    acc
}

impl<C: Scalar> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Scalar> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<C: Scalar> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<C: Scalar> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        // univariate fast path; most values in this crate live in Q[q]
        if self.is_free_of(Var::U) && rhs.is_free_of(Var::U) {
            let prod = upoly::mul(&self.dense_in(Var::Q), &rhs.dense_in(Var::Q));
            return Poly::from_dense_in(Var::Q, &prod);
        }
        let mut out = Poly::zero();
        for (ma, a) in &self.terms {
            for (mb, b) in &rhs.terms {
                out.add_term(
                    Monomial::new(ma.q + mb.q, ma.u + mb.u),
                    a.clone() * b.clone(),
                );
            }
        }
        out
    }
}

impl<C: Scalar> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => ($(
        impl<C: Scalar> $tr for Poly<C> {
            type Output = Poly<C>;
            fn $f(self, rhs: Poly<C>) -> Poly<C> { (&self).$f(&rhs) }
        }
        impl<C: Scalar> $tr<&Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $f(self, rhs: &Poly<C>) -> Poly<C> { (&self).$f(rhs) }
        }
        impl<C: Scalar> $tr<Poly<C>> for &Poly<C> {
            type Output = Poly<C>;
            fn $f(self, rhs: Poly<C>) -> Poly<C> { self.$f(&rhs) }
        }
    )*)
}

forward_owned!(Add add, Sub sub, Mul mul);

impl<C: Scalar> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -&self
    }
}

fn write_factor(out: &mut String, var: &str, e: u32) {
    match e {
        0 => {}
        1 => out.push_str(var),
        _ => {
            out.push_str(var);
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
}

impl<C: Scalar> Poly<C> {
    /// Canonical string: terms in ascending monomial order, each written
    /// `c*q^a*u^b` with unit coefficients and zero exponents elided and
    /// fractional coefficients parenthesized, e.g. `1-2*q+(1/2)*q^2*u`.
    pub fn to_canonical_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { -c.clone() } else { c.clone() };
            if neg {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            let is_const = m.q == 0 && m.u == 0;
            let mut body = String::new();
            write_factor(&mut body, "q", m.q);
            if m.q > 0 && m.u > 0 {
                body.push('*');
            }
            write_factor(&mut body, "u", m.u);
            let mag_str = mag.to_string();
            if is_const {
                out.push_str(&mag_str);
            } else if mag.is_one() {
                out.push_str(&body);
            } else if mag_str.contains('/') {
                out.push_str(&format!("({mag_str})*{body}"));
            } else {
                out.push_str(&format!("{mag_str}*{body}"));
            }
        }
        out
    }
}

impl<C: Scalar> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl<C: Scalar> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.to_canonical_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{BiPoly, Rational};

    fn q() -> BiPoly {
        BiPoly::q()
    }

    #[test]
    fn grlex_orders_q_above_u() {
        assert!(Monomial::new(1, 0) > Monomial::new(0, 1));
        assert!(Monomial::new(0, 2) > Monomial::new(1, 0));
        assert!(Monomial::new(2, 0) > Monomial::new(1, 1));
    }

    #[test]
    fn canonical_strings() {
        let p = BiPoly::one() + q() * q() - BiPoly::u().scale(&Rational::new(1.into(), 2.into()));
        assert_eq!(p.to_canonical_string(), "1-(1/2)*u+q^2");
        assert_eq!(BiPoly::zero().to_canonical_string(), "0");
        assert_eq!((q() * BiPoly::u()).scale(&Rational::from_integer((-3).into())).to_string(), "-3*q*u");
    }

    #[test]
    fn no_zero_terms_after_cancellation() {
        let p = (BiPoly::one() + q()) - q();
        assert_eq!(p, BiPoly::one());
        assert_eq!(p.num_terms(), 1);
    }

    #[test]
    fn base_substitution() {
        // u*q -> (u q^2) * q^3
        let p = BiPoly::u() * q();
        assert_eq!(p.substitute_base(3, 2), BiPoly::monomial(Rational::from_integer(1.into()), 5, 1));
    }

    #[test]
    fn coefficient_split_roundtrip() {
        let p = (BiPoly::one() - BiPoly::u() * q()).pow(3);
        let parts = p.coeffs_in(Var::U);
        assert_eq!(parts.len(), 4);
        assert_eq!(BiPoly::from_coeffs_in(Var::U, &parts), p);
    }

    #[test]
    fn float_polynomials_evaluate() {
        let p: Poly<f64> = (Poly::one() + Poly::q()).pow(2);
        assert_eq!(p.eval(&0.5, &0.0), 2.25);
    }
}
