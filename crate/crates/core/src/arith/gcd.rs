//! Bivariate gcd and exact division.
//!
//! Polynomials are viewed recursively as polynomials in `u` whose
//! coefficients are dense polynomials in `q`. Degrees in `u` stay small in
//! this domain while degrees in `q` grow, so `u` is the main variable of the
//! primitive remainder sequence.

use super::poly::{Poly, Var};
use super::upoly;
use crate::Scalar;

type Rec<C> = Vec<Vec<C>>;

fn to_rec<C: Scalar>(p: &Poly<C>) -> Rec<C> {
    p.coeffs_in(Var::U)
        .iter()
        .map(|c| c.dense_in(Var::Q))
        .collect()
}

fn from_rec<C: Scalar>(r: &Rec<C>) -> Poly<C> {
    let parts: Vec<Poly<C>> = r.iter().map(|c| Poly::from_dense_in(Var::Q, c)).collect();
    Poly::from_coeffs_in(Var::U, &parts)
}

fn trim_rec<C: Scalar>(mut r: Rec<C>) -> Rec<C> {
    while r.last().is_some_and(|c| c.is_empty()) {
        r.pop();
    }
    r
}

fn content<C: Scalar>(r: &Rec<C>) -> Vec<C> {
    r.iter()
        .filter(|c| !c.is_empty())
        .fold(Vec::new(), |g, c| upoly::gcd(&g, c))
}

fn divide_coeffs<C: Scalar>(r: &Rec<C>, d: &[C]) -> Rec<C> {
    r.iter()
        .map(|c| {
            if c.is_empty() {
                Vec::new()
            } else {
                upoly::divrem(c, d).0
            }
        })
        .collect()
}

fn primitive_part<C: Scalar>(r: &Rec<C>) -> Rec<C> {
    let c = content(r);
    if c.is_empty() {
        return Vec::new();
    }
    divide_coeffs(r, &c)
}

/// Pseudo-remainder of `a` by `b` in `(K[q])[u]`.
fn prem<C: Scalar>(a: &Rec<C>, b: &Rec<C>) -> Rec<C> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = trim_rec(a.clone());
    while !r.is_empty() && r.len() - 1 >= db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next: Rec<C> = r.iter().map(|c| upoly::mul(c, lb)).collect();
        for (j, bj) in b.iter().enumerate() {
            let t = upoly::mul(&lr, bj);
            next[shift + j] = upoly::sub(&next[shift + j], &t);
        }
        next[dr] = Vec::new();
        r = trim_rec(next);
    }
    r
}

/// A greatest common divisor of `a` and `b` (unnormalized associate).
pub fn gcd<C: Scalar>(a: &Poly<C>, b: &Poly<C>) -> Poly<C> {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_free_of(Var::U) && b.is_free_of(Var::U) {
        let g = upoly::gcd(&a.dense_in(Var::Q), &b.dense_in(Var::Q));
        return Poly::from_dense_in(Var::Q, &g);
    }
    let ra = to_rec(a);
    let rb = to_rec(b);
    let c = upoly::gcd(&content(&ra), &content(&rb));
    let mut x = primitive_part(&ra);
    let mut y = primitive_part(&rb);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            // a primitive polynomial free of u is a unit
            x = vec![vec![C::one()]];
            break;
        }
        let r = prem(&x, &y);
        x = y;
        y = primitive_part(&r);
    }
    let g: Rec<C> = x.iter().map(|coef| upoly::mul(coef, &c)).collect();
    from_rec(&trim_rec(g))
}

/// Exact quotient, or `None` when `d` does not divide `a`.
pub fn div_exact<C: Scalar>(a: &Poly<C>, d: &Poly<C>) -> Option<Poly<C>> {
    if d.is_zero() {
        return None;
    }
    if a.is_zero() {
        return Some(Poly::zero());
    }
    if a.is_free_of(Var::U) && d.is_free_of(Var::U) {
        let (quot, rem) = upoly::divrem(&a.dense_in(Var::Q), &d.dense_in(Var::Q));
        return rem.is_empty().then(|| Poly::from_dense_in(Var::Q, &quot));
    }
    let rd = to_rec(d);
    let dd = rd.len() - 1;
    let ld = &rd[dd];
    let mut r = to_rec(a);
    if r.len() < rd.len() {
        return None;
    }
    let mut quot: Rec<C> = vec![Vec::new(); r.len() - dd];
    while !r.is_empty() {
        let dr = r.len() - 1;
        if dr < dd {
            return None;
        }
        let (t, rem) = upoly::divrem(&r[dr], ld);
        if !rem.is_empty() {
            return None;
        }
        let shift = dr - dd;
        for (j, dj) in rd.iter().enumerate() {
            let prod = upoly::mul(&t, dj);
            r[shift + j] = upoly::sub(&r[shift + j], &prod);
        }
        r[dr] = Vec::new();
        quot[shift] = t;
        r = trim_rec(r);
    }
    Some(from_rec(&trim_rec(quot)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{BiPoly, Rational};

    fn q() -> BiPoly {
        BiPoly::q()
    }
    fn u() -> BiPoly {
        BiPoly::u()
    }
    fn one() -> BiPoly {
        BiPoly::one()
    }

    fn assert_associate(g: &BiPoly, expected: &BiPoly) {
        let f = g.normalizing_factor();
        let e = expected.normalizing_factor();
        assert_eq!(g.scale(&f), expected.scale(&e), "{g} vs {expected}");
    }

    #[test]
    fn univariate_gcd() {
        let a = one() - q().pow(2);
        let b = one() - q();
        assert_associate(&gcd(&a, &b), &b);
    }

    #[test]
    fn bivariate_common_factor() {
        let f = one() - u();
        let a = &f * &(one() + q());
        let b = &f * &(one() - q() * u());
        assert_associate(&gcd(&a, &b), &f);
    }

    #[test]
    fn mixed_content_and_primitive_factors() {
        // gcd picks up both a q-only content factor and a factor in u
        let c = one() + q() + q().pow(2);
        let f = q() - u();
        let a = &(&c * &f) * &(one() + u());
        let b = &(&c * &f) * &(q().pow(3) + u().pow(2));
        assert_associate(&gcd(&a, &b), &(&c * &f));
    }

    #[test]
    fn coprime_is_unit() {
        let g = gcd(&(one() - u()), &(one() - q()));
        assert!(g.as_constant().is_some());
    }

    #[test]
    fn exact_division() {
        let a = (one() - u() * q()).pow(2) * (one() + q());
        let d = one() - u() * q();
        let expect = (one() - u() * q()) * (one() + q());
        assert_eq!(div_exact(&a, &d), Some(expect));
        assert_eq!(div_exact(&(one() + u()), &(one() - u())), None);
        let half = BiPoly::constant(Rational::new(1.into(), 2.into()));
        assert_eq!(div_exact(&q(), &half), Some(q().scale(&Rational::from_integer(2.into()))));
    }
}
