//! Dense univariate helpers on coefficient vectors (index = exponent).
//!
//! These back the gcd and the truncated series; the public polynomial type
//! is the sparse bivariate [`Poly`](super::Poly).

use crate::Scalar;

pub(crate) fn trim<C: Scalar>(mut a: Vec<C>) -> Vec<C> {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

pub(crate) fn degree<C: Scalar>(a: &[C]) -> Option<usize> {
    a.iter().rposition(|c| !c.is_zero())
}

pub(crate) fn add<C: Scalar>(a: &[C], b: &[C]) -> Vec<C> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x.clone() + y.clone(),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => C::zero(),
        })
        .collect();
    trim(out)
}

pub(crate) fn sub<C: Scalar>(a: &[C], b: &[C]) -> Vec<C> {
    let neg: Vec<C> = b.iter().map(|c| -c.clone()).collect();
    add(a, &neg)
}

pub(crate) fn mul<C: Scalar>(a: &[C], b: &[C]) -> Vec<C> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![C::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = out[i + j].clone() + x.clone() * y.clone();
            }
        }
    }
    trim(out)
}

pub(crate) fn scale<C: Scalar>(a: &[C], c: &C) -> Vec<C> {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x.clone() * c.clone()).collect()
}

/// Quotient and remainder over a field. Panics on a zero divisor.
pub(crate) fn divrem<C: Scalar>(a: &[C], b: &[C]) -> (Vec<C>, Vec<C>) {
    let db = degree(b).expect("division by zero polynomial");
    let lead = b[db].clone();
    let mut rem = trim(a.to_vec());
    let Some(da) = degree(&rem) else {
        return (Vec::new(), Vec::new());
    };
    if da < db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![C::zero(); da - db + 1];
    for shift in (0..=da - db).rev() {
        let top = rem.get(shift + db).cloned().unwrap_or_else(C::zero);
        if top.is_zero() {
            continue;
        }
        let f = top / lead.clone();
        for (j, bj) in b.iter().enumerate().take(db + 1) {
            if !bj.is_zero() {
                rem[shift + j] = rem[shift + j].clone() - f.clone() * bj.clone();
            }
        }
        // exact for fields; forced for floats
        rem[shift + db] = C::zero();
        quot[shift] = f;
    }
    (trim(quot), trim(rem))
}

pub(crate) fn make_monic<C: Scalar>(a: Vec<C>) -> Vec<C> {
    match degree(&a) {
        Some(d) => {
            let inv = C::one() / a[d].clone();
            scale(&a, &inv)
        }
        None => a,
    }
}

/// Monic gcd by the Euclidean algorithm; `gcd(0, 0) = 0`.
pub(crate) fn gcd<C: Scalar>(a: &[C], b: &[C]) -> Vec<C> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        // keep remainders monic to limit coefficient growth
        x = y;
        y = make_monic(r);
    }
    make_monic(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[f64]) -> Vec<f64> {
        xs.to_vec()
    }

    #[test]
    fn divrem_reconstructs() {
        let a = v(&[1.0, 0.0, -1.0, 2.0]);
        let b = v(&[1.0, 1.0]);
        let (q, r) = divrem(&a, &b);
        assert_eq!(add(&mul(&q, &b), &r), a);
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (1+x)(1-x) and (1+x)^2
        let g = gcd(&v(&[1.0, 0.0, -1.0]), &v(&[1.0, 2.0, 1.0]));
        assert_eq!(g, v(&[1.0, 1.0]));
    }
}
