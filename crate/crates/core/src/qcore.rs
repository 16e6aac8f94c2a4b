//! q-integers, q-factorials and Gaussian binomials, numeric and symbolic.

use crate::arith::{Poly, RatFunc, TruncSeries, Var};
use crate::identity::{IdentityResult, VariantTag};
use crate::Scalar;

/// `[n]_q = 1 + q + ... + q^(n-1)`.
pub fn q_int<C: Scalar>(n: u32) -> Poly<C> {
    Poly::from_terms((0..n).map(|i| (crate::Monomial::new(i, 0), C::one())))
}

/// `[n]_q!`, the empty product being 1.
pub fn q_factorial<C: Scalar>(n: u32) -> Poly<C> {
    (1..=n).fold(Poly::one(), |acc, i| &acc * &q_int(i))
}

/// Gaussian binomial `[n choose k]_q`; zero when `k < 0` or `k > n`.
pub fn q_binomial<C: Scalar>(n: u32, k: i64) -> Poly<C> {
    if k < 0 || k > n as i64 {
        return Poly::zero();
    }
    let k = k as u32;
    let (num, den) = (0..k).fold((Poly::one(), Poly::one()), |(num, den), i| {
        (
            &num * &Poly::one_minus_q_pow(n - i),
            &den * &Poly::one_minus_q_pow(i + 1),
        )
    });
    num.div_exact(&den).expect("Gaussian binomial is a polynomial")
}

/// `[x]_q = (1 - u)/(1 - q)` with `u = q^x`.
pub fn x_bracket<C: Scalar>() -> RatFunc<C> {
    x_shifted(0)
}

/// `[x + i]_q = (1 - u q^i)/(1 - q)` for any integer shift.
pub fn x_shifted<C: Scalar>(i: i64) -> RatFunc<C> {
    let one_minus_q = RatFunc::from_poly(Poly::one_minus_q_pow(1));
    let u_qi = RatFunc::u() * RatFunc::q_pow(i);
    (RatFunc::one() - u_qi) / one_minus_q
}

/// Symbolic `[x choose n]_q = [x]_q [x-1]_q ... [x-n+1]_q / [n]_q!`.
pub fn q_binomial_x<C: Scalar>(n: u32) -> RatFunc<C> {
    let falling: RatFunc<C> = (0..n as i64).map(|i| x_shifted(-i)).product();
    falling / RatFunc::from_poly(q_factorial(n))
}

/// Both Pascal rules for the symbolic Gaussian binomial.
///
/// Ids `eq19a` (`[x+1, n] = [x, n-1] + q^e [x, n]`) and `eq19b`
/// (`[x+1, n] = q^e [x, n-1] + [x, n]`). The printed exponents are `x` and
/// `x - n`; the corrected ones `n` and `x + 1 - n`.
pub fn pascal_check<C: Scalar>(n: u32) -> Vec<IdentityResult> {
    let params = [("n", n as i64)];
    let lhs = q_binomial_x::<C>(n).substitute_base(1, 1);
    let lower = q_binomial_x::<C>(n - 1);
    let same = q_binomial_x::<C>(n);
    let u = RatFunc::<C>::u();
    let n_i = n as i64;
    let a_printed = &lower + &(&u * &same);
    let a_fixed = &lower + &(&RatFunc::q_pow(n_i) * &same);
    let b_printed = &(&(&u * &RatFunc::q_pow(-n_i)) * &lower) + &same;
    let b_fixed = &(&(&u * &RatFunc::q_pow(1 - n_i)) * &lower) + &same;
    vec![
        IdentityResult::compare("eq19a", VariantTag::AsPrinted, &params, &lhs, &a_printed),
        IdentityResult::compare("eq19a", VariantTag::Corrected, &params, &lhs, &a_fixed),
        IdentityResult::compare("eq19b", VariantTag::AsPrinted, &params, &lhs, &b_printed),
        IdentityResult::compare("eq19b", VariantTag::Corrected, &params, &lhs, &b_fixed),
    ]
}

/// The factorial-ratio and product forms of the Gaussian binomial agree.
pub fn q_binomial_definition_check<C: Scalar>(n: u32, k: u32) -> IdentityResult {
    let ratio = RatFunc::<C>::from_poly(q_factorial(n))
        / RatFunc::from_poly(&q_factorial::<C>(k) * &q_factorial(n - k));
    let product = RatFunc::from_poly(q_binomial(n, k as i64));
    IdentityResult::compare("eq12", VariantTag::AsPrinted, &[("n", n as i64), ("k", k as i64)], &ratio, &product)
}

/// An ordered tuple `(d_0, ..., d_k)` of nonnegative parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Composition(pub Vec<u32>);

impl Composition {
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `sum_i i * d_i`
    pub fn weight(&self) -> u32 {
        self.0.iter().enumerate().map(|(i, d)| i as u32 * d).sum()
    }
}

/// Weak compositions of `total` into `slots` parts, in reverse
/// lexicographic order starting from `(total, 0, ..., 0)`.
#[derive(Clone, Debug)]
pub struct Compositions {
    next: Option<Vec<u32>>,
}

pub fn compositions(total: u32, slots: usize) -> Compositions {
    assert!(slots >= 1, "compositions need at least one slot");
    let mut first = vec![0; slots];
    first[0] = total;
    Compositions { next: Some(first) }
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.next.take()?;
        let mut c = current.clone();
        let last = c.len() - 1;
        let tail = c[last];
        c[last] = 0;
        if let Some(i) = (0..last).rev().find(|&i| c[i] > 0) {
            c[i] -= 1;
            c[i + 1] = tail + 1;
            self.next = Some(c);
        }
        Some(Composition(current))
    }
}

/// `[n choose k]_q` as `sum q^(sum i d_i)` over compositions of `n - k`
/// into `k + 1` parts.
pub fn q_binomial_via_compositions<C: Scalar>(n: u32, k: u32) -> Poly<C> {
    assert!(k <= n);
    compositions(n - k, k as usize + 1).fold(Poly::zero(), |acc, c| {
        &acc + &Poly::q_pow(c.weight())
    })
}

/// Composition sum against the product formula.
pub fn composition_check<C: Scalar>(n: u32, k: u32) -> IdentityResult {
    IdentityResult::compare_poly(
        "eq23",
        VariantTag::AsPrinted,
        &[("n", n as i64), ("k", k as i64)],
        &q_binomial_via_compositions::<C>(n, k),
        &q_binomial::<C>(n, k as i64),
    )
}

/// `prod_{i=1}^n (1 + b q^(i-1))` with `b` realized as `u`.
pub fn gauss_product<C: Scalar>(n: u32) -> Poly<C> {
    (1..=n).fold(Poly::one(), |acc, i| &acc * &(&Poly::one() + &Poly::monomial(C::one(), i - 1, 1)))
}

/// The finite q-binomial theorem with exponent `C(k, 2)` (corrected) and
/// `C(n, k)` (as printed).
pub fn gauss_product_check<C: Scalar>(n: u32) -> Vec<IdentityResult> {
    let product = gauss_product::<C>(n);
    let expansion = |exponent: &dyn Fn(u32) -> u32| -> Poly<C> {
        (0..=n).fold(Poly::zero(), |acc, k| {
            &acc + &q_binomial::<C>(n, k as i64).shift(exponent(k), k)
        })
    };
    let corrected = expansion(&|k| k * k.saturating_sub(1) / 2);
    let printed = expansion(&|k| binom_u32(n, k));
    let params = [("n", n as i64)];
    vec![
        IdentityResult::compare_poly("eq13", VariantTag::AsPrinted, &params, &product, &printed),
        IdentityResult::compare_poly("eq13", VariantTag::Corrected, &params, &product, &corrected),
    ]
}

fn binom_u32(n: u32, k: u32) -> u32 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1)) as u32
}

/// `prod_{i=1}^n (1 - b q^(i-1))^(-1)` through `b^order`, compared with
/// `sum_k [n+k-1 choose k]_q b^k`: the corrected reading sums every
/// `k <= order`, the printed one stops at `k = n`.
pub fn inverse_gauss_check<C: Scalar>(n: u32, order: usize) -> Vec<IdentityResult> {
    let den = (1..=n).fold(Poly::one(), |acc, i| &acc * &(&Poly::one() - &Poly::monomial(C::one(), i - 1, 1)));
    let f = RatFunc::new(Poly::one(), den).expect("nonzero product");
    let series = TruncSeries::expand(&f, Var::U, order).expect("constant term 1");
    let sum_to = |top: usize| -> Poly<C> {
        let coeffs: Vec<Poly<C>> = (0..=order)
            .map(|k| {
                if k <= top {
                    q_binomial(n + k as u32 - 1, k as i64)
                } else {
                    Poly::zero()
                }
            })
            .collect();
        TruncSeries::from_coeffs(Var::U, order, coeffs).to_poly()
    };
    let params = [("n", n as i64), ("order", order as i64)];
    vec![
        IdentityResult::compare_poly("eq13-inverse", VariantTag::AsPrinted, &params, &series.to_poly(), &sum_to(n as usize)),
        IdentityResult::compare_poly("eq13-inverse", VariantTag::Corrected, &params, &series.to_poly(), &sum_to(order)),
    ]
}

/// `sum_{k=1}^n (-1)^(k+1) q^C(k,2) [n choose k]_q = 1`.
pub fn alternating_binomial_sum_check<C: Scalar>(n: u32) -> IdentityResult {
    let sum = (1..=n).fold(Poly::<C>::zero(), |acc, k| {
        let term = q_binomial::<C>(n, k as i64).shift(k * (k - 1) / 2, 0);
        if k % 2 == 1 {
            &acc + &term
        } else {
            &acc - &term
        }
    });
    IdentityResult::compare_poly("alt-qbinom-sum", VariantTag::AsPrinted, &[("n", n as i64)], &sum, &Poly::one())
}
