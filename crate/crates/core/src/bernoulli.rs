//! Carlitz q-Bernoulli numbers and polynomials, and the identities that tie
//! them to q-Stirling numbers and Gaussian binomials.
//!
//! Every function here is a rational function of `q` (and `u = q^x` for
//! the polynomials). Identities whose printed form does not survive a small
//! case check come with a `Corrected` variant built from the same
//! ingredients; both are reported.

use crate::arith::{Poly, RatFunc, TruncSeries, Var};
use crate::error::ArithError;
use crate::identity::{IdentityResult, VariantTag};
use crate::qcore::{q_binomial, q_binomial_via_compositions, q_factorial, q_int, x_bracket};
use crate::stirling::{falling_factor, s1_table, s2_table, StirlingTable};
use crate::Scalar;

fn binom<C: Scalar>(n: u32, k: u32) -> RatFunc<C> {
    RatFunc::constant(C::binomial(n as i64, k as i64))
}

fn binom2(n: u32) -> i64 {
    (n as i64) * (n as i64 - 1) / 2
}

fn rf_q_int<C: Scalar>(n: u32) -> RatFunc<C> {
    RatFunc::from_poly(q_int(n))
}

fn one_minus_q<C: Scalar>() -> RatFunc<C> {
    RatFunc::from_poly(Poly::one_minus_q_pow(1))
}

/// `(k+1)/[k+1]_q`, which is also the q-integral of `q^(k x)`.
pub fn integral_qpow<C: Scalar>(k: u32) -> RatFunc<C> {
    &RatFunc::int(k as i64 + 1) / &rf_q_int(k + 1)
}

/// `beta_{n,q} = (1-q)^(-n) sum_i C(n,i) (-1)^i (i+1)/[i+1]_q`.
pub fn beta<C: Scalar>(n: u32) -> RatFunc<C> {
    let sum: RatFunc<C> = (0..=n)
        .map(|i| &(&binom(n, i) * &RatFunc::sign(i as i64)) * &integral_qpow(i))
        .sum();
    &sum * &one_minus_q::<C>().pow(-(n as i64))
}

/// `beta_0 .. beta_max_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct BernoulliTable<C: Scalar> {
    beta: Vec<RatFunc<C>>,
}

impl<C: Scalar> BernoulliTable<C> {
    /// Built from the closed form.
    pub fn new(max_n: u32) -> Self {
        BernoulliTable {
            beta: (0..=max_n).map(beta).collect(),
        }
    }

    pub fn max_n(&self) -> u32 {
        self.beta.len() as u32 - 1
    }

    pub fn get(&self, n: u32) -> &RatFunc<C> {
        &self.beta[n as usize]
    }

    pub fn values(&self) -> &[RatFunc<C>] {
        &self.beta
    }
}

/// Solves `q(q beta + 1)^k - beta_k = [k = 1]` umbrally:
/// `(q^(k+1) - 1) beta_k = [k = 1] - q sum_{j<k} C(k,j) q^j beta_j`.
pub fn beta_via_recurrence<C: Scalar>(max_n: u32) -> BernoulliTable<C> {
    let mut beta: Vec<RatFunc<C>> = vec![RatFunc::one()];
    for k in 1..=max_n {
        let known: RatFunc<C> = (0..k)
            .map(|j| &(&binom(k, j) * &RatFunc::q_pow(j as i64)) * &beta[j as usize])
            .sum();
        let delta = if k == 1 { RatFunc::one() } else { RatFunc::zero() };
        let rhs = &delta - &(&RatFunc::q() * &known);
        let coeff = &RatFunc::q_pow(k as i64 + 1) - &RatFunc::one();
        beta.push(&rhs / &coeff);
    }
    BernoulliTable { beta }
}

/// q-Bernoulli polynomial from its closed form, with `q^(k x) = u^k`:
/// `(1-q)^(-n) sum_k C(n,k) (-1)^k u^k (k+1)/[k+1]_q`.
pub fn beta_poly<C: Scalar>(n: u32) -> RatFunc<C> {
    let sum: RatFunc<C> = (0..=n)
        .map(|k| {
            let w = &(&binom(n, k) * &RatFunc::sign(k as i64)) * &RatFunc::u().pow(k as i64);
            &w * &integral_qpow(k)
        })
        .sum();
    &sum * &one_minus_q::<C>().pow(-(n as i64))
}

/// The umbral form `(q^x beta + [x]_q)^n = sum_k C(n,k) [x]^(n-k) u^k beta_k`.
pub fn beta_poly_moment<C: Scalar>(n: u32, table: &BernoulliTable<C>) -> RatFunc<C> {
    let x = x_bracket::<C>();
    (0..=n)
        .map(|k| {
            let w = &binom(n, k) * &x.pow((n - k) as i64);
            &(&w * &RatFunc::u().pow(k as i64)) * table.get(k)
        })
        .sum()
}

/// `beta_{m,q}(n)` at an integer argument.
pub fn beta_at<C: Scalar>(m: u32, n: u32) -> RatFunc<C> {
    beta_poly::<C>(m).u_to_q_pow(n).expect("no pole at integer x")
}

/// Closed form of the polynomial against the umbral (moment) form.
pub fn beta_poly_check<C: Scalar>(n: u32) -> IdentityResult {
    let table = BernoulliTable::<C>::new(n);
    IdentityResult::compare("eq4-5", VariantTag::AsPrinted, &[("n", n as i64)], &beta_poly(n), &beta_poly_moment(n, &table))
}

/// The symbolic q-integral of a polynomial in `u` (coefficients rational in
/// `q`): linear, with `u^k -> (k+1)/[k+1]_q`.
pub fn q_integral<C: Scalar>(f: &RatFunc<C>) -> Result<RatFunc<C>, ArithError> {
    if !f.den().is_free_of(Var::U) {
        return Err(ArithError::NonUnitConstantTerm {
            constant: f.den().to_canonical_string(),
        });
    }
    let den = RatFunc::from_poly(f.den().clone());
    let sum: RatFunc<C> = f
        .num()
        .coeffs_in(Var::U)
        .into_iter()
        .enumerate()
        .map(|(k, c)| &RatFunc::from_poly(c) * &integral_qpow(k as u32))
        .sum();
    Ok(&sum / &den)
}

/// `sum_{l=0}^{n-1} q^(w l) [l]_q^m`, with `[0]_q^0 = 1`.
pub fn power_sum<C: Scalar>(n: u32, m: u32, w: u32) -> Poly<C> {
    (0..n).fold(Poly::zero(), |acc, l| &acc + &q_int::<C>(l).pow(m).shift(w * l, 0))
}

/// Sums of q-powers through q-Bernoulli polynomials.
///
/// * `eq11`, as printed: `beta_m(n) - beta_m = m sum q^(2l) [l]^(m-1)`.
/// * `eq11`, corrected (telescoping `sum q^l (q beta_m(l+1) - beta_m(l))`):
///   `q^n beta_m(n) - beta_m = m sum q^(2l)[l]^(m-1) + (q-1) sum q^l [l]^m`.
/// * `prop2`, as printed, and corrected as the expanded form of the line
///   above with `beta_m(n) = sum_l C(m,l) [n]^(m-l) q^(nl) beta_l`.
pub fn sum_formula_check<C: Scalar>(m: u32, n: u32) -> Vec<IdentityResult> {
    let params = [("m", m as i64), ("n", n as i64)];
    let b = BernoulliTable::<C>::new(m);
    let bm = b.get(m);
    let bmn = beta_at::<C>(m, n);
    let ps = |e: u32, w: u32| RatFunc::from_poly(power_sum::<C>(n, e, w));
    let mc = RatFunc::int(m as i64);
    let q_minus_1 = &RatFunc::q() - &RatFunc::one();
    // the factor m kills the [l]^(m-1) sum at m = 0
    let sq2 = if m == 0 { RatFunc::zero() } else { &mc * &ps(m - 1, 2) };
    let weighted_tail = &q_minus_1 * &ps(m, 1);

    let eq11_printed = IdentityResult::compare("eq11", VariantTag::AsPrinted, &params, &(&bmn - bm), &sq2);
    let lhs_c = &(&RatFunc::q_pow(n as i64) * &bmn) - bm;
    let eq11_fixed = IdentityResult::compare("eq11", VariantTag::Corrected, &params, &lhs_c, &(&sq2 + &weighted_tail));

    let qn = rf_q_int::<C>(n);
    let head = |shift: u32| -> RatFunc<C> {
        (0..m)
            .map(|l| {
                let w = &binom(m, l) * &qn.pow((m - l) as i64);
                &(&w * &RatFunc::q_pow((n * (l + shift)) as i64)) * b.get(l)
            })
            .sum()
    };
    let prop2_printed = if m == 0 {
        IdentityResult::undefined("prop2", VariantTag::AsPrinted, &params, "division by m = 0")
    } else {
        let p2_lhs = &weighted_tail + &ps(m - 1, 1);
        let p2_rhs = &(&head(0) / &mc) + &(&(&RatFunc::q_pow((m * n) as i64) - &RatFunc::one()) * bm);
        IdentityResult::compare("prop2", VariantTag::AsPrinted, &params, &p2_lhs, &p2_rhs)
    };
    let p2c_lhs = &weighted_tail + &sq2;
    let p2c_rhs = &head(1) + &(&(&RatFunc::q_pow((n * (m + 1)) as i64) - &RatFunc::one()) * bm);
    let prop2_fixed = IdentityResult::compare("prop2", VariantTag::Corrected, &params, &p2c_lhs, &p2c_rhs);

    vec![eq11_printed, eq11_fixed, prop2_printed, prop2_fixed]
}

/// `[m]^(k-1) sum_{i<m} q^i beta_{k,q^m}((x+i)/m) = beta_{k,q}(x)`, with the
/// inner polynomial realized by `q -> q^m`, `u -> u q^i`.
pub fn multiplication_theorem_check<C: Scalar>(m: u32, k: u32) -> IdentityResult {
    let base = beta_poly::<C>(k);
    let inner: RatFunc<C> = (0..m)
        .map(|i| &RatFunc::q_pow(i as i64) * &base.substitute_base(m, i))
        .sum();
    let lhs = &rf_q_int::<C>(m).pow(k as i64 - 1) * &inner;
    IdentityResult::compare("eq8", VariantTag::AsPrinted, &[("m", m as i64), ("k", k as i64)], &lhs, &base)
}

/// The `x = 0` specialization of the multiplication theorem with multiplier
/// `n` and index `m`:
/// corrected `[n] beta_m = sum_{k<=m} C(m,k) beta_{k,q^n} [n]^k sum_{j<n} q^(j(k+1)) [j]^(m-k)`;
/// the printed form has `beta_n` on the left and `[j]^(n-k)` inside, which
/// is undefined (`[0]^(n-k)` with `n < k`) once `m > n`.
pub fn multiplication_x0_check<C: Scalar>(m: u32, n: u32) -> Vec<IdentityResult> {
    let params = [("m", m as i64), ("n", n as i64)];
    let qn = rf_q_int::<C>(n);
    let rhs = |exponent: &dyn Fn(u32) -> i64| -> Option<RatFunc<C>> {
        let mut total = RatFunc::zero();
        for k in 0..=m {
            let e = exponent(k);
            if e < 0 {
                return None;
            }
            let inner: RatFunc<C> = (0..n)
                .map(|j| {
                    let w = RatFunc::q_pow((j * (k + 1)) as i64);
                    &w * &rf_q_int::<C>(j).pow(e)
                })
                .sum();
            let bk = beta::<C>(k).substitute_base(n, 0);
            total = &total + &(&(&(&binom(m, k) * &bk) * &qn.pow(k as i64)) * &inner);
        }
        Some(total)
    };
    let fixed = IdentityResult::compare(
        "eq8-x0",
        VariantTag::Corrected,
        &params,
        &(&qn * &beta::<C>(m)),
        &rhs(&|k| m as i64 - k as i64).expect("exponents nonnegative"),
    );
    let printed = match rhs(&|k| n as i64 - k as i64) {
        Some(r) => IdentityResult::compare("eq8-x0", VariantTag::AsPrinted, &params, &(&qn * &beta::<C>(n)), &r),
        None => IdentityResult::undefined("eq8-x0", VariantTag::AsPrinted, &params, "[0]_q raised to a negative power"),
    };
    vec![printed, fixed]
}

/// `[n]_q` as a series in `q`.
fn q_int_series<C: Scalar>(n: u32, order: usize) -> TruncSeries<C> {
    TruncSeries::from_poly(&q_int(n), Var::Q, order)
}

/// Both sides of the generating-function identity for `beta_m`, as series
/// in `q` through `q^order`: the expansion of `beta_m`, and the coefficient
/// of `t^m/m!` in `-t sum q^(2n) e^([n]t) + (1-q) sum q^n e^([n]t)`, i.e.
/// `-m sum q^(2n) [n]^(m-1) + (1-q) sum q^n [n]^m` summed over `n <= order`
/// (term `n` has q-valuation at least `n`).
pub fn lemma1_sides<C: Scalar>(m: u32, order: usize) -> (TruncSeries<C>, TruncSeries<C>) {
    let lhs = TruncSeries::expand(&beta::<C>(m), Var::Q, order).expect("beta has no pole at q = 0");
    let mut first = TruncSeries::zero(Var::Q, order);
    let mut second = TruncSeries::zero(Var::Q, order);
    for n in 0..=order as u32 {
        let qn = q_int_series::<C>(n, order);
        if m > 0 && (2 * n) as usize <= order {
            first = &first + &qn.pow(m - 1).shift(2 * n as usize);
        }
        second = &second + &qn.pow(m).shift(n as usize);
    }
    let one_minus = TruncSeries::from_poly(&Poly::one_minus_q_pow(1), Var::Q, order);
    let rhs = &first.scale(&C::from_int(-(m as i64))) + &(&one_minus * &second);
    (lhs, rhs)
}

pub fn gf_coefficient_check<C: Scalar>(m: u32, order: usize) -> IdentityResult {
    let (lhs, rhs) = lemma1_sides::<C>(m, order);
    IdentityResult::compare_poly("lemma1", VariantTag::AsPrinted, &[("m", m as i64), ("K", order as i64)], &lhs.to_poly(), &rhs.to_poly())
}

/// Same as [`lemma1_sides`] for the polynomials: `q^(2n+x) = q^(2n) u` and
/// `[n+x]_q = (1 - u q^n)/(1 - q)`.
pub fn eq7_sides<C: Scalar>(m: u32, order: usize) -> (TruncSeries<C>, TruncSeries<C>) {
    let lhs = TruncSeries::expand(&beta_poly::<C>(m), Var::Q, order).expect("no pole at q = 0");
    let geometric = TruncSeries::expand(&one_minus_q::<C>().inv().expect("nonzero"), Var::Q, order).expect("unit");
    let mut first = TruncSeries::zero(Var::Q, order);
    let mut second = TruncSeries::zero(Var::Q, order);
    for n in 0..=order as u32 {
        let shifted = &TruncSeries::from_poly(&(&Poly::one() - &Poly::monomial(C::one(), n, 1)), Var::Q, order) * &geometric;
        if m > 0 && (2 * n) as usize <= order {
            first = &first + &shifted.pow(m - 1).shift(2 * n as usize);
        }
        second = &second + &shifted.pow(m).shift(n as usize);
    }
    let one_minus = TruncSeries::from_poly(&Poly::one_minus_q_pow(1), Var::Q, order);
    let first = first.scale_poly(&Poly::u()).scale(&C::from_int(-(m as i64)));
    let rhs = &first + &(&one_minus * &second);
    (lhs, rhs)
}

pub fn gf_poly_coefficient_check<C: Scalar>(m: u32, order: usize) -> IdentityResult {
    let (lhs, rhs) = eq7_sides::<C>(m, order);
    IdentityResult::compare_poly("eq7", VariantTag::AsPrinted, &[("m", m as i64), ("K", order as i64)], &lhs.to_poly(), &rhs.to_poly())
}

/// Coefficient of `t^n/n!` in `e^(t/(1-q)) sum_k (-1)^k (1-q)^(-k) (k+1)/[k+1] t^k/k!`.
pub fn eq2_check<C: Scalar>(n: u32) -> IdentityResult {
    let inv = one_minus_q::<C>().inv().expect("nonzero");
    let rhs: RatFunc<C> = (0..=n)
        .map(|k| {
            let c = &(&RatFunc::sign(k as i64) * &inv.pow(k as i64)) * &integral_qpow(k);
            &(&binom(n, k) * &inv.pow((n - k) as i64)) * &c
        })
        .sum();
    IdentityResult::compare("eq2", VariantTag::AsPrinted, &[("n", n as i64)], &beta(n), &rhs)
}

/// The split `(k+1)/[k+1] = (1-q)(k + 1)/(1-q^(k+1))` behind the middle line
/// of the generating-function computation, read coefficient-wise.
pub fn eq3_split_check<C: Scalar>(n: u32) -> IdentityResult {
    let inv = one_minus_q::<C>().inv().expect("nonzero");
    let rhs: RatFunc<C> = (0..=n)
        .map(|k| {
            let c = if k == 0 {
                RatFunc::one()
            } else {
                let d = RatFunc::from_poly(Poly::one_minus_q_pow(k + 1));
                let w = &RatFunc::sign(k as i64) * &inv.pow(k as i64 - 1);
                &w * &(&(&RatFunc::int(k as i64) / &d) + &(&RatFunc::one() / &d))
            };
            &(&binom(n, k) * &inv.pow((n - k) as i64)) * &c
        })
        .sum();
    IdentityResult::compare("eq3", VariantTag::AsPrinted, &[("n", n as i64)], &beta(n), &rhs)
}

/// The two expansions of the q-integral of `q^(n t)` against the closed
/// value `(n+1)/[n+1]_q`: `eq18` (binomial in `(q-1)^m beta_m`) and `eq17`
/// (through Gaussian binomials and first-kind q-Stirling numbers).
pub fn eq17_eq18_check<C: Scalar>(n: u32) -> Vec<IdentityResult> {
    let table = BernoulliTable::<C>::new(n);
    let s1 = s1_table::<C>(n as usize);
    let q_minus_1 = &RatFunc::q() - &RatFunc::one();
    let closed = integral_qpow::<C>(n);
    let eq18: RatFunc<C> = (0..=n)
        .map(|m| &(&binom(n, m) * &q_minus_1.pow(m as i64)) * table.get(m))
        .sum();
    let eq17: RatFunc<C> = (0..=n)
        .map(|m| &stirling_gauss_coeff(n, m, 0, &s1) * table.get(m))
        .sum();
    let params = [("n", n as i64)];
    vec![
        IdentityResult::compare("eq18", VariantTag::AsPrinted, &params, &eq18, &closed),
        IdentityResult::compare("eq17", VariantTag::AsPrinted, &params, &eq17, &closed),
    ]
}

/// `sum_{k=m}^n (q-1)^(k - offset) [n choose k]_q s1(k, m)`.
fn stirling_gauss_coeff<C: Scalar>(n: u32, m: u32, offset: u32, s1: &StirlingTable<C>) -> RatFunc<C> {
    let q_minus_1 = &RatFunc::q() - &RatFunc::one();
    (m..=n)
        .map(|k| {
            let w = &q_minus_1.pow(k as i64 - offset as i64) * &RatFunc::from_poly(q_binomial(n, k as i64));
            &w * &s1.get(k as usize, m as i64)
        })
        .sum()
}

/// `C(n, m) = sum_{k=m}^n (q-1)^(k-m) [n choose k]_q s1(k, m)`.
pub fn theorem5_check<C: Scalar>(n: u32, m: u32) -> IdentityResult {
    let s1 = s1_table::<C>(n as usize);
    IdentityResult::compare(
        "thm5",
        VariantTag::AsPrinted,
        &[("n", n as i64), ("m", m as i64)],
        &stirling_gauss_coeff(n, m, m, &s1),
        &binom(n, m),
    )
}

/// Theorem 4 (nested sums through `beta_m`) and Theorem 6 (through
/// `(m+1)/[m+1]_q`) against `beta(n)`.
pub fn theorem4_6_check<C: Scalar>(n: u32) -> Vec<IdentityResult> {
    let table = BernoulliTable::<C>::new(n);
    let s1 = s1_table::<C>(n as usize);
    let scale = one_minus_q::<C>().pow(-(n as i64));
    let q_minus_1 = &RatFunc::q() - &RatFunc::one();
    let thm4: RatFunc<C> = (0..=n)
        .map(|l| {
            let inner: RatFunc<C> = (0..=l)
                .map(|k| {
                    let s: RatFunc<C> = (0..=k).map(|m| &s1.get(k as usize, m as i64) * table.get(m)).sum();
                    &(&q_minus_1.pow(k as i64) * &RatFunc::from_poly(q_binomial(l, k as i64))) * &s
                })
                .sum();
            &(&binom(n, l) * &RatFunc::sign(l as i64)) * &inner
        })
        .sum();
    let thm6: RatFunc<C> = (0..=n)
        .map(|m| {
            &(&stirling_gauss_coeff(n, m, m, &s1) * &RatFunc::sign(m as i64)) * &integral_qpow(m)
        })
        .sum();
    let params = [("n", n as i64)];
    vec![
        IdentityResult::compare("thm4", VariantTag::AsPrinted, &params, &(&scale * &thm4), table.get(n)),
        IdentityResult::compare("thm6", VariantTag::AsPrinted, &params, &(&scale * &thm6), table.get(n)),
    ]
}

/// Theorem 8 with the Gaussian binomial written as a composition sum; the
/// printed sign is `(-1)^(n-m)`, the corrected one `(-1)^k`.
pub fn theorem8_check<C: Scalar>(n: u32) -> Vec<IdentityResult> {
    let s1 = s1_table::<C>(n as usize);
    let target = beta::<C>(n);
    let gauss: Vec<RatFunc<C>> = (0..=n)
        .map(|k| RatFunc::from_poly(q_binomial_via_compositions(n, k)))
        .collect();
    let sum = |sign: &dyn Fn(u32, u32) -> i64| -> RatFunc<C> {
        (0..=n)
            .flat_map(|m| (m..=n).map(move |k| (m, k)))
            .map(|(m, k)| {
                let scale = one_minus_q::<C>().pow(-((n + m - k) as i64));
                let w = &(&scale * &gauss[k as usize]) * &s1.get(k as usize, m as i64);
                &(&w * &RatFunc::sign(sign(m, k))) * &integral_qpow(m)
            })
            .sum()
    };
    let params = [("n", n as i64)];
    vec![
        IdentityResult::compare("thm8", VariantTag::AsPrinted, &params, &sum(&|m, _| n as i64 - m as i64), &target),
        IdentityResult::compare("thm8", VariantTag::Corrected, &params, &sum(&|_, k| k as i64), &target),
    ]
}

/// `(-1)^n q^e / [n+1]_q`, the closed value of the q-integral of
/// `[x choose n]_q` for a given exponent `e`.
pub fn qbinom_integral_closed<C: Scalar>(n: u32, exponent: i64) -> RatFunc<C> {
    &(&RatFunc::sign(n as i64) * &RatFunc::q_pow(exponent)) / &rf_q_int(n + 1)
}

/// Printed exponent `n + 1 - C(n+1, 2)` of the Gaussian-binomial integral.
pub fn qbinom_exponent_printed(n: u32) -> i64 {
    n as i64 + 1 - binom2(n + 1)
}

/// Corrected exponent `-C(n, 2)`.
pub fn qbinom_exponent_corrected(n: u32) -> i64 {
    -binom2(n)
}

/// Bernoulli-Stirling identities, each with and without the leading factor
/// that the printed form carries:
/// * `eq22`: `(-1)^n [n]!/[n+1] = sum_k s1(n,k) beta_k` (printed has an extra `q`);
/// * `thm7`: `beta_n = sum_k s2(n,k) (-1)^k [k]!/[k+1]` (printed has an extra `q`);
/// * `eq20`: the Stirling-expansion value `q^(-C(n,2)) sum_k s1(n,k) beta_k / [n]!`
///   of the integral of `[x choose n]_q` against `(-1)^n q^e/[n+1]`;
/// * `eq21`: `[n]!` times the integral of `[x choose n]_q`, computed
///   directly from the `u`-expansion of `[x]_{n,q}`, equals
///   `q^(-C(n,2)) sum_k s1(n,k) beta_k`.
pub fn stirling_bernoulli_check<C: Scalar>(n: u32) -> Vec<IdentityResult> {
    let table = BernoulliTable::<C>::new(n);
    let s1 = s1_table::<C>(n as usize);
    let s2 = s2_table::<C>(n as usize);
    let fact = |k: u32| RatFunc::<C>::from_poly(q_factorial(k));
    let params = [("n", n as i64)];

    let s1_beta: RatFunc<C> = (0..=n).map(|k| &s1.get(n as usize, k as i64) * table.get(k)).sum();
    let eq22_plain = &(&RatFunc::sign(n as i64) * &fact(n)) / &rf_q_int(n + 1);
    let eq22_printed = &RatFunc::q() * &eq22_plain;

    let thm7_plain: RatFunc<C> = (0..=n)
        .map(|k| &(&s2.get(n as usize, k as i64) * &RatFunc::sign(k as i64)) * &(&fact(k) / &rf_q_int(k + 1)))
        .sum();
    let thm7_printed = &RatFunc::q() * &thm7_plain;

    let falling_integral = q_integral(&falling_factor::<C>(n)).expect("falling factor is polynomial in u");
    let stirling_value = &RatFunc::q_pow(-binom2(n)) * &s1_beta;
    let expansion = &stirling_value / &fact(n);

    vec![
        IdentityResult::compare("eq22", VariantTag::AsPrinted, &params, &eq22_printed, &s1_beta),
        IdentityResult::compare("eq22", VariantTag::Corrected, &params, &eq22_plain, &s1_beta),
        IdentityResult::compare("thm7", VariantTag::AsPrinted, &params, table.get(n), &thm7_printed),
        IdentityResult::compare("thm7", VariantTag::Corrected, &params, table.get(n), &thm7_plain),
        IdentityResult::compare("eq20", VariantTag::AsPrinted, &params, &expansion, &qbinom_integral_closed(n, qbinom_exponent_printed(n))),
        IdentityResult::compare("eq20", VariantTag::Corrected, &params, &expansion, &qbinom_integral_closed(n, qbinom_exponent_corrected(n))),
        IdentityResult::compare("eq21", VariantTag::AsPrinted, &params, &falling_integral, &stirling_value),
    ]
}

/// `beta_n` at `q = 1`.
pub fn classical_limit<C: Scalar>(n: u32) -> Result<C, ArithError> {
    beta::<C>(n).eval(&C::one())
}

/// `beta(n)` against the umbral recurrence.
pub fn recurrence_check<C: Scalar>(n: u32) -> IdentityResult {
    let rec = beta_via_recurrence::<C>(n);
    IdentityResult::compare("eq1", VariantTag::AsPrinted, &[("n", n as i64)], &beta(n), rec.get(n))
}

/// `beta_n` as the symbolic q-integral of `[x]_q^n`.
pub fn moment_check<C: Scalar>(n: u32) -> IdentityResult {
    let moment = q_integral(&x_bracket::<C>().pow(n as i64)).expect("polynomial in u");
    IdentityResult::compare("eq1-moment", VariantTag::AsPrinted, &[("n", n as i64)], &moment, &beta(n))
}
