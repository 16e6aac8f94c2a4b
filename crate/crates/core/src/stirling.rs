//! q-Stirling numbers of both kinds and the q-harmonic identities built on
//! them.
//!
//! First kind: `[x]_{n,q} = q^(-C(n,2)) sum_l s1(n,l) [x]_q^l`, filled by
//! `s1(n,k) = s1(n-1,k-1) - [n-1]_q s1(n-1,k)`.
//! Second kind: `[x]_q^n = sum_k q^C(k,2) s2(n,k) [x]_{k,q}`, obtained by
//! inverting the first-kind basis change.

use crate::arith::RatFunc;
use crate::error::ArithError;
use crate::identity::{IdentityResult, VariantTag};
use crate::qcore::{q_binomial, q_factorial, q_int, x_bracket, x_shifted};
use crate::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StirlingKind {
    First,
    Second,
}

/// Triangle `entries[n][k]`, `0 <= k <= n <= max_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct StirlingTable<C: Scalar> {
    kind: StirlingKind,
    entries: Vec<Vec<RatFunc<C>>>,
}

impl<C: Scalar> StirlingTable<C> {
    pub fn kind(&self) -> StirlingKind {
        self.kind
    }

    pub fn max_n(&self) -> usize {
        self.entries.len() - 1
    }

    /// Entry `(n, k)`; zero outside the triangle.
    pub fn get(&self, n: usize, k: i64) -> RatFunc<C> {
        if k < 0 || k as usize > n {
            return RatFunc::zero();
        }
        self.entries[n][k as usize].clone()
    }

    pub fn row(&self, n: usize) -> &[RatFunc<C>] {
        &self.entries[n]
    }
}

fn binom2(n: usize) -> i64 {
    (n * n.saturating_sub(1) / 2) as i64
}

pub fn s1_table<C: Scalar>(max_n: usize) -> StirlingTable<C> {
    let mut entries: Vec<Vec<RatFunc<C>>> = vec![vec![RatFunc::one()]];
    for n in 1..=max_n {
        let prev = &entries[n - 1];
        let factor = RatFunc::from_poly(q_int::<C>(n as u32 - 1));
        let at = |k: usize| prev.get(k).cloned().unwrap_or_else(RatFunc::zero);
        let row = (0..=n)
            .map(|k| {
                let left = if k == 0 { RatFunc::zero() } else { at(k - 1) };
                &left - &(&factor * &at(k))
            })
            .collect();
        entries.push(row);
    }
    StirlingTable {
        kind: StirlingKind::First,
        entries,
    }
}

pub type Matrix<C> = Vec<Vec<RatFunc<C>>>;

/// `M1[n][m] = q^(-C(n,2)) s1(n,m)`: falling factors in the power basis.
pub fn falling_to_power_matrix<C: Scalar>(s1: &StirlingTable<C>) -> Matrix<C> {
    (0..=s1.max_n())
        .map(|n| {
            let w = RatFunc::q_pow(-binom2(n));
            (0..=s1.max_n()).map(|m| &w * &s1.get(n, m as i64)).collect()
        })
        .collect()
}

/// `M2[n][k] = q^C(k,2) s2(n,k)`: powers in the falling-factor basis.
pub fn power_to_falling_matrix<C: Scalar>(s2: &StirlingTable<C>) -> Matrix<C> {
    (0..=s2.max_n())
        .map(|n| {
            (0..=s2.max_n())
                .map(|k| &RatFunc::q_pow(binom2(k)) * &s2.get(n, k as i64))
                .collect()
        })
        .collect()
}

/// Inverse of a lower-triangular matrix with nonzero diagonal.
pub fn invert_lower_triangular<C: Scalar>(l: &Matrix<C>) -> Matrix<C> {
    let n = l.len();
    let mut x: Matrix<C> = vec![vec![RatFunc::zero(); n]; n];
    for i in 0..n {
        let inv_diag = l[i][i].inv().expect("triangular matrix has nonzero diagonal");
        x[i][i] = inv_diag.clone();
        for j in (0..i).rev() {
            let acc: RatFunc<C> = (j..i).map(|k| &l[i][k] * &x[k][j]).sum();
            x[i][j] = -(&inv_diag * &acc);
        }
    }
    x
}

pub fn mat_mul<C: Scalar>(a: &Matrix<C>, b: &Matrix<C>) -> Matrix<C> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Second kind by triangular inversion of the first-kind basis change.
pub fn s2_table<C: Scalar>(max_n: usize) -> StirlingTable<C> {
    let m1 = falling_to_power_matrix(&s1_table::<C>(max_n));
    let m2 = invert_lower_triangular(&m1);
    let entries = (0..=max_n)
        .map(|n| {
            (0..=n)
                .map(|k| &RatFunc::q_pow(-binom2(k)) * &m2[n][k])
                .collect()
        })
        .collect();
    StirlingTable {
        kind: StirlingKind::Second,
        entries,
    }
}

/// `M1 M2 = I` and `M2 M1 = I` through size `max_n + 1`.
pub fn basis_inverse_check<C: Scalar>(max_n: usize) -> Vec<IdentityResult> {
    let m1 = falling_to_power_matrix(&s1_table::<C>(max_n));
    let m2 = power_to_falling_matrix(&s2_table::<C>(max_n));
    let params = [("N", max_n as i64)];
    let identity_entry = |i: usize, j: usize| if i == j { RatFunc::one() } else { RatFunc::zero() };
    let mut out = Vec::new();
    for (name, prod) in [("stirling-inverse-12", mat_mul(&m1, &m2)), ("stirling-inverse-21", mat_mul(&m2, &m1))] {
        let bad = (0..=max_n)
            .flat_map(|i| (0..=max_n).map(move |j| (i, j)))
            .find(|&(i, j)| prod[i][j] != identity_entry(i, j));
        out.push(match bad {
            None => IdentityResult::compare(name, VariantTag::AsPrinted, &params, &RatFunc::<C>::one(), &RatFunc::one()),
            Some((i, j)) => IdentityResult::compare(
                name,
                VariantTag::AsPrinted,
                &[("N", max_n as i64), ("i", i as i64), ("j", j as i64)],
                &prod[i][j],
                &identity_entry(i, j),
            ),
        });
    }
    out
}

/// q-falling factor `[x]_{n,q} = [x]_q [x-1]_q ... [x-n+1]_q` in `(q, u)`.
pub fn falling_factor<C: Scalar>(n: u32) -> RatFunc<C> {
    (0..n as i64).map(|i| x_shifted(-i)).product()
}

/// Both defining expansions as identities in `(q, u)`.
pub fn basis_change_check<C: Scalar>(n: usize) -> Vec<IdentityResult> {
    let s1 = s1_table::<C>(n);
    let s2 = s2_table::<C>(n);
    let x = x_bracket::<C>();
    let params = [("n", n as i64)];
    let eq14_rhs: RatFunc<C> = &RatFunc::q_pow(-binom2(n))
        * &(0..=n).map(|l| &s1.get(n, l as i64) * &x.pow(l as i64)).sum();
    let eq15_rhs: RatFunc<C> = (0..=n)
        .map(|k| &(&RatFunc::q_pow(binom2(k)) * &s2.get(n, k as i64)) * &falling_factor(k as u32))
        .sum();
    vec![
        IdentityResult::compare("eq14", VariantTag::AsPrinted, &params, &falling_factor(n as u32), &eq14_rhs),
        IdentityResult::compare("eq15", VariantTag::AsPrinted, &params, &x.pow(n as i64), &eq15_rhs),
    ]
}

fn require_positive(n: u32) -> Result<(), ArithError> {
    if n < 1 {
        return Err(ArithError::Negative("n - 1"));
    }
    Ok(())
}

fn inv_q_int<C: Scalar>(k: u32) -> RatFunc<C> {
    RatFunc::from_poly(q_int::<C>(k)).inv().expect("[k]_q is nonzero for k >= 1")
}

/// `sum_{k=1}^n q^k / [k]_q`.
pub fn q_harmonic<C: Scalar>(n: u32) -> Result<RatFunc<C>, ArithError> {
    require_positive(n)?;
    Ok((1..=n).map(|k| &RatFunc::q_pow(k as i64) * &inv_q_int(k)).sum())
}

/// `sum_{k=1}^n (-1)^(k+1) q^C(k+1,2) [n choose k]_q / [k]_q`.
pub fn alt_binomial_harmonic<C: Scalar>(n: u32) -> Result<RatFunc<C>, ArithError> {
    require_positive(n)?;
    Ok((1..=n)
        .map(|k| {
            let w = &RatFunc::sign(k as i64 + 1) * &RatFunc::q_pow(binom2(k as usize + 1));
            &(&w * &RatFunc::from_poly(q_binomial(n, k as i64))) * &inv_q_int(k)
        })
        .sum())
}

/// Plain `sum_{k=1}^n 1/[k]_q`.
fn harmonic<C: Scalar>(n: u32) -> RatFunc<C> {
    (1..=n).map(inv_q_int).sum()
}

/// The alternating binomial-harmonic sum against `sum q^k/[k]` (corrected)
/// and `sum q^n/[k]` (as printed).
pub fn alt_harmonic_check<C: Scalar>(n: u32) -> Result<Vec<IdentityResult>, ArithError> {
    let lhs = alt_binomial_harmonic::<C>(n)?;
    let printed = &RatFunc::q_pow(n as i64) * &harmonic(n);
    let params = [("n", n as i64)];
    Ok(vec![
        IdentityResult::compare("alt-harmonic", VariantTag::AsPrinted, &params, &lhs, &printed),
        IdentityResult::compare("alt-harmonic", VariantTag::Corrected, &params, &lhs, &q_harmonic(n)?),
    ])
}

/// Finite-sum form of the q-digamma identity with `n` in the role of
/// `x - 1`: after substituting the logarithmic derivative of the p-adic
/// q-gamma function, the factor `(q-1)/log q` and the q-Euler constant
/// cancel and the statement is `alt_binomial_harmonic(n) = q_harmonic(n)`.
pub fn theorem3_formal_check<C: Scalar>(n: u32) -> Result<IdentityResult, ArithError> {
    Ok(IdentityResult::compare(
        "thm3",
        VariantTag::AsPrinted,
        &[("n", n as i64)],
        &alt_binomial_harmonic::<C>(n)?,
        &q_harmonic(n)?,
    ))
}

/// The index shift in the harmonic derivation:
/// `sum_{m=1}^n (-1)^(m+1) q^C(m+1,2) [n+1 choose m+1] H_m
///  = sum_{k=1}^n (-1)^(k+1) q^C(k+1,2) [n choose k]/[k]`
/// with `H_m = sum_{k<=m} 1/[k]_q`.
pub fn harmonic_shift_check<C: Scalar>(n: u32) -> Result<IdentityResult, ArithError> {
    let lhs: RatFunc<C> = (1..=n)
        .map(|m| {
            let w = &RatFunc::sign(m as i64 + 1) * &RatFunc::q_pow(binom2(m as usize + 1));
            &(&w * &RatFunc::from_poly(q_binomial(n + 1, m as i64 + 1))) * &harmonic(m)
        })
        .sum();
    Ok(IdentityResult::compare(
        "harmonic-shift",
        VariantTag::AsPrinted,
        &[("n", n as i64)],
        &lhs,
        &alt_binomial_harmonic(n)?,
    ))
}

/// One telescoping step:
/// `sum_k (-1)^(k+1) q^C(k+1,2) ([n,k] - [n-1,k])/[k] = q^n/[n]`.
pub fn harmonic_step_check<C: Scalar>(n: u32) -> Result<IdentityResult, ArithError> {
    require_positive(n)?;
    let lhs: RatFunc<C> = (1..=n)
        .map(|k| {
            let w = &RatFunc::sign(k as i64 + 1) * &RatFunc::q_pow(binom2(k as usize + 1));
            let diff = &q_binomial::<C>(n, k as i64) - &q_binomial(n - 1, k as i64);
            &(&w * &RatFunc::from_poly(diff)) * &inv_q_int(k)
        })
        .sum();
    let rhs = &RatFunc::q_pow(n as i64) * &inv_q_int(n);
    Ok(IdentityResult::compare("harmonic-step", VariantTag::AsPrinted, &[("n", n as i64)], &lhs, &rhs))
}

/// Closed forms `s1(n,1) = (-1)^(n-1) [n-1]!` (n >= 1) and
/// `s1(n,2) = (-1)^n [n-1]! sum_{k<n} 1/[k]` (n >= 2).
pub fn s1_closed_form_check<C: Scalar>(n: u32) -> Vec<IdentityResult> {
    let table = s1_table::<C>(n as usize);
    let params = [("n", n as i64)];
    let fact = RatFunc::from_poly(q_factorial::<C>(n.saturating_sub(1)));
    let mut out = Vec::new();
    if n >= 1 {
        let closed = &RatFunc::sign(n as i64 - 1) * &fact;
        out.push(IdentityResult::compare("s1-closed-k1", VariantTag::AsPrinted, &params, &table.get(n as usize, 1), &closed));
    }
    if n >= 2 {
        let closed = &(&RatFunc::sign(n as i64) * &fact) * &harmonic(n - 1);
        out.push(IdentityResult::compare("s1-closed-k2", VariantTag::AsPrinted, &params, &table.get(n as usize, 2), &closed));
    }
    out
}
