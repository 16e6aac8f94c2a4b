//! Fixed-precision p-adic arithmetic and the Riemann-sum p-adic q-integral.
//!
//! Residues live in `[0, p^M)` with `p^M` no larger than `u64::MAX`;
//! products go through `u128`. Values that may carry a negative valuation
//! (integrals divide by `[p^N]_q`, closed forms have `p` in denominators)
//! are [`PadicValue`]s: `p^shift * digits`, known to a stated absolute
//! precision.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::bernoulli::{beta, integral_qpow, qbinom_exponent_corrected, qbinom_exponent_printed, qbinom_integral_closed};
use crate::error::PadicError;
use crate::identity::{IdentityResult, VariantTag, Verdict};
use crate::stirling::s1_table;
use crate::{RatFunc, Rational};

/// Terms per parallel chunk of a Riemann sum.
const CHUNK: u64 = 4096;

/// Default cap on the number of terms `p^N` of a single Riemann sum.
pub const DEFAULT_BUDGET: u64 = 1 << 26;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `Z/p^M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PadicRing {
    p: u64,
    precision: u32,
    modulus: u64,
}

impl PadicRing {
    pub fn new(p: u64, precision: u32) -> Result<Self, PadicError> {
        if p == 2 || !is_prime(p) {
            return Err(PadicError::NotOddPrime(p));
        }
        if precision == 0 {
            return Err(PadicError::InsufficientPrecision { loss: 0, precision });
        }
        let modulus = p
            .checked_pow(precision)
            .ok_or(PadicError::PrecisionTooLarge { p, precision })?;
        Ok(PadicRing { p, precision, modulus })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn pow_p(&self, e: u32) -> u64 {
        self.p.pow(e)
    }

    pub fn zero(&self) -> PadicInt {
        PadicInt { ring: *self, residue: 0 }
    }

    pub fn one(&self) -> PadicInt {
        self.int(1)
    }

    pub fn int(&self, v: i64) -> PadicInt {
        let m = self.modulus as i128;
        PadicInt {
            ring: *self,
            residue: (v as i128).rem_euclid(m) as u64,
        }
    }

    fn big(&self, v: &BigInt) -> PadicInt {
        let r = v.mod_floor(&BigInt::from(self.modulus));
        PadicInt {
            ring: *self,
            residue: r.to_u64().expect("reduced below modulus"),
        }
    }

    /// A rational with a unit denominator.
    pub fn from_rational(&self, r: &Rational) -> Result<PadicInt, PadicError> {
        let den = self.big(r.denom());
        let inv = den.inv().map_err(|_| PadicError::Unrepresentable(r.denom().to_string()))?;
        Ok(&self.big(r.numer()) * &inv)
    }

    /// Any rational, with its p-power split off.
    pub fn value_from_rational(&self, r: &Rational) -> PadicValue {
        if r.is_zero() {
            return PadicValue::zero_to(*self, self.precision as i64);
        }
        let p = BigInt::from(self.p);
        let strip = |v: &BigInt| {
            let mut v = v.abs();
            let mut e = 0i64;
            while v.is_multiple_of(&p) {
                v /= &p;
                e += 1;
            }
            (v, e)
        };
        let (mut num, en) = strip(r.numer());
        if r.is_negative() {
            num = -num;
        }
        let (den, ed) = strip(r.denom());
        let unit = &self.big(&num) * &self.big(&den).inv().expect("p stripped");
        PadicValue::new(*self, en - ed, unit.residue, self.precision)
    }
}

/// Residue modulo `p^M`.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct PadicInt {
    ring: PadicRing,
    residue: u64,
}

impl PadicInt {
    pub fn ring(&self) -> PadicRing {
        self.ring
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn is_zero(&self) -> bool {
        self.residue == 0
    }

    /// Largest `e <= M` with `p^e` dividing the residue; `M` for zero.
    pub fn valuation(&self) -> u32 {
        if self.residue == 0 {
            return self.ring.precision;
        }
        let mut r = self.residue;
        let mut e = 0;
        while r % self.ring.p == 0 {
            r /= self.ring.p;
            e += 1;
        }
        e
    }

    pub fn is_unit(&self) -> bool {
        self.residue % self.ring.p != 0
    }

    pub fn pow(&self, mut e: u64) -> PadicInt {
        let mut base = *self;
        let mut acc = self.ring.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            base = &base * &base;
        }
        acc
    }

    /// Inverse of a unit.
    pub fn inv(&self) -> Result<PadicInt, PadicError> {
        if !self.is_unit() {
            return Err(PadicError::NonUnit(self.valuation()));
        }
        let m = self.ring.modulus as i128;
        let (mut a, mut b) = (self.residue as i128, m);
        let (mut x0, mut x1) = (1i128, 0i128);
        while b != 0 {
            let t = a / b;
            (a, b) = (b, a - t * b);
            (x0, x1) = (x1, x0 - t * x1);
        }
        Ok(PadicInt {
            ring: self.ring,
            residue: x0.rem_euclid(m) as u64,
        })
    }

    fn check(&self, rhs: &PadicInt) {
        assert_eq!(self.ring, rhs.ring, "mixed p-adic rings");
    }
}

impl Add for &PadicInt {
    type Output = PadicInt;
    fn add(self, rhs: &PadicInt) -> PadicInt {
        self.check(rhs);
        let m = self.ring.modulus as u128;
        PadicInt {
            ring: self.ring,
            residue: ((self.residue as u128 + rhs.residue as u128) % m) as u64,
        }
    }
}

impl Neg for &PadicInt {
    type Output = PadicInt;
    fn neg(self) -> PadicInt {
        PadicInt {
            ring: self.ring,
            residue: if self.residue == 0 { 0 } else { self.ring.modulus - self.residue },
        }
    }
}

impl Sub for &PadicInt {
    type Output = PadicInt;
    fn sub(self, rhs: &PadicInt) -> PadicInt {
        self + &(-rhs)
    }
}

impl Mul for &PadicInt {
    type Output = PadicInt;
    fn mul(self, rhs: &PadicInt) -> PadicInt {
        self.check(rhs);
        PadicInt {
            ring: self.ring,
            residue: mulmod(self.residue, rhs.residue, self.ring.modulus),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => ($(
        impl $tr for PadicInt {
            type Output = PadicInt;
            fn $f(self, rhs: PadicInt) -> PadicInt { (&self).$f(&rhs) }
        }
    )*)
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for PadicInt {
    type Output = PadicInt;
    fn neg(self) -> PadicInt {
        -&self
    }
}

impl fmt::Display for PadicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {}^{})", self.residue, self.ring.p, self.ring.precision)
    }
}

impl fmt::Debug for PadicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PadicInt({self})")
    }
}

/// `p^shift * digits`, known modulo `p^(shift + width)`. `digits` is a unit
/// modulo `p^width`, or zero when the value vanishes to that precision.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PadicValue {
    ring: PadicRing,
    shift: i64,
    digits: u64,
    width: u32,
}

impl PadicValue {
    fn new(ring: PadicRing, shift: i64, digits: u64, width: u32) -> Self {
        let m = ring.pow_p(width);
        let mut d = digits % m;
        if d == 0 {
            return Self::zero_to(ring, shift + width as i64);
        }
        let (mut shift, mut width) = (shift, width);
        while d % ring.p == 0 {
            d /= ring.p;
            shift += 1;
            width -= 1;
        }
        PadicValue { ring, shift, digits: d, width }
    }

    fn zero_to(ring: PadicRing, abs_precision: i64) -> Self {
        PadicValue {
            ring,
            shift: abs_precision,
            digits: 0,
            width: 0,
        }
    }

    /// `num / den` where both are known modulo `p^M`.
    pub fn ratio(num: &PadicInt, den: &PadicInt) -> Result<Self, PadicError> {
        num.check(den);
        let ring = num.ring;
        let m = ring.precision;
        let vd = den.valuation();
        if vd >= m {
            return Err(PadicError::InsufficientPrecision { loss: vd, precision: m });
        }
        let vn = num.valuation();
        // num = p^vn s (s mod p^(M-vn)), den = p^vd w (w mod p^(M-vd))
        let width = (m - vn).min(m - vd);
        if vn >= m {
            return Ok(Self::zero_to(ring, m as i64 - vd as i64));
        }
        let sub = PadicRing { p: ring.p, precision: width, modulus: ring.pow_p(width) };
        let s = PadicInt { ring: sub, residue: (num.residue / ring.pow_p(vn)) % sub.modulus };
        let w = PadicInt { ring: sub, residue: (den.residue / ring.pow_p(vd)) % sub.modulus };
        let q = &s * &w.inv()?;
        Ok(Self::new(ring, vn as i64 - vd as i64, q.residue, width))
    }

    pub fn ring(&self) -> PadicRing {
        self.ring
    }

    /// Valuation, or `None` when the value is zero to the known precision.
    pub fn valuation(&self) -> Option<i64> {
        (self.digits != 0).then_some(self.shift)
    }

    /// The value is known modulo `p^abs_precision`.
    pub fn abs_precision(&self) -> i64 {
        self.shift + self.width as i64
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// Unit part, modulo `p^width`.
    pub fn digits(&self) -> u64 {
        self.digits
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn sub(&self, rhs: &PadicValue) -> PadicValue {
        assert_eq!(self.ring, rhs.ring, "mixed p-adic rings");
        let abs = self.abs_precision().min(rhs.abs_precision());
        let base = self.shift.min(rhs.shift);
        if abs <= base {
            return Self::zero_to(self.ring, abs);
        }
        let width = (abs - base) as u32;
        let m = self.ring.pow_p(width) as u128;
        let lift = |v: &PadicValue| -> u128 {
            let k = (v.shift - base) as u32;
            if k >= width {
                0
            } else {
                (v.digits as u128 % m) * self.ring.pow_p(k) as u128 % m
            }
        };
        let d = (lift(self) + m - lift(rhs)) % m;
        Self::new(self.ring, base, d as u64, width)
    }

    /// Valuation of `self - target`.
    pub fn error_valuation(&self, target: &PadicValue) -> ErrorValuation {
        let d = self.sub(target);
        match d.valuation() {
            Some(v) => ErrorValuation::Exact(v),
            None => ErrorValuation::AtLeast(d.abs_precision()),
        }
    }
}

impl fmt::Display for PadicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.ring.p;
        if self.digits == 0 {
            return write!(f, "0 (mod {p}^{})", self.abs_precision());
        }
        match self.shift {
            0 => write!(f, "{}", self.digits)?,
            s => write!(f, "{}*{p}^{s}", self.digits)?,
        }
        write!(f, " (mod {p}^{})", self.abs_precision())
    }
}

/// Distance of an approximation from its target, as a valuation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorValuation {
    Exact(i64),
    /// Zero to the available precision.
    AtLeast(i64),
}

impl ErrorValuation {
    pub fn lower_bound(&self) -> i64 {
        match *self {
            ErrorValuation::Exact(v) | ErrorValuation::AtLeast(v) => v,
        }
    }
}

impl fmt::Display for ErrorValuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ErrorValuation::Exact(v) => write!(f, "{v}"),
            ErrorValuation::AtLeast(v) => write!(f, ">={v}"),
        }
    }
}

/// Strict growth of error valuations. Two saturated neighbours count as
/// growth; a measured value after a saturated one does not (the earlier
/// level may already have been better).
pub fn strictly_increasing(errs: &[ErrorValuation]) -> bool {
    use ErrorValuation::*;
    errs.windows(2).all(|w| match (w[0], w[1]) {
        (Exact(a), Exact(b)) | (Exact(a), AtLeast(b)) => b > a,
        (AtLeast(_), AtLeast(_)) => true,
        (AtLeast(_), Exact(_)) => false,
    })
}

/// A point `q` with `v_p(q - 1) >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QPoint {
    q: PadicInt,
    value: i64,
    budget: u64,
}

impl QPoint {
    pub fn new(p: u64, precision: u32, q: i64) -> Result<Self, PadicError> {
        let ring = PadicRing::new(p, precision)?;
        let qi = ring.int(q);
        let v = (&qi - &ring.one()).valuation();
        if v < 1 {
            return Err(PadicError::QOutOfRegion { q: q.to_string(), valuation: v });
        }
        Ok(QPoint { q: qi, value: q, budget: DEFAULT_BUDGET })
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn ring(&self) -> PadicRing {
        self.q.ring
    }

    pub fn q(&self) -> PadicInt {
        self.q
    }

    /// `q` as the integer it was built from.
    pub fn value(&self) -> i64 {
        self.value
    }

    pub fn rational(&self) -> Rational {
        Rational::from_integer(self.value.into())
    }

    /// `(q^n, [n]_q)` by doubling: `[a+b] = [a] + q^a [b]`.
    pub fn power_and_bracket(&self, n: u64) -> (PadicInt, PadicInt) {
        let ring = self.ring();
        let (mut qa, mut ba) = (ring.one(), ring.zero());
        for bit in (0..64).rev() {
            ba = &ba + &(&qa * &ba);
            qa = &qa * &qa;
            if (n >> bit) & 1 == 1 {
                ba = &ba + &qa;
                qa = &qa * &self.q;
            }
        }
        (qa, ba)
    }

    pub fn bracket(&self, n: u64) -> PadicInt {
        self.power_and_bracket(n).1
    }

    /// Closed form evaluated at this `q`, as a p-adic value.
    pub fn eval(&self, f: &RatFunc) -> Result<PadicValue, PadicError> {
        let r = f
            .eval(&self.rational())
            .map_err(|e| PadicError::Unrepresentable(e.to_string()))?;
        Ok(self.ring().value_from_rational(&r))
    }
}

/// What an integrand sees at `x`: `x`, `q^x` and `[x]_q`.
#[derive(Clone, Copy, Debug)]
pub struct XPoint {
    pub x: u64,
    pub qx: PadicInt,
    pub bracket: PadicInt,
}

/// `sum_{x < terms} f(x) q^x`, summed in chunks of `chunk` terms in
/// parallel; chunk results merge by modular addition.
pub(crate) fn weighted_sum<F>(f: &F, terms: u64, qp: &QPoint, chunk: u64) -> PadicInt
where
    F: Fn(&XPoint) -> PadicInt + Sync,
{
    let ring = qp.ring();
    let chunks = terms.div_ceil(chunk);
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * chunk;
            let end = terms.min(start + chunk);
            let (mut qx, mut bracket) = qp.power_and_bracket(start);
            let mut acc = ring.zero();
            for x in start..end {
                let pt = XPoint { x, qx, bracket };
                acc = &acc + &(&f(&pt) * &qx);
                bracket = &ring.one() + &(&qp.q * &bracket);
                qx = &qx * &qp.q;
            }
            acc
        })
        .reduce(|| ring.zero(), |a, b| &a + &b)
}

fn level_terms(level: u32, qp: &QPoint) -> Result<u64, PadicError> {
    let p = qp.ring().p;
    match p.checked_pow(level) {
        Some(t) if t <= qp.budget => Ok(t),
        t => Err(PadicError::BudgetExceeded {
            requested: t.unwrap_or(u64::MAX),
            budget: qp.budget,
        }),
    }
}

/// `(1/[p^N]_q) sum_{x < p^N} f(x) q^x`. Dividing by `[p^N]_q`, which has
/// valuation `N` in this region, costs `N` digits of absolute precision.
pub fn riemann_sum<F>(f: F, level: u32, qp: &QPoint) -> Result<PadicValue, PadicError>
where
    F: Fn(&XPoint) -> PadicInt + Sync,
{
    let terms = level_terms(level, qp)?;
    let den = qp.bracket(terms);
    let loss = den.valuation();
    if loss >= qp.ring().precision {
        return Err(PadicError::InsufficientPrecision { loss, precision: qp.ring().precision });
    }
    debug_assert_eq!(loss, level, "[p^N]_q should have valuation N");
    let num = weighted_sum(&f, terms, qp, CHUNK);
    PadicValue::ratio(&num, &den)
}

/// One level of a convergence measurement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelResult {
    pub level: u32,
    pub value: PadicValue,
    pub error: ErrorValuation,
}

/// Riemann sums at levels `1..=L` against an exact target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Convergence {
    pub target: PadicValue,
    pub levels: Vec<LevelResult>,
}

impl Convergence {
    pub fn errors(&self) -> Vec<ErrorValuation> {
        self.levels.iter().map(|l| l.error).collect()
    }

    /// Strictly increasing error valuation from level `from` on.
    pub fn witness_from(&self, from: u32) -> bool {
        let errs: Vec<_> = self.levels.iter().filter(|l| l.level >= from).map(|l| l.error).collect();
        errs.len() >= 2 && strictly_increasing(&errs)
    }

    pub fn converges(&self) -> bool {
        self.witness_from(2)
    }

    pub fn last(&self) -> &LevelResult {
        self.levels.last().expect("at least one level")
    }
}

fn measure<F>(f: F, qp: &QPoint, levels: u32, target: &RatFunc) -> Result<Convergence, PadicError>
where
    F: Fn(&XPoint) -> PadicInt + Sync,
{
    let target = qp.eval(target)?;
    let levels = (1..=levels)
        .map(|level| {
            let value = riemann_sum(&f, level, qp)?;
            Ok(LevelResult { level, error: value.error_valuation(&target), value })
        })
        .collect::<Result<Vec<_>, PadicError>>()?;
    Ok(Convergence { target, levels })
}

/// Riemann sums of `[x]_q^n` against `beta_n` at this `q`.
pub fn beta_padic(n: u32, qp: &QPoint, levels: u32) -> Result<Convergence, PadicError> {
    measure(|pt| pt.bracket.pow(n as u64), qp, levels, &beta(n))
}

/// Riemann sums of `q^(k x)` against `(k+1)/[k+1]_q`.
pub fn qpow_integral_padic(k: u32, qp: &QPoint, levels: u32) -> Result<Convergence, PadicError> {
    measure(|pt| pt.qx.pow(k as u64), qp, levels, &integral_qpow(k))
}

/// `[x choose n]_q` for `x < terms`, by `[x+1, k] = q^k [x, k] + [x, k-1]`.
fn qbinom_values(n: u32, terms: u64, qp: &QPoint) -> Vec<PadicInt> {
    let ring = qp.ring();
    let qk: Vec<PadicInt> = (0..=n).map(|k| qp.q.pow(k as u64)).collect();
    let mut row = vec![ring.zero(); n as usize + 1];
    row[0] = ring.one();
    let mut out = Vec::with_capacity(terms as usize);
    for _ in 0..terms {
        out.push(row[n as usize]);
        for k in (1..=n as usize).rev() {
            row[k] = &(&qk[k] * &row[k]) + &row[k - 1];
        }
    }
    out
}

/// Riemann sums of `[x choose n]_q` against a closed value with exponent
/// `exponent`: `(-1)^n q^exponent / [n+1]_q`.
pub fn qbinom_integral_padic(n: u32, qp: &QPoint, levels: u32, exponent: i64) -> Result<Convergence, PadicError> {
    let terms = level_terms(levels, qp)?;
    let values = qbinom_values(n, terms, qp);
    measure(|pt| values[pt.x as usize], qp, levels, &qbinom_integral_closed(n, exponent))
}

/// The numerical integral of `[x choose n]_q` decides between the printed
/// exponent and the corrected one; the Stirling-expansion value is checked
/// the same way.
pub fn qbinom_padic_check(n: u32, qp: &QPoint, levels: u32) -> Result<Vec<IdentityResult>, PadicError> {
    let params = padic_params(qp, &[("n", n as i64), ("levels", levels as i64)]);
    let params: Vec<(&str, i64)> = params.iter().map(|(k, v)| (*k, *v)).collect();
    let printed = qbinom_integral_padic(n, qp, levels, qbinom_exponent_printed(n))?;
    let corrected = qbinom_integral_padic(n, qp, levels, qbinom_exponent_corrected(n))?;
    let table = crate::bernoulli::BernoulliTable::<Rational>::new(n);
    let s1 = s1_table::<Rational>(n as usize);
    let s1_beta: RatFunc = (0..=n).map(|k| &s1.get(n as usize, k as i64) * table.get(k)).sum();
    let stirling = &(&RatFunc::q_pow(-((n as i64) * (n as i64 - 1) / 2)) * &s1_beta)
        / &RatFunc::from_poly(crate::qcore::q_factorial(n));
    let terms = level_terms(levels, qp)?;
    let values = qbinom_values(n, terms, qp);
    let via_stirling = measure(|pt| values[pt.x as usize], qp, levels, &stirling)?;
    Ok(vec![
        convergence_result("padic-qbinom", VariantTag::AsPrinted, &params, &printed),
        convergence_result("padic-qbinom", VariantTag::Corrected, &params, &corrected),
        convergence_result("padic-qbinom-stirling", VariantTag::AsPrinted, &params, &via_stirling),
    ])
}

fn padic_params(qp: &QPoint, extra: &[(&'static str, i64)]) -> Vec<(&'static str, i64)> {
    let mut v = vec![
        ("p", qp.ring().p as i64),
        ("M", qp.ring().precision as i64),
        ("q", qp.value),
    ];
    v.extend_from_slice(extra);
    v
}

/// A convergence measurement as an identity verdict: equal when the error
/// valuations grow strictly from level 2 on.
pub fn convergence_result(id: &str, variant: VariantTag, params: &[(&str, i64)], c: &Convergence) -> IdentityResult {
    let verdict = if c.converges() {
        Verdict::Equal
    } else {
        let errs: Vec<String> = c.errors().iter().map(|e| e.to_string()).collect();
        Verdict::Counterexample {
            lhs: format!("error valuations [{}]", errs.join(", ")),
            rhs: c.target.to_string(),
        }
    };
    IdentityResult::new(id, variant, params, verdict)
}

/// `riemann_sum(1) = 1` to the available precision.
pub fn measure_check(level: u32, qp: &QPoint) -> Result<IdentityResult, PadicError> {
    let one = qp.ring().one();
    let s = riemann_sum(|_| one, level, qp)?;
    let params = padic_params(qp, &[("level", level as i64)]);
    let verdict = match s.error_valuation(&qp.ring().value_from_rational(&Rational::from_integer(1.into()))) {
        ErrorValuation::AtLeast(_) => Verdict::Equal,
        ErrorValuation::Exact(_) => Verdict::Counterexample { lhs: s.to_string(), rhs: "1".into() },
    };
    Ok(IdentityResult::new("padic-measure", VariantTag::AsPrinted, &params, verdict))
}

/// `beta_padic` as a verdict.
pub fn beta_padic_check(n: u32, qp: &QPoint, levels: u32) -> Result<IdentityResult, PadicError> {
    let params = padic_params(qp, &[("n", n as i64), ("levels", levels as i64)]);
    let c = beta_padic(n, qp, levels)?;
    Ok(convergence_result("padic-beta", VariantTag::AsPrinted, &params, &c))
}

/// `Gamma_{p,q}(n) = (-1)^n prod_{1 <= j < n, p ∤ j} [j]_q`.
pub fn q_gamma(n: u64, qp: &QPoint) -> PadicInt {
    let ring = qp.ring();
    let p = ring.p;
    let mut acc = if n % 2 == 0 { ring.one() } else { -ring.one() };
    let mut bracket = ring.one();
    for j in 1..n {
        if j % p != 0 {
            acc = &acc * &bracket;
        }
        bracket = &ring.one() + &(&qp.q * &bracket);
    }
    acc
}

/// `E_{p,q}(x)`: `-[x]_q` when `p ∤ x`, else `-1`.
pub fn gamma_factor(x: u64, qp: &QPoint) -> PadicInt {
    if x % qp.ring().p == 0 {
        -qp.ring().one()
    } else {
        -qp.bracket(x)
    }
}

/// `Gamma(x+1) = E(x) Gamma(x)` modulo `p^M`.
pub fn gamma_functional_check(x: u64, qp: &QPoint) -> IdentityResult {
    let lhs = q_gamma(x + 1, qp);
    let rhs = &gamma_factor(x, qp) * &q_gamma(x, qp);
    let params = padic_params(qp, &[("x", x as i64)]);
    let verdict = if lhs == rhs {
        Verdict::Equal
    } else {
        Verdict::Counterexample { lhs: lhs.to_string(), rhs: rhs.to_string() }
    };
    IdentityResult::new("eq16", VariantTag::AsPrinted, &params, verdict)
}

/// Outcome of comparing `|I(f)|_p` with `p` times a grid lower bound on
/// `||f||_1 = max(|f(0)|_p, sup |f(x) - f(y)|_p / |x - y|_p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormReport {
    pub level: u32,
    /// `log_p` of the grid bound.
    pub grid_norm_exponent: i64,
    /// Valuation of the level-`N` integral; `None` if zero to precision.
    pub integral_valuation: Option<i64>,
    pub bound_holds: bool,
}

impl NormReport {
    pub fn status(&self) -> &'static str {
        if self.bound_holds {
            "confirmed"
        } else {
            "inconclusive: grid bound is a lower bound on the true norm"
        }
    }
}

fn int_valuation(mut n: u64, p: u64) -> i64 {
    let mut e = 0;
    while n % p == 0 {
        n /= p;
        e += 1;
    }
    e
}

pub fn norm_diagnostic<F>(f: F, level: u32, qp: &QPoint) -> Result<NormReport, PadicError>
where
    F: Fn(&XPoint) -> PadicInt + Sync,
{
    let terms = level_terms(level, qp)?;
    let ring = qp.ring();
    let p = ring.p;
    let mut grid = Vec::with_capacity(terms as usize);
    let (mut qx, mut bracket) = (ring.one(), ring.zero());
    for x in 0..terms {
        grid.push(f(&XPoint { x, qx, bracket }));
        bracket = &ring.one() + &(&qp.q * &bracket);
        qx = &qx * &qp.q;
    }
    let at_zero = -(grid[0].valuation() as i64);
    let slopes = (0..terms)
        .into_par_iter()
        .map(|x| {
            ((x + 1)..terms)
                .filter_map(|y| {
                    let d = &grid[y as usize] - &grid[x as usize];
                    (!d.is_zero()).then(|| int_valuation(y - x, p) - d.valuation() as i64)
                })
                .max()
                .unwrap_or(i64::MIN)
        })
        .max()
        .unwrap_or(i64::MIN);
    let exponent = at_zero.max(slopes);
    let integral = riemann_sum(&f, level, qp)?;
    let integral_valuation = integral.valuation();
    let bound_holds = integral_valuation.is_none_or(|v| -v <= 1 + exponent);
    Ok(NormReport { level, grid_norm_exponent: exponent, integral_valuation, bound_holds })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp() -> QPoint {
        QPoint::new(5, 25, 6).unwrap()
    }

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn ring_validation() {
        assert_eq!(PadicRing::new(2, 5), Err(PadicError::NotOddPrime(2)));
        assert_eq!(PadicRing::new(9, 5), Err(PadicError::NotOddPrime(9)));
        assert!(matches!(PadicRing::new(5, 40), Err(PadicError::PrecisionTooLarge { .. })));
        assert!(PadicRing::new(5, 27).is_ok());
        let err = QPoint::new(5, 10, 7).unwrap_err();
        assert_eq!(err, PadicError::QOutOfRegion { q: "7".into(), valuation: 0 });
        assert!(err.to_string().contains("|q-1|_p"));
    }

    #[test]
    fn unit_arithmetic() {
        let r = PadicRing::new(5, 6).unwrap();
        let seven = r.int(7);
        assert_eq!((&seven * &seven.inv().unwrap()), r.one());
        assert_eq!(r.int(-1).residue(), 5u64.pow(6) - 1);
        assert_eq!(r.int(50).valuation(), 2);
        assert_eq!(r.zero().valuation(), 6);
        assert_eq!(r.int(10).inv(), Err(PadicError::NonUnit(1)));
        assert_eq!(r.from_rational(&rat(-1, 7)).unwrap() * r.int(7), r.int(-1));
        let v = r.value_from_rational(&rat(3, 25));
        assert_eq!((v.valuation(), v.digits()), (Some(-2), 3));
    }

    #[test]
    fn bracket_doubling() {
        let qp = qp();
        let mut b = qp.ring().zero();
        for n in 0..40u64 {
            assert_eq!(qp.bracket(n), b);
            assert_eq!(qp.power_and_bracket(n).0, qp.q().pow(n));
            b = &qp.ring().one() + &(&qp.q() * &b);
        }
        for level in 1..=6 {
            assert_eq!(qp.bracket(5u64.pow(level)).valuation(), level);
        }
    }

    #[test]
    fn measure_is_normalized() {
        let qp = qp();
        let one = qp.ring().value_from_rational(&rat(1, 1));
        for level in 1..=6 {
            let s = riemann_sum(|_| qp.ring().one(), level, &qp).unwrap();
            assert_eq!(s.valuation(), Some(0));
            assert_eq!(s.digits(), 1);
            assert_eq!(s.abs_precision(), 25 - level as i64);
            assert_eq!(s.error_valuation(&one), ErrorValuation::AtLeast(25 - level as i64));
        }
    }

    #[test]
    fn bracket_integral_matches_partial_sum_oracle() {
        let qp = qp();
        for level in 1..=5u32 {
            let s = riemann_sum(|pt| pt.bracket, level, &qp).unwrap();
            // (1/(1-q)) (1 - (1 + q^(p^N))/(1 + q)) at q = 6
            let big_q = num_bigint::BigInt::from(6).pow(5u32.pow(level));
            let exact = Rational::new(num_bigint::BigInt::from(1), num_bigint::BigInt::from(-5))
                * (Rational::from_integer(1.into()) - Rational::new(big_q + 1, 7.into()));
            let oracle = qp.ring().value_from_rational(&exact);
            assert_eq!(s.error_valuation(&oracle), ErrorValuation::AtLeast(s.abs_precision()));
        }
    }

    #[test]
    fn beta_convergence() {
        let qp = qp();
        let b0 = beta_padic(0, &qp, 4).unwrap();
        assert!(b0.levels.iter().all(|l| l.value.digits() == 1 && l.value.valuation() == Some(0)));
        let b1 = beta_padic(1, &qp, 5).unwrap();
        assert_eq!(b1.target, qp.ring().value_from_rational(&rat(-1, 7)));
        let errs: Vec<i64> = b1.errors().iter().map(|e| e.lower_bound()).collect();
        assert_eq!(errs, vec![1, 2, 3, 4, 5]);
        for n in 0..=6 {
            assert!(beta_padic(n, &qp, 5).unwrap().converges(), "n={n}");
        }
    }

    #[test]
    fn qpow_convergence() {
        let qp = qp();
        let c = qpow_integral_padic(1, &qp, 5).unwrap();
        assert_eq!(c.target, qp.ring().value_from_rational(&rat(2, 7)));
        assert!(c.converges());
    }

    #[test]
    fn qbinom_integral_selects_corrected_exponent() {
        let qp = qp();
        for n in 0..=3 {
            let rs = qbinom_padic_check(n, &qp, 5).unwrap();
            assert!(!rs[0].holds(), "printed n={n}");
            assert!(rs[1].holds(), "corrected n={n}");
            assert!(rs[2].holds(), "stirling n={n}");
        }
        let c = qbinom_integral_padic(1, &qp, 4, qbinom_exponent_corrected(1)).unwrap();
        assert_eq!(c.target, qp.ring().value_from_rational(&rat(-1, 7)));
        // [x choose 0] = 1: exact at every level
        let c0 = qbinom_integral_padic(0, &qp, 4, 0).unwrap();
        assert!(c0.errors().iter().all(|e| matches!(e, ErrorValuation::AtLeast(_))));
    }

    #[test]
    fn merge_order_does_not_matter() {
        let qp = qp();
        let f = |pt: &XPoint| pt.bracket.pow(3);
        let terms = 5u64.pow(4);
        let reference = weighted_sum(&f, terms, &qp, terms);
        for chunk in [1, 7, 64, 100, 4096] {
            assert_eq!(weighted_sum(&f, terms, &qp, chunk), reference, "chunk={chunk}");
        }
        let reversed = (0..terms).rev().fold(qp.ring().zero(), |acc, x| {
            let (qx, bracket) = qp.power_and_bracket(x);
            &acc + &(&f(&XPoint { x, qx, bracket }) * &qx)
        });
        assert_eq!(reversed, reference);
    }

    #[test]
    fn linearity() {
        let qp = qp();
        let r = qp.ring();
        let (a, b) = (r.int(3), r.int(-11));
        let f = |pt: &XPoint| pt.bracket.pow(2);
        let g = |pt: &XPoint| &pt.qx * &pt.bracket;
        let terms = 5u64.pow(3);
        let lhs = weighted_sum(&|pt: &XPoint| &(&a * &f(pt)) + &(&b * &g(pt)), terms, &qp, 16);
        let rhs = &(&a * &weighted_sum(&f, terms, &qp, 16)) + &(&b * &weighted_sum(&g, terms, &qp, 16));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn budget_and_precision() {
        let qp = QPoint::new(5, 25, 6).unwrap().with_budget(100);
        assert_eq!(
            riemann_sum(|pt| pt.bracket, 3, &qp),
            Err(PadicError::BudgetExceeded { requested: 125, budget: 100 })
        );
        let low = QPoint::new(5, 2, 6).unwrap();
        assert_eq!(
            riemann_sum(|pt| pt.bracket, 2, &low),
            Err(PadicError::InsufficientPrecision { loss: 2, precision: 2 })
        );
    }

    #[test]
    fn gamma() {
        let qp = qp();
        assert_eq!(q_gamma(1, &qp), -qp.ring().one());
        assert_eq!(gamma_factor(5, &qp), -qp.ring().one());
        assert_eq!(q_gamma(6, &qp), -q_gamma(5, &qp));
        for p in [5, 7] {
            let qp = QPoint::new(p, 20, 1 + p as i64).unwrap();
            for x in 1..=30 {
                assert!(gamma_functional_check(x, &qp).holds(), "p={p} x={x}");
            }
        }
    }

    #[test]
    fn norm_bound() {
        let qp = qp();
        let one = norm_diagnostic(|pt| pt.qx.ring().one(), 2, &qp).unwrap();
        assert_eq!(one.grid_norm_exponent, 0);
        assert!(one.bound_holds);
        for level in 1..=4 {
            assert!(norm_diagnostic(|pt| pt.bracket, level, &qp).unwrap().bound_holds);
            assert!(norm_diagnostic(|pt| pt.bracket.pow(3), level, &qp).unwrap().bound_holds);
        }
    }
}
