//! Every checkable identity, its variants, expectations and default
//! parameter ranges.

use carlitz::bernoulli as b;
use carlitz::padic::{self, QPoint, XPoint};
use carlitz::qcore as qc;
use carlitz::stirling as st;
use carlitz::{ArithError, IdentityResult, Rational, VariantTag, Verdict};

/// What a variant is expected to do across its parameter cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expect {
    /// Every cell must be an equality.
    MustPass,
    /// A falsified printed form: at least one cell must fail.
    Counterexample,
    /// Reported, never affects the exit status.
    Diagnostic,
}

impl Expect {
    pub fn as_str(self) -> &'static str {
        match self {
            Expect::MustPass => "must-pass",
            Expect::Counterexample => "expected-counterexample",
            Expect::Diagnostic => "diagnostic",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Entry {
    pub id: &'static str,
    pub variant: VariantTag,
    pub expect: Expect,
    pub description: &'static str,
}

/// One unit of work; cells run concurrently.
pub struct Cell {
    run: Box<dyn Fn() -> Vec<IdentityResult> + Send + Sync>,
}

impl Cell {
    fn new(f: impl Fn() -> Vec<IdentityResult> + Send + Sync + 'static) -> Self {
        Cell { run: Box::new(f) }
    }

    pub fn run(&self) -> Vec<IdentityResult> {
        (self.run)()
    }
}

/// A group of (id, variant) entries produced by the same check operation.
pub struct Descriptor {
    pub entries: Vec<Entry>,
    /// Human-readable default parameter space.
    pub space: &'static str,
    cells: fn(Option<u32>) -> Vec<Cell>,
}

impl Descriptor {
    /// Cells with the main index bound replaced by `max_n` when given.
    pub fn cells(&self, max_n: Option<u32>) -> Vec<Cell> {
        (self.cells)(max_n)
    }

    pub fn ids(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.iter().map(|e| e.id)
    }

    pub fn expectation(&self, id: &str, variant: VariantTag) -> Option<Expect> {
        self.entries
            .iter()
            .find(|e| e.id == id && e.variant == variant)
            .map(|e| e.expect)
    }
}

const P: VariantTag = VariantTag::AsPrinted;
const C: VariantTag = VariantTag::Corrected;

const fn must(id: &'static str, description: &'static str) -> Entry {
    Entry { id, variant: P, expect: Expect::MustPass, description }
}

const fn printed_fails(id: &'static str, description: &'static str) -> Entry {
    Entry { id, variant: P, expect: Expect::Counterexample, description }
}

const fn corrected(id: &'static str, description: &'static str) -> Entry {
    Entry { id, variant: C, expect: Expect::MustPass, description }
}

fn upto(default: u32, max_n: Option<u32>) -> u32 {
    max_n.unwrap_or(default)
}

fn per_n(range: impl Iterator<Item = u32>, f: fn(u32) -> Vec<IdentityResult>) -> Vec<Cell> {
    range.map(|n| Cell::new(move || f(n))).collect()
}

fn per_nk(pairs: Vec<(u32, u32)>, f: fn(u32, u32) -> Vec<IdentityResult>) -> Vec<Cell> {
    pairs.into_iter().map(|(n, k)| Cell::new(move || f(n, k))).collect()
}

fn triangle(top: u32) -> Vec<(u32, u32)> {
    (0..=top).flat_map(|n| (0..=n).map(move |k| (n, k))).collect()
}

fn or_undefined(
    id: &'static str,
    n: u32,
    r: Result<Vec<IdentityResult>, ArithError>,
) -> Vec<IdentityResult> {
    r.unwrap_or_else(|e| vec![IdentityResult::undefined(id, P, &[("n", n as i64)], e.to_string())])
}

/// Classical Bernoulli numbers from `sum_{k<=n} C(n+1,k) B_k = 0`; the
/// oracle for the `q -> 1` limit, independent of the q-side formulas.
pub fn classical_bernoulli(n: u32) -> Vec<Rational> {
    use carlitz::Scalar;
    let mut out = vec![Rational::from_integer(1.into())];
    for m in 1..=n as i64 {
        let s: Rational = (0..m)
            .map(|k| <Rational as Scalar>::binomial(m + 1, k) * out[k as usize].clone())
            .sum();
        out.push(-s / Rational::from_integer((m + 1).into()));
    }
    out
}

fn classical_limit_cell(n: u32) -> Vec<IdentityResult> {
    let params = [("n", n as i64)];
    let expect = classical_bernoulli(n).pop().expect("nonempty");
    let verdict = match b::classical_limit::<Rational>(n) {
        Ok(v) if v == expect => Verdict::Equal,
        Ok(v) => Verdict::Counterexample { lhs: v.to_string(), rhs: expect.to_string() },
        Err(e) => Verdict::Undefined { reason: e.to_string() },
    };
    vec![IdentityResult::new("classical-limit", P, &params, verdict)]
}

fn qpoint(p: u64, precision: u32, q: i64) -> QPoint {
    QPoint::new(p, precision, q).expect("registry uses valid p-adic points")
}

/// The p-adic lab runs at `p = 5, q = 6, M = 25`.
fn lab() -> QPoint {
    qpoint(5, 25, 6)
}

const LAB_LEVELS: u32 = 5;

fn padic_or_undefined(id: &'static str, r: Result<Vec<IdentityResult>, carlitz::PadicError>) -> Vec<IdentityResult> {
    r.unwrap_or_else(|e| vec![IdentityResult::undefined(id, P, &[], e.to_string())])
}

fn norm_cell(power: u32, level: u32) -> Vec<IdentityResult> {
    let qp = lab();
    let params = [("p", 5), ("q", 6), ("power", power as i64), ("level", level as i64)];
    let r = padic::norm_diagnostic(|pt: &XPoint| pt.bracket.pow(power as u64), level, &qp);
    let verdict = match r {
        Ok(rep) if rep.bound_holds => Verdict::Equal,
        Ok(rep) => Verdict::Counterexample {
            lhs: format!("|integral| = p^{}", rep.integral_valuation.map_or(0, |v| -v)),
            rhs: format!("p * p^{} ({})", rep.grid_norm_exponent, rep.status()),
        },
        Err(e) => Verdict::Undefined { reason: e.to_string() },
    };
    vec![IdentityResult::new("norm-diagnostic", P, &params, verdict)]
}

pub fn registry() -> Vec<Descriptor> {
    vec![
        Descriptor {
            entries: vec![must("eq1", "closed form of beta_n equals the umbral recurrence solution")],
            space: "n = 0..12",
            cells: |m| per_n(0..=upto(12, m), |n| vec![b::recurrence_check::<Rational>(n)]),
        },
        Descriptor {
            entries: vec![must("eq1-moment", "beta_n is the q-integral of [x]^n")],
            space: "n = 0..8",
            cells: |m| per_n(0..=upto(8, m), |n| vec![b::moment_check::<Rational>(n)]),
        },
        Descriptor {
            entries: vec![must("classical-limit", "beta_n at q = 1 is the classical Bernoulli number")],
            space: "n = 0..12",
            cells: |m| per_n(0..=upto(12, m), classical_limit_cell),
        },
        Descriptor {
            entries: vec![must("eq2", "t^n coefficient of the exponential generating function")],
            space: "n = 0..8",
            cells: |m| per_n(0..=upto(8, m), |n| vec![b::eq2_check::<Rational>(n)]),
        },
        Descriptor {
            entries: vec![must("eq3", "split of the generating function into two sums")],
            space: "n = 0..8",
            cells: |m| per_n(0..=upto(8, m), |n| vec![b::eq3_split_check::<Rational>(n)]),
        },
        Descriptor {
            entries: vec![must("lemma1", "beta_m as a q-series: -m sum q^2n [n]^(m-1) + (1-q) sum q^n [n]^m")],
            space: "m = 0..8, order 30",
            cells: |m| per_n(0..=upto(8, m), |m| vec![b::gf_coefficient_check::<Rational>(m, 30)]),
        },
        Descriptor {
            entries: vec![must("eq4-5", "q-Bernoulli polynomial: closed form equals umbral form")],
            space: "n = 0..6",
            cells: |m| per_n(0..=upto(6, m), |n| vec![b::beta_poly_check::<Rational>(n)]),
        },
        Descriptor {
            entries: vec![must("eq7", "beta_m(x) as a q-series with u = q^x")],
            space: "m = 0..5, order 20",
            cells: |m| per_n(0..=upto(5, m), |m| vec![b::gf_poly_coefficient_check::<Rational>(m, 20)]),
        },
        Descriptor {
            entries: vec![must("eq8", "multiplication theorem for q-Bernoulli polynomials")],
            space: "m = 1..3, k = 0..6",
            cells: |m| {
                let pairs = (1..=3).flat_map(|mm| (0..=upto(6, m)).map(move |k| (mm, k))).collect();
                per_nk(pairs, |mm, k| vec![b::multiplication_theorem_check::<Rational>(mm, k)])
            },
        },
        Descriptor {
            entries: vec![
                printed_fails("eq8-x0", "multiplication theorem at x = 0, printed indices"),
                corrected("eq8-x0", "multiplication theorem at x = 0, index m and multiplier n"),
            ],
            space: "m = 0..4, n = 1..3",
            cells: |m| {
                let pairs = (0..=upto(4, m)).flat_map(|mm| (1..=3).map(move |n| (mm, n))).collect();
                per_nk(pairs, b::multiplication_x0_check::<Rational>)
            },
        },
        Descriptor {
            entries: vec![
                printed_fails("eq11", "beta_m(n) - beta_m = m sum q^2l [l]^(m-1)"),
                corrected("eq11", "q^n beta_m(n) - beta_m = m sum q^2l [l]^(m-1) + (q-1) sum q^l [l]^m"),
                printed_fails("prop2", "sums of q-powers through beta_l, printed"),
                corrected("prop2", "sums of q-powers through beta_l, expanded telescoped form"),
            ],
            space: "m = 0..6, n = 0..5",
            cells: |m| {
                let pairs = (0..=upto(6, m)).flat_map(|mm| (0..=5).map(move |n| (mm, n))).collect();
                per_nk(pairs, b::sum_formula_check::<Rational>)
            },
        },
        Descriptor {
            entries: vec![must("eq12", "Gaussian binomial equals its factorial quotient")],
            space: "0 <= k <= n <= 10",
            cells: |m| per_nk(triangle(upto(10, m)), |n, k| vec![qc::q_binomial_definition_check::<Rational>(n, k)]),
        },
        Descriptor {
            entries: vec![
                printed_fails("eq13", "Gauss product with exponent C(n,k)"),
                corrected("eq13", "Gauss product with exponent C(k,2)"),
            ],
            space: "n = 0..8",
            cells: |m| per_n(0..=upto(8, m), qc::gauss_product_check::<Rational>),
        },
        Descriptor {
            entries: vec![
                printed_fails("eq13-inverse", "inverse Gauss product, sum stopped at k = n"),
                corrected("eq13-inverse", "inverse Gauss product as a full series"),
            ],
            space: "n = 1..4, order 5",
            cells: |m| per_n(1..=upto(4, m), |n| qc::inverse_gauss_check::<Rational>(n, 5)),
        },
        Descriptor {
            entries: vec![
                must("eq14", "q-falling factor in the power basis via s1"),
                must("eq15", "powers of [x] in the falling basis via s2"),
            ],
            space: "n = 0..10",
            cells: |m| per_n(0..=upto(10, m), |n| st::basis_change_check::<Rational>(n as usize)),
        },
        Descriptor {
            entries: vec![
                must("stirling-inverse-12", "falling-to-power times power-to-falling is the identity"),
                must("stirling-inverse-21", "power-to-falling times falling-to-power is the identity"),
            ],
            space: "N = 10",
            cells: |m| vec![Cell::new(move || st::basis_inverse_check::<Rational>(upto(10, m) as usize))],
        },
        Descriptor {
            entries: vec![
                printed_fails("eq19a", "Pascal rule [x+1,n] = [x,n-1] + q^x [x,n]"),
                corrected("eq19a", "Pascal rule with q^n"),
                printed_fails("eq19b", "Pascal rule [x+1,n] = q^(x-n) [x,n-1] + [x,n]"),
                corrected("eq19b", "Pascal rule with q^(x+1-n)"),
            ],
            space: "n = 1..8",
            cells: |m| per_n(1..=upto(8, m), qc::pascal_check::<Rational>),
        },
        Descriptor {
            entries: vec![
                must("eq17", "q-integral of q^(nt) through Gaussian binomials and s1"),
                must("eq18", "q-integral of q^(nt) through (q-1)^m beta_m"),
            ],
            space: "n = 0..10",
            cells: |m| per_n(0..=upto(10, m), b::eq17_eq18_check::<Rational>),
        },
        Descriptor {
            entries: vec![
                printed_fails("eq20", "integral of [x choose n] with exponent n+1-C(n+1,2)"),
                corrected("eq20", "integral of [x choose n] with exponent -C(n,2)"),
                must("eq21", "[n]! times the integral of [x choose n] via s1 and beta"),
                printed_fails("eq22", "q (-1)^n [n]!/[n+1] = sum s1(n,k) beta_k"),
                corrected("eq22", "(-1)^n [n]!/[n+1] = sum s1(n,k) beta_k"),
                printed_fails("thm7", "beta_n = q sum s2(n,k) (-1)^k [k]!/[k+1]"),
                corrected("thm7", "beta_n = sum s2(n,k) (-1)^k [k]!/[k+1]"),
            ],
            space: "n = 0..8",
            cells: |m| per_n(0..=upto(8, m), b::stirling_bernoulli_check::<Rational>),
        },
        Descriptor {
            entries: vec![must("eq23", "Gaussian binomial as a composition sum")],
            space: "0 <= k <= n <= 10",
            cells: |m| per_nk(triangle(upto(10, m)), |n, k| vec![qc::composition_check::<Rational>(n, k)]),
        },
        Descriptor {
            entries: vec![must("thm3", "finite-sum form of the q-digamma identity")],
            space: "n = 1..12",
            cells: |m| per_n(1..=upto(12, m), |n| or_undefined("thm3", n, st::theorem3_formal_check::<Rational>(n).map(|r| vec![r]))),
        },
        Descriptor {
            entries: vec![
                printed_fails("alt-harmonic", "alternating binomial-harmonic sum equals sum q^n/[k]"),
                corrected("alt-harmonic", "alternating binomial-harmonic sum equals sum q^k/[k]"),
            ],
            space: "n = 1..12",
            cells: |m| per_n(1..=upto(12, m), |n| or_undefined("alt-harmonic", n, st::alt_harmonic_check::<Rational>(n))),
        },
        Descriptor {
            entries: vec![must("harmonic-shift", "index shift in the harmonic derivation")],
            space: "n = 1..10",
            cells: |m| per_n(1..=upto(10, m), |n| or_undefined("harmonic-shift", n, st::harmonic_shift_check::<Rational>(n).map(|r| vec![r]))),
        },
        Descriptor {
            entries: vec![must("harmonic-step", "telescoping step of the harmonic derivation")],
            space: "n = 1..10",
            cells: |m| per_n(1..=upto(10, m), |n| or_undefined("harmonic-step", n, st::harmonic_step_check::<Rational>(n).map(|r| vec![r]))),
        },
        Descriptor {
            entries: vec![must("alt-qbinom-sum", "sum (-1)^(k+1) q^C(k,2) [n,k] = 1")],
            space: "n = 1..10",
            cells: |m| per_n(1..=upto(10, m), |n| vec![qc::alternating_binomial_sum_check::<Rational>(n)]),
        },
        Descriptor {
            entries: vec![
                must("s1-closed-k1", "s1(n,1) = (-1)^(n-1) [n-1]!"),
                must("s1-closed-k2", "s1(n,2) = (-1)^n [n-1]! H_(n-1)"),
            ],
            space: "n = 1..10",
            cells: |m| per_n(1..=upto(10, m), st::s1_closed_form_check::<Rational>),
        },
        Descriptor {
            entries: vec![
                must("thm4", "beta_n through Gaussian binomials, s1 and beta_m"),
                must("thm6", "beta_n through Gaussian binomials, s1 and (m+1)/[m+1]"),
            ],
            space: "n = 0..8",
            cells: |m| per_n(0..=upto(8, m), b::theorem4_6_check::<Rational>),
        },
        Descriptor {
            entries: vec![must("thm5", "C(n,m) = sum (q-1)^(k-m) [n,k] s1(k,m)")],
            space: "0 <= m <= n <= 10",
            cells: |m| per_nk(triangle(upto(10, m)), |n, k| vec![b::theorem5_check::<Rational>(n, k)]),
        },
        Descriptor {
            entries: vec![
                printed_fails("thm8", "beta_n via compositions with sign (-1)^(n-m)"),
                corrected("thm8", "beta_n via compositions with sign (-1)^k"),
            ],
            space: "n = 0..8",
            cells: |m| per_n(0..=upto(8, m), b::theorem8_check::<Rational>),
        },
        Descriptor {
            entries: vec![must("eq16", "Gamma_{p,q}(x+1) = E_{p,q}(x) Gamma_{p,q}(x)")],
            space: "p in {5, 7}, q = p + 1, M = 20, x = 1..30",
            cells: |_| {
                [5u64, 7]
                    .into_iter()
                    .map(|p| {
                        Cell::new(move || {
                            let qp = qpoint(p, 20, p as i64 + 1);
                            (1..=30).map(|x| padic::gamma_functional_check(x, &qp)).collect()
                        })
                    })
                    .collect()
            },
        },
        Descriptor {
            entries: vec![must("padic-measure", "Riemann sum of 1 is 1 at every level")],
            space: "p = 5, q = 6, M = 25, level = 1..5",
            cells: |_| per_n(1..=LAB_LEVELS, |l| padic_or_undefined("padic-measure", padic::measure_check(l, &lab()).map(|r| vec![r]))),
        },
        Descriptor {
            entries: vec![must("padic-beta", "Riemann sums of [x]^n converge to beta_n")],
            space: "p = 5, q = 6, M = 25, n = 0..6, levels 1..5",
            cells: |m| per_n(0..=upto(6, m), |n| padic_or_undefined("padic-beta", padic::beta_padic_check(n, &lab(), LAB_LEVELS).map(|r| vec![r]))),
        },
        Descriptor {
            entries: vec![
                printed_fails("padic-qbinom", "Riemann sums of [x choose n] against exponent n+1-C(n+1,2)"),
                corrected("padic-qbinom", "Riemann sums of [x choose n] against exponent -C(n,2)"),
                must("padic-qbinom-stirling", "Riemann sums of [x choose n] against the Stirling expansion"),
            ],
            space: "p = 5, q = 6, M = 25, n = 0..4, levels 1..5",
            cells: |m| per_n(0..=upto(4, m), |n| padic_or_undefined("padic-qbinom", padic::qbinom_padic_check(n, &lab(), LAB_LEVELS))),
        },
        Descriptor {
            entries: vec![Entry {
                id: "norm-diagnostic",
                variant: P,
                expect: Expect::Diagnostic,
                description: "|integral of f| <= p ||f||_1 on a finite grid, f = [x]^k",
            }],
            space: "p = 5, q = 6, k = 0..3, level = 1..4",
            cells: |_| per_nk((0..=3).flat_map(|k| (1..=4).map(move |l| (k, l))).collect(), norm_cell),
        },
    ]
}

/// Every identity id the registry must cover.
pub const IN_SCOPE: &[&str] = &[
    "eq1", "eq4-5", "eq8", "eq11", "eq12", "eq13", "eq14", "eq15", "eq16", "eq17", "eq18", "eq19a", "eq19b",
    "eq20", "eq21", "eq22", "eq23", "lemma1", "prop2", "thm3", "thm4", "thm5", "thm6", "thm7", "thm8",
    "norm-diagnostic",
];

/// All distinct ids, in registry order.
pub fn all_ids() -> Vec<&'static str> {
    let mut out: Vec<&'static str> = Vec::new();
    for d in registry() {
        for id in d.ids() {
            if !out.contains(&id) {
                out.push(id);
            }
        }
    }
    out
}
