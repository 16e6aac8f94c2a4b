use carlitz::arith::{Poly, TruncSeries};
use carlitz::qcore::{q_binomial, q_binomial_via_compositions};
use carlitz::{BiPoly, Evaluated, RatFunc, Rational, Scalar, Var};
use proptest::prelude::*;

fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn poly_strategy() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((0u32..3, 0u32..3, -4i64..=4), 1..4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(BiPoly::zero(), |acc, (a, b, c)| acc + BiPoly::monomial(rat(c), a, b))
    })
}

fn nonzero_poly() -> impl Strategy<Value = BiPoly> {
    poly_strategy().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly_strategy(), nonzero_poly()).prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn additive_inverse(a in ratfunc(), b in ratfunc()) {
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn division_undoes_multiplication(a in ratfunc(), b in ratfunc()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(&(&a * &b) / &b, a);
    }

    #[test]
    fn distributive(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn common_factor_cancels(n in poly_strategy(), d in nonzero_poly(), g in nonzero_poly()) {
        let plain = RatFunc::new(n.clone(), d.clone()).unwrap();
        let padded = RatFunc::new(&n * &g, &d * &g).unwrap();
        prop_assert_eq!(plain.to_canonical_string(), padded.to_canonical_string());
        prop_assert_eq!(plain, padded);
    }

    #[test]
    fn evaluation_is_multiplicative(a in ratfunc(), b in ratfunc(), q0 in -5i64..=5, u0 in -5i64..=5) {
        let (q0, u0) = (rat(q0), rat(u0));
        let at = |f: &RatFunc| match f.eval_at(&q0, Some(&u0)) {
            Ok(Evaluated::Scalar(c)) => Some(c),
            _ => None,
        };
        if let (Some(x), Some(y), Some(z)) = (at(&a), at(&b), at(&(&a * &b))) {
            prop_assert_eq!(x * y, z);
        }
    }

    #[test]
    fn series_expansion_is_multiplicative(an in poly_strategy(), bn in poly_strategy(), ad in nonzero_poly(), bd in nonzero_poly()) {
        // shift denominators to have constant term 1 in q
        let ad = &BiPoly::one() + &ad.shift(1, 0);
        let bd = &BiPoly::one() + &bd.shift(1, 0);
        let a = RatFunc::new(an, ad).unwrap();
        let b = RatFunc::new(bn, bd).unwrap();
        let order = 6;
        let sa = TruncSeries::expand(&a, Var::Q, order).unwrap();
        let sb = TruncSeries::expand(&b, Var::Q, order).unwrap();
        let sab = TruncSeries::expand(&(&a * &b), Var::Q, order).unwrap();
        prop_assert_eq!(&sa * &sb, sab);
    }

    #[test]
    fn gauss_binomial_counts_compositions(n in 0u32..8, k in 0u32..8) {
        prop_assume!(k <= n);
        prop_assert_eq!(q_binomial::<Rational>(n, k as i64), q_binomial_via_compositions::<Rational>(n, k));
    }

    #[test]
    fn gauss_binomial_at_one_is_binomial(n in 0u32..10, k in 0i64..10) {
        let value = q_binomial::<Rational>(n, k).eval_q(&rat(1));
        let expect = if k > n as i64 { rat(0) } else { <Rational as Scalar>::binomial(n as i64, k) };
        prop_assert_eq!(value, Poly::constant(expect));
    }
}

#[test]
fn float_scalars_run_the_same_code() {
    let b1 = carlitz::bernoulli::beta::<f64>(1).eval(&0.5).unwrap();
    assert!((b1 + 1.0 / 1.5).abs() < 1e-12);
    let b2 = carlitz::bernoulli::beta::<f64>(2).eval(&0.5).unwrap();
    assert!((b2 - 0.5 / (1.5 * 1.75)).abs() < 1e-12);
}
