use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use zetafib::closed_form::{eval_expr, Expr};
use zetafib::exact::{bernoulli_table, fib_lucas, fib_lucas_pair, Quad, Sequence};
use zetafib::real::{const_pi, cot, to_significant};
use zetafib::series::{
    gf_eval, partial_fraction_residues, sum_zeta_fib, sum_zeta_fib_truncated, GfKind, RationalSeriesSpec,
    SeriesFamily, SeriesSpec,
};
use zetafib::special::{digamma, zeta_even_exact, zeta_minus_one};
use zetafib::{BigReal, PrecisionPolicy, QuadElem, QuadElem64, Rational};

fn q64(a: i64, b: i64, c: i64, d: i64) -> QuadElem64 {
    Quad::from_parts(a, b, c, d)
}

fn small_quad() -> impl Strategy<Value = QuadElem64> {
    (-20i64..20, 1i64..12, -20i64..20, 1i64..12).prop_map(|(a, b, c, d)| q64(a, b, c, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(x in small_quad(), y in small_quad(), z in small_quad()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inv().unwrap(), QuadElem64::one());
        }
        prop_assert_eq!(*(&x * &x.conjugate()).b(), num_rational::Ratio::from_integer(0));
    }

    #[test]
    fn binet_and_reflection(m in -300i64..300) {
        let (f, l) = fib_lucas(m);
        let am = Quad::<BigInt>::alpha().powi(m).unwrap();
        let bm = Quad::<BigInt>::beta().powi(m).unwrap();
        prop_assert_eq!(&am + &bm, QuadElem::from_integer(l.clone()));
        prop_assert_eq!(&(&am - &bm), &(QuadElem::sqrt5() * QuadElem::from_integer(f.clone())));
        let (fneg, lneg) = fib_lucas(-m);
        let sign = if m % 2 == 0 { BigInt::from(-1) } else { BigInt::one() };
        prop_assert_eq!(fneg, &f * &sign);
        prop_assert_eq!(lneg, -(&l * &sign));
        // Cassini: F_{m+1}F_{m−1} − F_m² = (−1)^m
        let (f1, _) = fib_lucas(m + 1);
        let (f0, _) = fib_lucas(m - 1);
        prop_assert_eq!(f1 * f0 - &f * &f, -sign);
    }

    #[test]
    fn machine_and_big_integers_agree(m in -80i64..80) {
        let (f, l) = fib_lucas_pair::<i128>(m);
        let (fb, lb) = fib_lucas(m);
        prop_assert_eq!(BigInt::from(f), fb);
        prop_assert_eq!(BigInt::from(l), lb);
    }

    #[test]
    fn digamma_recurrence(num in 1i64..4000, den in 1i64..97) {
        let p = PrecisionPolicy::digits(30);
        let x = BigReal::from_i64(num, p.working_bits()) / den;
        let lhs = digamma(&(&x + 1), &p).unwrap() - digamma(&x, &p).unwrap();
        let tol = p.tolerance() * BigReal::from_i64(1 + num / den, 64);
        prop_assert!((lhs - x.recip()).abs() <= tol);
    }

    #[test]
    fn digamma_reflection(num in 1i64..999) {
        let p = PrecisionPolicy::digits(30);
        let x = BigReal::from_i64(num, p.working_bits()) / 1000;
        let one_minus = BigReal::from_i64(1, p.working_bits()) - &x;
        let lhs = digamma(&one_minus, &p).unwrap() - digamma(&x, &p).unwrap();
        let rhs = const_pi(&p) * cot(&(const_pi(&p) * &x), &p).unwrap();
        prop_assert!((lhs - rhs).abs() <= p.tolerance() * 1000);
    }

    #[test]
    fn tail_bound_soundness(
        fam in 0usize..9,
        lucas in any::<bool>(),
        param in 0i64..12,
        m_terms in 3u64..40,
    ) {
        let family = SeriesFamily::ALL[fam];
        let seq = if lucas { Sequence::Lucas } else { Sequence::Fibonacci };
        let param = match family {
            SeriesFamily::CorrN => param + 1,
            f if f.has_parameter() => param,
            _ => 0,
        };
        let spec = SeriesSpec::new(family, seq, param).unwrap();
        let p = PrecisionPolicy::digits(20);
        let short = sum_zeta_fib_truncated(&spec, m_terms, &p).unwrap();
        let long = sum_zeta_fib_truncated(&spec, 2 * m_terms, &p).unwrap();
        prop_assert!((long.value - short.value).abs() <= short.tail_bound);
    }

    #[test]
    fn residues_are_exact(roots in prop::collection::btree_set((-30i64..1, 1i64..7), 2..5)) {
        let roots: Vec<QuadElem> = roots
            .into_iter()
            .map(|(a, b)| QuadElem::from_rational(Rational::new(a.into(), b.into())))
            .collect();
        let mut distinct = roots.clone();
        distinct.dedup();
        prop_assume!(distinct.len() == roots.len());
        prop_assume!((0..roots.len()).all(|i| !roots[i + 1..].contains(&roots[i])));
        let spec = RationalSeriesSpec::reciprocal("random", Rational::one(), roots.clone()).unwrap();
        let res = partial_fraction_residues(&spec).unwrap();
        let total = res.iter().fold(QuadElem::zero(), |acc, (_, r)| &acc + r);
        prop_assert!(total.is_zero());
        // clearing denominators: Σ r_i Π_{j≠i}(x − ρ_j) = 1 at a test point
        let x = QuadElem::from_integer(BigInt::from(7));
        let mut sum = QuadElem::zero();
        for (i, (_, r)) in res.iter().enumerate() {
            let mut t = r.clone();
            for (j, rho) in roots.iter().enumerate() {
                if i != j {
                    t = &t * &(&x - rho);
                }
            }
            sum = &sum + &t;
        }
        prop_assert_eq!(sum, QuadElem::one());
    }

    #[test]
    fn evaluation_is_compositional(tree in expr_tree(), other in expr_tree()) {
        let p = PrecisionPolicy::digits(25);
        if let (Ok(a), Ok(b)) = (eval_expr(&tree, &p), eval_expr(&other, &p)) {
            let sum = eval_expr(&(tree.clone() + other.clone()), &p).unwrap();
            let scale = a.abs().max(b.abs()).max(BigReal::from_i64(1, 64));
            prop_assert!((sum - (a + b)).abs() <= scale * BigReal::pow10(-70, 64));
        }
    }
}

fn expr_tree() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (-9i64..10).prop_map(Expr::int),
        (-9i64..10, 1i64..9).prop_map(|(a, b)| Expr::ratio(a, b)),
        Just(Expr::pi()),
        Just(Expr::euler_gamma()),
        Just(Expr::sqrt5()),
        Just(Expr::alpha()),
        Just(Expr::ln_alpha()),
        (-10i64..20).prop_map(Expr::Fib),
        (-10i64..20).prop_map(Expr::Luc),
    ];
    leaf.prop_recursive(7, 64, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a + b),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a - b),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a * b),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a / b),
            inner.clone().prop_map(|a| -a),
            inner.clone().prop_map(|a| a.sin()),
            inner.clone().prop_map(|a| a.cos()),
            (inner, -3i32..4).prop_map(|(a, k)| a.powi(k)),
        ]
    })
}

#[test]
fn bernoulli_recurrence_holds() {
    // Σ_{k=0}^{n} C(n+1, k) B_k = 0 for n ≥ 1
    let b = bernoulli_table(60);
    for n in 1..=60usize {
        let mut binom = BigInt::one();
        let mut acc = Rational::zero();
        for (k, bk) in b.iter().enumerate().take(n + 1) {
            acc += bk * Rational::from_integer(binom.clone());
            binom = binom * BigInt::from(n + 1 - k) / BigInt::from(k + 1);
        }
        assert!(acc.is_zero(), "n={n}");
    }
}

#[test]
fn even_zeta_dual_route() {
    let p = PrecisionPolicy::digits(50);
    for k in 1..=30u32 {
        let exact = zeta_even_exact(k, &p).unwrap();
        let em = zeta_minus_one(2 * k, &p).unwrap() + 1;
        assert!((exact - em).abs() <= BigReal::pow10(-50, 64), "s={}", 2 * k);
    }
}

#[test]
fn index_stepping_matches_recomputation() {
    for family in SeriesFamily::ALL {
        for seq in [Sequence::Fibonacci, Sequence::Lucas] {
            let param = if family == SeriesFamily::CorrN { 2 } else if family.has_parameter() { 3 } else { 0 };
            let spec = SeriesSpec::new(family, seq, param).unwrap();
            for (k, x) in spec.sequence_terms().take(50) {
                let (f, l) = fib_lucas_pair::<BigInt>(spec.index(k));
                let want = if seq == Sequence::Fibonacci { f } else { l };
                assert_eq!(x, want, "{spec} k={k}");
            }
        }
    }
}

#[test]
fn generating_functions_agree() {
    let p = PrecisionPolicy::digits(30);
    let bits = p.working_bits();
    let golden = zetafib::real::quad_to_real(&QuadElem::alpha(), &p) - 1;
    let points = [
        BigReal::from_f64(0.25, bits),
        BigReal::from_f64(0.5, bits),
        golden,
        BigReal::from_i64(6, bits) / 5,
        BigReal::from_f64(-0.7, bits),
    ];
    for kind in GfKind::ALL {
        for z in &points {
            let v = gf_eval(kind, z, &p).unwrap();
            assert!(
                (&v.series_value - &v.closed_value).abs() <= BigReal::pow10(-30, 64),
                "{kind:?} z={}",
                to_significant(z, 6)
            );
        }
    }
}

#[test]
fn truncated_sum_converges_to_full_sum() {
    let p = PrecisionPolicy::digits(20);
    let spec = SeriesSpec::new(SeriesFamily::AllZetaOverK, Sequence::Lucas, 2).unwrap();
    let full = sum_zeta_fib(&spec, &p).unwrap();
    let same = sum_zeta_fib_truncated(&spec, full.terms_used, &p).unwrap();
    assert_eq!(full.value, same.value);
}
