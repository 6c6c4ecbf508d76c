use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{OnceLock, RwLock};

use rug::ops::Pow;
use rug::Float;

use super::even_bernoulli;
use crate::exact::bernoulli;
use crate::real::const_pi;
use crate::{BigReal, Error, PrecisionPolicy, Rational, Result};

/// ζ(s) together with ζ(s) − 1, which is what the series consume.
#[derive(Clone, Debug)]
pub struct ZetaValue {
    pub s: u32,
    pub value_minus_one: BigReal,
    pub value: BigReal,
}

pub fn zeta_value(s: u32, policy: &PrecisionPolicy) -> Result<ZetaValue> {
    let value_minus_one = zeta_minus_one(s, policy)?;
    let value = &value_minus_one + 1;
    Ok(ZetaValue {
        s,
        value_minus_one,
        value,
    })
}

/// ζ(2k) = (−1)^{k+1} (2π)^{2k} B_{2k} / (2·(2k)!).
pub fn zeta_even_exact(k: u32, policy: &PrecisionPolicy) -> Result<BigReal> {
    if k < 1 {
        return Err(Error::domain("zeta_even_exact", "k must be at least 1"));
    }
    let n = 2 * k as usize;
    let mut fact = num_bigint::BigInt::from(2);
    for i in 2..=n {
        fact *= i;
    }
    let mut coeff = bernoulli(n)? / Rational::from_integer(fact);
    if k % 2 == 0 {
        coeff = -coeff;
    }
    let bits = policy.working_bits() + 16;
    let two_pi = const_pi(policy).with_prec(bits).mul_pow2(1);
    let v = BigReal::from_rational(&coeff, bits) * two_pi.powi(n as i32);
    Ok(v.with_prec(policy.working_bits()))
}

/// 2^{−s}(1 + 2/(s−1)), an upper bound for ζ(s) − 1, rounded upward.
pub fn zeta_minus_one_bound(s: u32) -> BigReal {
    assert!(s >= 2, "zeta bound needs s >= 2");
    let bits = 64;
    let f = Float::with_val(bits, 1) + Float::with_val(bits, 2) / Float::with_val(bits, s - 1);
    let v = BigReal::from_float(f).mul_pow2(-(s as i32));
    v * BigReal::from_f64(1.0 + 1e-15, bits)
}

/// ζ(s) − 1 for integer s ≥ 2, accurate relative to its own size.
///
/// Euler–Maclaurin on Σ_{n≥2} n^{−s} with the remainder bound
/// 4·(s)_{2M}/(2π)^{2M} · N^{−s−2M+1}/(s+2M−1). Results are memoized per
/// (s, precision).
pub fn zeta_minus_one(s: u32, policy: &PrecisionPolicy) -> Result<BigReal> {
    if s < 2 {
        return Err(Error::domain("zeta_minus_one", format!("s = {s} (need s >= 2)")));
    }
    let bits = policy.working_bits();
    static CACHE: OnceLock<RwLock<HashMap<(u32, u32), BigReal>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.read().expect("zeta cache poisoned").get(&(s, bits)) {
        return Ok(v.clone());
    }
    let v = euler_maclaurin(s, bits);
    cache
        .write()
        .expect("zeta cache poisoned")
        .insert((s, bits), v.clone());
    Ok(v)
}

/// (N, M): sum to N−1 directly, then M Bernoulli corrections.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct EmPlan {
    pub n: u64,
    pub m: u32,
    /// log₂ of the remainder bound.
    pub log2_bound: f64,
}

const MAX_CORRECTIONS: u32 = 400;

/// Smallest N (then best M) whose remainder bound is below 2^{−s−bits}.
pub(crate) fn em_plan(s: u32, bits: u32) -> EmPlan {
    let sf = f64::from(s);
    let target = -sf - f64::from(bits) - 4.0;
    let log2_2pi = (2.0 * PI).log2();
    let mut n = 2u64;
    loop {
        let ln = (n as f64).log2();
        let mut rising = 0.0; // log₂ (s)_{2M}
        let mut best: Option<(u32, f64)> = None;
        for m in 1..=MAX_CORRECTIONS {
            let mf = f64::from(m);
            rising += (sf + 2.0 * mf - 2.0).log2() + (sf + 2.0 * mf - 1.0).log2();
            let b = 2.0 + rising - 2.0 * mf * log2_2pi
                - (sf + 2.0 * mf - 1.0) * ln
                - (sf + 2.0 * mf - 1.0).log2();
            match best {
                Some((_, prev)) if b > prev => break,
                _ => best = Some((m, b)),
            }
            if b <= target {
                break;
            }
        }
        let (m, b) = best.expect("at least one correction order");
        if b <= target {
            return EmPlan { n, m, log2_bound: b };
        }
        n += 1 + n / 8;
    }
}

fn euler_maclaurin(s: u32, bits: u32) -> BigReal {
    let plan = em_plan(s, bits);
    let wp = bits + 32;
    let neg_s = -(s as i32);
    let mut acc = Float::with_val(wp, 0);
    for k in 2..plan.n {
        acc += Float::with_val(wp, k).pow(neg_s);
    }
    let n = Float::with_val(wp, plan.n);
    let n_pow = n.clone().pow(neg_s); // N^{−s}
    // ∫_N^∞ x^{−s} dx + f(N)/2
    acc += Float::with_val(wp, &n_pow * &n) / (s - 1);
    acc += Float::with_val(wp, &n_pow / 2u32);
    // B_{2j}/(2j)! · (s)_{2j−1} · N^{−s−2j+1}
    let bern = even_bernoulli(plan.m as usize + 1, wp);
    let n2 = Float::with_val(wp, &n * &n);
    let mut q = Float::with_val(wp, &n_pow * s) / &n / 2u32; // j = 1
    for j in 1..=plan.m {
        acc += Float::with_val(wp, &q * bern[j as usize].as_float());
        let a = f64::from(s) + 2.0 * f64::from(j);
        let num = Float::with_val(wp, a - 1.0) * Float::with_val(wp, a);
        let den = Float::with_val(wp, (2 * j + 1) as u64 * (2 * j + 2) as u64);
        q = q * num / den / &n2;
    }
    BigReal::from_float(Float::with_val(bits, acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::to_significant;

    #[test]
    fn low_order_values() {
        let p = PrecisionPolicy::digits(10);
        assert_eq!(to_significant(&zeta_minus_one(2, &p).unwrap(), 10), "0.6449340668");
        assert_eq!(to_significant(&zeta_minus_one(3, &p).unwrap(), 10), "0.2020569032");
        let z3 = zeta_value(3, &p).unwrap();
        assert_eq!(to_significant(&z3.value, 10), "1.202056903");
    }

    #[test]
    fn even_exact_small_cases() {
        let p = PrecisionPolicy::digits(30);
        let pi = const_pi(&p);
        let z2 = zeta_even_exact(1, &p).unwrap();
        assert!(z2.approx_eq(&(pi.powi(2) / 6i64), &p.tolerance()));
        let z4 = zeta_even_exact(2, &p).unwrap();
        assert!(z4.approx_eq(&(pi.powi(4) / 90i64), &p.tolerance()));
        assert!(zeta_even_exact(0, &p).is_err());
    }

    #[test]
    fn rejects_small_s() {
        let p = PrecisionPolicy::digits(10);
        assert!(zeta_minus_one(1, &p).is_err());
        assert!(zeta_minus_one(0, &p).is_err());
    }

    #[test]
    fn large_s_close_to_power_of_two() {
        let p = PrecisionPolicy::digits(20);
        let z = zeta_minus_one(40, &p).unwrap();
        assert!(z <= zeta_minus_one_bound(40));
        assert!(z > BigReal::from_i64(1, 64).mul_pow2(-40));
        let exact = zeta_even_exact(20, &p).unwrap() - 1i64;
        assert!(z.approx_eq(&exact, &p.tolerance()));
    }

    #[test]
    fn plans_close_below_target() {
        for (s, bits) in [(2, 300), (3, 300), (60, 300), (700, 300), (1500, 600)] {
            let plan = em_plan(s, bits);
            assert!(plan.log2_bound <= -(s as f64) - bits as f64, "{s} {bits}: {plan:?}");
            assert!(plan.n >= 2);
        }
    }
}
