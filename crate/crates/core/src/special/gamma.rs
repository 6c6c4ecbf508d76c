use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use rug::ops::Pow;
use rug::Float;

use super::even_bernoulli;
use crate::real::const_pi;
use crate::{BigReal, Error, PrecisionPolicy, Result};

/// Arguments are shifted up to at least max(10, ⌈0.4·(D+G)⌉) before the
/// asymptotic series is applied.
pub fn shift_threshold(policy: &PrecisionPolicy) -> u64 {
    let t = (0.4 * f64::from(policy.working_digits())).ceil() as u64;
    t.max(10)
}

fn check_positive(op: &'static str, x: &BigReal) -> Result<()> {
    if !x.is_finite() || !x.is_positive() {
        return Err(Error::domain(op, format!("argument {x:.12} is not positive")));
    }
    Ok(())
}

/// Number of unit shifts that lifts `x` above `threshold`.
fn shift_count(x: &BigReal, threshold: u64) -> u64 {
    let xf = x.to_f64();
    if xf >= threshold as f64 {
        0
    } else {
        (threshold as f64 - xf).ceil() as u64
    }
}

const MAX_ASYMPTOTIC_TERMS: u32 = 1024;

/// Outcome of one attempt at the asymptotic tail.
enum Tail {
    Converged(Float),
    /// Terms started growing before reaching the target.
    Diverged,
}

/// Σ_{j≥1} B_{2j}·w(j)·y^{−(2j−k)} until the next term drops below `target`.
/// For y > 0 the truncation error is at most the first omitted term.
fn asymptotic_tail(y: &Float, wp: u32, target: &Float, weight: impl Fn(u32) -> u32, offset: i32) -> Tail {
    let mut bern = even_bernoulli(32, wp);
    let y2inv = Float::with_val(wp, y * y).recip();
    // y^{−(2j − offset)} starting at j = 1
    let mut pw = Float::with_val(wp, y).pow(-(2 - offset));
    let mut acc = Float::with_val(wp, 0);
    let mut prev: Option<Float> = None;
    for j in 1..MAX_ASYMPTOTIC_TERMS {
        if j as usize >= bern.len() {
            bern = even_bernoulli(2 * bern.len(), wp);
        }
        let term = Float::with_val(wp, bern[j as usize].as_float() * &pw) / weight(j);
        let mag = Float::with_val(wp, term.abs_ref());
        if mag <= *target {
            return Tail::Converged(acc);
        }
        if let Some(p) = &prev {
            if mag > *p {
                return Tail::Diverged;
            }
        }
        acc += &term;
        prev = Some(mag);
        pw *= &y2inv;
    }
    Tail::Diverged
}

/// ψ(x) for real x > 0.
///
/// Upward recurrence ψ(x) = ψ(x+N) − Σ_{i<N} 1/(x+i), then
/// ψ(y) ~ ln y − 1/(2y) − Σ B_{2j}/(2j·y^{2j}).
pub fn digamma(x: &BigReal, policy: &PrecisionPolicy) -> Result<BigReal> {
    check_positive("digamma", x)?;
    let bits = policy.working_bits();
    let wp = bits + 24;
    let target = Float::with_val(wp, 1) >> (bits + 8);
    let xw = Float::with_val(wp, x.as_float());
    let mut threshold = shift_threshold(policy);
    loop {
        let n = shift_count(x, threshold);
        let y = Float::with_val(wp, &xw + n);
        let tail = asymptotic_tail(&y, wp, &target, |j| 2 * j, 0);
        let Tail::Converged(series) = tail else {
            threshold *= 2;
            continue;
        };
        let mut psi = Float::with_val(wp, y.ln_ref());
        psi -= Float::with_val(wp, &y * 2u32).recip();
        psi -= series;
        for i in 0..n {
            psi -= Float::with_val(wp, &xw + i).recip();
        }
        return Ok(BigReal::from_float(Float::with_val(bits, psi)));
    }
}

/// ln Γ(x) for real x > 0.
///
/// Shift by the functional equation, then Stirling:
/// (y−½)ln y − y + ½ln 2π + Σ B_{2j}/(2j(2j−1)·y^{2j−1}).
pub fn log_gamma(x: &BigReal, policy: &PrecisionPolicy) -> Result<BigReal> {
    check_positive("log_gamma", x)?;
    let bits = policy.working_bits();
    let wp = bits + 24;
    let target = Float::with_val(wp, 1) >> (bits + 8);
    let xw = Float::with_val(wp, x.as_float());
    let mut threshold = shift_threshold(policy);
    loop {
        let n = shift_count(x, threshold);
        let y = Float::with_val(wp, &xw + n);
        let tail = asymptotic_tail(&y, wp, &target, |j| 2 * j * (2 * j - 1), 1);
        let Tail::Converged(series) = tail else {
            threshold *= 2;
            continue;
        };
        let ln_y = Float::with_val(wp, y.ln_ref());
        let half = Float::with_val(wp, 0.5);
        let mut lg = Float::with_val(wp, &y - &half) * ln_y;
        lg -= &y;
        let two_pi = const_pi(policy).with_prec(wp).into_float() * 2u32;
        lg += two_pi.ln() / 2u32;
        lg += series;
        if n > 0 {
            // Π (x+i) stays positive; one logarithm for the whole shift
            let mut prod = xw.clone();
            for i in 1..n {
                prod *= Float::with_val(wp, &xw + i);
            }
            lg -= prod.ln();
        }
        return Ok(BigReal::from_float(Float::with_val(bits, lg)));
    }
}

/// Euler–Mascheroni constant γ = −ψ(1), memoized per precision.
pub fn euler_gamma(policy: &PrecisionPolicy) -> BigReal {
    static CACHE: OnceLock<RwLock<HashMap<u32, BigReal>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let bits = policy.working_bits();
    if let Some(g) = cache.read().expect("gamma cache poisoned").get(&bits) {
        return g.clone();
    }
    let one = BigReal::from_i64(1, bits);
    let g = -digamma(&one, policy).expect("psi(1) is defined");
    cache
        .write()
        .expect("gamma cache poisoned")
        .insert(bits, g.clone());
    g
}
