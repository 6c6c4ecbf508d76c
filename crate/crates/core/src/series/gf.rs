use super::{inflate, BOUND_BITS};
use crate::real::{cot, csc, ln};
use crate::special::{digamma, euler_gamma, log_gamma, zeta_minus_one, zeta_minus_one_bound};
use crate::real::const_pi;
use crate::{BigReal, Error, PrecisionPolicy, Result};

/// Generating functions of ζ(s)−1 used in the proofs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GfKind {
    /// Σ_{k≥1} (ζ(2k)−1) z^{2k−1} = −(π/2)cot πz + (3z²−1)/(2z(z²−1))
    EvenCot,
    /// Σ_{k≥1} (ζ(2k+1)−1) z^{2k} = 1−γ − ½(ψ(2+z)+ψ(2−z))
    OddPsi,
    /// Σ_{k≥2} (ζ(k)−1) z^{k−1} = 1−γ − ψ(2−z)
    AllPsi,
    /// Σ_{k≥1} (ζ(2k)−1) z^{2k}/k = ln(πz(1−z²) csc πz)
    EvenLog,
    /// Σ_{k≥1} (ζ(2k+1)−1) z^{2k+1}/(2k+1) = (1−γ)z + ½ ln(Γ(2−z)/Γ(2+z))
    OddLnGamma,
    /// Σ_{k≥2} (ζ(k)−1) z^k/k = (1−γ)z + ln Γ(2−z)
    AllLnGamma,
}

const POLE_MARGIN: f64 = 1e-3;

impl GfKind {
    pub const ALL: [GfKind; 6] = [
        GfKind::EvenCot,
        GfKind::OddPsi,
        GfKind::AllPsi,
        GfKind::EvenLog,
        GfKind::OddLnGamma,
        GfKind::AllLnGamma,
    ];

    fn first_k(self) -> u64 {
        match self {
            GfKind::AllPsi | GfKind::AllLnGamma => 2,
            _ => 1,
        }
    }

    fn zeta_arg(self, k: u64) -> u32 {
        (match self {
            GfKind::EvenCot | GfKind::EvenLog => 2 * k,
            GfKind::OddPsi | GfKind::OddLnGamma => 2 * k + 1,
            GfKind::AllPsi | GfKind::AllLnGamma => k,
        }) as u32
    }

    fn exponent(self, k: u64) -> u64 {
        match self {
            GfKind::EvenCot => 2 * k - 1,
            GfKind::OddPsi | GfKind::EvenLog => 2 * k,
            GfKind::AllPsi => k - 1,
            GfKind::OddLnGamma => 2 * k + 1,
            GfKind::AllLnGamma => k,
        }
    }

    fn divisor(self, k: u64) -> i64 {
        (match self {
            GfKind::EvenLog | GfKind::AllLnGamma => k,
            GfKind::OddLnGamma => 2 * k + 1,
            _ => 1,
        }) as i64
    }

    fn step(self) -> i32 {
        match self {
            GfKind::AllPsi | GfKind::AllLnGamma => 1,
            _ => 2,
        }
    }

    fn has_trig_poles(self) -> bool {
        matches!(self, GfKind::EvenCot | GfKind::EvenLog)
    }
}

/// Both sides of a generating-function identity at one point.
#[derive(Clone, Debug)]
pub struct GfValues {
    pub series_value: BigReal,
    pub closed_value: BigReal,
    pub terms_used: u64,
    pub tail_bound: BigReal,
}

/// Evaluates the series side (with geometric tail bound) and the closed side.
pub fn gf_eval(kind: GfKind, z: &BigReal, policy: &PrecisionPolicy) -> Result<GfValues> {
    let zf = z.to_f64();
    if !z.is_finite() || zf.abs() >= 2.0 {
        return Err(Error::domain("gf_eval", format!("|z| < 2 required, got {zf}")));
    }
    if kind.has_trig_poles() && (zf - zf.round()).abs() < POLE_MARGIN {
        return Err(Error::domain(
            "gf_eval",
            format!("z = {zf} is within {POLE_MARGIN} of a pole"),
        ));
    }
    let closed_value = closed_side(kind, z, policy)?;
    let (series_value, terms_used, tail_bound) = series_side(kind, z, policy)?;
    Ok(GfValues {
        series_value,
        closed_value,
        terms_used,
        tail_bound,
    })
}

fn term_bound(kind: GfKind, k: u64, zabs: &BigReal) -> BigReal {
    let e = i32::try_from(kind.exponent(k)).expect("exponent fits in i32");
    let b = zeta_minus_one_bound(kind.zeta_arg(k)) * zabs.powi(e);
    inflate(b / BigReal::from_i64(kind.divisor(k), BOUND_BITS))
}

fn tail_bound(kind: GfKind, last: u64, zabs: &BigReal) -> BigReal {
    let rho = zabs.mul_pow2(-1).powi(kind.step());
    let one = BigReal::from_i64(1, BOUND_BITS);
    inflate(term_bound(kind, last + 1, zabs) / (one - rho))
}

fn series_side(kind: GfKind, z: &BigReal, policy: &PrecisionPolicy) -> Result<(BigReal, u64, BigReal)> {
    let bits = policy.working_bits();
    let target = policy.tolerance();
    let z = z.with_prec(bits);
    let zabs = z.abs().with_prec(BOUND_BITS);
    let k0 = kind.first_k();
    let mut power = z.powi(kind.exponent(k0) as i32);
    let stride = if kind.step() == 2 { &z * &z } else { z.clone() };
    let mut acc = BigReal::zero(bits + 16);
    for (terms, k) in (k0..).enumerate() {
        if terms >= policy.max_terms() {
            return Err(Error::BudgetExceeded {
                max_terms: policy.max_terms(),
                context: format!("{kind:?} generating function"),
            });
        }
        let zeta = zeta_minus_one(kind.zeta_arg(k), policy)?;
        acc += zeta * &power / BigReal::from_i64(kind.divisor(k), bits);
        let tail = tail_bound(kind, k, &zabs);
        if tail <= target {
            return Ok((acc.with_prec(bits), terms as u64 + 1, tail));
        }
        power *= &stride;
    }
    unreachable!()
}

fn closed_side(kind: GfKind, z: &BigReal, policy: &PrecisionPolicy) -> Result<BigReal> {
    let bits = policy.working_bits();
    let z = z.with_prec(bits);
    let one = BigReal::from_i64(1, bits);
    let gamma = euler_gamma(policy);
    let two_minus = BigReal::from_i64(2, bits) - &z;
    let two_plus = BigReal::from_i64(2, bits) + &z;
    let pi = const_pi(policy);
    let pz = &pi * &z;
    Ok(match kind {
        GfKind::EvenCot => {
            let z2 = &z * &z;
            let alg = (&z2 * 3 - 1) / (z.mul_pow2(1) * (&z2 - 1));
            alg - pi.mul_pow2(-1) * cot(&pz, policy)?
        }
        GfKind::OddPsi => {
            let s = digamma(&two_plus, policy)? + digamma(&two_minus, policy)?;
            &one - &gamma - s.mul_pow2(-1)
        }
        GfKind::AllPsi => &one - &gamma - digamma(&two_minus, policy)?,
        GfKind::EvenLog => {
            if z.is_zero() {
                return Ok(BigReal::zero(bits));
            }
            let arg = &pz * (&one - &z * &z) * csc(&pz, policy)?;
            ln(&arg, policy)?
        }
        GfKind::OddLnGamma => {
            let d = log_gamma(&two_minus, policy)? - log_gamma(&two_plus, policy)?;
            (&one - &gamma) * &z + d.mul_pow2(-1)
        }
        GfKind::AllLnGamma => (&one - &gamma) * &z + log_gamma(&two_minus, policy)?,
    })
}
