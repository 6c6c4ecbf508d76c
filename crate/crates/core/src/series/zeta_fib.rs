use std::fmt;

use num_bigint::BigInt;
use rug::Float;

use super::{inflate, BOUND_BITS};
use crate::exact::{IndexStepper, Sequence};
use crate::special::{zeta_minus_one, zeta_minus_one_bound};
use crate::{BigReal, Error, PrecisionPolicy, Result};

/// Shape of a zeta/Fibonacci series Σ_k ζ-factor · X_index · weight · scale.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum SeriesFamily {
    /// Σ_{k≥1} (ζ(2k)−1) X_{2k+m−1}
    EvenZeta,
    /// Σ_{k≥1} (ζ(2k+1)−1) X_{2k+m}
    OddZeta,
    /// Σ_{k≥2} (ζ(k)−1) X_{k+m−1}
    AllZeta,
    /// Σ_{k≥1} (ζ(2k)−1) X_{2k+m−1} / k
    EvenZetaOverK,
    /// Σ_{k≥1} (ζ(2k+1)−1) X_{2k+m} / (2k+1)
    OddZetaOver2k1,
    /// Σ_{k≥2} (ζ(k)−1) X_{k+m−1} / k
    AllZetaOverK,
    /// Σ_{k≥1} ζ(2k) X_{2k} / 5^k
    ScaledEven5,
    /// Σ_{k≥1} ζ(2k+1) X_{2k} / 5^k
    ScaledOdd5,
    /// Σ_{k≥1} (ζ(2k)−1) X_{2k−1} / n^{2k−1}
    CorrN,
}

impl SeriesFamily {
    pub const ALL: [SeriesFamily; 9] = [
        SeriesFamily::EvenZeta,
        SeriesFamily::OddZeta,
        SeriesFamily::AllZeta,
        SeriesFamily::EvenZetaOverK,
        SeriesFamily::OddZetaOver2k1,
        SeriesFamily::AllZetaOverK,
        SeriesFamily::ScaledEven5,
        SeriesFamily::ScaledOdd5,
        SeriesFamily::CorrN,
    ];

    pub fn first_k(self) -> u64 {
        match self {
            SeriesFamily::AllZeta | SeriesFamily::AllZetaOverK => 2,
            _ => 1,
        }
    }

    /// Coefficients (a, b) of the zeta argument s = a·k + b.
    fn zeta_arg_coeffs(self) -> (u64, u64) {
        use SeriesFamily::*;
        match self {
            EvenZeta | EvenZetaOverK | ScaledEven5 | CorrN => (2, 0),
            OddZeta | OddZetaOver2k1 | ScaledOdd5 => (2, 1),
            AllZeta | AllZetaOverK => (1, 0),
        }
    }

    pub fn weight(self) -> Weight {
        use SeriesFamily::*;
        match self {
            EvenZetaOverK | AllZetaOverK => Weight::OverK,
            OddZetaOver2k1 => Weight::Over2kPlus1,
            _ => Weight::One,
        }
    }

    /// Scaled families take ζ itself rather than ζ − 1.
    pub fn uses_full_zeta(self) -> bool {
        matches!(self, SeriesFamily::ScaledEven5 | SeriesFamily::ScaledOdd5)
    }

    pub fn has_parameter(self) -> bool {
        !self.uses_full_zeta()
    }

    pub fn parameter_name(self) -> Option<char> {
        match self {
            SeriesFamily::CorrN => Some('n'),
            f if f.uses_full_zeta() => None,
            _ => Some('m'),
        }
    }
}

/// Per-term weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Weight {
    One,
    OverK,
    Over2kPlus1,
}

impl Weight {
    fn divisor(self, k: u64) -> u64 {
        match self {
            Weight::One => 1,
            Weight::OverK => k,
            Weight::Over2kPlus1 => 2 * k + 1,
        }
    }
}

/// One concrete zeta/Fibonacci series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeriesSpec {
    family: SeriesFamily,
    seq: Sequence,
    param: i64,
}

impl SeriesSpec {
    /// `param` is m ≥ 0, n ≥ 1 for [`SeriesFamily::CorrN`], and must be 0
    /// for the scaled families.
    pub fn new(family: SeriesFamily, seq: Sequence, param: i64) -> Result<Self> {
        let ok = match family.parameter_name() {
            Some('n') => param >= 1,
            Some(_) => param >= 0,
            None => param == 0,
        };
        if !ok {
            return Err(Error::ParamOutOfDomain {
                id: format!("{family:?}/{}", seq.letter()),
                param: param.to_string(),
                domain: match family.parameter_name() {
                    Some('n') => "n >= 1".into(),
                    Some(_) => "m >= 0".into(),
                    None => "no parameter".into(),
                },
            });
        }
        Ok(SeriesSpec { family, seq, param })
    }

    pub fn family(&self) -> SeriesFamily {
        self.family
    }

    pub fn sequence(&self) -> Sequence {
        self.seq
    }

    pub fn param(&self) -> i64 {
        self.param
    }

    pub fn first_k(&self) -> u64 {
        self.family.first_k()
    }

    pub fn zeta_arg(&self, k: u64) -> u32 {
        let (a, b) = self.family.zeta_arg_coeffs();
        u32::try_from(a * k + b).expect("zeta argument fits in u32")
    }

    /// (p, q) with sequence index j = p·k + q.
    fn index_coeffs(&self) -> (i64, i64) {
        use SeriesFamily::*;
        let m = self.param;
        match self.family {
            EvenZeta | EvenZetaOverK => (2, m - 1),
            OddZeta | OddZetaOver2k1 => (2, m),
            AllZeta | AllZetaOverK => (1, m - 1),
            ScaledEven5 | ScaledOdd5 => (2, 0),
            CorrN => (2, -1),
        }
    }

    pub fn index(&self, k: u64) -> i64 {
        let (p, q) = self.index_coeffs();
        p * k as i64 + q
    }

    pub fn index_step(&self) -> u8 {
        self.index_coeffs().0 as u8
    }

    /// Exact scale denominator at k: 5^k, n^{2k−1}, or 1.
    pub fn scale_denominator(&self, k: u64) -> BigInt {
        match self.family {
            SeriesFamily::ScaledEven5 | SeriesFamily::ScaledOdd5 => {
                num_traits::pow(BigInt::from(5), k as usize)
            }
            SeriesFamily::CorrN => num_traits::pow(BigInt::from(self.param), (2 * k - 1) as usize),
            _ => BigInt::from(1),
        }
    }

    /// Per-step growth factor of the denominator.
    fn scale_step(&self) -> BigInt {
        match self.family {
            SeriesFamily::ScaledEven5 | SeriesFamily::ScaledOdd5 => BigInt::from(5),
            SeriesFamily::CorrN => BigInt::from(self.param * self.param),
            _ => BigInt::from(1),
        }
    }

    /// (k, X_index(k)) for k = first_k, first_k+1, …, by index stepping.
    pub fn sequence_terms(&self) -> impl Iterator<Item = (u64, BigInt)> {
        let stepper = IndexStepper::<BigInt>::new(self.seq, self.index(self.first_k()), self.index_step());
        (self.first_k()..).zip(stepper.map(|(_, x)| x))
    }

    /// Geometric ratio ρ between consecutive term bounds.
    pub fn ratio(&self) -> f64 {
        let alpha = (1.0 + 5f64.sqrt()) / 2.0;
        match self.family {
            SeriesFamily::AllZeta | SeriesFamily::AllZetaOverK => alpha / 2.0,
            SeriesFamily::ScaledEven5 | SeriesFamily::ScaledOdd5 => alpha * alpha / 5.0,
            SeriesFamily::CorrN => {
                let n = self.param as f64;
                alpha * alpha / (4.0 * n * n)
            }
            _ => alpha * alpha / 4.0,
        }
    }

    /// Explicit upper bound for |term_k| from ζ(s)−1 ≤ 2^{−s}(1+2/(s−1)),
    /// F_j ≤ α^j and L_j ≤ 2α^j.
    pub fn term_bound(&self, k: u64) -> BigReal {
        let bits = BOUND_BITS;
        let s = self.zeta_arg(k);
        let mut zeta = zeta_minus_one_bound(s);
        if self.family.uses_full_zeta() {
            zeta = zeta + 1;
        }
        let alpha = (BigReal::from_i64(1, bits) + BigReal::from_i64(5, bits).sqrt()).mul_pow2(-1);
        let j = i32::try_from(self.index(k)).expect("index fits in i32");
        let mut b = zeta * alpha.powi(j);
        if self.seq == Sequence::Lucas {
            b = b.mul_pow2(1);
        }
        let w = self.family.weight().divisor(k);
        b /= BigReal::from_i64(w as i64, bits);
        b /= BigReal::from_bigint(&self.scale_denominator(k), bits);
        inflate(b)
    }

    /// Bound for Σ_{k > last} |term_k|.
    pub fn tail_bound(&self, last: u64) -> BigReal {
        let rho = BigReal::from_f64(self.ratio(), BOUND_BITS);
        let one = BigReal::from_i64(1, BOUND_BITS);
        inflate(self.term_bound(last + 1) / (one - rho))
    }

    /// k-th term from scratch (no stepping), for oracle use.
    pub fn term(&self, k: u64, policy: &PrecisionPolicy) -> Result<BigReal> {
        let bits = policy.working_bits();
        let x: BigInt = self.seq.term(self.index(k));
        let mut z = zeta_minus_one(self.zeta_arg(k), policy)?;
        if self.family.uses_full_zeta() {
            z = z + 1;
        }
        let den = &self.scale_denominator(k) * BigInt::from(self.family.weight().divisor(k));
        Ok(z * ratio_of(&x, &den, bits))
    }
}

impl fmt::Display for SeriesSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x = self.seq.letter();
        let p = self.param;
        let idx = |q: i64, step: &str| match q {
            0 => step.to_string(),
            q if q > 0 => format!("{step}+{q}"),
            q => format!("{step}−{}", -q),
        };
        use SeriesFamily::*;
        let body = match self.family {
            EvenZeta => format!("Σ_{{k≥1}} (ζ(2k)−1)·{x}({})", idx(p - 1, "2k")),
            OddZeta => format!("Σ_{{k≥1}} (ζ(2k+1)−1)·{x}({})", idx(p, "2k")),
            AllZeta => format!("Σ_{{k≥2}} (ζ(k)−1)·{x}({})", idx(p - 1, "k")),
            EvenZetaOverK => format!("Σ_{{k≥1}} (ζ(2k)−1)·{x}({})/k", idx(p - 1, "2k")),
            OddZetaOver2k1 => format!("Σ_{{k≥1}} (ζ(2k+1)−1)·{x}({})/(2k+1)", idx(p, "2k")),
            AllZetaOverK => format!("Σ_{{k≥2}} (ζ(k)−1)·{x}({})/k", idx(p - 1, "k")),
            ScaledEven5 => format!("Σ_{{k≥1}} ζ(2k)·{x}(2k)/5^k"),
            ScaledOdd5 => format!("Σ_{{k≥1}} ζ(2k+1)·{x}(2k)/5^k"),
            CorrN => format!("Σ_{{k≥1}} (ζ(2k)−1)·{x}(2k−1)/{p}^(2k−1)"),
        };
        f.write_str(&body)
    }
}

fn ratio_of(num: &BigInt, den: &BigInt, bits: u32) -> BigReal {
    let n = BigReal::from_bigint(num, bits + 8);
    let d = BigReal::from_bigint(den, bits + 8);
    (n / d).with_prec(bits)
}

/// Summed value with the number of terms and the certified tail bound.
#[derive(Clone, Debug)]
pub struct SeriesResult {
    pub value: BigReal,
    pub terms_used: u64,
    pub tail_bound: BigReal,
}

/// Direct summation until the tail bound drops below 10^−(D+G/2).
pub fn sum_zeta_fib(spec: &SeriesSpec, policy: &PrecisionPolicy) -> Result<SeriesResult> {
    sum_inner(spec, policy, None)
}

/// Exactly `terms` terms with the bound on what was left out; the budget in
/// `policy` does not apply.
pub fn sum_zeta_fib_truncated(spec: &SeriesSpec, terms: u64, policy: &PrecisionPolicy) -> Result<SeriesResult> {
    sum_inner(spec, policy, Some(terms))
}

fn sum_inner(spec: &SeriesSpec, policy: &PrecisionPolicy, fixed: Option<u64>) -> Result<SeriesResult> {
    let bits = policy.working_bits();
    let target = policy.tolerance();
    let step = spec.scale_step();
    let mut den = spec.scale_denominator(spec.first_k());
    let mut acc = BigReal::zero(bits + 16);
    let mut terms = 0u64;
    for (k, x) in spec.sequence_terms() {
        if fixed.is_none() && terms as usize >= policy.max_terms() {
            return Err(Error::BudgetExceeded {
                max_terms: policy.max_terms(),
                context: spec.to_string(),
            });
        }
        let mut z = zeta_minus_one(spec.zeta_arg(k), policy)?;
        if spec.family.uses_full_zeta() {
            z = z + 1;
        }
        let w = BigInt::from(spec.family.weight().divisor(k));
        acc += z * ratio_of(&x, &(&den * w), bits);
        terms += 1;
        let done = match fixed {
            Some(n) => terms >= n,
            None => spec.tail_bound(k) <= target,
        };
        if done {
            return Ok(SeriesResult {
                value: BigReal::from_float(Float::with_val(bits, acc.as_float())),
                terms_used: terms,
                tail_bound: spec.tail_bound(k),
            });
        }
        den *= &step;
    }
    unreachable!("sequence_terms is infinite")
}
