//! Arbitrary-precision reals on top of MPFR.
//!
//! Every published operation computes at the policy's working precision of
//! D+G decimal digits and is accurate to 10^−(D+G/2).

mod elem;
mod format;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::{BigInt, Sign};
use rug::float::Constant;
use rug::integer::Order;
use rug::ops::Pow;
use rug::{Float, Integer};

pub use elem::{cos, cot, csc, elem, exp, ln, pow, sec, sin, tan, ElemKind};
pub use format::{to_scientific, to_significant};

use crate::exact::Quad;
use crate::{Error, QuadElem, Rational, Result};

const LOG2_10: f64 = std::f64::consts::LOG2_10;

/// Target digits, guard digits and an iteration cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrecisionPolicy {
    target_digits: u32,
    guard_digits: u32,
    max_terms: usize,
}

impl PrecisionPolicy {
    pub const DEFAULT_GUARD: u32 = 30;
    pub const DEFAULT_MAX_TERMS: usize = 100_000;

    pub fn new(target_digits: u32, guard_digits: u32, max_terms: usize) -> Result<Self> {
        if target_digits < 1 {
            return Err(Error::InvalidPolicy("target digits must be at least 1".into()));
        }
        if guard_digits < 10 {
            return Err(Error::InvalidPolicy(format!(
                "guard digits must be at least 10, got {guard_digits}"
            )));
        }
        if max_terms < 1 {
            return Err(Error::InvalidPolicy("max_terms must be positive".into()));
        }
        Ok(PrecisionPolicy {
            target_digits,
            guard_digits,
            max_terms,
        })
    }

    /// D digits with the default guard and term cap.
    pub fn digits(target_digits: u32) -> Self {
        Self::new(target_digits, Self::DEFAULT_GUARD, Self::DEFAULT_MAX_TERMS)
            .expect("default guard is valid")
    }

    pub fn target_digits(&self) -> u32 {
        self.target_digits
    }

    pub fn guard_digits(&self) -> u32 {
        self.guard_digits
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    pub fn working_digits(&self) -> u32 {
        self.target_digits + self.guard_digits
    }

    /// Binary precision carrying D+G decimal digits.
    pub fn working_bits(&self) -> u32 {
        (f64::from(self.working_digits()) * LOG2_10).ceil() as u32 + 8
    }

    /// Same guard and cap, `extra` more target digits.
    pub fn with_extra_digits(&self, extra: u32) -> Self {
        PrecisionPolicy {
            target_digits: self.target_digits + extra,
            ..*self
        }
    }

    pub fn with_max_terms(&self, max_terms: usize) -> Self {
        PrecisionPolicy { max_terms, ..*self }
    }

    /// Decimal exponent of the accuracy contract, D + G/2.
    pub fn accuracy_exponent(&self) -> u32 {
        self.target_digits + self.guard_digits / 2
    }

    /// 10^−(D+G/2).
    pub fn tolerance(&self) -> BigReal {
        BigReal::pow10(-(self.accuracy_exponent() as i64), self.working_bits())
    }

    /// |cos| or |sin| below 10^−(D+G/4) counts as a pole.
    pub fn pole_guard(&self) -> BigReal {
        let e = self.target_digits + self.guard_digits / 4;
        BigReal::pow10(-(e as i64), self.working_bits())
    }
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        Self::digits(50)
    }
}

/// Arbitrary-precision real; the binary precision travels with the value.
///
/// Binary operations produce a result at the larger of the two operand
/// precisions.
#[derive(Clone, PartialEq, PartialOrd)]
pub struct BigReal(Float);

impl BigReal {
    pub fn zero(bits: u32) -> Self {
        BigReal(Float::new(bits))
    }

    pub fn from_i64(v: i64, bits: u32) -> Self {
        BigReal(Float::with_val(bits, v))
    }

    pub fn from_f64(v: f64, bits: u32) -> Self {
        BigReal(Float::with_val(bits, v))
    }

    pub fn from_bigint(v: &BigInt, bits: u32) -> Self {
        BigReal(Float::with_val(bits, bigint_to_rug(v)))
    }

    pub fn from_rational(v: &Rational, bits: u32) -> Self {
        let num = Float::with_val(bits + 4, bigint_to_rug(v.numer()));
        let den = Float::with_val(bits + 4, bigint_to_rug(v.denom()));
        BigReal(Float::with_val(bits, num / den))
    }

    /// 10^e, exact for e ≥ 0 up to precision.
    pub fn pow10(e: i64, bits: u32) -> Self {
        let ten = Float::with_val(bits, 10);
        let e = i32::try_from(e).expect("decimal exponent fits in i32");
        BigReal(Float::with_val(bits, ten.pow(e)))
    }

    /// Parses a decimal literal such as `0.3`, `-1.5e-3` or `7`.
    pub fn parse(text: &str, bits: u32) -> Result<Self> {
        let parsed = Float::parse(text.trim())
            .map_err(|e| Error::domain("parse", format!("`{text}`: {e}")))?;
        Ok(BigReal(Float::with_val(bits, parsed)))
    }

    pub fn from_float(f: Float) -> Self {
        BigReal(f)
    }

    pub fn as_float(&self) -> &Float {
        &self.0
    }

    pub fn into_float(self) -> Float {
        self.0
    }

    pub fn prec(&self) -> u32 {
        self.0.prec()
    }

    /// Rounded copy at a different binary precision.
    pub fn with_prec(&self, bits: u32) -> Self {
        BigReal(Float::with_val(bits, &self.0))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_sign_negative() && !self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_sign_positive() && !self.0.is_zero()
    }

    pub fn abs(&self) -> Self {
        BigReal(self.0.clone().abs())
    }

    pub fn recip(&self) -> Self {
        BigReal(self.0.clone().recip())
    }

    /// Square root; negative input returns NaN, so callers check first.
    pub fn sqrt(&self) -> Self {
        BigReal(self.0.clone().sqrt())
    }

    pub fn powi(&self, e: i32) -> Self {
        BigReal(Float::with_val(self.prec(), (&self.0).pow(e)))
    }

    /// x·2^e, exact.
    pub fn mul_pow2(&self, e: i32) -> Self {
        BigReal(self.0.clone() << e)
    }

    /// Approximate log₁₀|x|; −∞ for zero.
    pub fn log10_abs(&self) -> f64 {
        if self.0.is_zero() {
            return f64::NEG_INFINITY;
        }
        let (m, e) = self.0.to_f64_exp();
        m.abs().log10() + f64::from(e) * std::f64::consts::LOG10_2
    }

    /// |self − other| ≤ tol.
    pub fn approx_eq(&self, other: &BigReal, tol: &BigReal) -> bool {
        (self - other).abs() <= *tol
    }

    pub fn max(self, other: BigReal) -> BigReal {
        if other > self {
            other
        } else {
            self
        }
    }
}

/// π at the policy's working precision.
pub fn const_pi(policy: &PrecisionPolicy) -> BigReal {
    BigReal(Float::with_val(policy.working_bits(), Constant::Pi))
}

/// √5 at the policy's working precision (correctly rounded).
pub fn const_sqrt5(policy: &PrecisionPolicy) -> BigReal {
    BigReal(Float::with_val(policy.working_bits(), 5).sqrt())
}

/// a + b√5 evaluated at working precision.
pub fn quad_to_real(x: &QuadElem, policy: &PrecisionPolicy) -> BigReal {
    quad_to_real_bits(x, policy.working_bits())
}

pub(crate) fn quad_to_real_bits(x: &Quad<BigInt>, bits: u32) -> BigReal {
    let a = BigReal::from_rational(x.a(), bits + 8);
    if x.is_rational() {
        return a.with_prec(bits);
    }
    let b = BigReal::from_rational(x.b(), bits + 8);
    let s5 = BigReal(Float::with_val(bits + 8, 5).sqrt());
    (a + b * s5).with_prec(bits)
}

pub(crate) fn bigint_to_rug(v: &BigInt) -> Integer {
    let (sign, digits) = v.to_u32_digits();
    let mag = Integer::from_digits(&digits, Order::Lsf);
    if sign == Sign::Minus {
        -mag
    } else {
        mag
    }
}

impl fmt::Debug for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BigReal({}, prec={})", to_scientific(self, 25), self.prec())
    }
}

impl fmt::Display for BigReal {
    /// Scientific notation; the formatter precision selects significant digits.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(20).max(1);
        f.write_str(&to_scientific(self, digits))
    }
}

impl PartialEq<i64> for BigReal {
    fn eq(&self, other: &i64) -> bool {
        self.0 == *other
    }
}

impl PartialOrd<i64> for BigReal {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0.partial_cmp(other)
    }
}

macro_rules! binop {
    ($tr:ident $m:ident, $atr:ident $am:ident, $op:tt) => {
        impl<'a> $tr<&'a BigReal> for &'a BigReal {
            type Output = BigReal;
            fn $m(self, rhs: &'a BigReal) -> BigReal {
                let p = self.prec().max(rhs.prec());
                BigReal(Float::with_val(p, &self.0 $op &rhs.0))
            }
        }
        impl $tr<BigReal> for BigReal {
            type Output = BigReal;
            fn $m(self, rhs: BigReal) -> BigReal {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a BigReal> for BigReal {
            type Output = BigReal;
            fn $m(self, rhs: &'a BigReal) -> BigReal {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<BigReal> for &'a BigReal {
            type Output = BigReal;
            fn $m(self, rhs: BigReal) -> BigReal {
                self.$m(&rhs)
            }
        }
        impl $tr<i64> for &BigReal {
            type Output = BigReal;
            fn $m(self, rhs: i64) -> BigReal {
                BigReal(Float::with_val(self.prec(), &self.0 $op rhs))
            }
        }
        impl $tr<i64> for BigReal {
            type Output = BigReal;
            fn $m(self, rhs: i64) -> BigReal {
                (&self).$m(rhs)
            }
        }
        impl<'a> $atr<&'a BigReal> for BigReal {
            fn $am(&mut self, rhs: &'a BigReal) {
                *self = (&*self).$m(rhs);
            }
        }
        impl $atr<BigReal> for BigReal {
            fn $am(&mut self, rhs: BigReal) {
                *self = (&*self).$m(&rhs);
            }
        }
    };
}

binop!(Add add, AddAssign add_assign, +);
binop!(Sub sub, SubAssign sub_assign, -);
binop!(Mul mul, MulAssign mul_assign, *);
binop!(Div div, DivAssign div_assign, /);

impl Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal(-self.0)
    }
}

impl Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal(Float::with_val(self.prec(), -&self.0))
    }
}
