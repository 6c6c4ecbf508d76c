use rug::ops::Pow;
use rug::Float;

use super::{BigReal, PrecisionPolicy};
use crate::{Error, Result};

/// Elementary functions exposed through [`elem`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElemKind {
    Ln,
    Exp,
    Sin,
    Cos,
    Tan,
    Cot,
    Sec,
    Csc,
    /// Two arguments: base, exponent.
    Pow,
}

/// Dispatches on `kind`; `Pow` takes two arguments, the rest one.
pub fn elem(kind: ElemKind, args: &[&BigReal], policy: &PrecisionPolicy) -> Result<BigReal> {
    let want = if kind == ElemKind::Pow { 2 } else { 1 };
    if args.len() != want {
        return Err(Error::domain(
            "elem",
            format!("{kind:?} takes {want} argument(s), got {}", args.len()),
        ));
    }
    let x = args[0];
    match kind {
        ElemKind::Ln => ln(x, policy),
        ElemKind::Exp => Ok(exp(x, policy)),
        ElemKind::Sin => Ok(sin(x, policy)),
        ElemKind::Cos => Ok(cos(x, policy)),
        ElemKind::Tan => tan(x, policy),
        ElemKind::Cot => cot(x, policy),
        ElemKind::Sec => sec(x, policy),
        ElemKind::Csc => csc(x, policy),
        ElemKind::Pow => pow(x, args[1], policy),
    }
}

fn bits(x: &BigReal, policy: &PrecisionPolicy) -> u32 {
    x.prec().max(policy.working_bits())
}

fn at(x: &BigReal, policy: &PrecisionPolicy) -> Float {
    Float::with_val(bits(x, policy), x.as_float())
}

pub fn ln(x: &BigReal, policy: &PrecisionPolicy) -> Result<BigReal> {
    if !x.is_positive() {
        return Err(Error::domain("ln", format!("non-positive argument {x:.12}")));
    }
    Ok(BigReal(at(x, policy).ln()))
}

pub fn exp(x: &BigReal, policy: &PrecisionPolicy) -> BigReal {
    BigReal(at(x, policy).exp())
}

pub fn sin(x: &BigReal, policy: &PrecisionPolicy) -> BigReal {
    BigReal(at(x, policy).sin())
}

pub fn cos(x: &BigReal, policy: &PrecisionPolicy) -> BigReal {
    BigReal(at(x, policy).cos())
}

fn guarded(op: &'static str, v: Float, policy: &PrecisionPolicy, what: &str) -> Result<Float> {
    if BigReal(v.clone()).abs() <= policy.pole_guard() {
        return Err(Error::domain(
            op,
            format!("{what} of the argument is within 1e-{} of zero", policy.target_digits() + policy.guard_digits() / 4),
        ));
    }
    Ok(v)
}

pub fn tan(x: &BigReal, policy: &PrecisionPolicy) -> Result<BigReal> {
    let (s, c) = at(x, policy).sin_cos(Float::new(bits(x, policy)));
    let c = guarded("tan", c, policy, "cosine")?;
    Ok(BigReal(s / c))
}

pub fn cot(x: &BigReal, policy: &PrecisionPolicy) -> Result<BigReal> {
    let (s, c) = at(x, policy).sin_cos(Float::new(bits(x, policy)));
    let s = guarded("cot", s, policy, "sine")?;
    Ok(BigReal(c / s))
}

pub fn sec(x: &BigReal, policy: &PrecisionPolicy) -> Result<BigReal> {
    let c = guarded("sec", at(x, policy).cos(), policy, "cosine")?;
    Ok(BigReal(c.recip()))
}

pub fn csc(x: &BigReal, policy: &PrecisionPolicy) -> Result<BigReal> {
    let s = guarded("csc", at(x, policy).sin(), policy, "sine")?;
    Ok(BigReal(s.recip()))
}

/// base^exponent; a negative base needs an integral exponent, zero a positive one.
pub fn pow(base: &BigReal, exponent: &BigReal, policy: &PrecisionPolicy) -> Result<BigReal> {
    let integral = exponent.as_float().is_integer();
    if base.is_negative() && !integral {
        return Err(Error::domain("pow", "negative base with non-integral exponent"));
    }
    if base.is_zero() && !exponent.is_positive() {
        return Err(Error::domain("pow", "zero base with non-positive exponent"));
    }
    let b = at(base, policy);
    Ok(BigReal(b.pow(exponent.as_float())))
}
