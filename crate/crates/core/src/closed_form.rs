//! Expression trees for identity right-hand sides.

use std::collections::HashMap;
use std::fmt::{self, Write as _};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::exact::Sequence;
use crate::real::{const_pi, const_sqrt5, cos, csc, exp, ln, quad_to_real, sec, sin, tan};
use crate::series::{sum_rational_series, RationalSeriesSpec};
use crate::special::{euler_gamma, log_gamma};
use crate::{BigReal, Error, PrecisionPolicy, QuadElem, Rational, Result};

/// Named constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Constant {
    Pi,
    EulerGamma,
    Sqrt5,
    Alpha,
    LnAlpha,
    LnGammaAlpha,
}

impl Constant {
    fn symbol(self) -> &'static str {
        match self {
            Constant::Pi => "π",
            Constant::EulerGamma => "γ",
            Constant::Sqrt5 => "√5",
            Constant::Alpha => "α",
            Constant::LnAlpha => "ln α",
            Constant::LnGammaAlpha => "ln Γ(α)",
        }
    }

    pub fn eval(self, policy: &PrecisionPolicy) -> Result<BigReal> {
        Ok(match self {
            Constant::Pi => const_pi(policy),
            Constant::EulerGamma => euler_gamma(policy),
            Constant::Sqrt5 => const_sqrt5(policy),
            Constant::Alpha => quad_to_real(&QuadElem::alpha(), policy),
            Constant::LnAlpha => ln(&quad_to_real(&QuadElem::alpha(), policy), policy)?,
            Constant::LnGammaAlpha => ln_gamma_alpha(policy)?,
        })
    }
}

fn ln_gamma_alpha(policy: &PrecisionPolicy) -> Result<BigReal> {
    static CACHE: OnceLock<RwLock<HashMap<u32, BigReal>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let bits = policy.working_bits();
    if let Some(v) = cache.read().expect("constant cache poisoned").get(&bits) {
        return Ok(v.clone());
    }
    let v = log_gamma(&quad_to_real(&QuadElem::alpha(), policy), policy)?;
    cache.write().expect("constant cache poisoned").insert(bits, v.clone());
    Ok(v)
}

/// Unary functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Func {
    Ln,
    Exp,
    Sin,
    Cos,
    Tan,
    Sec,
    Csc,
}

impl Func {
    fn name(self) -> &'static str {
        match self {
            Func::Ln => "ln",
            Func::Exp => "exp",
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Tan => "tan",
            Func::Sec => "sec",
            Func::Csc => "csc",
        }
    }
}

/// Closed-form expression.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Lit(Rational),
    Const(Constant),
    Fib(i64),
    Luc(i64),
    AuxSum(Arc<RationalSeriesSpec>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, i32),
    Apply(Func, Box<Expr>),
}

impl Expr {
    pub fn int(v: i64) -> Expr {
        Expr::Lit(Rational::from_integer(BigInt::from(v)))
    }

    pub fn ratio(p: i64, q: i64) -> Expr {
        Expr::Lit(Rational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn pi() -> Expr {
        Expr::Const(Constant::Pi)
    }

    pub fn euler_gamma() -> Expr {
        Expr::Const(Constant::EulerGamma)
    }

    pub fn sqrt5() -> Expr {
        Expr::Const(Constant::Sqrt5)
    }

    pub fn alpha() -> Expr {
        Expr::Const(Constant::Alpha)
    }

    pub fn ln_alpha() -> Expr {
        Expr::Const(Constant::LnAlpha)
    }

    pub fn ln_gamma_alpha() -> Expr {
        Expr::Const(Constant::LnGammaAlpha)
    }

    pub fn seq(seq: Sequence, index: i64) -> Expr {
        match seq {
            Sequence::Fibonacci => Expr::Fib(index),
            Sequence::Lucas => Expr::Luc(index),
        }
    }

    pub fn aux(spec: RationalSeriesSpec) -> Expr {
        Expr::AuxSum(Arc::new(spec))
    }

    pub fn powi(self, e: i32) -> Expr {
        Expr::Pow(Box::new(self), e)
    }

    pub fn apply(self, f: Func) -> Expr {
        Expr::Apply(f, Box::new(self))
    }

    pub fn ln(self) -> Expr {
        self.apply(Func::Ln)
    }

    pub fn exp(self) -> Expr {
        self.apply(Func::Exp)
    }

    pub fn sin(self) -> Expr {
        self.apply(Func::Sin)
    }

    pub fn cos(self) -> Expr {
        self.apply(Func::Cos)
    }

    pub fn tan(self) -> Expr {
        self.apply(Func::Tan)
    }

    pub fn sec(self) -> Expr {
        self.apply(Func::Sec)
    }

    pub fn csc(self) -> Expr {
        self.apply(Func::Csc)
    }

    pub fn depth(&self) -> usize {
        match self {
            Expr::Lit(_) | Expr::Const(_) | Expr::Fib(_) | Expr::Luc(_) | Expr::AuxSum(_) => 1,
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => 1 + a.depth().max(b.depth()),
            Expr::Neg(a) | Expr::Pow(a, _) | Expr::Apply(_, a) => 1 + a.depth(),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $variant:ident) => {
        impl $tr for Expr {
            type Output = Expr;
            fn $method(self, rhs: Expr) -> Expr {
                Expr::$variant(Box::new(self), Box::new(rhs))
            }
        }
    };
}

binop!(Add, add, Add);
binop!(Sub, sub, Sub);
binop!(Mul, mul, Mul);
binop!(Div, div, Div);

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::Neg(Box::new(self))
    }
}

/// Evaluates at the policy's working precision.
pub fn eval_expr(expr: &Expr, policy: &PrecisionPolicy) -> Result<BigReal> {
    let bits = policy.working_bits();
    Ok(match expr {
        Expr::Lit(q) => BigReal::from_rational(q, bits),
        Expr::Const(c) => c.eval(policy)?,
        Expr::Fib(m) => BigReal::from_bigint(&Sequence::Fibonacci.term(*m), bits),
        Expr::Luc(m) => BigReal::from_bigint(&Sequence::Lucas.term(*m), bits),
        Expr::AuxSum(spec) => sum_rational_series(spec, policy)?,
        Expr::Add(a, b) => eval_expr(a, policy)? + eval_expr(b, policy)?,
        Expr::Sub(a, b) => eval_expr(a, policy)? - eval_expr(b, policy)?,
        Expr::Mul(a, b) => eval_expr(a, policy)? * eval_expr(b, policy)?,
        Expr::Div(a, b) => {
            let num = eval_expr(a, policy)?;
            let den = eval_expr(b, policy)?;
            if den.abs() < policy.pole_guard() {
                return Err(Error::DivisionNearZero {
                    context: expr_render(b),
                });
            }
            num / den
        }
        Expr::Neg(a) => -eval_expr(a, policy)?,
        Expr::Pow(a, e) => {
            let base = eval_expr(a, policy)?;
            if *e < 0 && base.abs() < policy.pole_guard() {
                return Err(Error::DivisionNearZero {
                    context: expr_render(expr),
                });
            }
            base.powi(*e)
        }
        Expr::Apply(f, a) => {
            let x = eval_expr(a, policy)?;
            match f {
                Func::Ln => ln(&x, policy)?,
                Func::Exp => exp(&x, policy),
                Func::Sin => sin(&x, policy),
                Func::Cos => cos(&x, policy),
                Func::Tan => tan(&x, policy)?,
                Func::Sec => sec(&x, policy)?,
                Func::Csc => csc(&x, policy)?,
            }
        }
    })
}

const PREC_SUM: u8 = 1;
const PREC_PRODUCT: u8 = 2;
const PREC_UNARY: u8 = 3;
const PREC_POWER: u8 = 4;
const PREC_ATOM: u8 = 5;

fn precedence(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => PREC_SUM,
        Expr::Mul(..) | Expr::Div(..) => PREC_PRODUCT,
        Expr::Lit(q) if !q.is_integer() => PREC_PRODUCT,
        Expr::Lit(q) if q.is_negative() => PREC_UNARY,
        Expr::Neg(_) => PREC_UNARY,
        Expr::Pow(..) => PREC_POWER,
        _ => PREC_ATOM,
    }
}

fn render_child(out: &mut String, e: &Expr, min: u8) {
    if precedence(e) < min {
        out.push('(');
        render_into(out, e);
        out.push(')');
    } else {
        render_into(out, e);
    }
}

fn render_rational(out: &mut String, q: &Rational) {
    if q.is_negative() {
        out.push('−');
    }
    let a = q.abs();
    if a.denom().is_one() {
        let _ = write!(out, "{}", a.numer());
    } else {
        let _ = write!(out, "{}/{}", a.numer(), a.denom());
    }
}

fn render_index(out: &mut String, letter: char, m: i64) {
    if m < 0 {
        let _ = write!(out, "{letter}(−{})", -m);
    } else {
        let _ = write!(out, "{letter}({m})");
    }
}

fn render_into(out: &mut String, e: &Expr) {
    match e {
        Expr::Lit(q) => render_rational(out, q),
        Expr::Const(c) => out.push_str(c.symbol()),
        Expr::Fib(m) => render_index(out, 'F', *m),
        Expr::Luc(m) => render_index(out, 'L', *m),
        Expr::AuxSum(spec) => out.push_str(spec.label()),
        Expr::Add(a, b) => {
            render_child(out, a, PREC_SUM);
            out.push_str(" + ");
            render_child(out, b, PREC_SUM);
        }
        Expr::Sub(a, b) => {
            render_child(out, a, PREC_SUM);
            out.push_str(" − ");
            render_child(out, b, PREC_PRODUCT);
        }
        Expr::Mul(a, b) => {
            render_child(out, a, PREC_PRODUCT);
            out.push('·');
            render_child(out, b, PREC_UNARY + 1);
        }
        Expr::Div(a, b) => {
            render_child(out, a, PREC_PRODUCT);
            out.push('/');
            render_child(out, b, PREC_UNARY + 1);
        }
        Expr::Neg(a) => {
            out.push('−');
            render_child(out, a, PREC_UNARY + 1);
        }
        Expr::Pow(a, k) => {
            render_child(out, a, PREC_ATOM);
            if *k < 0 {
                let _ = write!(out, "^(−{})", -k);
            } else {
                let _ = write!(out, "^{k}");
            }
        }
        Expr::Apply(f, a) => {
            out.push_str(f.name());
            out.push('(');
            render_into(out, a);
            out.push(')');
        }
    }
}

/// Stable human-readable rendering.
pub fn expr_render(expr: &Expr) -> String {
    let mut out = String::new();
    render_into(&mut out, expr);
    out
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&expr_render(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::to_significant;

    fn d(n: u32) -> PrecisionPolicy {
        PrecisionPolicy::digits(n)
    }

    #[test]
    fn renders() {
        assert_eq!(expr_render(&Expr::Fib(3)), "F(3)");
        assert_eq!(expr_render(&(Expr::pi() / Expr::sqrt5())), "π/√5");
        let e = (Expr::int(1) + Expr::int(2)) * Expr::Luc(-1);
        assert_eq!(expr_render(&e), "(1 + 2)·L(−1)");
        let e = Expr::int(1) - (Expr::int(2) - Expr::int(3));
        assert_eq!(expr_render(&e), "1 − (2 − 3)");
        let e = Expr::pi() / (Expr::int(2) * Expr::sqrt5());
        assert_eq!(expr_render(&e), "π/(2·√5)");
        assert_eq!(expr_render(&-(Expr::pi().sec())), "−sec(π)");
        assert_eq!(expr_render(&Expr::alpha().powi(-2)), "α^(−2)");
    }

    #[test]
    fn exact_atoms() {
        assert_eq!(to_significant(&eval_expr(&Expr::Fib(7), &d(5)).unwrap(), 2), "13");
        assert_eq!(to_significant(&eval_expr(&Expr::Luc(-3), &d(5)).unwrap(), 1), "-4");
    }

    #[test]
    fn scaled_even_rhs() {
        let x = Expr::pi() / (Expr::int(2) * Expr::sqrt5());
        let v = eval_expr(&(x.clone() * x.tan()), &d(20)).unwrap();
        assert_eq!(to_significant(&v, 6), "0.594678");
    }

    #[test]
    fn log_secant() {
        let arg = Expr::sqrt5() * Expr::pi() / Expr::int(2);
        let good = -(Expr::pi() * arg.clone().sec());
        let v = eval_expr(&good.ln(), &d(20)).unwrap();
        assert_eq!(to_significant(&v, 7), "1.215118");
        let bad = Expr::pi() * arg.sec();
        assert!(matches!(eval_expr(&bad.ln(), &d(20)), Err(Error::Domain { .. })));
    }

    #[test]
    fn division_guard() {
        let e = Expr::int(1) / (Expr::Fib(2) - Expr::Fib(1));
        assert!(matches!(eval_expr(&e, &d(10)), Err(Error::DivisionNearZero { .. })));
    }

    #[test]
    fn ln_gamma_alpha_constant() {
        let p = d(30);
        let direct = log_gamma(&quad_to_real(&QuadElem::alpha(), &p), &p).unwrap();
        let c = eval_expr(&Expr::ln_gamma_alpha(), &p).unwrap();
        assert!((direct - c).abs() <= p.tolerance());
    }
}
