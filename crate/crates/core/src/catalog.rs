//! Registry of identities: each pairs a series with a closed form.
//!
//! MAIN entries are the general statements. PRINTED entries are the special
//! cases exactly as displayed after each theorem, including their typos, so
//! the verifier can flag them.

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::One;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::closed_form::Expr;
use crate::exact::Sequence::{self, Fibonacci as F, Lucas as L};
use crate::series::{RationalSeriesSpec, SeriesFamily, SeriesSpec};
use crate::{Error, QuadElem, Rational, Result};

/// MAIN statement or transcribed printed special case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Main,
    Printed,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Main => "MAIN",
            Variant::Printed => "PRINTED",
        }
    }
}

impl Serialize for Variant {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Parameter of one instantiation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    None,
    M(i64),
    N(i64),
}

impl Param {
    pub fn value(self) -> Option<i64> {
        match self {
            Param::None => None,
            Param::M(v) | Param::N(v) => Some(v),
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::None => Ok(()),
            Param::M(m) => write!(f, "m={m}"),
            Param::N(n) => write!(f, "n={n}"),
        }
    }
}

impl Serialize for Param {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(usize::from(*self != Param::None)))?;
        match self {
            Param::None => {}
            Param::M(m) => map.serialize_entry("m", m)?,
            Param::N(n) => map.serialize_entry("n", n)?,
        }
        map.end()
    }
}

/// Which parameter an entry takes and which values are admissible.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamDomain {
    None,
    /// m ≥ 0
    M,
    /// n ≥ 1
    N,
    /// The printed values of m only.
    Fixed(&'static [i64]),
}

impl ParamDomain {
    pub fn contains(self, p: Param) -> bool {
        match (self, p) {
            (ParamDomain::None, Param::None) => true,
            (ParamDomain::M, Param::M(m)) => m >= 0,
            (ParamDomain::N, Param::N(n)) => n >= 1,
            (ParamDomain::Fixed(ms), Param::M(m)) => ms.contains(&m),
            _ => false,
        }
    }

    pub fn describe(self) -> String {
        match self {
            ParamDomain::None => "none".into(),
            ParamDomain::M => "m >= 0".into(),
            ParamDomain::N => "n >= 1".into(),
            ParamDomain::Fixed(ms) => {
                let v: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
                format!("m in {{{}}}", v.join(", "))
            }
        }
    }
}

/// Left-hand side of an identity.
#[derive(Clone, Debug, PartialEq)]
pub enum Lhs {
    Zeta(SeriesSpec),
    Rational(Arc<RationalSeriesSpec>),
}

impl fmt::Display for Lhs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lhs::Zeta(s) => s.fmt(f),
            Lhs::Rational(r) => r.fmt(f),
        }
    }
}

type LhsFn = fn(i64) -> Result<Lhs>;
type RhsFn = fn(i64) -> Expr;

/// One catalog entry with parameterized sides.
#[derive(Clone)]
pub struct IdentityRecord {
    pub id: &'static str,
    pub title: &'static str,
    pub anchor: &'static str,
    pub variant: Variant,
    pub domain: ParamDomain,
    lhs: LhsFn,
    rhs: RhsFn,
}

impl fmt::Debug for IdentityRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityRecord")
            .field("id", &self.id)
            .field("variant", &self.variant)
            .field("domain", &self.domain)
            .finish()
    }
}

impl IdentityRecord {
    /// Builds the concrete sides at `param`.
    pub fn instantiate(&self, param: Param) -> Result<(Lhs, Expr)> {
        if !self.domain.contains(param) {
            return Err(Error::ParamOutOfDomain {
                id: self.id.to_string(),
                param: match param {
                    Param::None => "none".into(),
                    p => p.to_string(),
                },
                domain: self.domain.describe(),
            });
        }
        let v = param.value().unwrap_or(0);
        Ok(((self.lhs)(v)?, (self.rhs)(v)))
    }

    /// Parameters selected by a sweep over the given ranges.
    pub fn sweep_params(&self, m_range: &std::ops::RangeInclusive<i64>, n_range: &std::ops::RangeInclusive<i64>) -> Vec<Param> {
        match self.domain {
            ParamDomain::None => vec![Param::None],
            ParamDomain::M => m_range.clone().filter(|m| *m >= 0).map(Param::M).collect(),
            ParamDomain::N => n_range.clone().filter(|n| *n >= 1).map(Param::N).collect(),
            ParamDomain::Fixed(ms) => ms.iter().copied().filter(|m| m_range.contains(m)).map(Param::M).collect(),
        }
    }

    /// The template rendered with a symbolic parameter, for listings.
    pub fn param_name(&self) -> Option<char> {
        match self.domain {
            ParamDomain::None => None,
            ParamDomain::N => Some('n'),
            _ => Some('m'),
        }
    }
}

// ---------------------------------------------------------------- helpers

fn q(p: i64, d: i64) -> Rational {
    Ratio::new(BigInt::from(p), BigInt::from(d))
}

fn quad(p: i64, q_: i64, r: i64, s: i64) -> QuadElem {
    QuadElem::from_parts(p.into(), q_.into(), r.into(), s.into())
}

fn int(v: i64) -> Expr {
    Expr::int(v)
}

fn x(seq: Sequence, i: i64) -> Expr {
    Expr::seq(seq, i)
}

fn zeta(family: SeriesFamily, seq: Sequence, p: i64) -> Result<Lhs> {
    Ok(Lhs::Zeta(SeriesSpec::new(family, seq, p)?))
}

/// √5·π/2
fn half_sqrt5_pi() -> Expr {
    Expr::sqrt5() * Expr::pi() / int(2)
}

/// tan(√5π/2)
fn tan_t() -> Expr {
    half_sqrt5_pi().tan()
}

/// ln(−π·sec(√5π/2))
fn ln_neg_pi_sec() -> Expr {
    (-(Expr::pi() * half_sqrt5_pi().sec())).ln()
}

/// ln(−sec(√5π/2)), the printed form without π.
fn ln_neg_sec() -> Expr {
    (-half_sqrt5_pi().sec()).ln()
}

/// π/√5 · tan(√5π/2)
fn pi_tan_over_sqrt5() -> Expr {
    Expr::pi() / Expr::sqrt5() * tan_t()
}

/// ℓ − 2 ln Γ(α) − 4 ln α
fn gamma_bracket(l: Expr) -> Expr {
    l - int(2) * Expr::ln_gamma_alpha() - int(4) * Expr::ln_alpha()
}

fn one_minus_gamma() -> Expr {
    int(1) - Expr::euler_gamma()
}

// ---------------------------------------------------------------- auxiliary series

/// Σ_{n≥1} 1/(n²+n−1)
pub fn lemma_series() -> RationalSeriesSpec {
    RationalSeriesSpec::reciprocal(
        "Σ_{n≥1} 1/(n²+n−1)",
        Rational::one(),
        vec![-QuadElem::alpha(), -QuadElem::beta()],
    )
    .expect("valid spec")
}

/// Σ_{n≥1} 1/(n(n+1)(n²+3n+1))
pub fn aux_quartic() -> RationalSeriesSpec {
    let a2 = QuadElem::alpha() * QuadElem::alpha();
    let b2 = QuadElem::beta() * QuadElem::beta();
    RationalSeriesSpec::reciprocal(
        "Σ_{n≥1} 1/(n(n+1)(n²+3n+1))",
        Rational::one(),
        vec![quad(0, 1, 0, 1), quad(-1, 1, 0, 1), -a2, -b2],
    )
    .expect("valid spec")
}

/// Σ_{n≥1} 1/(n(n²+n−1))
pub fn aux_cubic() -> RationalSeriesSpec {
    RationalSeriesSpec::reciprocal(
        "Σ_{n≥1} 1/(n(n²+n−1))",
        Rational::one(),
        vec![quad(0, 1, 0, 1), -QuadElem::alpha(), -QuadElem::beta()],
    )
    .expect("valid spec")
}

/// Σ_{n≥1} 1/(n(5n²−5n+1)(5n²+5n+1))
pub fn aux_quintic() -> RationalSeriesSpec {
    RationalSeriesSpec::reciprocal(
        "Σ_{n≥1} 1/(n(5n²−5n+1)(5n²+5n+1))",
        q(25, 1),
        vec![
            quad(0, 1, 0, 1),
            quad(1, 2, 1, 10),
            quad(1, 2, -1, 10),
            quad(-1, 2, 1, 10),
            quad(-1, 2, -1, 10),
        ],
    )
    .expect("valid spec")
}

/// Every auxiliary rational series referenced by the catalog.
pub fn auxiliary_series() -> Vec<RationalSeriesSpec> {
    vec![lemma_series(), aux_quartic(), aux_cubic(), aux_quintic()]
}

// ---------------------------------------------------------------- right-hand sides

fn thm1(seq: Sequence, m: i64) -> Expr {
    match seq {
        F => Expr::pi() / (int(2) * Expr::sqrt5()) * tan_t() * x(L, m) + x(F, m + 2) / int(2),
        L => half_sqrt5_pi() * tan_t() * x(F, m) + x(L, m + 2) / int(2),
    }
}

fn corollary(seq: Sequence, n: i64) -> Expr {
    let nn = int(n);
    let a = Expr::pi() * Expr::sqrt5() / nn.clone();
    let b = Expr::pi() / nn.clone();
    let den = (int(2 * n * n - 3) + Expr::sqrt5()) * (int(2 * n * n - 3) - Expr::sqrt5());
    match seq {
        F => {
            let trig = Expr::pi() * a.clone().sin() / (a.clone().cos() - b.cos());
            int(1) / Expr::sqrt5() * trig + int(2 * n * (n.pow(4) - 5 * n * n + 3)) / den
        }
        L => {
            let trig = Expr::pi() * b.clone().sin() / (b.cos() - a.cos());
            trig - int(2 * n * (n.pow(4) - n * n + 3)) / den
        }
    }
}

fn thm2(seq: Sequence, m: i64) -> Expr {
    (x(seq, m) + x(seq, m + 2)) / int(2)
        - x(seq, m) * pi_tan_over_sqrt5()
        - x(seq, m) / int(2) * Expr::aux(aux_quartic())
}

fn thm3(seq: Sequence, m: i64) -> Expr {
    x(seq, m + 1) + x(seq, m - 1) * pi_tan_over_sqrt5() + x(seq, m) * Expr::aux(aux_cubic())
}

fn thm4(seq: Sequence, m: i64) -> Expr {
    match seq {
        F => x(F, m - 1) * ln_neg_pi_sec() + int(2) / Expr::sqrt5() * x(L, m - 1) * Expr::ln_alpha(),
        L => x(L, m - 1) * ln_neg_pi_sec() + int(2) * Expr::sqrt5() * x(F, m - 1) * Expr::ln_alpha(),
    }
}

fn thm5(seq: Sequence, m: i64) -> Expr {
    match seq {
        F => {
            one_minus_gamma() * x(F, m)
                + x(L, m - 1) / (int(2) * Expr::sqrt5()) * gamma_bracket(ln_neg_pi_sec())
        }
        L => {
            one_minus_gamma() * x(L, m)
                + Expr::sqrt5() * x(F, m - 1) / int(2) * gamma_bracket(ln_neg_pi_sec())
        }
    }
}

fn thm6(seq: Sequence, m: i64) -> Expr {
    let tail = (-(Expr::pi() / Expr::alpha().powi(2) * half_sqrt5_pi().sec())).ln();
    let am = Expr::alpha().powi((m - 1) as i32);
    match seq {
        F => {
            one_minus_gamma() * x(F, m) - Expr::ln_gamma_alpha() / Expr::sqrt5() * x(L, m - 1)
                + x(F, m - 1) * Expr::ln_alpha()
                + am / Expr::sqrt5() * tail
        }
        L => {
            one_minus_gamma() * x(L, m) - Expr::sqrt5() * Expr::ln_gamma_alpha() * x(F, m - 1)
                + x(L, m - 1) * Expr::ln_alpha()
                + am * tail
        }
    }
}

// ---------------------------------------------------------------- printed special cases

fn printed_thm1_f(m: i64) -> Expr {
    if m == 0 {
        pi_tan_over_sqrt5() + Expr::ratio(1, 2)
    } else {
        Expr::pi() / (int(2) * Expr::sqrt5()) * tan_t() + int(1)
    }
}

fn printed_thm1_l(m: i64) -> Expr {
    if m == 0 {
        Expr::ratio(3, 2)
    } else {
        half_sqrt5_pi() * tan_t() + int(2)
    }
}

fn printed_thm2_f(_: i64) -> Expr {
    Expr::ratio(1, 2)
}

fn printed_thm2_l(_: i64) -> Expr {
    Expr::ratio(5, 2) - int(2) * Expr::pi() / Expr::sqrt5() * tan_t() - Expr::aux(aux_quartic())
}

fn printed_thm3_f(_: i64) -> Expr {
    int(1) + pi_tan_over_sqrt5()
}

fn printed_thm4_f(m: i64) -> Expr {
    if m == 0 {
        ln_neg_pi_sec() - int(2) / Expr::sqrt5() * Expr::ln_alpha()
    } else {
        int(4) / Expr::sqrt5() * Expr::ln_alpha()
    }
}

fn printed_thm4_l(m: i64) -> Expr {
    if m == 0 {
        -ln_neg_pi_sec() + int(2) * Expr::sqrt5() * Expr::ln_alpha()
    } else {
        int(2) * (-(Expr::pi() * half_sqrt5_pi().csc())).ln()
    }
}

fn printed_thm5_f(m: i64) -> Expr {
    if m == 0 {
        int(1) / (int(2) * Expr::sqrt5())
            * (-ln_neg_pi_sec() + int(2) * Expr::ln_gamma_alpha() + int(4) * Expr::ln_alpha())
    } else {
        one_minus_gamma() + int(1) / Expr::sqrt5() * gamma_bracket(ln_neg_sec())
    }
}

fn printed_thm5_l(m: i64) -> Expr {
    if m == 0 {
        int(2) * one_minus_gamma() + Expr::sqrt5() / int(2) * gamma_bracket(ln_neg_sec())
    } else {
        one_minus_gamma()
    }
}

fn printed_thm6_f(_: i64) -> Expr {
    one_minus_gamma() - int(2) / Expr::sqrt5() * (Expr::ln_gamma_alpha().exp() + Expr::ln_alpha())
        + int(1) / Expr::sqrt5() * ln_neg_pi_sec()
}

fn printed_thm6_l(_: i64) -> Expr {
    one_minus_gamma() + ln_neg_pi_sec()
}

// ---------------------------------------------------------------- table

macro_rules! entry {
    ($id:expr, $title:expr, $anchor:expr, $variant:ident, $domain:expr, $lhs:expr, $rhs:expr) => {
        IdentityRecord {
            id: $id,
            title: $title,
            anchor: $anchor,
            variant: Variant::$variant,
            domain: $domain,
            lhs: $lhs,
            rhs: $rhs,
        }
    };
}

use ParamDomain::{Fixed, M as DM, N as DN};
use SeriesFamily::*;

const M01: &[i64] = &[0, 1];
const M0: &[i64] = &[0];
const M1: &[i64] = &[1];

fn build() -> Vec<IdentityRecord> {
    let mut v = vec![
        entry!("SCALED-EVEN-F", "Σ ζ(2k)F(2k)/5^k = π/(2√5)·tan(π/(2√5))", "Introduction, scaled even zeta values",
            Main, ParamDomain::None, |_| zeta(ScaledEven5, F, 0),
            |_| { let h = Expr::pi() / (int(2) * Expr::sqrt5()); h.clone() * h.tan() }),
        entry!("SCALED-EVEN-L", "Σ ζ(2k)L(2k)/5^k = π/(2√5)·tan(π/(2√5)) + 1", "Introduction, scaled even zeta values",
            Main, ParamDomain::None, |_| zeta(ScaledEven5, L, 0),
            |_| { let h = Expr::pi() / (int(2) * Expr::sqrt5()); h.clone() * h.tan() + int(1) }),
        entry!("SCALED-ODD-F", "Σ ζ(2k+1)F(2k)/5^k = 1/2", "Introduction, scaled odd zeta values",
            Main, ParamDomain::None, |_| zeta(ScaledOdd5, F, 0), |_| Expr::ratio(1, 2)),
        entry!("SCALED-ODD-L", "Σ ζ(2k+1)L(2k)/5^k = 3/2 − 2·Σ 1/(n(5n²−5n+1)(5n²+5n+1))",
            "Introduction, Lucas counterpart of the scaled odd identity",
            Main, ParamDomain::None, |_| zeta(ScaledOdd5, L, 0),
            |_| Expr::ratio(3, 2) - int(2) * Expr::aux(aux_quintic())),
        entry!("LEMMA1", "Σ 1/(n²+n−1) = 1 + (√5/5)·π·tan(√5π/2)", "Lemma 1",
            Main, ParamDomain::None, |_| Ok(Lhs::Rational(Arc::new(lemma_series()))),
            |_| int(1) + Expr::sqrt5() / int(5) * Expr::pi() * tan_t()),
        entry!("THM1-F", "Σ (ζ(2k)−1)F(2k+m−1)", "Theorem 1, Fibonacci", Main, DM,
            |m| zeta(EvenZeta, F, m), |m| thm1(F, m)),
        entry!("THM1-L", "Σ (ζ(2k)−1)L(2k+m−1)", "Theorem 1, Lucas", Main, DM,
            |m| zeta(EvenZeta, L, m), |m| thm1(L, m)),
        entry!("COR-F", "Σ (ζ(2k)−1)F(2k−1)/n^(2k−1)", "Corollary after Theorem 1, Fibonacci", Main, DN,
            |n| zeta(CorrN, F, n), |n| corollary(F, n)),
        entry!("COR-L", "Σ (ζ(2k)−1)L(2k−1)/n^(2k−1)", "Corollary after Theorem 1, Lucas", Main, DN,
            |n| zeta(CorrN, L, n), |n| corollary(L, n)),
        entry!("THM2-F", "Σ (ζ(2k+1)−1)F(2k+m)", "Theorem 2, Fibonacci", Main, DM,
            |m| zeta(OddZeta, F, m), |m| thm2(F, m)),
        entry!("THM2-L", "Σ (ζ(2k+1)−1)L(2k+m)", "Theorem 2, Lucas", Main, DM,
            |m| zeta(OddZeta, L, m), |m| thm2(L, m)),
        entry!("THM3-F", "Σ_{k≥2} (ζ(k)−1)F(k+m−1)", "Theorem 3, Fibonacci", Main, DM,
            |m| zeta(AllZeta, F, m), |m| thm3(F, m)),
        entry!("THM3-L", "Σ_{k≥2} (ζ(k)−1)L(k+m−1)", "Theorem 3, Lucas", Main, DM,
            |m| zeta(AllZeta, L, m), |m| thm3(L, m)),
        entry!("THM4-F", "Σ (ζ(2k)−1)F(2k+m−1)/k", "Theorem 4, Fibonacci", Main, DM,
            |m| zeta(EvenZetaOverK, F, m), |m| thm4(F, m)),
        entry!("THM4-L", "Σ (ζ(2k)−1)L(2k+m−1)/k", "Theorem 4, Lucas", Main, DM,
            |m| zeta(EvenZetaOverK, L, m), |m| thm4(L, m)),
        entry!("THM5-F", "Σ (ζ(2k+1)−1)F(2k+m)/(2k+1)", "Theorem 5, Fibonacci", Main, DM,
            |m| zeta(OddZetaOver2k1, F, m), |m| thm5(F, m)),
        entry!("THM5-L", "Σ (ζ(2k+1)−1)L(2k+m)/(2k+1)", "Theorem 5, Lucas", Main, DM,
            |m| zeta(OddZetaOver2k1, L, m), |m| thm5(L, m)),
        entry!("THM6-F", "Σ_{k≥2} (ζ(k)−1)F(k+m−1)/k", "Theorem 6, Fibonacci", Main, DM,
            |m| zeta(AllZetaOverK, F, m), |m| thm6(F, m)),
        entry!("THM6-L", "Σ_{k≥2} (ζ(k)−1)L(k+m−1)/k", "Theorem 6, Lucas", Main, DM,
            |m| zeta(AllZetaOverK, L, m), |m| thm6(L, m)),
        // printed special cases
        entry!("THM1-F-PRINTED", "Printed m=0, m=1 cases of Theorem 1 (F)", "Examples after Theorem 1", Printed,
            Fixed(M01), |m| zeta(EvenZeta, F, m), printed_thm1_f),
        entry!("THM1-L-PRINTED", "Printed m=0, m=1 cases of Theorem 1 (L)", "Examples after Theorem 1", Printed,
            Fixed(M01), |m| zeta(EvenZeta, L, m), printed_thm1_l),
        entry!("THM2-F-PRINTED", "Printed m=0 case of Theorem 2 (F)", "Cases after Theorem 2", Printed,
            Fixed(M0), |m| zeta(OddZeta, F, m), printed_thm2_f),
        entry!("THM2-L-PRINTED", "Printed m=0 case of Theorem 2 (L)", "Cases after Theorem 2", Printed,
            Fixed(M0), |m| zeta(OddZeta, L, m), printed_thm2_l),
        entry!("THM2-SCALED-PRINTED", "Σ ζ(2k+1)F(2k)/5^k = Σ (ζ(2k+1)−1)F(2k) = 1/2", "Remark after Theorem 2",
            Printed, ParamDomain::None, |_| zeta(ScaledOdd5, F, 0), printed_thm2_f),
        entry!("THM3-F-PRINTED", "Printed m=0 case of Theorem 3 (F)", "Case after Theorem 3", Printed,
            Fixed(M0), |m| zeta(AllZeta, F, m), printed_thm3_f),
        entry!("THM4-F-PRINTED", "Printed m=0, m=1 cases of Theorem 4 (F)", "Cases after Theorem 4", Printed,
            Fixed(M01), |m| zeta(EvenZetaOverK, F, m), printed_thm4_f),
        entry!("THM4-L-PRINTED", "Printed m=0, m=1 cases of Theorem 4 (L)", "Cases after Theorem 4", Printed,
            Fixed(M01), |m| zeta(EvenZetaOverK, L, m), printed_thm4_l),
        entry!("THM5-F-PRINTED", "Printed m=0, m=1 cases of Theorem 5 (F)", "Cases after Theorem 5", Printed,
            Fixed(M01), |m| zeta(OddZetaOver2k1, F, m), printed_thm5_f),
        entry!("THM5-L-PRINTED", "Printed m=0, m=1 cases of Theorem 5 (L)", "Cases after Theorem 5", Printed,
            Fixed(M01), |m| zeta(OddZetaOver2k1, L, m), printed_thm5_l),
        entry!("THM6-F-PRINTED", "Printed m=1 case of Theorem 6 (F)", "Cases after Theorem 6", Printed,
            Fixed(M1), |m| zeta(AllZetaOverK, F, m), printed_thm6_f),
        entry!("THM6-L-PRINTED", "Printed m=1 case of Theorem 6 (L)", "Cases after Theorem 6", Printed,
            Fixed(M1), |m| zeta(AllZetaOverK, L, m), printed_thm6_l),
    ];
    v.sort_by(|a, b| a.id.cmp(b.id));
    v
}

/// All entries, sorted by id.
pub fn catalog_list() -> &'static [IdentityRecord] {
    static CATALOG: OnceLock<Vec<IdentityRecord>> = OnceLock::new();
    CATALOG.get_or_init(build)
}

pub fn lookup(id: &str) -> Result<&'static IdentityRecord> {
    catalog_list()
        .iter()
        .find(|r| r.id == id)
        .ok_or_else(|| Error::UnknownId(id.to_string()))
}

pub fn instantiate(id: &str, param: Param) -> Result<(Lhs, Expr)> {
    lookup(id)?.instantiate(param)
}
