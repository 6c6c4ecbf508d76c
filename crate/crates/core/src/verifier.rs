//! Evaluates both sides of catalog identities and reports the comparison.

use std::ops::RangeInclusive;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{catalog_list, lookup, IdentityRecord, Lhs, Param, Variant};
use crate::closed_form::eval_expr;
use crate::real::{to_scientific, to_significant};
use crate::series::{sum_rational_series, sum_zeta_fib};
use crate::{BigReal, Error, PrecisionPolicy, Result, Side};

/// Outcome of one check. Numbers are decimal strings.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub identity_id: String,
    pub variant: Variant,
    pub params: Param,
    pub digits: u32,
    pub lhs: String,
    pub rhs: String,
    pub abs_diff: String,
    pub pass: bool,
    pub terms_used: u64,
    pub tail_bound: String,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Set when the borderline protocol re-evaluated at D+20.
    #[serde(skip)]
    pub refined: bool,
}

impl VerificationReport {
    /// Equal ignoring elapsed time.
    pub fn same_outcome(&self, other: &VerificationReport) -> bool {
        let mut a = self.clone();
        a.elapsed_ms = other.elapsed_ms;
        a == *other
    }
}

const DIFF_DIGITS: usize = 6;
const BOUND_DIGITS: usize = 3;
const REFINE_DIGITS: u32 = 20;

/// 10^−(D−5)
pub fn pass_threshold(digits: u32) -> BigReal {
    BigReal::pow10(5 - i64::from(digits), 64)
}

struct Sides {
    lhs: BigReal,
    rhs: BigReal,
    terms_used: u64,
    tail_bound: BigReal,
}

fn evaluate(id: &str, lhs: &Lhs, rhs: &crate::closed_form::Expr, policy: &PrecisionPolicy) -> Result<Sides> {
    let wrap = |side: Side| {
        move |e: Error| Error::Evaluation {
            id: id.to_string(),
            side,
            source: Box::new(e),
        }
    };
    let (l, terms_used, tail_bound) = match lhs {
        Lhs::Zeta(spec) => {
            let r = sum_zeta_fib(spec, policy).map_err(wrap(Side::Lhs))?;
            (r.value, r.terms_used, r.tail_bound)
        }
        Lhs::Rational(spec) => {
            let v = sum_rational_series(spec, policy).map_err(wrap(Side::Lhs))?;
            (v, 0, BigReal::zero(64))
        }
    };
    let r = eval_expr(rhs, policy).map_err(wrap(Side::Rhs))?;
    Ok(Sides {
        lhs: l,
        rhs: r,
        terms_used,
        tail_bound,
    })
}

/// Checks one instantiation. Both sides run at D+G; if the difference is
/// within a factor 100 of the pass threshold the check is repeated at D+20.
pub fn verify(id: &str, param: Param, policy: &PrecisionPolicy) -> Result<VerificationReport> {
    verify_record(lookup(id)?, param, policy)
}

fn verify_record(record: &IdentityRecord, param: Param, policy: &PrecisionPolicy) -> Result<VerificationReport> {
    let start = Instant::now();
    let (lhs, rhs) = record.instantiate(param)?;
    let digits = policy.target_digits();
    let threshold = pass_threshold(digits);
    let mut sides = evaluate(record.id, &lhs, &rhs, policy)?;
    let mut diff = (&sides.lhs - &sides.rhs).abs();
    let mut refined = false;
    let low = &threshold / 100;
    let high = &threshold * 100;
    if diff >= low && diff <= high {
        sides = evaluate(record.id, &lhs, &rhs, &policy.with_extra_digits(REFINE_DIGITS))?;
        diff = (&sides.lhs - &sides.rhs).abs();
        refined = true;
    }
    Ok(VerificationReport {
        identity_id: record.id.to_string(),
        variant: record.variant,
        params: param,
        digits,
        lhs: to_significant(&sides.lhs, digits as usize),
        rhs: to_significant(&sides.rhs, digits as usize),
        abs_diff: to_scientific(&diff, DIFF_DIGITS),
        pass: diff <= threshold,
        terms_used: sides.terms_used,
        tail_bound: to_scientific(&sides.tail_bound, BOUND_DIGITS),
        elapsed_ms: start.elapsed().as_millis() as u64,
        error: None,
        refined,
    })
}

fn failed_report(record: &IdentityRecord, param: Param, policy: &PrecisionPolicy, err: Error, ms: u64) -> VerificationReport {
    VerificationReport {
        identity_id: record.id.to_string(),
        variant: record.variant,
        params: param,
        digits: policy.target_digits(),
        lhs: String::new(),
        rhs: String::new(),
        abs_diff: String::new(),
        pass: false,
        terms_used: 0,
        tail_bound: String::new(),
        elapsed_ms: ms,
        error: Some(err.to_string()),
        refined: false,
    }
}

/// Entry selection for a sweep. A pattern that does not mention `PRINTED`
/// selects MAIN entries only; no pattern selects everything.
pub struct Selection {
    pattern: Option<glob::Pattern>,
    include_printed: bool,
}

impl Selection {
    pub fn new(filter: Option<&str>) -> Result<Self> {
        match filter {
            None => Ok(Selection {
                pattern: None,
                include_printed: true,
            }),
            Some(f) => {
                let pattern = glob::Pattern::new(f)
                    .map_err(|e| Error::domain("filter", format!("invalid pattern {f:?}: {e}")))?;
                Ok(Selection {
                    pattern: Some(pattern),
                    include_printed: f.contains("PRINTED"),
                })
            }
        }
    }

    pub fn matches(&self, record: &IdentityRecord) -> bool {
        if record.variant == Variant::Printed && !self.include_printed {
            return false;
        }
        self.pattern.as_ref().is_none_or(|p| p.matches(record.id))
    }
}

/// Worker count: `ZETAFIB_WORKERS` if set and positive, else the available
/// parallelism.
pub fn default_workers() -> usize {
    std::env::var("ZETAFIB_WORKERS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&w| w > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// (record, param) pairs a sweep would check, sorted by id then parameter.
pub fn plan(
    filter: Option<&str>,
    m_range: &RangeInclusive<i64>,
    n_range: &RangeInclusive<i64>,
) -> Result<Vec<(&'static IdentityRecord, Param)>> {
    let sel = Selection::new(filter)?;
    let mut jobs: Vec<_> = catalog_list()
        .iter()
        .filter(|r| sel.matches(r))
        .flat_map(|r| r.sweep_params(m_range, n_range).into_iter().map(move |p| (r, p)))
        .collect();
    jobs.sort_by(|a, b| a.0.id.cmp(b.0.id).then(a.1.cmp(&b.1)));
    Ok(jobs)
}

/// Runs every selected check on `workers` threads (0 means
/// [`default_workers`]). Failures, including evaluation errors, are recorded
/// in the reports; the sweep never aborts.
pub fn verify_all(
    filter: Option<&str>,
    m_range: RangeInclusive<i64>,
    n_range: RangeInclusive<i64>,
    policy: &PrecisionPolicy,
    workers: usize,
) -> Result<Vec<VerificationReport>> {
    let jobs = plan(filter, &m_range, &n_range)?;
    let workers = if workers == 0 { default_workers() } else { workers };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidPolicy(format!("cannot start {workers} workers: {e}")))?;
    let run = |(record, param): &(&IdentityRecord, Param)| {
        let start = Instant::now();
        verify_record(record, *param, policy).unwrap_or_else(|e| {
            failed_report(record, *param, policy, e, start.elapsed().as_millis() as u64)
        })
    };
    Ok(pool.install(|| jobs.par_iter().map(run).collect()))
}
