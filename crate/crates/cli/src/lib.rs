//! `zetafib` command line.
//!
//! Exit codes: 0 when every selected check passed (PRINTED discrepancies
//! allowed), 1 when a MAIN check failed, 2 on usage or domain errors.

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use zetafib::catalog::{catalog_list, lookup, Lhs, Param, ParamDomain, Variant};
use zetafib::closed_form::expr_render;
use zetafib::real::to_significant;
use zetafib::series::partial_sum_oracle;
use zetafib::special::{digamma, zeta_value};
use zetafib::verifier::{default_workers, pass_threshold, verify, verify_all, VerificationReport};
use zetafib::{BigReal, Error, PrecisionPolicy};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "zetafib", version, about = "Verify zeta / Fibonacci / Lucas series identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct PrecisionArgs {
    /// Target significant digits D.
    #[arg(long, default_value_t = 50)]
    digits: u32,
    /// Guard digits G.
    #[arg(long, default_value_t = 30)]
    guard: u32,
    /// Term budget per series.
    #[arg(long, default_value_t = 100_000)]
    max_terms: usize,
}

impl PrecisionArgs {
    fn policy(&self) -> Result<PrecisionPolicy, Error> {
        PrecisionPolicy::new(self.digits, self.guard, self.max_terms)
    }
}

#[derive(Args, Debug, Clone)]
struct ParamArgs {
    /// Parameter m.
    #[arg(long, conflicts_with = "n", allow_negative_numbers = true)]
    m: Option<i64>,
    /// Parameter n (corollary entries).
    #[arg(long, allow_negative_numbers = true)]
    n: Option<i64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the catalog.
    List {
        #[arg(long)]
        json: bool,
    },
    /// Verify one identity.
    Verify {
        id: String,
        #[command(flatten)]
        param: ParamArgs,
        #[command(flatten)]
        precision: PrecisionArgs,
        /// Also print the literal partial sum of the first N terms of the left side.
        #[arg(long, value_name = "N")]
        oracle: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Verify every selected identity over parameter ranges.
    VerifyAll {
        /// Glob over ids; without "PRINTED" in it only MAIN entries match.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, default_value = "0..10", value_parser = parse_range)]
        m_range: RangeInclusive<i64>,
        #[arg(long, default_value = "1..10", value_parser = parse_range)]
        n_range: RangeInclusive<i64>,
        #[command(flatten)]
        precision: PrecisionArgs,
        /// Worker threads (default: ZETAFIB_WORKERS or available parallelism).
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// ζ(s) at an integer s ≥ 2.
    Zeta {
        s: u32,
        #[command(flatten)]
        precision: PrecisionArgs,
        #[arg(long)]
        json: bool,
    },
    /// ψ(x) at a decimal x.
    Digamma {
        #[arg(allow_negative_numbers = true)]
        x: String,
        #[command(flatten)]
        precision: PrecisionArgs,
        #[arg(long)]
        json: bool,
    },
    /// Literal partial sum of the first N terms of an identity's left side.
    Sum {
        id: String,
        #[arg(long)]
        terms: u64,
        #[command(flatten)]
        param: ParamArgs,
        #[command(flatten)]
        precision: PrecisionArgs,
        #[arg(long)]
        json: bool,
    },
}

/// Inclusive `A..B` (or `A..=B`).
fn parse_range(text: &str) -> Result<RangeInclusive<i64>, String> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| format!("expected A..B, got {text:?}"))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: i64 = a.trim().parse().map_err(|e| format!("bad range start {a:?}: {e}"))?;
    let b: i64 = b.trim().parse().map_err(|e| format!("bad range end {b:?}: {e}"))?;
    if a > b {
        return Err(format!("empty range {text:?}"));
    }
    Ok(a..=b)
}

/// Status word for a report.
pub fn status(r: &VerificationReport) -> &'static str {
    match (r.pass, r.error.is_some(), r.variant) {
        (true, _, _) => "PASS",
        (false, true, _) => "ERROR",
        (false, false, Variant::Printed) => "DISCREPANCY",
        (false, false, Variant::Main) => "FAIL",
    }
}

/// Exit code for a set of reports.
pub fn exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().any(|r| !r.pass && r.variant == Variant::Main) {
        EXIT_FAILED
    } else {
        EXIT_OK
    }
}

fn resolve_param(id: &str, args: &ParamArgs) -> Result<Param, Error> {
    let record = lookup(id)?;
    Ok(match (args.m, args.n) {
        (Some(m), _) => Param::M(m),
        (None, Some(n)) => Param::N(n),
        (None, None) => match record.domain {
            ParamDomain::None => Param::None,
            ParamDomain::Fixed([m]) => Param::M(*m),
            d => {
                return Err(Error::ParamOutOfDomain {
                    id: id.to_string(),
                    param: "missing".into(),
                    domain: d.describe(),
                })
            }
        },
    })
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn fail(&mut self, e: impl std::fmt::Display) -> i32 {
        let _ = writeln!(self.err, "error: {e}");
        EXIT_USAGE
    }
}

/// Parses `argv` and runs the command, writing results to `out` and
/// diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let mut io = Io { out, err };
    match execute(cli.command, &mut io) {
        Ok(code) => code,
        Err(e) => io.fail(e),
    }
}

fn execute(cmd: Command, io: &mut Io<'_>) -> Result<i32, Error> {
    match cmd {
        Command::List { json } => list(io, json),
        Command::Verify {
            id,
            param,
            precision,
            oracle,
            json,
        } => {
            let policy = precision.policy()?;
            let param = resolve_param(&id, &param)?;
            let report = verify(&id, param, &policy)?;
            if json {
                let _ = writeln!(io.out, "{}", serde_json::to_string(&report).expect("report serializes"));
            } else {
                print_report(io, &report, &policy);
            }
            if let Some(n) = oracle {
                let (lhs, _) = lookup(&id)?.instantiate(param)?;
                let v = match &lhs {
                    Lhs::Zeta(s) => partial_sum_oracle(s, n, &policy),
                    Lhs::Rational(r) => partial_sum_oracle(r.as_ref(), n, &policy),
                };
                let text = to_significant(&v, policy.target_digits() as usize);
                if json {
                    let _ = writeln!(io.out, "{}", json!({ "identity_id": id, "oracle_terms": n, "oracle": text }));
                } else {
                    let _ = writeln!(io.out, "  oracle   {text}  (first {n} terms)");
                }
            }
            Ok(exit_code(std::slice::from_ref(&report)))
        }
        Command::VerifyAll {
            filter,
            m_range,
            n_range,
            precision,
            workers,
            json,
        } => {
            let policy = precision.policy()?;
            let workers = workers.filter(|w| *w > 0).unwrap_or_else(default_workers);
            let reports = verify_all(filter.as_deref(), m_range, n_range, &policy, workers)?;
            for r in &reports {
                if json {
                    let _ = writeln!(io.out, "{}", serde_json::to_string(r).expect("report serializes"));
                } else {
                    print_row(io, r);
                }
            }
            if !json {
                print_summary(io, &reports);
            }
            Ok(exit_code(&reports))
        }
        Command::Zeta { s, precision, json } => {
            let policy = precision.policy()?;
            let z = zeta_value(s, &policy)?;
            let text = to_significant(&z.value, policy.target_digits() as usize);
            if json {
                let _ = writeln!(io.out, "{}", json!({ "s": s, "digits": policy.target_digits(), "value": text }));
            } else {
                let _ = writeln!(io.out, "{text}");
            }
            Ok(EXIT_OK)
        }
        Command::Digamma { x, precision, json } => {
            let policy = precision.policy()?;
            let arg = BigReal::parse(&x, policy.working_bits())?;
            let v = digamma(&arg, &policy)?;
            let text = to_significant(&v, policy.target_digits() as usize);
            if json {
                let _ = writeln!(io.out, "{}", json!({ "x": x, "digits": policy.target_digits(), "value": text }));
            } else {
                let _ = writeln!(io.out, "{text}");
            }
            Ok(EXIT_OK)
        }
        Command::Sum {
            id,
            terms,
            param,
            precision,
            json,
        } => {
            let policy = precision.policy()?;
            if terms == 0 {
                return Err(Error::InvalidPolicy("--terms must be at least 1".into()));
            }
            let p = resolve_param(&id, &param)?;
            let (lhs, _) = lookup(&id)?.instantiate(p)?;
            let v = match &lhs {
                Lhs::Zeta(s) => partial_sum_oracle(s, terms, &policy),
                Lhs::Rational(r) => partial_sum_oracle(r.as_ref(), terms, &policy),
            };
            let text = to_significant(&v, policy.target_digits() as usize);
            if json {
                let _ = writeln!(
                    io.out,
                    "{}",
                    json!({ "identity_id": id, "params": p, "terms": terms, "digits": policy.target_digits(), "value": text })
                );
            } else {
                let _ = writeln!(io.out, "{text}");
            }
            Ok(EXIT_OK)
        }
    }
}

fn list(io: &mut Io<'_>, json: bool) -> Result<i32, Error> {
    for r in catalog_list() {
        let sample = match r.domain {
            ParamDomain::None => Param::None,
            ParamDomain::N => Param::N(1),
            ParamDomain::M => Param::M(0),
            ParamDomain::Fixed(ms) => Param::M(ms[0]),
        };
        let (lhs, rhs) = r.instantiate(sample)?;
        if json {
            let line = json!({
                "identity_id": r.id,
                "variant": r.variant,
                "title": r.title,
                "anchor": r.anchor,
                "params": r.domain.describe(),
                "example_params": sample,
                "example_lhs": lhs.to_string(),
                "example_rhs": expr_render(&rhs),
            });
            let _ = writeln!(io.out, "{line}");
        } else {
            let _ = writeln!(io.out, "{:<20} {:<8} {:<14} {}", r.id, r.variant, r.domain.describe(), r.anchor);
            let _ = writeln!(io.out, "    {}", r.title);
            let tag = if sample == Param::None { String::new() } else { format!(" [{sample}]") };
            let _ = writeln!(io.out, "    {lhs}{tag}");
            let _ = writeln!(io.out, "      = {}", expr_render(&rhs));
        }
    }
    Ok(EXIT_OK)
}

fn print_report(io: &mut Io<'_>, r: &VerificationReport, policy: &PrecisionPolicy) {
    let tag = if r.params == Param::None { String::new() } else { format!(" {}", r.params) };
    let _ = writeln!(io.out, "{} ({}){}", r.identity_id, r.variant, tag);
    let _ = writeln!(io.out, "  lhs      {}", r.lhs);
    let _ = writeln!(io.out, "  rhs      {}", r.rhs);
    let threshold = zetafib::real::to_scientific(&pass_threshold(policy.target_digits()), 1);
    let _ = writeln!(io.out, "  abs_diff {}  (threshold {threshold})", r.abs_diff);
    let _ = writeln!(io.out, "  terms    {}  tail bound {}", r.terms_used, r.tail_bound);
    let refined = if r.refined { ", re-evaluated at D+20" } else { "" };
    let _ = writeln!(io.out, "  {}  ({} ms{refined})", status(r), r.elapsed_ms);
}

fn print_row(io: &mut Io<'_>, r: &VerificationReport) {
    let detail = match &r.error {
        Some(e) => e.clone(),
        None => format!("diff {:<12} terms {:<5} lhs {}", r.abs_diff, r.terms_used, short(&r.lhs)),
    };
    let _ = writeln!(
        io.out,
        "{:<11} {:<20} {:<5} {detail}  ({} ms)",
        status(r),
        r.identity_id,
        r.params.to_string(),
        r.elapsed_ms
    );
}

fn short(s: &str) -> &str {
    let end = s.char_indices().nth(24).map_or(s.len(), |(i, _)| i);
    &s[..end]
}

fn print_summary(io: &mut Io<'_>, reports: &[VerificationReport]) {
    let count = |word: &str| reports.iter().filter(|r| status(r) == word).count();
    let _ = writeln!(
        io.out,
        "{} checks: {} passed, {} failed, {} discrepancies, {} errors",
        reports.len(),
        count("PASS"),
        count("FAIL"),
        count("DISCREPANCY"),
        count("ERROR")
    );
}
