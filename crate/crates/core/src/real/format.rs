use rug::float::Round;

use super::BigReal;

/// (negative, digit string of length `digits`, decimal point position);
/// value = ±0.d₁d₂… × 10^point, rounded to nearest.
fn digits_of(x: &BigReal, digits: usize) -> (bool, String, i64) {
    let digits = digits.max(1);
    let (neg, s, exp) = x
        .as_float()
        .to_sign_string_exp_round(10, Some(digits), Round::Nearest);
    match exp {
        Some(e) => {
            let mut s = s;
            s.truncate(digits);
            while s.len() < digits {
                s.push('0');
            }
            (neg, s, i64::from(e))
        }
        // zero (or non-finite, which the engine never produces)
        None => (false, "0".repeat(digits), 1),
    }
}

/// Positional rendering with exactly `digits` significant digits,
/// e.g. `0.50000` or `-123.46`.
pub fn to_significant(x: &BigReal, digits: usize) -> String {
    let (neg, ds, point) = digits_of(x, digits);
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    let n = ds.len() as i64;
    if point <= 0 {
        out.push_str("0.");
        out.extend(std::iter::repeat('0').take((-point) as usize));
        out.push_str(&ds);
    } else if point >= n {
        out.push_str(&ds);
        out.extend(std::iter::repeat('0').take((point - n) as usize));
    } else {
        out.push_str(&ds[..point as usize]);
        out.push('.');
        out.push_str(&ds[point as usize..]);
    }
    out
}

/// Scientific rendering `-?d.ddd…dEe` with `digits` significant digits.
pub fn to_scientific(x: &BigReal, digits: usize) -> String {
    if x.is_zero() {
        let tail = "0".repeat(digits.max(1) - 1);
        return if tail.is_empty() { "0E0".into() } else { format!("0.{tail}E0") };
    }
    let (neg, ds, point) = digits_of(x, digits);
    let sign = if neg { "-" } else { "" };
    let (head, tail) = ds.split_at(1);
    if tail.is_empty() {
        format!("{sign}{head}E{}", point - 1)
    } else {
        format!("{sign}{head}.{tail}E{}", point - 1)
    }
}
