use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Rational, Result};

fn table() -> &'static RwLock<Vec<Rational>> {
    static TABLE: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![Rational::one()]))
}

/// Exact Bernoulli number B_n with B₁ = −1/2.
///
/// Rejects odd n > 1 (they vanish). Backed by a shared memo table that is
/// extended on demand.
pub fn bernoulli(n: usize) -> Result<Rational> {
    if n > 1 && n % 2 == 1 {
        return Err(Error::OddBernoulli(n));
    }
    if let Some(b) = table().read().expect("bernoulli table poisoned").get(n) {
        return Ok(b.clone());
    }
    let mut t = table().write().expect("bernoulli table poisoned");
    extend(&mut t, n);
    Ok(t[n].clone())
}

/// B_0, …, B_n (odd entries above 1 are zero).
pub fn bernoulli_table(n: usize) -> Vec<Rational> {
    {
        let t = table().read().expect("bernoulli table poisoned");
        if t.len() > n {
            return t[..=n].to_vec();
        }
    }
    let mut t = table().write().expect("bernoulli table poisoned");
    extend(&mut t, n);
    t[..=n].to_vec()
}

/// Σ_{k=0}^{j} C(j+1, k) B_k = 0, solved for B_j.
fn extend(t: &mut Vec<Rational>, n: usize) {
    while t.len() <= n {
        let j = t.len();
        if j > 1 && j % 2 == 1 {
            t.push(Rational::zero());
            continue;
        }
        let mut binom = BigInt::one(); // C(j+1, 0)
        let mut acc = Rational::zero();
        for (k, b) in t.iter().enumerate() {
            if !b.is_zero() {
                acc += b * Rational::from_integer(binom.clone());
            }
            binom = binom * BigInt::from(j + 1 - k) / BigInt::from(k + 1);
        }
        t.push(-acc / Rational::from_integer(BigInt::from(j + 1)));
    }
}
