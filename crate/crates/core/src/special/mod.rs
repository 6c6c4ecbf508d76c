//! ζ(s) − 1 at integers s ≥ 2, digamma ψ, log-gamma ln Γ and Euler's γ.

mod gamma;
mod zeta;

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

pub use gamma::{digamma, euler_gamma, log_gamma, shift_threshold};
pub use zeta::{zeta_even_exact, zeta_minus_one, zeta_minus_one_bound, zeta_value, ZetaValue};

use crate::exact::bernoulli_table;
use crate::BigReal;

type FloatTable = Arc<Vec<BigReal>>;

/// B₀, B₂, B₄, … as reals at `bits`; index j holds B_{2j}. Shared across threads.
pub(crate) fn even_bernoulli(count: usize, bits: u32) -> FloatTable {
    static CACHE: OnceLock<RwLock<HashMap<u32, FloatTable>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.read().expect("bernoulli cache poisoned").get(&bits) {
        if t.len() >= count {
            return Arc::clone(t);
        }
    }
    // grow geometrically so repeated requests do not rebuild the table
    let want = count.max(32).next_power_of_two();
    let exact = bernoulli_table(2 * want);
    let table: Vec<BigReal> = (0..want)
        .map(|j| BigReal::from_rational(&exact[2 * j], bits))
        .collect();
    let table = Arc::new(table);
    cache
        .write()
        .expect("bernoulli cache poisoned")
        .insert(bits, Arc::clone(&table));
    table
}
