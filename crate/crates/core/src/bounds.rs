//! Information-theoretic query lower bounds.
//!
//! A query has at most six answer forms (`=, !=, <, >, <=, >=`), so `m`
//! queries distinguish at most `6^m` answer sequences. These are worst-case
//! statements about any decider, not floors for individual instances.

use num_bigint::BigUint;
use serde::Serialize;

/// `sum_{k=2..n} ln k`.
fn ln_factorial(n: u64) -> f64 {
    (2..=n).map(|k| (k as f64).ln()).sum()
}

fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::from(1u32), |acc, k| acc * k)
}

/// Smallest `m` with `6^m >= value`, and whether equality holds.
fn ceil_log6(value: &BigUint) -> (u64, bool) {
    let six = BigUint::from(6u32);
    let mut power = BigUint::from(1u32);
    let mut m = 0;
    while &power < value {
        power *= &six;
        m += 1;
    }
    (m, &power == value)
}

/// Largest `n` for which the exact big-integer route is taken.
pub const EXACT_LIMIT: u64 = 64;

/// `log_6(n!)`: the query bound for deciding coverage of a base interval by
/// `n` subintervals. Exact when `n!` is a power of six (`n <= 1`, `n = 3`).
pub fn lb_union(n: u64) -> f64 {
    if n <= EXACT_LIMIT {
        let (m, exact) = ceil_log6(&factorial(n));
        if exact {
            return m as f64;
        }
    }
    ln_factorial(n) / 6f64.ln()
}

/// `ceil(log_6(n!))` computed with big integers.
pub fn lb_union_ceil_exact(n: u64) -> u64 {
    ceil_log6(&factorial(n)).0
}

/// `2 log_6(floor(n/2)! / 2)`, clamped at zero: the query bound for the
/// piercing problem with `n` pairs of intervals.
pub fn lb_piercing(n: u64) -> f64 {
    let half = n / 2;
    let value = 2.0 * (ln_factorial(half) - 2f64.ln()) / 6f64.ln();
    value.max(0.0)
}

/// Bound for deciding whether `n` numbers are pairwise distinct. Same value
/// as [`lb_union`].
pub fn lb_equality(n: u64) -> f64 {
    lb_union(n)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: u64,
    pub lb_union: f64,
    pub lb_union_ceil: u64,
    pub lb_piercing: f64,
    pub basis: &'static str,
}

pub fn bound_report(n: u64) -> BoundReport {
    BoundReport {
        n,
        lb_union: lb_union(n),
        lb_union_ceil: lb_union_ceil_exact(n),
        lb_piercing: lb_piercing(n),
        basis: "base 6: each comparison query has at most 6 answer forms",
    }
}
