//! Length bounds for words with few flexed palindromes.
//!
//! The closed forms use the exponent `log2 m`, which is irrational unless `m`
//! is a power of two. Exact values here use `ceil(log2 m)` instead, which can
//! only increase the bound; the `*_log10` fields of [`BoundReport`] use the
//! real exponent where noted.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};

/// Default cap on the decimal digits of an exact bound.
pub const DEFAULT_DIGIT_CAP: u64 = 100_000;

fn ceil_log2(n: u64) -> u32 {
    debug_assert!(n >= 1);
    u64::BITS - (n - 1).leading_zeros()
}

/// `(q+1)·n·(4q¹⁰n)^⌈log2 n⌉`: bound on the number of palindromic factors of
/// length `n` in a rich word over `q` letters.
pub fn pal_complexity_bound(n: u64, q: u64) -> BigUint {
    assert!(n >= 1 && q >= 1, "n and q must be positive");
    let base = BigUint::from(4u32) * BigUint::from(q).pow(10) * n;
    BigUint::from(q + 1) * n * base.pow(ceil_log2(n))
}

/// `k(m) = (q+1)·m²·(4q¹⁰m)^⌈log2 m⌉`: bound on the number of flexed
/// palindromes of a rich word whose flexed palindromes all have length at
/// most `m`.
pub fn bound_k(m: u64, q: u64) -> BigUint {
    assert!(m >= 1 && q >= 1, "m and q must be positive");
    let base = BigUint::from(4u32) * BigUint::from(q).pow(10) * m;
    BigUint::from(q + 1) * m * m * base.pow(ceil_log2(m))
}

/// `log10 k(m)` with the real exponent `log2 m`.
pub fn bound_k_log10(m: u64, q: u64) -> f64 {
    let (m, q) = (m as f64, q as f64);
    (q + 1.0).log10() + 2.0 * m.log10() + m.log2() * (4.0 * q.powi(10) * m).log10()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub m: u64,
    pub q: u64,
    /// Exact `k(m)` with exponent `⌈log2 m⌉`.
    #[serde(serialize_with = "as_decimal")]
    pub k: BigUint,
    /// `log10 k(m)` with the real exponent.
    pub k_log10: f64,
    /// `m·2^(k+1)`: longest word with a reverse-unioccurrent prefix of length
    /// at most `m` and at most `k` further flexed palindromes. `None` past
    /// the digit cap.
    #[serde(serialize_with = "as_optional_decimal")]
    pub prefix_bound: Option<BigUint>,
    pub prefix_bound_log10: f64,
    /// `m·2^(k+2)`: length within which a common rich superword exists.
    #[serde(serialize_with = "as_optional_decimal")]
    pub total: Option<BigUint>,
    /// `log10(m) + (k+2)·log10 2` with the exact `k`.
    pub total_log10: f64,
}

fn as_decimal<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn as_optional_decimal<S: serde::Serializer>(
    v: &Option<BigUint>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.collect_str(v),
        None => s.serialize_none(),
    }
}

fn digits(log10: f64) -> u64 {
    if log10.is_finite() {
        (log10.floor() as u64).saturating_add(1)
    } else {
        u64::MAX
    }
}

/// `m·2^e`, or `None` if it would exceed `digit_cap` decimal digits.
fn scaled_power(m: u64, exponent: &BigUint, log10: f64, digit_cap: u64) -> Option<BigUint> {
    if digits(log10) > digit_cap {
        return None;
    }
    let e = exponent.to_u64()?;
    Some(BigUint::from(m) << e)
}

/// Every bound for `(m, q)`; exact values beyond `digit_cap` digits are
/// left out.
pub fn bound_report(m: u64, q: u64, digit_cap: u64) -> BoundReport {
    let k = bound_k(m, q);
    let k_f = k.to_f64().unwrap_or(f64::INFINITY);
    let log2 = 2f64.log10();
    let prefix_bound_log10 = (m as f64).log10() + (k_f + 1.0) * log2;
    let total_log10 = (m as f64).log10() + (k_f + 2.0) * log2;
    BoundReport {
        m,
        q,
        k_log10: bound_k_log10(m, q),
        prefix_bound: scaled_power(m, &(&k + 1u32), prefix_bound_log10, digit_cap),
        prefix_bound_log10,
        total: scaled_power(m, &(&k + 2u32), total_log10, digit_cap),
        total_log10,
        k,
    }
}

/// `m·2^(k(m)+2)`; fails with [`Error::DigitCap`] (carrying the digit count)
/// when the exact value has more than `digit_cap` digits.
pub fn bound_total(m: u64, q: u64, digit_cap: u64) -> Result<BoundReport> {
    let report = bound_report(m, q, digit_cap);
    if report.total.is_none() {
        return Err(Error::DigitCap {
            digits: digits(report.total_log10),
            cap: digit_cap,
        });
    }
    Ok(report)
}

impl BoundReport {
    pub fn total_or_estimate(&self) -> String {
        match &self.total {
            Some(t) => t.to_string(),
            None => format!("≈10^{:.3}", self.total_log10),
        }
    }
}
