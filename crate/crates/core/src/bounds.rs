//! Closed-form error quantities and the finite recurrences behind them.
//!
//! Two closed forms: the worst-case expected-error bound `εn` and the
//! average-case value `εn(0.5 + ε)/(1 + ε)`. Two recurrences, both restricted
//! to power-of-two sizes because they halve exactly:
//!
//! - `a(1) = 0,  a(n) = a(n/2) + ε·n/2` — telescopes to `ε(n − 1)`; its
//!   infinite-horizon limit is the `εn` bound.
//! - `b(1) = 0,  b(n) = ε·(n/4 + ε·n/2) + (1 − ε)·b(n/2)` — a geometric
//!   series whose closed form is `εn(0.5 + ε)/(1 + ε)`; the finite unroll is
//!   that value times the truncation factor `1 − ((1−ε)/2)^log₂n`.
//!
//! Base cases are pinned at 0: a single-slot table admits no error.

use crate::error::{Error, Result};

/// Worst-case expected index error bound `ε·n`.
pub fn lemma1_bound(n: u64, epsilon: f64) -> f64 {
    debug_assert!(n >= 1 && (0.0..=1.0).contains(&epsilon));
    epsilon * n as f64
}

/// Average expected index error `ε·n·(0.5 + ε)/(1 + ε)`.
pub fn lemma2_value(n: u64, epsilon: f64) -> f64 {
    debug_assert!(n >= 1 && (0.0..=1.0).contains(&epsilon));
    epsilon * n as f64 * (0.5 + epsilon) / (1.0 + epsilon)
}

fn validated_log2(n: u64, epsilon: f64) -> Result<u32> {
    if n == 0 {
        return Err(Error::ZeroTableSize);
    }
    if !(0.0..=1.0).contains(&epsilon) {
        return Err(Error::EpsilonOutOfRange(epsilon));
    }
    if !n.is_power_of_two() {
        return Err(Error::NotPowerOfTwo { n });
    }
    Ok(n.trailing_zeros())
}

/// Finite unroll of `a(1) = 0, a(n) = a(n/2) + ε·n/2`, evaluated bottom-up in
/// `log₂ n` steps. Equals `ε(n − 1)` in closed form. Power-of-two `n` only.
pub fn a_recurrence(n: u64, epsilon: f64) -> Result<f64> {
    let levels = validated_log2(n, epsilon)?;
    let mut acc = 0.0;
    for k in 1..=levels {
        // Contribution ε·m/2 of the size-m = 2^k level.
        acc += epsilon * (1u64 << (k - 1)) as f64;
    }
    Ok(acc)
}

/// Finite unroll of `b(1) = 0, b(n) = ε·(n/4 + ε·n/2) + (1 − ε)·b(n/2)`,
/// evaluated bottom-up in `log₂ n` steps. Power-of-two `n` only.
pub fn b_recurrence(n: u64, epsilon: f64) -> Result<f64> {
    let levels = validated_log2(n, epsilon)?;
    let mut acc = 0.0;
    for k in 1..=levels {
        let m = (1u64 << k) as f64;
        acc = epsilon * (m / 4.0 + epsilon * m / 2.0) + (1.0 - epsilon) * acc;
    }
    Ok(acc)
}

/// The two closed forms and, for power-of-two sizes, the two recurrences,
/// evaluated side by side.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub n: u64,
    pub epsilon: f64,
    pub lemma1: f64,
    pub lemma2: f64,
    /// `None` when `n` is not a power of two.
    pub a_rec: Option<f64>,
    /// `None` when `n` is not a power of two.
    pub b_rec: Option<f64>,
}

impl BoundReport {
    pub fn evaluate(n: u64, epsilon: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroTableSize);
        }
        if !(0.0..=1.0).contains(&epsilon) {
            return Err(Error::EpsilonOutOfRange(epsilon));
        }
        let (a_rec, b_rec) = if n.is_power_of_two() {
            (
                Some(a_recurrence(n, epsilon)?),
                Some(b_recurrence(n, epsilon)?),
            )
        } else {
            (None, None)
        };
        Ok(Self {
            n,
            epsilon,
            lemma1: lemma1_bound(n, epsilon),
            lemma2: lemma2_value(n, epsilon),
            a_rec,
            b_rec,
        })
    }
}
