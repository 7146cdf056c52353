//! Exact expected error by full enumeration of the decision tree.
//!
//! The search loop induces a binary tree over half-open intervals: each
//! internal node is an interval with its probe, each edge carries probability
//! `1 − ε` (follows the truth) or `ε` (flipped), and each leaf is a returned
//! index. Summing `P(path) · |leaf − target|` over all root-to-leaf paths
//! gives the expectation with no sampling error. The tree over `[0, n)` has
//! `2n − 1` nodes, so one target costs O(n) and the all-targets average costs
//! O(n²) — hence the cap on [`exact_average_error`].
//!
//! The probe rule, interval scheme, and equality convention are taken from
//! [`crate::search`] so the oracle and the simulator describe the same
//! process.

use crate::error::{Error, Result};
use crate::search::{probe_index, truth_direction, Direction, SearchParams};

/// Largest `n` accepted by [`exact_average_error`]; beyond it the O(n²) cost
/// stops being interactive and Monte Carlo is the right tool.
pub const DEFAULT_EXACT_CAP: u64 = 1 << 14;

/// Exact expected error for every target of one table, plus their mean under
/// the uniform target distribution.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactErrorReport {
    pub n: u64,
    pub epsilon: f64,
    /// `per_target[t]` = exact expected error when the true index is `t`.
    pub per_target: Vec<f64>,
    pub average: f64,
}

fn walk(lo: u64, hi: u64, target: u64, epsilon: f64, prob: f64) -> f64 {
    if prob == 0.0 {
        return 0.0;
    }
    if hi - lo == 1 {
        return prob * lo.abs_diff(target) as f64;
    }
    let probe = probe_index(lo, hi);
    let (p_left, p_right) = match truth_direction(target, probe) {
        Direction::Left => (1.0 - epsilon, epsilon),
        Direction::Right => (epsilon, 1.0 - epsilon),
    };
    walk(lo, probe, target, epsilon, prob * p_left)
        + walk(probe, hi, target, epsilon, prob * p_right)
}

/// Exact expected index error of the noisy search for one target. O(n).
pub fn exact_expected_error(n: u64, true_index: u64, epsilon: f64) -> Result<f64> {
    SearchParams::new(n, epsilon)?;
    if true_index >= n {
        return Err(Error::TargetOutOfRange {
            target: true_index,
            n,
        });
    }
    Ok(walk(0, n, true_index, epsilon, 1.0))
}

/// [`exact_expected_error`] for every target, averaged uniformly. O(n²),
/// capped at [`DEFAULT_EXACT_CAP`].
pub fn exact_average_error(n: u64, epsilon: f64) -> Result<ExactErrorReport> {
    exact_average_error_with_cap(n, epsilon, DEFAULT_EXACT_CAP)
}

/// [`exact_average_error`] with an explicit size cap.
pub fn exact_average_error_with_cap(n: u64, epsilon: f64, cap: u64) -> Result<ExactErrorReport> {
    SearchParams::new(n, epsilon)?;
    if n > cap {
        return Err(Error::TableTooLarge { n, cap });
    }

    #[cfg(feature = "parallel")]
    let per_target: Vec<f64> = {
        use rayon::prelude::*;
        (0..n)
            .into_par_iter()
            .map(|t| walk(0, n, t, epsilon, 1.0))
            .collect()
    };
    #[cfg(not(feature = "parallel"))]
    let per_target: Vec<f64> = (0..n).map(|t| walk(0, n, t, epsilon, 1.0)).collect();

    // Summed in target order so the average is identical however the targets
    // were evaluated.
    let average = per_target.iter().sum::<f64>() / n as f64;
    Ok(ExactErrorReport {
        n,
        epsilon,
        per_target,
        average,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{a_recurrence, lemma2_value};

    fn assert_rel(actual: f64, expected: f64, rel: f64) {
        let scale = expected.abs().max(1e-300);
        assert!(
            (actual - expected).abs() <= rel * scale,
            "expected {expected}, got {actual} (rel tol {rel})"
        );
    }

    /// Independent oracle: enumerate every flip-pattern bitmask over
    /// ⌈log₂ n⌉ steps and replay the halving loop with scripted flips.
    fn brute_force_expected_error(n: u64, target: u64, epsilon: f64) -> f64 {
        let max_steps = n.next_power_of_two().trailing_zeros();
        let mut total = 0.0;
        for mask in 0u64..(1 << max_steps) {
            let mut weight = 1.0;
            for bit in 0..max_steps {
                weight *= if mask >> bit & 1 == 1 {
                    epsilon
                } else {
                    1.0 - epsilon
                };
            }
            let (mut lo, mut hi, mut step) = (0u64, n, 0);
            while hi - lo > 1 {
                let probe = lo + (hi - lo) / 2;
                let truth_left = target < probe;
                let flipped = mask >> step & 1 == 1;
                step += 1;
                if truth_left != flipped {
                    hi = probe;
                } else {
                    lo = probe;
                }
            }
            total += weight * lo.abs_diff(target) as f64;
        }
        total
    }

    /// Closed form for the exact average on a power-of-two table, derived by
    /// conditioning on the step of the first wrong turn: once the target is
    /// outside the kept half every later truth points back at it, so the
    /// error decomposes into boundary distance plus a one-sided drift.
    fn first_wrong_turn_average(n: u64, epsilon: f64) -> f64 {
        let levels = n.trailing_zeros();
        let mut total = 0.0;
        for i in 0..levels {
            let m = (n >> i) as f64;
            total += (1.0 - epsilon).powi(i as i32)
                * epsilon
                * (m / 4.0 + 0.5 + epsilon * (m / 2.0 - 1.0));
        }
        total
    }

    #[test]
    fn single_comparison_table() {
        assert_rel(exact_expected_error(2, 0, 0.25).unwrap(), 0.25, 1e-15);
        assert_rel(exact_expected_error(2, 1, 0.25).unwrap(), 0.25, 1e-15);
    }

    #[test]
    fn four_slot_examples() {
        assert_rel(exact_expected_error(4, 0, 0.1).unwrap(), 0.3, 1e-12);
        assert_rel(exact_expected_error(4, 1, 0.1).unwrap(), 0.2, 1e-12);
        let report = exact_average_error(4, 0.1).unwrap();
        assert_rel(report.average, 0.25, 1e-12);
        let expected = [0.3, 0.2, 0.2, 0.3];
        for (got, want) in report.per_target.iter().zip(expected) {
            assert_rel(*got, want, 1e-12);
        }
    }

    #[test]
    fn noiseless_is_exactly_zero() {
        for n in 1..=64u64 {
            for t in 0..n {
                assert_eq!(exact_expected_error(n, t, 0.0).unwrap(), 0.0);
            }
        }
        assert_eq!(exact_average_error(512, 0.0).unwrap().average, 0.0);
    }

    #[test]
    fn two_slot_average_is_epsilon() {
        for eps in [0.05, 0.1, 0.25, 0.5, 0.9, 1.0] {
            assert_rel(exact_average_error(2, eps).unwrap().average, eps, 1e-15);
        }
    }

    #[test]
    fn matches_brute_force_enumeration() {
        for n in [2u64, 3, 4, 5, 7, 8, 16, 31, 32] {
            for eps in [0.1, 0.3, 0.5] {
                for t in 0..n {
                    let tree = exact_expected_error(n, t, eps).unwrap();
                    let brute = brute_force_expected_error(n, t, eps);
                    assert_rel(tree, brute, 1e-12);
                }
            }
        }
    }

    #[test]
    fn extreme_target_matches_a_recurrence() {
        // For target 0 every wrong flip at interval size m displaces by m/2
        // independently, so the expectation telescopes to ε(n − 1).
        for k in 1..=12u32 {
            let n = 1u64 << k;
            for eps in [0.05, 0.1, 0.3, 0.45] {
                let exact = exact_expected_error(n, 0, eps).unwrap();
                assert_rel(exact, a_recurrence(n, eps).unwrap(), 1e-9);
                assert_rel(exact, eps * (n - 1) as f64, 1e-9);
            }
        }
    }

    #[test]
    fn per_target_mirror_symmetry_on_powers_of_two() {
        for k in 1..=8u32 {
            let n = 1u64 << k;
            let report = exact_average_error(n, 0.2).unwrap();
            for t in 0..n as usize {
                let mirror = report.per_target[n as usize - 1 - t];
                assert_rel(report.per_target[t], mirror, 1e-9);
            }
        }
    }

    #[test]
    fn average_matches_first_wrong_turn_closed_form() {
        for k in 1..=10u32 {
            let n = 1u64 << k;
            for eps in [0.05, 0.1, 0.2, 0.45, 0.8] {
                let report = exact_average_error(n, eps).unwrap();
                assert_rel(report.average, first_wrong_turn_average(n, eps), 1e-12);
            }
        }
    }

    #[test]
    fn average_is_mean_of_per_target() {
        let report = exact_average_error(37, 0.17).unwrap();
        assert_eq!(report.per_target.len(), 37);
        let mean = report.per_target.iter().sum::<f64>() / 37.0;
        assert_rel(report.average, mean, 1e-12);
        for &e in &report.per_target {
            assert!((0.0..=36.0).contains(&e));
        }
    }

    #[test]
    fn average_nondecreasing_in_epsilon() {
        for n in [8u64, 37, 128] {
            let mut prev = -1.0;
            for step in 0..=10 {
                let avg = exact_average_error(n, step as f64 * 0.05).unwrap().average;
                assert!(avg >= prev, "n={n} step={step}: {avg} < {prev}");
                prev = avg;
            }
        }
    }

    #[test]
    fn lemma2_sits_within_its_agreement_band() {
        for n in [64u64, 256] {
            for eps in [0.05, 0.1, 0.2] {
                let avg = exact_average_error(n, eps).unwrap().average;
                let l2 = lemma2_value(n, eps);
                assert!((avg - l2).abs() / l2 <= 0.25, "n={n} eps={eps}");
            }
        }
    }

    #[test]
    fn domain_errors() {
        assert_eq!(
            exact_expected_error(4, 4, 0.1),
            Err(Error::TargetOutOfRange { target: 4, n: 4 })
        );
        assert_eq!(exact_expected_error(0, 0, 0.1), Err(Error::ZeroTableSize));
        assert!(exact_expected_error(4, 0, 1.1).is_err());
        assert_eq!(
            exact_average_error(DEFAULT_EXACT_CAP * 2, 0.1),
            Err(Error::TableTooLarge {
                n: DEFAULT_EXACT_CAP * 2,
                cap: DEFAULT_EXACT_CAP
            })
        );
        assert!(exact_average_error_with_cap(64, 0.1, 32).is_err());
        assert!(exact_average_error_with_cap(64, 0.1, 64).is_ok());
    }
}
