//! Seeded Monte Carlo estimation of the expected index error.
//!
//! Every trial owns a private SplitMix64 substream derived from
//! `(master_seed, trial_index)` by [`substream_seed`], so the estimate is a
//! pure function of its arguments: trials may run in any order, on any number
//! of workers, and the integer error sum — and hence every reported statistic
//! — comes out bit-identical. Per-trial errors are accumulated as exact
//! integers; floating point enters only when the final statistics are formed.

use crate::error::{Error, Result};
use crate::rng::{substream_seed, RandomSource, SplitMix64};
use crate::search::{run_noisy_search_fast, SearchParams};

/// How each trial picks its target.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TargetPolicy {
    /// Every trial searches for the same index.
    Fixed(u64),
    /// Each trial draws its target uniformly from `[0, n)` using the trial's
    /// own substream, before any comparison draws.
    UniformRandom,
}

/// Sample statistics of the per-trial index errors.
#[derive(Debug, Clone, PartialEq)]
pub struct MonteCarloEstimate {
    pub trials: u64,
    pub master_seed: u64,
    /// Exact integer sum of per-trial errors.
    pub error_sum: u64,
    /// `error_sum / trials`.
    pub mean: f64,
    /// Sample standard error of the mean; exactly 0 for deterministic runs.
    pub std_err: f64,
    pub ci95_low: f64,
    pub ci95_high: f64,
}

const Z_95: f64 = 1.96;

fn one_trial(params: &SearchParams, policy: TargetPolicy, master_seed: u64, trial: u64) -> u64 {
    let mut rng = SplitMix64::new(substream_seed(master_seed, trial));
    let target = match policy {
        TargetPolicy::Fixed(t) => t,
        // Modulo bias is below n/2^64, far under anything a 5-sigma
        // consistency check can see, and keeps the draw portable.
        TargetPolicy::UniformRandom => rng.next_u64() % params.n(),
    };
    let (_, error, _) = run_noisy_search_fast(params, target, &mut rng)
        .expect("target drawn or validated in range");
    error
}

/// Run `trials` independent noisy searches and report the mean error with a
/// 95% normal-approximation confidence interval.
///
/// The result depends only on `(params, policy, trials, master_seed)`; the
/// reduction is an exact integer sum, so partitioning across workers cannot
/// change any output bit.
pub fn monte_carlo(
    params: &SearchParams,
    policy: TargetPolicy,
    trials: u64,
    master_seed: u64,
) -> Result<MonteCarloEstimate> {
    if trials == 0 {
        return Err(Error::ZeroTrials);
    }
    if let TargetPolicy::Fixed(t) = policy {
        if t >= params.n() {
            return Err(Error::TargetOutOfRange {
                target: t,
                n: params.n(),
            });
        }
    }

    #[cfg(feature = "parallel")]
    let (sum, sq_sum) = {
        use rayon::prelude::*;
        (0..trials)
            .into_par_iter()
            .map(|trial| {
                let e = one_trial(params, policy, master_seed, trial) as u128;
                (e, e * e)
            })
            .reduce(|| (0u128, 0u128), |a, b| (a.0 + b.0, a.1 + b.1))
    };
    #[cfg(not(feature = "parallel"))]
    let (sum, sq_sum) = (0..trials).fold((0u128, 0u128), |acc, trial| {
        let e = one_trial(params, policy, master_seed, trial) as u128;
        (acc.0 + e, acc.1 + e * e)
    });

    Ok(assemble(trials, master_seed, sum, sq_sum))
}

fn assemble(trials: u64, master_seed: u64, sum: u128, sq_sum: u128) -> MonteCarloEstimate {
    let error_sum =
        u64::try_from(sum).expect("error sum exceeds u64; reduce the trial count or table size");
    let mean = error_sum as f64 / trials as f64;
    // Sample variance via integer sums: trials·Σe² − (Σe)², nonnegative by
    // Cauchy-Schwarz and exactly zero when every trial saw the same error.
    let spread = trials as u128 * sq_sum - sum * sum;
    let std_err = if trials < 2 || spread == 0 {
        0.0
    } else {
        let denom = trials as f64 * trials as f64 * (trials - 1) as f64;
        (spread as f64 / denom).sqrt()
    };
    MonteCarloEstimate {
        trials,
        master_seed,
        error_sum,
        mean,
        std_err,
        ci95_low: mean - Z_95 * std_err,
        ci95_high: mean + Z_95 * std_err,
    }
}
