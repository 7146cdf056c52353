//! Binary search over a sorted table whose comparator answers wrongly with a
//! fixed independent probability, together with the machinery to quantify how
//! far the returned index lands from the true one:
//!
//! - [`search`] — the noisy comparison and the halving loop itself, producing
//!   a full per-run decision trace.
//! - [`bounds`] — the closed-form error bounds `εn` and `εn(0.5+ε)/(1+ε)`
//!   plus the finite recurrences they come from.
//! - [`exact`] — exact expected error by enumerating the decision tree with
//!   branch probabilities; the ground truth the bounds are judged against.
//! - [`mc`] — a seeded, partition-invariant Monte Carlo estimator.
//! - [`rng`] — the SplitMix64 generator and the per-trial substream
//!   derivation that make every estimate bit-reproducible.

pub mod bounds;
mod error;
pub mod exact;
pub mod mc;
pub mod rng;
pub mod search;

pub use bounds::{a_recurrence, b_recurrence, lemma1_bound, lemma2_value, BoundReport};
pub use error::{Error, Result};
pub use exact::{
    exact_average_error, exact_average_error_with_cap, exact_expected_error, ExactErrorReport,
    DEFAULT_EXACT_CAP,
};
pub use mc::{monte_carlo, MonteCarloEstimate, TargetPolicy};
pub use rng::{substream_seed, RandomSource, SplitMix64};
pub use search::{
    noisy_compare, probe_index, run_noisy_search, run_noisy_search_fast, truth_direction,
    Decision, Direction, SearchOutcome, SearchParams,
};
