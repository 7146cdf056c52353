//! The imperfect search itself: a standard bisection over the index range
//! `[0, n)` in which every directional decision is flipped independently with
//! probability ε.
//!
//! The table is abstracted to its indices — only the relative order of the
//! target and the probe matters — so a "search" takes the true index it is
//! hunting for and reports where it actually landed.
//!
//! Loop conventions (shared verbatim with the exact oracle in [`crate::exact`]):
//! half-open interval `[lo, hi)`, probe at `⌊(lo + hi)/2⌋`, `Left` sets
//! `hi ← probe`, `Right` sets `lo ← probe`, answer is `lo` once the interval
//! has a single slot. Equality of target and probe resolves to `Right`, which
//! keeps the target inside the retained half so a noiseless run is exact.

use crate::error::{Error, Result};
use crate::rng::RandomSource;

/// Free parameters of the model: table size `n` and flip probability ε.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchParams {
    n: u64,
    epsilon: f64,
}

impl SearchParams {
    /// Requires `n ≥ 1` and `ε ∈ [0, 1]` (NaN rejected).
    pub fn new(n: u64, epsilon: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroTableSize);
        }
        if !(0.0..=1.0).contains(&epsilon) {
            return Err(Error::EpsilonOutOfRange(epsilon));
        }
        Ok(Self { n, epsilon })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }
}

/// Which half of the interval a comparison selects: `Left` narrows to the
/// lower half (new upper bound), `Right` to the upper half (new lower bound).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Left,
    Right,
}

impl Direction {
    pub fn opposite(self) -> Self {
        match self {
            Direction::Left => Direction::Right,
            Direction::Right => Direction::Left,
        }
    }
}

/// One halving step: where the search probed, which way the truth pointed,
/// and which way the (possibly flipped) comparison actually went.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Decision {
    pub probe: u64,
    pub truth: Direction,
    pub taken: Direction,
}

/// Everything one run produced.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchOutcome {
    pub returned_index: u64,
    pub true_index: u64,
    /// Index displacement `|returned_index − true_index|`.
    pub error: u64,
    pub comparisons: u32,
    pub decisions: Vec<Decision>,
}

/// Probe for the half-open interval `[lo, hi)`: the midpoint rounded down.
#[inline]
pub fn probe_index(lo: u64, hi: u64) -> u64 {
    lo + (hi - lo) / 2
}

/// The direction a perfect comparator would answer. Equality goes `Right`.
#[inline]
pub fn truth_direction(true_index: u64, probe: u64) -> Direction {
    if true_index < probe {
        Direction::Left
    } else {
        Direction::Right
    }
}

/// One noisy comparison: answers [`truth_direction`] with probability `1 − ε`
/// and the opposite with probability ε, consuming exactly one draw from `rng`.
/// Every call flips independently of every other call.
#[inline]
pub fn noisy_compare<R: RandomSource>(
    true_index: u64,
    probe: u64,
    epsilon: f64,
    rng: &mut R,
) -> Direction {
    let truth = truth_direction(true_index, probe);
    // Draw in [0, 1): `u < ε` has probability ε, is never true for ε = 0 and
    // always true for ε = 1, so both endpoints are exactly deterministic.
    if rng.next_unit() < epsilon {
        truth.opposite()
    } else {
        truth
    }
}

/// Run the imperfect search for `true_index`, recording the full decision
/// trace. Consumes one rng draw per halving step.
pub fn run_noisy_search<R: RandomSource>(
    params: &SearchParams,
    true_index: u64,
    rng: &mut R,
) -> Result<SearchOutcome> {
    if true_index >= params.n() {
        return Err(Error::TargetOutOfRange {
            target: true_index,
            n: params.n(),
        });
    }
    let mut lo = 0u64;
    let mut hi = params.n();
    let mut decisions = Vec::new();
    while hi - lo > 1 {
        let probe = probe_index(lo, hi);
        let truth = truth_direction(true_index, probe);
        let taken = noisy_compare(true_index, probe, params.epsilon(), rng);
        decisions.push(Decision { probe, truth, taken });
        match taken {
            Direction::Left => hi = probe,
            Direction::Right => lo = probe,
        }
    }
    Ok(SearchOutcome {
        returned_index: lo,
        true_index,
        error: lo.abs_diff(true_index),
        comparisons: decisions.len() as u32,
        decisions,
    })
}

/// Trace-free variant of [`run_noisy_search`] for hot loops. Returns
/// `(returned_index, error, comparisons)` and is observationally identical to
/// the traced run given the same rng stream.
pub fn run_noisy_search_fast<R: RandomSource>(
    params: &SearchParams,
    true_index: u64,
    rng: &mut R,
) -> Result<(u64, u64, u32)> {
    if true_index >= params.n() {
        return Err(Error::TargetOutOfRange {
            target: true_index,
            n: params.n(),
        });
    }
    let epsilon = params.epsilon();
    let mut lo = 0u64;
    let mut hi = params.n();
    let mut comparisons = 0u32;
    while hi - lo > 1 {
        let probe = probe_index(lo, hi);
        match noisy_compare(true_index, probe, epsilon, rng) {
            Direction::Left => hi = probe,
            Direction::Right => lo = probe,
        }
        comparisons += 1;
    }
    Ok((lo, lo.abs_diff(true_index), comparisons))
}
