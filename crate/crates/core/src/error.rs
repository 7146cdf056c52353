use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("table size must be at least 1")]
    ZeroTableSize,
    #[error("epsilon must lie in [0, 1], got {0}")]
    EpsilonOutOfRange(f64),
    #[error("target index {target} out of range for a table of size {n}")]
    TargetOutOfRange { target: u64, n: u64 },
    #[error("the recurrence is defined for power-of-two table sizes only, got {n}")]
    NotPowerOfTwo { n: u64 },
    #[error(
        "exact enumeration over a table of size {n} exceeds the cap of {cap} \
         (cost grows as n^2); use the Monte Carlo estimator instead"
    )]
    TableTooLarge { n: u64, cap: u64 },
    #[error("trial count must be at least 1")]
    ZeroTrials,
}

pub type Result<T> = std::result::Result<T, Error>;
