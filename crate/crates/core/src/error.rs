use thiserror::Error;

/// Errors produced by the estimation pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("sample too short: need at least {min} observations, got {got}")]
    SampleTooShort { min: usize, got: usize },

    #[error("coordinate vectors have different lengths: {x} vs {y}")]
    LengthMismatch { x: usize, y: usize },

    #[error("input contains non-finite values")]
    NonFinite,

    #[error("rank-degenerate column: all values equal")]
    DegenerateRanks,

    #[error("margin CDF returned {value}, outside the open interval (0, 1)")]
    CdfOutOfRange { value: f64 },

    #[error("pseudo-polar inputs must be strictly positive")]
    NonPositive,

    #[error("quantile level {level} outside the open interval (0, 1)")]
    InvalidLevel { level: f64 },

    #[error("fewer than 2 exceedances above the radial threshold (got {got})")]
    TooFewExceedances { got: usize },

    #[error("degenerate angle sample: zero variance")]
    ZeroVariance,

    #[error("empty sample")]
    EmptySample,

    #[error("angle {value} outside the open interval (0, 1)")]
    AngleOutOfRange { value: f64 },

    #[error("mean constraint infeasible: 1/2 outside the open hull ({min}, {max}) of the angles")]
    Infeasible { min: f64, max: f64 },

    #[error("no convergence after {max_iter} iterations (residual {residual:e})")]
    NoConvergence { max_iter: usize, residual: f64 },

    #[error("estimator kind mismatch: expected {expected}, got {got}")]
    KindMismatch {
        expected: &'static str,
        got: &'static str,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("dependence coefficient undefined at u = {u}: empirical proportion {proportion}")]
    UndefinedCoefficient { u: f64, proportion: f64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
