//! Crate-wide error type.

use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{context}: shape mismatch, expected {expected:?}, got {got:?}")]
    ShapeMismatch {
        context: &'static str,
        expected: Vec<usize>,
        got: Vec<usize>,
    },

    #[error("{context}: index {index} out of range (bound {bound})")]
    IndexOutOfRange {
        context: &'static str,
        index: usize,
        bound: usize,
    },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("label {label} out of range for {classes} classes")]
    LabelOutOfRange { label: usize, classes: usize },

    #[error("class {class} has no samples")]
    EmptyClass { class: usize },

    #[error("class {class} has {count} samples, calibration needs at least {required}")]
    InsufficientClassSamples {
        class: usize,
        count: usize,
        required: usize,
    },

    #[error("model is frozen: {0}")]
    Frozen(&'static str),

    #[error("model must be frozen before {0}")]
    NotFrozen(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("perturbation alpha {alpha} outside {kind} range [{lo}, {hi}]")]
    AlphaOutOfRange {
        kind: &'static str,
        alpha: f64,
        lo: f64,
        hi: f64,
    },

    #[error("bad magic: expected {expected:?}, got {got:?}")]
    BadMagic { expected: String, got: String },

    #[error("truncated record: {0}")]
    TruncatedRecord(String),

    #[error("format error: {0}")]
    Format(String),

    #[error("not calibrated: {0}")]
    Uncalibrated(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
