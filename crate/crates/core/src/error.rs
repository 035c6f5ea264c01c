//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("non-finite value: {0}")]
    NonFinite(String),

    #[error("tape already consumed by a backward pass; call reset() first")]
    TapeConsumed,

    #[error("backward requires a scalar loss, got shape {0:?}")]
    NonScalarLoss(Vec<usize>),

    #[error("unknown layer: {0}")]
    UnknownLayer(String),

    #[error("invalid channel {channel} for layer {layer} (width {width})")]
    InvalidChannel {
        layer: String,
        channel: usize,
        width: usize,
    },

    #[error("empty dataset")]
    EmptyDataset,

    #[error("dataset parse error at byte {offset}: {message}")]
    DatasetParse { offset: u64, message: String },

    #[error("checkpoint format error: {0}")]
    CheckpointFormat(String),

    #[error("zero variance: {0}")]
    ZeroVariance(String),

    #[error("degenerate value: {0}")]
    Degenerate(String),

    #[error("attack diverged at step {step}: maintain loss {value} exceeded {limit}")]
    Diverged { step: usize, value: f64, limit: f64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
