use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by the filtering library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid dimensions {width}x{height}x{channels}")]
    InvalidDimensions {
        width: usize,
        height: usize,
        channels: usize,
    },

    #[error("buffer length {actual} does not match {expected}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("non-finite sample at index {0}")]
    NonFinite(usize),

    #[error("channel count mismatch: expected {expected}, got {actual}")]
    ChannelMismatch { expected: usize, actual: usize },

    #[error("per-channel transform changed dimensions from {expected:?} to {actual:?}")]
    TransformShape {
        expected: (usize, usize),
        actual: (usize, usize),
    },

    #[error("index out of range: {what} {index} (limit {limit})")]
    OutOfRange {
        what: &'static str,
        index: usize,
        limit: usize,
    },

    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("unreadable file {path}: {reason}")]
    Unreadable { path: PathBuf, reason: String },

    #[error("unsupported format: {0}")]
    UnsupportedFormat(String),

    #[error("cannot write {path}: {reason}")]
    Unwritable { path: PathBuf, reason: String },
}

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }

    /// True for errors that originate from the filesystem or codecs.
    pub fn is_io(&self) -> bool {
        matches!(
            self,
            Error::Unreadable { .. } | Error::Unwritable { .. } | Error::UnsupportedFormat(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
