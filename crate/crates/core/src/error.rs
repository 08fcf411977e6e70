//! Crate-wide error type and the exit-code classification used by the CLI.

use thiserror::Error;

/// Errors raised anywhere in the crate, grouped by failure class.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid configuration or arguments (CLI exit code 2).
    #[error("configuration error: {0}")]
    Config(String),

    /// Missing or malformed external data (CLI exit code 3).
    #[error("data error: {0}")]
    Data(String),

    /// Unknown quantum-defect channel (CLI exit code 3).
    #[error("no quantum-defect channel for l = {l}, j = {j}")]
    MissingChannel { l: u32, j: String },

    /// Principal quantum number below the trusted range of a channel's
    /// defect expansion (CLI exit code 3).
    #[error("n = {n} below validity floor n >= {valid_n_min} of channel l = {l}, j = {j}")]
    OutOfValidity { n: u32, valid_n_min: u32, l: u32, j: String },

    /// Radial integration failed to produce a normalizable solution
    /// (CLI exit code 4).
    #[error("radial integration failure for {state}: {detail}")]
    Integration { state: String, detail: String },

    /// Numerical failure: eigensolver breakdown, norm drift, inconsistent
    /// grids, and similar (CLI exit code 4).
    #[error("numerical error: {0}")]
    Numerical(String),

    /// A requested allocation would exceed the configured budget
    /// (CLI exit code 5).
    #[error("resource limit: estimated {estimate} bytes exceeds budget of {budget} bytes")]
    Resource { estimate: u64, budget: u64 },

    /// Too few samples for a fit or statistic (CLI exit code 2).
    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub fn data(msg: impl Into<String>) -> Self {
        Error::Data(msg.into())
    }

    pub fn numerical(msg: impl Into<String>) -> Self {
        Error::Numerical(msg.into())
    }

    /// CLI process exit code for this failure class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::InsufficientData(_) => 2,
            Error::Data(_) | Error::MissingChannel { .. } | Error::OutOfValidity { .. } => 3,
            Error::Integration { .. } | Error::Numerical(_) | Error::Io(_) => 4,
            Error::Resource { .. } => 5,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
