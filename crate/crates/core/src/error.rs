use std::path::PathBuf;

use crate::mode_index::{Basis, ModeOrder};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("basis mismatch: expected {expected}, found {found}")]
    BasisMismatch { expected: Basis, found: Basis },

    #[error("local unitary has no block for occupied mode order {0}")]
    MissingBlock(ModeOrder),

    #[error("block for mode order {order} is not unitary (deviation {deviation:e})")]
    NotUnitary { order: ModeOrder, deviation: f64 },

    #[error("state is not normalized (norm² = {norm_sqr}); pass --renormalize to accept it")]
    NotNormalized { norm_sqr: f64 },

    #[error("empty spectrum")]
    EmptySpectrum,

    #[error("spectrum is not exchange-symmetric: entry (p={p}, q={q}, ell={ell}) has no matching (p={q}, q={p}) partner")]
    AsymmetricSpectrum { p: u32, q: u32, ell: u32 },

    #[error("Bell pair requires ell >= 1, got {0}")]
    DegenerateBellPair(i32),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid config field `{field}`: {reason}")]
    Config { field: &'static str, reason: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
