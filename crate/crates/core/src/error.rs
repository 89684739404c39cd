use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("lattice bound must be at least 1")]
    ZeroBound,

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("invalid coin parameters: {0}")]
    InvalidCoin(String),

    /// The dimer-derived coin came out super-normalized.
    #[error("coin norm factor {norm} exceeds 1 (alpha1 = {alpha1}, alpha2 = {alpha2})")]
    CoinNormExceeded { alpha1: f64, alpha2: f64, norm: f64 },

    #[error("invalid dimer parameters: {0}")]
    InvalidDimer(String),

    #[error("step {step} would move amplitude outside the lattice [-{bound}, {bound}]")]
    Boundary { bound: usize, step: usize },

    #[error("state has zero norm")]
    ZeroNorm,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("config error{}: field `{field}`: {message}", line.map(|l| format!(" at line {l}")).unwrap_or_default())]
    Config {
        line: Option<usize>,
        field: String,
        message: String,
    },

    #[error("I/O error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("serialization error: {0}")]
    Serialize(String),
}

impl Error {
    pub(crate) fn config(line: Option<usize>, field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            line,
            field: field.into(),
            message: message.into(),
        }
    }

    /// True for errors caused by invalid user configuration rather than by a run.
    pub fn is_config(&self) -> bool {
        matches!(self, Error::Config { .. })
    }
}
