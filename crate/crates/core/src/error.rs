use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain where the model is defined.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("mode index {index} out of range for a {n_modes}-mode state")]
    ModeIndex { index: usize, n_modes: usize },

    #[error("invalid configuration: {0}")]
    Config(String),

    /// A sweep specification failed validation; `field` names the offending key.
    #[error("invalid sweep spec ({field}): {message}")]
    Spec { field: String, message: String },

    #[error("slope of the detected quadrature is {slope:e}; no phase information reaches the detector")]
    DerivativeUnderflow { slope: f64 },

    #[error("no sign change on [{a}, {b}]: f({a}) = {fa:e}, f({b}) = {fb:e}")]
    NoSignChange { a: f64, fa: f64, b: f64, fb: f64 },

    #[error("quadrature did not converge: estimate {estimate:e} with error {error:e}")]
    Quadrature { estimate: f64, error: f64 },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {message}")]
    Parse { path: PathBuf, message: String },

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn spec(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Spec {
            field: field.into(),
            message: message.into(),
        }
    }

    /// True for errors caused by bad input rather than a failed computation.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::Domain(_)
                | Error::ModeIndex { .. }
                | Error::Config(_)
                | Error::Spec { .. }
                | Error::Parse { .. }
        )
    }
}
