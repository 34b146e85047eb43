use thiserror::Error;

/// Library-wide error type.
///
/// `Domain` marks inputs outside an operation's contract (non-positive
/// frequency, pole of the gamma function, insufficient band coverage).
/// `Numeric` marks a computation that ran but failed to converge to its
/// tolerance; it carries the worst residual actually achieved.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("numeric error: {reason} (worst residual {residual:.3e})")]
    Numeric { reason: String, residual: f64 },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn numeric(reason: impl Into<String>, residual: f64) -> Self {
        Error::Numeric {
            reason: reason.into(),
            residual,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
