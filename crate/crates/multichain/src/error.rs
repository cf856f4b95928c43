//! Error type shared by every module.

use crate::exactlin::RingSpec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A face/degeneracy index or direction outside the valid range.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// The instance has no (practically) finite basis at the requested degree.
    #[error("cannot enumerate basis: {0}")]
    NotEnumerable(String),

    /// `d_out . d_in != 0`, so the pair is not a chain complex fragment.
    #[error("composite of the two differentials is not zero")]
    CompositionNotZero,

    /// An operation needed basis elements above the configured degree cap.
    #[error("degree cap {cap} too low: operation needs degree {needed}")]
    CapTooLow { cap: usize, needed: usize },

    /// Two operands over different coefficient rings.
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(RingSpec, RingSpec),

    /// A shuffle does not split at the requested profile.
    #[error("shuffle does not split at the requested profile")]
    NoSplit,

    /// A sequence that should be a diagonal simplex has uneven value counts.
    #[error("malformed diagonal simplex: {0}")]
    MalformedDiagonal(String),

    /// A cochain that was required to be a coboundary is not one.
    #[error("cochain is not a coboundary")]
    NotExact,

    /// Field-only operation invoked with non-field coefficients.
    #[error("operation requires field coefficients, got {0}")]
    NotAField(RingSpec),

    /// Malformed input: payload strings, job specs, ring names, and the like.
    #[error("invalid input: {0}")]
    Invalid(String),

    /// Write or read failure while producing reports.
    #[error("io error: {0}")]
    Io(String),

    /// JSON that does not match the chain schema.
    #[error("json error: {0}")]
    Json(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
