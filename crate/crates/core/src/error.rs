use thiserror::Error;

/// Errors surfaced by graph construction, kernel evaluation, posterior
/// updates, policies, environments, and the experiment harness.
#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied parameter is outside its admissible range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A structural invariant of an input object does not hold
    /// (asymmetric weights, negative entries, dimension mismatch, ...).
    #[error("validation failed: {0}")]
    Validation(String),

    /// A numerical routine failed (factorization breakdown after jitter,
    /// non-finite intermediate, ...).
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// The round protocol was violated (chosen arm outside the candidate
    /// set, learn before select, ...).
    #[error("protocol violation: {0}")]
    Protocol(String),

    /// Experiment configuration could not be parsed or resolved.
    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
