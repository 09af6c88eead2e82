use thiserror::Error;

/// Errors raised by the sequence, divisibility and trick routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} is outside the domain of this sequence")]
    IndexOutOfDomain { index: i64 },

    #[error("invalid sequence definition: {0}")]
    InvalidSequence(String),

    #[error("precondition failed: {0}")]
    Domain(String),

    #[error("no closed form covers {family} at n = {n}")]
    UnsupportedCase { family: String, n: u64 },

    #[error("no common trick for n = {n}; nearby n with a trick: {nearby:?}")]
    UnsupportedTrick { n: u64, nearby: Vec<u64> },

    #[error("growth of the sequence could not be certified within {limit} indices")]
    ScanLimit { limit: u64 },

    #[error("unknown OEIS id {0:?}")]
    UnknownOeisId(String),
}

pub type Result<T> = std::result::Result<T, Error>;
