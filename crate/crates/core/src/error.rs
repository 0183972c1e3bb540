use thiserror::Error;

/// Errors produced anywhere in the pipeline.
///
/// The CLI maps [`Error::Parse`] to exit status 2 and everything else to 1.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("integer overflow during {0}")]
    Overflow(&'static str),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(
        "Weyl group enumeration exceeded the order cap of {cap} elements; \
         raise BRANE_ATLAS_ORDER_CAP or switch to a permutation representation"
    )]
    OrderCap { cap: usize },
    #[error("enumeration of {points} points exceeds the cap of {cap}")]
    EnumerationCap { points: u128, cap: u128 },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
