use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid symbol {0:?} in bit string (expected '0' or '1')")]
    InvalidSymbol(char),

    #[error("invalid run-length encoding: {0}")]
    InvalidRle(String),

    #[error("invalid mask: {0}")]
    InvalidMask(String),

    #[error("exact count overflowed its fixed-width backing type")]
    Overflow,

    #[error("enumeration budget exceeded: {what} = {value} > {limit}")]
    BudgetExceeded {
        what: &'static str,
        value: u64,
        limit: u64,
    },

    #[error("invalid range: {0}")]
    InvalidRange(String),

    #[error("invalid Rényi order {0} (must be > 0 and != 1)")]
    InvalidOrder(f64),

    #[error("invalid composition: {0}")]
    InvalidComposition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn range_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidRange(msg.into()))
}
