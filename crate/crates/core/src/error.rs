use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// The request exceeds a configured size, width or iteration bound.
    #[error("resource limit: {0}")]
    Resource(String),
    /// Malformed input that could not be turned into a domain value.
    #[error("invalid input: {0}")]
    Validation(String),
    /// Exact integer arithmetic would have wrapped.
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    /// An internal invariant broke. Always a bug.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

macro_rules! domain {
    ($($arg:tt)*) => { $crate::Error::Domain(alloc::format!($($arg)*)) };
}
macro_rules! resource {
    ($($arg:tt)*) => { $crate::Error::Resource(alloc::format!($($arg)*)) };
}
pub(crate) use {domain, resource};
