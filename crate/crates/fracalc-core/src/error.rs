//! Error type shared by every operator in the crate.

use alloc::string::String;
use core::fmt;

/// What went wrong during an evaluation.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An input violated a precondition of the operator.
    Domain(String),
    /// The result is too large for a double-width float.
    Overflow(String),
    /// The requested accuracy could not be certified within budget.
    Accuracy(String),
    /// The grid is too coarse for the requested operation.
    Resolution(String),
    /// A step or evaluation hit a singular configuration.
    Singular(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Overflow(msg) => write!(f, "overflow error: {msg}"),
            Error::Accuracy(msg) => write!(f, "accuracy error: {msg}"),
            Error::Resolution(msg) => write!(f, "resolution error: {msg}"),
            Error::Singular(msg) => write!(f, "singular error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
