//! Error type shared by all modules.

use alloc::string::String;
use core::fmt;

/// Non-certificate failures. Infeasibility is *not* an error; it is reported
/// through [`crate::Outcome::Infeasible`] with a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Malformed input: bad index, negative degree, unbalanced vectors, ...
    InvalidInput(String),
    /// A documented precondition of the operation does not hold.
    Precondition(String),
    /// The instance exceeds an enumeration or DP capacity cap.
    Capacity(String),
    /// Internal verification failed: a constructed object did not pass its
    /// own independent re-check. Always a bug, never silent.
    Defect(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Error {
        Error::InvalidInput(msg.into())
    }

    pub fn precondition(msg: impl Into<String>) -> Error {
        Error::Precondition(msg.into())
    }

    pub fn capacity(msg: impl Into<String>) -> Error {
        Error::Capacity(msg.into())
    }

    pub fn defect(msg: impl Into<String>) -> Error {
        Error::Defect(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(m) => write!(f, "invalid input: {m}"),
            Error::Precondition(m) => write!(f, "precondition violated: {m}"),
            Error::Capacity(m) => write!(f, "capacity exceeded: {m}"),
            Error::Defect(m) => write!(f, "internal defect: {m}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
