use alloc::string::String;
use core::fmt;

/// Errors reported by this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A parameter violated its documented domain.
    InvalidParameter(String),
    /// A vector had the wrong length for the code at hand.
    LengthMismatch { expected: usize, got: usize },
    /// The input word is not a codeword of the claimed code.
    NotACodeword,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::LengthMismatch { expected, got } => {
                write!(f, "length mismatch: expected {expected}, got {got}")
            }
            Error::NotACodeword => write!(f, "membership violation: not a codeword"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;

macro_rules! invalid {
    ($($arg:tt)*) => {
        return Err($crate::Error::InvalidParameter(alloc::format!($($arg)*)))
    };
}

pub(crate) use invalid;
