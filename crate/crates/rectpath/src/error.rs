//! Crate-wide error type.

use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Malformed input (JSON schema, rational strings, axis values).
    Parse(String),
    /// A requested computation exceeds a configured cap.
    Resource(String),
    /// A closed-form flow hit the principal-branch cut; the payload is the
    /// zero-based index of the offending letter.
    BranchCut { letter: usize },
    /// Two routes that must agree exactly did not. This is a bug in the
    /// implementation, never a property of the input.
    InternalConsistency(String),
    Io(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Resource(msg) => write!(f, "resource limit: {msg}"),
            Error::BranchCut { letter } => {
                write!(f, "branch cut: radicand on (-inf,0] at letter {letter}")
            }
            Error::InternalConsistency(msg) => {
                write!(f, "internal consistency violation: {msg}")
            }
            Error::Io(msg) => write!(f, "io error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
