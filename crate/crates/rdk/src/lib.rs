//! Command-line surface over the rational Dyck path library: enumeration,
//! format conversion, strip decompositions, Graphviz export, and a
//! verification harness that sweeps every identity the library claims over
//! explicit parameter grids.
//!
//! All output is byte-deterministic for fixed inputs; timing information is
//! kept out of payloads and reported on stderr only.

use std::fmt;

pub mod checks;
pub mod commands;
pub mod dot;
pub mod text;

/// Errors carrying the process exit-code contract: verification failures
/// exit 1, usage problems exit 2, semantically invalid objects exit 3.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Invalid(String),
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Failure(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Invalid(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Invalid(msg) => write!(f, "invalid object: {msg}"),
            CliError::Failure(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for CliError {}

/// Classifies a library error for the exit-code contract. Slope and budget
/// problems are parameter mistakes; everything else describes an object
/// that is well-formed text but not a valid instance.
pub fn object_error(err: rdk_core::Error) -> CliError {
    match err {
        rdk_core::Error::InvalidSlope { .. } | rdk_core::Error::BudgetExceeded => {
            CliError::Usage(err.to_string())
        }
        other => CliError::Invalid(other.to_string()),
    }
}
