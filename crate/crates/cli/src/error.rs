use std::fmt;
use std::io;
use std::path::PathBuf;

use manin_forge_core::{Error as CoreError, Report};

/// Exit status for a run whose checks all passed.
pub const EXIT_PASS: i32 = 0;
/// Exit status for a run with at least one failing check.
pub const EXIT_CHECK_FAILED: i32 = 1;
/// Exit status for unreadable or malformed input.
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug)]
pub enum CliError {
    Io { path: PathBuf, source: io::Error },
    /// The input does not fit the schema or refers to missing objects.
    Schema(String),
    /// The input parsed but a construction rejected it for its shape.
    Input(CoreError),
    /// A construction refused its input because identities failed.
    Check { what: String, report: Report },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Check { .. } => EXIT_CHECK_FAILED,
            _ => EXIT_INPUT,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io { path, source } => write!(f, "cannot read {}: {source}", path.display()),
            CliError::Schema(msg) => write!(f, "schema error: {msg}"),
            CliError::Input(e) => write!(f, "invalid input: {e}"),
            CliError::Check { what, .. } => write!(f, "check failed: {what}"),
        }
    }
}

impl std::error::Error for CliError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            CliError::Io { source, .. } => Some(source),
            CliError::Input(e) => Some(e),
            _ => None,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Precondition { what, report } => CliError::Check { what: what.into(), report },
            other => CliError::Input(other),
        }
    }
}
