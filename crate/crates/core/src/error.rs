use alloc::string::String;
use core::fmt;

use crate::report::Report;

/// Errors raised by constructors and operations.
///
/// Mathematical check failures that the caller may want to inspect are not
/// errors: they come back as a [`Report`]. An error means an operation could
/// not produce its output at all.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Operand shapes do not fit together.
    Dimension { context: &'static str, expected: usize, found: usize },
    /// A square matrix has no inverse.
    Singular(&'static str),
    /// A linear system has no solution.
    NoSolution,
    /// Basis vectors are linearly dependent.
    RankDeficient { expected: usize, found: usize },
    /// Two subspaces do not span the ambient space as a direct sum.
    NotComplementary,
    /// An operator was expected to square to ±1 and does not.
    NotInvolutive,
    /// A vector is not inside the subspace it was declared to belong to.
    OutsideSubspace(&'static str),
    /// A precondition given as a set of identities failed.
    Precondition { what: &'static str, report: Report },
    /// Anything else that makes the input unusable.
    Invalid(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Dimension { context, expected, found } => {
                write!(f, "dimension mismatch in {context}: expected {expected}, found {found}")
            }
            Error::Singular(what) => write!(f, "{what} is singular"),
            Error::NoSolution => f.write_str("linear system has no solution"),
            Error::RankDeficient { expected, found } => {
                write!(f, "basis has rank {found}, expected {expected}")
            }
            Error::NotComplementary => f.write_str("subspaces are not complementary"),
            Error::NotInvolutive => f.write_str("operator does not square to the identity"),
            Error::OutsideSubspace(what) => write!(f, "vector lies outside {what}"),
            Error::Precondition { what, report } => {
                write!(f, "precondition failed: {what}")?;
                if let Some(first) = report.first_failure() {
                    write!(f, " (first failing check: {first})")?;
                }
                Ok(())
            }
            Error::Invalid(msg) => f.write_str(msg),
        }
    }
}

impl core::error::Error for Error {}

pub(crate) fn dim_check(context: &'static str, expected: usize, found: usize) -> crate::Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::Dimension { context, expected, found })
    }
}
