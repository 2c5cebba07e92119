//! JSON interchange, name resolution and command pipelines for
//! `manin-forge-core`.
//!
//! The binary is a thin wrapper: each subcommand loads documents into a
//! [`workspace::Workspace`], runs one pipeline from [`pipelines`] or
//! [`examples`], and prints a [`run::RunReport`].

pub mod error;
pub mod examples;
pub mod pipelines;
pub mod run;
pub mod schema;
pub mod workspace;

pub use error::CliError;
