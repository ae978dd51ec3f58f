//! Command-line front end for `gwa-core`: an expression parser, the `gwa`
//! verbs, settings files and JSON reports.

pub mod commands;
pub mod config;
pub mod parse;
pub mod report;

pub use commands::{run, Cli, Outcome, UsageError};
