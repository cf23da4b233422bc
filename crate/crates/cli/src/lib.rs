//! Command-line front end for `specht`: subcommands and their reports.

pub mod commands;
pub mod report;

pub use commands::CliError;
pub use report::{Format, Report, Results, Status};
