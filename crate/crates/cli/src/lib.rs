//! Command implementations behind the `hskein` binary.

pub mod commands;
pub mod error;
pub mod examples;

pub use commands::Report;
pub use error::CliError;
