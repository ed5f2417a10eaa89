//! Library surface of the command-line tool: document formats, reports, and
//! the subcommand implementations, exposed so integration tests can drive
//! commands in-process.

pub mod commands;
pub mod doc;
pub mod error;
pub mod report;

pub use commands::{run, Command, Outcome};
pub use doc::Document;
pub use error::CliError;
pub use report::Report;
