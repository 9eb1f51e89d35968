//! Command implementations for the `orthofermion` binary. Each command
//! returns a [`Report`]; rendering and exit codes are decided in `main`.

pub mod commands;
pub mod error;
pub mod files;
pub mod report;

pub use commands::{run, Cli, Command, Output};
pub use error::CliError;
pub use files::{RepFile, SystemFile};
pub use report::{Report, Verdict};
