//! File formats, parallel drivers and the command-line front end for
//! `primpoints-core`.

pub mod cli;
pub mod error;
pub mod formats;
pub mod report;
pub mod run;

pub use error::{exit, CliError, CliResult};
