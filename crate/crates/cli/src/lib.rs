//! Command-line front end for `demazure-core`.

pub mod cache;
pub mod error;
pub mod report;
pub mod request;
pub mod run;

pub use cache::Cache;
pub use error::{CliError, Result};
pub use report::Report;
pub use request::{Cli, Command, CommandRequest, Format};
pub use run::{execute, run_command};
