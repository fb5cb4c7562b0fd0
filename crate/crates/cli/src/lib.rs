//! Spec-file driven front end for the `kupershmidt` crate: checks,
//! constructions, searches and consequence suites.

pub mod app;
pub mod catalog;
pub mod checks;
pub mod construct;
pub mod error;
pub mod search_cmd;
pub mod spec_file;
pub mod suite;

pub use error::{CliError, CliResult};
pub use spec_file::SpecFile;
