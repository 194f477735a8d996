//! Library half of the `cdlat` command: corpus, suites, reports and
//! lattice export.

pub mod commands;
pub mod config;
pub mod corpus;
pub mod error;
pub mod export;
pub mod report;
pub mod suites;

pub use error::CliError;
