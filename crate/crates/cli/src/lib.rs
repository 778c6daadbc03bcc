//! Command-line front end for `signed-spectra`: argument handling, `H`
//! edge-list files, output formats, verification suites and sweeps.

pub mod error;
pub mod hfile;
pub mod instance;
pub mod output;
pub mod suites;
pub mod sweep;

pub use error::{CliError, CliResult};
