//! Library side of the `zetavals` command: argument types, output records,
//! renderers and the verification suites.

pub mod commands;
pub mod error;
pub mod record;
pub mod render;
pub mod suites;

pub use commands::{run, Cli};
pub use error::CliError;
pub use record::OutputRecord;
