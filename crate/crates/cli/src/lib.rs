//! Instance files, rendering and commands behind the `dnum` binary.

pub mod commands;
mod error;
pub mod instance;
pub mod render;

pub use commands::{compute, matrix, verify, Fuzz, MatrixFormat, VerifyOutcome};
pub use error::CliError;
pub use instance::{load_instance, parse_instance, Instance};
pub use render::Format;
