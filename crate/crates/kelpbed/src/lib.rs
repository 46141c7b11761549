//! Text formats, seeded randomized verification and the `kelpbed` command
//! line on top of [`kelpbed_core`].

pub mod cli;
mod error;
pub mod format;
pub mod verify;

pub use error::CliError;
