//! Host-side companion to `emi-core`: a rayon-backed evaluator honoring
//! `EMI_THREADS`, report serialization, the verification suite, and the
//! `emi` command-line interface.

pub mod cli;
pub mod error;
pub mod parallel;
pub mod report;
pub mod verify;

pub use error::{CliError, Result};
pub use parallel::{threads_from_env, Workers, THREADS_ENV};
pub use report::Format;
