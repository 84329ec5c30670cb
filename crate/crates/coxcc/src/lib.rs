//! IO, file formats, bundled example corpus, and the `coxcc` CLI on top
//! of [`coxcc_core`].

pub mod cli;
pub mod corpus;
pub mod formats;
pub mod report;

pub use coxcc_core as core;

/// Exit codes used by the CLI.
pub mod exit {
    /// Everything succeeded.
    pub const OK: i32 = 0;
    /// An identity or acceptance check failed.
    pub const IDENTITY_FAILURE: i32 = 1;
    /// Input could not be parsed.
    pub const PARSE_ERROR: i32 = 2;
    /// Inputs parsed but failed validation or a precondition.
    pub const VALIDATION_ERROR: i32 = 3;
}
