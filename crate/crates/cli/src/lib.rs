//! Evaluation, tables and the cross-verification harness behind the
//! `bernoulli-euler` command.

pub mod eval;
pub mod format;
pub mod table;
pub mod verify;

use bernoulli_euler_core as core_math;

pub use eval::{cmd_eval, EvalRequest, EvalResult, Family, Method};
pub use format::Format;
pub use table::{cmd_table, DEFAULT_ROW_CAP};
pub use verify::{cmd_verify, Report, VerifyOptions};

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: u8 = 0;
    pub const USAGE: u8 = 1;
    pub const DISAGREEMENT: u8 = 2;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Math(#[from] core_math::Error),
}
