//! JobSpec parsing, validation and execution behind the `hopfcyc` binary.

pub mod builtins;
pub mod expr;
pub mod finite;
pub mod inline;
pub mod job;
pub mod report;
pub mod spec;
pub mod tasks;

use thiserror::Error;

pub use job::{validate, Job};
pub use report::{RunReport, TaskReport, Verdict};
pub use spec::JobSpec;
pub use tasks::{run, RunOptions};

/// A malformed job. Every variant maps to exit code 2.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("{message}")]
    Json { line: usize, column: usize, message: String },
    #[error("{path}: {message}")]
    Schema { path: String, message: String },
    #[error("{path}: {source}")]
    Expr { path: String, source: expr::ExprError },
}

impl InputError {
    pub fn schema(path: impl Into<String>, message: impl Into<String>) -> Self {
        InputError::Schema { path: path.into(), message: message.into() }
    }

    pub fn expr(path: impl Into<String>, source: expr::ExprError) -> Self {
        InputError::Expr { path: path.into(), source }
    }
}

/// Parses a JobSpec document. Syntax errors and unknown fields come back with
/// their line and column.
pub fn parse_jobspec(text: &str) -> Result<JobSpec, InputError> {
    serde_json::from_str(text).map_err(|e| InputError::Json { line: e.line(), column: e.column(), message: e.to_string() })
}

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
