//! Job files, the compute pipeline and JSON reports for the `invcat` tool.

pub mod job;
pub mod pipeline;
pub mod report;

use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const INPUT: i32 = 1;
    pub const FALSIFIED: i32 = 2;
}

#[derive(Debug, Error)]
pub enum InputError {
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid job at {path}: {message}")]
    Invalid { path: String, message: String },
    #[error("{path}: {err}")]
    Io { path: String, err: std::io::Error },
    #[error("{0}")]
    Computation(String),
}
