//! Batch audits over `vanishing-core`: range runners, record ingestion and
//! report rendering in aligned text or JSON lines.

pub mod commands;
pub mod ingest;
pub mod report;

use std::path::PathBuf;

pub use commands::{
    cmd_char_eval, cmd_ingest_check, cmd_selftest, cmd_verify_alternating, cmd_verify_arith, cmd_verify_lie,
    selftest_with, ArithCheck, RunOptions,
};
pub use report::{AuditReport, Format, Outcome, Summary};

#[derive(Debug, thiserror::Error)]
pub enum AuditError {
    /// Bad arguments; maps to exit status 2.
    #[error("usage: {0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error(transparent)]
    Core(#[from] vanishing_core::Error),
}

pub type Result<T, E = AuditError> = std::result::Result<T, E>;
