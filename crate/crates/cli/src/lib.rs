//! Command-line front end for `monopole-obstruct-core`: JSON hypothesis
//! documents, report rendering, scenario output and the example catalog.

pub mod catalog;
pub mod cli;
pub mod doc;
pub mod report;
pub mod run;

/// Exit status for an obstructed verdict.
pub const EXIT_OBSTRUCTED: i32 = 3;
/// Exit status for malformed or inconsistent input.
pub const EXIT_INPUT: i32 = 1;
/// Exit status when the catalog finds a verdict that differs from the
/// expected one.
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] monopole_obstruct_core::Error),
    #[error("{0}")]
    Input(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}
