//! Command-line front end for `surfinv-core`: argument parsing, the JSON
//! encodings of exact values and the Seifert input document.

pub mod args;
pub mod commands;
pub mod error;
pub mod json;
pub mod seifert_doc;

pub use args::Cli;
pub use commands::{run, Report};
pub use error::CliError;
