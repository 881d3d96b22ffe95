//! Pattern files, SVG rendering and FOLD export.

pub mod fold;
pub mod json;
pub mod svg;

use thiserror::Error;

use crate::pattern::PatternError;

pub use fold::to_fold;
pub use json::{emit, emit_pattern, load, parse, PatternDocument};
pub use svg::render_svg;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("parse error{}: {message}", position(*line, *column))]
    Parse {
        message: String,
        line: Option<usize>,
        column: Option<usize>,
    },
    #[error("invalid pattern: {0}")]
    Validation(#[from] PatternError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn position(line: Option<usize>, column: Option<usize>) -> String {
    match (line, column) {
        (Some(l), Some(c)) => format!(" at line {l}, column {c}"),
        _ => String::new(),
    }
}
