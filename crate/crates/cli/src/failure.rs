use std::fmt;
use std::path::Path;

use nbc_core::constructors::ConstructError;
use nbc_core::io::FormatError;
use nbc_core::{ColoringError, GraphError};

/// Negative answer: not balanced, not admissible, no coloring exists.
pub const NO: u8 = 1;
/// Usage, I/O, format or precondition error.
pub const ERROR: u8 = 2;
/// Search budget ran out before an answer.
pub const UNKNOWN: u8 = 3;

/// A diagnostic bound for standard error, carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub kind: &'static str,
    pub message: String,
}

impl Failure {
    pub fn new(code: u8, kind: &'static str, message: impl Into<String>) -> Self {
        Failure { code, kind, message: message.into() }
    }

    pub fn io(path: &Path, err: std::io::Error) -> Self {
        Failure::new(ERROR, "Io", format!("{}: {err}", path.display()))
    }

    pub fn format(path: &Path, err: FormatError) -> Self {
        let kind = match &err {
            FormatError::Syntax { .. } | FormatError::Truncated(_) => "Format",
            FormatError::Graph(e) => graph_kind(e),
            FormatError::Coloring(e) => coloring_kind(e),
        };
        Failure::new(ERROR, kind, format!("{}: {err}", path.display()))
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error [{}]: {}", self.kind, self.message)
    }
}

fn graph_kind(e: &GraphError) -> &'static str {
    match e {
        GraphError::SizeOverflow { .. } => "SizeOverflow",
        GraphError::InvalidFamilyParams(_) => "InvalidFamily",
        _ => "InvalidGraph",
    }
}

fn coloring_kind(e: &ColoringError) -> &'static str {
    match e {
        ColoringError::LengthMismatch { .. } => "LengthMismatch",
        ColoringError::InvalidPalette(_) => "InvalidPalette",
        _ => "InvalidColoring",
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        Failure::new(ERROR, graph_kind(&e), e.to_string())
    }
}

impl From<ColoringError> for Failure {
    fn from(e: ColoringError) -> Self {
        Failure::new(ERROR, coloring_kind(&e), e.to_string())
    }
}

impl From<ConstructError> for Failure {
    fn from(e: ConstructError) -> Self {
        let code = match e {
            ConstructError::NotAdmissible { .. }
            | ConstructError::CompleteNotAdmissible(_)
            | ConstructError::HypothesisViolation(_)
            | ConstructError::InputNotBalanced(_)
            | ConstructError::CountsNotEqual { .. } => NO,
            ConstructError::PaletteMismatch(..)
            | ConstructError::BadAnchors(_)
            | ConstructError::Graph(_)
            | ConstructError::Coloring(_) => ERROR,
        };
        Failure::new(code, e.kind(), e.to_string())
    }
}
