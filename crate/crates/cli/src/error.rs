use std::fmt;

use thiserror::Error;

/// 1-based source position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("SyntaxError at {pos}: expected {}; found {found}", .expected.join(" or "))]
    Syntax {
        pos: Pos,
        expected: Vec<String>,
        found: String,
    },
    #[error("SemanticError at {pos}: {message}")]
    Semantic { pos: Pos, message: String },
    #[error("{0}")]
    Library(#[from] k2slot_core::Error),
    #[error("IoError: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn semantic(pos: Pos, message: impl Into<String>) -> CliError {
        CliError::Semantic {
            pos,
            message: message.into(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            CliError::Syntax { .. } => "SyntaxError",
            CliError::Semantic { .. } => "SemanticError",
            CliError::Library(e) => e.name(),
            CliError::Io(_) => "IoError",
        }
    }

    /// Process exit code: 1 for mathematical outcomes, 2 for bad input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Library(e) if e.is_mathematical() => 1,
            _ => 2,
        }
    }
}
