//! Session language and batch runner for the `k2slot` command.
//!
//! A session is a field declaration followed by commands:
//!
//! ```text
//! field GF(9)=GF(3)[u]/(u^2+1) m=4;
//! k2 zero {t, 1-t};
//! slot find {t, u}, {t+1, u};
//! ```

pub mod ast;
pub mod error;
pub mod lexer;
pub mod parser;
pub mod render;
pub mod report;
pub mod run;

pub use ast::{Command, Session};
pub use error::CliError;
pub use parser::parse;
pub use render::render_session;
pub use run::{run_session, Output, SessionConfig};
