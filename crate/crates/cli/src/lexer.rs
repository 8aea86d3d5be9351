//! Tokens of the session language.

use std::fmt;

use crate::error::{CliError, Pos};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Int(u64),
    Ident(String),
    Punct(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Punct(c) => write!(f, "`{c}`"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

const PUNCT: &str = "()[]{},;/*^+-=";

/// Splits `input` into tokens. `#` starts a comment running to the end of
/// the line.
pub fn lex(input: &str) -> Result<Vec<Token>, CliError> {
    let mut out = Vec::new();
    let mut chars = input.chars().peekable();
    let (mut line, mut col) = (1usize, 1usize);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, col };
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
        } else if c.is_whitespace() {
            chars.next();
            col += 1;
        } else if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                chars.next();
                col += 1;
            }
        } else if c.is_ascii_digit() {
            let mut n: u64 = 0;
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                n = n
                    .checked_mul(10)
                    .and_then(|n| n.checked_add(d as u64 - '0' as u64))
                    .ok_or_else(|| CliError::semantic(pos, "integer literal too large"))?;
                chars.next();
                col += 1;
            }
            out.push(Token { tok: Tok::Int(n), pos });
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_alphanumeric() || **d == '_') {
                s.push(d);
                chars.next();
                col += 1;
            }
            out.push(Token {
                tok: Tok::Ident(s),
                pos,
            });
        } else if PUNCT.contains(c) {
            chars.next();
            col += 1;
            out.push(Token {
                tok: Tok::Punct(c),
                pos,
            });
        } else {
            return Err(CliError::Syntax {
                pos,
                expected: vec!["a token".into()],
                found: format!("`{c}`"),
            });
        }
    }
    out.push(Token {
        tok: Tok::Eof,
        pos: Pos { line, col },
    });
    Ok(out)
}
