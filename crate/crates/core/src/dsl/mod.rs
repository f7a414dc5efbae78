//! The script language.
//!
//! ```text
//! script := stmt+
//! stmt   := decl ';' | cmd ';'
//! decl   := 'ring' IDENT+
//!         | 'ideal' IDENT '=' poly (',' poly)*
//!         | 'module' IDENT '=' 'R' '/' IDENT ('shift' INT)?
//!         | 'forms' IDENT '=' poly (',' poly)*        # degree one only
//! cmd    := ('series' | 'coeffs' | 'depth') IDENT
//!         | ('superficial' | 'admissible') IDENT IDENT
//!         | 'verify' IDENT IDENT 'i' '=' INT
//!         | 'oracle' IDENT INT
//! poly   := ('+' | '-')? term (('+' | '-') term)*
//! term   := atom ('*' atom)*
//! atom   := INT | RAT | IDENT ('^' INT)? | '(' poly ')' ('^' INT)?
//! ```
//!
//! `RAT` is `a/b` with no whitespace. Comments run from `#` to end of line.

use std::fmt;

use crate::poly::{LinearForm, Polynomial};

mod lexer;
mod parser;
mod printer;

pub use lexer::{tokenize, Keyword, Token, TokenKind};
pub use parser::{parse, parse_polynomial, parse_script};
pub use printer::print_script;

/// A position in the source text; line and column are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
    pub offset: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DslError {
    #[error("{pos}: lexical error: {message}")]
    Lex { pos: Pos, message: String },
    #[error("{pos}: expected {}, found {found}", expected.join(" or "))]
    Parse { pos: Pos, expected: Vec<String>, found: String },
    #[error("{pos}: {message}")]
    Semantic { pos: Pos, message: String },
}

impl DslError {
    pub fn pos(&self) -> Pos {
        match self {
            DslError::Lex { pos, .. } | DslError::Parse { pos, .. } | DslError::Semantic { pos, .. } => *pos,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Statement {
    Ring(Vec<String>),
    Ideal { name: String, generators: Vec<Polynomial> },
    Module { name: String, ideal: String, shift: usize },
    Forms { name: String, forms: Vec<LinearForm> },
    Command(Command),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Series(String),
    Coeffs(String),
    Depth(String),
    Superficial { module: String, forms: String },
    Admissible { module: String, forms: String },
    Verify { module: String, forms: String, i: usize },
    Oracle { module: String, degree: usize },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Series(_) => "series",
            Command::Coeffs(_) => "coeffs",
            Command::Depth(_) => "depth",
            Command::Superficial { .. } => "superficial",
            Command::Admissible { .. } => "admissible",
            Command::Verify { .. } => "verify",
            Command::Oracle { .. } => "oracle",
        }
    }

    pub fn module(&self) -> &str {
        match self {
            Command::Series(m) | Command::Coeffs(m) | Command::Depth(m) => m,
            Command::Superficial { module, .. }
            | Command::Admissible { module, .. }
            | Command::Verify { module, .. }
            | Command::Oracle { module, .. } => module,
        }
    }
}

/// A validated script: one ring, every name declared before use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Script {
    pub ring: Vec<String>,
    pub statements: Vec<Statement>,
}

impl Script {
    pub fn ideal(&self, name: &str) -> Option<&[Polynomial]> {
        self.statements.iter().find_map(|s| match s {
            Statement::Ideal { name: n, generators } if n == name => Some(generators.as_slice()),
            _ => None,
        })
    }

    /// `(ideal name, shift)` of a declared module.
    pub fn module(&self, name: &str) -> Option<(&str, usize)> {
        self.statements.iter().find_map(|s| match s {
            Statement::Module { name: n, ideal, shift } if n == name => Some((ideal.as_str(), *shift)),
            _ => None,
        })
    }

    pub fn forms(&self, name: &str) -> Option<&[LinearForm]> {
        self.statements.iter().find_map(|s| match s {
            Statement::Forms { name: n, forms } if n == name => Some(forms.as_slice()),
            _ => None,
        })
    }

    pub fn commands(&self) -> impl Iterator<Item = &Command> {
        self.statements.iter().filter_map(|s| match s {
            Statement::Command(c) => Some(c),
            _ => None,
        })
    }
}

impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_script(self))
    }
}
