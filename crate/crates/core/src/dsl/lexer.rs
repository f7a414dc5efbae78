use std::fmt;

use num_bigint::BigInt;

use super::{DslError, Pos};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Keyword {
    Ring,
    Ideal,
    Module,
    Forms,
    Shift,
    Series,
    Coeffs,
    Depth,
    Superficial,
    Admissible,
    Verify,
    Oracle,
    I,
}

impl Keyword {
    pub const ALL: [Keyword; 13] = [
        Keyword::Ring,
        Keyword::Ideal,
        Keyword::Module,
        Keyword::Forms,
        Keyword::Shift,
        Keyword::Series,
        Keyword::Coeffs,
        Keyword::Depth,
        Keyword::Superficial,
        Keyword::Admissible,
        Keyword::Verify,
        Keyword::Oracle,
        Keyword::I,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Keyword::Ring => "ring",
            Keyword::Ideal => "ideal",
            Keyword::Module => "module",
            Keyword::Forms => "forms",
            Keyword::Shift => "shift",
            Keyword::Series => "series",
            Keyword::Coeffs => "coeffs",
            Keyword::Depth => "depth",
            Keyword::Superficial => "superficial",
            Keyword::Admissible => "admissible",
            Keyword::Verify => "verify",
            Keyword::Oracle => "oracle",
            Keyword::I => "i",
        }
    }

    fn from_word(w: &str) -> Option<Keyword> {
        Self::ALL.into_iter().find(|k| k.as_str() == w)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Keyword(Keyword),
    Ident(String),
    Int(BigInt),
    /// `a/b` written without whitespace; `b` is nonzero
    Rational(BigInt, BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    Eq,
    Comma,
    Semi,
    LParen,
    RParen,
    Slash,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Keyword(k) => write!(f, "'{}'", k.as_str()),
            TokenKind::Ident(s) => write!(f, "identifier '{s}'"),
            TokenKind::Int(n) => write!(f, "integer {n}"),
            TokenKind::Rational(a, b) => write!(f, "rational {a}/{b}"),
            TokenKind::Plus => f.write_str("'+'"),
            TokenKind::Minus => f.write_str("'-'"),
            TokenKind::Star => f.write_str("'*'"),
            TokenKind::Caret => f.write_str("'^'"),
            TokenKind::Eq => f.write_str("'='"),
            TokenKind::Comma => f.write_str("','"),
            TokenKind::Semi => f.write_str("';'"),
            TokenKind::LParen => f.write_str("'('"),
            TokenKind::RParen => f.write_str("')'"),
            TokenKind::Slash => f.write_str("'/'"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub pos: Pos,
}

/// Splits `text` into tokens; `#` starts a comment running to end of line.
pub fn tokenize(text: &str) -> Result<Vec<Token>, DslError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut tokens = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut k = 0;
    let advance = |k: &mut usize, line: &mut usize, col: &mut usize| {
        if chars[*k].1 == '\n' {
            *line += 1;
            *col = 1;
        } else {
            *col += 1;
        }
        *k += 1;
    };
    while k < chars.len() {
        let (offset, c) = chars[k];
        let pos = Pos { line, column: col, offset };
        if c.is_whitespace() {
            advance(&mut k, &mut line, &mut col);
            continue;
        }
        if c == '#' {
            while k < chars.len() && chars[k].1 != '\n' {
                advance(&mut k, &mut line, &mut col);
            }
            continue;
        }
        let single = match c {
            '+' => Some(TokenKind::Plus),
            '-' => Some(TokenKind::Minus),
            '*' => Some(TokenKind::Star),
            '^' => Some(TokenKind::Caret),
            '=' => Some(TokenKind::Eq),
            ',' => Some(TokenKind::Comma),
            ';' => Some(TokenKind::Semi),
            '(' => Some(TokenKind::LParen),
            ')' => Some(TokenKind::RParen),
            '/' => Some(TokenKind::Slash),
            _ => None,
        };
        if let Some(kind) = single {
            tokens.push(Token { kind, pos });
            advance(&mut k, &mut line, &mut col);
            continue;
        }
        if c.is_ascii_digit() {
            let num = take_while(&chars, &mut k, &mut line, &mut col, |c| c.is_ascii_digit(), advance);
            let value: BigInt = num.parse().expect("digits");
            let rational = k + 1 < chars.len() && chars[k].1 == '/' && chars[k + 1].1.is_ascii_digit();
            if rational {
                advance(&mut k, &mut line, &mut col);
                let den = take_while(&chars, &mut k, &mut line, &mut col, |c| c.is_ascii_digit(), advance);
                let den: BigInt = den.parse().expect("digits");
                if den == BigInt::from(0) {
                    return Err(DslError::Lex { pos, message: "zero denominator".into() });
                }
                tokens.push(Token { kind: TokenKind::Rational(value, den), pos });
            } else {
                tokens.push(Token { kind: TokenKind::Int(value), pos });
            }
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let word = take_while(
                &chars,
                &mut k,
                &mut line,
                &mut col,
                |c| c.is_alphanumeric() || c == '_' || c == '\'',
                advance,
            );
            let kind = match Keyword::from_word(&word) {
                Some(kw) => TokenKind::Keyword(kw),
                None => TokenKind::Ident(word),
            };
            tokens.push(Token { kind, pos });
            continue;
        }
        return Err(DslError::Lex { pos, message: format!("illegal character {c:?}") });
    }
    Ok(tokens)
}

fn take_while(
    chars: &[(usize, char)],
    k: &mut usize,
    line: &mut usize,
    col: &mut usize,
    pred: impl Fn(char) -> bool,
    advance: impl Fn(&mut usize, &mut usize, &mut usize),
) -> String {
    let mut out = String::new();
    while *k < chars.len() && pred(chars[*k].1) {
        out.push(chars[*k].1);
        advance(k, line, col);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(text: &str) -> Vec<TokenKind> {
        tokenize(text).unwrap().into_iter().map(|t| t.kind).collect()
    }

    fn id(s: &str) -> TokenKind {
        TokenKind::Ident(s.into())
    }

    #[test]
    fn ideal_statement() {
        use TokenKind::*;
        assert_eq!(
            kinds("ideal I = x1*y1, x2*y1;"),
            vec![
                Keyword(super::Keyword::Ideal),
                id("I"),
                Eq,
                id("x1"),
                Star,
                id("y1"),
                Comma,
                id("x2"),
                Star,
                id("y1"),
                Semi
            ]
        );
    }

    #[test]
    fn rationals_and_minus() {
        use TokenKind::*;
        assert_eq!(
            kinds("1/2*x1^2"),
            vec![Rational(1.into(), 2.into()), Star, id("x1"), Caret, Int(2.into())]
        );
        assert!(kinds("forms F = y1 - x1;").contains(&Minus));
        assert_eq!(kinds("1 / 2"), vec![Int(1.into()), Slash, Int(2.into())]);
        assert_eq!(kinds("R/I"), vec![id("R"), Slash, id("I")]);
    }

    #[test]
    fn comments_and_positions() {
        let toks = tokenize("# header\nring x y; # trailing\n  depth M;").unwrap();
        assert_eq!(toks[0].pos, Pos { line: 2, column: 1, offset: 9 });
        let depth = toks.iter().find(|t| t.kind == TokenKind::Keyword(Keyword::Depth)).unwrap();
        assert_eq!((depth.pos.line, depth.pos.column), (3, 3));
    }

    #[test]
    fn illegal_character() {
        let err = tokenize("ring x;\nideal I = x @ y;").unwrap_err();
        match err {
            DslError::Lex { pos, .. } => assert_eq!((pos.line, pos.column), (2, 13)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(tokenize("3/0").is_err());
    }
}
