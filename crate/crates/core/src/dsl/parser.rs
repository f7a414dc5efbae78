use std::collections::{BTreeSet, HashMap};

use num_traits::ToPrimitive;

use super::lexer::{tokenize, Keyword, Token, TokenKind};
use super::{Command, DslError, Pos, Script, Statement};
use crate::poly::{LinearForm, Polynomial, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Ideal,
    Module,
    Forms,
}

impl Kind {
    fn as_str(self) -> &'static str {
        match self {
            Kind::Ideal => "ideal",
            Kind::Module => "module",
            Kind::Forms => "forms",
        }
    }
}

/// Tokenizes and parses in one step.
pub fn parse_script(text: &str) -> Result<Script, DslError> {
    parse(&tokenize(text)?)
}

/// Parses a token stream into a validated script.
pub fn parse(tokens: &[Token]) -> Result<Script, DslError> {
    let mut p = Parser { tokens, k: 0, ring: None, symbols: HashMap::new() };
    let mut statements = Vec::new();
    loop {
        statements.push(p.statement()?);
        if p.peek().is_none() {
            break;
        }
    }
    let ring = p.ring.map(|(names, _)| names).unwrap_or_default();
    Ok(Script { ring, statements })
}

/// Parses one homogeneous polynomial over the variables `names`.
pub fn parse_polynomial(names: &[String], text: &str) -> Result<Polynomial, DslError> {
    let tokens = tokenize(text)?;
    let index = names.iter().enumerate().map(|(i, n)| (n.clone(), i)).collect();
    let mut p =
        Parser { tokens: &tokens, k: 0, ring: Some((names.to_vec(), index)), symbols: HashMap::new() };
    let poly = p.checked_poly(false)?;
    match p.peek() {
        None => Ok(poly),
        Some(_) => p.error(&["'+'".into(), "'-'".into(), "'*'".into(), "end of input".into()]),
    }
}

struct Parser<'a> {
    tokens: &'a [Token],
    k: usize,
    ring: Option<(Vec<String>, HashMap<String, usize>)>,
    symbols: HashMap<String, Kind>,
}

const STATEMENT_STARTS: [Keyword; 11] = [
    Keyword::Ring,
    Keyword::Ideal,
    Keyword::Module,
    Keyword::Forms,
    Keyword::Series,
    Keyword::Coeffs,
    Keyword::Depth,
    Keyword::Superficial,
    Keyword::Admissible,
    Keyword::Verify,
    Keyword::Oracle,
];

fn kw(k: Keyword) -> String {
    format!("'{}'", k.as_str())
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&'a Token> {
        self.tokens.get(self.k)
    }

    fn pos(&self) -> Pos {
        match self.peek() {
            Some(t) => t.pos,
            None => self.tokens.last().map(|t| t.pos).unwrap_or_default(),
        }
    }

    fn error<T>(&self, expected: &[String]) -> Result<T, DslError> {
        let found = self.peek().map_or("end of input".to_string(), |t| t.kind.to_string());
        Err(DslError::Parse { pos: self.pos(), expected: expected.to_vec(), found })
    }

    fn semantic<T>(&self, pos: Pos, message: String) -> Result<T, DslError> {
        Err(DslError::Semantic { pos, message })
    }

    fn eat(&mut self, kind: &TokenKind) -> bool {
        if self.peek().map(|t| &t.kind) == Some(kind) {
            self.k += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, kind: TokenKind) -> Result<(), DslError> {
        if self.eat(&kind) {
            Ok(())
        } else {
            self.error(&[kind.to_string()])
        }
    }

    fn ident(&mut self) -> Result<(String, Pos), DslError> {
        match self.peek() {
            Some(Token { kind: TokenKind::Ident(s), pos }) => {
                self.k += 1;
                Ok((s.clone(), *pos))
            }
            _ => self.error(&["identifier".into()]),
        }
    }

    fn natural(&mut self) -> Result<usize, DslError> {
        match self.peek() {
            Some(Token { kind: TokenKind::Int(n), pos }) => {
                self.k += 1;
                n.to_usize().map_or_else(|| self.semantic(*pos, format!("integer {n} is too large")), Ok)
            }
            _ => self.error(&["integer".into()]),
        }
    }

    fn statement(&mut self) -> Result<Statement, DslError> {
        let Some(Token { kind: TokenKind::Keyword(k), pos }) = self.peek() else {
            return self.error(&STATEMENT_STARTS.map(kw));
        };
        let pos = *pos;
        if !STATEMENT_STARTS.contains(k) {
            return self.error(&STATEMENT_STARTS.map(kw));
        }
        self.k += 1;
        if *k != Keyword::Ring && self.ring.is_none() {
            return self.semantic(pos, "the ring must be declared first".into());
        }
        let stmt = match k {
            Keyword::Ring => self.ring_decl(pos)?,
            Keyword::Ideal => {
                let (name, _) = self.fresh_name()?;
                self.expect(TokenKind::Eq)?;
                let generators = self.poly_list(false)?;
                self.symbols.insert(name.clone(), Kind::Ideal);
                Statement::Ideal { name, generators }
            }
            Keyword::Module => {
                let (name, _) = self.fresh_name()?;
                self.expect(TokenKind::Eq)?;
                match self.peek() {
                    Some(Token { kind: TokenKind::Ident(r), .. }) if r == "R" => self.k += 1,
                    _ => return self.error(&["'R'".into()]),
                }
                self.expect(TokenKind::Slash)?;
                let ideal = self.reference(Kind::Ideal)?;
                let shift = if self.eat(&TokenKind::Keyword(Keyword::Shift)) { self.natural()? } else { 0 };
                self.symbols.insert(name.clone(), Kind::Module);
                Statement::Module { name, ideal, shift }
            }
            Keyword::Forms => {
                let (name, _) = self.fresh_name()?;
                self.expect(TokenKind::Eq)?;
                let polys = self.poly_list(true)?;
                let forms = polys
                    .iter()
                    .map(|p| LinearForm::from_polynomial(p).expect("checked degree one"))
                    .collect();
                self.symbols.insert(name.clone(), Kind::Forms);
                Statement::Forms { name, forms }
            }
            Keyword::Series => Statement::Command(Command::Series(self.reference(Kind::Module)?)),
            Keyword::Coeffs => Statement::Command(Command::Coeffs(self.reference(Kind::Module)?)),
            Keyword::Depth => Statement::Command(Command::Depth(self.reference(Kind::Module)?)),
            Keyword::Superficial => {
                let module = self.reference(Kind::Module)?;
                let forms = self.reference(Kind::Forms)?;
                Statement::Command(Command::Superficial { module, forms })
            }
            Keyword::Admissible => {
                let module = self.reference(Kind::Module)?;
                let forms = self.reference(Kind::Forms)?;
                Statement::Command(Command::Admissible { module, forms })
            }
            Keyword::Verify => {
                let module = self.reference(Kind::Module)?;
                let forms = self.reference(Kind::Forms)?;
                self.expect(TokenKind::Keyword(Keyword::I))?;
                self.expect(TokenKind::Eq)?;
                let i = self.natural()?;
                Statement::Command(Command::Verify { module, forms, i })
            }
            Keyword::Oracle => {
                let module = self.reference(Kind::Module)?;
                let degree = self.natural()?;
                Statement::Command(Command::Oracle { module, degree })
            }
            _ => unreachable!(),
        };
        self.expect(TokenKind::Semi)?;
        Ok(stmt)
    }

    fn ring_decl(&mut self, pos: Pos) -> Result<Statement, DslError> {
        if self.ring.is_some() {
            return self.semantic(pos, "a second ring declaration; scripts have exactly one ring".into());
        }
        let mut names = Vec::new();
        let mut index = HashMap::new();
        while let Some(Token { kind: TokenKind::Ident(_), .. }) = self.peek() {
            let (name, npos) = self.ident()?;
            if index.insert(name.clone(), names.len()).is_some() {
                return self.semantic(npos, format!("variable '{name}' declared twice"));
            }
            names.push(name);
        }
        if names.is_empty() {
            return self.error(&["identifier".into()]);
        }
        self.ring = Some((names.clone(), index));
        Ok(Statement::Ring(names))
    }

    fn fresh_name(&mut self) -> Result<(String, Pos), DslError> {
        let (name, pos) = self.ident()?;
        if let Some(kind) = self.symbols.get(&name) {
            return self.semantic(pos, format!("'{name}' is already declared as {}", kind.as_str()));
        }
        Ok((name, pos))
    }

    fn reference(&mut self, want: Kind) -> Result<String, DslError> {
        let (name, pos) = self.ident()?;
        match self.symbols.get(&name) {
            None => self.semantic(pos, format!("undeclared {} '{name}'", want.as_str())),
            Some(k) if *k != want => {
                self.semantic(pos, format!("'{name}' is {}, expected {}", k.as_str(), want.as_str()))
            }
            Some(_) => Ok(name),
        }
    }

    fn nvars(&self) -> usize {
        self.ring.as_ref().map_or(0, |(names, _)| names.len())
    }

    fn poly_list(&mut self, linear: bool) -> Result<Vec<Polynomial>, DslError> {
        let mut out = vec![self.checked_poly(linear)?];
        while self.eat(&TokenKind::Comma) {
            out.push(self.checked_poly(linear)?);
        }
        Ok(out)
    }

    fn checked_poly(&mut self, linear: bool) -> Result<Polynomial, DslError> {
        let pos = self.pos();
        let p = self.poly()?;
        if !p.is_zero() && !p.is_homogeneous() {
            let degrees: BTreeSet<u32> = p.terms().iter().map(|(m, _)| m.degree()).collect();
            let shown: Vec<String> = degrees.iter().map(u32::to_string).collect();
            return self
                .semantic(pos, format!("polynomial is not homogeneous (term degrees {})", shown.join(", ")));
        }
        if linear && p.homogeneous_degree() != Some(1) {
            let deg = p.homogeneous_degree().map_or("zero".to_string(), |d| d.to_string());
            return self.semantic(pos, format!("not degree 1: a form must be linear (degree {deg})"));
        }
        Ok(p)
    }

    fn poly(&mut self) -> Result<Polynomial, DslError> {
        let n = self.nvars();
        let mut negate = false;
        if self.eat(&TokenKind::Minus) {
            negate = true;
        } else {
            self.eat(&TokenKind::Plus);
        }
        let mut acc = Polynomial::zero(n);
        loop {
            let t = self.term()?;
            acc = if negate { acc.sub(&t) } else { acc.add(&t) };
            if self.eat(&TokenKind::Plus) {
                negate = false;
            } else if self.eat(&TokenKind::Minus) {
                negate = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, DslError> {
        let mut acc = self.atom()?;
        while self.eat(&TokenKind::Star) {
            acc = acc.mul(&self.atom()?);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Polynomial, DslError> {
        let n = self.nvars();
        let Some(tok) = self.peek() else {
            return self.error(&atom_starts());
        };
        let base = match &tok.kind {
            TokenKind::Int(v) => {
                self.k += 1;
                return Ok(Polynomial::constant(n, Rational::from_integer(v.clone())));
            }
            TokenKind::Rational(a, b) => {
                self.k += 1;
                return Ok(Polynomial::constant(n, Rational::new(a.clone(), b.clone())));
            }
            TokenKind::Ident(name) => {
                let Some(&i) = self.ring.as_ref().and_then(|(_, idx)| idx.get(name)) else {
                    return self.semantic(tok.pos, format!("undeclared variable '{name}'"));
                };
                self.k += 1;
                Polynomial::var(n, i)
            }
            TokenKind::LParen => {
                self.k += 1;
                let inner = self.poly()?;
                self.expect(TokenKind::RParen)?;
                inner
            }
            _ => return self.error(&atom_starts()),
        };
        if self.eat(&TokenKind::Caret) {
            let pos = self.pos();
            let e = self.natural()?;
            let e = u32::try_from(e).or_else(|_| self.semantic(pos, format!("exponent {e} is too large")))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }
}

fn atom_starts() -> Vec<String> {
    ["integer", "rational", "identifier", "'('"].map(String::from).to_vec()
}
