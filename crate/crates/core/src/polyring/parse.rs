//! A small infix parser: `w1^2 - (g3 + d2*w2)*w2`, `3/2*x*y`, `-h1`.

use crate::error::{Error, Result};
use crate::exactnum::Fraction;

use super::Poly;

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(i64),
    Ident(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(pos, ch)) = chars.peek() {
        if ch.is_whitespace() {
            chars.next();
        } else if ch.is_ascii_digit() {
            let mut end = pos;
            while let Some(&(i, c)) = chars.peek() {
                if !c.is_ascii_digit() {
                    break;
                }
                end = i + c.len_utf8();
                chars.next();
            }
            let n = src[pos..end]
                .parse()
                .map_err(|_| Error::Parse(format!("integer out of range at {pos}")))?;
            out.push(Token::Num(n));
        } else if ch.is_alphabetic() || ch == '_' {
            let mut end = pos;
            while let Some(&(i, c)) = chars.peek() {
                if !(c.is_alphanumeric() || c == '_') {
                    break;
                }
                end = i + c.len_utf8();
                chars.next();
            }
            out.push(Token::Ident(src[pos..end].to_string()));
        } else if "+-*/^()".contains(ch) {
            out.push(Token::Op(ch));
            chars.next();
        } else {
            return Err(Error::Parse(format!("unexpected character {ch:?} at {pos}")));
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly> {
        if self.eat('-') {
            return Ok(-self.factor()?);
        }
        let base = self.atom()?;
        if self.eat('^') {
            match self.tokens.get(self.pos).cloned() {
                Some(Token::Num(e)) if e >= 0 && e <= u32::MAX as i64 => {
                    self.pos += 1;
                    Ok(base.pow(e as u32))
                }
                other => Err(Error::Parse(format!("expected exponent, found {other:?}"))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.tokens.get(self.pos).cloned() {
            Some(Token::Num(p)) => {
                self.pos += 1;
                if self.eat('/') {
                    match self.tokens.get(self.pos).cloned() {
                        Some(Token::Num(q)) => {
                            self.pos += 1;
                            Ok(Poly::constant(Fraction::new(p, q)?))
                        }
                        other => Err(Error::Parse(format!("expected denominator, found {other:?}"))),
                    }
                } else {
                    Ok(Poly::constant(p))
                }
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                Ok(Poly::var(&name))
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing closing parenthesis".into()));
                }
                Ok(inner)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parses an infix polynomial. Variables are introduced in order of first
/// appearance.
pub fn parse_poly(src: &str) -> Result<Poly> {
    let tokens = tokenize(src)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut p = Parser { tokens, pos: 0 };
    let out = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(out)
}

impl std::str::FromStr for Poly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Poly> {
        parse_poly(s)
    }
}
