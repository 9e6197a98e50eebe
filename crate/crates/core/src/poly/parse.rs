//! Expression parser for the polynomial text grammar.
//!
//! Grammar (UTF-8 text): integer literals, rationals as `p/q`, variables
//! from a declared name list, operators `+ - * ^`, parentheses, unary
//! minus. Multiplication is always explicit (`2*x1`, never `2x1`), and
//! `^` binds tightest with a nonnegative integer exponent.

use crate::poly::MultiPoly;
use crate::{Int, Rat};

/// Syntax error with the byte offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        position,
        message: message.into(),
    })
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            b'-' => {
                toks.push((i, Tok::Minus));
                i += 1;
            }
            b'*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            b'^' => {
                toks.push((i, Tok::Caret));
                i += 1;
            }
            b'/' => {
                toks.push((i, Tok::Slash));
                i += 1;
            }
            b'(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            b')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                toks.push((start, Tok::Int(text[start..i].to_string())));
            }
            b'A'..=b'Z' | b'a'..=b'z' | b'_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((start, Tok::Ident(text[start..i].to_string())));
            }
            _ => return err(i, format!("unexpected character {:?}", text[i..].chars().next().unwrap())),
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    end: usize,
    vars: Vec<String>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<&(usize, Tok)> {
        let t = self.toks.get(self.pos);
        self.pos += 1;
        t
    }

    fn nvars(&self) -> usize {
        self.vars.len()
    }

    fn expr(&mut self) -> Result<MultiPoly<Rat>, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = acc.add_ref(&rhs);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = acc.sub_ref(&rhs);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly<Rat>, ParseError> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.bump();
            let rhs = self.factor()?;
            acc = acc.mul_ref(&rhs);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly<Rat>, ParseError> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            let inner = self.factor()?;
            return Ok(inner.neg_ref());
        }
        self.power()
    }

    fn power(&mut self) -> Result<MultiPoly<Rat>, ParseError> {
        let mut base = self.atom()?;
        while matches!(self.peek(), Some(Tok::Caret)) {
            self.bump();
            let at = self.here();
            match self.bump().cloned() {
                Some((_, Tok::Int(digits))) => {
                    let e: u32 = digits
                        .parse()
                        .map_err(|_| ParseError {
                            position: at,
                            message: format!("exponent {digits} out of range"),
                        })?;
                    base = base.pow(e);
                }
                _ => return err(at, "expected a nonnegative integer exponent after `^`"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly<Rat>, ParseError> {
        let at = self.here();
        match self.bump().cloned() {
            Some((_, Tok::LParen)) => {
                let inner = self.expr()?;
                let close = self.here();
                match self.bump() {
                    Some((_, Tok::RParen)) => Ok(inner),
                    _ => err(close, "expected `)`"),
                }
            }
            Some((_, Tok::Int(numer))) => {
                let num: Int = numer.parse().expect("digits parse as integer");
                // `p/q` is a single rational literal: `/` is only valid
                // directly between two integer literals.
                if matches!(self.peek(), Some(Tok::Slash)) {
                    self.bump();
                    let dat = self.here();
                    match self.bump().cloned() {
                        Some((_, Tok::Int(denom))) => {
                            let den: Int = denom.parse().expect("digits parse as integer");
                            if den == Int::from(0) {
                                return err(dat, "zero denominator");
                            }
                            Ok(MultiPoly::constant(self.nvars(), Rat::new(num, den)))
                        }
                        _ => err(dat, "expected an integer denominator after `/`"),
                    }
                } else {
                    Ok(MultiPoly::constant(
                        self.nvars(),
                        Rat::from_integer(num),
                    ))
                }
            }
            Some((_, Tok::Ident(name))) => {
                match self.vars.iter().position(|v| *v == name) {
                    Some(idx) => Ok(MultiPoly::variable(self.nvars(), idx)),
                    None => err(at, format!("unknown variable `{name}`")),
                }
            }
            Some((p, t)) => err(p, format!("unexpected token {t:?}")),
            None => err(at, "unexpected end of input"),
        }
    }
}

/// Parse `text` as a polynomial in the declared variables.
pub fn parse_poly<S: AsRef<str>>(
    text: &str,
    variables: &[S],
) -> Result<MultiPoly<Rat>, ParseError> {
    let toks = lex(text)?;
    let mut parser = Parser {
        toks: &toks,
        pos: 0,
        end: text.len(),
        vars: variables.iter().map(|s| s.as_ref().to_string()).collect(),
    };
    if parser.peek().is_none() {
        return err(0, "empty input");
    }
    let poly = parser.expr()?;
    if parser.peek().is_some() {
        let at = parser.here();
        return err(at, "trailing input after expression");
    }
    Ok(poly)
}
