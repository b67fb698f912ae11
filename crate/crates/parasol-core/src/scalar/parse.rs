//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (whitespace insignificant, implicit multiplication rejected):
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*    // '/' needs a nonzero constant divisor
//! factor := '-' factor | power
//! power  := atom ('^' natural)?
//! atom   := natural | identifier | '(' expr ')'
//! ```
//!
//! `2*p` is required where `2p` would be ambiguous; `2p` is an error.

use super::{Rational, Scalar, ScalarError};
use crate::scalar::ParamSet;
use num_bigint::BigInt;
use num_traits::Zero;
use std::sync::Arc;

/// Parse failure with the byte offset of the offending token.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl From<ParseError> for ScalarError {
    fn from(e: ParseError) -> Self {
        ScalarError::Parse {
            offset: e.offset,
            message: e.message,
        }
    }
}

/// Parse `text` into a scalar over `params`.
pub fn parse(text: &str, params: &Arc<ParamSet>) -> Result<Scalar, ScalarError> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        params,
        end: text.len(),
    };
    let value = p.expr()?;
    if p.pos < p.tokens.len() {
        let t = &p.tokens[p.pos];
        return Err(err(t.offset, format!("unexpected `{}`", t.text)).into());
    }
    Ok(value)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    offset: usize,
    text: String,
}

fn err(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        offset,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ if c.is_ascii_digit() => {
                while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                    i += 1;
                }
                let tok = Tok::Int(text[start..i].parse().expect("digits"));
                out.push(Token {
                    tok,
                    offset: start,
                    text: text[start..i].to_string(),
                });
                continue;
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push(Token {
                    tok: Tok::Ident(text[start..i].to_string()),
                    offset: start,
                    text: text[start..i].to_string(),
                });
                continue;
            }
            _ => return Err(err(start, format!("unexpected character `{c}`"))),
        };
        i += 1;
        out.push(Token {
            tok,
            offset: start,
            text: text[start..i].to_string(),
        });
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    params: &'a Arc<ParamSet>,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|t| t.offset)
            .unwrap_or(self.end)
    }

    fn expr(&mut self) -> Result<Scalar, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.checked_add(&self.term()?).expect("same params");
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.checked_sub(&self.term()?).expect("same params");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.checked_mul(&self.factor()?).expect("same params");
                }
                Some(Tok::Slash) => {
                    let at = self.here();
                    self.bump();
                    let divisor = self.factor()?;
                    let c = divisor.as_rational().ok_or_else(|| {
                        err(at, "division by a non-constant expression is not supported")
                    })?;
                    if c.is_zero() {
                        return Err(err(at, "division by zero"));
                    }
                    acc = acc.div_rational(&c).expect("nonzero divisor");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Scalar, ParseError> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            return Ok(-self.factor()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Scalar, ParseError> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.bump();
            let at = self.here();
            match self.bump() {
                Some(Token {
                    tok: Tok::Int(n), ..
                }) => {
                    let e: u32 = n.try_into().map_err(|_| err(at, "exponent out of range"))?;
                    return Ok(base.pow(e));
                }
                _ => return Err(err(at, "expected a non-negative integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Scalar, ParseError> {
        let at = self.here();
        match self.bump() {
            Some(Token {
                tok: Tok::Int(n), ..
            }) => Ok(Scalar::from_rational(
                self.params,
                Rational::from_integer(n),
            )),
            Some(Token {
                tok: Tok::Ident(name),
                offset,
                ..
            }) => Scalar::param_named(self.params, &name)
                .ok_or_else(|| err(offset, format!("unknown identifier `{name}`"))),
            Some(Token {
                tok: Tok::LParen, ..
            }) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Token {
                        tok: Tok::RParen, ..
                    }) => Ok(inner),
                    t => Err(err(t.map(|t| t.offset).unwrap_or(self.end), "expected `)`")),
                }
            }
            Some(t) => Err(err(t.offset, format!("unexpected `{}`", t.text))),
            None => Err(err(at, "unexpected end of expression")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn pq() -> Arc<ParamSet> {
        ParamSet::new(["p", "q"]).unwrap()
    }

    #[test]
    fn parses_single_parameter() {
        let ps = pq();
        assert_eq!(parse("p", &ps).unwrap(), Scalar::param(&ps, 0));
    }

    #[test]
    fn parses_negative_rational() {
        let ps = pq();
        assert_eq!(
            parse("-1/2", &ps).unwrap(),
            Scalar::from_rational(&ps, rat(-1, 2))
        );
    }

    #[test]
    fn parses_term_by_term() {
        let ps = pq();
        let got = parse("2*p*q + 1", &ps).unwrap();
        let expected = Scalar::from_terms(&ps, [(vec![1, 1], rat(2, 1)), (vec![0, 0], rat(1, 1))]);
        assert_eq!(got, expected);
    }

    #[test]
    fn rejects_implicit_multiplication() {
        let ps = pq();
        let e = parse("2p", &ps).unwrap_err();
        match e {
            ScalarError::Parse { offset, .. } => assert_eq!(offset, 1),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_unknown_identifier() {
        let ps = pq();
        assert!(matches!(
            parse("p + r", &ps),
            Err(ScalarError::Parse { offset: 4, .. })
        ));
    }

    #[test]
    fn rejects_division_by_non_constant() {
        let ps = pq();
        let e = parse("1/p", &ps).unwrap_err();
        match e {
            ScalarError::Parse { message, .. } => {
                assert!(message.contains("non-constant"), "{message}")
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_division_by_zero() {
        let ps = pq();
        assert!(parse("p/0", &ps).is_err());
        assert!(parse("p/(1-1)", &ps).is_err());
    }

    #[test]
    fn parses_powers_and_parens() {
        let ps = pq();
        let got = parse("(p + 1)^2 - 2^3", &ps).unwrap();
        let expected = Scalar::from_terms(
            &ps,
            [
                (vec![2, 0], rat(1, 1)),
                (vec![1, 0], rat(2, 1)),
                (vec![0, 0], rat(-7, 1)),
            ],
        );
        assert_eq!(got, expected);
    }

    #[test]
    fn print_parse_round_trip_samples() {
        let ps = pq();
        for text in [
            "p^2 - 1",
            "4*p^2*q^2 + 4*p*q + 1",
            "-3/2*p + q - 5",
            "0",
            "-1/2",
            "p*q",
        ] {
            let s = parse(text, &ps).unwrap();
            assert_eq!(s.to_string(), text);
            assert_eq!(parse(&s.to_string(), &ps).unwrap(), s);
        }
    }
}
