//! Recursive-descent parser for scalar expressions.
//!
//! Grammar (whitespace-insensitive):
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('-' | '+')* power
//! power  := atom ('^' INT)?
//! atom   := INT | IDENT | '(' expr ')'
//! ```
//! Identifiers match `[a-zA-Z][a-zA-Z0-9_]*`; integers are unsigned decimal
//! literals. The same syntax serves polynomials (denominator 1 after
//! normalization) and rational constants.

use num_bigint::BigInt;

use super::scalar::Scalar;
use super::Rational;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
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

struct Lexer {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    len: usize,
}

impl Lexer {
    fn new(text: &str) -> Result<Lexer> {
        let bytes = text.as_bytes();
        let mut tokens = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i] as char;
            match c {
                ' ' | '\t' | '\r' | '\n' => i += 1,
                '+' => {
                    tokens.push((Token::Plus, i));
                    i += 1;
                }
                '-' => {
                    tokens.push((Token::Minus, i));
                    i += 1;
                }
                '*' => {
                    tokens.push((Token::Star, i));
                    i += 1;
                }
                '/' => {
                    tokens.push((Token::Slash, i));
                    i += 1;
                }
                '^' => {
                    tokens.push((Token::Caret, i));
                    i += 1;
                }
                '(' => {
                    tokens.push((Token::LParen, i));
                    i += 1;
                }
                ')' => {
                    tokens.push((Token::RParen, i));
                    i += 1;
                }
                '0'..='9' => {
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let n: BigInt = text[start..i].parse().expect("digits");
                    tokens.push((Token::Int(n), start));
                }
                'a'..='z' | 'A'..='Z' => {
                    let start = i;
                    while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                    {
                        i += 1;
                    }
                    tokens.push((Token::Ident(text[start..i].to_string()), start));
                }
                _ => {
                    return Err(Error::parse(format!(
                        "unexpected character `{c}` at byte {i}"
                    )))
                }
            }
        }
        Ok(Lexer {
            tokens,
            pos: 0,
            len: text.len(),
        })
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(_, p)| *p)
            .unwrap_or(self.len)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: &Token, what: &str) -> Result<()> {
        let at = self.here();
        match self.next() {
            Some(ref t) if t == want => Ok(()),
            _ => Err(Error::parse(format!("expected {what} at byte {at}"))),
        }
    }
}

/// Parses a scalar expression.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let mut lx = Lexer::new(text)?;
    if lx.peek().is_none() {
        return Err(Error::parse("empty expression"));
    }
    let v = parse_expr(&mut lx)?;
    if lx.peek().is_some() {
        return Err(Error::parse(format!(
            "trailing input at byte {} in `{text}`",
            lx.here()
        )));
    }
    Ok(v)
}

fn parse_expr(lx: &mut Lexer) -> Result<Scalar> {
    let mut acc = parse_term(lx)?;
    loop {
        match lx.peek() {
            Some(Token::Plus) => {
                lx.next();
                acc = &acc + &parse_term(lx)?;
            }
            Some(Token::Minus) => {
                lx.next();
                acc = &acc - &parse_term(lx)?;
            }
            _ => return Ok(acc),
        }
    }
}

fn parse_term(lx: &mut Lexer) -> Result<Scalar> {
    let mut acc = parse_unary(lx)?;
    loop {
        match lx.peek() {
            Some(Token::Star) => {
                lx.next();
                acc = &acc * &parse_unary(lx)?;
            }
            Some(Token::Slash) => {
                lx.next();
                let at = lx.here();
                let rhs = parse_unary(lx)?;
                acc = acc
                    .div(&rhs)
                    .map_err(|_| Error::parse(format!("division by zero at byte {at}")))?;
            }
            _ => return Ok(acc),
        }
    }
}

fn parse_unary(lx: &mut Lexer) -> Result<Scalar> {
    match lx.peek() {
        Some(Token::Minus) => {
            lx.next();
            Ok(-&parse_unary(lx)?)
        }
        Some(Token::Plus) => {
            lx.next();
            parse_unary(lx)
        }
        _ => parse_power(lx),
    }
}

fn parse_power(lx: &mut Lexer) -> Result<Scalar> {
    let base = parse_atom(lx)?;
    if lx.peek() == Some(&Token::Caret) {
        lx.next();
        let at = lx.here();
        match lx.next() {
            Some(Token::Int(n)) => {
                let e = i64::try_from(&n)
                    .ok()
                    .filter(|e| *e >= 0)
                    .ok_or_else(|| Error::parse(format!("exponent out of range at byte {at}")))?;
                base.pow(e)
            }
            _ => Err(Error::parse(format!(
                "expected integer exponent at byte {at}"
            ))),
        }
    } else {
        Ok(base)
    }
}

fn parse_atom(lx: &mut Lexer) -> Result<Scalar> {
    let at = lx.here();
    match lx.next() {
        Some(Token::Int(n)) => Ok(Scalar::from_rational(Rational::from_integer(n))),
        Some(Token::Ident(name)) => Ok(Scalar::var(&name)),
        Some(Token::LParen) => {
            let v = parse_expr(lx)?;
            lx.expect(&Token::RParen, "closing parenthesis")?;
            Ok(v)
        }
        _ => Err(Error::parse(format!(
            "expected number, variable, or parenthesized expression at byte {at}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, rat_int};
    use super::*;

    #[test]
    fn precedence_and_associativity() {
        let v = parse_scalar("2 + 3*4").unwrap();
        assert_eq!(v.as_rational(), Some(rat_int(14)));
        let v = parse_scalar("2*3^2").unwrap();
        assert_eq!(v.as_rational(), Some(rat_int(18)));
        let v = parse_scalar("8/4/2").unwrap();
        assert_eq!(v.as_rational(), Some(rat_int(1)));
        let v = parse_scalar("-2^2").unwrap();
        assert_eq!(v.as_rational(), Some(rat_int(-4)));
    }

    #[test]
    fn rationals_via_division() {
        assert_eq!(parse_scalar("3/4").unwrap().as_rational(), Some(rat(3, 4)));
        assert_eq!(
            parse_scalar("(1/2)^3").unwrap().as_rational(),
            Some(rat(1, 8))
        );
    }

    #[test]
    fn variables_and_parens() {
        let v = parse_scalar("(x + y)*(x - y)").unwrap();
        assert_eq!(v, parse_scalar("x^2 - y^2").unwrap());
    }

    #[test]
    fn error_positions() {
        let err = parse_scalar("x + ").unwrap_err().to_string();
        assert!(err.contains("byte 4"), "{err}");
        let err = parse_scalar("(x + 1").unwrap_err().to_string();
        assert!(err.contains("parenthesis"), "{err}");
        assert!(parse_scalar("x $ y").is_err());
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x^y").is_err());
    }
}
