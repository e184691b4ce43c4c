//! Text syntax for polynomials: integer coefficients, named variables,
//! operators `+ - * ^`, parentheses. Example: `x^2 - y*z`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::RingRc;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

struct Lexer {
    toks: Vec<(Tok, usize)>, // token, 1-based column
    pos: usize,
    line: usize,
    end_col: usize,
}

fn lex(text: &str, line: usize) -> Result<Lexer> {
    let mut toks = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let col = i + 1;
        let c = chars[i];
        match c {
            ' ' | '\t' | '\r' => i += 1,
            '+' => {
                toks.push((Tok::Plus, col));
                i += 1;
            }
            '-' => {
                toks.push((Tok::Minus, col));
                i += 1;
            }
            '*' => {
                toks.push((Tok::Star, col));
                i += 1;
            }
            '^' => {
                toks.push((Tok::Caret, col));
                i += 1;
            }
            '(' => {
                toks.push((Tok::LParen, col));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, col));
                i += 1;
            }
            _ if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                let n = s
                    .parse::<BigInt>()
                    .map_err(|_| Error::parse(line, col, "bad integer literal"))?;
                toks.push((Tok::Int(n), col));
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_ascii_alphanumeric() || chars[i] == '_')
                {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                toks.push((Tok::Ident(s), col));
            }
            _ => return Err(Error::parse(line, col, format!("unexpected character `{c}`"))),
        }
    }
    Ok(Lexer { toks, pos: 0, line, end_col: chars.len() + 1 })
}

impl Lexer {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|(_, c)| *c).unwrap_or(self.end_col)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.line, self.col(), msg)
    }
}

pub fn parse_polynomial(ring: &RingRc, text: &str) -> Result<Polynomial> {
    parse_polynomial_at(ring, text, 1)
}

/// Parse with a caller-supplied line number for diagnostics (case files).
pub fn parse_polynomial_at(ring: &RingRc, text: &str, line: usize) -> Result<Polynomial> {
    let mut lx = lex(text, line)?;
    let p = parse_expr(ring, &mut lx)?;
    if lx.peek().is_some() {
        return Err(lx.err("trailing input after polynomial"));
    }
    Ok(p)
}

fn parse_expr(ring: &RingRc, lx: &mut Lexer) -> Result<Polynomial> {
    let mut acc;
    let negate = match lx.peek() {
        Some(Tok::Minus) => {
            lx.next();
            true
        }
        Some(Tok::Plus) => {
            lx.next();
            false
        }
        _ => false,
    };
    acc = parse_term(ring, lx)?;
    if negate {
        acc = acc.neg();
    }
    loop {
        match lx.peek() {
            Some(Tok::Plus) => {
                lx.next();
                let t = parse_term(ring, lx)?;
                acc = acc.add(&t);
            }
            Some(Tok::Minus) => {
                lx.next();
                let t = parse_term(ring, lx)?;
                acc = acc.sub(&t);
            }
            _ => return Ok(acc),
        }
    }
}

fn parse_term(ring: &RingRc, lx: &mut Lexer) -> Result<Polynomial> {
    let mut acc = parse_factor(ring, lx)?;
    while let Some(Tok::Star) = lx.peek() {
        lx.next();
        let f = parse_factor(ring, lx)?;
        acc = acc.mul(&f);
    }
    Ok(acc)
}

fn parse_factor(ring: &RingRc, lx: &mut Lexer) -> Result<Polynomial> {
    let base = parse_primary(ring, lx)?;
    if let Some(Tok::Caret) = lx.peek() {
        lx.next();
        match lx.next() {
            Some(Tok::Int(n)) => {
                let e: u32 = n
                    .try_into()
                    .map_err(|_| lx.err("exponent must be a small nonnegative integer"))?;
                Ok(base.pow(e))
            }
            _ => Err(lx.err("expected integer exponent after `^`")),
        }
    } else {
        Ok(base)
    }
}

fn parse_primary(ring: &RingRc, lx: &mut Lexer) -> Result<Polynomial> {
    let col = lx.col();
    match lx.next() {
        Some(Tok::Int(n)) => Ok(Polynomial::scalar(ring, ring.field.from_bigint(&n))),
        Some(Tok::Ident(name)) => match ring.var_index(&name) {
            Some(i) => Ok(Polynomial::var(ring, i)),
            None => Err(Error::parse(lx.line, col, format!("unknown variable `{name}`"))),
        },
        Some(Tok::LParen) => {
            let e = parse_expr(ring, lx)?;
            match lx.next() {
                Some(Tok::RParen) => Ok(e),
                _ => Err(Error::parse(lx.line, col, "unbalanced parenthesis")),
            }
        }
        Some(Tok::Minus) => {
            let e = parse_primary(ring, lx)?;
            Ok(e.neg())
        }
        _ => Err(Error::parse(lx.line, col, "expected a coefficient, variable, or `(`")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::monomial::MonomialOrder;
    use crate::ring::PolyRing;

    #[test]
    fn parses_and_prints() {
        let r = PolyRing::named(Field::Rationals, &["x", "y", "z"], MonomialOrder::DegRevLex).unwrap();
        let f = parse_polynomial(&r, "x^2 - y*z").unwrap();
        assert_eq!(f.to_string(), "x^2 - y*z");
        let g = parse_polynomial(&r, "(x + y)^2 - 2*x*y").unwrap();
        assert_eq!(g, parse_polynomial(&r, "x^2 + y^2").unwrap());
    }

    #[test]
    fn reports_unknown_variable_with_location() {
        let r = PolyRing::named(Field::Rationals, &["x"], MonomialOrder::DegRevLex).unwrap();
        let e = parse_polynomial(&r, "x + w").unwrap_err();
        match e {
            Error::Parse { col, .. } => assert_eq!(col, 5),
            other => panic!("expected parse error, got {other}"),
        }
    }

    #[test]
    fn prime_field_coefficients_reduce() {
        let r = PolyRing::named(Field::prime(7).unwrap(), &["x"], MonomialOrder::DegRevLex).unwrap();
        let f = parse_polynomial(&r, "8*x").unwrap();
        assert_eq!(f.to_string(), "x");
        let g = parse_polynomial(&r, "-x").unwrap();
        assert_eq!(g.to_string(), "6*x");
    }
}
