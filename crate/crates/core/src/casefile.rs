//! Line-oriented case files describing one algebra and an optional test
//! ideal:
//!
//! ```text
//! # the line with an embedded point
//! field F 32003
//! ring x y
//! order degrevlex
//! ideal I: x^2, x*y
//! ideal a: x, y
//! expect e 1
//! expect N 2
//! ```
//!
//! `field Q` or `field F <p>`; `order` defaults to degrevlex; `ideal I` may
//! be omitted for the polynomial ring itself. A `/` separates lines when a
//! case is written inline.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::hilbert::QuotientPresentation;
use crate::monomial::MonomialOrder;
use crate::parse::parse_polynomial_at;
use crate::poly::Polynomial;
use crate::ring::{PolyRing, RingRc};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpectKey {
    Dim,
    Depth,
    E,
    N,
    Mu,
    Type,
    Height,
}

impl ExpectKey {
    pub fn as_str(&self) -> &'static str {
        match self {
            ExpectKey::Dim => "dim",
            ExpectKey::Depth => "depth",
            ExpectKey::E => "e",
            ExpectKey::N => "N",
            ExpectKey::Mu => "mu",
            ExpectKey::Type => "type",
            ExpectKey::Height => "height",
        }
    }

    fn parse(s: &str) -> Option<ExpectKey> {
        Some(match s {
            "dim" => ExpectKey::Dim,
            "depth" => ExpectKey::Depth,
            "e" => ExpectKey::E,
            "N" => ExpectKey::N,
            "mu" => ExpectKey::Mu,
            "type" => ExpectKey::Type,
            "height" => ExpectKey::Height,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone)]
pub struct CaseFile {
    pub id: String,
    pub ring: RingRc,
    pub defining: Vec<Polynomial>,
    pub test_ideal: Option<Vec<Polynomial>>,
    pub expects: Vec<(ExpectKey, i64)>,
}

impl PartialEq for CaseFile {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring
            && self.defining == other.defining
            && self.test_ideal == other.test_ideal
            && self.expects == other.expects
    }
}

impl CaseFile {
    pub fn quotient(&self) -> Result<QuotientPresentation> {
        QuotientPresentation::new(&self.ring, self.defining.clone())
    }
}

pub fn parse_case(text: &str, id: &str) -> Result<CaseFile> {
    // strip comments first, then let `/` separate lines for inline one-liners
    let mut lines: Vec<(usize, String)> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let no_comment = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        for piece in no_comment.split('/') {
            lines.push((ln + 1, piece.to_string()));
        }
    }

    let mut field: Option<Field> = None;
    let mut vars: Option<Vec<String>> = None;
    let mut order = MonomialOrder::DegRevLex;
    let mut defining_src: Option<(usize, String)> = None;
    let mut test_src: Option<(usize, String)> = None;
    let mut expects: Vec<(ExpectKey, i64)> = Vec::new();

    for (line_no, raw) in &lines {
        let line_no = *line_no;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        let head = words.next().expect("nonempty line");
        match head {
            "field" => {
                let kind = words
                    .next()
                    .ok_or_else(|| Error::parse(line_no, 1, "expected `Q` or `F <p>` after `field`"))?;
                field = Some(match kind {
                    "Q" => Field::Rationals,
                    "F" => {
                        let p: u64 = words
                            .next()
                            .and_then(|w| w.parse().ok())
                            .ok_or_else(|| Error::parse(line_no, 1, "expected a prime modulus after `F`"))?;
                        Field::prime(p).map_err(|e| match e {
                            Error::Input(msg) => Error::parse(line_no, 1, msg),
                            other => other,
                        })?
                    }
                    other => {
                        return Err(Error::parse(line_no, 1, format!("unknown field `{other}`")))
                    }
                });
            }
            "ring" => {
                let names: Vec<String> = words.map(|w| w.to_string()).collect();
                if names.is_empty() {
                    return Err(Error::parse(line_no, 1, "ring line needs at least one variable"));
                }
                vars = Some(names);
            }
            "order" => {
                let kind = words
                    .next()
                    .ok_or_else(|| Error::parse(line_no, 1, "expected an order name"))?;
                order = match kind {
                    "degrevlex" => MonomialOrder::DegRevLex,
                    "lex" => MonomialOrder::Lex,
                    "block" => {
                        let k: usize = words
                            .next()
                            .and_then(|w| w.parse().ok())
                            .ok_or_else(|| Error::parse(line_no, 1, "expected block size"))?;
                        MonomialOrder::Block(k)
                    }
                    other => {
                        return Err(Error::parse(line_no, 1, format!("unknown order `{other}`")))
                    }
                };
            }
            "ideal" => {
                let rest = line["ideal".len()..].trim();
                let (name, body) = rest
                    .split_once(':')
                    .ok_or_else(|| Error::parse(line_no, 1, "expected `ideal <name>: <polys>`"))?;
                match name.trim() {
                    "I" => defining_src = Some((line_no, body.to_string())),
                    "a" => test_src = Some((line_no, body.to_string())),
                    other => {
                        return Err(Error::parse(
                            line_no,
                            1,
                            format!("unknown ideal name `{other}`; use `I` or `a`"),
                        ))
                    }
                }
            }
            "expect" => {
                let key = words
                    .next()
                    .and_then(ExpectKey::parse)
                    .ok_or_else(|| Error::parse(line_no, 1, "unknown expect key"))?;
                let val: i64 = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| Error::parse(line_no, 1, "expected an integer expectation"))?;
                expects.push((key, val));
            }
            other => {
                return Err(Error::parse(line_no, 1, format!("unknown directive `{other}`")));
            }
        }
    }

    let field = field.ok_or_else(|| Error::parse(1, 1, "missing `field` line"))?;
    let vars = vars.ok_or_else(|| Error::parse(1, 1, "missing `ring` line"))?;
    let ring = PolyRing::new(field, vars, order)?;

    let parse_list = |src: &Option<(usize, String)>| -> Result<Vec<Polynomial>> {
        let Some((line_no, body)) = src else { return Ok(Vec::new()) };
        let body = body.trim();
        if body.is_empty() || body == "0" {
            return Ok(Vec::new());
        }
        body.split(',')
            .map(|s| parse_polynomial_at(&ring, s, *line_no))
            .collect()
    };
    let defining = parse_list(&defining_src)?;
    let test_ideal = match &test_src {
        None => None,
        Some(_) => Some(parse_list(&test_src)?),
    };

    Ok(CaseFile { id: id.to_string(), ring, defining, test_ideal, expects })
}

impl fmt::Display for CaseFile {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(out, "field {}", self.ring.field.describe())?;
        writeln!(out, "ring {}", self.ring.var_names().join(" "))?;
        writeln!(out, "order {}", self.ring.order.describe())?;
        if !self.defining.is_empty() {
            let polys: Vec<String> = self.defining.iter().map(|p| p.to_string()).collect();
            writeln!(out, "ideal I: {}", polys.join(", "))?;
        }
        if let Some(a) = &self.test_ideal {
            let polys: Vec<String> = a.iter().map(|p| p.to_string()).collect();
            writeln!(out, "ideal a: {}", polys.join(", "))?;
        }
        for (k, v) in &self.expects {
            writeln!(out, "expect {} {}", k.as_str(), v)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_case_parses() {
        let c = parse_case("field Q\nring x\n", "t").unwrap();
        assert!(c.defining.is_empty());
        assert!(c.test_ideal.is_none());
    }

    #[test]
    fn inline_slash_form_parses() {
        let c = parse_case("field F 32003 / ring x y / ideal I: x^2, x*y / ideal a: x, y", "t")
            .unwrap();
        assert_eq!(c.defining.len(), 2);
        assert_eq!(c.test_ideal.as_ref().unwrap().len(), 2);
        assert_eq!(c.ring.field, Field::prime(32003).unwrap());
    }

    #[test]
    fn non_prime_modulus_rejected() {
        assert!(parse_case("field F 4\nring x\n", "t").is_err());
    }

    #[test]
    fn print_parse_roundtrip() {
        let src = "field F 32003\nring x y\nideal I: x^2, x*y\nideal a: x, y\nexpect e 1\nexpect N 2\n";
        let c1 = parse_case(src, "t").unwrap();
        let printed = c1.to_string();
        let c2 = parse_case(&printed, "t").unwrap();
        assert_eq!(c1, c2);
    }

    #[test]
    fn comments_and_blank_lines_ignored() {
        let src = "# a comment\nfield Q\n\nring x y # trailing\nideal I: x*y\n";
        let c = parse_case(src, "t").unwrap();
        assert_eq!(c.defining.len(), 1);
    }
}
