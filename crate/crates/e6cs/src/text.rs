//! Canonical text and JSON forms, and a parser for polynomial expressions.
//!
//! The grammar accepts sums, differences, products, quotients and integer
//! powers of integers, `k`, and `z1`..`z6`, with parentheses. Quotients
//! require a z-free divisor (denominators in z never arise). This is loose
//! enough to transcribe printed rational-coefficient polynomials verbatim;
//! printing always emits the canonical form, and `parse(print(p)) == p`.
//!
//! JSON form of a polynomial:
//! `{"terms":[{"exp":[e1..e6],"num":[c0..],"den":[d0..]}]}` with the terms in
//! ascending canonical order and integer coefficients of arbitrary size.

use crate::kappa::{KPoly, KRat};
use crate::weight::{Weight, RANK};
use crate::zpoly::ZPoly;
use num_bigint::BigInt;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ParseError {}

pub fn parse_zpoly(text: &str) -> Result<ZPoly, ParseError> {
    let mut p = Parser { text: text.as_bytes(), pos: 0 };
    p.skip_ws();
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.text.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

/// Parse a z-free expression into a rational function of k.
pub fn parse_krat(text: &str) -> Result<KRat, ParseError> {
    let p = parse_zpoly(text)?;
    zpoly_as_krat(&p).ok_or(ParseError { pos: 0, msg: "expression involves z-variables".into() })
}

fn zpoly_as_krat(p: &ZPoly) -> Option<KRat> {
    if p.is_zero() {
        return Some(KRat::zero());
    }
    if p.num_terms() == 1 {
        let (exp, c) = p.terms().next().unwrap();
        if exp.is_zero() {
            return Some(c.clone());
        }
    }
    None
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> ParseError {
        ParseError { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.text.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<ZPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    self.skip_ws();
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(b'-') => {
                    self.pos += 1;
                    self.skip_ws();
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<ZPoly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    self.skip_ws();
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Some(b'/') => {
                    self.pos += 1;
                    self.skip_ws();
                    let at = self.pos;
                    let f = self.factor()?;
                    let Some(d) = zpoly_as_krat(&f) else {
                        return Err(ParseError { pos: at, msg: "divisor must be z-free".into() });
                    };
                    if d.is_zero() {
                        return Err(ParseError { pos: at, msg: "division by zero".into() });
                    }
                    acc = acc.scale(&d.inv());
                }
                // juxtaposition like "2(1+k)" or "(1+k)(1+2k)" multiplies
                Some(b'(') | Some(b'k') | Some(b'z') => {
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<ZPoly, ParseError> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let n = self.integer()?;
            let e = u32::try_from(n).map_err(|_| self.err("exponent out of range"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<ZPoly, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                let a = self.factor()?;
                Ok(-&a)
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'k') => {
                self.pos += 1;
                Ok(ZPoly::constant(KRat::from_poly(KPoly::k())))
            }
            Some(b'z') => {
                self.pos += 1;
                match self.peek() {
                    Some(c @ b'1'..=b'6') => {
                        self.pos += 1;
                        Ok(ZPoly::var((c - b'0') as usize))
                    }
                    _ => Err(self.err("unknown variable: z must be z1..z6")),
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.bigint()?;
                Ok(ZPoly::constant(KRat::from_poly(KPoly::monomial(n, 0))))
            }
            _ => Err(self.err("expected a number, 'k', 'z1'..'z6', or '('")),
        }
    }

    fn bigint(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected digits"));
        }
        let s = std::str::from_utf8(&self.text[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        let n = self.bigint()?;
        i64::try_from(n).map_err(|_| self.err("integer out of range"))
    }
}

pub fn print_zpoly(p: &ZPoly) -> String {
    p.to_string()
}

/// JSON value for a polynomial; coefficient integers keep full precision.
pub fn zpoly_to_json(p: &ZPoly) -> serde_json::Value {
    let mut terms = Vec::new();
    for (exp, c) in p.terms() {
        let den = c.den();
        terms.push(serde_json::json!({
            "exp": exp.0.to_vec(),
            "num": ints_to_json(c.num().coeffs()),
            "den": ints_to_json(den.coeffs()),
        }));
    }
    serde_json::json!({ "terms": terms })
}

fn ints_to_json(cs: &[BigInt]) -> serde_json::Value {
    serde_json::Value::Array(
        cs.iter()
            .map(|c| {
                serde_json::Value::Number(
                    serde_json::Number::from_string_unchecked(c.to_string()),
                )
            })
            .collect(),
    )
}

pub fn zpoly_from_json(v: &serde_json::Value) -> Result<ZPoly, String> {
    let terms = v
        .get("terms")
        .and_then(|t| t.as_array())
        .ok_or("missing terms array")?;
    let mut p = ZPoly::zero();
    for t in terms {
        let exp = t.get("exp").and_then(|e| e.as_array()).ok_or("missing exp")?;
        if exp.len() != RANK {
            return Err("exp must have six entries".into());
        }
        let mut m = [0i32; RANK];
        for (i, e) in exp.iter().enumerate() {
            m[i] = e.as_i64().ok_or("bad exponent")? as i32;
        }
        let num = json_to_ints(t.get("num").ok_or("missing num")?)?;
        let den = json_to_ints(t.get("den").ok_or("missing den")?)?;
        let den = KPoly::from_coeffs(den);
        if den.is_zero() {
            return Err("zero denominator".into());
        }
        p.add_term(Weight(m), &KRat::new(KPoly::from_coeffs(num), den));
    }
    Ok(p)
}

fn json_to_ints(v: &serde_json::Value) -> Result<Vec<BigInt>, String> {
    let arr = v.as_array().ok_or("expected array")?;
    arr.iter()
        .map(|x| match x {
            serde_json::Value::Number(n) => {
                n.to_string().parse::<BigInt>().map_err(|e| e.to_string())
            }
            serde_json::Value::String(s) => s.parse::<BigInt>().map_err(|e| e.to_string()),
            _ => Err("expected integer".into()),
        })
        .collect()
}

/// KRat as a small JSON object (used by series reports).
pub fn krat_to_json(c: &KRat) -> serde_json::Value {
    let den = c.den();
    serde_json::json!({
        "num": ints_to_json(c.num().coeffs()),
        "den": ints_to_json(den.coeffs()),
    })
}

/// Strip `#` comments and join all remaining lines into one expression.
pub fn strip_comments(payload: &str) -> String {
    payload
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_polynomials() {
        let p = parse_zpoly("z1^2 - (2/(1+k))*z3").unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.to_string(), "z1^2 - (2)/(1 + k)*z3");
        // juxtaposed products as printed in tables
        let q = parse_zpoly("10(1+3k)/((1+4k)(1+7k))").unwrap();
        let c = zpoly_as_krat(&q).unwrap();
        assert_eq!(c.to_string(), "(10 + 30*k)/(1 + 11*k + 28*k^2)");
    }

    #[test]
    fn unknown_variable_errors() {
        let e = parse_zpoly("z7").unwrap_err();
        assert!(e.msg.contains("unknown variable"));
        assert_eq!(e.pos, 1);
    }

    #[test]
    fn malformed_input_positions() {
        let e = parse_zpoly("z1 + ").unwrap_err();
        assert_eq!(e.pos, 5);
        assert!(parse_zpoly("(z1").is_err());
        assert!(parse_zpoly("z1 z2 )").is_err());
    }

    #[test]
    fn division_requires_zfree() {
        let e = parse_zpoly("1/z1").unwrap_err();
        assert!(e.msg.contains("z-free"));
    }

    #[test]
    fn print_parse_round_trip() {
        let p = parse_zpoly("z1*z6 - 6/(1+5*k)*z2 - 9*(-1+7*k)/((1+5*k)*(1+8*k))").unwrap();
        let q = parse_zpoly(&print_zpoly(&p)).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn json_round_trip() {
        let p = parse_zpoly("z1*z6 - 6/(1+5*k)*z2 + 123456789012345678901234567890").unwrap();
        let v = zpoly_to_json(&p);
        let q = zpoly_from_json(&v).unwrap();
        assert_eq!(p, q);
        let s = serde_json::to_string(&v).unwrap();
        let v2: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(zpoly_from_json(&v2).unwrap(), p);
    }
}
