//! Text grammar for polynomials:
//!
//! ```text
//! poly     := ('+'|'-')? term (('+'|'-') term)* ;
//! term     := rational ('*'? factor)* | factor ('*'? factor)* ;
//! factor   := var ('^' uint)? ;
//! rational := int ('/' uint)? ;
//! var      := 'x' uint | one of {x, y, z, w} ;
//! ```
//!
//! `y`, `z`, `w` are surface names for `x2`, `x3`, `x4`. Errors carry the
//! byte offset of the offending position.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Monomial, PolyMap, Polynomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at offset {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(offset: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        offset,
        message: message.into(),
    })
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek();
        if b.is_some() {
            self.pos += 1;
        }
        b
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn uint(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return err(start, "expected a number");
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }
}

#[derive(Debug)]
enum Atom {
    Coefficient(Rational),
    Power { var: usize, exp: u16 },
}

/// One parsed variable reference with its source offset (for range checks).
struct VarRef {
    var: usize,
    offset: usize,
}

fn parse_var(cur: &mut Cursor) -> Result<VarRef, ParseError> {
    let offset = cur.pos;
    let letter = cur.bump().unwrap();
    match letter {
        b'x' => {
            if matches!(cur.peek(), Some(b) if b.is_ascii_digit()) {
                let idx = cur.uint()?;
                if idx.is_zero() {
                    return err(offset, "variable indices start at 1");
                }
                match u32::try_from(&idx) {
                    Ok(v) => Ok(VarRef {
                        var: v as usize,
                        offset,
                    }),
                    Err(_) => err(offset, "variable index too large"),
                }
            } else {
                Ok(VarRef { var: 1, offset })
            }
        }
        b'y' => Ok(VarRef { var: 2, offset }),
        b'z' => Ok(VarRef { var: 3, offset }),
        b'w' => Ok(VarRef { var: 4, offset }),
        other => err(
            offset,
            format!("unknown variable name '{}'", char::from(other)),
        ),
    }
}

fn parse_rational(cur: &mut Cursor) -> Result<Rational, ParseError> {
    let negative = cur.eat(b'-');
    cur.skip_ws();
    let numer = cur.uint()?;
    let numer = if negative { -numer } else { numer };
    cur.skip_ws();
    if cur.eat(b'/') {
        cur.skip_ws();
        let denom_offset = cur.pos;
        let denom = cur.uint()?;
        if denom.is_zero() {
            return err(denom_offset, "malformed rational: zero denominator");
        }
        Ok(Rational::new(numer, denom))
    } else {
        Ok(Rational::from_integer(numer))
    }
}

struct TermAtoms {
    coefficient: Rational,
    vars: Vec<(VarRef, u16)>,
}

fn parse_term(cur: &mut Cursor) -> Result<TermAtoms, ParseError> {
    let mut coefficient = Rational::from_integer(1.into());
    let mut vars = Vec::new();
    let mut saw_atom = false;
    loop {
        cur.skip_ws();
        let atom_start = cur.pos;
        let atom = match cur.peek() {
            Some(b) if b.is_ascii_digit() || b == b'-' => {
                if b == b'-' && saw_atom {
                    // A '-' after the first atom separates terms.
                    break;
                }
                Atom::Coefficient(parse_rational(cur)?)
            }
            Some(b) if b.is_ascii_alphabetic() => {
                let v = parse_var(cur)?;
                let exp = if cur.eat(b'^') {
                    let exp_offset = cur.pos;
                    let e = cur.uint().map_err(|_| ParseError {
                        offset: exp_offset,
                        message: "expected exponent after '^'".to_string(),
                    })?;
                    u16::try_from(&e).map_err(|_| ParseError {
                        offset: exp_offset,
                        message: "exponent too large".to_string(),
                    })?
                } else {
                    1
                };
                Atom::Power { var: v.var, exp }
            }
            _ => {
                if saw_atom {
                    break;
                }
                return err(atom_start, "expected a term");
            }
        };
        saw_atom = true;
        match atom {
            Atom::Coefficient(c) => coefficient *= c,
            Atom::Power { var, exp } => vars.push((VarRef { var, offset: atom_start }, exp)),
        }
        cur.skip_ws();
        if cur.eat(b'*') {
            continue;
        }
        match cur.peek() {
            Some(b) if b.is_ascii_alphanumeric() => continue,
            _ => break,
        }
    }
    Ok(TermAtoms { coefficient, vars })
}

fn parse_terms(text: &str) -> Result<Vec<(Rational, Vec<(VarRef, u16)>)>, ParseError> {
    let mut cur = Cursor::new(text);
    let mut out = Vec::new();
    cur.skip_ws();
    let mut sign = if cur.eat(b'+') {
        1
    } else if matches!(cur.peek(), Some(b'-'))
        && !matches!(cur.bytes.get(cur.pos + 1), Some(b) if b.is_ascii_digit())
    {
        cur.bump();
        -1
    } else {
        1
    };
    loop {
        let term = parse_term(&mut cur)?;
        let coeff = if sign < 0 {
            -term.coefficient
        } else {
            term.coefficient
        };
        out.push((coeff, term.vars));
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some(b'+') => {
                cur.bump();
                sign = 1;
            }
            Some(b'-') => {
                cur.bump();
                sign = -1;
            }
            Some(b) => {
                return err(cur.pos, format!("unexpected character '{}'", char::from(b)));
            }
        }
    }
    Ok(out)
}

fn build(
    n: usize,
    raw: Vec<(Rational, Vec<(VarRef, u16)>)>,
) -> Result<Polynomial, ParseError> {
    let mut poly = Polynomial::zero(n);
    for (coeff, vars) in raw {
        let mut exps = vec![0u16; n];
        for (v, e) in vars {
            if v.var > n {
                return err(
                    v.offset,
                    format!("unknown variable name: index {} exceeds dimension {n}", v.var),
                );
            }
            exps[v.var - 1] += e;
        }
        poly = &poly + &Polynomial::from_term(Monomial::from_exponents(exps), coeff);
    }
    Ok(poly)
}

/// Parse in a fixed ambient dimension; variables beyond `n` are rejected.
pub fn parse_poly_in_dim(text: &str, n: usize) -> Result<Polynomial, ParseError> {
    build(n, parse_terms(text)?)
}

/// Parse with the dimension inferred as the largest variable index used
/// (at least 1).
pub fn parse_poly(text: &str) -> Result<Polynomial, ParseError> {
    let raw = parse_terms(text)?;
    let n = raw
        .iter()
        .flat_map(|(_, vars)| vars.iter().map(|(v, _)| v.var))
        .max()
        .unwrap_or(1)
        .max(1);
    build(n, raw)
}

/// Parse a semicolon-separated list of `n` component polynomials in
/// dimension `n`.
pub fn parse_poly_map(text: &str, n: usize) -> Result<PolyMap, ParseError> {
    let mut components = Vec::new();
    let mut offset = 0usize;
    for part in text.split(';') {
        let p = parse_poly_in_dim(part, n).map_err(|e| ParseError {
            offset: offset + e.offset,
            message: e.message,
        })?;
        components.push(p);
        offset += part.len() + 1;
    }
    if components.len() != n {
        return err(
            text.len(),
            format!("expected {n} map components, found {}", components.len()),
        );
    }
    PolyMap::new(components).map_err(|msg| ParseError {
        offset: 0,
        message: msg,
    })
}

#[cfg(test)]
mod tests {
    use super::super::{int, rat};
    use super::*;

    #[test]
    fn basic_polynomials() {
        let p = parse_poly("x^3 - y^2").unwrap();
        assert_eq!(p.num_vars(), 2);
        assert_eq!(p.to_string(), "x^3 - y^2");

        let q = parse_poly("1/2*x1^2*x2").unwrap();
        assert_eq!(q.coefficient(&Monomial::from_exponents([2, 1])), rat(1, 2));
    }

    #[test]
    fn malformed_exponent_position() {
        let e = parse_poly("x^").unwrap_err();
        assert_eq!(e.offset, 2);
    }

    #[test]
    fn zero_denominator_rejected() {
        let e = parse_poly("1/0*x").unwrap_err();
        assert!(e.message.contains("malformed rational"));
    }

    #[test]
    fn unknown_variable() {
        let e = parse_poly("a + b").unwrap_err();
        assert!(e.message.contains("unknown variable"));
        let e = parse_poly_in_dim("x + z", 2).unwrap_err();
        assert!(e.message.contains("unknown variable"));
        assert_eq!(e.offset, 4);
    }

    #[test]
    fn signs_and_implicit_products() {
        assert_eq!(parse_poly("-x + 2").unwrap().to_string(), "-x + 2");
        assert_eq!(parse_poly("3x y").unwrap(), parse_poly("3*x*y").unwrap());
        assert_eq!(parse_poly("x - -2*y").unwrap(), parse_poly("x + 2*y").unwrap());
        assert_eq!(
            parse_poly("x^2*y - 4").unwrap().evaluate(&[int(2), int(1)]),
            int(0)
        );
    }

    #[test]
    fn repeated_variables_accumulate() {
        assert_eq!(parse_poly("x*x*x").unwrap(), parse_poly("x^3").unwrap());
    }

    #[test]
    fn map_parsing() {
        let phi = parse_poly_map("x ; y + x^2", 2).unwrap();
        assert_eq!(phi.dim(), 2);
        let e = parse_poly_map("x", 2).unwrap_err();
        assert!(e.message.contains("map components"));
    }

    #[test]
    fn empty_input_is_an_error() {
        assert!(parse_poly("").is_err());
        assert!(parse_poly("  ").is_err());
    }
}
