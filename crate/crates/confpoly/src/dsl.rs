//! Textual expression language for vector fields.
//!
//! Grammar (whitespace insignificant between tokens):
//!
//! ```text
//! field  := term { ("+" | "-") term } ;
//! term   := [ coeff ] { factor } "d" INT ;
//! factor := "x" INT [ "^" INT ] ;
//! coeff  := INT [ "/" INT ] ;
//! ```
//!
//! Variables and directions are 1-indexed; a leading "-" folds into the
//! coefficient of the first term. The single token `0` denotes the zero
//! field. `parse_field` and `print_field` are mutually inverse on
//! canonical output.

use std::fmt;

use num_traits::{Num, One, Signed};

use crate::poly::Monomial;
use crate::scalar::Scalar;
use crate::vector_field::VectorField;

/// Lexical or syntactic error with a byte position in the source text.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {position}: {message}")]
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

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(String),
    Var,   // x
    Dir,   // d
    Caret, // ^
    Slash, // /
    Plus,
    Minus,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Int(s) => write!(f, "integer `{s}`"),
            Token::Var => write!(f, "`x`"),
            Token::Dir => write!(f, "`d`"),
            Token::Caret => write!(f, "`^`"),
            Token::Slash => write!(f, "`/`"),
            Token::Plus => write!(f, "`+`"),
            Token::Minus => write!(f, "`-`"),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let mut out = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Token::Int(src[start..i].to_string()), start));
            }
            'x' => {
                out.push((Token::Var, i));
                i += 1;
            }
            'd' => {
                out.push((Token::Dir, i));
                i += 1;
            }
            '^' => {
                out.push((Token::Caret, i));
                i += 1;
            }
            '/' => {
                out.push((Token::Slash, i));
                i += 1;
            }
            '+' => {
                out.push((Token::Plus, i));
                i += 1;
            }
            '-' => {
                out.push((Token::Minus, i));
                i += 1;
            }
            other => return err(i, format!("unexpected character `{other}`")),
        }
    }
    Ok(out)
}

struct Parser<T: Scalar> {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    dim: usize,
    end: usize,
    field: VectorField<T>,
}

impl<T: Scalar> Parser<T> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(_, p)| *p)
            .unwrap_or(self.end)
    }

    fn next(&mut self) -> Option<(Token, usize)> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect_int(&mut self, what: &str) -> Result<(String, usize), ParseError> {
        match self.next() {
            Some((Token::Int(s), p)) => Ok((s, p)),
            Some((other, p)) => err(p, format!("expected {what}, found {other}")),
            None => err(self.end, format!("expected {what}, found end of input")),
        }
    }

    fn parse_index(&mut self, what: &str) -> Result<usize, ParseError> {
        let (digits, p) = self.expect_int(what)?;
        let value: usize = digits
            .parse()
            .map_err(|_| ParseError {
                position: p,
                message: format!("{what} `{digits}` is out of range"),
            })?;
        if value == 0 || value > self.dim {
            return err(
                p,
                format!("{what} {value} out of range 1..={}", self.dim),
            );
        }
        Ok(value)
    }

    fn parse_scalar(&mut self, digits: &str, p: usize) -> Result<T, ParseError> {
        T::from_str_radix(digits, 10)
            .map_err(|_| ParseError {
                position: p,
                message: format!("invalid number `{digits}`"),
            })
    }

    fn parse_term(&mut self, negate: bool) -> Result<(), ParseError> {
        // optional coefficient
        let mut coeff = T::one();
        if let Some(Token::Int(_)) = self.peek() {
            let (digits, p) = self.expect_int("coefficient")?;
            coeff = self.parse_scalar(&digits, p)?;
            if let Some(Token::Slash) = self.peek() {
                self.next();
                let (den_digits, dp) = self.expect_int("denominator")?;
                let den = self.parse_scalar(&den_digits, dp)?;
                if den.is_zero() {
                    return err(dp, "zero denominator");
                }
                coeff = coeff / den;
            }
        }
        if negate {
            coeff = -coeff;
        }
        // factors
        let mut exponents = vec![0u32; self.dim];
        while let Some(Token::Var) = self.peek() {
            self.next();
            let axis = self.parse_index("variable index")? - 1;
            let mut power = 1u32;
            if let Some(Token::Caret) = self.peek() {
                self.next();
                let (digits, p) = self.expect_int("exponent")?;
                power = digits.parse().map_err(|_| ParseError {
                    position: p,
                    message: format!("exponent `{digits}` is out of range"),
                })?;
            }
            exponents[axis] += power;
        }
        // direction
        match self.next() {
            Some((Token::Dir, _)) => {}
            Some((other, p)) => return err(p, format!("expected `d`, found {other}")),
            None => return err(self.end, "expected `d`, found end of input"),
        }
        let axis = self.parse_index("direction index")? - 1;
        let mono = Monomial::new(exponents);
        let term = VectorField::monomial_field(self.dim, mono, axis, coeff);
        self.field = self.field.add(&term);
        Ok(())
    }

    fn parse_field(&mut self) -> Result<(), ParseError> {
        let mut negate = matches!(self.peek(), Some(Token::Minus));
        if negate {
            self.next();
        }
        self.parse_term(negate)?;
        loop {
            match self.peek() {
                None => return Ok(()),
                Some(Token::Plus) => {
                    negate = false;
                    self.next();
                }
                Some(Token::Minus) => {
                    negate = true;
                    self.next();
                }
                Some(other) => {
                    let msg = format!("expected `+` or `-`, found {other}");
                    return err(self.here(), msg);
                }
            }
            self.parse_term(negate)?;
        }
    }
}

/// Parses a vector field over n variables. Components that are never
/// mentioned stay zero.
pub fn parse_field<T: Scalar>(src: &str, dim: usize) -> Result<VectorField<T>, ParseError> {
    assert!(dim >= 1, "fields need at least one coordinate");
    let trimmed = src.trim();
    if trimmed.is_empty() {
        return err(0, "empty input");
    }
    if trimmed == "0" {
        return Ok(VectorField::zero(dim));
    }
    let tokens = lex(src)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        dim,
        end: src.len(),
        field: VectorField::zero(dim),
    };
    parser.parse_field()?;
    Ok(parser.field)
}

/// Canonical text of a field: components in index order, terms within a
/// component in descending graded-lex order, unit coefficients elided.
pub fn print_field<T: Scalar>(x: &VectorField<T>) -> String {
    let mut rendered: Vec<(bool, String)> = Vec::new();
    for (axis, comp) in x.components().iter().enumerate() {
        let terms: Vec<_> = comp.terms().collect();
        for (m, c) in terms.into_iter().rev() {
            let negative = c.is_negative();
            let abs = c.abs();
            let mut factors = Vec::new();
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 1 {
                    factors.push(format!("x{}", v + 1));
                } else if e > 1 {
                    factors.push(format!("x{}^{}", v + 1, e));
                }
            }
            let mut body = String::new();
            if factors.is_empty() {
                body.push_str(&format!("{abs}"));
            } else {
                if !abs.is_one() {
                    body.push_str(&format!("{abs} "));
                }
                body.push_str(&factors.join(" "));
            }
            body.push_str(&format!(" d{}", axis + 1));
            rendered.push((negative, body));
        }
    }
    if rendered.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (negative, body)) in rendered.iter().enumerate() {
        if idx == 0 {
            if *negative {
                out.push('-');
            }
        } else if *negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(body);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;
    use crate::{Rat, VField};

    fn parse(src: &str, n: usize) -> VField {
        parse_field(src, n).unwrap()
    }

    #[test]
    fn parses_monomial_terms() {
        let x = parse("x1^2 d2", 2);
        assert_eq!(x.component(0).to_string(), "0");
        assert_eq!(x.component(1).to_string(), "x1^2");
    }

    #[test]
    fn parses_signs_and_fractions() {
        let x = parse("-x1 d1 + 1/2 x2^2 d2", 2);
        assert_eq!(x.component(0).to_string(), "-x1");
        assert_eq!(
            x.component(1).coefficient(&Monomial::new(vec![0, 2])),
            ratio::<Rat>(1, 2)
        );
    }

    #[test]
    fn variable_index_out_of_range() {
        let e = parse_field::<Rat>("x3 d1", 2).unwrap_err();
        assert!(e.message.contains("variable index"));
        let e = parse_field::<Rat>("x1 d3", 2).unwrap_err();
        assert!(e.message.contains("direction index"));
    }

    #[test]
    fn reports_lexical_position() {
        let e = parse_field::<Rat>("x1 ? d1", 2).unwrap_err();
        assert_eq!(e.position, 3);
    }

    #[test]
    fn rejects_zero_denominator_and_empty_input() {
        assert!(parse_field::<Rat>("1/0 d1", 2)
            .unwrap_err()
            .message
            .contains("zero denominator"));
        assert!(parse_field::<Rat>("   ", 2)
            .unwrap_err()
            .message
            .contains("empty input"));
    }

    #[test]
    fn prints_canonical_examples() {
        assert_eq!(print_field(&parse("x1^2 d2", 2)), "x1^2 d2");
        assert_eq!(print_field(&VField::zero(2)), "0");
        assert_eq!(print_field(&parse("-1 d1", 2)), "-1 d1");
        assert_eq!(
            print_field(&parse("1/2 x2^2 d2 + -1 x1 d1", 2)),
            "-x1 d1 + 1/2 x2^2 d2"
        );
    }

    #[test]
    fn zero_round_trips() {
        assert_eq!(parse("0", 3), VField::zero(3));
    }

    #[test]
    fn repeated_variables_multiply() {
        assert_eq!(parse("x1 x1 d1", 2), parse("x1^2 d1", 2));
    }
}
