//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := ['-'|'+'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' uint)*
//! atom   := rational | var | '(' expr ')'
//! var    := 'x' uint            1 <= index <= m
//! rational := uint ('/' uint)?
//! ```

use std::fmt;

use funksphere_core::{Polynomial, Rational};
use num_bigint::BigInt;
use num_traits::Zero;

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    VariableOutOfRange { index: u64, dim: usize },
    ExponentOverflow(u64),
    ZeroDenominator,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Syntax(msg) => write!(f, "syntax error at offset {}: {msg}", self.offset),
            ParseErrorKind::VariableOutOfRange { index, dim } => {
                write!(f, "variable index out of range at offset {}: x{index} (expected 1..={dim})", self.offset)
            }
            ParseErrorKind::ExponentOverflow(e) => {
                write!(f, "exponent overflow at offset {}: {e} > {MAX_EXPONENT}", self.offset)
            }
            ParseErrorKind::ZeroDenominator => write!(f, "zero denominator at offset {}", self.offset),
        }
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    dim: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, offset: usize, kind: ParseErrorKind) -> Result<T, ParseError> {
        Err(ParseError { offset, kind })
    }

    fn syntax<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        self.err(self.pos, ParseErrorKind::Syntax(msg.into()))
    }

    fn digits(&mut self) -> Option<(usize, &str)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| (start, std::str::from_utf8(&self.src[start..self.pos]).unwrap()))
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let mut base = self.atom()?;
        while self.peek() == Some(b'^') {
            self.pos += 1;
            let Some((at, text)) = self.digits() else {
                return self.syntax("expected a non-negative integer exponent after '^'");
            };
            let e: u64 = text.parse().unwrap_or(u64::MAX);
            if e > MAX_EXPONENT as u64 {
                return self.err(at, ParseErrorKind::ExponentOverflow(e));
            }
            base = base.pow(e as u32);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.syntax("expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'x') => {
                let at = self.pos;
                self.pos += 1;
                // no whitespace between 'x' and its index
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                if self.pos == start {
                    return self.syntax("expected a variable index after 'x'");
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let index: u64 = text.parse().unwrap_or(u64::MAX);
                if index == 0 || index > self.dim as u64 {
                    return self.err(at, ParseErrorKind::VariableOutOfRange { index, dim: self.dim });
                }
                Ok(Polynomial::var(self.dim, index as usize - 1))
            }
            Some(c) if c.is_ascii_digit() => {
                let (_, num) = self.digits().unwrap();
                let num: BigInt = num.parse().unwrap();
                let mut value = Rational::from_integer(num);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let Some((at, den)) = self.digits() else {
                        return self.syntax("expected a denominator after '/'");
                    };
                    let den: BigInt = den.parse().unwrap();
                    if den.is_zero() {
                        return self.err(at, ParseErrorKind::ZeroDenominator);
                    }
                    value /= Rational::from_integer(den);
                }
                if matches!(self.src.get(self.pos), Some(b'x' | b'(')) {
                    return self.syntax("implicit multiplication is not supported; write '2*x1' instead of '2x1'");
                }
                Ok(Polynomial::constant(self.dim, value))
            }
            Some(c) => self.syntax(format!("unexpected character '{}'", c as char)),
            None => self.syntax("unexpected end of input"),
        }
    }
}

/// Parses `text` as a polynomial in `x1..x{dim}` and expands it.
pub fn parse_polynomial(text: &str, dim: usize) -> Result<Polynomial, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, dim };
    let poly = p.expr()?;
    if p.peek().is_some() {
        let msg = match p.src[p.pos] {
            b')' => "unmatched ')'".to_string(),
            b'x' | b'(' => "implicit multiplication is not supported; insert '*'".to_string(),
            c => format!("unexpected character '{}'", c as char),
        };
        return p.syntax(msg);
    }
    Ok(poly)
}

/// Parses a comma-separated list of rationals (`"3/5,4/5,0"`).
pub fn parse_rational_list(text: &str) -> Result<Vec<Rational>, ParseError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        out.push(parse_rational(piece.trim()).map_err(|e| ParseError { offset: offset + e.offset, ..e })?);
        offset += piece.len() + 1;
    }
    Ok(out)
}

/// Parses a single signed rational (`"-3/5"`, `"2"`).
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let syntax = |offset: usize| ParseError {
        offset,
        kind: ParseErrorKind::Syntax(format!("expected a rational such as -3/5, found {text:?}")),
    };
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text.strip_prefix('+').unwrap_or(text)),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) || den.is_some_and(|d| !digits(d)) {
        return Err(syntax(0));
    }
    let n: BigInt = num.parse().unwrap();
    let d: BigInt = den.map_or_else(|| BigInt::from(1), |d| d.parse().unwrap());
    if d.is_zero() {
        return Err(ParseError { offset: text.len() - den.unwrap().len(), kind: ParseErrorKind::ZeroDenominator });
    }
    let r = Rational::new(n, d);
    Ok(if neg { -r } else { r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use funksphere_core::Monomial;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn parses_terms() {
        let p = parse_polynomial("x1^2*x2 - 3/2*x3", 3).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.coeff(&Monomial::new(&[2, 1, 0])), r(1, 1));
        assert_eq!(p.coeff(&Monomial::new(&[0, 0, 1])), r(-3, 2));
    }

    #[test]
    fn expands_powers() {
        let p = parse_polynomial("(x1+x2)^2", 2).unwrap();
        assert_eq!(p.to_string(), "x1^2 + 2*x1*x2 + x2^2");
    }

    #[test]
    fn rejects_bad_index() {
        let e = parse_polynomial("x0+1", 3).unwrap_err();
        assert_eq!(e.offset, 0);
        assert!(matches!(e.kind, ParseErrorKind::VariableOutOfRange { index: 0, dim: 3 }));
        let e = parse_polynomial("1 + x4", 3).unwrap_err();
        assert_eq!(e.offset, 4);
    }

    #[test]
    fn rejects_large_exponent() {
        let e = parse_polynomial("x1^65", 2).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::ExponentOverflow(65));
        assert_eq!(e.offset, 3);
        assert!(parse_polynomial("x1^64", 2).is_ok());
    }

    #[test]
    fn implicit_multiplication_hint() {
        let e = parse_polynomial("2x1", 2).unwrap_err();
        assert_eq!(e.offset, 1);
        assert!(e.to_string().contains("implicit multiplication"));
    }

    #[test]
    fn syntax_errors_have_offsets() {
        assert_eq!(parse_polynomial("x1 + ", 2).unwrap_err().offset, 5);
        assert_eq!(parse_polynomial("(x1", 2).unwrap_err().offset, 3);
        assert_eq!(parse_polynomial("x1 ) ", 2).unwrap_err().offset, 3);
        assert_eq!(parse_polynomial("1/0", 2).unwrap_err().kind, ParseErrorKind::ZeroDenominator);
    }

    #[test]
    fn leading_sign_and_whitespace() {
        assert_eq!(parse_polynomial(" - x2 - 1 ", 2).unwrap().to_string(), "-x2 - 1");
        assert_eq!(parse_polynomial("-(x1)^2", 2).unwrap().to_string(), "-x1^2");
    }

    #[test]
    fn rational_lists() {
        assert_eq!(parse_rational_list("3/5, 4/5,0").unwrap(), vec![r(3, 5), r(4, 5), r(0, 1)]);
        assert_eq!(parse_rational("-1/2").unwrap(), r(-1, 2));
        assert_eq!(parse_rational_list("1,x").unwrap_err().offset, 2);
    }
}
