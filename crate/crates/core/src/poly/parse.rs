//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('+' | '-') unary | power
//! power := atom ('^' integer)?
//! atom  := integer | variable | 'i' | 'zeta' integer | '(' expr ')'
//! ```
//! Division is only allowed by nonzero constants.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use super::Poly;
use crate::arith::CyclotomicNumber;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the parsed text.
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (at offset {})", self.message, self.offset)
    }
}

impl std::error::Error for ParseError {}

/// Largest accepted exponent literal, to keep expansion bounded.
const MAX_EXPONENT: u32 = 10_000;
const MAX_ZETA_ORDER: u32 = 10_000;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a Arc<[String]>,
}

type PResult<T> = std::result::Result<T, ParseError>;

impl<'a> Parser<'a> {
    fn err<T>(&self, offset: usize, message: impl Into<String>) -> PResult<T> {
        Err(ParseError { offset, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> PResult<(usize, BigInt)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err(start, "expected an integer");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok((start, text.parse().unwrap()))
    }

    fn small_integer(&mut self, limit: u32, what: &str) -> PResult<u32> {
        let (at, v) = self.integer()?;
        match u32::try_from(&v) {
            Ok(x) if x <= limit => Ok(x),
            _ => self.err(at, format!("{what} {v} exceeds the limit {limit}")),
        }
    }

    fn expr(&mut self) -> PResult<Poly> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> PResult<Poly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.peek() == Some(b'/') {
                let at = self.pos;
                self.pos += 1;
                let d = self.unary()?;
                if !d.is_constant() {
                    return self.err(at, "division by a non-constant expression");
                }
                let c = d.constant_term();
                if c.is_zero() {
                    return self.err(at, "division by zero");
                }
                acc = acc.scale(&c.inverse().expect("nonzero"));
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> PResult<Poly> {
        if self.eat(b'-') {
            Ok(-self.unary()?)
        } else if self.eat(b'+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> PResult<Poly> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.small_integer(MAX_EXPONENT, "exponent")?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> PResult<Poly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    let at = self.pos;
                    return self.err(at, "expected `)`");
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let (_, v) = self.integer()?;
                Ok(Poly::constant(self.vars, CyclotomicNumber::from_bigint(v)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let word = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                self.identifier(start, word)
            }
            Some(c) => {
                let at = self.pos;
                self.err(at, format!("unexpected character `{}`", c as char))
            }
            None => {
                let at = self.pos;
                self.err(at, "unexpected end of expression")
            }
        }
    }

    fn identifier(&mut self, start: usize, word: &str) -> PResult<Poly> {
        if let Some(k) = self.vars.iter().position(|v| v == word) {
            return Ok(Poly::var(self.vars, k));
        }
        if word == "i" {
            return Ok(Poly::constant(self.vars, CyclotomicNumber::i()));
        }
        if let Some(digits) = word.strip_prefix("zeta") {
            if let Ok(n) = digits.parse::<u32>() {
                if (1..=MAX_ZETA_ORDER).contains(&n) {
                    return Ok(Poly::constant(self.vars, CyclotomicNumber::zeta(n, 1)));
                }
            }
            return self.err(start, format!("invalid root of unity `{word}`"));
        }
        self.err(
            start,
            format!("unknown variable `{word}` (expected one of {})", self.vars.join(", ")),
        )
    }
}

/// Parse `text` as a polynomial in `vars`.
pub fn parse_expr(vars: &Arc<[String]>, text: &str) -> PResult<Poly> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, vars };
    let out = p.expr()?;
    if let Some(c) = p.peek() {
        let at = p.pos;
        return p.err(at, format!("unexpected trailing `{}`", c as char));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::vars;

    #[test]
    fn precedence() {
        let v = vars(&["s", "t"]);
        let a = parse_expr(&v, "-s^2 + 2*t*(s - 1)/4").unwrap();
        let b = parse_expr(&v, "(-1)*(s*s) + 1/2*t*s - 1/2*t").unwrap();
        assert_eq!(a, b);
        let z = parse_expr(&v, "zeta12^3 - i").unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn errors_carry_offsets() {
        let v = vars(&["s", "t"]);
        let e = parse_expr(&v, "s + x").unwrap_err();
        assert_eq!(e.offset, 4);
        let e = parse_expr(&v, "s / (t - t)").unwrap_err();
        assert_eq!(e.offset, 2);
        let e = parse_expr(&v, "s / t").unwrap_err();
        assert!(e.message.contains("non-constant"));
        assert!(parse_expr(&v, "(s + t").is_err());
        assert!(parse_expr(&v, "s t").is_err());
        assert!(parse_expr(&v, "s^").is_err());
    }
}
