//! Germ definition files.
//!
//! ```text
//! # comment
//! germ "B_2" {
//!   phi = ["s", "t^2", "s^2*t + t^5"]
//!   d = "s^2 + t^4"          # optional
//!   T = 0                    # optional
//!   pairing = [[1, 1], [2, 2]]   # optional, 1-based; [i, i] is twisted
//!   vi = [-3, -3]            # optional, per component
//!   conductor = 12           # optional
//! }
//! ```

use std::fmt;

use germinv::germ::{source_vars, Germ};
use germinv::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for InputError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Str(String),
    Int(i64),
    Sym(char),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    /// Byte offset of the first character (for strings, of the opening quote).
    at: usize,
}

struct Lexer {
    tokens: Vec<Token>,
}

fn position(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, col)
}

fn error_at(text: &str, offset: usize, message: impl Into<String>) -> InputError {
    let (line, col) = position(text, offset);
    InputError { line, col, message: message.into() }
}

impl Lexer {
    fn run(text: &str) -> Result<Vec<Token>, InputError> {
        let mut lx = Lexer { tokens: Vec::new() };
        let b = text.as_bytes();
        let mut i = 0;
        while i < b.len() {
            let c = b[i];
            match c {
                b'#' => {
                    while i < b.len() && b[i] != b'\n' {
                        i += 1;
                    }
                }
                c if c.is_ascii_whitespace() => i += 1,
                b'{' | b'}' | b'[' | b']' | b'=' | b',' => {
                    lx.tokens.push(Token { tok: Tok::Sym(c as char), at: i });
                    i += 1;
                }
                b'"' => {
                    let start = i;
                    i += 1;
                    while i < b.len() && b[i] != b'"' {
                        if b[i] == b'\n' || b[i] == b'\\' {
                            return Err(error_at(text, i, "unsupported character in string"));
                        }
                        i += 1;
                    }
                    if i == b.len() {
                        return Err(error_at(text, start, "unterminated string"));
                    }
                    lx.tokens.push(Token { tok: Tok::Str(text[start + 1..i].to_string()), at: start });
                    i += 1;
                }
                b'-' | b'0'..=b'9' => {
                    let start = i;
                    i += 1;
                    while i < b.len() && b[i].is_ascii_digit() {
                        i += 1;
                    }
                    let v = text[start..i]
                        .parse::<i64>()
                        .map_err(|_| error_at(text, start, format!("invalid integer `{}`", &text[start..i])))?;
                    lx.tokens.push(Token { tok: Tok::Int(v), at: start });
                }
                c if c.is_ascii_alphabetic() || c == b'_' => {
                    let start = i;
                    while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                        i += 1;
                    }
                    lx.tokens.push(Token { tok: Tok::Ident(text[start..i].to_string()), at: start });
                }
                _ => {
                    let ch = text[i..].chars().next().unwrap_or('?');
                    return Err(error_at(text, i, format!("unexpected character `{ch}`")));
                }
            }
        }
        Ok(lx.tokens)
    }
}

struct Parser<'a> {
    text: &'a str,
    toks: Vec<Token>,
    pos: usize,
}

enum Value {
    Str(String, usize),
    Int(i64, usize),
    List(Vec<Value>, usize),
}

impl Value {
    fn at(&self) -> usize {
        match self {
            Value::Str(_, a) | Value::Int(_, a) | Value::List(_, a) => *a,
        }
    }
}

impl<'a> Parser<'a> {
    fn err(&self, offset: usize, msg: impl Into<String>) -> InputError {
        error_at(self.text, offset, msg)
    }

    fn end_offset(&self) -> usize {
        self.text.len()
    }

    fn next(&mut self, what: &str) -> Result<Token, InputError> {
        let t = self.toks.get(self.pos).cloned().ok_or_else(|| self.err(self.end_offset(), format!("expected {what}, found end of input")))?;
        self.pos += 1;
        Ok(t)
    }

    fn expect_sym(&mut self, c: char) -> Result<usize, InputError> {
        let t = self.next(&format!("`{c}`"))?;
        match t.tok {
            Tok::Sym(x) if x == c => Ok(t.at),
            _ => Err(self.err(t.at, format!("expected `{c}`"))),
        }
    }

    fn peek_sym(&self, c: char) -> bool {
        matches!(self.toks.get(self.pos), Some(Token { tok: Tok::Sym(x), .. }) if *x == c)
    }

    fn value(&mut self) -> Result<Value, InputError> {
        let t = self.next("a value")?;
        match t.tok {
            Tok::Str(s) => Ok(Value::Str(s, t.at)),
            Tok::Int(v) => Ok(Value::Int(v, t.at)),
            Tok::Sym('[') => {
                let mut items = Vec::new();
                if self.peek_sym(']') {
                    self.pos += 1;
                    return Ok(Value::List(items, t.at));
                }
                loop {
                    items.push(self.value()?);
                    if self.peek_sym(',') {
                        self.pos += 1;
                        continue;
                    }
                    self.expect_sym(']')?;
                    return Ok(Value::List(items, t.at));
                }
            }
            _ => Err(self.err(t.at, "expected a string, integer or list")),
        }
    }

    fn poly(&self, v: &Value) -> Result<Poly, InputError> {
        let Value::Str(s, at) = v else {
            return Err(self.err(v.at(), "expected a polynomial string"));
        };
        germinv::poly::parse_expr(&source_vars(), s).map_err(|e| self.err(at + 1 + e.offset, e.message))
    }

    fn int(&self, v: &Value) -> Result<i64, InputError> {
        match v {
            Value::Int(x, _) => Ok(*x),
            _ => Err(self.err(v.at(), "expected an integer")),
        }
    }

    fn list<'v>(&self, v: &'v Value) -> Result<&'v [Value], InputError> {
        match v {
            Value::List(xs, _) => Ok(xs),
            _ => Err(self.err(v.at(), "expected a list")),
        }
    }

    fn germ(&mut self) -> Result<Germ, InputError> {
        let kw = self.next("`germ`")?;
        if kw.tok != Tok::Ident("germ".into()) {
            return Err(self.err(kw.at, "expected `germ`"));
        }
        let name_tok = self.next("a germ name")?;
        let Tok::Str(name) = name_tok.tok else {
            return Err(self.err(name_tok.at, "expected a quoted germ name"));
        };
        let open = self.expect_sym('{')?;
        let mut fields: Vec<(String, Value, usize)> = Vec::new();
        loop {
            if self.peek_sym('}') {
                self.pos += 1;
                break;
            }
            let key = self.next("a key or `}`")?;
            let Tok::Ident(k) = key.tok else {
                return Err(self.err(key.at, "expected a key"));
            };
            if !["phi", "d", "T", "pairing", "vi", "conductor"].contains(&k.as_str()) {
                return Err(self.err(key.at, format!("unknown key `{k}`")));
            }
            if fields.iter().any(|(f, _, _)| *f == k) {
                return Err(self.err(key.at, format!("duplicate key `{k}`")));
            }
            self.expect_sym('=')?;
            let v = self.value()?;
            fields.push((k, v, key.at));
        }
        let get = |k: &str| fields.iter().find(|(f, _, _)| f == k).map(|(_, v, _)| v);
        let phi_v = get("phi").ok_or_else(|| self.err(open, format!("germ `{name}` has no `phi`")))?;
        let items = self.list(phi_v)?;
        if items.len() != 3 {
            return Err(self.err(phi_v.at(), format!("phi needs 3 components, got {}", items.len())));
        }
        let mut comps = Vec::new();
        for it in items {
            let p = self.poly(it)?;
            if !p.constant_term().is_zero() {
                return Err(self.err(it.at(), "component does not vanish at the origin"));
            }
            comps.push(p);
        }
        let phi: [Poly; 3] = comps.try_into().expect("three components");
        let mut germ = Germ::new(&name, phi);
        if let Some(v) = get("d") {
            let d = self.poly(v)?;
            if !d.constant_term().is_zero() {
                return Err(self.err(v.at(), "d does not vanish at the origin"));
            }
            germ.override_d = Some(d);
        }
        if let Some(v) = get("T") {
            let t = self.int(v)?;
            if t < 0 {
                return Err(self.err(v.at(), "T must be non-negative"));
            }
            germ.override_t = Some(t as u64);
        }
        if let Some(v) = get("conductor") {
            let n = self.int(v)?;
            if !(1..=10_000).contains(&n) {
                return Err(self.err(v.at(), "conductor must be in 1..=10000"));
            }
            germ.conductor = Some(n as u32);
        }
        if let Some(v) = get("vi") {
            germ.fixture_vi = Some(self.list(v)?.iter().map(|x| self.int(x)).collect::<Result<_, _>>()?);
        }
        if let Some(v) = get("pairing") {
            let pairs = self.list(v)?;
            let mut partner: Vec<Option<usize>> = Vec::new();
            for p in pairs {
                let ij = self.list(p)?;
                if ij.len() != 2 {
                    return Err(self.err(p.at(), "a pair has two branch indices"));
                }
                let (i, k) = (self.int(&ij[0])?, self.int(&ij[1])?);
                if i < 1 || k < 1 {
                    return Err(self.err(p.at(), "branch indices start at 1"));
                }
                let (i, k) = (i as usize - 1, k as usize - 1);
                let n = i.max(k) + 1;
                if partner.len() < n {
                    partner.resize(n, None);
                }
                if partner[i].is_some() || partner[k].is_some() {
                    return Err(self.err(p.at(), "branch listed twice"));
                }
                partner[i] = Some(k);
                partner[k] = Some(i);
            }
            let sigma: Option<Vec<usize>> = partner.iter().copied().collect();
            germ.override_pairing = Some(sigma.ok_or_else(|| self.err(v.at(), "pairing leaves a branch unpaired"))?);
        }
        Ok(germ)
    }
}

/// Parse every germ record in `text`.
pub fn parse_germ_file(text: &str) -> Result<Vec<Germ>, InputError> {
    let toks = Lexer::run(text)?;
    let mut p = Parser { text, toks, pos: 0 };
    let mut out = Vec::new();
    while p.pos < p.toks.len() {
        out.push(p.germ()?);
    }
    Ok(out)
}
