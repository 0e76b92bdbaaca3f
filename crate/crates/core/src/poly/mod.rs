//! Sparse multivariate polynomials over the cyclotomic field.

mod gcd;
mod parse;
mod resultant;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::arith::CyclotomicNumber;
use crate::error::{Error, Result};

pub use gcd::{gcd, squarefree_part};
pub use parse::{parse_expr, ParseError};
pub use resultant::{determinant, resultant};

type Cyclo = CyclotomicNumber;

/// Hard ceiling on the number of variables of a polynomial ring.
pub const MAX_VARS: usize = 6;

/// Exponent vector. The derived ordering is lexicographic with the first variable most significant.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(pub [u32; MAX_VARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; MAX_VARS]);

    pub fn var(i: usize, e: u32) -> Self {
        let mut m = Self::ONE;
        m.0[i] = e;
        m
    }

    pub fn from_exps(exps: &[u32]) -> Self {
        let mut m = Self::ONE;
        m.0[..exps.len()].copy_from_slice(exps);
        m
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut m = *self;
        for k in 0..MAX_VARS {
            m.0[k] += o.0[k];
        }
        m
    }

    pub fn divides(&self, o: &Self) -> bool {
        (0..MAX_VARS).all(|k| self.0[k] <= o.0[k])
    }

    /// `self / o`, assuming `o` divides `self`.
    pub fn div(&self, o: &Self) -> Self {
        let mut m = *self;
        for k in 0..MAX_VARS {
            m.0[k] -= o.0[k];
        }
        m
    }

    pub fn lcm(&self, o: &Self) -> Self {
        let mut m = *self;
        for k in 0..MAX_VARS {
            m.0[k] = m.0[k].max(o.0[k]);
        }
        m
    }

    /// Comparison in the local order: lower degree is larger, ties broken lexicographically.
    pub fn local_cmp(&self, o: &Self) -> std::cmp::Ordering {
        o.degree().cmp(&self.degree()).then_with(|| self.cmp(o))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Sparse polynomial in a fixed, named list of variables.
#[derive(Clone)]
pub struct LocalPolynomial {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, Cyclo>,
}

pub type Poly = LocalPolynomial;

/// Shared variable list.
pub fn vars(names: &[&str]) -> Arc<[String]> {
    assert!(names.len() <= MAX_VARS, "at most {MAX_VARS} variables");
    names.iter().map(|s| s.to_string()).collect()
}

impl LocalPolynomial {
    pub fn zero(vars: &Arc<[String]>) -> Self {
        LocalPolynomial { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Arc<[String]>, c: Cyclo) -> Self {
        Self::term(vars, Monomial::ONE, c)
    }

    pub fn one(vars: &Arc<[String]>) -> Self {
        Self::constant(vars, Cyclo::one())
    }

    pub fn term(vars: &Arc<[String]>, m: Monomial, c: Cyclo) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// The variable at position `i`.
    pub fn var(vars: &Arc<[String]>, i: usize) -> Self {
        Self::term(vars, Monomial::var(i, 1), Cyclo::one())
    }

    pub fn var_named(vars: &Arc<[String]>, name: &str) -> Result<Self> {
        let i = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown variable `{name}`")))?;
        Ok(Self::var(vars, i))
    }

    pub fn from_terms(vars: &Arc<[String]>, terms: impl IntoIterator<Item = (Monomial, Cyclo)>) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    /// Parse an expression in the given variables.
    pub fn parse(vars: &Arc<[String]>, text: &str) -> Result<Self> {
        parse_expr(vars, text).map_err(|e| Error::InvalidArgument(e.to_string()))
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown variable `{name}`")))
    }

    pub fn same_vars(&self, o: &Self) -> bool {
        Arc::ptr_eq(&self.vars, &o.vars) || self.vars == o.vars
    }

    pub fn check_vars(&self, o: &Self) -> Result<()> {
        if self.same_vars(o) {
            Ok(())
        } else {
            Err(Error::VariableMismatch(self.vars.to_vec(), o.vars.to_vec()))
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Cyclo)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, Cyclo> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::ONE)
    }

    pub fn coeff(&self, m: &Monomial) -> Cyclo {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> Cyclo {
        self.coeff(&Monomial::ONE)
    }

    pub fn add_term(&mut self, m: Monomial, c: &Cyclo) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &Cyclo) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        LocalPolynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    /// Multiply by `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Cyclo) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        LocalPolynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, x)| (k.mul(m), x * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.vars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Degree of the lowest-degree homogeneous part (the order at the origin).
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).min()
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.get(i)).max().unwrap_or(0)
    }

    /// Exponent of the largest power of variable `i` dividing every term.
    pub fn min_degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.get(i)).min().unwrap_or(0)
    }

    pub fn contains_var(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.get(i) > 0)
    }

    /// Leading term for the lexicographic order.
    pub fn lex_lead(&self) -> Option<(&Monomial, &Cyclo)> {
        self.terms.last_key_value()
    }

    /// Leading term for the local order: lowest degree, then lexicographically largest.
    pub fn local_lead(&self) -> Option<(&Monomial, &Cyclo)> {
        self.terms.iter().max_by(|a, b| a.0.local_cmp(b.0))
    }

    /// Scale so the local leading coefficient is 1.
    pub fn normalize_unit(&self) -> Self {
        match self.local_lead() {
            Some((_, c)) if !c.is_one() => self.scale(&c.inverse().expect("nonzero")),
            _ => self.clone(),
        }
    }

    pub fn derivative(&self, i: usize) -> Self {
        let mut p = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.get(i);
            if e > 0 {
                let mut nm = *m;
                nm.0[i] -= 1;
                p.add_term(nm, &(c * &Cyclo::from_int(e as i64)));
            }
        }
        p
    }

    /// Coefficients of `self` as a polynomial in variable `i`, lowest power first.
    pub fn coefficients_in(&self, i: usize) -> Vec<Self> {
        let d = self.degree_in(i) as usize;
        let mut out = vec![Self::zero(&self.vars); if self.is_zero() { 0 } else { d + 1 }];
        for (m, c) in &self.terms {
            let mut nm = *m;
            let e = nm.0[i] as usize;
            nm.0[i] = 0;
            out[e].add_term(nm, c);
        }
        out
    }

    pub fn from_coefficients_in(vars: &Arc<[String]>, i: usize, coeffs: &[Self]) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in coeffs.iter().enumerate() {
            for (m, x) in &c.terms {
                p.add_term(m.mul(&Monomial::var(i, e as u32)), x);
            }
        }
        p
    }

    /// Replace every variable by the corresponding polynomial in `images`, all over `target` variables.
    pub fn compose(&self, target: &Arc<[String]>, images: &[Self]) -> Self {
        assert_eq!(images.len(), self.nvars());
        let mut cache: Vec<Vec<Self>> = vec![vec![Self::one(target)]; images.len()];
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (k, img) in images.iter().enumerate() {
                let e = m.get(k) as usize;
                while cache[k].len() <= e {
                    let next = cache[k].last().unwrap() * img;
                    cache[k].push(next);
                }
                if e > 0 {
                    t = &t * &cache[k][e];
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Substitute variable `i` by `q` (same variable list).
    pub fn substitute(&self, i: usize, q: &Self) -> Self {
        let images: Vec<Self> = (0..self.nvars())
            .map(|k| if k == i { q.clone() } else { Self::var(&self.vars, k) })
            .collect();
        self.compose(&self.vars, &images)
    }

    /// Re-express in a different variable list, matching variables by name.
    pub fn with_vars(&self, target: &Arc<[String]>) -> Result<Self> {
        let map: Vec<usize> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(k, _)| self.contains_var(*k))
            .map(|(_, v)| {
                target
                    .iter()
                    .position(|w| w == v)
                    .ok_or_else(|| Error::VariableMismatch(self.vars.to_vec(), target.to_vec()))
            })
            .collect::<Result<_>>()?;
        let used: Vec<usize> = (0..self.nvars()).filter(|k| self.contains_var(*k)).collect();
        let mut p = Self::zero(target);
        for (m, c) in &self.terms {
            let mut nm = Monomial::ONE;
            for (slot, &k) in used.iter().enumerate() {
                nm.0[map[slot]] = m.get(k);
            }
            p.add_term(nm, c);
        }
        Ok(p)
    }

    /// Rename variables positionally.
    pub fn relabel(&self, target: &Arc<[String]>) -> Self {
        assert!(target.len() >= self.nvars());
        LocalPolynomial { vars: target.clone(), terms: self.terms.clone() }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (dm, dc) = d.lex_lead()?;
        let dm = *dm;
        let dinv = dc.inverse().ok()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.vars);
        while let Some((rm, rc)) = rem.lex_lead() {
            if !dm.divides(rm) {
                return None;
            }
            let qm = rm.div(&dm);
            let qc = rc * &dinv;
            rem = &rem - &d.mul_term(&qm, &qc);
            quot.add_term(qm, &qc);
        }
        Some(quot)
    }

    fn combine(&self, o: &Self, negate: bool) -> Self {
        assert!(self.same_vars(o), "variable lists differ: {:?} vs {:?}", self.vars, o.vars);
        let mut p = self.clone();
        for (m, c) in &o.terms {
            if negate {
                p.add_term(*m, &-c);
            } else {
                p.add_term(*m, c);
            }
        }
        p
    }

    fn product(&self, o: &Self) -> Self {
        assert!(self.same_vars(o), "variable lists differ: {:?} vs {:?}", self.vars, o.vars);
        let mut p = Self::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                p.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        p
    }

    /// Render a monomial with this polynomial's variable names.
    pub fn fmt_monomial(&self, m: &Monomial) -> String {
        fmt_monomial(&self.vars, m)
    }
}

pub(crate) fn fmt_monomial(vars: &[String], m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (k, v) in vars.iter().enumerate() {
        match m.get(k) {
            0 => {}
            1 => parts.push(v.clone()),
            e => parts.push(format!("{v}^{e}")),
        }
    }
    parts.join("*")
}

/// Field operation on two polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(f: &Poly, g: &Poly, op: PolyOp) -> Result<Poly> {
    f.check_vars(g)?;
    Ok(match op {
        PolyOp::Add => f + g,
        PolyOp::Sub => f - g,
        PolyOp::Mul => f * g,
    })
}

impl PartialEq for LocalPolynomial {
    fn eq(&self, o: &Self) -> bool {
        self.same_vars(o) && self.terms == o.terms
    }
}

impl Eq for LocalPolynomial {}

impl fmt::Display for LocalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|a, b| b.0.local_cmp(a.0));
        for (k, (m, c)) in ts.into_iter().enumerate() {
            let mono = fmt_monomial(&self.vars, m);
            let text = c.to_string();
            let (neg, body) = if c.is_atomic() {
                match text.strip_prefix('-') {
                    Some(r) => (true, r.to_string()),
                    None => (false, text),
                }
            } else {
                (false, format!("({text})"))
            };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            match (mono.is_empty(), body.as_str()) {
                (true, _) => write!(f, "{body}")?,
                (false, "1") => write!(f, "{mono}")?,
                (false, _) => write!(f, "{body}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LocalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        self.combine(o, false)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self.combine(o, true)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        self.product(o)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, o: Poly) -> Poly {
        self.combine(&o, false)
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, o: Poly) -> Poly {
        self.combine(&o, true)
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, o: Poly) -> Poly {
        self.product(&o)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&Cyclo::from_int(-1))
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&Cyclo::from_int(-1))
    }
}

/// The three 2x2 minors (rows 12, 13, 23) of the Jacobian of a map in two variables.
pub fn jacobian_minors(phi: &[Poly; 3]) -> Result<[Poly; 3]> {
    for f in &phi[1..] {
        phi[0].check_vars(f)?;
    }
    if phi[0].nvars() != 2 {
        return Err(Error::InvalidArgument(format!(
            "jacobian minors need two source variables, got {:?}",
            phi[0].vars()
        )));
    }
    let d: Vec<[Poly; 2]> = phi.iter().map(|f| [f.derivative(0), f.derivative(1)]).collect();
    let minor = |a: usize, b: usize| &(&d[a][0] * &d[b][1]) - &(&d[a][1] * &d[b][0]);
    Ok([minor(0, 1), minor(0, 2), minor(1, 2)])
}

/// `(p(.., x, ..) - p(.., y, ..)) / (x - y)` where `y` is `new_var`.
///
/// `new_var` is appended to the variable list unless already present, in which case
/// `p` must not involve it.
pub fn divided_difference(p: &Poly, var: &str, new_var: &str) -> Result<Poly> {
    let x = p.var_index(var)?;
    let (target, y) = match p.vars().iter().position(|v| v == new_var) {
        Some(y) => {
            if p.contains_var(y) {
                return Err(Error::InvalidArgument(format!(
                    "`{new_var}` already occurs in the polynomial"
                )));
            }
            (p.vars().clone(), y)
        }
        None => {
            let mut names: Vec<&str> = p.vars().iter().map(|s| s.as_str()).collect();
            names.push(new_var);
            (vars(&names), names.len() - 1)
        }
    };
    let mut out = Poly::zero(&target);
    for (m, c) in p.terms() {
        let n = m.get(x);
        if n == 0 {
            continue;
        }
        let mut rest = *m;
        rest.0[x] = 0;
        for a in 0..n {
            let mut nm = rest;
            nm.0[x] = a;
            nm.0[y] = n - 1 - a;
            out.add_term(nm, c);
        }
    }
    Ok(out)
}
