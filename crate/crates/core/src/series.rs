//! Univariate power series in a local parameter with explicit precision.

use std::fmt;

use crate::arith::CyclotomicNumber;
use crate::poly::Poly;

type Cyclo = CyclotomicNumber;

/// A power series `sum c_k tau^k`.
///
/// `prec = None` means the coefficient list is the whole (polynomial) series.
/// `prec = Some(n)` means coefficients through `tau^n` are exact and nothing is
/// known beyond; the stored list never extends past `n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Cyclo>,
    prec: Option<u32>,
}

/// Valuation of a series as far as its precision allows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Valuation {
    /// First nonzero coefficient.
    Order(u32),
    /// The series is exactly zero.
    Zero,
    /// All coefficients through the given precision vanish.
    AtLeast(u32),
}

impl Series {
    fn build(mut coeffs: Vec<Cyclo>, prec: Option<u32>) -> Self {
        if let Some(n) = prec {
            coeffs.truncate(n as usize + 1);
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Series { coeffs, prec }
    }

    pub fn exact(coeffs: Vec<Cyclo>) -> Self {
        Self::build(coeffs, None)
    }

    pub fn truncated(coeffs: Vec<Cyclo>, prec: u32) -> Self {
        Self::build(coeffs, Some(prec))
    }

    pub fn zero() -> Self {
        Self::exact(vec![])
    }

    pub fn constant(c: Cyclo) -> Self {
        Self::exact(vec![c])
    }

    /// `c tau^e`, exact.
    pub fn monomial(c: Cyclo, e: u32) -> Self {
        let mut v = vec![Cyclo::zero(); e as usize + 1];
        v[e as usize] = c;
        Self::exact(v)
    }

    pub fn coeff(&self, k: u32) -> Cyclo {
        self.coeffs.get(k as usize).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[Cyclo] {
        &self.coeffs
    }

    /// Nonzero terms as `(exponent, coefficient)`.
    pub fn terms(&self) -> Vec<(u32, Cyclo)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as u32, c.clone()))
            .collect()
    }

    pub fn precision(&self) -> Option<u32> {
        self.prec
    }

    pub fn is_exact(&self) -> bool {
        self.prec.is_none()
    }

    pub fn valuation(&self) -> Valuation {
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            Some(k) => Valuation::Order(k as u32),
            None => match self.prec {
                None => Valuation::Zero,
                Some(n) => Valuation::AtLeast(n + 1),
            },
        }
    }

    /// Lower bound for the order; `None` for the exact zero series.
    fn order_bound(&self) -> Option<u32> {
        match self.valuation() {
            Valuation::Order(k) | Valuation::AtLeast(k) => Some(k),
            Valuation::Zero => None,
        }
    }

    pub fn truncate(&self, n: u32) -> Self {
        let p = match self.prec {
            Some(q) => q.min(n),
            None => n,
        };
        Self::build(self.coeffs.clone(), Some(p))
    }

    /// Drop the precision bound, treating the known part as exact.
    pub fn assume_exact(&self) -> Self {
        Self::build(self.coeffs.clone(), None)
    }

    pub fn scale(&self, c: &Cyclo) -> Self {
        Self::build(self.coeffs.iter().map(|x| x * c).collect(), self.prec)
    }

    pub fn neg(&self) -> Self {
        self.scale(&Cyclo::from_int(-1))
    }

    pub fn add(&self, o: &Self) -> Self {
        let prec = min_prec(self.prec, o.prec);
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(self.coeff(k as u32) + o.coeff(k as u32));
        }
        Self::build(v, prec)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (Some(oa), Some(ob)) = (self.order_bound(), o.order_bound()) else {
            return Self::zero();
        };
        let prec = min_prec(self.prec.map(|p| p + ob), o.prec.map(|p| p + oa));
        let len = self.coeffs.len() + o.coeffs.len();
        let len = match prec {
            Some(p) => len.min(p as usize + 1),
            None => len,
        };
        let mut v = vec![Cyclo::zero(); len.max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= len {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if !b.is_zero() {
                    v[i + j] += &(a * b);
                }
            }
        }
        Self::build(v, prec)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(Cyclo::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `tau -> tau^v`.
    pub fn stretch(&self, v: u32) -> Self {
        let mut out = vec![Cyclo::zero(); (self.coeffs.len().max(1) - 1) * v as usize + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k * v as usize] = c.clone();
        }
        let prec = self.prec.map(|p| (p + 1) * v - 1);
        Self::build(out, prec)
    }

    /// `tau -> z tau`.
    pub fn rotate(&self, z: &Cyclo) -> Self {
        let mut zk = Cyclo::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &zk);
            zk = &zk * z;
        }
        Self::build(out, self.prec)
    }

    /// `self(inner(tau))`, where `inner` has positive order (or is zero).
    pub fn compose(&self, inner: &Self) -> Self {
        assert!(
            inner.coeff(0).is_zero(),
            "composition needs an inner series without constant term"
        );
        let tail_prec = match (self.prec, inner.order_bound()) {
            (None, _) | (_, None) => None,
            (Some(p), Some(o)) => Some((p + 1) * o.max(1) - 1),
        };
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Self::constant(c.clone()));
        }
        if self.coeffs.is_empty() {
            acc = Self::zero();
        }
        let prec = min_prec(acc.prec, tail_prec);
        Self::build(acc.coeffs, prec)
    }

    pub fn derivative(&self) -> Self {
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * &Cyclo::from_int(k as i64))
            .collect();
        Self::build(v, self.prec.map(|p| p.saturating_sub(1)))
    }

    /// `self^alpha` for a series with constant term 1.
    pub fn unit_power(&self, alpha: &crate::arith::Rational) -> Self {
        assert!(self.coeff(0).is_one(), "unit_power needs constant term 1");
        let Some(n) = self.prec else {
            if self.coeffs.len() <= 1 {
                return self.clone();
            }
            panic!("unit_power of a non-constant exact series needs a precision");
        };
        let alpha = Cyclo::from_rational(alpha);
        let mut g = vec![Cyclo::one()];
        for m in 1..=n as usize {
            let mut acc = Cyclo::zero();
            for k in 1..=m.min(self.coeffs.len().saturating_sub(1)) {
                let w = &(&alpha * &Cyclo::from_int(k as i64)) - &Cyclo::from_int((m - k) as i64);
                acc += &(&(&w * &self.coeffs[k]) * &g[m - k]);
            }
            g.push(&acc * &Cyclo::from_fraction(1, m as i64));
        }
        Self::build(g, Some(n))
    }

    /// Compositional inverse of a series `tau + O(tau^2)`, through `tau^n`.
    pub fn reversion(&self, n: u32) -> Self {
        assert!(self.coeff(0).is_zero() && self.coeff(1).is_one(), "reversion needs tau + O(tau^2)");
        let z = Series::monomial(Cyclo::one(), 1);
        let der = self.derivative();
        let mut w = Series::truncated(vec![Cyclo::zero(), Cyclo::one()], 1);
        let mut p = 1;
        while p < n {
            p = (2 * p).min(n);
            let wt = Series::truncated(w.coeffs.clone(), p);
            let r = self.truncate(p).compose(&wt).sub(&z);
            let d = der.truncate(p).compose(&wt).truncate(p);
            let inv = d.inverse().expect("unit derivative");
            w = wt.sub(&r.mul(&inv)).truncate(p);
        }
        w
    }

    /// Reciprocal of a series with nonzero constant term.
    pub fn inverse(&self) -> Option<Self> {
        let c0 = self.coeff(0);
        let inv0 = c0.inverse().ok()?;
        let n = self.prec?;
        let mut out = vec![Cyclo::zero(); n as usize + 1];
        out[0] = inv0.clone();
        for k in 1..=n as usize {
            let mut acc = Cyclo::zero();
            for j in 1..=k.min(self.coeffs.len().saturating_sub(1)) {
                acc += &(&self.coeffs[j] * &out[k - j]);
            }
            out[k] = -(&acc * &inv0);
        }
        Some(Self::build(out, Some(n)))
    }
}

fn min_prec(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => Some(x.min(y)),
    }
}

/// Evaluate a polynomial at series arguments, one per variable.
pub fn eval_poly(p: &Poly, args: &[Series]) -> Series {
    assert_eq!(args.len(), p.nvars());
    let mut powers: Vec<Vec<Series>> = args.iter().map(|_| vec![Series::constant(Cyclo::one())]).collect();
    let mut acc = Series::zero();
    for (m, c) in p.terms() {
        let mut t = Series::constant(c.clone());
        for (k, a) in args.iter().enumerate() {
            let e = m.get(k) as usize;
            while powers[k].len() <= e {
                let next = powers[k].last().unwrap().mul(a);
                powers[k].push(next);
            }
            if e > 0 {
                t = t.mul(&powers[k][e]);
            }
        }
        acc = acc.add(&t);
    }
    acc
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            write!(f, "0")?;
        }
        for (k, (e, c)) in terms.iter().enumerate() {
            let text = if c.is_atomic() { c.to_string() } else { format!("({c})") };
            let (neg, body) = match text.strip_prefix('-') {
                Some(r) if c.is_atomic() => (true, r.to_string()),
                _ => (false, text),
            };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            match (*e, body.as_str()) {
                (0, _) => write!(f, "{body}")?,
                (1, "1") => write!(f, "tau")?,
                (1, _) => write!(f, "{body}*tau")?,
                (_, "1") => write!(f, "tau^{e}")?,
                _ => write!(f, "{body}*tau^{e}")?,
            }
        }
        if let Some(p) = self.prec {
            write!(f, " + O(tau^{})", p + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(cs: &[i64], prec: Option<u32>) -> Series {
        let v = cs.iter().map(|&c| Cyclo::from_int(c)).collect();
        match prec {
            Some(p) => Series::truncated(v, p),
            None => Series::exact(v),
        }
    }

    #[test]
    fn precision_tracking() {
        let a = s(&[0, 1, 1], Some(5));
        let b = s(&[0, 0, 1], None);
        let p = a.mul(&b);
        assert_eq!(p.precision(), Some(7));
        let q = a.mul(&a);
        assert_eq!(q.precision(), Some(6));
        assert_eq!(a.add(&b).precision(), Some(5));
        assert_eq!(s(&[0, 0, 0], Some(3)).valuation(), Valuation::AtLeast(4));
        assert_eq!(Series::zero().valuation(), Valuation::Zero);
    }

    #[test]
    fn composition_and_inverse() {
        // 1/(1 - tau) = 1 + tau + tau^2 + ...
        let inv = s(&[1, -1], Some(6)).inverse().unwrap();
        assert_eq!(inv, s(&[1, 1, 1, 1, 1, 1, 1], Some(6)));
        // (x + x^2) o (2 tau) = 2 tau + 4 tau^2
        let c = s(&[0, 1, 1], None).compose(&s(&[0, 2], None));
        assert_eq!(c, s(&[0, 2, 4], None));
        let c = s(&[1, 1], Some(1)).compose(&s(&[0, 0, 1], None));
        assert_eq!(c.precision(), Some(3));
        assert_eq!(s(&[1, 2], None).stretch(3), s(&[1, 0, 0, 2], None));
    }

    #[test]
    fn roots_and_reversion() {
        // (1 + tau)^(1/2) squared
        let half = crate::arith::Rational::new(1.into(), 2.into());
        let r = s(&[1, 1], Some(8)).unit_power(&half);
        assert_eq!(r.mul(&r), s(&[1, 1], Some(8)));
        // tau + tau^2 inverted
        let f = s(&[0, 1, 1], None);
        let g = f.reversion(10);
        let id = f.compose(&g);
        assert_eq!(id.truncate(10), s(&[0, 1], Some(10)));
    }
}
