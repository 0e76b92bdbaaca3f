//! Dense univariate polynomials over the cyclotomic field and their roots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::cyclotomic::{CyclotomicNumber, Rational};
use super::radical::{all_nth_roots, nth_root};
use crate::error::{Error, Result};

type Cyclo = CyclotomicNumber;

/// Coefficients low to high; the leading coefficient is nonzero unless the polynomial is 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly(pub Vec<Cyclo>);

impl UniPoly {
    pub fn new(mut c: Vec<Cyclo>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UniPoly(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with the zero polynomial at -1.
    pub fn degree(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn lead(&self) -> &Cyclo {
        self.0.last().expect("zero polynomial has no leading coefficient")
    }

    pub fn eval(&self, x: &Cyclo) -> Cyclo {
        let mut acc = Cyclo::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &Cyclo::from_int(k as i64))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead().inverse().expect("nonzero lead");
        UniPoly(self.0.iter().map(|c| c * &inv).collect())
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let mut rem = self.0.clone();
        let dd = d.0.len() - 1;
        if rem.len() <= dd {
            return (UniPoly(vec![]), self.clone());
        }
        let inv = d.lead().inverse().expect("nonzero lead");
        let mut quot = vec![Cyclo::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.0.iter().enumerate() {
                rem[k + j] -= &(&c * dc);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Divide by (w - root) once; the remainder must vanish.
    fn deflate(&self, root: &Cyclo) -> Self {
        let (q, r) = self.div_rem(&UniPoly(vec![-root, Cyclo::one()]));
        debug_assert!(r.is_zero());
        q
    }
}

impl std::fmt::Display for UniPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*w")?,
                _ => write!(f, "({c})*w^{k}")?,
            }
        }
        Ok(())
    }
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs();
    if n.is_zero() {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if d > BigInt::from(1_000_000u32) {
            return None;
        }
        if (&n % &d).is_zero() {
            let other = &n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

fn rational_roots(p: &UniPoly) -> Vec<Cyclo> {
    let Some(qs) = p.0.iter().map(|c| c.to_rational()).collect::<Option<Vec<Rational>>>() else {
        return vec![];
    };
    let den = qs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = qs.iter().map(|q| q.numer() * (&den / q.denom())).collect();
    let (Some(ps), Some(ls)) = (divisors(&ints[0]), divisors(ints.last().unwrap())) else {
        return vec![];
    };
    let mut out = Vec::new();
    for a in &ps {
        for b in &ls {
            for sign in [1, -1] {
                let cand = Cyclo::from_rational(&Rational::new(a * sign, b.clone()));
                if p.eval(&cand).is_zero() && !out.contains(&cand) {
                    out.push(cand);
                }
            }
        }
    }
    out
}

/// Largest k with every nonzero exponent divisible by k.
fn exponent_gcd(p: &UniPoly) -> usize {
    p.0.iter()
        .enumerate()
        .filter(|(k, c)| *k > 0 && !c.is_zero())
        .fold(0usize, |g, (k, _)| g.gcd(&k))
}

/// Roots of a squarefree polynomial with nonzero constant term.
fn squarefree_roots(p: &UniPoly, max_conductor: u32) -> Result<Vec<Cyclo>> {
    let deg = p.degree();
    if deg <= 0 {
        return Ok(vec![]);
    }
    if deg == 1 {
        return Ok(vec![-(&p.0[0] * &p.0[1].inverse()?)]);
    }
    let nonzero = p.0.iter().filter(|c| !c.is_zero()).count();
    if nonzero == 2 {
        let rhs = -(&p.0[0] * &p.lead().inverse()?);
        return all_nth_roots(&rhs, deg as u32, max_conductor);
    }
    let k = exponent_gcd(p);
    if k > 1 {
        // p(w) = g(w^k)
        let g = UniPoly::new(p.0.iter().step_by(k).cloned().collect());
        let mut out = Vec::new();
        for r in squarefree_roots(&g, max_conductor)? {
            out.extend(all_nth_roots(&r, k as u32, max_conductor)?);
        }
        return Ok(out);
    }
    if deg == 2 {
        let (c, b, a) = (&p.0[0], &p.0[1], &p.0[2]);
        let disc = b * b - Cyclo::from_int(4) * a * c;
        let s = nth_root(&disc, 2, max_conductor).map_err(|_| unsolvable(p))?;
        let two_a_inv = (Cyclo::from_int(2) * a).inverse()?;
        return Ok(vec![(-b + &s) * &two_a_inv, (-b - &s) * &two_a_inv]);
    }
    let found = rational_roots(p);
    if found.is_empty() {
        return Err(unsolvable(p));
    }
    let mut rest = p.clone();
    for r in &found {
        rest = rest.deflate(r);
    }
    let mut out = found;
    out.extend(squarefree_roots(&rest, max_conductor)?);
    Ok(out)
}

fn unsolvable(p: &UniPoly) -> Error {
    Error::ExtensionUnsupported(format!(
        "characteristic equation {p} = 0 is not solvable by the supported radicals"
    ))
}

/// Distinct roots with multiplicities.
pub fn roots_with_multiplicity(p: &UniPoly, max_conductor: u32) -> Result<Vec<(Cyclo, u32)>> {
    if p.is_zero() {
        return Err(Error::InvalidArgument("roots of the zero polynomial".into()));
    }
    let mut out = Vec::new();
    let mut work = p.clone();
    let zero_mult = work.0.iter().take_while(|c| c.is_zero()).count();
    if zero_mult > 0 {
        out.push((Cyclo::zero(), zero_mult as u32));
        work = UniPoly::new(work.0[zero_mult..].to_vec());
    }
    if work.degree() <= 0 {
        return Ok(out);
    }
    let g = work.gcd(&work.derivative());
    let sqfree = if g.degree() > 0 { work.div_rem(&g).0 } else { work.clone() };
    let candidates = match single_repeated_root(&work) {
        Some(r) => vec![r],
        None => squarefree_roots(&sqfree, max_conductor)?,
    };
    for r in candidates {
        let mut m = 0;
        loop {
            let (q, rem) = work.div_rem(&UniPoly(vec![-&r, Cyclo::one()]));
            if !rem.is_zero() {
                break;
            }
            work = q;
            m += 1;
        }
        if m == 0 {
            return Err(Error::InternalInconsistency(format!("spurious root {r} of {p}")));
        }
        out.push((r, m));
    }
    Ok(out)
}

/// If p = c (w - alpha)^n, return alpha.
fn single_repeated_root(p: &UniPoly) -> Option<Cyclo> {
    let n = p.degree();
    if n < 2 {
        return None;
    }
    let alpha = -(&p.0[n as usize - 1] * &(Cyclo::from_int(n as i64) * p.lead()).inverse().ok()?);
    let mut probe = UniPoly(vec![p.lead().clone()]);
    for _ in 0..n {
        probe = UniPoly::new(
            (0..=probe.0.len())
                .map(|k| {
                    let hi = if k >= 1 { probe.0[k - 1].clone() } else { Cyclo::zero() };
                    let lo = probe.0.get(k).map(|c| c * &alpha).unwrap_or_default();
                    hi - lo
                })
                .collect(),
        );
    }
    (probe == *p).then_some(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[i64]) -> UniPoly {
        UniPoly::new(cs.iter().map(|&c| Cyclo::from_int(c)).collect())
    }

    fn check(p: &UniPoly, expect_total: u32) {
        let roots = roots_with_multiplicity(p, 360).unwrap();
        let mut total = 0;
        for (r, m) in &roots {
            assert!(p.eval(r).is_zero(), "{r} is not a root of {p}");
            total += m;
        }
        assert_eq!(total, expect_total);
    }

    #[test]
    fn cube_roots_of_unity() {
        // z^2 + z + 1
        let p = poly(&[1, 1, 1]);
        let roots = roots_with_multiplicity(&p, 12).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.iter().any(|(r, _)| *r == Cyclo::rho()));
    }

    #[test]
    fn assorted() {
        check(&poly(&[1, 0, 1]), 2);
        check(&poly(&[-6, 11, -6, 1]), 3);
        check(&poly(&[1, 2, 1]), 2);
        check(&poly(&[0, 0, 4, 0, 1]), 4);
        check(&poly(&[1, 0, 1, 0, 1]), 4);
        check(&poly(&[-2, 0, 1]), 2);
        // (w - i)^3
        let i = Cyclo::i();
        let p = UniPoly(vec![
            -(&i * &i * &i),
            Cyclo::from_int(3) * &i * &i,
            Cyclo::from_int(-3) * &i,
            Cyclo::one(),
        ]);
        let r = roots_with_multiplicity(&p, 12).unwrap();
        assert_eq!(r, vec![(i, 3)]);
    }

    #[test]
    fn rejects_irreducible_cubic() {
        let p = poly(&[-2, -1, 0, 1]);
        // w^3 - w - 2 has no rational root
        assert!(matches!(roots_with_multiplicity(&p, 360), Err(Error::ExtensionUnsupported(_))));
    }
}
