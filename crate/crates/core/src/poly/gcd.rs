//! Multivariate gcd by content / primitive-part recursion, and squarefree parts.

use super::{Monomial, Poly};
use crate::error::{Error, Result};

/// Greatest common divisor, normalized so its local leading coefficient is 1.
pub fn gcd(f: &Poly, g: &Poly) -> Poly {
    assert!(f.same_vars(g), "variable lists differ");
    gcd_rec(f, g).normalize_unit()
}

fn gcd_rec(f: &Poly, g: &Poly) -> Poly {
    if f.is_zero() {
        return g.clone();
    }
    if g.is_zero() {
        return f.clone();
    }
    if f.is_constant() || g.is_constant() {
        return Poly::one(f.vars());
    }
    if f.len() == 1 && g.len() == 1 {
        let (a, _) = f.lex_lead().unwrap();
        let (b, _) = g.lex_lead().unwrap();
        let mut m = Monomial::ONE;
        for k in 0..f.nvars() {
            m.0[k] = a.get(k).min(b.get(k));
        }
        return Poly::term(f.vars(), m, crate::arith::CyclotomicNumber::one());
    }
    let v = (0..f.nvars()).find(|&k| f.contains_var(k) || g.contains_var(k)).unwrap();
    if !f.contains_var(v) {
        return gcd_rec(f, &content(g, v));
    }
    if !g.contains_var(v) {
        return gcd_rec(&content(f, v), g);
    }
    let cf = content(f, v);
    let cg = content(g, v);
    let c = gcd_rec(&cf, &cg);
    let mut a = f.div_exact(&cf).expect("content divides");
    let mut b = g.div_exact(&cg).expect("content divides");
    if a.degree_in(v) < b.degree_in(v) {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() && b.degree_in(v) > 0 {
        let r = pseudo_rem(&a, &b, v);
        a = b;
        b = if r.is_zero() { r } else { primitive_part(&r, v) };
    }
    let h = if b.is_zero() { primitive_part(&a, v) } else { Poly::one(f.vars()) };
    &c * &h
}

/// Gcd of the coefficients of `f` viewed as a polynomial in variable `v`.
fn content(f: &Poly, v: usize) -> Poly {
    let mut c = Poly::zero(f.vars());
    for coef in f.coefficients_in(v) {
        if coef.is_zero() {
            continue;
        }
        c = gcd_rec(&c, &coef);
        if c.is_constant() {
            return Poly::one(f.vars());
        }
    }
    c.normalize_unit()
}

fn primitive_part(f: &Poly, v: usize) -> Poly {
    let c = content(f, v);
    f.div_exact(&c).expect("content divides").normalize_unit()
}

/// lc(b)^k * a mod b, as polynomials in variable `v`.
fn pseudo_rem(a: &Poly, b: &Poly, v: usize) -> Poly {
    let db = b.degree_in(v);
    let bc = b.coefficients_in(v);
    let lb = bc[db as usize].clone();
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lr = r.coefficients_in(v)[dr as usize].clone();
        let shift = Poly::term(r.vars(), Monomial::var(v, dr - db), crate::arith::CyclotomicNumber::one());
        r = &(&lb * &r) - &(&(&lr * &shift) * b);
    }
    r
}

/// `f / gcd(f, df/dx_1, ..., df/dx_n)`: the product of the distinct irreducible factors of `f`.
pub fn squarefree_part(f: &Poly) -> Result<Poly> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("squarefree part of the zero polynomial".into()));
    }
    let mut g = f.clone();
    for k in 0..f.nvars() {
        if f.contains_var(k) {
            g = gcd_rec(&g, &f.derivative(k));
        }
    }
    let g = g.normalize_unit();
    Ok(f.div_exact(&g).expect("gcd divides").normalize_unit())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::vars;

    fn p(text: &str) -> Poly {
        Poly::parse(&vars(&["s", "t"]), text).unwrap()
    }

    #[test]
    fn gcds() {
        assert_eq!(gcd(&p("(s + t)*(s - t^2)"), &p("(s + t)*(s^3 + t)")), p("s + t"));
        assert_eq!(gcd(&p("s^2*t"), &p("s*t^3")), p("s*t"));
        assert_eq!(gcd(&p("s + 1"), &p("t")), p("1"));
        assert_eq!(gcd(&p("(s - i*t)^2*(s+1)"), &p("(s - i*t)*(s - 1)")), p("s - i*t"));
    }

    #[test]
    fn squarefree() {
        assert_eq!(squarefree_part(&p("(t^2 + s^3)^2")).unwrap(), p("t^2 + s^3"));
        assert_eq!(squarefree_part(&p("s^2*(s + t)")).unwrap(), p("s*(s + t)"));
        assert_eq!(squarefree_part(&p("s*t^2*(s + t^2)")).unwrap(), p("s*t*(s + t^2)"));
    }
}
