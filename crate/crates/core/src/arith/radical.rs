//! Roots of unity and pure radicals inside the cyclotomic tower.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::cyclotomic::{CyclotomicNumber, Rational};
use crate::error::{Error, Result};

type Cyclo = CyclotomicNumber;

const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;

fn check_conductor(order: u32, max_conductor: u32) -> Result<()> {
    if order > max_conductor {
        Err(Error::ExtensionUnsupported(format!(
            "radical needs conductor {order}, above the configured maximum {max_conductor}"
        )))
    } else {
        Ok(())
    }
}

/// Write `a = q * zeta_n^e` with `q > 0` rational, when possible.
///
/// Returns `(q, n, e)` with `n` the smallest even multiple of the order of `a`.
pub fn split_root_of_unity(a: &Cyclo) -> Option<(Rational, u32, u32)> {
    if a.is_zero() {
        return None;
    }
    let n = a.order().lcm(&2);
    for e in 0..n {
        let b = a * &Cyclo::zeta(n, -(e as i64));
        if let Some(q) = b.to_rational() {
            if q.is_positive() {
                return Some((q, n, e));
            }
        }
    }
    None
}

/// True when `a` is a root of unity.
pub fn is_root_of_unity(a: &Cyclo) -> bool {
    matches!(split_root_of_unity(a), Some((q, _, _)) if q.is_one())
}

fn exact_nth_root(x: &BigInt, r: u32) -> Option<BigInt> {
    let y = x.nth_root(r);
    (num_traits::pow(y.clone(), r as usize) == *x).then_some(y)
}

/// Positive r-th root of a positive rational, if it is rational.
pub fn rational_nth_root(q: &Rational, r: u32) -> Option<Rational> {
    if !q.is_positive() {
        return None;
    }
    Some(Rational::new(exact_nth_root(q.numer(), r)?, exact_nth_root(q.denom(), r)?))
}

fn odd_prime_sqrt(p: u32) -> Cyclo {
    // quadratic Gauss sum: g^2 = (-1)^((p-1)/2) p
    let mut g = Cyclo::zero();
    for a in 1..p {
        let chi = legendre(a, p);
        let z = Cyclo::zeta(p, a as i64);
        if chi == 1 {
            g += &z;
        } else {
            g -= &z;
        }
    }
    if p % 4 == 1 {
        g
    } else {
        -(Cyclo::zeta(4, 1) * g)
    }
}

fn legendre(a: u32, p: u32) -> i32 {
    let mut r: u64 = 1;
    let mut b = a as u64 % p as u64;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    if r == 1 {
        1
    } else {
        -1
    }
}

/// Prime factors of `n`, with repetition. Fails beyond the trial-division bound.
fn factor(n: &BigInt) -> Result<Vec<u32>> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p: u64 = 2;
    while BigInt::from(p * p) <= n {
        if p > TRIAL_DIVISION_LIMIT {
            return Err(Error::ExtensionUnsupported(format!(
                "cannot factor {n} within the trial-division bound"
            )));
        }
        let bp = BigInt::from(p);
        while (&n % &bp).is_zero() {
            out.push(p as u32);
            n /= &bp;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > BigInt::one() {
        let v = n.to_u32().ok_or_else(|| {
            Error::ExtensionUnsupported(format!("prime factor {n} too large for a Gauss sum"))
        })?;
        out.push(v);
    }
    Ok(out)
}

/// A square root of a rational number inside some Q(zeta_n).
pub fn sqrt_rational(q: &Rational, max_conductor: u32) -> Result<Cyclo> {
    if q.is_zero() {
        return Ok(Cyclo::zero());
    }
    if let Some(r) = rational_nth_root(&q.abs(), 2) {
        let root = Cyclo::from_rational(&r);
        return Ok(if q.is_negative() { root * Cyclo::zeta(4, 1) } else { root });
    }
    // sqrt(a/b) = sqrt(a b) / b, then pull square factors out of a b
    let m = q.numer().abs() * q.denom();
    let mut square = BigInt::one();
    let mut free: Vec<u32> = Vec::new();
    let mut primes = factor(&m)?;
    primes.sort_unstable();
    let mut k = 0;
    while k < primes.len() {
        let p = primes[k];
        let mut c = 0;
        while k < primes.len() && primes[k] == p {
            c += 1;
            k += 1;
        }
        square *= num_traits::pow(BigInt::from(p), c / 2);
        if c % 2 == 1 {
            free.push(p);
        }
    }
    let mut conductor: u32 = 1;
    for &p in &free {
        conductor = conductor.lcm(&if p == 2 { 8 } else { p });
        check_conductor(conductor, max_conductor)?;
    }
    let mut root = Cyclo::from_rational(&Rational::new(square, q.denom().clone()));
    for &p in &free {
        let s = if p == 2 {
            Cyclo::zeta(8, 1) - Cyclo::zeta(8, 3)
        } else {
            odd_prime_sqrt(p)
        };
        root = root * s;
    }
    if q.is_negative() {
        root = root * Cyclo::zeta(4, 1);
    }
    check_conductor(root.order(), max_conductor)?;
    Ok(root)
}

/// One r-th root of `a`, when it is a (rational radical) times a root of unity.
pub fn nth_root(a: &Cyclo, r: u32, max_conductor: u32) -> Result<Cyclo> {
    if r == 0 {
        return Err(Error::InvalidArgument("zeroth root".into()));
    }
    if r == 1 || a.is_zero() {
        return Ok(a.clone());
    }
    let Some((q, n, e)) = split_root_of_unity(a) else {
        return Err(Error::ExtensionUnsupported(format!(
            "w^{r} = {a} is not a pure radical of a rational number"
        )));
    };
    let unit_order = n * r;
    let unit = Cyclo::zeta(unit_order, e as i64);
    check_conductor(unit.order(), max_conductor)?;
    let magnitude = if let Some(m) = rational_nth_root(&q, r) {
        Cyclo::from_rational(&m)
    } else if r.is_multiple_of(2) {
        match rational_nth_root(&q, r / 2) {
            Some(m) => sqrt_rational(&m, max_conductor)?,
            None => {
                return Err(Error::ExtensionUnsupported(format!(
                    "{q} has no rational {}-th root",
                    r / 2
                )))
            }
        }
    } else {
        return Err(Error::ExtensionUnsupported(format!("{q} has no rational {r}-th root")));
    };
    let root = magnitude * unit;
    check_conductor(root.order(), max_conductor)?;
    Ok(root)
}

/// All r distinct r-th roots of a nonzero `a`.
pub fn all_nth_roots(a: &Cyclo, r: u32, max_conductor: u32) -> Result<Vec<Cyclo>> {
    let alpha = nth_root(a, r, max_conductor)?;
    if a.is_zero() {
        return Ok(vec![alpha]);
    }
    let mut out = Vec::with_capacity(r as usize);
    for j in 0..r {
        let root = &alpha * &Cyclo::zeta(r, j as i64);
        check_conductor(root.order(), max_conductor)?;
        out.push(root);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn square_roots() {
        for v in [-1i64, 2, 3, -3, 5, 6, -7, 12, 18, -20] {
            let s = sqrt_rational(&q(v, 1), 360).unwrap();
            assert_eq!(&s * &s, Cyclo::from_int(v), "sqrt({v})");
        }
        let s = sqrt_rational(&q(3, 8), 360).unwrap();
        assert_eq!(&s * &s, Cyclo::from_fraction(3, 8));
    }

    #[test]
    fn sqrt_minus_three_is_in_q_zeta12() {
        let s = sqrt_rational(&q(-3, 1), 12).unwrap();
        assert_eq!(12 % s.order(), 0);
        let two_rho_plus_one = Cyclo::rho() * Cyclo::from_int(2) + Cyclo::one();
        assert!(s == two_rho_plus_one || s == -two_rho_plus_one);
    }

    #[test]
    fn radicals_of_roots_of_unity() {
        let a = Cyclo::from_int(-16);
        let roots = all_nth_roots(&a, 4, 360).unwrap();
        assert_eq!(roots.len(), 4);
        for r in &roots {
            assert_eq!(r.pow(4), a);
        }
        let i = Cyclo::i();
        let r = nth_root(&i, 3, 360).unwrap();
        assert_eq!(r.pow(3), i);
    }

    #[test]
    fn unsupported_radicals() {
        assert!(matches!(nth_root(&Cyclo::from_int(2), 3, 360), Err(Error::ExtensionUnsupported(_))));
        assert!(matches!(
            sqrt_rational(&q(7, 1), 12),
            Err(Error::ExtensionUnsupported(_))
        ));
        assert!(is_root_of_unity(&(Cyclo::zero() - Cyclo::one())));
        assert!(!is_root_of_unity(&Cyclo::from_int(2)));
        assert!(!is_root_of_unity(&(Cyclo::one() + Cyclo::zeta(5, 1))));
    }
}
