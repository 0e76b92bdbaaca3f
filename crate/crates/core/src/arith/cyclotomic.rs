use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Conductor used for literals when nothing else is requested; contains both `i` and `rho`.
pub const DEFAULT_CONDUCTOR: u32 = 12;
/// Largest conductor the radical machinery may promote to.
pub const DEFAULT_MAX_CONDUCTOR: u32 = 360;

/// Multiplication data for Q(zeta_n) in the power basis 1, zeta, ..., zeta^(phi-1).
pub(crate) struct Table {
    pub phi: usize,
    /// `powers[e]` is zeta^e reduced modulo the cyclotomic polynomial, for e in 0..order.
    pub powers: Vec<Vec<BigInt>>,
    /// Residues coprime to the order; they index the Galois group.
    pub units: Vec<u32>,
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division by a monic integer polynomial.
fn poly_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qlen = rem.len() - dd;
    let mut quot = vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= &c * d;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(|x| x.is_zero()));
    quot
}

fn x_pow_minus_one(d: u32) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); d as usize + 1];
    p[0] = BigInt::from(-1);
    p[d as usize] = BigInt::one();
    p
}

fn moebius(mut n: u32) -> i32 {
    let mut mu = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// Coefficients (low to high) of the n-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1);
    let mut num = vec![BigInt::one()];
    let mut dens = Vec::new();
    for d in 1..=n {
        if !n.is_multiple_of(d) {
            continue;
        }
        match moebius(n / d) {
            1 => num = poly_mul(&num, &x_pow_minus_one(d)),
            -1 => dens.push(x_pow_minus_one(d)),
            _ => {}
        }
    }
    for d in dens {
        num = poly_div_monic(&num, &d);
    }
    num
}

pub fn euler_phi(n: u32) -> u32 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u32
}

fn build_table(n: u32) -> Table {
    let phi_poly = cyclotomic_polynomial(n);
    let phi = phi_poly.len() - 1;
    let mut powers = Vec::with_capacity(n as usize);
    let mut cur = vec![BigInt::zero(); phi];
    cur[0] = BigInt::one();
    for _ in 0..n {
        powers.push(cur.clone());
        // multiply by x, then reduce x^phi = -(lower coefficients)
        let top = cur[phi - 1].clone();
        let mut next = vec![BigInt::zero(); phi];
        for j in (1..phi).rev() {
            next[j] = cur[j - 1].clone();
        }
        if !top.is_zero() {
            for j in 0..phi {
                next[j] -= &top * &phi_poly[j];
            }
        }
        cur = next;
    }
    let units = (1..=n).filter(|k| k.gcd(&n) == 1).map(|k| k % n).collect();
    Table { phi, powers, units }
}

pub(crate) fn table(n: u32) -> Arc<Table> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Table>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return t.clone();
    }
    let t = Arc::new(build_table(n));
    cache.lock().unwrap().entry(n).or_insert(t).clone()
}

/// Exact element of the cyclotomic field Q(zeta_n).
///
/// Stored as `nums / den` in the power basis of Q(zeta_n). The representation is
/// canonical for a fixed order: `den > 0`, the content of `nums` is coprime to
/// `den`, and elements of Q are always stored at order 1. Elements stored at
/// different orders are compared after promotion to the common order.
#[derive(Clone)]
pub struct CyclotomicNumber {
    order: u32,
    den: BigInt,
    nums: Vec<BigInt>,
}

impl CyclotomicNumber {
    fn normalized(order: u32, mut nums: Vec<BigInt>, mut den: BigInt) -> Self {
        debug_assert!(!den.is_zero());
        let (order, mut nums) = if nums.iter().skip(1).all(|x| x.is_zero()) {
            nums.truncate(1);
            (1, nums)
        } else {
            (order, nums)
        };
        if nums.iter().all(|x| x.is_zero()) {
            return Self::zero();
        }
        let mut g = den.clone();
        for x in &nums {
            if g.is_one() {
                break;
            }
            g = g.gcd(x);
        }
        if den.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for x in nums.iter_mut() {
                *x = &*x / &g;
            }
            den /= &g;
        }
        CyclotomicNumber { order, den, nums }
    }

    pub fn zero() -> Self {
        CyclotomicNumber { order: 1, den: BigInt::one(), nums: vec![BigInt::zero()] }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        CyclotomicNumber { order: 1, den: BigInt::one(), nums: vec![BigInt::from(v)] }
    }

    pub fn from_bigint(v: BigInt) -> Self {
        CyclotomicNumber { order: 1, den: BigInt::one(), nums: vec![v] }
    }

    pub fn from_rational(q: &Rational) -> Self {
        Self::normalized(1, vec![q.numer().clone()], q.denom().clone())
    }

    pub fn from_fraction(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Self::normalized(1, vec![BigInt::from(n)], BigInt::from(d))
    }

    /// Element with the given power-basis coordinates in Q(zeta_order).
    pub fn from_coeffs(order: u32, coeffs: &[Rational]) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidArgument("cyclotomic order must be positive".into()));
        }
        let t = table(order);
        if coeffs.len() != t.phi {
            return Err(Error::InvalidArgument(format!(
                "order {order} needs {} coordinates, got {}",
                t.phi,
                coeffs.len()
            )));
        }
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Ok(Self::normalized(order, nums, den))
    }

    /// zeta_n^e, stored at the smallest order that contains it.
    pub fn zeta(n: u32, e: i64) -> Self {
        assert!(n > 0);
        let e = e.rem_euclid(n as i64) as u32;
        let g = e.gcd(&n).max(1);
        let (n, e) = if e == 0 { (1, 0) } else { (n / g, e / g) };
        if n == 1 {
            return Self::one();
        }
        let t = table(n);
        Self::normalized(n, t.powers[e as usize].clone(), BigInt::one())
    }

    /// The imaginary unit, at the default conductor 12 (i = zeta_12^3).
    pub fn i() -> Self {
        Self::zeta(DEFAULT_CONDUCTOR, 3).promote_to(DEFAULT_CONDUCTOR)
    }

    /// rho = -1/2 + (sqrt 3/2) i = zeta_12^4, a primitive cube root of unity.
    pub fn rho() -> Self {
        Self::zeta(DEFAULT_CONDUCTOR, 4).promote_to(DEFAULT_CONDUCTOR)
    }

    /// Re-express at an order divisible by the current one. Rational values stay at order 1.
    pub fn promote_to(&self, m: u32) -> Self {
        if self.order == 1 || self.order == m {
            return self.clone();
        }
        assert!(m.is_multiple_of(self.order), "order {} does not divide {}", self.order, m);
        let nums = self.promoted_nums(m);
        CyclotomicNumber { order: m, den: self.den.clone(), nums }
    }

    fn promoted_nums(&self, m: u32) -> Vec<BigInt> {
        if self.order == m {
            return self.nums.clone();
        }
        let t = table(m);
        let mut out = vec![BigInt::zero(); t.phi];
        if self.order == 1 {
            out[0] = self.nums[0].clone();
            return out;
        }
        let step = (m / self.order) as usize;
        for (j, c) in self.nums.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, p) in t.powers[(j * step) % m as usize].iter().enumerate() {
                if !p.is_zero() {
                    out[k] += c * p;
                }
            }
        }
        out
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Bit length of the largest integer in the stored representation.
    pub fn height_bits(&self) -> u64 {
        self.nums.iter().map(|x| x.bits()).max().unwrap_or(0).max(self.den.bits())
    }

    pub fn is_zero(&self) -> bool {
        self.order == 1 && self.nums[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.order == 1 && self.nums[0].is_one() && self.den.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.order == 1
    }

    pub fn to_rational(&self) -> Option<Rational> {
        if self.order == 1 {
            Some(Rational::new(self.nums[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// Power-basis coordinates at the stored order.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.nums.iter().map(|n| Rational::new(n.clone(), self.den.clone())).collect()
    }

    fn common_order(a: &Self, b: &Self) -> u32 {
        a.order.lcm(&b.order)
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -other.clone() } else { other.clone() };
        }
        let m = Self::common_order(self, other);
        let a = self.promoted_nums(m);
        let b = other.promoted_nums(m);
        let (nums, den) = if self.den == other.den {
            let nums = a
                .into_iter()
                .zip(b)
                .map(|(x, y)| if negate { x - y } else { x + y })
                .collect();
            (nums, self.den.clone())
        } else {
            let nums = a
                .into_iter()
                .zip(b)
                .map(|(x, y)| {
                    let l = x * &other.den;
                    let r = y * &self.den;
                    if negate { l - r } else { l + r }
                })
                .collect();
            (nums, &self.den * &other.den)
        };
        Self::normalized(m, nums, den)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.order == 1 || other.order == 1 {
            let (r, full) = if self.order == 1 { (self, other) } else { (other, self) };
            let nums = full.nums.iter().map(|x| x * &r.nums[0]).collect();
            return Self::normalized(full.order, nums, &r.den * &full.den);
        }
        let m = Self::common_order(self, other);
        let t = table(m);
        let a = self.promoted_nums(m);
        let b = other.promoted_nums(m);
        let mut conv = vec![BigInt::zero(); 2 * t.phi - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    conv[i + j] += x * y;
                }
            }
        }
        let mut out = vec![BigInt::zero(); t.phi];
        for (e, c) in conv.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if e < t.phi {
                out[e] += c;
            } else {
                for (k, p) in t.powers[e % m as usize].iter().enumerate() {
                    if !p.is_zero() {
                        out[k] += &c * p;
                    }
                }
            }
        }
        Self::normalized(m, out, &self.den * &other.den)
    }

    /// Image under the Galois automorphism zeta -> zeta^k (k coprime to the order).
    pub fn galois(&self, k: u32) -> Self {
        if self.order == 1 {
            return self.clone();
        }
        let n = self.order;
        let t = table(n);
        let mut out = vec![BigInt::zero(); t.phi];
        for (j, c) in self.nums.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = (j as u64 * k as u64 % n as u64) as usize;
            for (idx, p) in t.powers[e].iter().enumerate() {
                if !p.is_zero() {
                    out[idx] += c * p;
                }
            }
        }
        Self::normalized(n, out, self.den.clone())
    }

    /// Field norm down to Q.
    pub fn norm(&self) -> Rational {
        if self.order == 1 {
            return self.to_rational().unwrap();
        }
        let t = table(self.order);
        let mut acc = self.clone();
        for &k in t.units.iter().filter(|&&k| k != 1) {
            acc = &acc * &self.galois(k);
        }
        acc.to_rational().expect("norm lies in Q")
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.order == 1 {
            return Ok(Self::normalized(1, vec![self.den.clone()], self.nums[0].clone()));
        }
        let t = table(self.order);
        let mut conj = Self::one();
        for &k in t.units.iter().filter(|&&k| k != 1) {
            conj = &conj * &self.galois(k);
        }
        let norm = (self * &conj).to_rational().expect("norm lies in Q");
        let inv_norm = Self::from_rational(&norm.recip());
        Ok(&conj * &inv_norm)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
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

    /// Integer power, negative exponents through the inverse.
    pub fn powi(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.inverse()?.pow((-e) as u32))
        }
    }

    fn fmt_terms(&self) -> String {
        if self.order == 1 {
            return fmt_rational(&self.nums[0], &self.den);
        }
        let mut out = String::new();
        for (j, c) in self.nums.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coef = fmt_rational(c, &self.den);
            let (neg, mag) = match coef.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, coef),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let z = match j {
                0 => String::new(),
                1 => format!("zeta{}", self.order),
                _ => format!("zeta{}^{}", self.order, j),
            };
            if j == 0 {
                out.push_str(&mag);
            } else if mag == "1" {
                out.push_str(&z);
            } else {
                out.push_str(&format!("{mag}*{z}"));
            }
        }
        out
    }

    /// True when the rendering is a single signed atom (no internal `+`/`-`).
    pub fn is_atomic(&self) -> bool {
        self.order == 1 || self.nums.iter().filter(|c| !c.is_zero()).count() == 1
    }
}

fn fmt_rational(n: &BigInt, d: &BigInt) -> String {
    if d.is_one() {
        n.to_string()
    } else {
        format!("{n}/{d}")
    }
}

impl Default for CyclotomicNumber {
    fn default() -> Self {
        Self::zero()
    }
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            self.den == other.den && self.nums == other.nums
        } else {
            (self - other).is_zero()
        }
    }
}

impl Eq for CyclotomicNumber {}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_terms())
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl From<i64> for CyclotomicNumber {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl From<&Rational> for CyclotomicNumber {
    fn from(q: &Rational) -> Self {
        Self::from_rational(q)
    }
}

impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(mut self) -> Self {
        for x in self.nums.iter_mut() {
            *x = -std::mem::take(x);
        }
        self
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        -self.clone()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&CyclotomicNumber> for &CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $m(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
                let f: fn(&CyclotomicNumber, &CyclotomicNumber) -> CyclotomicNumber = $body;
                f(self, rhs)
            }
        }
        impl $tr<CyclotomicNumber> for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $m(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&CyclotomicNumber> for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $m(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
                (&self).$m(rhs)
            }
        }
        impl $tr<CyclotomicNumber> for &CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $m(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_impl(b, false));
forward_binop!(Sub, sub, |a, b| a.add_impl(b, true));
forward_binop!(Mul, mul, |a, b| a.mul_impl(b));
forward_binop!(Div, div, |a, b| a.checked_div(b).expect("division by zero"));

impl AddAssign<&CyclotomicNumber> for CyclotomicNumber {
    fn add_assign(&mut self, rhs: &CyclotomicNumber) {
        *self = self.add_impl(rhs, false);
    }
}

impl SubAssign<&CyclotomicNumber> for CyclotomicNumber {
    fn sub_assign(&mut self, rhs: &CyclotomicNumber) {
        *self = self.add_impl(rhs, true);
    }
}

impl MulAssign<&CyclotomicNumber> for CyclotomicNumber {
    fn mul_assign(&mut self, rhs: &CyclotomicNumber) {
        *self = self.mul_impl(rhs);
    }
}

impl std::iter::Sum for CyclotomicNumber {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for CyclotomicNumber {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |a, b| a * b)
    }
}

/// Binary field operation selector, mirroring the textual interface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Apply `op`, refusing results whose conductor would exceed `max_conductor`.
pub fn field_arith(
    a: &CyclotomicNumber,
    b: &CyclotomicNumber,
    op: FieldOp,
    max_conductor: u32,
) -> Result<CyclotomicNumber> {
    let m = a.order.lcm(&b.order);
    if m > max_conductor {
        return Err(Error::ExtensionUnsupported(format!(
            "conductor {m} exceeds the configured maximum {max_conductor}"
        )));
    }
    Ok(match op {
        FieldOp::Add => a + b,
        FieldOp::Sub => a - b,
        FieldOp::Mul => a * b,
        FieldOp::Div => a.checked_div(b)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> CyclotomicNumber {
        CyclotomicNumber::from_fraction(n, d)
    }

    #[test]
    fn cyclotomic_polynomials() {
        let show = |n| cyclotomic_polynomial(n).iter().map(|c| c.to_string()).collect::<Vec<_>>();
        assert_eq!(show(1), ["-1", "1"]);
        assert_eq!(show(4), ["1", "0", "1"]);
        assert_eq!(show(12), ["1", "0", "-1", "0", "1"]);
        assert_eq!(show(3), ["1", "1", "1"]);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(360), 96);
    }

    #[test]
    fn defining_relations() {
        let i = CyclotomicNumber::i();
        assert_eq!(&i * &i, q(-1, 1));
        let rho = CyclotomicNumber::rho();
        assert_eq!(rho.pow(3), CyclotomicNumber::one());
        assert!((&rho * &rho + &rho + CyclotomicNumber::one()).is_zero());
        let a = q(1, 2) + &i;
        let b = q(1, 2) - &i;
        assert_eq!(a * b, q(5, 4));
    }

    #[test]
    fn zero_tests() {
        let z6 = CyclotomicNumber::zeta(12, 6);
        assert!((z6 + CyclotomicNumber::one()).is_zero());
        assert!(!q(1, 3).is_zero());
        // rho written as -1/2 + (sqrt 3)/2 i, with sqrt 3 = zeta12 + zeta12^11
        let sqrt3 = CyclotomicNumber::zeta(12, 1) + CyclotomicNumber::zeta(12, 11);
        assert_eq!(&sqrt3 * &sqrt3, q(3, 1));
        let rho = q(-1, 2) + q(1, 2) * sqrt3 * CyclotomicNumber::i();
        assert_eq!(rho, CyclotomicNumber::rho());
    }

    #[test]
    fn mixed_orders_compare_by_value() {
        let i4 = CyclotomicNumber::zeta(4, 1);
        let i12 = CyclotomicNumber::i();
        assert_eq!(i4.order(), 4);
        assert_eq!(i12.order(), 12);
        assert_eq!(i4, i12);
        let z8 = CyclotomicNumber::zeta(8, 1);
        assert_eq!((&z8 * &z8), i4);
        assert_eq!((&z8 * &i12).order(), 24);
    }

    #[test]
    fn inverse_and_division() {
        let a = q(3, 2) + CyclotomicNumber::zeta(12, 1) * q(-7, 5);
        let inv = a.inverse().unwrap();
        assert!((&a * &inv).is_one());
        assert_eq!(CyclotomicNumber::zero().inverse(), Err(Error::DivisionByZero));
        let r = field_arith(&a, &CyclotomicNumber::zero(), FieldOp::Div, 360);
        assert_eq!(r, Err(Error::DivisionByZero));
    }

    #[test]
    fn conductor_guard() {
        let a = CyclotomicNumber::zeta(7, 1);
        let b = CyclotomicNumber::zeta(11, 1);
        assert!(matches!(
            field_arith(&a, &b, FieldOp::Mul, 60),
            Err(Error::ExtensionUnsupported(_))
        ));
        assert!(field_arith(&a, &b, FieldOp::Mul, 77).is_ok());
    }

    #[test]
    fn display() {
        assert_eq!(q(-3, 4).to_string(), "-3/4");
        assert_eq!(CyclotomicNumber::i().to_string(), "zeta12^3");
        assert_eq!(CyclotomicNumber::rho().to_string(), "-1 + zeta12^2");
    }
}
