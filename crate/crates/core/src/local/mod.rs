//! Standard bases in the local ring and quotient dimensions dim O/I.

mod oracle;

use std::fmt;

use crate::arith::CyclotomicNumber;
use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly};

pub use oracle::{jet_codimension_oracle, stabilized_jet_codimension};

type Cyclo = CyclotomicNumber;

/// Monomial order on the local ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LocalOrder {
    /// Negative degree, ties broken lexicographically; 1 is the largest monomial.
    #[default]
    AntiGradedLex,
}

/// Work limits for standard basis computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of critical pairs processed.
    pub max_pairs: usize,
    /// Staircases larger than this are reported as infinite.
    pub max_staircase: u64,
    /// Terms touched by reductions before a codimension falls back to truncated bases.
    pub reduction_work: usize,
    /// Largest truncation degree tried by the fallback.
    pub max_corner: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_pairs: 200_000, max_staircase: 10_000, reduction_work: 50_000, max_corner: 128 }
    }
}

/// Quotient dimension of a local ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Codim {
    Finite(u64),
    Infinite,
}

impl Codim {
    pub fn finite(self) -> Option<u64> {
        match self {
            Codim::Finite(n) => Some(n),
            Codim::Infinite => None,
        }
    }
}

impl fmt::Display for Codim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Codim::Finite(n) => write!(f, "{n}"),
            Codim::Infinite => write!(f, "INFINITE"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct StandardBasis {
    pub generators: Vec<Poly>,
    pub order: LocalOrder,
    /// Leading monomials of `generators`, in the same order.
    pub leading: Vec<Monomial>,
    /// When set, every monomial of at least this degree lies in the ideal.
    pub corner: Option<u32>,
    nvars: usize,
}

fn lead(f: &Poly) -> (Monomial, Cyclo) {
    let (m, c) = f.local_lead().expect("nonzero polynomial");
    (*m, c.clone())
}

fn ecart(f: &Poly) -> u32 {
    f.total_degree() - lead(f).0.degree()
}

fn truncate(f: &Poly, corner: Option<u32>) -> Poly {
    match corner {
        Some(d) if f.total_degree() >= d => {
            Poly::from_terms(f.vars(), f.terms().filter(|(m, _)| m.degree() < d).map(|(m, c)| (*m, c.clone())))
        }
        _ => f.clone(),
    }
}

/// Cancel the leading term of `h` against `g`.
fn reduce_once(h: &Poly, g: &Poly) -> Poly {
    let (hm, hc) = lead(h);
    let (gm, gc) = lead(g);
    let factor = &hc * &gc.inverse().expect("nonzero");
    h - &g.mul_term(&hm.div(&gm), &factor)
}

fn spoly(f: &Poly, g: &Poly) -> Poly {
    let (fm, fc) = lead(f);
    let (gm, gc) = lead(g);
    let l = fm.lcm(&gm);
    let a = f.mul_term(&l.div(&fm), &fc.inverse().expect("nonzero"));
    let b = g.mul_term(&l.div(&gm), &gc.inverse().expect("nonzero"));
    &a - &b
}

/// Weak normal form with Mora's ecart strategy.
///
/// The result `h` satisfies `u f - h` in the ideal for some unit `u`, and either
/// `h = 0` or its leading monomial lies outside the leading ideal of `basis`.
pub fn mora_normal_form(f: &Poly, basis: &[Poly], corner: Option<u32>) -> Poly {
    let mut unlimited = usize::MAX;
    normal_form_budget(f, basis, corner, &mut unlimited).expect("unbounded budget")
}

fn normal_form_budget(f: &Poly, basis: &[Poly], corner: Option<u32>, budget: &mut usize) -> Option<Poly> {
    let mut h = truncate(f, corner);
    let mut t: Vec<Poly> = basis.to_vec();
    while !h.is_zero() {
        let (hm, _) = lead(&h);
        if corner.is_some_and(|d| hm.degree() >= d) {
            return Some(Poly::zero(f.vars()));
        }

        let mut best: Option<(usize, u32)> = None;
        for (k, g) in t.iter().enumerate() {
            if lead(g).0.divides(&hm) {
                let e = ecart(g);
                if best.is_none_or(|(_, be)| e < be) {
                    best = Some((k, e));
                    if e == 0 {
                        break;
                    }
                }
            }
        }
        let Some((k, e)) = best else {
            return Some(h);
        };
        let g = t[k].clone();
        let size = (lead(&h).1.height_bits() / 64 + 1) as usize;
        *budget = budget.checked_sub((h.len() + g.len()) * size)?;
        if e > ecart(&h) {
            t.push(h.clone());
        }
        h = truncate(&reduce_once(&h, &g), corner);
    }
    Some(h)
}

/// Degree bound of the staircase when it is finite and small.
fn staircase(leading: &[Monomial], nvars: usize, corner: Option<u32>, cap: u64) -> Option<(u64, u32)> {
    let mut bounds = vec![u32::MAX; nvars];
    for m in leading {
        let support: Vec<usize> = (0..nvars).filter(|&k| m.get(k) > 0).collect();
        if support.len() == 1 {
            let k = support[0];
            bounds[k] = bounds[k].min(m.get(k));
        }
    }
    if let Some(d) = corner {
        for b in bounds.iter_mut() {
            *b = (*b).min(d);
        }
    }
    if bounds.contains(&u32::MAX) {
        return None;
    }
    let mut count = 0u64;
    let mut max_deg = 0;
    let mut exps = vec![0u32; nvars];
    loop {
        let m = Monomial::from_exps(&exps);
        let outside = !leading.iter().any(|l| l.divides(&m)) && corner.is_none_or(|d| m.degree() < d);
        if outside {
            count += 1;
            max_deg = max_deg.max(m.degree());
            if count > cap {
                return None;
            }
        }
        // odometer over the box below the pure powers
        let mut k = 0;
        loop {
            if k == nvars {
                return Some((count, max_deg));
            }
            exps[k] += 1;
            if exps[k] < bounds[k] {
                break;
            }
            exps[k] = 0;
            k += 1;
        }
    }
}

/// Standard basis of the ideal generated by `gens` in the local ring.
pub fn standard_basis(gens: &[Poly], order: LocalOrder, limits: &Limits) -> Result<StandardBasis> {
    let mut unlimited = usize::MAX;
    standard_basis_inner(gens, order, limits, None, &mut unlimited)?
        .ok_or_else(|| Error::ResourceExceeded("standard basis reduction budget".into()))
}

/// `None` when the reduction budget runs out. `initial_corner` declares that every
/// monomial of that degree lies in the ideal.
fn standard_basis_inner(
    gens: &[Poly],
    order: LocalOrder,
    limits: &Limits,
    initial_corner: Option<u32>,
    budget: &mut usize,
) -> Result<Option<StandardBasis>> {
    let Some(first) = gens.first() else {
        return Err(Error::InvalidArgument("standard basis of an empty generator list".into()));
    };
    for g in gens {
        first.check_vars(g)?;
    }
    let nvars = first.nvars();
    if gens.iter().any(|g| !g.constant_term().is_zero()) {
        let one = Poly::one(first.vars());
        return Ok(Some(StandardBasis {
            generators: vec![one],
            order,
            leading: vec![Monomial::ONE],
            corner: Some(0),
            nvars,
        }));
    }
    let refresh_corner = |basis: &[Poly], corner: &mut Option<u32>| {
        let leading: Vec<Monomial> = basis.iter().map(|b| lead(b).0).collect();
        if let Some((_, d)) = staircase(&leading, nvars, *corner, limits.max_staircase) {
            *corner = Some(d + 1);
        }
    };
    // generators with pure-power leads first, so a corner is known early
    let mut order_gens: Vec<&Poly> = gens.iter().collect();
    order_gens.sort_by_key(|g| {
        let m = lead(g).0;
        ((0..nvars).filter(|&k| m.get(k) > 0).count() != 1, ecart(g), m.degree())
    });
    let mut basis: Vec<Poly> = Vec::new();
    let mut corner: Option<u32> = initial_corner;
    for g in order_gens {
        let Some(h) = normal_form_budget(g, &basis, corner, budget) else {
            return Ok(None);
        };
        if !h.is_zero() {
            basis.push(h.normalize_unit());
            refresh_corner(&basis, &mut corner);
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let mut processed = 0usize;
    while !pairs.is_empty() {
        processed += 1;
        if processed > limits.max_pairs {
            return Err(Error::ResourceExceeded(format!(
                "standard basis exceeded {} critical pairs",
                limits.max_pairs
            )));
        }
        let pick = (0..pairs.len())
            .min_by_key(|&k| {
                let (i, j) = pairs[k];
                lead(&basis[i]).0.lcm(&lead(&basis[j]).0).degree()
            })
            .unwrap();
        let (i, j) = pairs.remove(pick);
        let (mi, mj) = (lead(&basis[i]).0, lead(&basis[j]).0);
        if corner.is_some_and(|d| mi.lcm(&mj).degree() >= d) {
            continue;
        }
        let s = spoly(&basis[i], &basis[j]);
        let Some(h) = normal_form_budget(&s, &basis, corner, budget) else {
            return Ok(None);
        };
        if h.is_zero() {
            continue;
        }
        let n = basis.len();
        basis.push(h.normalize_unit());
        for k in 0..n {
            pairs.push((k, n));
        }
        refresh_corner(&basis, &mut corner);
    }
    let leading = basis.iter().map(|b| lead(b).0).collect();
    Ok(Some(StandardBasis { generators: basis, order, leading, corner, nvars }))
}

impl StandardBasis {
    /// Number of standard monomials, or infinite.
    pub fn codimension(&self, limits: &Limits) -> Codim {
        match staircase(&self.leading, self.nvars, self.corner, limits.max_staircase) {
            Some((n, _)) => Codim::Finite(n),
            None => Codim::Infinite,
        }
    }

    pub fn normal_form(&self, f: &Poly) -> Poly {
        mora_normal_form(f, &self.generators, self.corner)
    }
}

/// dim O/I for the ideal generated by `gens`.
pub fn local_codimension(gens: &[Poly]) -> Result<Codim> {
    local_codimension_with(gens, &Limits::default())
}

pub fn local_codimension_with(gens: &[Poly], limits: &Limits) -> Result<Codim> {
    let nonzero: Vec<Poly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Ok(Codim::Infinite);
    }
    let mut budget = limits.reduction_work;
    if let Some(sb) = standard_basis_inner(&nonzero, LocalOrder::AntiGradedLex, limits, None, &mut budget)? {
        return Ok(sb.codimension(limits));
    }
    truncated_codimension(&nonzero, limits)
}

/// dim O/(I + m^d) for increasing d; two equal consecutive values certify m^d in I.
fn truncated_codimension(gens: &[Poly], limits: &Limits) -> Result<Codim> {
    let mut budget = limits.reduction_work.saturating_mul(100);
    let mut at = |d: u32| -> Result<Codim> {
        let sb = standard_basis_inner(gens, LocalOrder::AntiGradedLex, limits, Some(d), &mut budget)?
            .ok_or_else(|| Error::ResourceExceeded(format!("standard basis work limit reached at degree {d}")))?;
        Ok(sb.codimension(limits))
    };
    let mut d = gens.iter().filter_map(|g| g.order()).max().unwrap_or(1).max(2);
    let mut prev = at(d)?;
    while d < limits.max_corner {
        if prev == Codim::Infinite {
            return Ok(Codim::Infinite);
        }
        d += 1;
        let cur = at(d)?;
        if cur == prev {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::ResourceExceeded(format!(
        "codimension not certified below degree {}",
        limits.max_corner
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::vars;

    fn ps(texts: &[&str]) -> Vec<Poly> {
        let v = vars(&["s", "t"]);
        texts.iter().map(|t| Poly::parse(&v, t).unwrap()).collect()
    }

    fn leading_of(texts: &[&str]) -> Vec<String> {
        let g = ps(texts);
        let sb = standard_basis(&g, LocalOrder::AntiGradedLex, &Limits::default()).unwrap();
        let mut out: Vec<String> = sb.leading.iter().map(|m| g[0].fmt_monomial(m)).collect();
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn leading_ideals() {
        assert_eq!(leading_of(&["s", "t"]), ["s", "t"]);
        let l = leading_of(&["t^2 + s^3", "s*t"]);
        for m in ["t^2", "s*t", "s^4"] {
            assert!(l.contains(&m.to_string()), "{l:?}");
        }
        assert_eq!(leading_of(&["2*t", "s", "-2*t^2"]), ["s", "t"]);
    }

    #[test]
    fn codimensions() {
        assert_eq!(local_codimension(&ps(&["s", "t"])).unwrap(), Codim::Finite(1));
        assert_eq!(local_codimension(&ps(&["s^2", "t^3"])).unwrap(), Codim::Finite(6));
        assert_eq!(local_codimension(&ps(&["t^2 + s^3", "s*t"])).unwrap(), Codim::Finite(5));
        assert_eq!(local_codimension(&ps(&["s*t"])).unwrap(), Codim::Infinite);
        assert_eq!(local_codimension(&ps(&["1 + s", "t"])).unwrap(), Codim::Finite(0));
        // units do not change the local ideal
        assert_eq!(local_codimension(&ps(&["(1 + s)*(t^2 + s^3)", "(1 + t)*s*t"])).unwrap(), Codim::Finite(5));
    }

    #[test]
    fn generators_reduce_to_zero() {
        let g = ps(&["t^2 + s^3 + s*t^2", "s*t + t^4", "s^5 + t^3"]);
        let sb = standard_basis(&g, LocalOrder::AntiGradedLex, &Limits::default()).unwrap();
        for f in &g {
            assert!(sb.normal_form(f).is_zero());
        }
    }
}
