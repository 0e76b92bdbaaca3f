//! Newton-Puiseux expansion of plane curve germs.
//!
//! A branch is parametrized by `(s, t) = (tau^m, y(tau))`, or with the roles of
//! `s` and `t` exchanged when the branch is tangent to `s = 0`. Coefficients are
//! found by solving the characteristic equation of each Newton polygon edge over
//! the cyclotomic field; once a root is simple the remaining series follows by
//! Newton iteration.

mod intersect;
mod polygon;

use std::sync::Arc;

use crate::arith::{nth_root, roots_with_multiplicity, CyclotomicNumber, UniPoly, DEFAULT_MAX_CONDUCTOR};
use crate::error::{Error, Result};
use crate::local::Codim;
use crate::poly::{vars, Monomial, Poly};
use crate::series::{eval_poly, Series, Valuation};

pub use intersect::{intersection_matrix, weierstrass_polynomial};
pub use polygon::{newton_polygon, Segment, SegmentKind};

type Cyclo = CyclotomicNumber;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PuiseuxConfig {
    /// Series truncation; `None` picks `4 * (t-degree) * (total degree)`.
    pub truncation: Option<u32>,
    pub max_conductor: u32,
    /// Number of precision doublings allowed before giving up.
    pub max_doublings: u32,
}

impl Default for PuiseuxConfig {
    fn default() -> Self {
        PuiseuxConfig { truncation: None, max_conductor: DEFAULT_MAX_CONDUCTOR, max_doublings: 4 }
    }
}

/// Data needed to extend a non-terminating branch to higher precision.
#[derive(Debug)]
struct NewtonTail {
    /// Residual equation in (x, y) with a simple root at the origin.
    f: Poly,
    prefix: Series,
    shift: u32,
}

/// One irreducible branch of a plane curve germ.
#[derive(Debug, Clone)]
pub struct PuiseuxBranch {
    ramification: u32,
    swapped: bool,
    series: Series,
    truncation: u32,
    tail: Option<Arc<NewtonTail>>,
}

impl PuiseuxBranch {
    fn exact(ramification: u32, swapped: bool, series: Series, truncation: u32) -> Self {
        PuiseuxBranch { ramification, swapped, series, truncation, tail: None }
    }

    pub fn ramification(&self) -> u32 {
        self.ramification
    }

    pub fn swapped(&self) -> bool {
        self.swapped
    }

    /// The dependent coordinate (t, or s when swapped) as a series in tau.
    pub fn series(&self) -> &Series {
        &self.series
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn is_exact(&self) -> bool {
        self.series.is_exact()
    }

    /// `(s(tau), t(tau))`.
    pub fn parametrization(&self) -> (Series, Series) {
        let x = Series::monomial(Cyclo::one(), self.ramification);
        if self.swapped {
            (self.series.clone(), x)
        } else {
            (x, self.series.clone())
        }
    }

    /// The same branch expanded to a different truncation.
    pub fn refined(&self, truncation: u32) -> Self {
        let Some(tail) = &self.tail else {
            return PuiseuxBranch { truncation, ..self.clone() };
        };
        let p = truncation.saturating_sub(tail.shift).max(1);
        let y1 = newton_solve(&tail.f, p);
        PuiseuxBranch {
            series: tail.prefix.add(&shift_series(&y1, tail.shift)),
            truncation,
            ..self.clone()
        }
    }

    /// Human-readable parametrization, showing at most `max_terms` terms.
    pub fn describe(&self, max_terms: usize) -> String {
        let (x, y) = if self.swapped { ("t", "s") } else { ("s", "t") };
        let terms = self.series.terms();
        let mut shown = Series::exact(vec![]);
        for (e, c) in terms.iter().take(max_terms) {
            shown = shown.add(&Series::monomial(c.clone(), *e));
        }
        let body = shown.to_string();
        let tail = if terms.len() > max_terms || !self.is_exact() { " + ..." } else { "" };
        let x_text = match self.ramification {
            1 => "tau".to_string(),
            m => format!("tau^{m}"),
        };
        format!("{x} = {x_text}, {y} = {body}{tail}")
    }
}

fn shift_series(s: &Series, e: u32) -> Series {
    s.mul(&Series::monomial(Cyclo::one(), e))
}

/// Branches of a reduced plane curve germ, in a fixed order.
#[derive(Debug, Clone)]
pub struct BranchSet {
    pub branches: Vec<PuiseuxBranch>,
    pub defining: Poly,
    pub config: PuiseuxConfig,
}

impl BranchSet {
    pub fn len(&self) -> usize {
        self.branches.len()
    }

    pub fn is_empty(&self) -> bool {
        self.branches.is_empty()
    }
}

/// `4 * (t-degree) * (total degree)`, with a small floor.
pub fn default_truncation(f: &Poly) -> u32 {
    (4 * f.degree_in(1).max(1) * f.total_degree().max(1)).max(8)
}

fn xy() -> Arc<[String]> {
    vars(&["x", "y"])
}

fn to_xy(f: &Poly, swap: bool) -> Poly {
    let target = xy();
    Poly::from_terms(
        &target,
        f.terms().map(|(m, c)| {
            let (i, j) = (m.get(0), m.get(1));
            let e = if swap { [j, i] } else { [i, j] };
            (Monomial::from_exps(&e), c.clone())
        }),
    )
}

/// Solve `f(x, y(x)) = 0` for the unique `y` with `y(0) = 0`, through `x^p`.
fn newton_solve(f: &Poly, p: u32) -> Series {
    let coeffs: Vec<Series> = f
        .coefficients_in(1)
        .into_iter()
        .map(|c| {
            let mut v = vec![Cyclo::zero(); c.degree_in(0) as usize + 1];
            for (m, a) in c.terms() {
                v[m.get(0) as usize] = a.clone();
            }
            Series::exact(v)
        })
        .collect();
    let mut y = Series::truncated(vec![], 0);
    let mut cur = 0;
    while cur < p {
        let next = (2 * cur + 1).min(p);
        let yt = Series::truncated(y.coeffs().to_vec(), next);
        let mut val = Series::truncated(vec![], next);
        let mut der = Series::truncated(vec![], next);
        for (j, c) in coeffs.iter().enumerate().rev() {
            val = val.mul(&yt).add(&c.truncate(next));
            if j >= 1 {
                der = der.mul(&yt).add(&c.truncate(next).scale(&Cyclo::from_int(j as i64)));
            }
        }
        let inv = der.truncate(next).inverse().expect("simple root");
        y = yt.sub(&val.mul(&inv)).truncate(next);
        cur = next;
    }
    y
}

/// `f(x^v, x^u (c + y)) / x^L`.
fn edge_substitute(f: &Poly, u: u32, v: u32, c: &Cyclo) -> Poly {
    let target = f.vars().clone();
    let mut binom: Vec<Poly> = vec![Poly::one(&target)];
    let base = &Poly::constant(&target, c.clone()) + &Poly::var(&target, 1);
    let mut out = Poly::zero(&target);
    for (m, a) in f.terms() {
        let (i, j) = (m.get(0), m.get(1));
        while binom.len() <= j as usize {
            let next = binom.last().unwrap() * &base;
            binom.push(next);
        }
        let shift = Monomial::var(0, v * i + u * j);
        out = &out + &binom[j as usize].mul_term(&shift, a);
    }
    let l = out.min_degree_in(0);
    Poly::from_terms(&target, out.terms().map(|(m, a)| {
        let mut nm = *m;
        nm.0[0] -= l;
        (nm, a.clone())
    }))
}

struct Expander {
    truncation: u32,
    max_conductor: u32,
    swapped: bool,
    out: Vec<PuiseuxBranch>,
}

impl Expander {
    fn expand(&mut self, f: Poly, prefix: Series, shift: u32, ram: u32) -> Result<()> {
        let mut f = f;
        if f.min_degree_in(1) >= 1 {
            self.out.push(PuiseuxBranch::exact(ram, self.swapped, prefix.clone(), self.truncation));
            f = Poly::from_terms(f.vars(), f.terms().map(|(m, a)| {
                let mut nm = *m;
                nm.0[1] -= 1;
                (nm, a.clone())
            }));
            if f.min_degree_in(1) >= 1 {
                return Err(Error::InvalidArgument("curve equation is not reduced".into()));
            }
            if !f.constant_term().is_zero() {
                return Ok(());
            }
        }
        if !f.coeff(&Monomial::var(1, 1)).is_zero() {
            return self.newton_tail(f, prefix, shift, ram);
        }
        let pts: Vec<(u32, u32)> = f.terms().map(|(m, _)| (m.get(0), m.get(1))).collect();
        for edge in polygon::compact_edges(&pts) {
            self.edge_step(&f, &edge, &prefix, shift, ram)?;
        }
        Ok(())
    }

    fn newton_tail(&mut self, f: Poly, prefix: Series, shift: u32, ram: u32) -> Result<()> {
        let p = self.truncation.saturating_sub(shift).max(1);
        let y1 = newton_solve(&f, p);
        let last = y1.coeffs().len() as u32;
        if 2 * last <= p {
            let candidate = y1.assume_exact();
            if eval_poly(&f, &[Series::monomial(Cyclo::one(), 1), candidate.clone()]).valuation() == Valuation::Zero {
                let series = prefix.add(&shift_series(&candidate, shift));
                self.out.push(PuiseuxBranch::exact(ram, self.swapped, series, self.truncation));
                return Ok(());
            }
        }
        let series = prefix.add(&shift_series(&y1, shift));
        self.out.push(PuiseuxBranch {
            ramification: ram,
            swapped: self.swapped,
            series,
            truncation: self.truncation,
            tail: Some(Arc::new(NewtonTail { f, prefix, shift })),
        });
        Ok(())
    }

    fn edge_step(&mut self, f: &Poly, edge: &Segment, prefix: &Series, shift: u32, ram: u32) -> Result<()> {
        let (u, v) = edge.slope().expect("compact edge");
        let j1 = edge.start.1;
        let height = (edge.end.1 - j1) / v;
        // chi(w) with psi(z) = z^j1 chi(z^v)
        let mut chi = vec![Cyclo::zero(); height as usize + 1];
        for (m, a) in f.terms() {
            let (i, j) = (m.get(0), m.get(1));
            if v * i + u * j == v * edge.start.0 + u * j1 {
                chi[((j - j1) / v) as usize] = a.clone();
            }
        }
        let chi = UniPoly::new(chi);
        for (w, _) in roots_with_multiplicity(&chi, self.max_conductor)? {
            if w.is_zero() {
                continue;
            }
            let c = nth_root(&w, v, self.max_conductor)?;
            let child = edge_substitute(f, u, v, &c);
            let new_shift = v * shift + u;
            let new_prefix = prefix.stretch(v).add(&Series::monomial(c, new_shift));
            self.expand(child, new_prefix, new_shift, ram * v)?;
        }
        Ok(())
    }
}

/// One branch per irreducible factor of the reduced germ `f(s, t)`.
pub fn puiseux_branches(f: &Poly, config: &PuiseuxConfig) -> Result<BranchSet> {
    if f.nvars() != 2 {
        return Err(Error::InvalidArgument("Puiseux expansion needs exactly two variables".into()));
    }
    if f.is_zero() {
        return Err(Error::InvalidArgument("the zero polynomial has no branch decomposition".into()));
    }
    if !f.constant_term().is_zero() {
        return Err(Error::InvalidArgument(format!("{f} does not vanish at the origin")));
    }
    let n = config.truncation.unwrap_or_else(|| default_truncation(f));
    let (ds, dt) = (f.min_degree_in(0), f.min_degree_in(1));
    if ds > 1 || dt > 1 {
        return Err(Error::InvalidArgument(format!("{f} is not reduced")));
    }
    let core = Poly::from_terms(f.vars(), f.terms().map(|(m, a)| {
        let mut nm = *m;
        nm.0[0] -= ds;
        nm.0[1] -= dt;
        (nm, a.clone())
    }));
    let mut branches = Vec::new();
    if ds == 1 {
        branches.push(PuiseuxBranch::exact(1, true, Series::zero(), n));
    }
    if core.constant_term().is_zero() {
        for swap in [true, false] {
            let g = to_xy(&core, swap);
            let pts: Vec<(u32, u32)> = g.terms().map(|(m, _)| (m.get(0), m.get(1))).collect();
            let mut edges: Vec<Segment> = polygon::compact_edges(&pts)
                .into_iter()
                .filter(|e| {
                    let (u, v) = e.slope().unwrap();
                    if swap { u > v } else { u >= v }
                })
                .collect();
            if swap {
                // increasing slope in the original coordinates
                edges.reverse();
            }
            let mut ex = Expander { truncation: n, max_conductor: config.max_conductor, swapped: swap, out: vec![] };
            for e in &edges {
                ex.edge_step(&g, e, &Series::zero(), 0, 1)?;
            }
            branches.extend(ex.out);
        }
    }
    if dt == 1 {
        branches.push(PuiseuxBranch::exact(1, false, Series::zero(), n));
    }
    Ok(BranchSet { branches, defining: f.clone(), config: PuiseuxConfig { truncation: Some(n), ..*config } })
}

/// Order in tau of `g` restricted to the branch, refining the expansion as needed.
pub fn order_along_branch(g: &Poly, b: &PuiseuxBranch, max_doublings: u32) -> Result<Codim> {
    let mut branch = b.clone();
    for round in 0..=max_doublings {
        if round > 0 {
            branch = branch.refined(branch.truncation() * 2);
        }
        let (s, t) = branch.parametrization();
        match eval_poly(g, &[s, t]).valuation() {
            Valuation::Order(k) => return Ok(Codim::Finite(k as u64)),
            Valuation::Zero => return Ok(Codim::Infinite),
            Valuation::AtLeast(_) => {}
        }
    }
    Err(Error::TruncationExceeded(format!(
        "order of {g} along the branch is not certified at truncation {}",
        branch.truncation()
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(t: &str) -> Poly {
        Poly::parse(&vars(&["s", "t"]), t).unwrap()
    }

    fn branches(t: &str) -> BranchSet {
        puiseux_branches(&poly(t), &PuiseuxConfig::default()).unwrap()
    }

    fn check_back_substitution(bs: &BranchSet) {
        for b in &bs.branches {
            let (s, t) = b.parametrization();
            match eval_poly(&bs.defining, &[s, t]).valuation() {
                Valuation::Zero => assert!(b.is_exact()),
                Valuation::AtLeast(k) => assert!(k > b.truncation()),
                Valuation::Order(k) => panic!("residual of order {k} on {}", b.describe(6)),
            }
        }
    }

    #[test]
    fn cusp_odd() {
        for k in [1u32, 3, 5, 7] {
            let bs = branches(&format!("t^2 + s^{k}"));
            assert_eq!(bs.len(), 1);
            let b = &bs.branches[0];
            assert_eq!(b.ramification(), if k == 1 { 1 } else { 2 });
            check_back_substitution(&bs);
            if k > 1 {
                assert!(!b.swapped());
                let terms = b.series().terms();
                assert_eq!(terms.len(), 1);
                assert_eq!(terms[0].0, k);
                assert_eq!(terms[0].1.pow(2), Cyclo::from_int(-1));
            }
        }
    }

    #[test]
    fn cusp_even_splits() {
        for n in 1..4u32 {
            let bs = branches(&format!("t^2 + s^{}", 2 * n));
            assert_eq!(bs.len(), 2);
            for b in &bs.branches {
                assert_eq!(b.ramification(), 1);
                assert_eq!(b.series().terms()[0].0, n);
            }
            check_back_substitution(&bs);
        }
    }

    #[test]
    fn marar_five_branches() {
        let bs = branches("(s + t^2)*(s^2 + t)*(s + t)*(s + zeta12^4*t)*(s + zeta12^8*t)");
        assert_eq!(bs.len(), 5);
        assert!(bs.branches[0].swapped());
        assert!(bs.branches.iter().all(|b| b.is_exact()));
        check_back_substitution(&bs);
    }

    #[test]
    fn axis_factors_and_order() {
        let bs = branches("s*t^2 + s^4");
        assert_eq!(bs.len(), 2);
        assert!(bs.branches[0].swapped() && bs.branches[0].series().valuation() == Valuation::Zero);
        let bs = branches("s*t");
        assert_eq!(bs.len(), 2);
        assert!(bs.branches[0].swapped() && !bs.branches[1].swapped());
    }

    #[test]
    fn non_terminating_branch() {
        let bs = branches("t^2 - s^3 - s^4*t + t^5");
        check_back_substitution(&bs);
        let b = &bs.branches[0];
        assert!(!b.is_exact());
        let finer = b.refined(b.truncation() * 2);
        let (s, t) = finer.parametrization();
        assert!(matches!(eval_poly(&bs.defining, &[s, t]).valuation(), Valuation::AtLeast(k) if k > finer.truncation()));
    }

    #[test]
    fn orders_along_branches() {
        let bs = branches("t^2 + s^3");
        let t = poly("t");
        assert_eq!(order_along_branch(&t, &bs.branches[0], 4).unwrap(), Codim::Finite(3));
        let bs = branches("t - i*s");
        assert_eq!(order_along_branch(&poly("s - t^2"), &bs.branches[0], 4).unwrap(), Codim::Finite(1));
        assert_eq!(order_along_branch(&poly("t - i*s"), &bs.branches[0], 4).unwrap(), Codim::Infinite);
        // (s - rho t^m) along s = rho^2 t^m has order m
        for k in 1..4u32 {
            let m = 3 * k - 2;
            let bs = branches(&format!("s - zeta12^8*t^{m}"));
            let g = poly(&format!("s - zeta12^4*t^{m}"));
            assert_eq!(order_along_branch(&g, &bs.branches[0], 4).unwrap(), Codim::Finite(m as u64));
        }
    }

    #[test]
    fn irreducible_cubic_edge_is_rejected() {
        let r = puiseux_branches(&poly("t^3 - t*s^2 - 2*s^3"), &PuiseuxConfig::default());
        assert!(matches!(r, Err(Error::ExtensionUnsupported(_))));
    }
}
