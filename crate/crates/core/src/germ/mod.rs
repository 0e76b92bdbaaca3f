//! Invariants of a germ (C^2,0) -> (C^3,0): cross caps, triple points, the
//! double point curve and its pairing, vertical indices and framing data.

pub mod catalog;
mod pairing;

use std::sync::Arc;

use crate::arith::{CyclotomicNumber, DEFAULT_MAX_CONDUCTOR};
use crate::error::{Error, Result};
use crate::linking::{self, AbstractLink, Framing};
use crate::local::{local_codimension_with, Codim, Limits};
use crate::poly::{divided_difference, jacobian_minors, resultant, squarefree_part, vars, Monomial, Poly};
use crate::puiseux::{
    intersection_matrix, order_along_branch, puiseux_branches, weierstrass_polynomial, BranchSet, PuiseuxConfig,
};

pub use pairing::{find_pairing, validate_pairing};

type Cyclo = CyclotomicNumber;

/// Source variables `(s, t)`.
pub fn source_vars() -> Arc<[String]> {
    vars(&["s", "t"])
}

#[derive(Debug, Clone)]
pub struct Germ {
    pub name: String,
    pub phi: [Poly; 3],
    pub override_d: Option<Poly>,
    pub override_t: Option<u64>,
    /// Partner of each branch (0-based); fixed points are twisted components.
    pub override_pairing: Option<Vec<usize>>,
    /// Vertical indices per component, in component order.
    pub fixture_vi: Option<Vec<i64>>,
    pub conductor: Option<u32>,
}

impl Germ {
    pub fn new(name: &str, phi: [Poly; 3]) -> Self {
        Germ {
            name: name.to_string(),
            phi,
            override_d: None,
            override_t: None,
            override_pairing: None,
            fixture_vi: None,
            conductor: None,
        }
    }

    /// Parse the three components over `(s, t)`.
    pub fn parse(name: &str, phi: [&str; 3]) -> Result<Self> {
        let v = source_vars();
        let p = |t: &str| Poly::parse(&v, t);
        Ok(Germ::new(name, [p(phi[0])?, p(phi[1])?, p(phi[2])?]))
    }

    fn validate(&self) -> Result<()> {
        let v = source_vars();
        for (k, f) in self.phi.iter().enumerate() {
            if f.vars() != &v {
                return Err(Error::InvalidArgument(format!("component {} is not over (s, t)", k + 1)));
            }
            if !f.constant_term().is_zero() {
                return Err(Error::InvalidArgument(format!("component {} does not vanish at the origin", k + 1)));
            }
        }
        if let Some(d) = &self.override_d {
            if d.vars() != &v {
                return Err(Error::InvalidOverride("d must be a polynomial in (s, t)".into()));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PipelineConfig {
    pub truncation: Option<u32>,
    pub max_conductor: u32,
    pub limits: Limits,
    /// Series order used to match branch images.
    pub pairing_precision: u32,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig { truncation: None, max_conductor: DEFAULT_MAX_CONDUCTOR, limits: Limits::default(), pairing_precision: 60 }
    }
}

/// Precision used to validate a supplied pairing.
pub const OVERRIDE_PAIRING_PRECISION: u32 = 50;

/// Branches of the double point curve with their pairing.
#[derive(Debug, Clone)]
pub struct DoublePointData {
    pub d: Poly,
    pub branches: BranchSet,
    pub sigma: Vec<usize>,
    /// Orbits of sigma, ordered by smallest member.
    pub components: Vec<Vec<usize>>,
    pub twisted: Vec<bool>,
    pub inter: Vec<Vec<u64>>,
}

impl DoublePointData {
    fn new(d: Poly, branches: BranchSet, sigma: Vec<usize>, inter: Vec<Vec<u64>>) -> Self {
        let mut components = Vec::new();
        for i in 0..sigma.len() {
            if sigma[i] >= i {
                components.push(if sigma[i] == i { vec![i] } else { vec![i, sigma[i]] });
            }
        }
        let twisted = components.iter().map(|c| c.len() == 1).collect();
        DoublePointData { d, branches, sigma, components, twisted, inter }
    }

    /// `sum_{k != i} D_i . D_k`.
    pub fn row_sum(&self, i: usize) -> i64 {
        self.inter[i].iter().enumerate().filter(|(k, _)| *k != i).map(|(_, v)| *v as i64).sum()
    }

    /// `sum_{i != k} D_i . D_k` over ordered pairs.
    pub fn total_intersection(&self) -> i64 {
        (0..self.sigma.len()).map(|i| self.row_sum(i)).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurgeryKind {
    /// Pair of solid tori glued along two branches.
    UntwistedPair,
    /// Twisted piece over a single branch.
    TwistedPiece,
}

pub type Matrix2 = [[i64; 2]; 2];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurgeryPiece {
    pub kind: SurgeryKind,
    /// Gluing in the (meridian, component Seifert longitude) basis.
    pub gluing: Matrix2,
    /// Gluing in the (meridian, link Seifert framing) basis.
    pub gluing_seifert: Matrix2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Checks {
    pub eq1: bool,
    pub l_two_routes: bool,
    pub milnor_c_zero: bool,
    pub intersection_oracle: bool,
}

impl Checks {
    pub fn all(&self) -> bool {
        self.eq1 && self.l_two_routes && self.milnor_c_zero && self.intersection_oracle
    }

    pub fn named(&self) -> [(&'static str, bool); 4] {
        [
            ("eq1", self.eq1),
            ("L_two_routes", self.l_two_routes),
            ("milnor_c_zero", self.milnor_c_zero),
            ("intersection_oracle", self.intersection_oracle),
        ]
    }
}

#[derive(Debug, Clone)]
pub struct InvariantReport {
    pub name: String,
    pub corank: u32,
    pub c: u64,
    pub t: u64,
    pub l: i64,
    /// `None` when the double point curve is empty.
    pub double: Option<DoublePointData>,
    pub lambda: Option<Vec<i64>>,
    pub vi: Vec<Option<i64>>,
    pub vi_sum: i64,
    pub delta: Option<Vec<i64>>,
    pub a_n: Option<Vec<i64>>,
    pub surgery: Option<Vec<SurgeryPiece>>,
    pub checks: Checks,
    pub notes: Vec<String>,
}

/// 2 minus the rank of the linear part.
pub fn corank(phi: &[Poly; 3]) -> u32 {
    let lin = |f: &Poly, k: usize| f.coeff(&Monomial::var(k, 1));
    let rows: Vec<[Cyclo; 2]> = phi.iter().map(|f| [lin(f, 0), lin(f, 1)]).collect();
    let rank2 = (0..3).any(|a| {
        (a + 1..3).any(|b| !(&(&rows[a][0] * &rows[b][1]) - &(&rows[a][1] * &rows[b][0])).is_zero())
    });
    if rank2 {
        0
    } else if rows.iter().flatten().any(|c| !c.is_zero()) {
        1
    } else {
        2
    }
}

pub fn cross_cap_number(phi: &[Poly; 3], limits: &Limits) -> Result<u64> {
    let minors = jacobian_minors(phi)?;
    match local_codimension_with(&minors, limits)? {
        Codim::Finite(n) => Ok(n),
        Codim::Infinite => Err(Error::NotFinitelyDetermined("the ramification ideal has infinite codimension".into())),
    }
}

/// Linear change of source coordinates bringing a corank-1 germ to `(s, p, q)`.
pub fn corank_one_form(phi: &[Poly; 3]) -> Result<[Poly; 3]> {
    let v = source_vars();
    for a in 0..3 {
        let f = &phi[a];
        if f.total_degree() != 1 || f.is_zero() {
            continue;
        }
        let alpha = f.coeff(&Monomial::var(0, 1));
        let beta = f.coeff(&Monomial::var(1, 1));
        let (s, t) = (Poly::var(&v, 0), Poly::var(&v, 1));
        // old coordinates in terms of new ones, with the new s equal to f
        let (old_s, old_t) = if !alpha.is_zero() {
            let inv = alpha.inverse()?;
            ((&s - &t.scale(&beta)).scale(&inv), t.clone())
        } else {
            (t.clone(), s.scale(&beta.inverse()?))
        };
        let images = [old_s, old_t];
        let rest: Vec<Poly> = (0..3).filter(|&k| k != a).map(|k| phi[k].compose(&v, &images)).collect();
        return Ok([s, rest[0].clone(), rest[1].clone()]);
    }
    Err(Error::NeedsOverride(
        "corank-1 germ without a linear component; supply d and T".into(),
    ))
}

/// Reduced double point curve of `(s, p, q)` via divided differences and a resultant.
pub fn double_point_curve(normal: &[Poly; 3]) -> Result<Poly> {
    let p = divided_difference(&normal[1], "t", "u")?;
    let q = divided_difference(&normal[2], "t", "u")?;
    if p.is_zero() || q.is_zero() {
        return Err(Error::NotFinitelyDetermined("a divided difference vanishes identically".into()));
    }
    let r = if p.degree_in(2) == 0 && q.degree_in(2) == 0 {
        // no u: the double point locus is p = q = 0 itself
        return Err(Error::NotFinitelyDetermined("double point equations do not involve the second point".into()));
    } else {
        resultant(&p, &q, "u")?
    };
    if r.is_zero() {
        return Err(Error::NotFinitelyDetermined("the double point resultant vanishes".into()));
    }
    squarefree_part(&r.with_vars(&source_vars())?)
}

/// `T` for `(s, p, q)` from the triple point space in `(s, t1, t2, t3)`.
pub fn triple_point_number(normal: &[Poly; 3], limits: &Limits) -> Result<u64> {
    let v = vars(&["s", "t1", "t2", "t3"]);
    let lift = |f: &Poly| f.relabel(&vars(&["s", "t1"])).with_vars(&v);
    let mut gens = Vec::new();
    for f in &normal[1..] {
        let f = lift(f)?;
        let f12 = divided_difference(&f, "t1", "t2")?;
        let f123 = divided_difference(&f12, "t2", "t3")?;
        gens.push(f12);
        gens.push(f123);
    }
    match local_codimension_with(&gens, limits)? {
        Codim::Finite(n) if n % 6 == 0 => Ok(n / 6),
        Codim::Finite(n) => Err(Error::InternalInconsistency(format!(
            "triple point space has codimension {n}, not divisible by 6"
        ))),
        Codim::Infinite => Err(Error::NotFinitelyDetermined("triple point space is not isolated".into())),
    }
}

/// Whether `phi = (s, t^2, t h(s, t^2))` exactly.
pub fn in_simple_class(phi: &[Poly; 3]) -> bool {
    let v = source_vars();
    if phi[0] != Poly::var(&v, 0) || phi[1] != Poly::var(&v, 1).pow(2) {
        return false;
    }
    let q = &phi[2];
    !q.is_zero() && q.terms().all(|(m, _)| m.get(1) % 2 == 1)
}

/// `lambda_i = -sum_{k != i} D_i.D_k - ord_i(t)` for germs in the simple class.
pub fn lambda_indices(dp: &DoublePointData, max_doublings: u32) -> Result<Vec<i64>> {
    let t = Poly::var(&source_vars(), 1);
    let mut out = Vec::new();
    for (i, b) in dp.branches.branches.iter().enumerate() {
        let ord = match order_along_branch(&t, b, max_doublings)? {
            Codim::Finite(n) => n as i64,
            Codim::Infinite => return Err(Error::NotApplicable("a branch lies in t = 0".into())),
        };
        out.push(-dp.row_sum(i) - ord);
    }
    Ok(out)
}

/// `-sum_{i != k} D_i.D_k - C + 3T`.
pub fn vertical_index_sum(dp: Option<&DoublePointData>, c: u64, t: u64) -> i64 {
    -dp.map_or(0, |d| d.total_intersection()) - c as i64 + 3 * t as i64
}

/// Invert the framing formula: `a(N_i)` per branch and `Delta_j` per component.
pub fn framing_invariants(dp: &DoublePointData, vi: &[i64]) -> Result<(Vec<i64>, Vec<i64>)> {
    let mut a = vec![0i64; dp.sigma.len()];
    let mut delta = Vec::with_capacity(dp.components.len());
    for (j, comp) in dp.components.iter().enumerate() {
        let val = match comp.as_slice() {
            [i] => 2 * (vi[j] + dp.row_sum(*i)),
            [i, k] => vi[j] + dp.row_sum(*i) + dp.row_sum(*k),
            _ => unreachable!(),
        };
        if dp.twisted[j] && val % 2 != 0 {
            return Err(Error::InternalInconsistency("odd normal framing invariant on a twisted component".into()));
        }
        for &i in comp {
            a[i] = val;
        }
        delta.push(val);
    }
    Ok((a, delta))
}

/// Forward formula: vertical indices from `a(N_i)`.
pub fn vertical_from_framing(dp: &DoublePointData, a_n: &[i64]) -> Vec<i64> {
    dp.components
        .iter()
        .map(|comp| match comp.as_slice() {
            [i] => a_n[*i] / 2 - dp.row_sum(*i),
            [i, k] => a_n[*i] - dp.row_sum(*i) - dp.row_sum(*k),
            _ => unreachable!(),
        })
        .collect()
}

pub fn ekholm_szucs_l(c: u64, t: u64) -> i64 {
    c as i64 - 3 * t as i64
}

pub fn milnor_boundary_data(dp: &DoublePointData, vi: &[i64], a_n: &[i64]) -> Vec<SurgeryPiece> {
    dp.components
        .iter()
        .enumerate()
        .map(|(j, comp)| {
            let a = a_n[comp[0]];
            let (kind, alt) = if dp.twisted[j] { (SurgeryKind::TwistedPiece, a / 2) } else { (SurgeryKind::UntwistedPair, a) };
            SurgeryPiece { kind, gluing: [[-1, vi[j]], [0, 1]], gluing_seifert: [[-1, alt], [0, 1]] }
        })
        .collect()
}

/// The abstract link carried by the double point data.
pub fn abstract_link(dp: &DoublePointData, delta: &[i64]) -> Result<AbstractLink> {
    let lk = dp.inter.iter().map(|r| r.iter().map(|&v| v as i64).collect()).collect();
    AbstractLink::new(lk, dp.sigma.clone(), delta.to_vec())
}

/// Framing whose components glue to the Milnor fibre boundary, read off from the vertical indices.
pub fn milnor_framing(dp: &DoublePointData, vi: &[i64]) -> Framing {
    let mut a = vec![0i64; dp.sigma.len()];
    for (j, comp) in dp.components.iter().enumerate() {
        match comp.as_slice() {
            [i] => a[*i] = vi[j] + dp.row_sum(*i),
            [i, k] => {
                a[*i] = dp.row_sum(*i);
                a[*k] = vi[j] + dp.row_sum(*k);
            }
            _ => unreachable!(),
        }
    }
    Framing { a }
}

fn intersection_oracle(dp: &DoublePointData, limits: &Limits) -> Result<bool> {
    let v = source_vars();
    let w: Vec<Poly> = dp.branches.branches.iter().map(|b| weierstrass_polynomial(b, &v)).collect();
    for i in 0..w.len() {
        for k in i + 1..w.len() {
            let c = local_codimension_with(&[w[i].clone(), w[k].clone()], limits)?;
            if c != Codim::Finite(dp.inter[i][k]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn validated_override_d(d: &Poly) -> Result<Poly> {
    if d.is_zero() || !d.constant_term().is_zero() {
        return Err(Error::InvalidOverride("d must vanish at the origin".into()));
    }
    let sf = squarefree_part(d)?;
    let norm = d.normalize_unit();
    if sf != norm {
        return Err(Error::InvalidOverride(format!("d = {d} is not squarefree")));
    }
    Ok(norm)
}

/// Run the whole pipeline on one germ.
pub fn analyze(germ: &Germ, cfg: &PipelineConfig) -> Result<InvariantReport> {
    germ.validate()?;
    let max_conductor = germ.conductor.unwrap_or(cfg.max_conductor);
    let corank = corank(&germ.phi);
    let c = cross_cap_number(&germ.phi, &cfg.limits)?;
    let mut notes = Vec::new();

    if corank == 0 {
        notes.push("immersion: empty double point curve, the boundary is the 3-sphere".to_string());
        return Ok(InvariantReport {
            name: germ.name.clone(),
            corank,
            c,
            t: 0,
            l: ekholm_szucs_l(c, 0),
            double: None,
            lambda: None,
            vi: vec![],
            vi_sum: 0,
            delta: Some(vec![]),
            a_n: Some(vec![]),
            surgery: Some(vec![]),
            checks: Checks { eq1: true, l_two_routes: true, milnor_c_zero: true, intersection_oracle: true },
            notes,
        });
    }

    let normal = if corank == 1 { Some(corank_one_form(&germ.phi)) } else { None };
    let (phi, d) = match (&germ.override_d, &normal) {
        (Some(d), _) => (germ.phi.clone(), validated_override_d(d)?),
        (None, Some(Ok(n))) => (n.clone(), double_point_curve(n)?),
        (None, Some(Err(e))) => return Err(e.clone()),
        (None, None) => return Err(Error::NeedsOverride("corank-2 germ: supply d and T".into())),
    };
    let t = match (germ.override_t, &normal) {
        (Some(t), _) => t,
        (None, Some(Ok(n))) => triple_point_number(n, &cfg.limits)?,
        (None, Some(Err(e))) => return Err(e.clone()),
        (None, None) => return Err(Error::NeedsOverride("corank-2 germ: supply T".into())),
    };

    let pcfg = PuiseuxConfig { truncation: cfg.truncation, max_conductor, ..PuiseuxConfig::default() };
    let branches = puiseux_branches(&d, &pcfg)?;
    let inter = intersection_matrix(&branches)?;
    let sigma = match &germ.override_pairing {
        Some(sigma) => {
            validate_pairing(&phi, &branches, sigma, OVERRIDE_PAIRING_PRECISION, max_conductor)?;
            sigma.clone()
        }
        None => {
            let prec = cfg.pairing_precision.min(branches.config.truncation.unwrap_or(cfg.pairing_precision));
            match find_pairing(&phi, &branches, prec, max_conductor) {
                Err(e) if germ.override_d.is_some() => {
                    return Err(Error::InvalidOverride(format!("d does not pair up under the germ: {e}")))
                }
                r => r?,
            }
        }
    };
    let dp = DoublePointData::new(d, branches, sigma, inter);

    let lambda = if corank == 1 && t == 0 && germ.override_d.is_none() && in_simple_class(&phi) {
        Some(lambda_indices(&dp, pcfg.max_doublings)?)
    } else {
        None
    };
    let vi_sum = vertical_index_sum(Some(&dp), c, t);
    let ncomp = dp.components.len();
    let vi: Vec<Option<i64>> = if let Some(fx) = &germ.fixture_vi {
        if fx.len() != ncomp {
            return Err(Error::InvalidOverride(format!("{} vertical indices given for {ncomp} components", fx.len())));
        }
        notes.push("vertical indices supplied as fixture".to_string());
        fx.iter().map(|&v| Some(v)).collect()
    } else if let Some(lam) = &lambda {
        dp.components.iter().map(|comp| Some(comp.iter().map(|&i| lam[i]).sum())).collect()
    } else if ncomp == 1 {
        notes.push("single component: vertical index equals the sum".to_string());
        vec![Some(vi_sum)]
    } else {
        notes.push("per-component vertical indices undetermined".to_string());
        vec![None; ncomp]
    };

    let l = ekholm_szucs_l(c, t);
    let known: Option<Vec<i64>> = vi.iter().copied().collect();
    let mut checks = Checks { eq1: true, l_two_routes: true, milnor_c_zero: true, intersection_oracle: true };
    checks.eq1 = vi_sum + dp.total_intersection() + c as i64 - 3 * t as i64 == 0
        && known.as_ref().is_none_or(|v| v.iter().sum::<i64>() == vi_sum);
    checks.intersection_oracle = intersection_oracle(&dp, &cfg.limits)?;
    let (delta, a_n, surgery) = match &known {
        Some(vi) => {
            let (a_n, delta) = framing_invariants(&dp, vi)?;
            let twice: i64 = a_n.iter().sum();
            checks.l_two_routes = twice % 2 == 0 && -twice / 2 == l;
            let link = abstract_link(&dp, &delta)?;
            let mf = milnor_framing(&dp, vi);
            checks.milnor_c_zero = (0..ncomp).all(|j| linking::c_of(&link, j, &mf) == 0);
            let surgery = milnor_boundary_data(&dp, vi, &a_n);
            (Some(delta), Some(a_n), Some(surgery))
        }
        None => (None, None, None),
    };
    Ok(InvariantReport {
        name: germ.name.clone(),
        corank,
        c,
        t,
        l,
        double: Some(dp),
        lambda,
        vi,
        vi_sum,
        delta,
        a_n,
        surgery,
        checks,
        notes,
    })
}
