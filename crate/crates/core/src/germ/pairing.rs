//! Matching branches of the double point curve that have the same image.

use crate::arith::{all_nth_roots, CyclotomicNumber, Rational};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::puiseux::{BranchSet, PuiseuxBranch};
use crate::series::{eval_poly, Series, Valuation};

type Cyclo = CyclotomicNumber;

/// Image of a branch, reparametrized so that one chosen component is `lead * z^e`.
#[derive(Debug, Clone)]
struct NormalImage {
    component: usize,
    e: u32,
    lead: Cyclo,
    comps: Vec<Series>,
}

fn normal_image(phi: &[Poly; 3], b: &PuiseuxBranch, prec: u32) -> Result<NormalImage> {
    let (s, t) = b.parametrization();
    let omega: Vec<Series> = phi.iter().map(|f| eval_poly(f, &[s.clone(), t.clone()]).truncate(prec)).collect();
    let mut best: Option<(u32, usize)> = None;
    for (k, w) in omega.iter().enumerate() {
        if let Valuation::Order(e) = w.valuation() {
            if best.is_none_or(|(be, _)| e < be) {
                best = Some((e, k));
            }
        }
    }
    let Some((e, component)) = best else {
        return Err(Error::TruncationExceeded(format!(
            "image of branch {} is not visible below order {prec}",
            b.describe(4)
        )));
    };
    let lead = omega[component].coeff(e);
    let c = &omega[component];
    let single = c.terms().len() == 1;
    if single && (c.is_exact() || c.precision().is_some_and(|p| p >= prec)) {
        return Ok(NormalImage { component, e, lead, comps: omega });
    }
    // omega_c = lead tau^e u(tau), u(0) = 1; z = tau u^(1/e)
    let inv = lead.inverse()?;
    let shifted: Vec<Cyclo> = c.coeffs()[e as usize..].iter().map(|x| x * &inv).collect();
    let p = c.precision().unwrap_or(prec).saturating_sub(e);
    let u = Series::truncated(shifted, p);
    let root = u.unit_power(&Rational::new(1.into(), (e as i64).into()));
    let z = root.mul(&Series::monomial(Cyclo::one(), 1));
    let back = z.reversion(p + 1);
    let comps = omega.iter().map(|w| w.compose(&back)).collect();
    Ok(NormalImage { component, e, lead, comps })
}

/// Certified agreement order of two images under `z -> omega z`; `None` when they differ.
fn agreement(a: &NormalImage, b: &NormalImage, omega: &Cyclo) -> Option<u32> {
    let mut certified = u32::MAX;
    for (x, y) in a.comps.iter().zip(&b.comps) {
        match x.sub(&y.rotate(omega)).valuation() {
            Valuation::Order(_) => return None,
            Valuation::AtLeast(q) => certified = certified.min(q),
            Valuation::Zero => {}
        }
    }
    Some(certified)
}

/// Whether branch `k`'s image, reparametrized, equals branch `i`'s (excluding the identity when i = k).
fn matches(
    ni: &NormalImage,
    nk: &NormalImage,
    same: bool,
    max_conductor: u32,
) -> Result<Option<u32>> {
    if ni.component != nk.component || ni.e != nk.e {
        return Ok(None);
    }
    let ratio = &ni.lead * &nk.lead.inverse()?;
    for omega in all_nth_roots(&ratio, ni.e, max_conductor)? {
        if same && omega.is_one() {
            continue;
        }
        if let Some(q) = agreement(ni, nk, &omega) {
            return Ok(Some(q));
        }
    }
    Ok(None)
}

fn images(phi: &[Poly; 3], bs: &BranchSet, prec: u32) -> Result<Vec<NormalImage>> {
    bs.branches.iter().map(|b| normal_image(phi, b, prec)).collect()
}

fn certify(q: u32, e: u32, i: usize, k: usize) -> Result<()> {
    if q != u32::MAX && q < 2 * e + 2 {
        return Err(Error::TruncationExceeded(format!(
            "images of branches {} and {} agree only through order {q}",
            i + 1,
            k + 1
        )));
    }
    Ok(())
}

/// The involution sigma on branches: `sigma[i]` is the unique branch with the same image.
pub fn find_pairing(phi: &[Poly; 3], bs: &BranchSet, prec: u32, max_conductor: u32) -> Result<Vec<usize>> {
    let imgs = images(phi, bs, prec)?;
    let n = imgs.len();
    let mut sigma = Vec::with_capacity(n);
    for i in 0..n {
        let mut partners = Vec::new();
        for k in 0..n {
            if let Some(q) = matches(&imgs[i], &imgs[k], i == k, max_conductor)? {
                certify(q, imgs[i].e, i, k)?;
                partners.push(k);
            }
        }
        match partners.as_slice() {
            [k] => sigma.push(*k),
            [] => {
                return Err(Error::TruncationExceeded(format!(
                    "no partner branch found for branch {} at order {prec}",
                    i + 1
                )))
            }
            _ => {
                return Err(Error::TruncationExceeded(format!(
                    "branch {} has several candidate partners {:?}",
                    i + 1,
                    partners.iter().map(|k| k + 1).collect::<Vec<_>>()
                )))
            }
        }
    }
    for i in 0..n {
        if sigma[sigma[i]] != i {
            return Err(Error::InternalInconsistency("branch pairing is not an involution".into()));
        }
    }
    Ok(sigma)
}

/// Check a supplied pairing against the image series.
pub fn validate_pairing(
    phi: &[Poly; 3],
    bs: &BranchSet,
    sigma: &[usize],
    prec: u32,
    max_conductor: u32,
) -> Result<()> {
    let n = bs.len();
    if sigma.len() != n || (0..n).any(|i| sigma[i] >= n || sigma[sigma[i]] != i) {
        return Err(Error::InvalidOverride(format!("pairing is not an involution on {n} branches")));
    }
    let imgs = images(phi, bs, prec)?;
    for i in 0..n {
        let k = sigma[i];
        match matches(&imgs[i], &imgs[k], i == k, max_conductor)? {
            Some(q) if q == u32::MAX || q >= 2 * imgs[i].e + 2 => {}
            _ => {
                return Err(Error::InvalidOverride(format!(
                    "branches {} and {} do not have the same image",
                    i + 1,
                    k + 1
                )))
            }
        }
    }
    Ok(())
}
