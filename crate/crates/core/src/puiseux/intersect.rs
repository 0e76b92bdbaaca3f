//! Intersection multiplicities between branches.

use std::sync::Arc;

use super::{BranchSet, PuiseuxBranch};
use crate::arith::CyclotomicNumber;
use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly};
use crate::series::{Series, Valuation};

type Cyclo = CyclotomicNumber;

/// `prod_j (y - y_b(zeta_m^j tau))` as coefficients in `y`, each a series in `x = tau^m`.
fn weierstrass_coefficients(b: &PuiseuxBranch) -> Vec<Series> {
    let m = b.ramification();
    let mut w = vec![Series::constant(Cyclo::one())];
    for j in 0..m {
        let root = b.series().rotate(&Cyclo::zeta(m, j as i64));
        let mut next = vec![Series::zero(); w.len() + 1];
        for (k, c) in w.iter().enumerate() {
            next[k + 1] = next[k + 1].add(c);
            next[k] = next[k].sub(&c.mul(&root));
        }
        w = next;
    }
    w.into_iter()
        .map(|c| {
            let coeffs: Vec<Cyclo> = c.coeffs().iter().step_by(m as usize).cloned().collect();
            debug_assert!(c.terms().iter().all(|(e, _)| e % m == 0));
            match c.precision() {
                None => Series::exact(coeffs),
                Some(p) => Series::truncated(coeffs, p / m),
            }
        })
        .collect()
}

/// The branch as a polynomial in its own chart, truncated where the expansion stops.
pub fn weierstrass_polynomial(b: &PuiseuxBranch, vars: &Arc<[String]>) -> Poly {
    let (xi, yi) = if b.swapped() { (1, 0) } else { (0, 1) };
    let mut terms = Vec::new();
    for (j, c) in weierstrass_coefficients(b).iter().enumerate() {
        for (e, a) in c.terms() {
            let mut m = Monomial::ONE;
            m.0[xi] = e;
            m.0[yi] = j as u32;
            terms.push((m, a));
        }
    }
    Poly::from_terms(vars, terms)
}

/// Order of branch `k`'s Weierstrass polynomial along branch `i`.
fn pair_order(bi: &PuiseuxBranch, bk: &PuiseuxBranch) -> Valuation {
    let x = Series::monomial(Cyclo::one(), bi.ramification());
    let (big_x, big_y) = if bi.swapped() == bk.swapped() {
        (x, bi.series().clone())
    } else {
        (bi.series().clone(), x)
    };
    let mut acc = Series::zero();
    for c in weierstrass_coefficients(bk).iter().rev() {
        acc = acc.mul(&big_y).add(&c.compose(&big_x));
    }
    acc.valuation()
}

fn certified_order(bi: &PuiseuxBranch, bk: &PuiseuxBranch, max_doublings: u32) -> Result<u64> {
    let (mut bi, mut bk) = (bi.clone(), bk.clone());
    for round in 0..=max_doublings {
        if round > 0 {
            bi = bi.refined(bi.truncation() * 2);
            bk = bk.refined(bk.truncation() * 2);
        }
        match pair_order(&bi, &bk) {
            Valuation::Order(n) => return Ok(n as u64),
            Valuation::Zero => {
                return Err(Error::InternalInconsistency("two branches coincide".into()));
            }
            Valuation::AtLeast(_) => {}
        }
    }
    Err(Error::TruncationExceeded(format!(
        "intersection multiplicity not certified at truncation {}",
        bi.truncation()
    )))
}

/// Symmetric matrix of intersection multiplicities, zero on the diagonal.
pub fn intersection_matrix(bs: &BranchSet) -> Result<Vec<Vec<u64>>> {
    let n = bs.len();
    let mut out = vec![vec![0u64; n]; n];
    for i in 0..n {
        for k in i + 1..n {
            let a = certified_order(&bs.branches[i], &bs.branches[k], bs.config.max_doublings)?;
            let b = certified_order(&bs.branches[k], &bs.branches[i], bs.config.max_doublings)?;
            if a != b {
                return Err(Error::InternalInconsistency(format!(
                    "intersection of branches {} and {} is not symmetric ({a} vs {b})",
                    i + 1,
                    k + 1
                )));
            }
            out[i][k] = a;
            out[k][i] = a;
        }
    }
    Ok(out)
}
