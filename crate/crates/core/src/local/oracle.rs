//! Brute-force codimension by linear algebra on truncated jets.

use std::collections::{BTreeMap, HashMap};

use crate::arith::CyclotomicNumber;
use crate::poly::{Monomial, Poly};

type Cyclo = CyclotomicNumber;
type Row = BTreeMap<Monomial, Cyclo>;

fn monomials_up_to(nvars: usize, cap: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fn rec(k: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if k == exps.len() {
            out.push(Monomial::from_exps(exps));
            return;
        }
        for e in 0..=left {
            exps[k] = e;
            rec(k + 1, left - e, exps, out);
        }
        exps[k] = 0;
    }
    rec(0, cap, &mut exps, &mut out);
    out
}

/// Pivot of a row: its lowest-degree, then lexicographically largest monomial.
fn pivot(row: &Row) -> Option<Monomial> {
    row.keys().copied().max_by(|a, b| a.local_cmp(b))
}

/// dim of polynomials of degree <= cap modulo the span of the truncated products m * g.
pub fn jet_codimension_oracle(gens: &[Poly], degree_cap: u32) -> u64 {
    assert!(degree_cap >= 1, "degree cap must be positive");
    let Some(first) = gens.first() else {
        return monomials_up_to(0, degree_cap).len() as u64;
    };
    let nvars = first.nvars();
    let columns = monomials_up_to(nvars, degree_cap);
    let mut pivots: HashMap<Monomial, Row> = HashMap::new();
    for g in gens {
        let Some(ord) = g.order() else { continue };
        if ord > degree_cap {
            continue;
        }
        for m in monomials_up_to(nvars, degree_cap - ord) {
            let mut row: Row = g
                .terms()
                .map(|(k, c)| (k.mul(&m), c.clone()))
                .filter(|(k, _)| k.degree() <= degree_cap)
                .collect();
            while let Some(p) = pivot(&row) {
                match pivots.get(&p) {
                    Some(prow) => {
                        let factor = row[&p].clone();
                        for (k, c) in prow {
                            let v = row.get(k).cloned().unwrap_or_default() - &factor * c;
                            if v.is_zero() {
                                row.remove(k);
                            } else {
                                row.insert(*k, v);
                            }
                        }
                    }
                    None => {
                        let inv = row[&p].inverse().expect("nonzero pivot");
                        for c in row.values_mut() {
                            *c = &*c * &inv;
                        }
                        pivots.insert(p, row);
                        break;
                    }
                }
            }
        }
    }
    (columns.len() - pivots.len()) as u64
}

/// Raise the cap until dim O/(I + m^(c+1)) stops changing, which certifies m^c in I.
///
/// Returns `None` when no stabilization occurs below `max_cap`.
pub fn stabilized_jet_codimension(gens: &[Poly], max_cap: u32) -> Option<u64> {
    let mut prev = jet_codimension_oracle(gens, 1);
    for cap in 2..=max_cap {
        let cur = jet_codimension_oracle(gens, cap);
        if cur == prev {
            return Some(cur);
        }
        prev = cur;
    }
    None
}
