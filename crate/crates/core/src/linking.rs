//! Integer framing calculus on abstract double-point links.
//!
//! A framing is represented by its `a`-profile: one integer per link component.
//! The link stores the pairing `sigma`, the pairwise linking numbers and one
//! discrepancy `delta` per orbit of `sigma`.

use rand::Rng;

use crate::error::{Error, Result};

/// Double-point link with its involution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbstractLink {
    lk: Vec<Vec<i64>>,
    sigma: Vec<usize>,
    orbits: Vec<Vec<usize>>,
    orbit_of: Vec<usize>,
    delta: Vec<i64>,
}

impl AbstractLink {
    /// `lk` symmetric `l x l` (diagonal ignored), `sigma` an involution on `0..l`,
    /// `delta` one value per orbit, orbits ordered by their smallest member.
    pub fn new(lk: Vec<Vec<i64>>, sigma: Vec<usize>, delta: Vec<i64>) -> Result<Self> {
        let l = sigma.len();
        if lk.len() != l || lk.iter().any(|r| r.len() != l) {
            return Err(Error::InvalidArgument(format!("linking matrix must be {l} x {l}")));
        }
        for i in 0..l {
            if sigma[i] >= l || sigma[sigma[i]] != i {
                return Err(Error::InvalidArgument("sigma is not an involution".into()));
            }
            for k in 0..l {
                if i != k && lk[i][k] != lk[k][i] {
                    return Err(Error::InvalidArgument("linking matrix is not symmetric".into()));
                }
            }
        }
        let mut orbits = Vec::new();
        let mut orbit_of = vec![0; l];
        for i in 0..l {
            if sigma[i] >= i {
                orbit_of[i] = orbits.len();
                orbit_of[sigma[i]] = orbits.len();
                orbits.push(if sigma[i] == i { vec![i] } else { vec![i, sigma[i]] });
            }
        }
        if delta.len() != orbits.len() {
            return Err(Error::InvalidArgument(format!(
                "expected {} orbit discrepancies, got {}",
                orbits.len(),
                delta.len()
            )));
        }
        for (j, o) in orbits.iter().enumerate() {
            if o.len() == 1 && delta[j] % 2 != 0 {
                return Err(Error::InvalidArgument(format!("twisted orbit {} needs an even discrepancy", j + 1)));
            }
        }
        Ok(AbstractLink { lk, sigma, orbits, orbit_of, delta })
    }

    pub fn len(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigma.is_empty()
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn lk(&self, i: usize, k: usize) -> i64 {
        self.lk[i][k]
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn orbit_of(&self, i: usize) -> usize {
        self.orbit_of[i]
    }

    pub fn twisted(&self, j: usize) -> bool {
        self.orbits[j].len() == 1
    }

    pub fn delta(&self, j: usize) -> i64 {
        self.delta[j]
    }

    /// `sum_{k != i} lk(i, k)`.
    pub fn total_linking(&self, i: usize) -> i64 {
        (0..self.len()).filter(|&k| k != i).map(|k| self.lk[i][k]).sum()
    }
}

/// The `a`-invariants of a framing, one per component.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Framing {
    pub a: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalFramings {
    /// Seifert framing of the whole link.
    pub seifert: Framing,
    /// Global normal framing.
    pub normal: Framing,
    /// Seifert framings of the individual components.
    pub component_seifert: Framing,
}

pub fn canonical_framings(link: &AbstractLink) -> CanonicalFramings {
    let l = link.len();
    CanonicalFramings {
        seifert: Framing { a: vec![0; l] },
        normal: Framing { a: (0..l).map(|i| link.delta(link.orbit_of(i))).collect() },
        component_seifert: Framing { a: (0..l).map(|i| link.total_linking(i)).collect() },
    }
}

pub fn b_of(link: &AbstractLink, f: &Framing, i: usize) -> i64 {
    f.a[i] - link.delta(link.orbit_of(i))
}

/// The framing with one extra twist on component `i`.
pub fn plus(f: &Framing, i: usize) -> Framing {
    let mut a = f.a.clone();
    a[i] += 1;
    Framing { a }
}

fn check_kind(link: &AbstractLink, j: usize, twisted: bool) -> Result<()> {
    if j >= link.orbits().len() {
        return Err(Error::InvalidArgument(format!("no orbit {}", j + 1)));
    }
    if link.twisted(j) != twisted {
        let kind = if twisted { "twisted" } else { "untwisted" };
        return Err(Error::WrongKind(format!("orbit {} is not {kind}", j + 1)));
    }
    Ok(())
}

/// `c_j(v, w)` for an untwisted orbit `{i, sigma(i)}`; `v` is read at `i`, `w` at `sigma(i)`.
pub fn c_untwisted(link: &AbstractLink, j: usize, v: &Framing, w: &Framing) -> Result<i64> {
    check_kind(link, j, false)?;
    let (i, k) = (link.orbits()[j][0], link.orbits()[j][1]);
    Ok(v.a[i] + w.a[k] - link.delta(j))
}

pub fn d_twisted(link: &AbstractLink, j: usize, v: &Framing, w: &Framing) -> Result<i64> {
    check_kind(link, j, true)?;
    let i = link.orbits()[j][0];
    Ok(v.a[i] + w.a[i] - link.delta(j))
}

pub fn c_twisted(link: &AbstractLink, j: usize, v: &Framing) -> Result<i64> {
    check_kind(link, j, true)?;
    let i = link.orbits()[j][0];
    Ok(v.a[i] - link.delta(j) / 2)
}

/// `c_j` of a single framing restricted to orbit `j`, whatever its kind.
pub fn c_of(link: &AbstractLink, j: usize, f: &Framing) -> i64 {
    if link.twisted(j) {
        c_twisted(link, j, f).expect("twisted orbit")
    } else {
        c_untwisted(link, j, f, f).expect("untwisted orbit")
    }
}

pub fn l1(link: &AbstractLink) -> i64 {
    let twice: i64 = (0..link.len()).map(|i| link.delta(link.orbit_of(i))).sum();
    -twice / 2
}

pub fn l2(link: &AbstractLink) -> i64 {
    let twice: i64 = (0..link.len()).map(|i| link.delta(link.orbit_of(i))).sum();
    twice / 2
}

pub fn l_v(link: &AbstractLink, f: &Framing) -> i64 {
    let c: i64 = (0..link.orbits().len()).map(|j| c_of(link, j, f)).sum();
    let b: i64 = (0..link.len()).map(|i| b_of(link, f, i)).sum();
    c - b
}

/// Per-orbit key classifying the abstract nearby manifold of a framing.
pub fn nearby_class(link: &AbstractLink, f: &Framing) -> Vec<i64> {
    link.orbits()
        .iter()
        .map(|o| match o.as_slice() {
            [i] => f.a[*i],
            [i, k] => f.a[*i] + f.a[*k],
            _ => unreachable!("orbits have one or two members"),
        })
        .collect()
}

/// Linking number of the embedded nearby manifold with the double-value component `j`.
pub fn nearby_linking(link: &AbstractLink, f: &Framing, j: usize) -> i64 {
    c_of(link, j, f)
}

/// Random link: at most 6 components, |lk| <= 10, delta in [-20, 20], even on twisted orbits.
pub fn random_link<R: Rng>(rng: &mut R) -> AbstractLink {
    let l = rng.gen_range(1..=6);
    let mut lk = vec![vec![0i64; l]; l];
    for i in 0..l {
        for k in i + 1..l {
            let v = rng.gen_range(-10..=10);
            lk[i][k] = v;
            lk[k][i] = v;
        }
    }
    let mut perm: Vec<usize> = (0..l).collect();
    for i in (1..l).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let mut sigma: Vec<usize> = (0..l).collect();
    let mut k = 0;
    while k + 1 < l {
        if rng.gen_bool(0.5) {
            sigma[perm[k]] = perm[k + 1];
            sigma[perm[k + 1]] = perm[k];
            k += 2;
        } else {
            k += 1;
        }
    }
    let orbits = (0..l).filter(|&i| sigma[i] >= i).count();
    let mut delta = Vec::with_capacity(orbits);
    for i in (0..l).filter(|&i| sigma[i] >= i) {
        let mut d = rng.gen_range(-20..=20);
        if sigma[i] == i && d % 2 != 0 {
            d += if d < 20 { 1 } else { -1 };
        }
        delta.push(d);
    }
    AbstractLink::new(lk, sigma, delta).expect("generated link is valid")
}

pub fn random_framing<R: Rng>(link: &AbstractLink, rng: &mut R) -> Framing {
    Framing { a: (0..link.len()).map(|_| rng.gen_range(-30..=30)).collect() }
}
