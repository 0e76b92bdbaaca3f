//! Randomized property suites shared by `germinv selftest` and the acceptance tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use germinv::arith::{CyclotomicNumber, Rational};
use germinv::germ::catalog::catalog_entry;
use germinv::germ::{abstract_link, analyze, milnor_framing, PipelineConfig};
use germinv::puiseux::{order_along_branch, puiseux_branches, PuiseuxConfig};
use germinv::linking::{
    b_of, c_of, c_twisted, c_untwisted, canonical_framings, d_twisted, l1, l2, l_v, nearby_class, nearby_linking,
    plus, random_framing, random_link, Framing,
};
use germinv::local::{local_codimension, stabilized_jet_codimension, Codim};
use germinv::poly::{vars, Monomial, Poly};

#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, msg: String) {
        if self.failures.len() < 20 {
            self.failures.push(msg);
        } else if self.failures.len() == 20 {
            self.failures.push("further failures suppressed".into());
        }
    }
}

/// Framing identities on random links, each with `framings` random framings.
pub fn linking_suite(instances: usize, framings: usize, seed: u64) -> SuiteOutcome {
    let mut out = SuiteOutcome { name: "linking calculus", cases: instances, failures: vec![] };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in 0..instances {
        let link = random_link(&mut rng);
        let cf = canonical_framings(&link);
        let (lone, ltwo) = (l1(&link), l2(&link));
        if lone != -ltwo {
            out.fail(format!("instance {n}: L1 = {lone}, L2 = {ltwo}"));
        }
        let mut fs: Vec<Framing> = (0..framings).map(|_| random_framing(&link, &mut rng)).collect();
        fs.push(cf.seifert.clone());
        fs.push(cf.normal.clone());
        for f in &fs {
            let lv = l_v(&link, f);
            if lv != ltwo {
                out.fail(format!("instance {n}: L_v = {lv} but L2 = {ltwo}"));
            }
        }
        let v = &fs[0];
        let w = &fs[1 % fs.len()];
        for (j, orbit) in link.orbits().iter().enumerate() {
            let i = orbit[0];
            let delta = link.delta(j);
            if b_of(&link, &cf.seifert, i) != -delta || b_of(&link, &cf.normal, i) != 0 {
                out.fail(format!("instance {n}: canonical b values on orbit {j}"));
            }
            if b_of(&link, &plus(v, i), i) != b_of(&link, v, i) + 1 {
                out.fail(format!("instance {n}: b step rule on orbit {j}"));
            }
            if link.twisted(j) {
                let d = d_twisted(&link, j, v, w).unwrap();
                if d_twisted(&link, j, &plus(v, i), w).unwrap() != d + 1
                    || d_twisted(&link, j, v, &plus(w, i)).unwrap() != d + 1
                {
                    out.fail(format!("instance {n}: d step rule on orbit {j}"));
                }
                if d_twisted(&link, j, &cf.seifert, &cf.normal).unwrap() != 0 {
                    out.fail(format!("instance {n}: d(S, N) != 0 on orbit {j}"));
                }
                if d_twisted(&link, j, v, v).unwrap() != 2 * c_twisted(&link, j, v).unwrap() {
                    out.fail(format!("instance {n}: d(v, v) != 2 c(v) on orbit {j}"));
                }
                if c_twisted(&link, j, &plus(v, i)).unwrap() != c_twisted(&link, j, v).unwrap() + 1 {
                    out.fail(format!("instance {n}: c step rule on twisted orbit {j}"));
                }
                if nearby_class(&link, &plus(v, i))[j] == nearby_class(&link, v)[j] {
                    out.fail(format!("instance {n}: twisted key unchanged by a twist on orbit {j}"));
                }
            } else {
                let k = orbit[1];
                let c = c_untwisted(&link, j, v, w).unwrap();
                if c_untwisted(&link, j, &plus(v, i), w).unwrap() != c + 1
                    || c_untwisted(&link, j, v, &plus(w, k)).unwrap() != c + 1
                {
                    out.fail(format!("instance {n}: c step rule on orbit {j}"));
                }
                if c_untwisted(&link, j, &cf.seifert, &cf.normal).unwrap() != 0 {
                    out.fail(format!("instance {n}: c(S, N) != 0 on orbit {j}"));
                }
                let m = rng.gen_range(-5..=5);
                let mut shifted = v.clone();
                shifted.a[i] += m;
                shifted.a[k] -= m;
                if nearby_class(&link, &shifted)[j] != nearby_class(&link, v)[j] {
                    out.fail(format!("instance {n}: compensating shift changed the key on orbit {j}"));
                }
                if nearby_linking(&link, &shifted, j) != nearby_linking(&link, v, j) {
                    out.fail(format!("instance {n}: compensating shift changed the linking on orbit {j}"));
                }
            }
            if nearby_linking(&link, &cf.normal, j) != c_of(&link, j, &cf.normal) {
                out.fail(format!("instance {n}: nearby linking disagrees with c on orbit {j}"));
            }
        }
    }
    out
}

fn random_coeff<R: Rng>(rng: &mut R) -> CyclotomicNumber {
    let a = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
    let c = CyclotomicNumber::from_int(a);
    if rng.gen_bool(0.2) {
        &c * &CyclotomicNumber::i()
    } else {
        c
    }
}

/// Random ideal of finite codimension in 2 to 4 variables with generators of degree <= 6.
pub fn random_ideal<R: Rng>(rng: &mut R) -> Vec<Poly> {
    let n = rng.gen_range(2..=4);
    let names = ["x", "y", "z", "w"];
    let v = vars(&names[..n]);
    let max_exp = match n {
        2 => 6,
        3 => 4,
        _ => 3,
    };
    let mut gens = Vec::new();
    for i in 0..n {
        let a = rng.gen_range(1..=max_exp);
        let mut g = Poly::term(&v, Monomial::var(i, a), CyclotomicNumber::one());
        for _ in 0..rng.gen_range(0..=3) {
            if a >= 6 {
                break;
            }
            // above the pure power, so every variable keeps a pure-power lead
            let deg = rng.gen_range(a + 1..=6);
            let mut exps = vec![0u32; n];
            for _ in 0..deg {
                exps[rng.gen_range(0..n)] += 1;
            }
            g.add_term(Monomial::from_exps(&exps), &random_coeff(rng));
        }
        gens.push(g);
    }
    if rng.gen_bool(0.5) {
        // a redundant generator, mixed through a unit
        let unit = &Poly::one(&v) + &Poly::var(&v, rng.gen_range(0..n));
        let extra = &(&gens[0] * &unit) + &(&gens[n - 1] * &Poly::var(&v, 0));
        if extra.total_degree() <= 6 {
            gens.push(extra);
        }
    }
    gens
}

/// Standard-basis codimension against the jet oracle.
pub fn local_oracle_suite(instances: usize, seed: u64) -> SuiteOutcome {
    let mut out = SuiteOutcome { name: "local codimension oracle", cases: instances, failures: vec![] };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0;
    while done < instances {
        let gens = random_ideal(&mut rng);
        let sb = match local_codimension(&gens) {
            Ok(Codim::Finite(c)) if c <= 40 => c,
            Ok(_) => continue,
            Err(e) => {
                out.fail(format!("standard basis failed: {e}"));
                done += 1;
                continue;
            }
        };
        done += 1;
        match stabilized_jet_codimension(&gens, sb as u32 + 2) {
            Some(o) if o == sb => {}
            other => {
                let text: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
                out.fail(format!("ideal ({}): standard basis {sb}, oracle {other:?}", text.join(", ")));
            }
        }
    }
    out
}

fn random_cyclo<R: Rng>(rng: &mut R) -> CyclotomicNumber {
    let coeffs: Vec<Rational> = (0..4)
        .map(|_| Rational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=5).into()))
        .collect();
    CyclotomicNumber::from_coeffs(12, &coeffs).expect("valid coefficients")
}

/// Field axioms on random elements of Q(zeta_12).
pub fn field_suite(instances: usize, seed: u64) -> SuiteOutcome {
    let mut out = SuiteOutcome { name: "field axioms", cases: instances, failures: vec![] };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in 0..instances {
        let (a, b, c) = (random_cyclo(&mut rng), random_cyclo(&mut rng), random_cyclo(&mut rng));
        if &(&a * &b) * &c != &a * &(&b * &c) || &a * &(&b + &c) != &(&a * &b) + &(&a * &c) {
            out.fail(format!("triple {n}: ring axioms fail for {a}, {b}, {c}"));
        }
        if !a.is_zero() && !(&a * &a.inverse().unwrap()).is_one() {
            out.fail(format!("triple {n}: {a} times its inverse is not 1"));
        }
    }
    out
}

/// Ranges used when a catalog family is run without an explicit parameter.
pub fn default_range(family: &str) -> Vec<Option<u32>> {
    match family.to_ascii_uppercase().as_str() {
        "H" => (1..=4).map(Some).collect(),
        "MARAR" => vec![None],
        _ => (1..=6).map(Some).collect(),
    }
}

/// Every catalog germ in the default ranges must pass its consistency checks.
pub fn catalog_suite() -> SuiteOutcome {
    let mut out = SuiteOutcome { name: "catalog consistency", cases: 0, failures: vec![] };
    for entry in catalog_entries() {
        out.cases += 1;
        match analyze(&entry.germ, &PipelineConfig::default()) {
            Ok(r) if r.checks.all() => {}
            Ok(r) => out.fail(format!("{}: checks {:?}", r.name, r.checks)),
            Err(e) => out.fail(format!("{}: {e}", entry.germ.name)),
        }
    }
    out
}

/// Every catalog entry in the default ranges.
pub fn catalog_entries() -> Vec<germinv::germ::catalog::CatalogEntry> {
    germinv::germ::catalog::FAMILIES
        .iter()
        .flat_map(|fam| default_range(fam).into_iter().map(move |k| catalog_entry(fam, k).expect("catalog entry")))
        .collect()
}

/// Branch orders against local codimension on every pair of catalog curve factors.
pub fn intersection_suite() -> SuiteOutcome {
    let mut out = SuiteOutcome { name: "intersection sum rule", cases: 0, failures: vec![] };
    let cfg = PuiseuxConfig::default();
    for entry in catalog_entries() {
        let f = &entry.d_factors;
        for i in 0..f.len() {
            let bs = match puiseux_branches(&f[i], &cfg) {
                Ok(b) => b,
                Err(e) => {
                    out.fail(format!("{} factor {}: {e}", entry.germ.name, f[i]));
                    continue;
                }
            };
            for k in (0..f.len()).filter(|&k| k != i) {
                out.cases += 1;
                let mut total = Some(0u64);
                for b in &bs.branches {
                    total = match (total, order_along_branch(&f[k], b, cfg.max_doublings)) {
                        (Some(t), Ok(Codim::Finite(o))) => Some(t + o),
                        _ => None,
                    };
                }
                let direct = local_codimension(&[f[i].clone(), f[k].clone()]);
                match (total, direct) {
                    (Some(a), Ok(Codim::Finite(b))) if a == b => {}
                    (a, b) => out.fail(format!("{}: ({}, {}) branch route {a:?}, codimension {b:?}", entry.germ.name, f[i], f[k])),
                }
            }
        }
    }
    out
}

/// Linking numbers and discrepancies of each catalog germ fed to the framing calculus.
pub fn round_trip_suite() -> SuiteOutcome {
    let mut out = SuiteOutcome { name: "pipeline to linking calculus", cases: 0, failures: vec![] };
    for entry in catalog_entries() {
        out.cases += 1;
        let name = entry.germ.name.clone();
        let r = match analyze(&entry.germ, &PipelineConfig::default()) {
            Ok(r) => r,
            Err(e) => {
                out.fail(format!("{name}: {e}"));
                continue;
            }
        };
        let (Some(dp), Some(delta)) = (r.double.as_ref(), r.delta.as_ref()) else {
            out.fail(format!("{name}: no framing data"));
            continue;
        };
        let vi: Vec<i64> = r.vi.iter().map(|v| v.unwrap_or_default()).collect();
        let link = match abstract_link(dp, delta) {
            Ok(l) => l,
            Err(e) => {
                out.fail(format!("{name}: {e}"));
                continue;
            }
        };
        let want = r.c as i64 - 3 * r.t as i64;
        if l1(&link) != want {
            out.fail(format!("{name}: L1 = {}, C - 3T = {want}", l1(&link)));
        }
        let m = milnor_framing(dp, &vi);
        let keys = nearby_class(&link, &m);
        for (j, orbit) in link.orbits().iter().enumerate() {
            if c_of(&link, j, &m) != 0 {
                out.fail(format!("{name}: Milnor framing has c = {} on component {}", c_of(&link, j, &m), j + 1));
            }
            let key = if link.twisted(j) { link.delta(j) / 2 } else { link.delta(j) };
            if keys[j] != key {
                out.fail(format!("{name}: component {} key {} but expected {key} (branches {orbit:?})", j + 1, keys[j]));
            }
        }
    }
    out
}
