//! Built-in simple germs and a corank-2 example with its supplied data.

use super::{source_vars, Germ};
use crate::error::{Error, Result};
use crate::poly::Poly;

pub const FAMILIES: [&str; 5] = ["S", "B", "C", "H", "marar"];

/// Largest family parameter accepted without an explicit opt-in.
pub const DEFAULT_MAX_K: u32 = 12;

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub family: String,
    pub k: Option<u32>,
    pub germ: Germ,
    /// Irreducible factors of the double point curve at the origin.
    pub d_factors: Vec<Poly>,
}

fn p(text: &str) -> Poly {
    Poly::parse(&source_vars(), text).expect("catalog expression")
}

fn entry(family: &str, k: Option<u32>, name: String, phi: [String; 3], factors: Vec<String>) -> CatalogEntry {
    let germ = Germ::parse(&name, [&phi[0], &phi[1], &phi[2]]).expect("catalog germ");
    CatalogEntry { family: family.to_string(), k, germ, d_factors: factors.iter().map(|f| p(f)).collect() }
}

/// One catalog germ; `k` is required for every family except `marar`.
pub fn catalog_entry(family: &str, k: Option<u32>) -> Result<CatalogEntry> {
    let need_k = || {
        k.filter(|&k| k >= 1)
            .ok_or_else(|| Error::InvalidArgument(format!("family {family} needs a parameter k >= 1")))
    };
    let fam = family.to_ascii_uppercase();
    Ok(match fam.as_str() {
        "S" => {
            let k = need_k()?;
            let factors = if k % 2 == 0 {
                let n = k / 2;
                vec![format!("s^{n} - i*t"), format!("s^{n} + i*t")]
            } else {
                vec![format!("t^2 + s^{k}")]
            };
            entry("S", Some(k), format!("S_{}", k - 1), ["s".into(), "t^2".into(), format!("t^3 + s^{k}*t")], factors)
        }
        "B" => {
            let k = need_k()?;
            let factors = vec![format!("s + i*t^{k}"), format!("s - i*t^{k}")];
            entry("B", Some(k), format!("B_{k}"), ["s".into(), "t^2".into(), format!("s^2*t + t^{}", 2 * k + 1)], factors)
        }
        "C" => {
            let k = need_k()?;
            let factors = if k == 1 {
                // t^2 + 1 is a unit at the origin
                vec!["s".to_string()]
            } else if k % 2 == 1 {
                let n = k / 2;
                vec!["s".into(), format!("t + i*s^{n}"), format!("t - i*s^{n}")]
            } else {
                vec!["s".into(), format!("t^2 + s^{}", k - 1)]
            };
            entry("C", Some(k), format!("C_{k}"), ["s".into(), "t^2".into(), format!("s*t^3 + s^{k}*t")], factors)
        }
        "H" => {
            let k = need_k()?;
            let m = 3 * k - 2;
            let factors = vec![format!("s - zeta12^8*t^{m}"), format!("s - zeta12^4*t^{m}")];
            entry("H", Some(k), format!("H_{k}"), ["s".into(), format!("s*t + t^{}", 3 * k - 1), "t^3".into()], factors)
        }
        "MARAR" => {
            let factors: Vec<String> = ["s + t^2", "s^2 + t", "s + t", "s + zeta12^4*t", "s + zeta12^8*t"]
                .iter()
                .map(|s| s.to_string())
                .collect();
            let mut e = entry(
                "marar",
                None,
                "marar".into(),
                ["s^2".into(), "t^2".into(), "s^3 + t^3 + s*t".into()],
                factors.clone(),
            );
            e.germ.override_d = Some(p(&format!("({})", factors.join(")*("))));
            e.germ.override_t = Some(1);
            e.germ.fixture_vi = Some(vec![-4; 5]);
            e.germ.override_pairing = Some((0..5).collect());
            e
        }
        _ => {
            return Err(Error::InvalidArgument(format!(
                "unknown family `{family}` (expected one of {})",
                FAMILIES.join(", ")
            )))
        }
    })
}
