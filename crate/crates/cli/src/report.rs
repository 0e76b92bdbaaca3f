//! Serializable report documents and the text table view.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use germinv::germ::{InvariantReport, SurgeryKind};

pub const SCHEMA: u32 = 1;

/// Number of series terms shown for each branch.
pub const DISPLAY_TERMS: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluingDoc {
    pub kind: String,
    pub component: Vec<usize>,
    /// (meridian, component Seifert longitude) basis.
    pub vertical: [[i64; 2]; 2],
    /// (meridian, link Seifert framing) basis.
    pub seifert: [[i64; 2]; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema: u32,
    pub name: String,
    pub corank: u32,
    #[serde(rename = "C")]
    pub c: u64,
    #[serde(rename = "T")]
    pub t: u64,
    #[serde(rename = "L")]
    pub l: i64,
    pub d: Option<String>,
    pub branches: Vec<String>,
    /// 1-based partner of each branch.
    pub sigma: Vec<usize>,
    /// 1-based branch lists, one per component.
    pub components: Vec<Vec<usize>>,
    pub twisted: Vec<bool>,
    pub intersection_matrix: Vec<Vec<u64>>,
    pub lambda: Option<Vec<i64>>,
    pub vi: Vec<Option<i64>>,
    pub vi_sum: i64,
    pub delta: Option<Vec<i64>>,
    #[serde(rename = "aN")]
    pub a_n: Option<Vec<i64>>,
    pub gluing: Option<Vec<GluingDoc>>,
    pub checks: BTreeMap<String, bool>,
    pub notes: Vec<String>,
}

impl ReportDocument {
    pub fn from_report(r: &InvariantReport, display_terms: usize) -> Self {
        let dp = r.double.as_ref();
        let one_based = |v: &[usize]| v.iter().map(|i| i + 1).collect::<Vec<_>>();
        let components: Vec<Vec<usize>> = dp.map_or(vec![], |d| d.components.iter().map(|c| one_based(c)).collect());
        ReportDocument {
            schema: SCHEMA,
            name: r.name.clone(),
            corank: r.corank,
            c: r.c,
            t: r.t,
            l: r.l,
            d: dp.map(|d| d.d.to_string()),
            branches: dp.map_or(vec![], |d| d.branches.branches.iter().map(|b| b.describe(display_terms)).collect()),
            sigma: dp.map_or(vec![], |d| one_based(&d.sigma)),
            twisted: dp.map_or(vec![], |d| d.twisted.clone()),
            intersection_matrix: dp.map_or(vec![], |d| d.inter.clone()),
            lambda: r.lambda.clone(),
            vi: r.vi.clone(),
            vi_sum: r.vi_sum,
            delta: r.delta.clone(),
            a_n: r.a_n.clone(),
            gluing: r.surgery.as_ref().map(|s| {
                s.iter()
                    .zip(&components)
                    .map(|(p, c)| GluingDoc {
                        kind: match p.kind {
                            SurgeryKind::UntwistedPair => "untwisted".into(),
                            SurgeryKind::TwistedPiece => "twisted".into(),
                        },
                        component: c.clone(),
                        vertical: p.gluing,
                        seifert: p.gluing_seifert,
                    })
                    .collect()
            }),
            components,
            checks: r.checks.named().iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            notes: r.notes.clone(),
        }
    }

    pub fn checks_pass(&self) -> bool {
        self.checks.values().all(|v| *v)
    }

    pub fn components_summary(&self) -> String {
        if self.components.is_empty() {
            return "0".into();
        }
        let tw = self.twisted.iter().filter(|t| **t).count();
        let un = self.twisted.len() - tw;
        let mut parts = Vec::new();
        if tw > 0 {
            parts.push("twisted");
        }
        if un > 0 {
            parts.push("untwisted");
        }
        if tw > 0 && un > 0 {
            format!("{}({tw} twisted, {un} untwisted)", self.components.len())
        } else {
            format!("{}({})", self.components.len(), parts[0])
        }
    }
}

fn opt_list(v: &Option<Vec<i64>>) -> String {
    match v {
        Some(xs) => list(xs.iter().map(|x| x.to_string())),
        None => "unknown".into(),
    }
}

fn list(it: impl Iterator<Item = String>) -> String {
    format!("[{}]", it.collect::<Vec<_>>().join(", "))
}

fn vi_text(vi: &[Option<i64>]) -> String {
    if vi.len() == 1 {
        return vi[0].map_or("unknown".into(), |v| v.to_string());
    }
    list(vi.iter().map(|v| v.map_or("unknown".into(), |x| x.to_string())))
}

fn matrix(m: &[[i64; 2]; 2]) -> String {
    format!("[[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1])
}

/// Summary rows followed by one detail block per germ.
pub fn render_table(docs: &[ReportDocument]) -> String {
    let header = ["germ", "corank", "C", "T", "L", "components", "vi", "vi_sum", "checks"];
    let rows: Vec<[String; 9]> = docs
        .iter()
        .map(|d| {
            [
                d.name.clone(),
                d.corank.to_string(),
                d.c.to_string(),
                d.t.to_string(),
                d.l.to_string(),
                d.components_summary(),
                vi_text(&d.vi),
                d.vi_sum.to_string(),
                if d.checks_pass() { "ok".into() } else { "FAIL".into() },
            ]
        })
        .collect();
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in &rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let mut out = String::new();
    let line = |cells: &[String], out: &mut String| {
        let text: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        let _ = writeln!(out, "{}", text.join("  ").trim_end());
    };
    line(&header.map(String::from), &mut out);
    for r in &rows {
        line(r, &mut out);
    }
    for d in docs {
        let _ = writeln!(out, "\n== {} ==", d.name);
        let _ = writeln!(out, "C={} T={} components={} vi={} L={}", d.c, d.t, d.components_summary(), vi_text(&d.vi), d.l);
        match &d.d {
            Some(dd) => {
                let _ = writeln!(out, "d = {dd}");
            }
            None => {
                let _ = writeln!(out, "d: empty double point curve");
            }
        }
        for (i, b) in d.branches.iter().enumerate() {
            let _ = writeln!(out, "  D{}: {b}", i + 1);
        }
        if !d.sigma.is_empty() {
            let _ = writeln!(out, "sigma = {}", list(d.sigma.iter().map(|x| x.to_string())));
            for (c, tw) in d.components.iter().zip(&d.twisted) {
                let kind = if *tw { "twisted" } else { "untwisted" };
                let _ = writeln!(out, "  component {}: {kind}", list(c.iter().map(|x| format!("D{x}"))));
            }
            let _ = writeln!(out, "intersections:");
            for r in &d.intersection_matrix {
                let _ = writeln!(out, "  {}", list(r.iter().map(|x| x.to_string())));
            }
        }
        let _ = writeln!(out, "lambda = {}", opt_list(&d.lambda));
        let _ = writeln!(out, "vi_sum = {}", d.vi_sum);
        let _ = writeln!(out, "delta = {}", opt_list(&d.delta));
        let _ = writeln!(out, "aN = {}", opt_list(&d.a_n));
        if let Some(g) = &d.gluing {
            for p in g {
                let _ = writeln!(
                    out,
                    "  gluing {} ({}): {}  seifert basis {}",
                    list(p.component.iter().map(|x| format!("D{x}"))),
                    p.kind,
                    matrix(&p.vertical),
                    matrix(&p.seifert)
                );
            }
        }
        let checks: Vec<String> = d.checks.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(out, "checks: {}", checks.join(" "));
        for n in &d.notes {
            let _ = writeln!(out, "note: {n}");
        }
    }
    out
}
