use std::path::PathBuf;

use clap::Parser;
use germinv_cli::germfile::parse_germ_file;
use germinv_cli::report::{render_table, ReportDocument};
use germinv_cli::{analyze_all, run, Cli};
use germinv::germ::PipelineConfig;

const MARAR: &str = r#"
# corank 2, with supplied curve and triple point number
germ "marar" {
  phi = ["s^2", "t^2", "s^3 + t^3 + s*t"]
  d = "(s + t^2)*(s^2 + t)*(s + t)*(s + zeta12^4*t)*(s + zeta12^8*t)"
  T = 1
  pairing = [[1, 1], [2, 2], [3, 3], [4, 4], [5, 5]]
  vi = [-4, -4, -4, -4, -4]
}
"#;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let cli = Cli::try_parse_from(std::iter::once("germinv").chain(args.iter().copied())).expect("valid flags");
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(cli, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn temp_file(tag: &str, text: &str) -> PathBuf {
    let p = std::env::temp_dir().join(format!("germinv-{}-{tag}.germ", std::process::id()));
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn parses_a_b2_record() {
    let g = parse_germ_file(r#"germ "B_2" { phi = ["s","t^2","s^2*t + t^5"] }"#).unwrap();
    assert_eq!(g.len(), 1);
    assert_eq!(g[0].name, "B_2");
    assert_eq!(g[0].phi[2].to_string(), "s^2*t + t^5");
    assert!(g[0].override_d.is_none());
}

#[test]
fn rejects_bad_records_with_positions() {
    let e = parse_germ_file("germ \"x\" {\n  phi = [\"s\",\"t\",\"1\"]\n}").unwrap_err();
    assert_eq!((e.line, e.col), (2, 18));
    assert!(e.message.contains("origin"));
    let e = parse_germ_file("germ \"x\" {\n  phi = [\"s\", \"t\", \"0\"]\n  colour = 3\n}").unwrap_err();
    assert_eq!(e.line, 3);
    assert!(e.message.contains("unknown key"));
    let e = parse_germ_file("germ \"x\" { phi = [\"s\", \"t + q\", \"0\"] }").unwrap_err();
    assert_eq!(e.line, 1);
    assert!(e.col > 20, "{e}");
    assert!(parse_germ_file("germ \"x\" { phi = [\"s\", \"t\"] }").is_err());
    assert!(parse_germ_file("germ \"x\" { phi = [\"s\", \"t\", \"0\"] pairing = [[1, 2], [2, 2]] }").is_err());
}

#[test]
fn corank_two_record_with_overrides() {
    let g = parse_germ_file(MARAR).unwrap();
    assert_eq!(g[0].override_t, Some(1));
    assert_eq!(g[0].override_pairing, Some(vec![0, 1, 2, 3, 4]));
    let docs = analyze_all(&g, &PipelineConfig::default());
    let d = docs[0].as_ref().unwrap();
    assert_eq!((d.corank, d.c, d.t, d.vi_sum), (2, 3, 1, -20));
    assert_eq!(d.twisted, vec![true; 5]);
    assert!(d.checks_pass());
}

#[test]
fn catalog_rows() {
    let (code, out, _) = invoke(&["catalog", "S", "--k", "3", "--table"]);
    assert_eq!(code, 0);
    assert!(out.contains("C=3 T=0 components=1(twisted) vi=-3 L=3"), "{out}");

    let (code, out, _) = invoke(&["catalog", "H", "--k", "2", "--json"]);
    assert_eq!(code, 0);
    let d: ReportDocument = serde_json::from_str(&out).unwrap();
    assert_eq!((d.vi_sum, d.vi.clone(), d.intersection_matrix[0][1], d.l), (-7, vec![Some(-7)], 4, -1));

    let (code, _, err) = invoke(&["catalog", "S", "--k", "13"]);
    assert_eq!(code, 1);
    assert!(err.contains("--allow-large"));
    let (code, _, _) = invoke(&["catalog", "Q", "--k", "1"]);
    assert_eq!(code, 1);
}

#[test]
fn json_round_trip_and_table_agreement() {
    let (code, out, _) = invoke(&["catalog", "--json"]);
    assert_eq!(code, 0);
    let docs: Vec<ReportDocument> = serde_json::Deserializer::from_str(&out)
        .into_iter::<ReportDocument>()
        .map(|d| d.unwrap())
        .collect();
    assert_eq!(docs.len(), 23);
    for d in &docs {
        let text = serde_json::to_string(d).unwrap();
        assert_eq!(&serde_json::from_str::<ReportDocument>(&text).unwrap(), d);
        assert!(!text.contains('.'), "non-integer number in {text}");
    }

    let (_, table, _) = invoke(&["catalog", "--table"]);
    assert_eq!(render_table(&docs), table);
    let opt = |v: &Option<Vec<i64>>| match v {
        Some(x) => format!("[{}]", x.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(", ")),
        None => "unknown".into(),
    };
    for d in &docs {
        let block = table.split(&format!("== {} ==\n", d.name)).nth(1).unwrap();
        let block = block.split("\n== ").next().unwrap();
        let vi = if d.vi.len() == 1 {
            d.vi[0].map_or("unknown".into(), |v| v.to_string())
        } else {
            format!("[{}]", d.vi.iter().map(|v| v.map_or("unknown".into(), |x| x.to_string())).collect::<Vec<_>>().join(", "))
        };
        let head = format!("C={} T={} components={} vi={} L={}", d.c, d.t, d.components_summary(), vi, d.l);
        assert!(block.starts_with(&head), "{}: {block}", d.name);
        assert!(block.contains(&format!("d = {}\n", d.d.as_ref().unwrap())));
        for (i, b) in d.branches.iter().enumerate() {
            assert!(block.contains(&format!("D{}: {b}\n", i + 1)));
        }
        let sigma: Vec<String> = d.sigma.iter().map(|x| x.to_string()).collect();
        assert!(block.contains(&format!("sigma = [{}]\n", sigma.join(", "))));
        for row in &d.intersection_matrix {
            let r: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            assert!(block.contains(&format!("  [{}]\n", r.join(", "))));
        }
        assert!(block.contains(&format!("lambda = {}\n", opt(&d.lambda))));
        assert!(block.contains(&format!("vi_sum = {}\n", d.vi_sum)));
        assert!(block.contains(&format!("delta = {}\n", opt(&d.delta))));
        assert!(block.contains(&format!("aN = {}\n", opt(&d.a_n))));
        for g in d.gluing.as_ref().unwrap() {
            let m = |x: &[[i64; 2]; 2]| format!("[[{}, {}], [{}, {}]]", x[0][0], x[0][1], x[1][0], x[1][1]);
            assert!(block.contains(&format!("({}): {}  seifert basis {}", g.kind, m(&g.vertical), m(&g.seifert))));
        }
        let checks: Vec<String> = d.checks.iter().map(|(k, v)| format!("{k}={v}")).collect();
        assert!(block.contains(&format!("checks: {}\n", checks.join(" "))));
    }
}

#[test]
fn check_flags_a_corrupted_fixture() {
    let good = temp_file("good", MARAR);
    assert_eq!(invoke(&["check", good.to_str().unwrap()]).0, 0);
    let bad = temp_file("bad", &MARAR.replace("vi = [-4, -4", "vi = [-3, -4"));
    let (code, out, _) = invoke(&["check", bad.to_str().unwrap()]);
    assert_eq!(code, 3);
    assert!(out.contains("eq1=false"), "{out}");
    let _ = std::fs::remove_file(good);
    let _ = std::fs::remove_file(bad);
}

#[test]
fn analyze_reports_errors_with_exit_codes() {
    let imm = temp_file("imm", "germ \"immersion\" { phi = [\"s\", \"t\", \"0\"] }\n");
    let (code, out, _) = invoke(&["analyze", imm.to_str().unwrap(), "--json"]);
    assert_eq!(code, 0);
    let d: ReportDocument = serde_json::from_str(&out).unwrap();
    assert_eq!((d.c, d.t, d.l, d.vi_sum), (0, 0, 0, 0));
    assert!(d.notes.iter().any(|n| n.contains("3-sphere")));

    let syntax = temp_file("syntax", "germ \"x\" {\n  phi = [\"s\", \"t\" \"0\"]\n}\n");
    let (code, _, err) = invoke(&["analyze", syntax.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains(":2:"), "{err}");

    let mixed = temp_file(
        "mixed",
        "germ \"S_1\" { phi = [\"s\", \"t^2\", \"t^3 + s^2*t\"] }\ngerm \"bare\" { phi = [\"s^2\", \"t^2\", \"s^3 + t^3 + s*t\"] }\n",
    );
    let (code, out, err) = invoke(&["analyze", mixed.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("S_1"));
    assert!(err.contains("bare: NeedsOverride"), "{err}");

    let tight = temp_file("tight", "germ \"H_4\" { phi = [\"s\", \"s*t + t^11\", \"t^3\"] }\n");
    let (code, _, err) = invoke(&["analyze", tight.to_str().unwrap(), "--conductor", "4"]);
    assert_eq!(code, 2, "{err}");
    for p in [imm, syntax, mixed, tight] {
        let _ = std::fs::remove_file(p);
    }
}

#[test]
fn output_order_follows_input() {
    let text: String = (1..=6)
        .rev()
        .map(|k| format!("germ \"S{k}\" {{ phi = [\"s\", \"t^2\", \"t^3 + s^{k}*t\"] }}\n"))
        .collect();
    let f = temp_file("order", &text);
    let (_, out, _) = invoke(&["analyze", f.to_str().unwrap(), "--json"]);
    let names: Vec<String> = serde_json::Deserializer::from_str(&out)
        .into_iter::<ReportDocument>()
        .map(|d| d.unwrap().name)
        .collect();
    assert_eq!(names, ["S6", "S5", "S4", "S3", "S2", "S1"]);
    let _ = std::fs::remove_file(f);
}
