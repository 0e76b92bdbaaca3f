use germinv::germ::catalog::catalog_entry;
use germinv::germ::{
    analyze, framing_invariants, vertical_from_framing, Germ, InvariantReport, PipelineConfig, SurgeryKind,
};
use germinv::Error;

fn run(family: &str, k: Option<u32>) -> InvariantReport {
    analyze(&catalog_entry(family, k).unwrap().germ, &PipelineConfig::default()).unwrap()
}

fn known_vi(r: &InvariantReport) -> Vec<i64> {
    r.vi.iter().map(|v| v.expect("vertical index known")).collect()
}

#[test]
fn s_family() {
    for k in 1..=6u32 {
        let r = run("S", Some(k));
        let k = k as i64;
        assert_eq!((r.c, r.t, r.l), (k as u64, 0, k));
        let dp = r.double.as_ref().unwrap();
        if k % 2 == 1 {
            assert_eq!(dp.twisted, vec![true]);
            assert_eq!(known_vi(&r), vec![-k]);
            assert_eq!(r.a_n, Some(vec![-2 * k]));
        } else {
            assert_eq!(dp.twisted, vec![false]);
            assert_eq!(dp.inter[0][1], (k / 2) as u64);
            assert_eq!(r.lambda, Some(vec![-k, -k]));
            assert_eq!(known_vi(&r), vec![-2 * k]);
        }
        assert!(r.checks.all(), "S k={k}: {:?}", r.checks);
    }
}

#[test]
fn b_family() {
    for k in 1..=6u32 {
        let r = run("B", Some(k));
        let k = k as i64;
        assert_eq!((r.c, r.t), (2, 0));
        let dp = r.double.as_ref().unwrap();
        if k % 2 == 1 {
            assert_eq!(dp.twisted, vec![false]);
            assert_eq!(known_vi(&r), vec![-2 * k - 2]);
            assert_eq!(r.a_n, Some(vec![-2, -2]));
        } else {
            assert_eq!(dp.twisted, vec![true, true]);
            assert_eq!(known_vi(&r), vec![-k - 1, -k - 1]);
            assert_eq!(r.lambda, Some(vec![-k - 1, -k - 1]));
        }
        assert!(r.checks.all());
    }
}

#[test]
fn c_family_from_two() {
    for k in 2..=6u32 {
        let r = run("C", Some(k));
        let k = k as i64;
        assert_eq!((r.c, r.t), (k as u64, 0));
        let mut vi = known_vi(&r);
        vi.sort();
        let mut want = if k % 2 == 1 { vec![-3, -2 * k] } else { vec![-3, -k - 1] };
        want.sort();
        assert_eq!(vi, want, "C_{k}");
        assert_eq!(r.vi_sum, want.iter().sum::<i64>());
        assert!(r.checks.all());
    }
}

#[test]
fn c1_is_the_cross_cap() {
    // double point curve s*(1 + t^2) has a single branch
    let r = run("C", Some(1));
    let dp = r.double.as_ref().unwrap();
    assert_eq!((r.c, r.t, dp.twisted.clone()), (1, 0, vec![true]));
    assert_eq!(known_vi(&r), vec![-1]);
    assert_eq!(known_vi(&run("S", Some(1))), vec![-1]);
}

#[test]
fn h_family() {
    for k in 1..=4u32 {
        let r = run("H", Some(k));
        let k = k as i64;
        assert_eq!((r.c, r.t as i64, r.l), (2, k - 1, 5 - 3 * k));
        let dp = r.double.as_ref().unwrap();
        assert_eq!(dp.twisted, vec![false]);
        assert_eq!(dp.inter[0][1] as i64, 3 * k - 2);
        assert_eq!(known_vi(&r), vec![-3 * k - 1]);
        assert_eq!(r.a_n, Some(vec![3 * k - 5, 3 * k - 5]));
        assert!(r.checks.all());
    }
}

#[test]
fn marar_with_overrides() {
    let r = run("marar", None);
    assert_eq!((r.corank, r.c, r.t, r.l), (2, 3, 1, 0));
    let dp = r.double.as_ref().unwrap();
    assert_eq!(dp.twisted, vec![true; 5]);
    for i in 0..5 {
        for k in 0..5 {
            assert_eq!(dp.inter[i][k], u64::from(i != k));
        }
    }
    assert_eq!(r.vi_sum, -20);
    assert_eq!(known_vi(&r), vec![-4; 5]);
    assert!(r.checks.all());
}

#[test]
fn marar_pairing_found_without_override() {
    let mut g = catalog_entry("marar", None).unwrap().germ;
    g.override_pairing = None;
    let r = analyze(&g, &PipelineConfig::default()).unwrap();
    assert_eq!(r.double.as_ref().unwrap().sigma, vec![0, 1, 2, 3, 4]);
}

#[test]
fn perturbed_fixture_breaks_eq1() {
    let mut g = catalog_entry("marar", None).unwrap().germ;
    g.fixture_vi = Some(vec![-3, -4, -4, -4, -4]);
    let r = analyze(&g, &PipelineConfig::default()).unwrap();
    assert!(!r.checks.eq1);
    assert!(!r.checks.all());
}

#[test]
fn wrong_override_pairing_is_rejected() {
    let mut g = catalog_entry("marar", None).unwrap().germ;
    g.override_pairing = Some(vec![1, 0, 2, 3, 4]);
    assert!(matches!(analyze(&g, &PipelineConfig::default()), Err(Error::InvalidOverride(_))));
}

#[test]
fn framing_round_trip() {
    for (fam, ks) in [("S", 1..=6), ("B", 1..=6), ("C", 2..=6), ("H", 1..=4)] {
        for k in ks {
            let r = run(fam, Some(k));
            let dp = r.double.as_ref().unwrap();
            let vi = known_vi(&r);
            let (a_n, delta) = framing_invariants(dp, &vi).unwrap();
            assert_eq!(vertical_from_framing(dp, &a_n), vi, "{fam}{k}");
            for (j, tw) in dp.twisted.iter().enumerate() {
                if *tw {
                    assert_eq!(delta[j] % 2, 0);
                }
            }
        }
    }
}

#[test]
fn surgery_matrices() {
    let s2 = run("S", Some(3));
    let p = &s2.surgery.as_ref().unwrap()[0];
    assert_eq!(p.kind, SurgeryKind::TwistedPiece);
    assert_eq!(p.gluing, [[-1, -3], [0, 1]]);
    assert_eq!(p.gluing_seifert, [[-1, -3], [0, 1]]);
    let b3 = run("B", Some(3));
    let p = &b3.surgery.as_ref().unwrap()[0];
    assert_eq!(p.kind, SurgeryKind::UntwistedPair);
    assert_eq!(p.gluing, [[-1, -8], [0, 1]]);
    assert_eq!(p.gluing_seifert, [[-1, -2], [0, 1]]);
}

#[test]
fn immersion_is_trivial() {
    let g = Germ::parse("immersion", ["s", "t", "0"]).unwrap();
    let r = analyze(&g, &PipelineConfig::default()).unwrap();
    assert_eq!((r.corank, r.c, r.t, r.l, r.vi_sum), (0, 0, 0, 0, 0));
    assert!(r.double.is_none());
    assert!(r.surgery.as_ref().is_none_or(|s| s.is_empty()));
    assert!(r.checks.all());
}

#[test]
fn corank_two_without_overrides_needs_them() {
    let g = Germ::parse("corank2", ["s^2", "t^2", "s^3 + t^3 + s*t"]).unwrap();
    assert!(matches!(analyze(&g, &PipelineConfig::default()), Err(Error::NeedsOverride(_))));
}
