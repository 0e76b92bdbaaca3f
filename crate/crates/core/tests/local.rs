use germinv::local::{
    jet_codimension_oracle, local_codimension, mora_normal_form, standard_basis, Codim, Limits, LocalOrder,
};
use germinv::poly::{vars, Poly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn ideal(names: &[&str], gens: &[&str]) -> Vec<Poly> {
    let v = vars(names);
    gens.iter().map(|g| Poly::parse(&v, g).unwrap()).collect()
}

#[test]
fn small_codimensions() {
    assert_eq!(local_codimension(&ideal(&["s", "t"], &["s", "t"])).unwrap(), Codim::Finite(1));
    assert_eq!(local_codimension(&ideal(&["s", "t"], &["s^2", "t^3"])).unwrap(), Codim::Finite(6));
    let g = ideal(&["s", "t"], &["t^2 + s^3", "s*t"]);
    assert_eq!(local_codimension(&g).unwrap(), Codim::Finite(5));
    assert_eq!(jet_codimension_oracle(&g, 8), 5);
    assert_eq!(jet_codimension_oracle(&ideal(&["s", "t"], &["s", "t"]), 4), 1);
    assert_eq!(local_codimension(&ideal(&["s", "t"], &["s*t"])).unwrap(), Codim::Infinite);
}

#[test]
fn units_at_the_origin_do_not_count() {
    // 1 + s is invertible in the local ring
    let g = ideal(&["s", "t"], &["s + s^2", "t^3 + t^4*s"]);
    assert_eq!(local_codimension(&g).unwrap(), Codim::Finite(3));
}

#[test]
fn invariant_under_unit_multiples() {
    let v = vars(&["s", "t"]);
    let units = ["1 + s", "1 + t", "1 + i*s*t"].map(|u| Poly::parse(&v, u).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0;
    while checked < 200 {
        let a = rng.gen_range(1..=5);
        let b = rng.gen_range(1..=5);
        let mut g = vec![
            Poly::parse(&v, &format!("s^{a} + t^{}", rng.gen_range(2..=6))).unwrap(),
            Poly::parse(&v, &format!("t^{b} + {}*s*t", rng.gen_range(-3..=3))).unwrap(),
        ];
        let Ok(Codim::Finite(base)) = local_codimension(&g) else { continue };
        let k = rng.gen_range(0..g.len());
        g[k] = &g[k] * &units[rng.gen_range(0..3)];
        assert_eq!(local_codimension(&g).unwrap(), Codim::Finite(base));
        checked += 1;
    }
}

#[test]
fn generators_reduce_to_zero() {
    let g = ideal(&["x", "y", "z"], &["x^2 + y*z", "y^3 - x*z", "z^2 + x*y*z"]);
    let sb = standard_basis(&g, LocalOrder::default(), &Limits::default()).unwrap();
    for f in &g {
        assert!(mora_normal_form(f, &sb.generators, sb.corner).is_zero(), "{f}");
    }
}

#[test]
fn slow_converging_bases_are_certified() {
    let cases: [(&[&str], &[&str], u64); 3] = [
        (
            &["x", "y", "z", "w"],
            &[
                "x + x*w + 3*x^3*y*w^2",
                "y - x*z*w^2",
                "z^3",
                "w - 3*y*w - 3*y^2*w - i*x*w^3",
                "x + 3*x*w - 3*x*y*w + x*w^2 - 3*x*y^2*w - i*x^2*w^3 + 3*x^3*y*w^2 + 3*x^3*y*w^3",
            ],
            3,
        ),
        (
            &["x", "y", "z", "w"],
            &[
                "x^2 - 2*x^2*y^2 + y*z^2*w - x^3*y*z",
                "3*x*w + y^3 + 2*x^3*y + 2*x*z^4*w",
                "z + x*y - 3*x*w + x*y*z",
                "w^2 - 3*x^2*y*z",
                "x^2 + x^2*y + x*w^2 - 2*x^2*y^2 + y*z^2*w - 4*x^3*y*z - 2*x^2*y^3 + y^2*z^2*w - x^3*y^2*z",
            ],
            12,
        ),
        (&["x", "y", "z"], &["2*x*z + x^4 - x^3*y + 2*x^4*z", "3*y*z + 2*x*z^3 + y^4 - x*y^4", "-3*y*z^2 + 3*x*y^3 + z^4"], 35),
    ];
    for (names, gens, want) in cases {
        let g = ideal(names, gens);
        assert_eq!(local_codimension(&g).unwrap(), Codim::Finite(want));
    }
}
