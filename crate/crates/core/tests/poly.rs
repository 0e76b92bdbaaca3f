use germinv::arith::CyclotomicNumber;
use germinv::poly::{divided_difference, resultant, squarefree_part, vars, Monomial, Poly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_poly<R: Rng>(rng: &mut R) -> Poly {
    let v = vars(&["s", "t"]);
    let mut p = Poly::zero(&v);
    for _ in 0..rng.gen_range(1..=6) {
        let m = Monomial::from_exps(&[rng.gen_range(0..=5), rng.gen_range(0..=6)]);
        let mut c = CyclotomicNumber::from_int(rng.gen_range(-4..=4));
        if rng.gen_bool(0.3) {
            c = &c * &CyclotomicNumber::zeta(12, rng.gen_range(0..12));
        }
        p.add_term(m, &c);
    }
    p
}

#[test]
fn divided_difference_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let stu = vars(&["s", "t", "u"]);
    for _ in 0..500 {
        let p = random_poly(&mut rng);
        let dd = divided_difference(&p, "t", "u").unwrap();
        let dd = dd.with_vars(&stu).unwrap();
        let p_t = p.with_vars(&stu).unwrap();
        let p_u = p_t.substitute(1, &Poly::var(&stu, 2));
        let lhs = &(&Poly::var(&stu, 1) - &Poly::var(&stu, 2)) * &dd;
        assert_eq!(lhs, &p_t - &p_u, "p = {p}");
    }
}

#[test]
fn squarefree_removes_repeated_factors() {
    let v = vars(&["s", "t"]);
    let f = Poly::parse(&v, "(s^2 + t^3)^2*(s - t)^3*s").unwrap();
    let g = squarefree_part(&f).unwrap();
    let want = Poly::parse(&v, "(s^2 + t^3)*(s - t)*s").unwrap();
    assert!(g.div_exact(&want).is_some_and(|u| u.is_constant()), "{g}");
}

#[test]
fn resultant_of_linear_pair() {
    let v = vars(&["s", "t", "u"]);
    let f = Poly::parse(&v, "u - s").unwrap();
    let g = Poly::parse(&v, "u^2 - t").unwrap();
    let r = resultant(&f, &g, "u").unwrap();
    let r2 = Poly::parse(r.vars(), "s^2 - t").unwrap();
    assert!(r == r2 || r == -&r2, "{r}");
}
