use akinv_core::conductor::{check_u_divides_dn_u, CurveSubalgebra};
use akinv_core::expmap::ExponentialMap;
use akinv_core::field::binomial;
use akinv_core::fixtures::*;
use akinv_core::invariant::{default_pool, rewrite_with_pool};
use akinv_core::specialize::{find_good_point, push_expmap, sigma_hom};
use akinv_core::*;
use num_bigint::BigUint;
use proptest::prelude::*;

fn random_poly<F: Field>(nvars: usize, terms: &[(Vec<u32>, i64)]) -> Polynomial<F> {
    Polynomial::from_terms(
        terms
            .iter()
            .map(|(e, c)| (Monomial::new(e.iter().take(nvars).cloned().collect()), F::from_i64(*c))),
    )
}

fn terms_strategy(nvars: usize, max_deg: u32) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_deg, nvars), -3i64..=3)
            .prop_filter("degree", move |(e, _)| e.iter().sum::<u32>() <= max_deg),
        0..5,
    )
}

fn fixtures_q() -> Vec<ExponentialMap<Rational>> {
    vec![
        translation(),
        plane_map(),
        danielewski_map(1),
        danielewski_map(2),
        danielewski_swapped_map(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn degree_is_additive(ta in terms_strategy(3, 4), tb in terms_strategy(3, 4)) {
        for phi in fixtures_q() {
            let alg = phi.algebra();
            let m = alg.ngens();
            let a = alg.element(&random_poly(m, &ta));
            let b = alg.element(&random_poly(m, &tb));
            prop_assert_eq!(phi.phi_degree(&(&a * &b)), phi.phi_degree(&a) + phi.phi_degree(&b));
        }
    }

    #[test]
    fn derivations_lower_degree(ta in terms_strategy(3, 5)) {
        for phi in fixtures_q() {
            let alg = phi.algebra();
            let a = alg.element(&random_poly(alg.ngens(), &ta));
            let Degree::Finite(d) = phi.phi_degree(&a) else { continue };
            for i in 0..=d as usize {
                let di = phi.derivation_coeff(&a, i);
                prop_assert!(phi.phi_degree(&di) <= Degree::Finite(d - i as u32));
            }
            prop_assert!(phi.is_invariant(&phi.derivation_coeff(&a, d as usize)));
        }
    }

    #[test]
    fn leibniz_rule(ta in terms_strategy(3, 3), tb in terms_strategy(3, 3), n in 0usize..5) {
        for phi in fixtures_q() {
            let alg = phi.algebra();
            let a = alg.element(&random_poly(alg.ngens(), &ta));
            let b = alg.element(&random_poly(alg.ngens(), &tb));
            prop_assert!(phi.check_leibniz(&a, &b, n));
        }
    }

    #[test]
    fn rewrite_reconstructs(ta in terms_strategy(3, 3)) {
        for phi in [plane_map::<Rational>(), danielewski_map(1), danielewski_map(2)] {
            let alg = phi.algebra();
            let a = alg.element(&random_poly(alg.ngens(), &ta));
            let rw = rewrite_with_pool(&phi, &a, &default_pool(alg, 2)).unwrap();
            prop_assert!(rw.reconstructs());
            prop_assert!(rw.coefficients_invariant(&phi));
            for w in rw.degrees.windows(2) {
                prop_assert!(w[1] + rw.n <= w[0]);
            }
        }
    }

    #[test]
    fn good_points_avoid_zeros(ts in prop::collection::vec(terms_strategy(2, 3), 1..4)) {
        let params = PresentedAlgebra::<Rational>::polynomial_ring(&["a", "b"]).unwrap();
        let avoid: Vec<_> = ts.iter().map(|t| random_poly::<Rational>(2, t)).filter(|p| !p.is_zero()).collect();
        let pt = find_good_point(&params, &avoid).unwrap();
        prop_assert!(pt.check());
        prop_assert_eq!(find_good_point(&params, &avoid).unwrap(), pt);
    }

    #[test]
    fn lucas_matches_exact(n in 0u64..300, r in 0u64..300, pi in 0usize..5) {
        let p = [2u64, 3, 5, 7, 11][pi];
        let exact = binomial(n, r) % BigUint::from(p);
        prop_assert_eq!(BigUint::from(binomial_mod_p(n, r, p).unwrap()), exact);
    }
}

#[test]
fn danielewski_over_f5() {
    for n in 1..=3 {
        let phi = danielewski_map::<F5>(n);
        let gens = phi.algebra().gens();
        assert!(phi.check_iterative(&gens, 8).passed());
        assert_eq!(phi.phi_degree(&gens[1]), Degree::Finite(2));
    }
}

#[test]
fn frobenius_degrees_even() {
    let phi = frobenius_translation::<F2>();
    let x = phi.algebra().gen(0);
    for k in 0..=10 {
        let d = phi.phi_degree(&x.pow(k)).finite().unwrap();
        assert_eq!(d % 2, 0, "X^{k}");
    }
}

#[test]
fn conductor_fixtures_and_harness() {
    for (a, u) in [
        (cusp::<Rational>(), UniPoly::from_i64s(&[0, 0, 1])),
        (node(), UniPoly::from_i64s(&[0, -1, 1])),
        (full_line(), UniPoly::one()),
    ] {
        let r = a.conductor_generator().unwrap();
        assert_eq!(r.u, u);
        assert!(r.contains(&a, &r.u));
        assert!(r.contains(&a, &r.ideal.h_power));
        for (j, c) in &r.u_checks {
            assert!(a.verify_certificate(&r.u.shift(*j), c));
        }
    }

    let ky = PresentedAlgebra::<Rational>::polynomial_ring(&["y"]).unwrap();
    let kw = PresentedAlgebra::<Rational>::polynomial_ring(&["w"]).unwrap();
    let tp = tensor(&ky, &kw).unwrap();
    let t = tp.algebra();
    let (y, w, tv) = (Polynomial::var(0), Polynomial::var(1), Polynomial::var(t.t_var()));
    let a: CurveSubalgebra<Rational> = node();
    let cond = a.conductor_generator().unwrap();
    let u = cond.u.to_polynomial(0);
    let phi = ExponentialMap::new(t, vec![y.clone(), w.clone() + u.pow(2) * tv.clone()]).unwrap();
    assert!(check_u_divides_dn_u(&phi, &tp, &a, &cond).unwrap().passed());
    let moving = ExponentialMap::new(t, vec![y + w.clone() * tv, w]).unwrap();
    let rep = check_u_divides_dn_u(&moving, &tp, &a, &cond).unwrap();
    assert!(!rep.hypothesis_holds() && rep.quotients.is_empty());
}

#[test]
fn push_danielewski() {
    let tp = danielewski_tensor_line::<Rational>();
    let t = tp.algebra();
    let (x, w, tv) = (Polynomial::var(0), Polynomial::var(3), Polynomial::var(t.t_var()));
    // w -> w + x t, fixing A_1
    let phi = ExponentialMap::new(
        t,
        vec![Polynomial::var(0), Polynomial::var(1), Polynomial::var(2), w + x * tv],
    )
    .unwrap();
    let q = |v| Rational::from_i64(v);
    let sigma = sigma_hom(&tp, &[q(2), q(4), q(3)]).unwrap();
    let pushed = push_expmap(&phi, &tp, &sigma).unwrap();
    assert!(pushed.iterative.passed());
    assert_eq!(
        pushed.psi.images()[0],
        Polynomial::var(0) + Polynomial::var(1).scale(&q(2))
    );
}
