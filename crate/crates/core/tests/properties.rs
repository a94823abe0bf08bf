//! Property tests. Random inputs come from a proptest-chosen seed fed to the
//! crate's own samplers, so failures shrink to a single reproducible seed.

use proptest::prelude::*;

use pgalg::envelope::{env_from_poly, env_mul, separation_rank, EnvAlgebra, Payload, RepSpec, TruncatedElement};
use pgalg::exactnum::{MultiPoly, Rational, Ring};
use pgalg::freealg::{apply_hom, gens, NCPoly};
use pgalg::freelie::{compose, e_alphabet, straighten};
use pgalg::matrep::{build_qplane_rep, Variant};
use pgalg::pgrowth::{derivative_identity_holds, exp_is, growth_degree, inverse_identity_holds};
use pgalg::presentations::Presentation;
use pgalg::sampling;

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d))
}

fn q_value() -> impl Strategy<Value = Rational> {
    rational().prop_filter("generic q", |q| !q.is_zero() && q.abs() != Rational::one())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!((&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a * &b, &b * &a);
        if let Some(inv) = a.recip() {
            prop_assert!((&a * &inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn multipoly_ring_laws(seed in any::<u64>()) {
        let mut rng = sampling::rng(seed);
        let vars: Vec<String> = ["s", "t", "u"].iter().map(|v| v.to_string()).collect();
        let [a, b, c] = [0; 3].map(|_| sampling::multipoly(&mut rng, &vars, 3, 4));
        prop_assert_eq!(a.mul_ref(&b.add_ref(&c)), a.mul_ref(&b).add_ref(&a.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
        prop_assert!(a.sub_ref(&a).is_zero());
        prop_assert_eq!(a.mul_ref(&MultiPoly::one()), a);
    }

    #[test]
    fn qplane_normal_form_is_idempotent_and_associative(q in q_value(), seed in any::<u64>()) {
        let p = Presentation::qplane(q).unwrap();
        let mut rng = sampling::rng(seed);
        let alphabet = gens(&["x", "y"]);
        let [a, b, c] = [0; 3].map(|_| sampling::ncpoly(&mut rng, &alphabet, 4, 3));
        let nf = p.normal_form(&a).unwrap();
        prop_assert!(p.is_normal(&nf));
        prop_assert_eq!(p.normal_form(&nf).unwrap(), nf.clone());
        let left = p.mul(&p.mul(&a, &b).unwrap(), &c).unwrap();
        let right = p.mul(&a, &p.mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn aq_normal_form_is_idempotent_and_associative(q in q_value(), seed in any::<u64>()) {
        let p = Presentation::aq(q).unwrap();
        let mut rng = sampling::rng(seed);
        let alphabet = p.gens().to_vec();
        let [a, b, c] = [0; 3].map(|_| sampling::ncpoly(&mut rng, &alphabet, 3, 3));
        let nf = p.normal_form(&a).unwrap();
        prop_assert_eq!(p.normal_form(&nf).unwrap(), nf);
        let left = p.mul(&p.mul(&a, &b).unwrap(), &c).unwrap();
        let right = p.mul(&a, &p.mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn representations_factor_through_normal_form(q in q_value(), seed in any::<u64>(), size in 1usize..=4) {
        let p = Presentation::qplane(q.clone()).unwrap();
        let mut rng = sampling::rng(seed);
        let a = sampling::ncpoly(&mut rng, &gens(&["x", "y"]), 4, 3);
        for variant in [Variant::Plain, Variant::Primed] {
            let images = build_qplane_rep(size, variant, &q).unwrap();
            let direct = apply_hom(&a, &images).unwrap();
            let reduced = apply_hom(&p.normal_form(&a).unwrap(), &images).unwrap();
            prop_assert_eq!(direct, reduced);
        }
    }

    #[test]
    fn straightening_round_trip(seed in any::<u64>()) {
        let mut rng = sampling::rng(seed);
        let a = sampling::ncpoly(&mut rng, &e_alphabet(2), 5, 4);
        let d = straighten(&a).unwrap();
        prop_assert_eq!(compose(&d), a);
        let d = sampling::decomposed(&mut rng, 0..=2, 2, 3);
        prop_assert_eq!(straighten(&compose(&d)).unwrap(), d);
    }

    #[test]
    fn exponential_identities(seed in any::<u64>(), size in 1usize..=4) {
        let mut rng = sampling::rng(seed);
        let t = sampling::tri_matrix(&mut rng, size);
        let x = exp_is(&t);
        prop_assert!(inverse_identity_holds(&x));
        prop_assert!(derivative_identity_holds(&t, &x));
        prop_assert!(growth_degree(&t) < size as u32);
    }
}

fn envelope_triple(algebra: &EnvAlgebra, n: usize, seed: u64) -> [TruncatedElement; 3] {
    let mut rng = sampling::rng(seed);
    [0; 3].map(|_| {
        let payload = match algebra {
            EnvAlgebra::QPlane(_) => Payload::QPlane(sampling::qplane_element(&mut rng, 3, 2)),
            EnvAlgebra::Sl2(_) => Payload::Sl2(sampling::aq_element(&mut rng, 2, 3)),
            EnvAlgebra::Free => Payload::Free(sampling::decomposed(&mut rng, 0..=2, 1, 2)),
        };
        TruncatedElement::new(algebra.clone(), n, payload).unwrap()
    })
}

fn algebra() -> impl Strategy<Value = EnvAlgebra> {
    prop_oneof![
        q_value().prop_map(EnvAlgebra::QPlane),
        q_value().prop_map(EnvAlgebra::Sl2),
        Just(EnvAlgebra::Free),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn envelope_product_is_associative(alg in algebra(), n in 0usize..=4, seed in any::<u64>()) {
        let [x, y, z] = envelope_triple(&alg, n, seed);
        let left = env_mul(&env_mul(&x, &y).unwrap(), &z).unwrap();
        let right = env_mul(&x, &env_mul(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let one = TruncatedElement::one(alg.clone(), n).unwrap();
        prop_assert_eq!(env_mul(&one, &x).unwrap(), x.clone());
    }

    #[test]
    fn envelope_text_round_trip(alg in algebra(), n in 0usize..=4, seed in any::<u64>()) {
        let [x, _, _] = envelope_triple(&alg, n, seed);
        prop_assert_eq!(TruncatedElement::from_text(&x.to_text()).unwrap(), x);
    }

    #[test]
    fn truncation_commutes_with_products(q in q_value(), seed in any::<u64>()) {
        let alg = EnvAlgebra::QPlane(q);
        let mut rng = sampling::rng(seed);
        let alphabet = alg.alphabet();
        let a = sampling::ncpoly(&mut rng, &alphabet, 4, 3);
        let b = sampling::ncpoly(&mut rng, &alphabet, 4, 3);
        let big = env_mul(&env_from_poly(&a, &alg, 5).unwrap(), &env_from_poly(&b, &alg, 5).unwrap()).unwrap();
        let small = env_mul(&env_from_poly(&a, &alg, 2).unwrap(), &env_from_poly(&b, &alg, 2).unwrap()).unwrap();
        prop_assert_eq!(big.truncate(2), small);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn separation_rank_grows_with_reps(q in q_value(), d in 0usize..=2) {
        let alg = EnvAlgebra::QPlane(q);
        let mut last = 0;
        let mut reps = Vec::new();
        for p in 1..=d + 1 {
            for variant in [Variant::Plain, Variant::Primed] {
                reps.push(RepSpec::QPlane { p, variant });
                let report = separation_rank(&alg, d, &reps).unwrap();
                prop_assert!(report.rank >= last && report.rank <= report.dimension);
                last = report.rank;
            }
        }
    }
}

#[test]
fn unit_polynomial_maps_to_unit() {
    for alg in [EnvAlgebra::QPlane(Rational::integer(3)), EnvAlgebra::Sl2(Rational::new(2, 3)), EnvAlgebra::Free] {
        let one = env_from_poly(&NCPoly::one(), &alg, 3).unwrap();
        assert_eq!(one, TruncatedElement::one(alg, 3).unwrap());
    }
}
