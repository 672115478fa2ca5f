use logarr::arrangement::{canonicalize, Multiplicity};
use logarr::cli::corpus::random_arrangement;
use logarr::exact_algebra::{gcd_poly, Monomial, Polynomial, Scalar};
use logarr::log_modules::{brute_force_degree, derivation_module};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), -4i64..=4), 1..5).prop_map(|terms| {
        let terms = terms
            .into_iter()
            .map(|((a, b, c), k)| (Monomial::from_exponents(&[a, b, c]), Scalar::from_int(k)))
            .collect();
        Polynomial::from_terms(3, terms)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_divides_back(f in poly(), g in poly()) {
        prop_assume!(!g.is_zero());
        prop_assert_eq!(f.mul(&g).exact_div(&g), Some(f));
    }

    #[test]
    fn ring_laws(f in poly(), g in poly(), h in poly()) {
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert!(f.sub(&f).is_zero());
    }

    #[test]
    fn gcd_divides_both(f in poly(), g in poly(), h in poly()) {
        prop_assume!(!h.is_zero() && !f.is_zero() && !g.is_zero());
        let a = f.mul(&h);
        let b = g.mul(&h);
        let d = gcd_poly(&a, &b);
        prop_assert!(a.divisible_by(&d) && b.divisible_by(&d));
        prop_assert!(d.divisible_by(&h));
    }

    #[test]
    fn canonical_form_ignores_scaling(v in prop::collection::vec(-5i64..=5, 3), k in prop::sample::select(vec![-3i64, -1, 2, 7])) {
        prop_assume!(v.iter().any(|&x| x != 0));
        let w: Vec<i64> = v.iter().map(|x| x * k).collect();
        prop_assert_eq!(canonicalize(&v).unwrap(), canonicalize(&w).unwrap());
    }

    #[test]
    fn characteristic_polynomial_vanishes_at_one(n in 3usize..=6, seed in 0u64..500) {
        let a = random_arrangement(3, n, seed).unwrap();
        let chi = a.char_poly();
        prop_assert_eq!(chi.iter().sum::<i64>(), 0);
        prop_assert_eq!(chi[3], 1);
        prop_assert_eq!(chi[2], -(n as i64));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn hilbert_function_matches_dense_count(n in 3usize..=5, seed in 0u64..200, k in 1i64..=2) {
        let a = random_arrangement(3, n, seed).unwrap();
        let m = Multiplicity::constant(n, k);
        let d = derivation_module(&a, &m, 1).unwrap();
        for deg in 0..=4 {
            prop_assert_eq!(d.hilbert(deg), brute_force_degree(&a, &m, 1, deg).unwrap().dimension as u64);
        }
    }
}
