use proptest::prelude::*;

use sergeev_core::algebra::Word;
use sergeev_core::scalar::sqrt_rational;
use sergeev_core::{AlgebraElement, Gaussian, Permutation, Rational, Scalar};

const RADICANDS: [u64; 8] = [1, 2, 3, 5, 6, 7, 30, 42];

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=12).prop_map(|(p, q)| Rational::new(p, q).unwrap())
}

fn scalar() -> impl Strategy<Value = Scalar> {
    prop::collection::vec(
        (prop::sample::select(&RADICANDS[..]), rational(), rational()),
        0..4,
    )
    .prop_map(|terms| {
        Scalar::from_terms(
            terms
                .into_iter()
                .map(|(d, re, im)| (d, Gaussian::new(re, im))),
        )
        .unwrap()
    })
}

fn element(n: usize) -> impl Strategy<Value = AlgebraElement> {
    let perms = Permutation::all(n);
    prop::collection::vec(
        (
            prop::sample::select(perms),
            0u32..(1 << n),
            -3i64..=3,
            prop::bool::ANY,
        ),
        1..4,
    )
    .prop_map(move |terms| {
        let terms = terms
            .into_iter()
            .map(|(w, mask, k, root)| {
                let c = if root {
                    Scalar::sqrt_int(2).scale_rational(&Rational::from_integer(k))
                } else {
                    Scalar::from_int(k)
                };
                (Word::new(&w, mask), c)
            })
            .collect();
        AlgebraElement::from_terms(n, terms).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Scalar::one(), a.clone());
    }

    #[test]
    fn inverse_is_two_sided(a in scalar()) {
        prop_assume!(!a.is_zero());
        let inv = a.inverse().unwrap();
        prop_assert!((&a * &inv).is_one());
        prop_assert!((&inv * &a).is_one());
    }

    #[test]
    fn square_roots_square_back(p in 0i64..=400, q in 1i64..=60) {
        let r = Rational::new(p, q).unwrap();
        prop_assert_eq!(sqrt_rational(&r).unwrap().square(), Scalar::from_rational(r));
    }

    #[test]
    fn negative_radicands_rejected(p in 1i64..=400, q in 1i64..=60) {
        prop_assert!(sqrt_rational(&Rational::new(-p, q).unwrap()).is_err());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn multiplication_is_associative(a in element(4), b in element(4), c in element(4)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn star_reverses_products(a in element(4), b in element(4)) {
        prop_assert_eq!((&a * &b).star(), &b.star() * &a.star());
        prop_assert_eq!(a.star().star(), a);
    }

    #[test]
    fn distributivity_in_the_algebra(a in element(3), b in element(3), c in element(3)) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }
}
