use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use szego::hypercomplex::rat;
use szego::{Algebra, Hypercomplex, Rational};

fn element(dim: usize) -> impl Strategy<Value = Hypercomplex<Rational>> {
    prop::collection::vec((-20i64..=20, 1i64..=6), dim)
        .prop_map(|c| Hypercomplex::new(c.into_iter().map(|(p, q)| rat(p, q)).collect()).unwrap())
}

fn algebra() -> impl Strategy<Value = Algebra> {
    prop_oneof![Just(Algebra::Quaternion), Just(Algebra::Octonion)]
}

fn pair() -> impl Strategy<Value = (Hypercomplex<Rational>, Hypercomplex<Rational>)> {
    algebra().prop_flat_map(|a| (element(a.dim()), element(a.dim())))
}

proptest! {
    #[test]
    fn norm_is_multiplicative((a, b) in pair()) {
        prop_assert_eq!(a.try_mul(&b).unwrap().norm_sq(), a.norm_sq() * b.norm_sq());
    }

    #[test]
    fn conjugation_reverses_products((a, b) in pair()) {
        prop_assert_eq!(a.try_mul(&b).unwrap().conj(), b.conj().try_mul(&a.conj()).unwrap());
    }

    #[test]
    fn quaternions_associate(a in element(4), b in element(4), c in element(4)) {
        prop_assert!(Hypercomplex::associator(&a, &b, &c).unwrap().is_zero());
    }

    #[test]
    fn octonions_are_alternative(x in element(8), y in element(8)) {
        prop_assert!(Hypercomplex::associator(&x, &x, &y).unwrap().is_zero());
        prop_assert!(Hypercomplex::associator(&x.conj(), &x, &y).unwrap().is_zero());
        prop_assert!(Hypercomplex::associator(&y, &x, &x).unwrap().is_zero());
    }

    #[test]
    fn inverse_is_two_sided((a, _) in pair()) {
        prop_assume!(!a.is_zero());
        let one = Hypercomplex::one(a.algebra());
        let inv = a.inverse().unwrap();
        prop_assert_eq!(a.try_mul(&inv).unwrap(), one.clone());
        prop_assert_eq!(inv.try_mul(&a).unwrap(), one);
    }

    #[test]
    fn text_form_round_trips((a, _) in pair()) {
        prop_assert_eq!(Hypercomplex::<Rational>::parse(a.dim(), &a.to_string()).unwrap(), a);
    }
}

#[test]
fn ten_thousand_pairs_per_dimension() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for alg in [Algebra::Quaternion, Algebra::Octonion] {
        for _ in 0..10_000 {
            let mut draw = || {
                Hypercomplex::new((0..alg.dim()).map(|_| rat(rng.gen_range(-50..=50), rng.gen_range(1..=9))).collect())
                    .unwrap()
            };
            let (a, b) = (draw(), draw());
            let ab = a.try_mul(&b).unwrap();
            assert_eq!(ab.norm_sq(), a.norm_sq() * b.norm_sq());
            assert_eq!(ab.conj(), b.conj().try_mul(&a.conj()).unwrap());
        }
    }
}

#[test]
fn some_octonion_triple_does_not_associate() {
    let e = |i| Hypercomplex::<Rational>::basis(Algebra::Octonion, i).unwrap();
    assert!(!Hypercomplex::associator(&e(1), &e(2), &e(4)).unwrap().is_zero());
}
