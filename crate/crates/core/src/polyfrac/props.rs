use proptest::prelude::*;

use super::*;
use crate::hypercomplex::{rat, Rational};

fn poly4() -> impl Strategy<Value = RatPoly> {
    prop::collection::vec(((0u16..3, 0u16..3, 0u16..3, 0u16..3), -4i64..=4), 1..6).prop_map(|ts| {
        let terms: Vec<([u16; 4], Rational)> =
            ts.into_iter().map(|((a, b, c, d), k)| ([a, b, c, d], rat(k, 1))).collect();
        RatPoly::from_terms(4, terms.iter().map(|(e, c)| (&e[..], c.clone()))).unwrap()
    })
}

fn frac4() -> impl Strategy<Value = RadialFraction> {
    (poly4(), 0u32..3).prop_map(|(p, k)| RadialFraction::new(p, k))
}

fn point() -> impl Strategy<Value = [f64; 4]> {
    prop::array::uniform4(0.3f64..1.5).prop_flat_map(|a| {
        prop::array::uniform4(prop::bool::ANY).prop_map(move |s| {
            let mut p = a;
            for i in 0..4 {
                if s[i] {
                    p[i] = -p[i];
                }
            }
            p
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn mixed_partials_commute(f in frac4(), i in 0usize..4, j in 0usize..4) {
        prop_assert_eq!(f.deriv(i).deriv(j), f.deriv(j).deriv(i));
    }

    #[test]
    fn arithmetic_results_are_canonical(f in frac4(), g in frac4(), i in 0usize..4) {
        prop_assert!(f.is_canonical());
        prop_assert!(f.try_add(&g).unwrap().is_canonical());
        prop_assert!(f.try_sub(&g).unwrap().is_canonical());
        prop_assert!(f.deriv(i).is_canonical());
        prop_assert!(f.try_sub(&f).unwrap().is_zero());
    }

    #[test]
    fn derivative_matches_central_difference(f in frac4(), i in 0usize..4, x in point()) {
        let h = 1e-4;
        let c = f.compile();
        let mut xp = x;
        let mut xm = x;
        xp[i] += h;
        xm[i] -= h;
        let fd = (c.eval(&xp) - c.eval(&xm)) / (2.0 * h);
        let exact = f.deriv(i).eval(&x).unwrap();
        let scale = exact.abs().max(c.eval(&x).abs()).max(1.0);
        prop_assert!((fd - exact).abs() <= 1e-6 * scale, "fd {} exact {}", fd, exact);
    }

    #[test]
    fn compiled_matches_exact(f in frac4(), x in point()) {
        let exact = f.eval(&x).unwrap();
        let fast = f.compile().eval(&x);
        prop_assert!((exact - fast).abs() <= 1e-12 * exact.abs().max(1.0));
    }

    #[test]
    fn conjugate_dirac_factors_laplacian(ps in prop::collection::vec(poly4(), 4)) {
        let f = HyperFrac::from_polys(ps).unwrap();
        for side in [Side::Left, Side::Right] {
            let dd = f.dirac(side, false).unwrap().dirac(side, true).unwrap();
            prop_assert_eq!(&dd, &f.laplacian());
        }
    }

    #[test]
    fn json_round_trip(f in frac4()) {
        prop_assert_eq!(RadialFraction::from_json(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn conj_is_an_involution(ps in prop::collection::vec(poly4(), 4)) {
        let f = HyperFrac::from_polys(ps).unwrap();
        prop_assert_eq!(f.conj().conj(), f.clone());
    }
}
