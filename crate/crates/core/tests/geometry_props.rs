use proptest::prelude::*;
use szego::geometry::{cayley, cayley_inv, GroupElement, GroupKind, SiegelPoint};
use szego::hypercomplex::rat;
use szego::{Hypercomplex, Rational};

fn ratv(len: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-12i64..=12, 1i64..=4), len).prop_map(|c| c.into_iter().map(|(p, q)| rat(p, q)).collect())
}

fn element(kind: GroupKind, n: usize) -> impl Strategy<Value = GroupElement<Rational>> {
    let dim = kind.algebra().dim();
    (prop::collection::vec(ratv(dim), n), ratv(kind.center_dim())).prop_map(move |(w, t)| {
        GroupElement::new(kind, w.into_iter().map(|c| Hypercomplex::new(c).unwrap()).collect(), t).unwrap()
    })
}

fn kind_and_n() -> impl Strategy<Value = (GroupKind, usize)> {
    prop_oneof![
        Just((GroupKind::Quaternionic, 1)),
        Just((GroupKind::Quaternionic, 2)),
        Just((GroupKind::Octonionic, 1)),
    ]
}

fn triple() -> impl Strategy<Value = (GroupElement<Rational>, GroupElement<Rational>, GroupElement<Rational>)> {
    kind_and_n().prop_flat_map(|(k, n)| (element(k, n), element(k, n), element(k, n)))
}

/// A point above the boundary point `g(0)` at height `h`.
fn lift(g: &GroupElement<Rational>, h: Rational) -> SiegelPoint<Rational> {
    let mut p = g.boundary_param();
    p.vertical = p.vertical.try_add(&Hypercomplex::real(g.kind.algebra(), h)).unwrap();
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn group_axioms((a, b, c) in triple()) {
        let e = GroupElement::identity(a.kind, a.n());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&e).unwrap(), a.clone());
        prop_assert_eq!(e.mul(&a).unwrap(), a.clone());
        prop_assert_eq!(a.mul(&a.inverse()).unwrap(), e);
    }

    #[test]
    fn translation_is_an_action((a, b, c) in triple(), h in 1i64..20) {
        let p = lift(&c, rat(h, 3));
        let lhs = a.translate(&b.translate(&p).unwrap()).unwrap();
        let rhs = a.mul(&b).unwrap().translate(&p).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn translation_preserves_height((a, _, c) in triple(), h in 1i64..20) {
        let p = lift(&c, rat(h, 3));
        prop_assert_eq!(a.translate(&p).unwrap().height(), p.height());
    }

    #[test]
    fn rho_is_symmetric((a, _, _) in triple()) {
        prop_assert_eq!(a.inverse().rho_length(), a.rho_length());
    }

    #[test]
    fn dilation_scales_rho((a, _, _) in triple(), d in 1i64..9) {
        let delta = rat(d, 2);
        let lhs = a.dilate(&delta).unwrap().rho_length();
        let rhs = a.rho_length() * d as f64 / 2.0;
        prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.max(1.0));
    }

    #[test]
    fn cayley_is_a_bijection_onto_the_ball(g in element(GroupKind::Octonionic, 1), h in 1i64..40) {
        let tau = lift(&g, rat(h, 8));
        let sigma = cayley(&tau).unwrap();
        prop_assert!(sigma.in_ball());
        prop_assert_eq!(cayley_inv(&sigma).unwrap(), tau);
    }

    #[test]
    fn boundary_goes_to_the_sphere(g in element(GroupKind::Octonionic, 1)) {
        let sigma = cayley(&g.boundary_param().to_f64()).unwrap();
        prop_assert!((sigma.norm_sq() - 1.0).abs() < 1e-10);
        let exact = cayley(&g.boundary_param()).unwrap();
        prop_assert_eq!(exact.norm_sq(), rat(1, 1));
    }
}
