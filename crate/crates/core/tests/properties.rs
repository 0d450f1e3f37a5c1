use blobtl::qfield::{rat, LaurentPoly, RatFunc, Rational};
use blobtl::rep::psi;
use blobtl::theta::markov_closure;
use blobtl::tldiag::{enumerate_basis, Diagram, TLMorphism};
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=3, -4i64..=4, 1i64..=3), 0..4)
        .prop_map(|ts| LaurentPoly::from_terms(ts.into_iter().map(|(e, n, d)| (e, rat(n, d)))))
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (laurent(), laurent()).prop_filter_map("nonzero denominator", |(n, d)| RatFunc::new(n, d).ok())
}

fn nonzero() -> impl Strategy<Value = RatFunc> {
    ratfunc().prop_filter("nonzero", |f| !f.is_zero())
}

fn basis_element(n: usize) -> impl Strategy<Value = Diagram> {
    let basis = enumerate_basis(n, n);
    (0..basis.len()).prop_map(move |i| basis[i].clone())
}

/// (n, eps, three basis diagrams of End(n)).
fn triple() -> impl Strategy<Value = (i32, Diagram, Diagram, Diagram)> {
    (1usize..=4, prop::bool::ANY).prop_flat_map(|(n, pos)| {
        let eps = if pos { 1 } else { -1 };
        (Just(eps), basis_element(n), basis_element(n), basis_element(n))
    })
}

fn morph(d: &Diagram, eps: i32) -> TLMorphism {
    TLMorphism::from_diagram(d.clone(), eps)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_laws(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn inverses_are_exact(a in nonzero(), b in ratfunc()) {
        prop_assert!((&a * &a.inverse().unwrap()).is_one());
        prop_assert_eq!(&(&b * &a) / &a, b);
    }

    #[test]
    fn canonical_form_round_trips_through_text(a in ratfunc()) {
        let back: RatFunc = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn evaluation_is_a_ring_map(a in ratfunc(), b in ratfunc(), n in 2i64..7) {
        let q0: Rational = rat(n, 3);
        if let (Ok(x), Ok(y)) = (a.eval_at(&q0), b.eval_at(&q0)) {
            prop_assert_eq!((&a + &b).eval_at(&q0).unwrap(), &x + &y);
            prop_assert_eq!((&a * &b).eval_at(&q0).unwrap(), &x * &y);
        }
    }

    #[test]
    fn composition_is_associative_and_closed((eps, f, g, h) in triple()) {
        let (f, g, h) = (morph(&f, eps), morph(&g, eps), morph(&h, eps));
        let fg = f.compose(&g).unwrap();
        prop_assert!(fg.len() <= 1);
        prop_assert_eq!(fg.compose(&h).unwrap(), f.compose(&g.compose(&h).unwrap()).unwrap());
    }

    #[test]
    fn sigma_is_an_involutive_homomorphism((eps, f, g, _h) in triple()) {
        let (f, g) = (morph(&f, eps), morph(&g, eps));
        prop_assert_eq!(f.sigma().sigma(), f.clone());
        prop_assert_eq!(f.compose(&g).unwrap().sigma(), f.sigma().compose(&g.sigma()).unwrap());
    }

    #[test]
    fn psi_respects_composition((eps, f, g, _h) in triple()) {
        let (f, g) = (morph(&f, eps), morph(&g, eps));
        prop_assert_eq!(psi(&f.compose(&g).unwrap()), &psi(&g) * &psi(&f));
    }

    #[test]
    fn closure_is_cyclic((eps, f, g, _h) in triple()) {
        let (f, g) = (morph(&f, eps), morph(&g, eps));
        prop_assert_eq!(markov_closure(&f.compose(&g).unwrap()).unwrap(), markov_closure(&g.compose(&f).unwrap()).unwrap());
    }

    #[test]
    fn json_round_trips((eps, f, g, _h) in triple(), c in nonzero()) {
        let m = &morph(&f, eps).scale(&c) + &morph(&g, eps);
        prop_assert_eq!(TLMorphism::from_json(&m.to_json()).unwrap(), m);
    }
}
