mod common;

use common::*;
use iatm_core::Expression;
use proptest::prelude::*;

fn scale_of(es: &[&Expression]) -> f64 {
    es.iter().map(|e| e.max_coefficient()).fold(1.0, f64::max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn addition_is_a_commutative_group(a in expression(6), b in expression(6), c in expression(6)) {
        let tol = 1e-13 * scale_of(&[&a, &b, &c]);
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert!(a.add(&b).add(&c).structurally_equal(&a.add(&b.add(&c)), tol));
        prop_assert_eq!(a.add(&Expression::zero()), a.clone());
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn multiplication_distributes(a in expression(5), b in expression(5), c in expression(5)) {
        let tol = 1e-12 * scale_of(&[&a, &b, &c]).powi(2);
        prop_assert!(a.multiply(&b).structurally_equal(&b.multiply(&a), tol));
        let lhs = a.multiply(&b.add(&c));
        let rhs = a.multiply(&b).add(&a.multiply(&c));
        prop_assert!(lhs.structurally_equal(&rhs, tol));
        prop_assert_eq!(a.multiply(&Expression::constant(1.0)), a.clone());
        prop_assert!(a.multiply(&Expression::zero()).is_zero());
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in expression(6), b in expression(6), (x, t) in point()) {
        let (va, vb) = (a.eval(x, t).unwrap(), b.eval(x, t).unwrap());
        prop_assert!(close(a.add(&b).eval(x, t).unwrap(), va + vb, 1e-12 * scale_of(&[&a, &b]) * 10.0));
        let prod = a.multiply(&b).eval(x, t).unwrap();
        prop_assert!(close(prod, va * vb, 1e-11 * scale_of(&[&a, &b]).powi(2) * 10.0), "{} vs {}", prod, va * vb);
    }

    #[test]
    fn canonical_form_is_idempotent_and_order_free(terms in prop::collection::vec(term(), 0..8)) {
        let e = Expression::from_terms(terms.iter().copied());
        prop_assert_eq!(e.normalize(), e.clone());
        let reversed = Expression::from_terms(terms.iter().rev().copied());
        prop_assert!(e.structurally_equal(&reversed, 1e-14 * scale_of(&[&e]) * 10.0));
        for w in e.terms().windows(2) {
            prop_assert!(w[0].signature() < w[1].signature());
        }
    }

    #[test]
    fn derivative_obeys_leibniz(a in expression(5), b in expression(5)) {
        let tol = 1e-11 * scale_of(&[&a, &b]).powi(2);
        let lhs = a.multiply(&b).ddx();
        let rhs = a.ddx().multiply(&b).add(&a.multiply(&b.ddx()));
        prop_assert!(lhs.structurally_equal(&rhs, tol * 100.0));
    }

    #[test]
    fn derivative_matches_finite_differences(a in expression(6), x in 0.1f64..0.9, t in 0.0f64..1.0) {
        let h = 1e-5;
        let fd = (a.eval(x + h, t).unwrap() - a.eval(x - h, t).unwrap()) / (2.0 * h);
        let d = a.ddx().eval(x, t).unwrap();
        prop_assert!((fd - d).abs() <= 1e-5 * scale_of(&[&a]) * 100.0, "{} vs {}", fd, d);
    }
}
