mod common;

use common::*;
use iatm_core::decomp::{adomian_polynomial, dj_polynomial};
use iatm_core::{ComponentList, Expression, NonlinearOperator};
use proptest::prelude::*;

const OP: NonlinearOperator = NonlinearOperator::Advection;

fn components(max_len: usize) -> impl Strategy<Value = ComponentList> {
    prop::collection::vec(expression(3), 1..=max_len).prop_map(ComponentList::from)
}

fn tol(c: &ComponentList) -> f64 {
    let m = c.as_slice().iter().map(Expression::max_coefficient).fold(1.0, f64::max);
    m * m * c.len() as f64
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn dj_polynomials_telescope(c in components(6)) {
        let n = c.len() - 1;
        let sum = (0..=n).fold(Expression::zero(), |acc, j| acc.add(&dj_polynomial(OP, &c, j).unwrap()));
        let whole = OP.apply(&c.partial_sum(Some(n)).unwrap());
        prop_assert!(sum.structurally_equal(&whole, 1e-12 * tol(&c)));
    }

    #[test]
    fn adomian_sum_is_the_truncated_product(c in components(5)) {
        let n = c.len() - 1;
        let u = c.as_slice();
        let sum = (0..=n).fold(Expression::zero(), |acc, j| acc.add(&adomian_polynomial(OP, &c, j).unwrap()));
        let mut lower = Expression::zero();
        let mut tail = Expression::zero();
        for i in 0..=n {
            for k in 0..=n {
                let p = u[i].multiply(&u[k].ddx());
                if i + k <= n { lower = lower.add(&p) } else { tail = tail.add(&p) }
            }
        }
        let t = 1e-12 * tol(&c);
        prop_assert!(sum.structurally_equal(&lower, t));
        let full = OP.apply(&c.partial_sum(Some(n)).unwrap());
        prop_assert!(full.sub(&sum).structurally_equal(&tail, t));
    }

    #[test]
    fn schemes_agree_at_order_zero(c in components(3)) {
        prop_assert_eq!(dj_polynomial(OP, &c, 0).unwrap(), adomian_polynomial(OP, &c, 0).unwrap());
    }

    #[test]
    fn first_order_difference(c in components(3).prop_filter("two components", |c| c.len() >= 2)) {
        let u1 = c.get(1).unwrap();
        let diff = dj_polynomial(OP, &c, 1).unwrap().sub(&adomian_polynomial(OP, &c, 1).unwrap());
        prop_assert!(diff.structurally_equal(&u1.multiply(&u1.ddx()), 1e-12 * tol(&c)));
    }
}
