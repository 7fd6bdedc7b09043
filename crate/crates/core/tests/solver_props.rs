mod common;

use common::*;
use iatm_core::solver::{residual, solve};
use iatm_core::{Expression, ProblemSpec, SchemeChoice};
use proptest::prelude::*;

fn problem() -> impl Strategy<Value = ProblemSpec> {
    (alpha(), spatial(2), expression(2))
        .prop_map(|(a, g, f)| ProblemSpec::new(a, g, f).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn schemes_share_first_two_components(p in problem()) {
        let dj = solve(&p, 2, SchemeChoice::IatmDj).unwrap();
        let ad = solve(&p, 2, SchemeChoice::LadmAdomian).unwrap();
        for j in 0..2 {
            prop_assert_eq!(dj.components.get(j).unwrap(), ad.components.get(j).unwrap());
        }
    }

    #[test]
    fn partial_sums_are_consistent(p in problem()) {
        for scheme in [SchemeChoice::IatmDj, SchemeChoice::LadmAdomian] {
            let sol = solve(&p, 2, scheme).unwrap();
            prop_assert_eq!(&sol.partial_sums[0], sol.components.get(0).unwrap());
            for k in 1..=2 {
                let u = sol.components.get(k).unwrap();
                let tol = 1e-13 * sol.partial_sums[k].max_coefficient().max(1.0);
                prop_assert!(sol.partial_sums[k].sub(&sol.partial_sums[k - 1]).structurally_equal(u, tol));
                prop_assert_eq!(sol.term_counts[k], u.len());
            }
        }
    }

    #[test]
    fn initial_condition_is_preserved(p in problem(), x in 0.0f64..1.0) {
        let sol = solve(&p, 2, SchemeChoice::IatmDj).unwrap();
        let g = p.initial.eval(x, 0.0).unwrap();
        for s in &sol.partial_sums {
            prop_assert!(close(s.eval(x, 0.0).unwrap(), g, 1e-13));
        }
    }

    #[test]
    fn solving_is_deterministic(p in problem()) {
        let a = solve(&p, 2, SchemeChoice::IatmDj).unwrap();
        let b = solve(&p, 2, SchemeChoice::IatmDj).unwrap();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn residual_of_zero_is_zero() {
    let p = ProblemSpec::new(iatm_core::Rational::ONE, Expression::zero(), Expression::zero()).unwrap();
    let r = residual(&p, &Expression::zero(), &[(0.3, 0.2), (0.9, 0.7)]).unwrap();
    assert_eq!(r, vec![0.0, 0.0]);
}
