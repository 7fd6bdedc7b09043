#![allow(dead_code)]

use iatm_core::{Expression, Rational, Term, Trig};
use proptest::prelude::*;

pub fn rational_in(max_num: i64, dens: &'static [i64]) -> impl Strategy<Value = Rational> {
    (prop::sample::select(dens), 0..=max_num).prop_map(|(d, n)| Rational::new(n, d).unwrap())
}

/// Order in `(0, 1]`.
pub fn alpha() -> impl Strategy<Value = Rational> {
    (1i64..=10, prop::sample::select(&[1i64, 2, 3, 4, 5, 10][..]))
        .prop_filter_map("alpha in (0,1]", |(n, d)| {
            Rational::new(n, d).filter(|r| *r <= Rational::ONE)
        })
}

pub fn trig() -> impl Strategy<Value = Trig> {
    prop_oneof![
        Just(Trig::Unit),
        (1u32..=4).prop_map(Trig::Sin),
        (1u32..=4).prop_map(Trig::Cos),
    ]
}

pub fn term() -> impl Strategy<Value = Term> {
    (
        -2.0f64..2.0,
        0u32..=3,
        trig(),
        rational_in(16, &[1, 2, 4]),
    )
        .prop_map(|(coefficient, xpower, trig, texponent)| Term {
            coefficient,
            xpower,
            trig,
            texponent,
        })
}

pub fn expression(max_terms: usize) -> impl Strategy<Value = Expression> {
    prop::collection::vec(term(), 0..=max_terms).prop_map(Expression::from_terms)
}

/// Time-independent expression.
pub fn spatial(max_terms: usize) -> impl Strategy<Value = Expression> {
    prop::collection::vec(term(), 0..=max_terms).prop_map(|ts| {
        Expression::from_terms(ts.into_iter().map(|t| Term {
            texponent: Rational::ZERO,
            ..t
        }))
    })
}

pub fn point() -> impl Strategy<Value = (f64, f64)> {
    (0.0f64..=1.0, 0.0f64..=1.0)
}

/// `|a - b| <= tol * max(1, |a|, |b|)`
pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * 1f64.max(a.abs()).max(b.abs())
}
