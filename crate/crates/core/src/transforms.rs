//! Aboodh transform pair, Riemann-Liouville integral, Abel memory kernel and
//! Caputo derivative, all acting term by term on [`Expression`].
//!
//! Term rules, for `beta >= 0`:
//!
//! | operation | `t^beta` maps to |
//! |---|---|
//! | forward transform | `Gamma(beta+1) s^-(beta+2)` |
//! | inverse transform of `s^-gamma` | `t^(gamma-2) / Gamma(gamma-1)` |
//! | `I^a` | `Gamma(beta+1)/Gamma(beta+a+1) t^(beta+a)` |
//! | Abel kernel `\int_0^t (t-q)^(a-1) q^beta dq` | `Gamma(a) I^a[t^beta]` |
//! | Caputo `D^a`, `0 < a <= 1` | `Gamma(beta+1)/Gamma(beta+1-a) t^(beta-a)`, constants vanish |

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::expr::{Expression, Term, Trig};
use crate::rational::Rational;
use crate::special::{gamma, gamma_ratio};

/// `coefficient * x^xpower * trig * s^(-sexponent)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SDomainTerm {
    pub coefficient: f64,
    pub xpower: u32,
    pub trig: Trig,
    pub sexponent: Rational,
}

type SKey = (Rational, Trig, u32);

/// Canonical sum of [`SDomainTerm`]s, ordered by `(sexponent, trig, xpower)`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SDomainExpression {
    terms: Vec<SDomainTerm>,
}

impl SDomainExpression {
    pub fn from_terms<I: IntoIterator<Item = SDomainTerm>>(terms: I) -> Self {
        let mut map: BTreeMap<SKey, f64> = BTreeMap::new();
        for t in terms {
            if t.coefficient != 0.0 {
                *map.entry((t.sexponent, t.trig, t.xpower)).or_insert(0.0) += t.coefficient;
            }
        }
        let terms = map
            .into_iter()
            .filter(|(_, c)| *c != 0.0)
            .map(|((sexponent, trig, xpower), coefficient)| SDomainTerm {
                coefficient,
                xpower,
                trig,
                sexponent,
            })
            .collect();
        SDomainExpression { terms }
    }

    pub fn terms(&self) -> &[SDomainTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &SDomainExpression) -> SDomainExpression {
        Self::from_terms(self.terms.iter().chain(other.terms.iter()).copied())
    }

    /// Value at a real `s > 0` and spatial point `x`.
    pub fn eval(&self, x: f64, s: f64) -> f64 {
        self.terms
            .iter()
            .map(|t| {
                t.coefficient
                    * crate::expr::powi(x, t.xpower)
                    * t.trig.eval(x)
                    * libm::pow(s, -t.sexponent.to_f64())
            })
            .sum()
    }
}

/// Aboodh transform `A[u](s) = (1/s) \int_0^\infty u(t) e^(-st) dt`.
pub fn aboodh_forward(e: &Expression) -> SDomainExpression {
    SDomainExpression::from_terms(e.terms().iter().map(|t| SDomainTerm {
        coefficient: t.coefficient * gamma(t.texponent.to_f64() + 1.0),
        xpower: t.xpower,
        trig: t.trig,
        sexponent: t.texponent + Rational::integer(2),
    }))
}

/// Inverse Aboodh transform; every `s` exponent must be at least 2.
pub fn aboodh_inverse(s: &SDomainExpression) -> Result<Expression> {
    let two = Rational::integer(2);
    let mut terms = Vec::with_capacity(s.terms.len());
    for t in &s.terms {
        if t.sexponent < two {
            return Err(Error::NoPreimage {
                sexponent: t.sexponent,
            });
        }
        terms.push(Term {
            coefficient: t.coefficient / gamma(t.sexponent.to_f64() - 1.0),
            xpower: t.xpower,
            trig: t.trig,
            texponent: t.sexponent - two,
        });
    }
    Ok(Expression::from_terms(terms))
}

/// Multiplication by `s^(-alpha)`.
pub fn sdomain_scale(s: &SDomainExpression, alpha: Rational) -> SDomainExpression {
    SDomainExpression {
        terms: s
            .terms
            .iter()
            .map(|t| SDomainTerm {
                sexponent: t.sexponent + alpha,
                ..*t
            })
            .collect(),
    }
}

/// Riemann-Liouville integral `I^alpha`, equal to
/// `A^-1[s^-alpha A[e]]` on the algebra.
pub fn fractional_integral(e: &Expression, alpha: Rational) -> Expression {
    let a = alpha.to_f64();
    e.map_terms(|t| {
        let b = t.texponent.to_f64();
        Some(Term {
            coefficient: t.coefficient * gamma_ratio(b + 1.0, b + a + 1.0),
            texponent: t.texponent + alpha,
            ..*t
        })
    })
}

/// Memory integral `\int_0^t (t-q)^(alpha-1) e(x, q) dq`.
pub fn abel_convolve(e: &Expression, alpha: Rational) -> Expression {
    fractional_integral(e, alpha).scale(gamma(alpha.to_f64()))
}

/// Caputo derivative of order `alpha` in `(0, 1]`.
///
/// Fails when a term has `0 < beta < alpha`, whose derivative would carry a
/// negative power of `t`.
pub fn caputo_derivative(e: &Expression, alpha: Rational) -> Result<Expression> {
    if !alpha.is_positive() || alpha > Rational::ONE {
        return Err(Error::AlphaOutOfRange { alpha });
    }
    let a = alpha.to_f64();
    e.try_map_terms(|t| {
        if t.texponent.is_zero() {
            return Ok(None);
        }
        if t.texponent < alpha {
            return Err(Error::CaputoExponent {
                texponent: t.texponent,
                alpha,
            });
        }
        let b = t.texponent.to_f64();
        Ok(Some(Term {
            coefficient: t.coefficient * gamma_ratio(b + 1.0, b + 1.0 - a),
            texponent: t.texponent - alpha,
            ..*t
        }))
    })
}
