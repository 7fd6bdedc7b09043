//! Iterative transform solver.
//!
//! With `I^a = A^-1[s^-a A[.]]` and `K^a` the Abel memory integral, the
//! components are
//!
//! ```text
//! u_0 = g + I^a[f]
//! u_1 = I^a[ K^a[d2/dx2 u_0] - N(u_0) ]
//! u_j = I^a[ K^a[d2/dx2 u_{j-1}] - Q_{j-1} ]      j >= 2
//! ```
//!
//! where `Q` is the Daftardar-Jafari polynomial (IATM) or the Adomian
//! polynomial (LADM). Both agree at index 0, so the two schemes first differ
//! at `u_2`.

use alloc::vec::Vec;
use core::fmt;

use crate::decomp::{adomian_polynomial, dj_polynomial, ComponentList, NonlinearOperator};
use crate::error::{Error, Result};
use crate::expr::{Expression, Term};
use crate::quad;
use crate::rational::Rational;
use crate::special::gamma;
use crate::transforms::{abel_convolve, caputo_derivative, fractional_integral};

/// Default per-component term cap.
pub const DEFAULT_TERM_CAP: usize = 20_000;

#[derive(Debug, Clone, PartialEq)]
pub struct ProblemSpec {
    pub alpha: Rational,
    /// `g(x)`; must not depend on `t`.
    pub initial: Expression,
    /// `f(x, t)`
    pub source: Expression,
    pub exact: Option<Expression>,
    pub x_range: (f64, f64),
    pub t_max: f64,
    pub nonlinearity: NonlinearOperator,
}

impl ProblemSpec {
    pub fn new(alpha: Rational, initial: Expression, source: Expression) -> Result<Self> {
        let p = ProblemSpec {
            alpha,
            initial,
            source,
            exact: None,
            x_range: (0.0, 1.0),
            t_max: 1.0,
            nonlinearity: NonlinearOperator::Advection,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn with_exact(mut self, exact: Expression) -> Self {
        self.exact = Some(exact);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !self.alpha.is_positive() || self.alpha > Rational::ONE {
            return Err(Error::AlphaOutOfRange { alpha: self.alpha });
        }
        if !self.initial.is_time_independent() {
            return Err(Error::TimeDependentInitial);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SchemeChoice {
    /// Aboodh pipeline with Daftardar-Jafari polynomials.
    IatmDj,
    /// Same pipeline with Adomian polynomials.
    LadmAdomian,
}

impl fmt::Display for SchemeChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SchemeChoice::IatmDj => "iatm",
            SchemeChoice::LadmAdomian => "ladm",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeriesSolution {
    pub components: ComponentList,
    /// `S_k = u_0 + ... + u_k`
    pub partial_sums: Vec<Expression>,
    pub scheme: SchemeChoice,
    pub alpha: Rational,
    pub term_counts: Vec<usize>,
}

impl SeriesSolution {
    /// Highest component index.
    pub fn order(&self) -> usize {
        self.partial_sums.len() - 1
    }

    pub fn approximation(&self) -> &Expression {
        self.partial_sums.last().expect("at least u_0")
    }

    pub fn partial_sum(&self, k: usize) -> Option<&Expression> {
        self.partial_sums.get(k)
    }
}

pub fn compute_u0(p: &ProblemSpec) -> Expression {
    p.initial.add(&fractional_integral(&p.source, p.alpha))
}

/// `I^a[ K^a[d2/dx2 prev] - poly ]`
fn step(p: &ProblemSpec, prev: &Expression, poly: &Expression) -> Expression {
    let memory = abel_convolve(&prev.ddxx(), p.alpha);
    fractional_integral(&memory.sub(poly), p.alpha)
}

pub fn compute_u1(p: &ProblemSpec, u0: &Expression) -> Expression {
    step(p, u0, &p.nonlinearity.apply(u0))
}

fn polynomial(p: &ProblemSpec, components: &ComponentList, j: usize, scheme: SchemeChoice) -> Result<Expression> {
    match scheme {
        SchemeChoice::IatmDj => dj_polynomial(p.nonlinearity, components, j),
        SchemeChoice::LadmAdomian => adomian_polynomial(p.nonlinearity, components, j),
    }
}

/// `u_j` for `j >= 2` from `u_0 ... u_{j-1}`.
pub fn compute_uj(p: &ProblemSpec, components: &ComponentList, j: usize, scheme: SchemeChoice) -> Result<Expression> {
    if j < 2 || components.len() < j {
        return Err(Error::IndexOutOfRange {
            index: j,
            len: components.len(),
        });
    }
    let poly = polynomial(p, components, j - 1, scheme)?;
    Ok(step(p, components.get(j - 1)?, &poly))
}

pub fn solve(p: &ProblemSpec, n_iterations: usize, scheme: SchemeChoice) -> Result<SeriesSolution> {
    solve_with_cap(p, n_iterations, scheme, DEFAULT_TERM_CAP)
}

/// [`solve`] with an explicit per-component term cap.
pub fn solve_with_cap(
    p: &ProblemSpec,
    n_iterations: usize,
    scheme: SchemeChoice,
    term_cap: usize,
) -> Result<SeriesSolution> {
    p.validate()?;
    let check = |j: usize, u: &Expression| {
        if u.len() > term_cap {
            Err(Error::TermCap {
                component: j,
                terms: u.len(),
                cap: term_cap,
            })
        } else {
            Ok(())
        }
    };

    let u0 = compute_u0(p);
    check(0, &u0)?;
    let mut components = ComponentList::new();
    let mut partial_sums = alloc::vec![u0.clone()];
    components.push(u0);
    // N(S_{j-1}) and N(S_{j-2}), reused by the telescoped differences
    let mut n_prev = Expression::zero();
    let mut n_curr = p.nonlinearity.apply(&partial_sums[0]);

    for j in 1..=n_iterations {
        let prev = components.get(j - 1)?;
        let u = if j == 1 {
            step(p, prev, &n_curr)
        } else {
            let poly = match scheme {
                SchemeChoice::IatmDj => n_curr.sub(&n_prev),
                SchemeChoice::LadmAdomian => adomian_polynomial(p.nonlinearity, &components, j - 1)?,
            };
            step(p, prev, &poly)
        };
        check(j, &u)?;
        let s = partial_sums[j - 1].add(&u);
        components.push(u);
        if scheme == SchemeChoice::IatmDj && j < n_iterations {
            n_prev = core::mem::replace(&mut n_curr, p.nonlinearity.apply(&s));
        }
        partial_sums.push(s);
    }

    let term_counts = components.as_slice().iter().map(Expression::len).collect();
    Ok(SeriesSolution {
        components,
        partial_sums,
        scheme,
        alpha: p.alpha,
        term_counts,
    })
}

/// Caputo derivative of a single `c * X(x) * t^beta` with `0 < beta < alpha`
/// at `(x, t)`, from the defining integral
/// `1/Gamma(1-a) \int_0^t (t-q)^(-a) d/dq[q^beta] dq`.
fn caputo_by_quadrature(term: &Term, alpha: Rational, x: f64, t: f64) -> f64 {
    let a = alpha.to_f64();
    let b = term.texponent.to_f64();
    let spatial = term.coefficient * term.eval_x(x);
    if t <= 0.0 {
        return 0.0;
    }
    if alpha == Rational::ONE {
        return spatial * b * libm::pow(t, b - 1.0);
    }
    let r = quad::integrate_both_singular(|_| b, 0.0, t, b - 1.0, -a, 1e-14, 1e-12);
    spatial * r.value / gamma(1.0 - a)
}

/// Pointwise residual of the model equation for `candidate`:
/// `D^a u + N(u) - K^a[u_xx] - f`.
///
/// Terms whose Caputo derivative leaves the algebra are handled by
/// quadrature at each point instead of symbolically.
pub fn residual(p: &ProblemSpec, candidate: &Expression, points: &[(f64, f64)]) -> Result<Vec<f64>> {
    let (regular, singular): (Vec<Term>, Vec<Term>) = candidate
        .terms()
        .iter()
        .partition(|t| t.texponent.is_zero() || t.texponent >= p.alpha);
    let regular = Expression::from_terms(regular);
    let linear = caputo_derivative(&regular, p.alpha)?
        .sub(&abel_convolve(&candidate.ddxx(), p.alpha))
        .sub(&p.source);
    // N(u) pointwise: expanding the product symbolically is quadratic in
    // the term count
    let ux = candidate.ddx();

    points
        .iter()
        .map(|&(x, t)| {
            let nonlinear = match p.nonlinearity {
                NonlinearOperator::Advection => candidate.eval(x, t)? * ux.eval(x, t)?,
            };
            let mut r = linear.eval(x, t)? + nonlinear;
            for term in &singular {
                r += caputo_by_quadrature(term, p.alpha, x, t);
            }
            Ok(r)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::Trig;
    use core::f64::consts::PI;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn problem(initial: Expression, source: Expression) -> ProblemSpec {
        ProblemSpec::new(Rational::ONE, initial, source).unwrap()
    }

    #[test]
    fn zero_source_keeps_initial() {
        let p = problem(Expression::sin(1), Expression::zero());
        assert_eq!(compute_u0(&p), Expression::sin(1));
    }

    #[test]
    fn zero_u0_gives_zero_u1() {
        let p = problem(Expression::zero(), Expression::zero());
        assert!(compute_u1(&p, &Expression::zero()).is_zero());
    }

    #[test]
    fn u1_from_pure_sine_by_hand() {
        // K[u0''] = -pi^2 t sin(pi x), N(u0) = (pi/2) sin(2 pi x)
        // u1 = -(pi^2/2) t^2 sin(pi x) - (pi/2) t sin(2 pi x)
        let p = problem(Expression::sin(1), Expression::zero());
        let u1 = compute_u1(&p, &Expression::sin(1));
        let expect = Expression::monomial(-PI * PI / 2.0, 0, Trig::Sin(1), Rational::integer(2))
            .add(&Expression::monomial(-PI / 2.0, 0, Trig::Sin(2), Rational::ONE));
        assert!(u1.structurally_equal(&expect, 1e-14), "{u1}");
    }

    #[test]
    fn uj_with_zero_components_is_zero() {
        let p = problem(Expression::zero(), Expression::zero());
        let c: ComponentList = alloc::vec![Expression::zero(), Expression::zero()].into();
        assert!(compute_uj(&p, &c, 2, SchemeChoice::IatmDj).unwrap().is_zero());
        assert!(compute_uj(&p, &c, 3, SchemeChoice::IatmDj).is_err());
        assert!(compute_uj(&p, &c, 1, SchemeChoice::IatmDj).is_err());
    }

    #[test]
    fn solve_zero_iterations() {
        let p = problem(Expression::sin(1), Expression::constant(1.0));
        let sol = solve(&p, 0, SchemeChoice::IatmDj).unwrap();
        assert_eq!(sol.components.len(), 1);
        assert_eq!(sol.partial_sums.len(), 1);
        assert_eq!(sol.order(), 0);
    }

    #[test]
    fn solve_matches_public_component_functions() {
        let p = problem(
            Expression::sin(1),
            Expression::monomial(1.0, 1, Trig::Cos(1), Rational::ONE),
        );
        for scheme in [SchemeChoice::IatmDj, SchemeChoice::LadmAdomian] {
            let sol = solve(&p, 3, scheme).unwrap();
            let c = &sol.components;
            assert_eq!(c.get(0).unwrap(), &compute_u0(&p));
            assert_eq!(c.get(1).unwrap(), &compute_u1(&p, c.get(0).unwrap()));
            for j in 2..=3 {
                let direct = compute_uj(&p, c, j, scheme).unwrap();
                assert!(direct.structurally_equal(c.get(j).unwrap(), 1e-12));
            }
        }
    }

    #[test]
    fn term_cap_aborts() {
        let p = problem(Expression::sin(1), Expression::zero());
        let err = solve_with_cap(&p, 4, SchemeChoice::IatmDj, 3).unwrap_err();
        assert!(matches!(err, Error::TermCap { .. }));
    }

    #[test]
    fn residual_of_zero_is_zero() {
        let p = problem(Expression::zero(), Expression::zero());
        let r = residual(&p, &Expression::zero(), &[(0.3, 0.2), (0.7, 0.9)]).unwrap();
        assert_eq!(r, alloc::vec![0.0, 0.0]);
    }

    #[test]
    fn residual_quadrature_fallback_matches_closed_form() {
        // candidate t^(1/4) with alpha = 1/2: D^a t^b = Gamma(b+1)/Gamma(b+1-a) t^(b-a)
        let alpha = r(1, 2);
        let p = ProblemSpec::new(alpha, Expression::zero(), Expression::zero()).unwrap();
        let cand = Expression::t_pow(r(1, 4));
        let t = 0.3;
        let got = residual(&p, &cand, &[(0.5, t)]).unwrap()[0];
        let expect = gamma(1.25) / gamma(0.75) * libm::pow(t, -0.25);
        assert!(((got - expect) / expect).abs() < 1e-9, "{got} vs {expect}");
    }

    #[test]
    fn invalid_problems_rejected() {
        assert!(matches!(
            ProblemSpec::new(Rational::integer(2), Expression::zero(), Expression::zero()),
            Err(Error::AlphaOutOfRange { .. })
        ));
        assert!(matches!(
            ProblemSpec::new(Rational::ONE, Expression::t_pow(Rational::ONE), Expression::zero()),
            Err(Error::TimeDependentInitial)
        ));
    }
}
