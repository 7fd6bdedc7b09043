//! Symbolic-numeric solver for nonlinear fractional partial
//! integro-differential equations of the form
//!
//! ```text
//! D_t^a u + u u_x = \int_0^t (t - q)^(a - 1) u_xx(x, q) dq + f(x, t),   u(x, 0) = g(x)
//! ```
//!
//! with a Caputo time derivative of order `a` in `(0, 1]`.
//!
//! The crate is `no_std` (it needs `alloc`). Everything acts on a closed
//! term algebra ([`expr`]) of sums of `c * x^m * trig(k*pi*x) * t^beta`, on
//! which the Aboodh transform, the Riemann-Liouville integral, the Abel
//! memory kernel and the Caputo derivative all act term by term
//! ([`transforms`]). The iterative series solver ([`solver`]) expands the
//! nonlinearity with either Daftardar-Jafari or Adomian polynomials
//! ([`decomp`]).
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod decomp;
pub mod error;
pub mod expr;
pub mod parser;
pub mod quad;
pub mod rational;
pub mod solver;
pub mod special;
pub mod transforms;

pub use decomp::{ComponentList, NonlinearOperator};
pub use error::{Error, Result};
pub use expr::{Expression, Term, Trig, XPolynomial};
pub use parser::{parse_expression, parse_problem, parse_problem_with_alpha, ParseEnvironment, SourceText};
pub use rational::Rational;
pub use solver::{ProblemSpec, SchemeChoice, SeriesSolution};
pub use transforms::{SDomainExpression, SDomainTerm};
