//! Series expansions of the nonlinear term.
//!
//! For a series `u = u_0 + u_1 + ...`:
//!
//! * Daftardar-Jafari: `J_0 = N(u_0)`, `J_j = N(u_0+...+u_j) - N(u_0+...+u_{j-1})`.
//!   Partial sums telescope, so `J_0 + ... + J_n = N(u_0 + ... + u_n)` exactly.
//! * Adomian, for the quadratic advection term `N(u) = u u_x`:
//!   `P_j = sum_{i+k=j} u_i d/dx u_k`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::expr::Expression;

/// The nonlinear term of the model equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NonlinearOperator {
    /// `N(u) = u * du/dx`
    #[default]
    Advection,
}

impl NonlinearOperator {
    pub fn apply(self, e: &Expression) -> Expression {
        match self {
            NonlinearOperator::Advection => e.multiply(&e.ddx()),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            NonlinearOperator::Advection => "advection",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "advection" => Some(NonlinearOperator::Advection),
            _ => None,
        }
    }
}

/// Series components `u_0, u_1, ...` with contiguous indices.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ComponentList(Vec<Expression>);

impl ComponentList {
    pub fn new() -> Self {
        ComponentList(Vec::new())
    }

    pub fn push(&mut self, u: Expression) {
        self.0.push(u);
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, j: usize) -> Result<&Expression> {
        self.0.get(j).ok_or(Error::IndexOutOfRange {
            index: j,
            len: self.0.len(),
        })
    }

    pub fn as_slice(&self) -> &[Expression] {
        &self.0
    }

    /// `u_0 + ... + u_j`; the zero expression when `j` is `None`.
    pub fn partial_sum(&self, upto: Option<usize>) -> Result<Expression> {
        let Some(j) = upto else {
            return Ok(Expression::zero());
        };
        self.get(j)?;
        Ok(self.0[..=j]
            .iter()
            .fold(Expression::zero(), |acc, u| acc.add(u)))
    }
}

impl From<Vec<Expression>> for ComponentList {
    fn from(v: Vec<Expression>) -> Self {
        ComponentList(v)
    }
}

impl FromIterator<Expression> for ComponentList {
    fn from_iter<I: IntoIterator<Item = Expression>>(iter: I) -> Self {
        ComponentList(iter.into_iter().collect())
    }
}

pub fn apply_n(op: NonlinearOperator, e: &Expression) -> Expression {
    op.apply(e)
}

/// Daftardar-Jafari polynomial `J_j`.
pub fn dj_polynomial(op: NonlinearOperator, components: &ComponentList, j: usize) -> Result<Expression> {
    let upper = components.partial_sum(Some(j))?;
    if j == 0 {
        return Ok(op.apply(&upper));
    }
    let lower = components.partial_sum(Some(j - 1))?;
    Ok(op.apply(&upper).sub(&op.apply(&lower)))
}

/// Adomian polynomial `P_j`.
pub fn adomian_polynomial(op: NonlinearOperator, components: &ComponentList, j: usize) -> Result<Expression> {
    components.get(j)?;
    let u = components.as_slice();
    match op {
        NonlinearOperator::Advection => {
            let mut acc = Expression::zero();
            for i in 0..=j {
                acc = acc.add(&u[i].multiply(&u[j - i].ddx()));
            }
            Ok(acc)
        }
    }
}
