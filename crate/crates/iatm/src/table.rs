use iatm_core::{ProblemSpec, SeriesSolution};

use crate::{HarnessError, ProblemId};

#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    pub t_values: Vec<f64>,
    pub x_values: Vec<f64>,
}

impl GridSpec {
    pub fn new(t_values: Vec<f64>, x_values: Vec<f64>) -> Result<Self, HarnessError> {
        if let Some(t) = t_values.iter().find(|t| t.is_nan() || **t < 0.0) {
            return Err(HarnessError::InvalidGrid(format!("negative time {t}")));
        }
        if x_values.iter().any(|x| !x.is_finite()) {
            return Err(HarnessError::InvalidGrid("non-finite x".into()));
        }
        Ok(GridSpec { t_values, x_values })
    }

    /// The grid of the published table for a built-in problem.
    pub fn paper(id: ProblemId) -> Self {
        match id {
            ProblemId::P1 | ProblemId::P3 => GridSpec {
                t_values: vec![0.001, 0.003, 0.005, 0.007, 0.009],
                x_values: vec![0.2, 0.4, 0.6, 0.8, 1.0],
            },
            ProblemId::P2 => GridSpec {
                t_values: vec![0.01, 0.03, 0.05, 0.07, 0.09],
                x_values: vec![0.1, 0.3, 0.5, 0.7, 0.9],
            },
        }
    }

    /// `"t0,t1,...;x0,x1,..."`
    pub fn parse(s: &str) -> Result<Self, HarnessError> {
        let (ts, xs) = s
            .split_once(';')
            .ok_or_else(|| HarnessError::InvalidGrid("expected `t,...;x,...`".into()))?;
        let list = |part: &str| -> Result<Vec<f64>, HarnessError> {
            part.split(',')
                .map(|v| {
                    v.trim()
                        .parse::<f64>()
                        .map_err(|_| HarnessError::InvalidGrid(format!("bad number `{v}`")))
                })
                .collect()
        };
        GridSpec::new(list(ts)?, list(xs)?)
    }

    /// `(t, x)` pairs, t-major.
    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.t_values
            .iter()
            .flat_map(move |&t| self.x_values.iter().map(move |&x| (t, x)))
    }

    pub fn len(&self) -> usize {
        self.t_values.len() * self.x_values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ErrorTableRow {
    pub t: f64,
    pub x: f64,
    /// Value of the highest partial sum.
    pub approximate: f64,
    pub exact: f64,
    /// `|S_k - exact|` for `k = 0..=n`.
    pub abs_error_per_iteration: Vec<f64>,
}

pub fn error_table(
    p: &ProblemSpec,
    sol: &SeriesSolution,
    grid: &GridSpec,
) -> Result<Vec<ErrorTableRow>, HarnessError> {
    let exact = p.exact.as_ref().ok_or(HarnessError::MissingExact)?;
    grid.points()
        .map(|(t, x)| {
            let e = exact.eval(x, t)?;
            let errors = sol
                .partial_sums
                .iter()
                .map(|s| Ok((s.eval(x, t)? - e).abs()))
                .collect::<Result<Vec<_>, iatm_core::Error>>()?;
            Ok(ErrorTableRow {
                t,
                x,
                approximate: sol.approximation().eval(x, t)?,
                exact: e,
                abs_error_per_iteration: errors,
            })
        })
        .collect()
}
