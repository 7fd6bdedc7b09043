//! The three built-in benchmark problems, stored as problem documents.
//!
//! Problem 1's source differs from the commonly quoted form: the group
//! `pi/2 - 12 t^(3-a)/G(4-a) - 2 pi t^3 cos(pi x) - 48 pi^2 G(a) t^(3+a)/G(4+a)`
//! carries a `sin(2 pi x)` factor. Without it the stated exact solution
//! does not satisfy the equation (the residual is O(1) already at `t = 0`).

use std::fmt;
use std::str::FromStr;

use iatm_core::{parse_problem_with_alpha, ProblemSpec, Rational, SourceText};

use crate::HarnessError;

pub const P1: &str = "\
# u = sin(pi x) - 2 t^3 sin(2 pi x)
alpha = 1
initial = sin(pi*x)
source = pi*(pi*t^alpha/alpha - 4*t^3*cos(2*pi*x))*sin(pi*x) \
+ (pi/2 - 12*t^(3-alpha)/gamma(4-alpha) - 2*pi*t^3*cos(pi*x) \
- 48*pi^2*gamma(alpha)*t^(3+alpha)/gamma(4+alpha))*sin(2*pi*x) \
+ 8*pi*t^6*cos(2*pi*x)*sin(2*pi*x)
exact = sin(pi*x) - 2*t^3*sin(2*pi*x)
";

pub const P2: &str = "\
# u = t^3 sin(pi x)
alpha = 1
initial = 0
source = (6*t^(3-alpha)/gamma(4-alpha) + pi*t^6*cos(pi*x) \
+ 6*pi^2*gamma(alpha)*t^(3+alpha)/gamma(4+alpha))*sin(pi*x)
exact = t^3*sin(pi*x)
";

pub const P3: &str = "\
# u = (1 + t^(5/2)) x^2 (1-x)^2
alpha = 1
initial = x^2*(1-x)^2
source = gamma(7/2)*t^(5/2-alpha)*x^2*(1-x)^2/gamma(7/2-alpha) \
- 2*(t^alpha/alpha + gamma(7/2)*gamma(alpha)*t^(5/2+alpha)/gamma(7/2+alpha))*(6*x^2-6*x+1) \
+ 2*(1+t^(5/2))^2*(1-2*x)*x^3*(1-x)^3
exact = (1+t^(5/2))*x^2*(1-x)^2
";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProblemId {
    P1,
    P2,
    P3,
}

impl ProblemId {
    pub const ALL: [ProblemId; 3] = [ProblemId::P1, ProblemId::P2, ProblemId::P3];

    pub fn document(self) -> &'static str {
        match self {
            ProblemId::P1 => P1,
            ProblemId::P2 => P2,
            ProblemId::P3 => P3,
        }
    }
}

impl fmt::Display for ProblemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProblemId::P1 => "p1",
            ProblemId::P2 => "p2",
            ProblemId::P3 => "p3",
        })
    }
}

impl FromStr for ProblemId {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "p1" => Ok(ProblemId::P1),
            "p2" => Ok(ProblemId::P2),
            "p3" => Ok(ProblemId::P3),
            other => Err(HarnessError::UnknownProblem(other.to_string())),
        }
    }
}

/// Built-in problem at the given order.
pub fn builtin_problem(id: ProblemId, alpha: Rational) -> Result<ProblemSpec, HarnessError> {
    let text = SourceText::new(id.document(), id.to_string());
    Ok(parse_problem_with_alpha(&text, Some(alpha))?)
}
