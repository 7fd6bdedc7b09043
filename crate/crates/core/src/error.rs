use alloc::string::String;
use core::fmt;

use crate::rational::Rational;

/// Position of a syntax problem in source text (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Fractional power of a negative time value.
    NegativeTime { t: f64 },
    /// Inverse transform requested for `s^(-gamma)` with `gamma < 2`.
    NoPreimage { sexponent: Rational },
    /// Caputo derivative would leave the algebra (`0 < beta < alpha`).
    CaputoExponent { texponent: Rational, alpha: Rational },
    /// Order outside `(0, 1]`.
    AlphaOutOfRange { alpha: Rational },
    /// Component or polynomial index beyond the available list.
    IndexOutOfRange { index: usize, len: usize },
    /// A component grew past the configured term cap.
    TermCap { component: usize, terms: usize, cap: usize },
    /// The initial condition depends on `t`.
    TimeDependentInitial,
    InvalidNumber,
    Syntax { pos: Position, message: String },
    Domain { pos: Position, message: String },
    MissingField(&'static str),
    Field { field: String, source: alloc::boxed::Box<Error> },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NegativeTime { t } => {
                write!(f, "fractional power of negative time t = {t}")
            }
            Error::NoPreimage { sexponent } => {
                write!(f, "s^(-{sexponent}) has no preimage (exponent below 2)")
            }
            Error::CaputoExponent { texponent, alpha } => write!(
                f,
                "Caputo derivative of order {alpha} applied to t^{texponent} leaves the algebra"
            ),
            Error::AlphaOutOfRange { alpha } => write!(f, "alpha = {alpha} is outside (0, 1]"),
            Error::IndexOutOfRange { index, len } => {
                write!(f, "index {index} out of range for {len} components")
            }
            Error::TermCap { component, terms, cap } => write!(
                f,
                "component u_{component} has {terms} terms, exceeding the cap of {cap}"
            ),
            Error::TimeDependentInitial => write!(f, "initial condition must not depend on t"),
            Error::InvalidNumber => write!(f, "invalid number"),
            Error::Syntax { pos, message } => {
                write!(f, "syntax error at {}:{}: {message}", pos.line, pos.column)
            }
            Error::Domain { pos, message } => {
                write!(f, "domain error at {}:{}: {message}", pos.line, pos.column)
            }
            Error::MissingField(name) => write!(f, "missing required field `{name}`"),
            Error::Field { field, source } => write!(f, "in field `{field}`: {source}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
