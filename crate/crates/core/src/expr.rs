//! Canonical term algebra for separable closed forms in `x` and `t`.
//!
//! Every expression is a finite sum of terms
//! `coefficient * x^m * trig(k*pi*x) * t^beta` with `trig` one of `1`,
//! `sin`, `cos`. Terms are kept sorted by `(beta, trig, m)` with like terms
//! merged, so two expressions that denote the same function in this algebra
//! have the same term list up to floating-point dust in the coefficients.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::f64::consts::PI;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A merged coefficient is dropped when it is below this fraction of the
/// magnitudes that were summed into it (cancellation dust).
///
/// The threshold is relative to the contributing terms, not to the largest
/// coefficient in the expression: high powers of `t` routinely carry
/// coefficients many orders of magnitude above the leading terms.
pub const PRUNE_RELATIVE: f64 = 1e-14;

fn cancelled(sum: f64, magnitude: f64) -> bool {
    sum == 0.0 || sum.abs() < PRUNE_RELATIVE * magnitude
}

/// Spatial factor `1`, `sin(k*pi*x)` or `cos(k*pi*x)`.
///
/// Constructors keep the invariants: no `Sin(0)` (that is the zero
/// function) and no `Cos(0)` (that is `Unit`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum Trig {
    #[default]
    Unit,
    Sin(u32),
    Cos(u32),
}

impl Trig {
    /// `sin(k*pi*x)` for any integer `k`, as `(sign, factor)`; `None` for `k = 0`.
    pub fn sin(k: i64) -> Option<(f64, Trig)> {
        match k.cmp(&0) {
            Ordering::Equal => None,
            Ordering::Greater => Some((1.0, Trig::Sin(k as u32))),
            Ordering::Less => Some((-1.0, Trig::Sin((-k) as u32))),
        }
    }

    /// `cos(k*pi*x)` for any integer `k`.
    pub fn cos(k: i64) -> Trig {
        match k.unsigned_abs() {
            0 => Trig::Unit,
            n => Trig::Cos(n as u32),
        }
    }

    pub fn harmonic(self) -> u32 {
        match self {
            Trig::Unit => 0,
            Trig::Sin(k) | Trig::Cos(k) => k,
        }
    }

    pub fn eval(self, x: f64) -> f64 {
        match self {
            Trig::Unit => 1.0,
            Trig::Sin(k) => libm::sin(k as f64 * PI * x),
            Trig::Cos(k) => libm::cos(k as f64 * PI * x),
        }
    }

    /// Product-to-sum expansion: `self * other = sum of c_i * factor_i`.
    fn product(self, other: Trig) -> ProductTerms {
        let mut out = ProductTerms::default();
        match (self, other) {
            (Trig::Unit, f) | (f, Trig::Unit) => out.push(1.0, Some((1.0, f))),
            (Trig::Sin(a), Trig::Sin(b)) => {
                let (a, b) = (a as i64, b as i64);
                out.push(0.5, Some((1.0, Trig::cos(a - b))));
                out.push(-0.5, Some((1.0, Trig::cos(a + b))));
            }
            (Trig::Cos(a), Trig::Cos(b)) => {
                let (a, b) = (a as i64, b as i64);
                out.push(0.5, Some((1.0, Trig::cos(a - b))));
                out.push(0.5, Some((1.0, Trig::cos(a + b))));
            }
            (Trig::Sin(a), Trig::Cos(b)) | (Trig::Cos(b), Trig::Sin(a)) => {
                let (a, b) = (a as i64, b as i64);
                out.push(0.5, Trig::sin(a + b));
                out.push(0.5, Trig::sin(a - b));
            }
        }
        out
    }

    /// `d/dx`, as an optional `(scale, factor)`.
    fn derivative(self) -> Option<(f64, Trig)> {
        match self {
            Trig::Unit => None,
            Trig::Sin(k) => Some((k as f64 * PI, Trig::Cos(k))),
            Trig::Cos(k) => Some((-(k as f64) * PI, Trig::Sin(k))),
        }
    }
}

#[derive(Default)]
struct ProductTerms {
    items: [(f64, Trig); 2],
    len: usize,
}

impl ProductTerms {
    fn push(&mut self, scale: f64, factor: Option<(f64, Trig)>) {
        if let Some((sign, f)) = factor {
            self.items[self.len] = (scale * sign, f);
            self.len += 1;
        }
    }

    fn iter(&self) -> impl Iterator<Item = &(f64, Trig)> {
        self.items[..self.len].iter()
    }
}

/// Dense polynomial in `x`, index = power. Trailing zeros are stripped.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct XPolynomial {
    coefficients: Vec<f64>,
}

impl XPolynomial {
    pub fn new(mut coefficients: Vec<f64>) -> Self {
        while coefficients.last() == Some(&0.0) {
            coefficients.pop();
        }
        XPolynomial { coefficients }
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coefficients.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    /// Expression `p(x) * trig * t^texponent`.
    pub fn to_expression(&self, trig: Trig, texponent: Rational) -> Expression {
        let mut acc = Accumulator::default();
        for (m, &c) in self.coefficients.iter().enumerate() {
            acc.insert(
                Term {
                    coefficient: c,
                    xpower: m as u32,
                    trig,
                    texponent,
                },
            );
        }
        acc.finish()
    }
}

/// One addend `coefficient * x^xpower * trig * t^texponent`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Term {
    pub coefficient: f64,
    pub xpower: u32,
    pub trig: Trig,
    pub texponent: Rational,
}

/// Like-term signature; its ordering is the canonical term order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Signature {
    pub texponent: Rational,
    pub trig: Trig,
    pub xpower: u32,
}

impl Term {
    pub fn signature(&self) -> Signature {
        Signature {
            texponent: self.texponent,
            trig: self.trig,
            xpower: self.xpower,
        }
    }

    /// Value of the spatial part `x^m * trig(k*pi*x)`.
    pub fn eval_x(&self, x: f64) -> f64 {
        powi(x, self.xpower) * self.trig.eval(x)
    }

    pub fn eval(&self, x: f64, t: f64) -> Result<f64> {
        Ok(self.coefficient * self.eval_x(x) * tpow(t, self.texponent)?)
    }
}

pub(crate) fn powi(base: f64, exp: u32) -> f64 {
    let mut result = 1.0;
    let mut b = base;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result *= b;
        }
        b *= b;
        e >>= 1;
    }
    result
}

/// `t^beta` with `0^0 = 1`; fractional powers of negative `t` are an error.
pub fn tpow(t: f64, beta: Rational) -> Result<f64> {
    if beta.is_zero() {
        return Ok(1.0);
    }
    if beta.is_integer() {
        let n = beta.numer();
        let p = powi(t, n.unsigned_abs() as u32);
        return Ok(if n < 0 { 1.0 / p } else { p });
    }
    if t < 0.0 {
        return Err(Error::NegativeTime { t });
    }
    Ok(libm::pow(t, beta.to_f64()))
}

/// Collects terms by signature and emits a canonical [`Expression`].
#[derive(Default)]
pub(crate) struct Accumulator {
    // signature -> (sum, sum of magnitudes)
    map: BTreeMap<Signature, (f64, f64)>,
}

impl Accumulator {
    pub(crate) fn insert(&mut self, term: Term) {
        if term.coefficient == 0.0 {
            return;
        }
        let slot = self.map.entry(term.signature()).or_insert((0.0, 0.0));
        slot.0 += term.coefficient;
        slot.1 += term.coefficient.abs();
    }

    pub(crate) fn finish(self) -> Expression {
        let terms = self
            .map
            .into_iter()
            .filter(|(_, (c, mag))| !cancelled(*c, *mag))
            .map(|(sig, (c, _))| Term {
                coefficient: c,
                xpower: sig.xpower,
                trig: sig.trig,
                texponent: sig.texponent,
            });
        Expression {
            terms: terms.collect(),
        }
    }
}

/// Canonical finite sum of [`Term`]s. The empty sum is the zero function.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Expression {
    terms: Vec<Term>,
}

impl Expression {
    pub fn zero() -> Self {
        Expression { terms: Vec::new() }
    }

    pub fn constant(c: f64) -> Self {
        Self::monomial(c, 0, Trig::Unit, Rational::ZERO)
    }

    pub fn x() -> Self {
        Self::monomial(1.0, 1, Trig::Unit, Rational::ZERO)
    }

    /// `t^beta`.
    pub fn t_pow(beta: Rational) -> Self {
        Self::monomial(1.0, 0, Trig::Unit, beta)
    }

    /// `sin(k*pi*x)`.
    pub fn sin(k: i64) -> Self {
        match Trig::sin(k) {
            Some((sign, trig)) => Self::monomial(sign, 0, trig, Rational::ZERO),
            None => Self::zero(),
        }
    }

    /// `cos(k*pi*x)`.
    pub fn cos(k: i64) -> Self {
        Self::monomial(1.0, 0, Trig::cos(k), Rational::ZERO)
    }

    pub fn monomial(coefficient: f64, xpower: u32, trig: Trig, texponent: Rational) -> Self {
        Self::from_terms([Term {
            coefficient,
            xpower,
            trig,
            texponent,
        }])
    }

    /// Normalizes an arbitrary list of terms.
    pub fn from_terms<I: IntoIterator<Item = Term>>(terms: I) -> Self {
        let mut acc = Accumulator::default();
        for t in terms {
            acc.insert(t);
        }
        acc.finish()
    }


    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    #[allow(clippy::len_without_is_empty)] // `is_zero` is the emptiness test
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `true` when no term depends on `t`.
    pub fn is_time_independent(&self) -> bool {
        self.terms.iter().all(|t| t.texponent.is_zero())
    }

    /// Re-normalizes the term list. Idempotent on canonical input.
    pub fn normalize(&self) -> Self {
        Self::from_terms(self.terms.iter().copied())
    }

    pub fn add(&self, other: &Expression) -> Expression {
        let mut merged = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (self.terms[i], other.terms[j]);
            match a.signature().cmp(&b.signature()) {
                Ordering::Less => {
                    merged.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    merged.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a.coefficient + b.coefficient;
                    if !cancelled(c, a.coefficient.abs() + b.coefficient.abs()) {
                        merged.push(Term { coefficient: c, ..a });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        merged.extend_from_slice(&self.terms[i..]);
        merged.extend_from_slice(&other.terms[j..]);
        Expression { terms: merged }
    }

    pub fn sub(&self, other: &Expression) -> Expression {
        self.add(&other.scale(-1.0))
    }

    pub fn scale(&self, c: f64) -> Expression {
        if c == 0.0 {
            return Self::zero();
        }
        Expression {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coefficient: t.coefficient * c,
                    ..*t
                })
                .filter(|t| t.coefficient != 0.0)
                .collect(),
        }
    }

    /// Product with trig products rewritten to sums.
    ///
    /// Runs of terms sharing `(t^beta, trig)` are multiplied as dense
    /// polynomials in `x`, so the map traffic scales with the number of
    /// runs rather than the number of terms.
    pub fn multiply(&self, other: &Expression) -> Expression {
        type Key = (Rational, Trig);
        // (coefficient sums, magnitude sums), indexed by x power
        let mut acc: BTreeMap<Key, (Vec<f64>, Vec<f64>)> = BTreeMap::new();
        let (ra, rb) = (self.runs(), other.runs());
        let mut conv = Vec::new();
        let mut conv_abs = Vec::new();
        for (ka, pa) in &ra {
            for (kb, pb) in &rb {
                let len = pa.len() + pb.len() - 1;
                conv.clear();
                conv.resize(len, 0.0);
                conv_abs.clear();
                conv_abs.resize(len, 0.0);
                for (i, &a) in pa.iter().enumerate() {
                    if a == 0.0 {
                        continue;
                    }
                    for (j, &b) in pb.iter().enumerate() {
                        conv[i + j] += a * b;
                        conv_abs[i + j] += (a * b).abs();
                    }
                }
                let texponent = ka.0 + kb.0;
                for &(scale, trig) in ka.1.product(kb.1).iter() {
                    let slot = acc
                        .entry((texponent, trig))
                        .or_insert_with(|| (Vec::new(), Vec::new()));
                    if slot.0.len() < len {
                        slot.0.resize(len, 0.0);
                        slot.1.resize(len, 0.0);
                    }
                    for m in 0..len {
                        slot.0[m] += scale * conv[m];
                        slot.1[m] += scale.abs() * conv_abs[m];
                    }
                }
            }
        }
        let mut terms = Vec::new();
        for ((texponent, trig), (sums, mags)) in acc {
            for (m, (c, mag)) in sums.into_iter().zip(mags).enumerate() {
                if !cancelled(c, mag) {
                    terms.push(Term {
                        coefficient: c,
                        xpower: m as u32,
                        trig,
                        texponent,
                    });
                }
            }
        }
        Expression { terms }
    }

    /// Maximal runs sharing `(t^beta, trig)`, as dense coefficient vectors
    /// in powers of `x`.
    fn runs(&self) -> Vec<((Rational, Trig), Vec<f64>)> {
        let mut out: Vec<((Rational, Trig), Vec<f64>)> = Vec::new();
        for t in &self.terms {
            let key = (t.texponent, t.trig);
            if out.last().map(|r| r.0) != Some(key) {
                out.push((key, Vec::new()));
            }
            let poly = &mut out.last_mut().expect("pushed above").1;
            let m = t.xpower as usize;
            if poly.len() <= m {
                poly.resize(m + 1, 0.0);
            }
            poly[m] = t.coefficient;
        }
        out
    }

    /// `self^n` for a non-negative integer `n`.
    pub fn powu(&self, n: u32) -> Expression {
        let mut result = Expression::constant(1.0);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = result.multiply(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.multiply(&base);
            }
        }
        result
    }

    /// Partial derivative in `x`.
    pub fn ddx(&self) -> Expression {
        let mut acc = Accumulator::default();
        for t in &self.terms {
            if t.xpower > 0 {
                acc.insert(Term {
                    coefficient: t.coefficient * t.xpower as f64,
                    xpower: t.xpower - 1,
                    ..*t
                });
            }
            if let Some((s, trig)) = t.trig.derivative() {
                acc.insert(Term {
                    coefficient: t.coefficient * s,
                    trig,
                    ..*t
                });
            }
        }
        acc.finish()
    }

    pub fn ddxx(&self) -> Expression {
        self.ddx().ddx()
    }

    pub fn eval(&self, x: f64, t: f64) -> Result<f64> {
        let mut sum = 0.0;
        for term in &self.terms {
            sum += term.eval(x, t)?;
        }
        Ok(sum)
    }

    /// Term-wise comparison: signatures are matched and coefficients must
    /// agree within `tol` (absolute). A term present on one side only counts
    /// as matched against a zero coefficient.
    pub fn structurally_equal(&self, other: &Expression, tol: f64) -> bool {
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.signature().cmp(&y.signature()),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            let diff = match ord {
                Ordering::Less => {
                    i += 1;
                    a[i - 1].coefficient.abs()
                }
                Ordering::Greater => {
                    j += 1;
                    b[j - 1].coefficient.abs()
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                    (a[i - 1].coefficient - b[j - 1].coefficient).abs()
                }
            };
            if diff.is_nan() || diff > tol {
                return false;
            }
        }
        true
    }

    /// Largest coefficient magnitude (0 for the zero expression).
    pub fn max_coefficient(&self) -> f64 {
        self.terms
            .iter()
            .map(|t| t.coefficient.abs())
            .fold(0.0, f64::max)
    }

    /// Applies `f` to every term and renormalizes. `f` may drop terms.
    pub fn map_terms<F>(&self, f: F) -> Expression
    where
        F: FnMut(&Term) -> Option<Term>,
    {
        Self::from_terms(self.terms.iter().filter_map(f))
    }

    /// Fallible variant of [`Expression::map_terms`].
    pub fn try_map_terms<F>(&self, mut f: F) -> Result<Expression>
    where
        F: FnMut(&Term) -> Result<Option<Term>>,
    {
        let mut acc = Accumulator::default();
        for t in &self.terms {
            if let Some(n) = f(t)? {
                acc.insert(n);
            }
        }
        Ok(acc.finish())
    }
}

impl<'a> Add<&'a Expression> for &'a Expression {
    type Output = Expression;
    fn add(self, rhs: &'a Expression) -> Expression {
        Expression::add(self, rhs)
    }
}

impl<'a> Sub<&'a Expression> for &'a Expression {
    type Output = Expression;
    fn sub(self, rhs: &'a Expression) -> Expression {
        Expression::sub(self, rhs)
    }
}

impl<'a> Mul<&'a Expression> for &'a Expression {
    type Output = Expression;
    fn mul(self, rhs: &'a Expression) -> Expression {
        self.multiply(rhs)
    }
}

impl Neg for &Expression {
    type Output = Expression;
    fn neg(self) -> Expression {
        self.scale(-1.0)
    }
}

struct Coefficient(f64);

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.0;
        if v != 0.0 && !(1e-5..1e15).contains(&v.abs()) {
            write!(f, "{v:e}")
        } else {
            write!(f, "{v}")
        }
    }
}

fn write_texponent(f: &mut fmt::Formatter<'_>, beta: Rational) -> fmt::Result {
    if beta == Rational::ONE {
        write!(f, "t")
    } else if beta.is_integer() && beta.is_positive() {
        write!(f, "t^{beta}")
    } else {
        write!(f, "t^({beta})")
    }
}

/// Prints in the input grammar, so the output parses back to the same
/// expression.
impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, term) in self.terms.iter().enumerate() {
            let c = term.coefficient;
            match (i, c < 0.0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write!(f, "{}", Coefficient(c.abs()))?;
            match term.xpower {
                0 => {}
                1 => write!(f, "*x")?,
                m => write!(f, "*x^{m}")?,
            }
            match term.trig {
                Trig::Unit => {}
                Trig::Sin(k) => write!(f, "*sin({k}*pi*x)")?,
                Trig::Cos(k) => write!(f, "*cos({k}*pi*x)")?,
            }
            if !term.texponent.is_zero() {
                write!(f, "*")?;
                write_texponent(f, term.texponent)?;
            }
        }
        Ok(())
    }
}
