//! Expression language and problem documents.
//!
//! Expressions:
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := factor (('*' | '/') factor)*
//! factor   := base ('^' exponent)?
//! base     := number | 'pi' | 'alpha' | 'x' | 't' | name | call | '(' expr ')' | '-' factor
//! call     := ('sin' | 'cos' | 'gamma') '(' expr ')'
//! exponent := base
//! ```
//!
//! `alpha` and `gamma(...)` are resolved numerically while parsing. Powers of
//! `t` must come out rational, trig arguments must be `k*pi*x` for an integer
//! `k`, and division is only by constants.
//!
//! Problem documents are `key = value` lines with `#` comments; keys are
//! `alpha`, `initial`, `source`, `exact`, `x_min`, `x_max`, `t_max` and
//! `nonlinearity`.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::decomp::NonlinearOperator;
use crate::error::{Error, Position, Result};
use crate::expr::{Expression, Trig};
use crate::rational::{parse_decimal, Rational};
use crate::solver::ProblemSpec;
use crate::special::gamma;

const MAX_DEPTH: usize = 200;
const MAX_INTEGER_POWER: i64 = 64;
const MAX_EXPONENT_PART: i64 = 1_000_000;

#[derive(Debug, Clone, PartialEq)]
pub struct ParseEnvironment {
    pub alpha: Rational,
    pub constants: BTreeMap<String, f64>,
}

impl ParseEnvironment {
    /// Environment with `pi` defined; `alpha` must lie in `(0, 1]`.
    pub fn new(alpha: Rational) -> Result<Self> {
        if !alpha.is_positive() || alpha > Rational::ONE {
            return Err(Error::AlphaOutOfRange { alpha });
        }
        let mut constants = BTreeMap::new();
        constants.insert("pi".to_string(), PI);
        Ok(ParseEnvironment { alpha, constants })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceText {
    pub raw: String,
    /// File path or an inline tag.
    pub origin: String,
}

impl SourceText {
    pub fn new(raw: impl Into<String>, origin: impl Into<String>) -> Self {
        SourceText {
            raw: raw.into(),
            origin: origin.into(),
        }
    }

    pub fn inline(raw: impl Into<String>) -> Self {
        Self::new(raw, "<inline>")
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64, Option<Rational>),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

struct Lexer<'a> {
    chars: core::iter::Peekable<core::str::CharIndices<'a>>,
    src: &'a str,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn tokenize(src: &'a str, start: Position) -> Result<Vec<(Tok, Position)>> {
        let mut lx = Lexer {
            chars: src.char_indices().peekable(),
            src,
            line: start.line,
            col: start.column,
        };
        let mut out = Vec::new();
        loop {
            let (tok, pos) = lx.next_token()?;
            let end = tok == Tok::End;
            out.push((tok, pos));
            if end {
                return Ok(out);
            }
        }
    }

    fn bump(&mut self) -> Option<(usize, char)> {
        let c = self.chars.next()?;
        if c.1 == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn pos(&self) -> Position {
        Position {
            line: self.line,
            column: self.col,
        }
    }

    fn next_token(&mut self) -> Result<(Tok, Position)> {
        while matches!(self.chars.peek(), Some((_, c)) if c.is_whitespace()) {
            self.bump();
        }
        let pos = self.pos();
        let Some(&(start, c)) = self.chars.peek() else {
            return Ok((Tok::End, pos));
        };
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = simple {
            self.bump();
            return Ok((tok, pos));
        }
        if c.is_ascii_digit() || c == '.' {
            let mut end = start;
            let mut seen_exp = false;
            while let Some(&(i, ch)) = self.chars.peek() {
                let take = ch.is_ascii_digit()
                    || ch == '.'
                    || (!seen_exp && (ch == 'e' || ch == 'E') && self.exponent_follows(i))
                    || ((ch == '+' || ch == '-') && seen_exp && self.src[..i].ends_with(['e', 'E']));
                if !take {
                    break;
                }
                if ch == 'e' || ch == 'E' {
                    seen_exp = true;
                }
                end = i + ch.len_utf8();
                self.bump();
            }
            let text = &self.src[start..end];
            let value: f64 = text.parse().map_err(|_| Error::Syntax {
                pos,
                message: format!("malformed number `{text}`"),
            })?;
            return Ok((Tok::Num(value, parse_decimal(text)), pos));
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut end = start;
            while let Some(&(i, ch)) = self.chars.peek() {
                if !(ch.is_ascii_alphanumeric() || ch == '_') {
                    break;
                }
                end = i + ch.len_utf8();
                self.bump();
            }
            return Ok((Tok::Ident(self.src[start..end].to_string()), pos));
        }
        Err(Error::Syntax {
            pos,
            message: format!("unexpected character `{c}`"),
        })
    }

    /// `e` at byte `i` starts an exponent only if a digit (after an
    /// optional sign) follows.
    fn exponent_follows(&self, i: usize) -> bool {
        let rest = &self.src.as_bytes()[i + 1..];
        match rest.first() {
            Some(b'+') | Some(b'-') => rest.get(1).is_some_and(u8::is_ascii_digit),
            Some(b) => b.is_ascii_digit(),
            None => false,
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Constant {
    value: f64,
    exact: Option<Rational>,
}

impl Constant {
    fn exact(r: Rational) -> Self {
        Constant {
            value: r.to_f64(),
            exact: Some(r),
        }
    }

    fn real(value: f64) -> Self {
        Constant { value, exact: None }
    }
}

#[derive(Debug, Clone)]
enum Value {
    Const(Constant),
    Expr(Expression),
}

impl Value {
    fn into_expr(self) -> Expression {
        match self {
            Value::Const(c) => Expression::constant(c.value),
            Value::Expr(e) => e,
        }
    }
}

struct Parser<'e> {
    toks: Vec<(Tok, Position)>,
    idx: usize,
    env: &'e ParseEnvironment,
    depth: usize,
}

fn domain(pos: Position, message: impl Into<String>) -> Error {
    Error::Domain {
        pos,
        message: message.into(),
    }
}

impl<'e> Parser<'e> {
    fn peek(&self) -> &Tok {
        &self.toks[self.idx].0
    }

    fn pos(&self) -> Position {
        self.toks[self.idx].1
    }

    fn advance(&mut self) -> (Tok, Position) {
        let t = self.toks[self.idx].clone();
        if self.idx + 1 < self.toks.len() {
            self.idx += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if *self.peek() == tok {
            self.advance();
            Ok(())
        } else {
            Err(Error::Syntax {
                pos: self.pos(),
                message: format!("expected {what}"),
            })
        }
    }

    fn enter(&mut self) -> Result<()> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(Error::Syntax {
                pos: self.pos(),
                message: "nesting too deep".to_string(),
            });
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Value> {
        self.enter()?;
        let mut lhs = self.term()?;
        loop {
            let negate = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.advance();
            let rhs = self.term()?;
            let rhs = if negate { neg(rhs) } else { rhs };
            lhs = add(lhs, rhs);
        }
        self.depth -= 1;
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Value> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.advance();
                    let rhs = self.factor()?;
                    lhs = mul(lhs, rhs);
                }
                Tok::Slash => {
                    let pos = self.pos();
                    self.advance();
                    let rhs = self.factor()?;
                    lhs = div(lhs, rhs, pos)?;
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Value> {
        self.enter()?;
        let base = self.base()?;
        let out = if *self.peek() == Tok::Caret {
            let pos = self.pos();
            self.advance();
            let exponent = self.base()?;
            pow(base, exponent, pos)?
        } else {
            base
        };
        self.depth -= 1;
        Ok(out)
    }

    fn base(&mut self) -> Result<Value> {
        self.enter()?;
        let (tok, pos) = self.advance();
        let out = match tok {
            Tok::Num(v, exact) => Value::Const(Constant { value: v, exact }),
            Tok::Minus => neg(self.factor()?),
            Tok::LParen => {
                let v = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                v
            }
            Tok::Ident(name) => self.ident(&name, pos)?,
            Tok::End => {
                return Err(Error::Syntax {
                    pos,
                    message: "unexpected end of input".to_string(),
                })
            }
            other => {
                return Err(Error::Syntax {
                    pos,
                    message: format!("unexpected token {other:?}"),
                })
            }
        };
        self.depth -= 1;
        Ok(out)
    }

    fn ident(&mut self, name: &str, pos: Position) -> Result<Value> {
        match name {
            "x" => Ok(Value::Expr(Expression::x())),
            "t" => Ok(Value::Expr(Expression::t_pow(Rational::ONE))),
            "alpha" => Ok(Value::Const(Constant::exact(self.env.alpha))),
            "sin" | "cos" | "gamma" => {
                self.expect(Tok::LParen, "`(` after function name")?;
                let arg_pos = self.pos();
                let arg = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                match name {
                    "gamma" => gamma_call(arg, arg_pos),
                    _ => trig_call(name == "sin", arg, arg_pos),
                }
            }
            _ => match self.env.constants.get(name) {
                Some(&v) => Ok(Value::Const(Constant::real(v))),
                None => Err(domain(pos, format!("unknown name `{name}`"))),
            },
        }
    }
}

fn neg(v: Value) -> Value {
    match v {
        Value::Const(c) => Value::Const(Constant {
            value: -c.value,
            exact: c.exact.map(|r| -r),
        }),
        Value::Expr(e) => Value::Expr(e.scale(-1.0)),
    }
}

fn add(a: Value, b: Value) -> Value {
    match (a, b) {
        (Value::Const(x), Value::Const(y)) => Value::Const(Constant {
            value: x.value + y.value,
            exact: x.exact.zip(y.exact).and_then(|(p, q)| p.checked_add(q)),
        }),
        (a, b) => Value::Expr(a.into_expr().add(&b.into_expr())),
    }
}

fn mul(a: Value, b: Value) -> Value {
    match (a, b) {
        (Value::Const(x), Value::Const(y)) => Value::Const(Constant {
            value: x.value * y.value,
            exact: x.exact.zip(y.exact).and_then(|(p, q)| p.checked_mul(q)),
        }),
        (Value::Const(c), Value::Expr(e)) | (Value::Expr(e), Value::Const(c)) => {
            Value::Expr(e.scale(c.value))
        }
        (Value::Expr(a), Value::Expr(b)) => Value::Expr(a.multiply(&b)),
    }
}

fn div(a: Value, b: Value, pos: Position) -> Result<Value> {
    let Value::Const(d) = b else {
        return Err(domain(pos, "division by a non-constant"));
    };
    if d.value == 0.0 {
        return Err(domain(pos, "division by zero"));
    }
    Ok(match a {
        Value::Const(n) => Value::Const(Constant {
            value: n.value / d.value,
            exact: n.exact.zip(d.exact).and_then(|(p, q)| p.checked_div(q)),
        }),
        Value::Expr(e) => Value::Expr(e.scale(1.0 / d.value)),
    })
}

fn bounded(r: Rational) -> bool {
    r.numer().abs() <= MAX_EXPONENT_PART && r.denom() <= MAX_EXPONENT_PART
}

fn pow(base: Value, exponent: Value, pos: Position) -> Result<Value> {
    let Value::Const(ex) = exponent else {
        return Err(domain(pos, "exponent must be constant"));
    };
    match base {
        Value::Const(b) => {
            let exact = match (b.exact, ex.exact) {
                (Some(br), Some(er)) if er.is_integer() && er.numer().abs() <= MAX_INTEGER_POWER => {
                    let mut acc = Some(Rational::ONE);
                    for _ in 0..er.numer().abs() {
                        acc = acc.and_then(|a| a.checked_mul(br));
                    }
                    if er.is_negative() {
                        acc.and_then(|a| Rational::ONE.checked_div(a))
                    } else {
                        acc
                    }
                }
                _ => None,
            };
            let value = libm::pow(b.value, ex.value);
            if value.is_nan() && !b.value.is_nan() && !ex.value.is_nan() {
                return Err(domain(pos, "power is undefined for these operands"));
            }
            Ok(Value::Const(Constant { value, exact }))
        }
        Value::Expr(e) => {
            let Some(r) = ex.exact.filter(|r| bounded(*r)) else {
                return Err(domain(pos, "exponent does not reduce to a rational"));
            };
            if r.is_integer() && !r.is_negative() {
                if r.numer() > MAX_INTEGER_POWER {
                    return Err(domain(pos, "integer power too large"));
                }
                return Ok(Value::Expr(e.powu(r.numer() as u32)));
            }
            // general rational power only of a single pure-time term c t^b
            match e.terms() {
                [term] if term.xpower == 0 && term.trig == Trig::Unit => {
                    let beta = term
                        .texponent
                        .checked_mul(r)
                        .filter(|b| bounded(*b) && !b.is_negative())
                        .ok_or_else(|| domain(pos, "power of t out of range"))?;
                    let c = term.coefficient;
                    if c < 0.0 && !r.is_integer() {
                        return Err(domain(pos, "fractional power of a negative coefficient"));
                    }
                    let coefficient = libm::pow(c, r.to_f64());
                    Ok(Value::Expr(Expression::monomial(coefficient, 0, Trig::Unit, beta)))
                }
                _ => Err(domain(
                    pos,
                    "only non-negative integer powers of non-monomial expressions are supported",
                )),
            }
        }
    }
}

fn gamma_call(arg: Value, pos: Position) -> Result<Value> {
    let Value::Const(c) = arg else {
        return Err(domain(pos, "gamma argument must be constant"));
    };
    if c.value <= 0.0 && libm::floor(c.value) == c.value {
        return Err(domain(pos, format!("gamma pole at {}", c.value)));
    }
    Ok(Value::Const(Constant::real(gamma(c.value))))
}

fn trig_call(is_sin: bool, arg: Value, pos: Position) -> Result<Value> {
    match arg {
        Value::Const(c) => Ok(Value::Const(Constant::real(if is_sin {
            libm::sin(c.value)
        } else {
            libm::cos(c.value)
        }))),
        Value::Expr(e) => {
            let k = match e.terms() {
                [] => 0,
                [term]
                    if term.xpower == 1 && term.trig == Trig::Unit && term.texponent.is_zero() =>
                {
                    let ratio = term.coefficient / PI;
                    let k = libm::round(ratio);
                    if (ratio - k).abs() > 1e-9 || k.abs() > 1e6 {
                        return Err(domain(pos, "trig argument must be an integer multiple of pi*x"));
                    }
                    k as i64
                }
                _ => return Err(domain(pos, "trig argument must have the form k*pi*x")),
            };
            Ok(Value::Expr(if is_sin {
                Expression::sin(k)
            } else {
                Expression::cos(k)
            }))
        }
    }
}

fn parse_at(raw: &str, start: Position, env: &ParseEnvironment) -> Result<Expression> {
    let toks = Lexer::tokenize(raw, start)?;
    let mut p = Parser {
        toks,
        idx: 0,
        env,
        depth: 0,
    };
    let v = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(Error::Syntax {
            pos: p.pos(),
            message: "unexpected trailing input".to_string(),
        });
    }
    Ok(v.into_expr())
}

/// Parses an expression into canonical form.
pub fn parse_expression(text: &SourceText, env: &ParseEnvironment) -> Result<Expression> {
    parse_at(&text.raw, Position { line: 1, column: 1 }, env)
}

/// Parses a problem document.
pub fn parse_problem(text: &SourceText) -> Result<ProblemSpec> {
    parse_problem_with_alpha(text, None)
}

/// Parses a problem document, replacing its `alpha` when `alpha` is given.
pub fn parse_problem_with_alpha(text: &SourceText, alpha: Option<Rational>) -> Result<ProblemSpec> {
    let mut fields: BTreeMap<&str, (&str, Position)> = BTreeMap::new();
    for (lineno, line) in text.raw.lines().enumerate() {
        let content = line.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let line_pos = Position {
            line: lineno + 1,
            column: 1,
        };
        let Some((key, value)) = content.split_once('=') else {
            return Err(Error::Syntax {
                pos: line_pos,
                message: "expected `key = value`".to_string(),
            });
        };
        let key = key.trim();
        const KEYS: [&str; 8] = [
            "alpha", "initial", "source", "exact", "x_min", "x_max", "t_max", "nonlinearity",
        ];
        if !KEYS.contains(&key) {
            return Err(Error::Syntax {
                pos: line_pos,
                message: format!("unknown key `{key}`"),
            });
        }
        let value_pos = Position {
            line: lineno + 1,
            column: content.find('=').unwrap_or(0) + 2,
        };
        if fields.insert(key, (value, value_pos)).is_some() {
            return Err(Error::Syntax {
                pos: line_pos,
                message: format!("duplicate key `{key}`"),
            });
        }
    }

    let field_err = |field: &str, e: Error| Error::Field {
        field: field.to_string(),
        source: Box::new(e),
    };
    let alpha = match alpha {
        Some(a) => a,
        None => {
            let (raw, _) = fields.get("alpha").ok_or(Error::MissingField("alpha"))?;
            raw.trim()
                .parse::<Rational>()
                .map_err(|e| field_err("alpha", e))?
        }
    };
    let env = ParseEnvironment::new(alpha)?;

    let expr_field = |name: &'static str| -> Result<Option<Expression>> {
        match fields.get(name) {
            Some((raw, pos)) => parse_at(raw, *pos, &env)
                .map(Some)
                .map_err(|e| field_err(name, e)),
            None => Ok(None),
        }
    };
    let real_field = |name: &'static str, default: f64| -> Result<f64> {
        match fields.get(name) {
            Some((raw, _)) => raw
                .trim()
                .parse::<f64>()
                .map_err(|_| field_err(name, Error::InvalidNumber)),
            None => Ok(default),
        }
    };

    let initial = expr_field("initial")?.ok_or(Error::MissingField("initial"))?;
    let source = expr_field("source")?.ok_or(Error::MissingField("source"))?;
    let exact = expr_field("exact")?;
    let nonlinearity = match fields.get("nonlinearity") {
        Some((raw, _)) => NonlinearOperator::from_name(raw.trim()).ok_or_else(|| {
            field_err(
                "nonlinearity",
                Error::Syntax {
                    pos: Position { line: 0, column: 0 },
                    message: format!("unknown nonlinearity `{}`", raw.trim()),
                },
            )
        })?,
        None => NonlinearOperator::Advection,
    };
    let spec = ProblemSpec {
        alpha,
        initial,
        source,
        exact,
        x_range: (real_field("x_min", 0.0)?, real_field("x_max", 1.0)?),
        t_max: real_field("t_max", 1.0)?,
        nonlinearity,
    };
    spec.validate()?;
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn env(alpha: Rational) -> ParseEnvironment {
        ParseEnvironment::new(alpha).unwrap()
    }

    fn parse(s: &str) -> Result<Expression> {
        parse_expression(&SourceText::inline(s), &env(Rational::ONE))
    }

    #[test]
    fn sine_initial_condition() {
        for a in [Rational::ONE, Rational::new(1, 2).unwrap()] {
            let e = parse_expression(&SourceText::inline("sin(pi*x)"), &env(a)).unwrap();
            assert_eq!(e, Expression::sin(1));
        }
    }

    #[test]
    fn zero_and_table_value() {
        assert!(parse("0").unwrap().is_zero());
        let e = parse("t^3 * sin(pi*x)").unwrap();
        assert!((e.eval(0.5, 0.09).unwrap() - 0.000_729).abs() < 1e-15);
    }

    #[test]
    fn alpha_and_gamma_resolve() {
        let half = Rational::new(1, 2).unwrap();
        let e = parse_expression(
            &SourceText::inline("6*t^(3-alpha)/gamma(4-alpha)"),
            &env(half),
        )
        .unwrap();
        assert_eq!(e.terms().len(), 1);
        assert_eq!(e.terms()[0].texponent, Rational::new(5, 2).unwrap());
        assert!((e.terms()[0].coefficient - 6.0 / gamma(3.5)).abs() < 1e-15);
    }

    #[test]
    fn polynomial_powers() {
        let e = parse("x^2*(1-x)^2").unwrap();
        assert_eq!(e.terms().len(), 3);
        let g = parse("(1+t^(5/2))^2").unwrap();
        assert_eq!(g.terms().len(), 3);
        assert_eq!(g.terms()[2].texponent, Rational::integer(5));
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse("sin(pi*x) + * 2") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos.column, 13),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("(x"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("x $"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(parse("t^pi"), Err(Error::Domain { .. })));
        assert!(matches!(parse("gamma(0)"), Err(Error::Domain { .. })));
        assert!(matches!(parse("gamma(-2)"), Err(Error::Domain { .. })));
        assert!(matches!(parse("sin(x)"), Err(Error::Domain { .. })));
        assert!(matches!(parse("sin(pi*x*x)"), Err(Error::Domain { .. })));
        assert!(matches!(parse("1/x"), Err(Error::Domain { .. })));
        assert!(matches!(parse("x^(1/2)"), Err(Error::Domain { .. })));
        assert!(matches!(parse("foo"), Err(Error::Domain { .. })));
    }

    #[test]
    fn deep_nesting_is_an_error_not_a_crash() {
        let mut s = String::new();
        for _ in 0..5000 {
            s.push('(');
        }
        assert!(matches!(parse(&s), Err(Error::Syntax { .. })));
    }

    #[test]
    fn numbers_with_exponents() {
        let e = parse("1.5e-3*x + 2E2").unwrap();
        assert!((e.eval(1.0, 0.0).unwrap() - 200.0015).abs() < 1e-12);
        // `e` not followed by a digit is a name, not an exponent
        assert!(matches!(parse("2e"), Err(Error::Syntax { .. }) | Err(Error::Domain { .. })));
    }

    #[test]
    fn problem_document() {
        let doc = "# sample\nalpha = 1/2\ninitial = 0\nsource = t*sin(pi*x)\nx_max = 2\n";
        let p = parse_problem(&SourceText::inline(doc)).unwrap();
        assert_eq!(p.alpha, Rational::new(1, 2).unwrap());
        assert!(p.initial.is_zero());
        assert_eq!(p.x_range, (0.0, 2.0));
        assert!(p.exact.is_none());
    }

    #[test]
    fn problem_document_errors() {
        let missing = "alpha = 1\ninitial = 0\n";
        assert!(matches!(
            parse_problem(&SourceText::inline(missing)),
            Err(Error::MissingField("source"))
        ));
        let bad_alpha = "alpha = 2\ninitial = 0\nsource = 0\n";
        assert!(matches!(
            parse_problem(&SourceText::inline(bad_alpha)),
            Err(Error::AlphaOutOfRange { .. })
        ));
        let bad_expr = "alpha = 1\ninitial = 0\nsource = sin(\n";
        match parse_problem(&SourceText::inline(bad_expr)) {
            Err(Error::Field { field, source }) => {
                assert_eq!(field, "source");
                assert!(matches!(*source, Error::Syntax { pos, .. } if pos.line == 3));
            }
            other => panic!("{other:?}"),
        }
        let unknown = "alpha = 1\nfoo = 3\n";
        assert!(parse_problem(&SourceText::inline(unknown)).is_err());
    }
}
