//! The text language for elements: sums of explicit `*`-products of the atoms
//! `x_i`, `g_i`, `y_i`, `t_i`, `zeta` and rational literals `p/q`, with
//! integer exponents `^k`. Subscripts may be written `x1` or `x_1`.
//!
//! Precedence, from tightest: `^`, unary `-`, `*`, binary `+`/`-`.
//! Products keep their order since the algebras are noncommutative.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError};
use crate::coeffring::ParamPoly;
use crate::cyclotomic::{Cyclotomic, CyclotomicField, Rational};
use crate::hecke::{HeckeElem, PbwMonomial};
use crate::laurent::{LaurentElem, LaurentMonomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Atom {
    X(usize),
    G(usize),
    Y(usize),
    T(usize),
    Zeta,
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::X(i) => write!(f, "x{i}"),
            Atom::G(i) => write!(f, "g{i}"),
            Atom::Y(i) => write!(f, "y{i}"),
            Atom::T(i) => write!(f, "t{i}"),
            Atom::Zeta => f.write_str("zeta"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Number(Rational),
    Atom(Atom),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at position {position}: expected {expected}, found {found}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub expected: String,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("atom {atom} is not available in the {target} algebra")]
    InvalidAtom { atom: Atom, target: &'static str },
    #[error("atom {atom} has index outside 1..={n}")]
    IndexOutOfRange { atom: Atom, n: usize },
    #[error("negative exponent on a non-invertible subexpression")]
    NotInvertible,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(k) => write!(f, "'{k}'"),
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Caret => f.write_str("'^'"),
            Tok::Slash => f.write_str("'/'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn tokenize(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'/' => Tok::Slash,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(input[start..i].parse().expect("digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(input[start..i].to_string())));
                continue;
            }
            _ => {
                let found = input[start..].chars().next().expect("nonempty");
                return Err(ParseError {
                    position: start,
                    expected: "a number, an atom, an operator or a parenthesis".into(),
                    found: format!("'{found}'"),
                });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((input.len(), Tok::End));
    Ok(out)
}

fn ident_atom(name: &str) -> Option<Atom> {
    if name == "zeta" {
        return Some(Atom::Zeta);
    }
    let mut chars = name.chars();
    let head = chars.next()?;
    let rest = chars.as_str();
    let digits = rest.strip_prefix('_').unwrap_or(rest);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let index: usize = digits.parse().ok()?;
    match head {
        'x' => Some(Atom::X(index)),
        'g' => Some(Atom::G(index)),
        'y' => Some(Atom::Y(index)),
        't' => Some(Atom::T(index)),
        _ => None,
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> ParseError {
        ParseError {
            position: self.offset(),
            expected: expected.into(),
            found: self.peek().to_string(),
        }
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.product()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.product()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.product()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.primary()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let exp_pos = self.offset();
        let negative = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let Tok::Int(k) = self.peek().clone() else {
            return Err(self.error("an integer exponent"));
        };
        let k: i64 =
            i64::try_from(&k).map_err(|_| self.error("an exponent that fits in 64 bits"))?;
        self.bump();
        let k = if negative { -k } else { k };
        if k < 0 {
            if let Expr::Atom(atom @ (Atom::X(_) | Atom::T(_))) = base {
                return Err(ParseError {
                    position: exp_pos,
                    expected: "a nonnegative exponent".into(),
                    found: format!("negative exponent on {atom}"),
                });
            }
        }
        Ok(Expr::Pow(Box::new(base), k))
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        const EXPECTED: &str = "a number, an atom (x_i, g_i, y_i, t_i, zeta) or '('";
        match self.peek().clone() {
            Tok::Int(p) => {
                self.bump();
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let Tok::Int(q) = self.peek().clone() else {
                        return Err(self.error("a denominator"));
                    };
                    if q.is_zero() {
                        return Err(self.error("a nonzero denominator"));
                    }
                    self.bump();
                    Ok(Expr::Number(Rational::new(p, q)))
                } else {
                    Ok(Expr::Number(Rational::from_integer(p)))
                }
            }
            Tok::Ident(name) => match ident_atom(&name) {
                Some(atom) => {
                    self.bump();
                    Ok(Expr::Atom(atom))
                }
                None => Err(self.error(EXPECTED)),
            },
            Tok::LParen => {
                self.bump();
                let inner = self.sum()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error("'*', '+', '-', '^' or ')'"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.error(EXPECTED)),
        }
    }
}

/// Parses a complete expression; trailing input is an error.
pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: tokenize(input)?,
        pos: 0,
    };
    let e = p.sum()?;
    if *p.peek() != Tok::End {
        return Err(p.error("'*', '+', '-', '^' or end of input"));
    }
    Ok(e)
}

/// A ring an expression can be evaluated in.
trait Target: Clone {
    const NAME: &'static str;
    fn coefficient(alg: &Algebra, c: ParamPoly) -> Self;
    fn atom(alg: &Algebra, atom: Atom) -> Result<Self, EvalError>;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Two-sided inverse when the element is a unit monomial.
    fn inverse(&self) -> Option<Self>;
}

fn check(alg: &Algebra, atom: Atom, i: usize, bound: usize) -> Result<(), EvalError> {
    if i == 0 || i > bound {
        Err(EvalError::IndexOutOfRange { atom, n: alg.n() })
    } else {
        Ok(())
    }
}

fn scalar_atom(alg: &Algebra, atom: Atom) -> Option<Result<ParamPoly, EvalError>> {
    match atom {
        Atom::Zeta => Some(Ok(alg.deformation().zeta_power(1))),
        Atom::T(i) => Some(check(alg, atom, i, alg.n()).map(|_| alg.t(i).clone())),
        _ => None,
    }
}

/// For a unit basis element m and u with m·u = s·1, the inverse of c·m is u·(cs)^{-1}.
fn unit_inverse(c: &ParamPoly, s: &ParamPoly) -> Option<Cyclotomic> {
    (&c.constant_value()? * &s.constant_value()?).inv().ok()
}

impl Target for HeckeElem {
    const NAME: &'static str = "Hecke";

    fn coefficient(alg: &Algebra, c: ParamPoly) -> Self {
        HeckeElem::scalar(alg, c)
    }

    fn atom(alg: &Algebra, atom: Atom) -> Result<Self, EvalError> {
        if let Some(c) = scalar_atom(alg, atom) {
            return Ok(HeckeElem::scalar(alg, c?));
        }
        match atom {
            Atom::X(i) => {
                check(alg, atom, i, alg.n())?;
                Ok(alg.x(i)?)
            }
            Atom::G(i) => {
                check(alg, atom, i, alg.n())?;
                Ok(alg.g(i)?)
            }
            _ => Err(EvalError::InvalidAtom {
                atom,
                target: Self::NAME,
            }),
        }
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        HeckeElem::mul(self, other)
    }

    fn neg(&self) -> Self {
        -self
    }

    fn inverse(&self) -> Option<Self> {
        let alg = self.algebra();
        let mut terms = self.terms();
        let (m, c) = terms.next()?;
        if terms.next().is_some() || m.total_degree() > 0 {
            return None;
        }
        let u = alg.group_element(alg.group().inverse(m.group()));
        let basis = HeckeElem::monomial(alg, *m, alg.one_coeff());
        let product = basis.mul(&u);
        let s = product.coefficient(&PbwMonomial::new(&[], alg.group().identity()));
        let k = unit_inverse(c, &s)?;
        Some(u.scale(&alg.deformation().constant(k)))
    }
}

impl Target for LaurentElem {
    const NAME: &'static str = "Laurent";

    fn coefficient(alg: &Algebra, c: ParamPoly) -> Self {
        LaurentElem::scalar(alg, c)
    }

    fn atom(alg: &Algebra, atom: Atom) -> Result<Self, EvalError> {
        if let Some(c) = scalar_atom(alg, atom) {
            return Ok(LaurentElem::scalar(alg, c?));
        }
        match atom {
            Atom::Y(i) => {
                check(alg, atom, i, alg.n())?;
                Ok(alg.y(i, 1)?)
            }
            Atom::G(i) => {
                check(alg, atom, i, alg.n())?;
                Ok(alg.lg(i)?)
            }
            _ => Err(EvalError::InvalidAtom {
                atom,
                target: Self::NAME,
            }),
        }
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self.lmul(other)
    }

    fn neg(&self) -> Self {
        -self
    }

    fn inverse(&self) -> Option<Self> {
        let alg = self.algebra();
        let mut terms = self.terms();
        let (m, c) = terms.next()?;
        if terms.next().is_some() {
            return None;
        }
        let n = alg.n();
        let q: Vec<i32> = m.exponents()[..n].iter().map(|k| -k).collect();
        let u = alg
            .laurent_group_element(alg.group().inverse(m.group()))
            .lmul(&alg.y_monomial(&q));
        let basis = LaurentElem::monomial(alg, *m, alg.one_coeff());
        let s = basis
            .lmul(&u)
            .coefficient(&LaurentMonomial::new(&[], alg.group().identity()));
        let k = unit_inverse(c, &s)?;
        Some(u.scale(&alg.deformation().constant(k)))
    }
}

fn eval<T: Target>(alg: &Algebra, e: &Expr) -> Result<T, EvalError> {
    Ok(match e {
        Expr::Number(q) => T::coefficient(
            alg,
            alg.deformation()
                .constant(alg.field().from_rational(q.clone())),
        ),
        Expr::Atom(a) => T::atom(alg, *a)?,
        Expr::Neg(a) => eval::<T>(alg, a)?.neg(),
        Expr::Add(a, b) => eval::<T>(alg, a)?.add(&eval(alg, b)?),
        Expr::Sub(a, b) => eval::<T>(alg, a)?.sub(&eval(alg, b)?),
        Expr::Mul(a, b) => eval::<T>(alg, a)?.mul(&eval(alg, b)?),
        Expr::Pow(a, k) => {
            let base = eval::<T>(alg, a)?;
            let base = if *k < 0 {
                base.inverse().ok_or(EvalError::NotInvertible)?
            } else {
                base
            };
            let mut acc = T::coefficient(alg, alg.one_coeff());
            for _ in 0..k.unsigned_abs() {
                acc = acc.mul(&base);
            }
            acc
        }
    })
}

/// Evaluates in H; `y_i` is rejected.
pub fn eval_hecke(alg: &Algebra, e: &Expr) -> Result<HeckeElem, EvalError> {
    eval(alg, e)
}

/// Evaluates in the Laurent crossed product; `x_i` is rejected.
pub fn eval_laurent(alg: &Algebra, e: &Expr) -> Result<LaurentElem, EvalError> {
    eval(alg, e)
}

/// Evaluates an expression built from rationals and `zeta` to an element of Q(ζ).
pub fn eval_scalar(field: &Arc<CyclotomicField>, e: &Expr) -> Result<Cyclotomic, EvalError> {
    Ok(match e {
        Expr::Number(q) => field.from_rational(q.clone()),
        Expr::Atom(Atom::Zeta) => field.zeta(),
        Expr::Atom(atom) => {
            return Err(EvalError::InvalidAtom {
                atom: *atom,
                target: "scalar",
            })
        }
        Expr::Neg(a) => -eval_scalar(field, a)?,
        Expr::Add(a, b) => &eval_scalar(field, a)? + &eval_scalar(field, b)?,
        Expr::Sub(a, b) => &eval_scalar(field, a)? - &eval_scalar(field, b)?,
        Expr::Mul(a, b) => &eval_scalar(field, a)? * &eval_scalar(field, b)?,
        Expr::Pow(a, k) => eval_scalar(field, a)?
            .pow(*k)
            .map_err(|_| EvalError::NotInvertible)?,
    })
}

/// Parses and evaluates in H.
pub fn parse_hecke(alg: &Algebra, input: &str) -> Result<HeckeElem, ExprError> {
    Ok(eval_hecke(alg, &parse(input)?)?)
}

/// Parses and evaluates in the Laurent crossed product.
pub fn parse_laurent(alg: &Algebra, input: &str) -> Result<LaurentElem, ExprError> {
    Ok(eval_laurent(alg, &parse(input)?)?)
}

/// Parses and evaluates a scalar in Q(ζ).
pub fn parse_scalar(field: &Arc<CyclotomicField>, input: &str) -> Result<Cyclotomic, ExprError> {
    Ok(eval_scalar(field, &parse(input)?)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

#[cfg(test)]
mod tests;
