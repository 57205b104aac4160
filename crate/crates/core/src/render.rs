//! Shared helpers for the canonical text form.
//!
//! Every rendered element is a signed sum of products of factors joined by
//! `*`. The output is valid input for [`crate::expr::parse`].

use num_traits::{One, Signed};

use crate::cyclotomic::Rational;

/// One summand of a rendered sum: a sign and a list of factors.
#[derive(Debug, Clone, Default)]
pub(crate) struct Term {
    pub negative: bool,
    pub factors: Vec<String>,
}

impl Term {
    pub fn with_factors(factors: Vec<String>) -> Self {
        Term {
            negative: false,
            factors,
        }
    }

    /// Prepends a coefficient term, combining signs.
    pub fn times(mut coefficient: Term, rest: Vec<String>) -> Self {
        coefficient.factors.extend(rest);
        coefficient
    }

    fn body(&self) -> String {
        if self.factors.is_empty() {
            "1".to_string()
        } else {
            self.factors.join("*")
        }
    }
}

pub(crate) fn join_terms<I: IntoIterator<Item = Term>>(terms: I) -> String {
    let mut out = String::new();
    for (k, term) in terms.into_iter().enumerate() {
        match (k, term.negative) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&term.body());
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Renders a nonnegative rational as a factor; fractions are parenthesized.
pub(crate) fn abs_rational(q: &Rational) -> String {
    let q = q.abs();
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("({}/{})", q.numer(), q.denom())
    }
}

/// Coefficient term for a single rational; the factor is omitted when it is ±1.
pub(crate) fn rational_term(q: &Rational) -> Term {
    let negative = q.is_negative();
    let factors = if q.abs().is_one() {
        Vec::new()
    } else {
        vec![abs_rational(q)]
    };
    Term { negative, factors }
}

pub(crate) fn power(base: &str, exp: i64) -> String {
    if exp == 1 {
        base.to_string()
    } else {
        format!("{base}^{exp}")
    }
}
