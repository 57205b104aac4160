//! Chebyshev polynomials of the first kind, the coefficients ν_r, and the
//! polynomial identities that turn powers of w into (y_1⋯y_n)^{±ℓ}.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::cyclotomic::Rational;
use crate::render::{self, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChebyshevError {
    #[error("nu_r needs 0 <= r <= floor(ell/2), got ell = {ell}, r = {r}")]
    IndexOutOfRange { ell: u32, r: u32 },
    #[error("ell must be at least 1")]
    InvalidOrder,
}

/// Sparse Laurent polynomial with rational coefficients in a fixed number of
/// formal variables (ξ, and ϱ² for the bivariate identity).
#[derive(Clone, PartialEq, Eq)]
pub struct IntPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, Rational>,
}

impl IntPoly {
    pub fn zero(nvars: usize) -> Self {
        IntPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(exps: Vec<i64>, c: Rational) -> Self {
        let mut p = IntPoly::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        IntPoly::monomial(vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        IntPoly::constant(nvars, Rational::one())
    }

    /// The variable with index `i` raised to `exp`.
    pub fn var_pow(nvars: usize, i: usize, exp: i64) -> Self {
        let mut e = vec![0; nvars];
        e[i] = exp;
        IntPoly::monomial(e, Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exps: &[i64]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Rational)> {
        self.terms.iter()
    }

    fn add_term(&mut self, exps: Vec<i64>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> IntPoly {
        let mut out = IntPoly::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn pow(&self, exp: u32) -> IntPoly {
        (0..exp).fold(IntPoly::one(self.nvars), |acc, _| &acc * self)
    }

    /// Substitutes `arg` for the single variable of a univariate polynomial
    /// with nonnegative exponents.
    pub fn compose(&self, arg: &IntPoly) -> IntPoly {
        assert_eq!(self.nvars, 1, "compose needs a univariate outer polynomial");
        let top = self.terms.keys().map(|e| e[0]).max().unwrap_or(0);
        assert!(self.terms.keys().all(|e| e[0] >= 0));
        // Horner
        let mut acc = IntPoly::zero(arg.nvars);
        for k in (0..=top).rev() {
            acc = &acc * arg;
            acc = &acc + &IntPoly::constant(arg.nvars, self.coefficient(&[k]));
        }
        acc
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 2] = ["xi", "rho2"];
        let terms = self.terms.iter().rev().map(|(e, c)| {
            let factors = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k != 0)
                .map(|(i, &k)| render::power(NAMES.get(i).copied().unwrap_or("v"), k))
                .collect();
            Term::times(render::rational_term(c), factors)
        });
        f.write_str(&render::join_terms(terms))
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = IntPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        self.scale(&-Rational::one())
    }
}

/// T_m(ξ) from T_0 = 1, T_1 = ξ, T_m = 2ξ T_{m−1} − T_{m−2}.
pub fn chebyshev_t(m: u32) -> IntPoly {
    let xi = IntPoly::var_pow(1, 0, 1);
    let two_xi = xi.scale(&Rational::from_integer(BigInt::from(2)));
    let mut prev = IntPoly::one(1);
    if m == 0 {
        return prev;
    }
    let mut cur = xi;
    for _ in 2..=m {
        let next = &(&two_xi * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// ν_r = (−1)^r (ℓ/(ℓ−r)) C(ℓ−r, r) for 0 ≤ r ≤ ⌊ℓ/2⌋.
pub fn nu(ell: u32, r: u32) -> Result<Rational, ChebyshevError> {
    if ell == 0 {
        return Err(ChebyshevError::InvalidOrder);
    }
    if r > ell / 2 {
        return Err(ChebyshevError::IndexOutOfRange { ell, r });
    }
    let big = |k: u32| BigInt::from(k);
    let value = Rational::new(big(ell), big(ell - r))
        * Rational::from_integer(binomial(big(ell - r), big(r)));
    Ok(if r % 2 == 1 { -value } else { value })
}

/// ν_0, …, ν_{⌊ℓ/2⌋}.
pub fn nu_list(ell: u32) -> Result<Vec<Rational>, ChebyshevError> {
    (0..=ell / 2).map(|r| nu(ell, r)).collect()
}

fn two() -> Rational {
    Rational::from_integer(BigInt::from(2))
}

/// 2 T_ℓ(ξ/2) = Σ_r ν_r ξ^{ℓ−2r}
pub fn identity_che1(ell: u32) -> Result<bool, ChebyshevError> {
    let nus = nu_list(ell)?;
    let half_xi = IntPoly::var_pow(1, 0, 1).scale(&two().recip());
    let lhs = chebyshev_t(ell).compose(&half_xi).scale(&two());
    let rhs = nus
        .iter()
        .enumerate()
        .fold(IntPoly::zero(1), |acc, (r, v)| {
            &acc + &IntPoly::monomial(vec![ell as i64 - 2 * r as i64], v.clone())
        });
    Ok(lhs == rhs)
}

/// 2 T_ℓ((ξ + ξ^{−1})/2) = ξ^ℓ + ξ^{−ℓ}
pub fn identity_che2(ell: u32) -> Result<bool, ChebyshevError> {
    if ell == 0 {
        return Err(ChebyshevError::InvalidOrder);
    }
    let arg = (&IntPoly::var_pow(1, 0, 1) + &IntPoly::var_pow(1, 0, -1)).scale(&two().recip());
    let lhs = chebyshev_t(ell).compose(&arg).scale(&two());
    let rhs = &IntPoly::var_pow(1, 0, ell as i64) + &IntPoly::var_pow(1, 0, -(ell as i64));
    Ok(lhs == rhs)
}

/// Both sides of ξ^ℓ + ϱ^{2ℓ} ξ^{−ℓ} = Σ_r ν_r ϱ^{2r} (ξ + ϱ² ξ^{−1})^{ℓ−2r},
/// as bivariate polynomials in (ξ, σ) with σ standing for ϱ².
pub fn rho_identity_sides(ell: u32) -> Result<(IntPoly, IntPoly), ChebyshevError> {
    let nus = nu_list(ell)?;
    let xi = |k: i64| IntPoly::var_pow(2, 0, k);
    let sigma = |k: i64| IntPoly::var_pow(2, 1, k);
    let lhs = &xi(ell as i64) + &(&sigma(ell as i64) * &xi(-(ell as i64)));
    let inner = &xi(1) + &(&sigma(1) * &xi(-1));
    let rhs = nus
        .iter()
        .enumerate()
        .fold(IntPoly::zero(2), |acc, (r, v)| {
            let term = (&sigma(r as i64) * &inner.pow(ell - 2 * r as u32)).scale(v);
            &acc + &term
        });
    Ok((lhs, rhs))
}

pub fn identity_rho(ell: u32) -> Result<bool, ChebyshevError> {
    let (lhs, rhs) = rho_identity_sides(ell)?;
    Ok(lhs == rhs)
}
