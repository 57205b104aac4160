//! The coefficient ring Q(ζ)[t_1, …, t_n] of sparse polynomials in the
//! deformation parameters, and the scalars τ_i, τ̃_i built from them.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use thiserror::Error;

use crate::cyclotomic::{Cyclotomic, CyclotomicField};
use crate::render::{self, Term};

pub const MAX_VARS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("at most {MAX_VARS} parameters are supported, got {0}")]
    TooManyVariables(usize),
    #[error("parameter index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("expected {expected} values, got {got}")]
    WrongArity { expected: usize, got: usize },
}

/// Exponent vector of a monomial in t_1, …, t_n. Ordered graded-lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Exponents([u16; MAX_VARS]);

impl Exponents {
    pub fn unit(i: usize) -> Self {
        let mut e = [0; MAX_VARS];
        e[i] = 1;
        Exponents(e)
    }

    pub fn get(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&k| k as u32).sum()
    }

    fn add(&self, other: &Exponents) -> Exponents {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Exponents(e)
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Exponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.0.iter().rposition(|&k| k != 0).map_or(0, |p| p + 1);
        write!(f, "{:?}", &self.0[..last])
    }
}

#[derive(Clone)]
pub struct ParamPoly {
    field: Arc<CyclotomicField>,
    nvars: usize,
    terms: BTreeMap<Exponents, Cyclotomic>,
}

impl ParamPoly {
    pub fn zero(field: &Arc<CyclotomicField>, nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} parameters");
        ParamPoly {
            field: Arc::clone(field),
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Cyclotomic, nvars: usize) -> Self {
        let mut p = ParamPoly::zero(c.field(), nvars);
        if !c.is_zero() {
            p.terms.insert(Exponents::default(), c);
        }
        p
    }

    pub fn one(field: &Arc<CyclotomicField>, nvars: usize) -> Self {
        ParamPoly::constant(field.one(), nvars)
    }

    pub fn integer(field: &Arc<CyclotomicField>, nvars: usize, k: i64) -> Self {
        ParamPoly::constant(field.from_integer(k), nvars)
    }

    pub fn zeta_power(field: &Arc<CyclotomicField>, nvars: usize, k: i64) -> Self {
        ParamPoly::constant(field.zeta_power(k), nvars)
    }

    /// The variable t_i (1-based).
    pub fn var(field: &Arc<CyclotomicField>, nvars: usize, i: usize) -> Result<Self, CoeffError> {
        if nvars > MAX_VARS {
            return Err(CoeffError::TooManyVariables(nvars));
        }
        if i == 0 || i > nvars {
            return Err(CoeffError::IndexOutOfRange { index: i, n: nvars });
        }
        let mut p = ParamPoly::zero(field, nvars);
        p.terms.insert(Exponents::unit(i - 1), field.one());
        Ok(p)
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    /// The value if the polynomial is constant (zero counts as constant).
    pub fn constant_value(&self) -> Option<Cyclotomic> {
        match self.terms.len() {
            0 => Some(self.field.zero()),
            1 => self.terms.get(&Exponents::default()).cloned(),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Exponents::degree).max()
    }

    fn check(&self, other: &ParamPoly) {
        assert_eq!(self.nvars, other.nvars, "parameter count mismatch");
        assert_eq!(
            self.field.ell(),
            other.field.ell(),
            "cyclotomic order mismatch"
        );
    }

    fn add_term(&mut self, e: Exponents, c: Cyclotomic) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Cyclotomic) -> ParamPoly {
        let mut out = ParamPoly::zero(&self.field, self.nvars);
        if c.is_zero() {
            return out;
        }
        if c.is_one() {
            return self.clone();
        }
        out.terms = self.terms.iter().map(|(e, v)| (*e, v * c)).collect();
        out
    }

    pub fn scale_zeta(&self, k: i64) -> ParamPoly {
        if k.rem_euclid(self.field.ell() as i64) == 0 {
            return self.clone();
        }
        self.scale(&self.field.zeta_power(k))
    }

    pub fn pow(&self, exp: u32) -> ParamPoly {
        let mut acc = ParamPoly::one(&self.field, self.nvars);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation at t = `values`.
    pub fn specialize(&self, values: &[Cyclotomic]) -> Result<Cyclotomic, CoeffError> {
        if values.len() != self.nvars {
            return Err(CoeffError::WrongArity {
                expected: self.nvars,
                got: values.len(),
            });
        }
        let mut acc = self.field.zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, v) in values.iter().enumerate() {
                for _ in 0..e.get(i) {
                    term = &term * v;
                }
            }
            acc += &term;
        }
        Ok(acc)
    }

    /// Substitutes ParamPoly values for each t_i (used to map symbolic results
    /// into a specialized setting).
    pub fn substitute(&self, values: &[ParamPoly]) -> Result<ParamPoly, CoeffError> {
        if values.len() != self.nvars {
            return Err(CoeffError::WrongArity {
                expected: self.nvars,
                got: values.len(),
            });
        }
        let nvars = values.first().map_or(self.nvars, ParamPoly::nvars);
        let mut acc = ParamPoly::zero(&self.field, nvars);
        for (e, c) in &self.terms {
            let mut term = ParamPoly::constant(c.clone(), nvars);
            for (i, v) in values.iter().enumerate() {
                term = &term * &v.pow(e.get(i) as u32);
            }
            acc += &term;
        }
        Ok(acc)
    }

    fn monomial_factors(&self, e: &Exponents) -> Vec<String> {
        (0..self.nvars)
            .filter(|&i| e.get(i) > 0)
            .map(|i| render::power(&format!("t{}", i + 1), e.get(i) as i64))
            .collect()
    }

    pub(crate) fn rendered_terms(&self) -> Vec<Term> {
        self.terms
            .iter()
            .rev()
            .map(|(e, c)| Term::times(c.coefficient_term(), self.monomial_factors(e)))
            .collect()
    }

    /// Rendering as a coefficient factor in a larger product.
    pub(crate) fn coefficient_term(&self) -> Term {
        let mut terms = self.rendered_terms();
        if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            Term::with_factors(vec![format!("({self})")])
        }
    }
}

impl PartialEq for ParamPoly {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.terms == other.terms
    }
}

impl Eq for ParamPoly {}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render::join_terms(self.rendered_terms()))
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamPoly({self})")
    }
}

impl AddAssign<&ParamPoly> for ParamPoly {
    fn add_assign(&mut self, rhs: &ParamPoly) {
        self.check(rhs);
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&ParamPoly> for ParamPoly {
    fn sub_assign(&mut self, rhs: &ParamPoly) {
        self.check(rhs);
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl<'a> Add<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        self.check(rhs);
        let mut out = ParamPoly::zero(&self.field, self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea.add(eb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly {
            field: Arc::clone(&self.field),
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

/// The values of the deformation parameters t_1, …, t_n: either the formal
/// variables themselves or concrete elements of Q(ζ).
#[derive(Clone, Debug)]
pub struct Deformation {
    field: Arc<CyclotomicField>,
    t: Vec<ParamPoly>,
    specialized: Option<Vec<Cyclotomic>>,
    /// 1/(ζ − 1)
    inv_zeta_minus_one: Cyclotomic,
}

impl Deformation {
    pub fn symbolic(field: &Arc<CyclotomicField>, n: usize) -> Result<Self, CoeffError> {
        let t = (1..=n)
            .map(|i| ParamPoly::var(field, n, i))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_values(field, t, None))
    }

    pub fn specialized(
        field: &Arc<CyclotomicField>,
        values: Vec<Cyclotomic>,
    ) -> Result<Self, CoeffError> {
        let n = values.len();
        if n > MAX_VARS {
            return Err(CoeffError::TooManyVariables(n));
        }
        let t = values
            .iter()
            .map(|v| ParamPoly::constant(v.clone(), n))
            .collect();
        Ok(Self::from_values(field, t, Some(values)))
    }

    fn from_values(
        field: &Arc<CyclotomicField>,
        t: Vec<ParamPoly>,
        specialized: Option<Vec<Cyclotomic>>,
    ) -> Self {
        let zm1 = &field.zeta() - &field.one();
        let inv_zeta_minus_one = zm1.inv().expect("zeta != 1 for ell >= 2");
        Deformation {
            field: Arc::clone(field),
            t,
            specialized,
            inv_zeta_minus_one,
        }
    }

    pub fn n(&self) -> usize {
        self.t.len()
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn is_symbolic(&self) -> bool {
        self.specialized.is_none()
    }

    pub fn specialized_values(&self) -> Option<&[Cyclotomic]> {
        self.specialized.as_deref()
    }

    fn check_index(&self, i: usize) -> Result<(), CoeffError> {
        if i == 0 || i > self.n() {
            Err(CoeffError::IndexOutOfRange {
                index: i,
                n: self.n(),
            })
        } else {
            Ok(())
        }
    }

    /// t_i, with the subscript taken modulo n (so t_0 = t_n).
    pub fn t(&self, i: usize) -> &ParamPoly {
        let n = self.n();
        &self.t[(i + n - 1) % n]
    }

    /// τ_i = t_i/(ζ−1) for i < n and τ_n = ζ t_n/(ζ−1).
    pub fn tau(&self, i: usize) -> Result<ParamPoly, CoeffError> {
        self.check_index(i)?;
        let mut c = self.inv_zeta_minus_one.clone();
        if i == self.n() {
            c = &c * &self.field.zeta();
        }
        Ok(self.t(i).scale(&c))
    }

    /// τ̃_i = τ_i^ℓ for i < n and τ̃_n = (−1)^{n(ℓ−1)} τ_n^ℓ.
    pub fn tau_tilde(&self, i: usize) -> Result<ParamPoly, CoeffError> {
        let ell = self.field.ell();
        let p = self.tau(i)?.pow(ell);
        if i == self.n() && (self.n() as u64 * (ell as u64 - 1)) % 2 == 1 {
            Ok(-&p)
        } else {
            Ok(p)
        }
    }

    /// τ_1 ⋯ τ_n
    pub fn tau_product(&self) -> ParamPoly {
        (1..=self.n()).fold(self.one(), |acc, i| {
            &acc * &self.tau(i).expect("index in range")
        })
    }

    pub fn zero(&self) -> ParamPoly {
        ParamPoly::zero(&self.field, self.n())
    }

    pub fn one(&self) -> ParamPoly {
        ParamPoly::one(&self.field, self.n())
    }

    pub fn integer(&self, k: i64) -> ParamPoly {
        ParamPoly::integer(&self.field, self.n(), k)
    }

    pub fn zeta_power(&self, k: i64) -> ParamPoly {
        ParamPoly::zeta_power(&self.field, self.n(), k)
    }

    pub fn constant(&self, c: Cyclotomic) -> ParamPoly {
        ParamPoly::constant(c, self.n())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::Rational;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn field(ell: u32) -> Arc<CyclotomicField> {
        CyclotomicField::new(ell).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let f = field(2);
        let t1 = ParamPoly::var(&f, 3, 1).unwrap();
        let t2 = ParamPoly::var(&f, 3, 2).unwrap();
        assert_eq!(&t1 + &ParamPoly::zero(&f, 3), t1);
        let prod = &t1 * &t2;
        assert_eq!(prod.len(), 1);
        let (e, c) = prod.terms().next().unwrap();
        assert_eq!((e.get(0), e.get(1), e.get(2)), (1, 1, 0));
        assert!(c.is_one());

        let half = f.from_rational(q(-1, 2));
        let a = t1.scale(&half);
        let sq = &a * &a;
        assert_eq!(sq, (&t1 * &t1).scale(&f.from_rational(q(1, 4))));
        assert_eq!(sq.to_string(), "(1/4)*t1^2");
    }

    #[test]
    fn var_index_errors() {
        let f = field(3);
        assert_eq!(
            ParamPoly::var(&f, 3, 4),
            Err(CoeffError::IndexOutOfRange { index: 4, n: 3 })
        );
        assert_eq!(
            ParamPoly::var(&f, 17, 1),
            Err(CoeffError::TooManyVariables(17))
        );
    }

    #[test]
    fn tau_examples() {
        let f = field(2);
        let d = Deformation::symbolic(&f, 3).unwrap();
        assert_eq!(d.tau(1).unwrap(), d.t(1).scale(&f.from_rational(q(-1, 2))));
        assert_eq!(d.tau(3).unwrap(), d.t(3).scale(&f.from_rational(q(1, 2))));
        assert_eq!(
            d.tau_tilde(1).unwrap(),
            d.t(1).pow(2).scale(&f.from_rational(q(1, 4)))
        );
        assert_eq!(
            d.tau_tilde(3).unwrap(),
            d.t(3).pow(2).scale(&f.from_rational(q(-1, 4)))
        );
        assert!(d.tau(0).is_err());
        assert!(d.tau(4).is_err());

        for ell in 2..=7 {
            let f = field(ell);
            let d = Deformation::symbolic(&f, 4).unwrap();
            let zm1 = &f.zeta() - &f.one();
            for i in 1..4 {
                assert_eq!(d.tau(i).unwrap().scale(&zm1), *d.t(i));
            }
            // n even: τ̃_n carries no sign
            assert_eq!(d.tau_tilde(4).unwrap(), d.tau(4).unwrap().pow(ell));
        }
    }

    #[test]
    fn tau_tilde_sign_grid() {
        for n in 3..=6usize {
            for ell in 2..=5u32 {
                let f = field(ell);
                let d = Deformation::symbolic(&f, n).unwrap();
                for i in 1..=n {
                    let p = d.tau(i).unwrap().pow(ell);
                    let sign_negative = i == n && (n as u32 * (ell - 1)) % 2 == 1;
                    let expected = if sign_negative { -&p } else { p };
                    assert_eq!(d.tau_tilde(i).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn specialize_examples() {
        let f = field(3);
        let d = Deformation::symbolic(&f, 3).unwrap();
        let zeros = vec![f.zero(); 3];
        assert!(d.t(1).specialize(&zeros).unwrap().is_zero());
        let ones = vec![f.one(), f.one(), f.zero()];
        assert!((d.t(1) * d.t(2)).specialize(&ones).unwrap().is_one());
        let zm1 = &f.zeta() - &f.one();
        let vals = vec![zm1, f.zero(), f.zero()];
        assert!(d.tau(1).unwrap().specialize(&vals).unwrap().is_one());
        assert_eq!(
            d.t(1).specialize(&vals[..2]),
            Err(CoeffError::WrongArity {
                expected: 3,
                got: 2
            })
        );
    }

    #[test]
    fn rendering_is_graded_lex_descending() {
        let f = field(3);
        let d = Deformation::symbolic(&f, 3).unwrap();
        let p = &(&(d.t(2) * d.t(2)) + &(d.t(1) * d.t(3))) + &(&d.integer(-2) + d.t(3));
        assert_eq!(p.to_string(), "t1*t3 + t2^2 + t3 - 2");
        let tau3 = d.tau(3).unwrap();
        assert_eq!(tau3.to_string(), "((1/3) - (1/3)*zeta)*t3");
    }

    fn arb_poly(ell: u32, nvars: usize) -> impl Strategy<Value = ParamPoly> {
        let f = field(ell);
        prop::collection::vec(
            (
                prop::collection::vec(0u16..3, nvars),
                -3i64..=3,
                0i64..ell as i64,
            ),
            0..5,
        )
        .prop_map(move |terms| {
            let mut p = ParamPoly::zero(&f, nvars);
            for (exps, c, k) in terms {
                let mut e = Exponents::default();
                e.0[..nvars].copy_from_slice(&exps);
                p.add_term(e, f.zeta_power(k).scale(&q(c, 1)));
            }
            p
        })
    }

    fn arb_setup() -> impl Strategy<Value = (ParamPoly, ParamPoly, ParamPoly, Vec<(i64, i64)>)> {
        (2u32..=6, 1usize..=4).prop_flat_map(|(ell, n)| {
            (
                arb_poly(ell, n),
                arb_poly(ell, n),
                arb_poly(ell, n),
                prop::collection::vec((-3i64..=3, 0i64..ell as i64), n),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_axioms_and_specialization((a, b, c, vals) in arb_setup()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            prop_assert!((&a + &(-&a)).is_zero());
            let f = a.field().clone();
            let point: Vec<Cyclotomic> = vals
                .iter()
                .map(|&(m, k)| f.zeta_power(k).scale(&q(m, 1)))
                .collect();
            let lhs = (&a * &b).specialize(&point).unwrap();
            let rhs = &a.specialize(&point).unwrap() * &b.specialize(&point).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
