//! Exact arithmetic in the cyclotomic field Q(ζ), ζ a primitive ℓ-th root of unity.
//!
//! Elements are residues of Q[z] modulo the ℓ-th cyclotomic polynomial Φ_ℓ,
//! stored as a dense coefficient vector of length φ(ℓ) in the basis
//! 1, ζ, …, ζ^{φ(ℓ)−1}. Every operation returns a fully reduced vector, so
//! derived equality is equality in the field.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::render::{self, Term};

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CyclotomicError {
    #[error("cyclotomic order must be at least {min}, got {ell}")]
    InvalidOrder { ell: u32, min: u32 },
    #[error("division by zero in Q(zeta_{ell})")]
    DivisionByZero { ell: u32 },
}

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// Quotient and remainder of polynomial division; `divisor` must be nonzero and trimmed.
fn poly_divrem(dividend: &[Rational], divisor: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = dividend.to_vec();
    trim(&mut rem);
    let dlen = divisor.len();
    assert!(dlen > 0, "polynomial division by zero");
    if rem.len() < dlen {
        return (Vec::new(), rem);
    }
    let lead = &divisor[dlen - 1];
    let mut quot = vec![Rational::zero(); rem.len() - dlen + 1];
    while rem.len() >= dlen {
        let shift = rem.len() - dlen;
        let c = &rem[rem.len() - 1] / lead;
        for (i, d) in divisor.iter().enumerate() {
            rem[shift + i] -= &c * d;
        }
        quot[shift] = c;
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Coefficients of Φ_ℓ in ascending order, computed by dividing z^ℓ − 1 by Φ_d
/// for every proper divisor d of ℓ.
pub fn cyclotomic_polynomial(ell: u32) -> Result<Vec<Rational>, CyclotomicError> {
    if ell < 1 {
        return Err(CyclotomicError::InvalidOrder { ell, min: 1 });
    }
    let mut table: Vec<Option<Vec<Rational>>> = vec![None; ell as usize + 1];
    for d in 1..=ell {
        if !ell.is_multiple_of(d) {
            continue;
        }
        let mut p = vec![Rational::zero(); d as usize + 1];
        p[0] = -Rational::one();
        p[d as usize] = Rational::one();
        for e in 1..d {
            if d % e == 0 {
                let phi_e = table[e as usize]
                    .as_ref()
                    .expect("divisors of divisors are divisors");
                let (q, r) = poly_divrem(&p, phi_e);
                debug_assert!(r.is_empty());
                p = q;
            }
        }
        table[d as usize] = Some(p);
    }
    Ok(table.swap_remove(ell as usize).expect("ell divides itself"))
}

/// The field Q(ζ_ℓ) together with its reduction data.
#[derive(Debug)]
pub struct CyclotomicField {
    ell: u32,
    modulus: Vec<Rational>,
    /// `powers[k]` is the reduced representative of ζ^k for 0 ≤ k < ℓ.
    powers: Vec<Vec<Rational>>,
}

impl CyclotomicField {
    pub fn new(ell: u32) -> Result<Arc<Self>, CyclotomicError> {
        if ell < 2 {
            return Err(CyclotomicError::InvalidOrder { ell, min: 2 });
        }
        let modulus = cyclotomic_polynomial(ell)?;
        let degree = modulus.len() - 1;
        let powers = (0..ell as usize)
            .map(|k| {
                let mut zk = vec![Rational::zero(); k + 1];
                zk[k] = Rational::one();
                let (_, r) = poly_divrem(&zk, &modulus);
                pad(r, degree)
            })
            .collect();
        Ok(Arc::new(CyclotomicField {
            ell,
            modulus,
            powers,
        }))
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    /// φ(ℓ), the dimension of the field over Q.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[Rational] {
        &self.modulus
    }

    pub fn zero(self: &Arc<Self>) -> Cyclotomic {
        Cyclotomic {
            field: Arc::clone(self),
            coeffs: vec![Rational::zero(); self.degree()],
        }
    }

    pub fn one(self: &Arc<Self>) -> Cyclotomic {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(self: &Arc<Self>, q: Rational) -> Cyclotomic {
        let mut c = self.zero();
        c.coeffs[0] = q;
        c
    }

    pub fn from_integer(self: &Arc<Self>, k: i64) -> Cyclotomic {
        self.from_rational(Rational::from_integer(BigInt::from(k)))
    }

    /// Reduces an arbitrary polynomial in ζ (ascending coefficients).
    pub fn from_poly(self: &Arc<Self>, coeffs: &[Rational]) -> Cyclotomic {
        let mut out = self.zero();
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let zk = &self.powers[k % self.ell as usize];
            for (o, z) in out.coeffs.iter_mut().zip(zk) {
                if !z.is_zero() {
                    *o += c * z;
                }
            }
        }
        out
    }

    /// Canonical representative of ζ^k; depends only on k mod ℓ.
    pub fn zeta_power(self: &Arc<Self>, k: i64) -> Cyclotomic {
        let idx = k.rem_euclid(self.ell as i64) as usize;
        Cyclotomic {
            field: Arc::clone(self),
            coeffs: self.powers[idx].clone(),
        }
    }

    pub fn zeta(self: &Arc<Self>) -> Cyclotomic {
        self.zeta_power(1)
    }
}

fn pad(mut v: Vec<Rational>, len: usize) -> Vec<Rational> {
    v.resize(len, Rational::zero());
    v
}

#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn ell(&self) -> u32 {
        self.field.ell
    }

    /// Coefficients in the basis 1, ζ, …, ζ^{φ(ℓ)−1}.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if this element lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coeffs[0])
    }

    fn check_field(&self, other: &Cyclotomic) {
        assert!(
            Arc::ptr_eq(&self.field, &other.field) || self.field.ell == other.field.ell,
            "mismatched cyclotomic orders {} and {}",
            self.field.ell,
            other.field.ell
        );
    }

    pub fn scale(&self, q: &Rational) -> Cyclotomic {
        Cyclotomic {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against Φ_ℓ.
    pub fn inv(&self) -> Result<Cyclotomic, CyclotomicError> {
        if self.is_zero() {
            return Err(CyclotomicError::DivisionByZero { ell: self.ell() });
        }
        let mut r0 = self.field.modulus.clone();
        let mut r1 = self.coeffs.clone();
        trim(&mut r1);
        let mut s0: Vec<Rational> = Vec::new();
        let mut s1: Vec<Rational> = vec![Rational::one()];
        while !r1.is_empty() {
            let (q, r) = poly_divrem(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // Φ_ℓ is irreducible, so the gcd is a nonzero constant.
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].recip();
        let s0: Vec<Rational> = s0.iter().map(|x| x * &c).collect();
        Ok(self.field.from_poly(&s0))
    }

    pub fn pow(&self, exp: i64) -> Result<Cyclotomic, CyclotomicError> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = self.field.one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// If exactly one basis coefficient is nonzero, returns it with its index.
    fn single_term(&self) -> Option<(usize, &Rational)> {
        let mut it = self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero());
        let first = it.next()?;
        it.next().is_none().then_some(first)
    }

    /// Rendering as a coefficient factor in a larger product.
    pub(crate) fn coefficient_term(&self) -> Term {
        match self.single_term() {
            Some((k, q)) => {
                let mut t = render::rational_term(q);
                if k > 0 {
                    t.factors.push(render::power("zeta", k as i64));
                }
                t
            }
            None if self.is_zero() => Term::with_factors(vec!["0".into()]),
            None => Term::with_factors(vec![format!("({self})")]),
        }
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.ell == other.field.ell && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Hash for Cyclotomic {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.ell.hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, q)| {
                let mut t = render::rational_term(q);
                if k > 0 {
                    t.factors.push(render::power("zeta", k as i64));
                }
                t
            });
        f.write_str(&render::join_terms(terms))
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic[{}]({self})", self.field.ell)
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        self.check_field(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        self.check_field(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_field(rhs);
        let d = self.coeffs.len();
        if d == 1 {
            return Cyclotomic {
                field: Arc::clone(&self.field),
                coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]],
            };
        }
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let ell = self.field.ell as usize;
        let mut coeffs: Vec<Rational> = prod.drain(..d).collect();
        for (k, c) in prod.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, z) in coeffs.iter_mut().zip(&self.field.powers[(k + d) % ell]) {
                if !z.is_zero() {
                    *o += &c * z;
                }
            }
        }
        Cyclotomic {
            field: Arc::clone(&self.field),
            coeffs,
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&k| q(k, 1)).collect()
    }

    /// Independent inverse: solve (multiplication-by-a) · x = e_0 by Gaussian elimination.
    fn inverse_by_linear_solve(a: &Cyclotomic) -> Cyclotomic {
        let field = a.field().clone();
        let d = field.degree();
        let mut m: Vec<Vec<Rational>> = (0..d)
            .map(|col| {
                let z = field.zeta_power(col as i64);
                (a * &z).coeffs().to_vec()
            })
            .collect();
        // m[col][row] -> augmented rows
        let mut rows: Vec<Vec<Rational>> = (0..d)
            .map(|r| {
                let mut row: Vec<Rational> = (0..d).map(|c| m[c][r].clone()).collect();
                row.push(if r == 0 {
                    Rational::one()
                } else {
                    Rational::zero()
                });
                row
            })
            .collect();
        m.clear();
        for col in 0..d {
            let piv = (col..d).find(|&r| !rows[r][col].is_zero()).unwrap();
            rows.swap(col, piv);
            let p = rows[col][col].clone();
            for x in rows[col].iter_mut() {
                *x /= &p;
            }
            for r in 0..d {
                if r != col && !rows[r][col].is_zero() {
                    let f = rows[r][col].clone();
                    let pivot_row = rows[col].clone();
                    for (x, y) in rows[r].iter_mut().zip(&pivot_row) {
                        *x -= &f * y;
                    }
                }
            }
        }
        field.from_poly(&rows.iter().map(|r| r[d].clone()).collect::<Vec<_>>())
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1).unwrap(), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2).unwrap(), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(6).unwrap(), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(4).unwrap(), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(5).unwrap(), ints(&[1, 1, 1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(12).unwrap(), ints(&[1, 0, -1, 0, 1]));
        assert_eq!(
            cyclotomic_polynomial(0),
            Err(CyclotomicError::InvalidOrder { ell: 0, min: 1 })
        );
    }

    #[test]
    fn degree_is_totient() {
        let totient = |n: u32| (1..=n).filter(|k| num_integer::gcd(*k, n) == 1).count();
        for ell in 1..=30 {
            assert_eq!(cyclotomic_polynomial(ell).unwrap().len() - 1, totient(ell));
        }
    }

    #[test]
    fn field_rejects_order_one() {
        assert!(matches!(
            CyclotomicField::new(1),
            Err(CyclotomicError::InvalidOrder { ell: 1, min: 2 })
        ));
    }

    #[test]
    fn basic_arithmetic_examples() {
        for ell in 2..=9 {
            let f = CyclotomicField::new(ell).unwrap();
            let z = f.zeta();
            assert_eq!(&z + &f.zero(), z);
            assert!((&z * &f.zeta_power(ell as i64 - 1)).is_one());
        }
        let f2 = CyclotomicField::new(2).unwrap();
        assert_eq!(f2.zeta(), f2.from_integer(-1));
        assert!((&f2.zeta() * &f2.zeta()).is_one());
    }

    #[test]
    fn inverse_examples() {
        let f2 = CyclotomicField::new(2).unwrap();
        assert!(f2.one().inv().unwrap().is_one());
        let zm1 = &f2.zeta() - &f2.one();
        assert_eq!(zm1, f2.from_integer(-2));
        assert_eq!(zm1.inv().unwrap(), f2.from_rational(q(-1, 2)));

        let f4 = CyclotomicField::new(4).unwrap();
        let zm1 = &f4.zeta() - &f4.one();
        let expected = f4.from_poly(&[q(-1, 2), q(-1, 2)]);
        assert_eq!(inverse_by_linear_solve(&zm1), expected);
        assert_eq!(zm1.inv().unwrap(), expected);
        assert!((&zm1 * &expected).is_one());

        assert_eq!(
            f4.zero().inv(),
            Err(CyclotomicError::DivisionByZero { ell: 4 })
        );
    }

    #[test]
    fn zeta_power_examples() {
        let f3 = CyclotomicField::new(3).unwrap();
        assert!(f3.zeta_power(0).is_one());
        assert_eq!(f3.zeta_power(-1), &f3.zeta() * &f3.zeta());
        assert_eq!(f3.zeta_power(-1), f3.from_poly(&ints(&[-1, -1])));
        let f2 = CyclotomicField::new(2).unwrap();
        assert_eq!(f2.zeta_power(1), f2.from_integer(-1));
    }

    #[test]
    fn zeta_is_primitive() {
        for ell in 2..=16 {
            let f = CyclotomicField::new(ell).unwrap();
            assert!(f.zeta_power(ell as i64).is_one());
            for k in 1..ell as i64 {
                assert!(!f.zeta_power(k).is_one(), "zeta^{k} = 1 for ell = {ell}");
            }
        }
    }

    #[test]
    fn full_period_sums_to_zero_for_primes() {
        for ell in [2u32, 3, 5, 7, 11, 13] {
            let f = CyclotomicField::new(ell).unwrap();
            let mut s = f.zero();
            for k in 0..ell as i64 {
                s += &f.zeta_power(k);
            }
            assert!(s.is_zero(), "ell = {ell}");
        }
    }

    #[test]
    fn rendering() {
        let f3 = CyclotomicField::new(3).unwrap();
        let zm1 = &f3.zeta() - &f3.one();
        assert_eq!(zm1.to_string(), "-1 + zeta");
        assert_eq!(zm1.inv().unwrap().to_string(), "-(2/3) - (1/3)*zeta");
        assert_eq!(f3.zero().to_string(), "0");
    }

    fn arb_elem(ell: u32) -> impl Strategy<Value = Cyclotomic> {
        let f = CyclotomicField::new(ell).unwrap();
        let d = f.degree();
        prop::collection::vec((-6i64..=6, 1i64..=4), d).prop_map(move |v| {
            let coeffs: Vec<Rational> = v.into_iter().map(|(n, den)| q(n, den)).collect();
            f.from_poly(&coeffs)
        })
    }

    fn arb_triple() -> impl Strategy<Value = (Cyclotomic, Cyclotomic, Cyclotomic)> {
        (2u32..=12).prop_flat_map(|ell| (arb_elem(ell), arb_elem(ell), arb_elem(ell)))
    }

    proptest! {
        #[test]
        fn field_axioms((a, b, c) in arb_triple()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            if !a.is_zero() {
                let ai = a.inv().unwrap();
                prop_assert!((&a * &ai).is_one());
                prop_assert_eq!(ai, inverse_by_linear_solve(&a));
            }
        }

        #[test]
        fn zeta_powers_add(ell in 2u32..=16, k in -40i64..40, m in -40i64..40) {
            let f = CyclotomicField::new(ell).unwrap();
            prop_assert_eq!(&f.zeta_power(k) * &f.zeta_power(m), f.zeta_power(k + m));
            prop_assert_eq!(f.zeta_power(k), f.zeta_power(k + ell as i64));
        }
    }
}
