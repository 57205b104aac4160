//! The homocyclic group G ≅ (Z/ℓZ)^{n−1} of diagonal matrices in SL_n with
//! g^ℓ = 1, its 2-cocycle α and the characters by which it acts on monomials.
//!
//! Elements are exponent vectors with respect to g_1, …, g_{n−1}; the extra
//! generator g_n = g_1^{−1}⋯g_{n−1}^{−1} is rewritten into that basis.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::coeffring::MAX_VARS;
use crate::cyclotomic::{Cyclotomic, CyclotomicField};

pub const MAX_N: usize = MAX_VARS;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("n must lie in 3..={MAX_N}, got {0}")]
    InvalidRank(usize),
    #[error("ell must lie in 2..=65535, got {0}")]
    InvalidOrder(u32),
    #[error("generator index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("expected {expected} exponents, got {got}")]
    WrongLength { expected: usize, got: usize },
}

/// g_1^{e_1} ⋯ g_{n−1}^{e_{n−1}} with every e_k in 0..ℓ.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElem {
    e: [u16; MAX_N - 1],
}

impl GroupElem {
    pub fn exponent(&self, k: usize) -> u16 {
        self.e[k]
    }

    pub fn is_identity(&self) -> bool {
        self.e.iter().all(|&x| x == 0)
    }

    /// Factors of the canonical rendering. The generators are listed from
    /// g_{n−1} down to g_1 because that ordered product carries no cocycle
    /// factor, so reading the text back yields exactly this basis element.
    pub(crate) fn render_factors(&self) -> Vec<String> {
        (0..MAX_N - 1)
            .rev()
            .filter(|&k| self.e[k] != 0)
            .map(|k| crate::render::power(&format!("g{}", k + 1), self.e[k] as i64))
            .collect()
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors = self.render_factors();
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join("*"))
        }
    }
}

impl fmt::Debug for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElem({self})")
    }
}

#[derive(Debug, Clone)]
pub struct Group {
    n: usize,
    ell: u32,
    field: Arc<CyclotomicField>,
}

impl Group {
    pub fn new(n: usize, field: &Arc<CyclotomicField>) -> Result<Self, GroupError> {
        if !(3..=MAX_N).contains(&n) {
            return Err(GroupError::InvalidRank(n));
        }
        let ell = field.ell();
        if !(2..=u16::MAX as u32).contains(&ell) {
            return Err(GroupError::InvalidOrder(ell));
        }
        Ok(Group {
            n,
            ell,
            field: Arc::clone(field),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    /// |G| = ℓ^{n−1}, saturating.
    pub fn order(&self) -> u64 {
        (self.ell as u64).saturating_pow(self.n as u32 - 1)
    }

    pub fn identity(&self) -> GroupElem {
        GroupElem { e: [0; MAX_N - 1] }
    }

    /// Builds an element from arbitrary integer exponents of g_1, …, g_{n−1}.
    pub fn from_exponents(&self, exps: &[i64]) -> Result<GroupElem, GroupError> {
        if exps.len() != self.n - 1 {
            return Err(GroupError::WrongLength {
                expected: self.n - 1,
                got: exps.len(),
            });
        }
        let mut e = [0u16; MAX_N - 1];
        for (slot, &x) in e.iter_mut().zip(exps) {
            *slot = x.rem_euclid(self.ell as i64) as u16;
        }
        Ok(GroupElem { e })
    }

    pub fn exponents(&self, g: &GroupElem) -> Vec<u16> {
        g.e[..self.n - 1].to_vec()
    }

    /// g_i for 1 ≤ i ≤ n; g_n is the all-(ℓ−1) vector.
    pub fn generator(&self, i: usize) -> Result<GroupElem, GroupError> {
        if i == 0 || i > self.n {
            return Err(GroupError::IndexOutOfRange {
                index: i,
                n: self.n,
            });
        }
        let mut e = [0u16; MAX_N - 1];
        if i == self.n {
            for slot in &mut e[..self.n - 1] {
                *slot = (self.ell - 1) as u16;
            }
        } else {
            e[i - 1] = 1;
        }
        Ok(GroupElem { e })
    }

    /// g_i with the subscript read modulo n.
    pub fn generator_mod(&self, i: usize) -> GroupElem {
        self.generator((i + self.n - 1) % self.n + 1)
            .expect("reduced index is in range")
    }

    /// Product in the abstract group (componentwise addition mod ℓ).
    pub fn plain_mul(&self, g: &GroupElem, h: &GroupElem) -> GroupElem {
        let mut e = [0u16; MAX_N - 1];
        for ((slot, &a), &b) in e.iter_mut().zip(&g.e).zip(&h.e).take(self.n - 1) {
            *slot = ((a as u32 + b as u32) % self.ell) as u16;
        }
        GroupElem { e }
    }

    pub fn inverse(&self, g: &GroupElem) -> GroupElem {
        let mut e = [0u16; MAX_N - 1];
        for (slot, &a) in e.iter_mut().zip(&g.e).take(self.n - 1) {
            *slot = ((self.ell - a as u32) % self.ell) as u16;
        }
        GroupElem { e }
    }

    /// Exponent a in 0..ℓ with α(g, h) = ζ^a, where α(g, h) = ζ^{−Σ_{k=1}^{n−2} e_k f_{k+1}}.
    pub fn alpha_exponent(&self, g: &GroupElem, h: &GroupElem) -> u32 {
        let ell = self.ell as u64;
        let s: u64 = (0..self.n - 2)
            .map(|k| (g.e[k] as u64 * h.e[k + 1] as u64) % ell)
            .sum();
        ((ell - s % ell) % ell) as u32
    }

    pub fn alpha(&self, g: &GroupElem, h: &GroupElem) -> Cyclotomic {
        self.field.zeta_power(self.alpha_exponent(g, h) as i64)
    }

    /// g ∗ h = α(g, h) gh, returned with the scalar as a power of ζ.
    pub fn star_mul_exponent(&self, g: &GroupElem, h: &GroupElem) -> (u32, GroupElem) {
        (self.alpha_exponent(g, h), self.plain_mul(g, h))
    }

    pub fn star_mul(&self, g: &GroupElem, h: &GroupElem) -> (Cyclotomic, GroupElem) {
        let (a, gh) = self.star_mul_exponent(g, h);
        (self.field.zeta_power(a as i64), gh)
    }

    /// The k-fold star product g ∗ ⋯ ∗ g as (ζ-exponent, element).
    pub fn star_power(&self, g: &GroupElem, k: u32) -> (u32, GroupElem) {
        let mut acc = (0u32, self.identity());
        for _ in 0..k {
            let (a, h) = self.star_mul_exponent(&acc.1, g);
            acc = ((acc.0 + a) % self.ell, h);
        }
        acc
    }

    /// Exponent c in 0..ℓ with g · y^p = ζ^c y^p, namely c = Σ_{i=1}^{n−1} e_i (p_i − p_{i+1}).
    /// The same character describes the action on x-monomials.
    pub fn action_exponent(&self, g: &GroupElem, p: &[i64]) -> u32 {
        debug_assert!(p.len() >= self.n);
        let ell = self.ell as i64;
        let s: i64 = (0..self.n - 1)
            .map(|i| (g.e[i] as i64 * (p[i] - p[i + 1])).rem_euclid(ell))
            .sum();
        s.rem_euclid(ell) as u32
    }

    /// Character value for a single unit vector e_j (0-based j).
    pub fn action_exponent_unit(&self, g: &GroupElem, j: usize) -> u32 {
        let ell = self.ell;
        let mut s = 0u32;
        if j < self.n - 1 {
            s += g.e[j] as u32;
        }
        if j > 0 {
            s += ell - g.e[j - 1] as u32;
        }
        s % ell
    }

    pub fn action_char(&self, g: &GroupElem, p: &[i64]) -> Result<Cyclotomic, GroupError> {
        if p.len() != self.n {
            return Err(GroupError::WrongLength {
                expected: self.n,
                got: p.len(),
            });
        }
        Ok(self.field.zeta_power(self.action_exponent(g, p) as i64))
    }

    /// The cocycle law α(g,h)α(gh,k) = α(h,k)α(g,hk) for one triple.
    pub fn cocycle_holds(&self, g: &GroupElem, h: &GroupElem, k: &GroupElem) -> bool {
        let lhs = self.alpha_exponent(g, h) + self.alpha_exponent(&self.plain_mul(g, h), k);
        let rhs = self.alpha_exponent(h, k) + self.alpha_exponent(g, &self.plain_mul(h, k));
        lhs % self.ell == rhs % self.ell
    }

    /// Checks the cocycle law on all |G|³ triples and returns the first
    /// counterexample. α and the product are tabulated first, so this needs
    /// O(|G|²) memory; callers should keep |G| in the low thousands.
    pub fn cocycle_exhaustive(&self) -> Option<(GroupElem, GroupElem, GroupElem)> {
        let elems: Vec<GroupElem> = self.elements().collect();
        let m = elems.len();
        let index = |g: &GroupElem| {
            (0..self.n - 1).fold(0usize, |acc, k| acc * self.ell as usize + g.e[k] as usize)
        };
        let mut mul = vec![0u32; m * m];
        let mut alpha = vec![0u32; m * m];
        for (a, g) in elems.iter().enumerate() {
            for (b, h) in elems.iter().enumerate() {
                mul[a * m + b] = index(&self.plain_mul(g, h)) as u32;
                alpha[a * m + b] = self.alpha_exponent(g, h);
            }
        }
        for a in 0..m {
            for b in 0..m {
                let ab = mul[a * m + b] as usize;
                let x = alpha[a * m + b];
                for c in 0..m {
                    let lhs = x + alpha[ab * m + c];
                    let rhs = alpha[b * m + c] + alpha[a * m + mul[b * m + c] as usize];
                    if lhs % self.ell != rhs % self.ell {
                        return Some((elems[a], elems[b], elems[c]));
                    }
                }
            }
        }
        None
    }

    /// All ℓ^{n−1} elements in lexicographic order of exponents.
    pub fn elements(&self) -> impl Iterator<Item = GroupElem> + '_ {
        let m = self.n - 1;
        let total = self.order();
        (0..total).map(move |mut idx| {
            let mut e = [0u16; MAX_N - 1];
            for k in (0..m).rev() {
                e[k] = (idx % self.ell as u64) as u16;
                idx /= self.ell as u64;
            }
            GroupElem { e }
        })
    }
}
