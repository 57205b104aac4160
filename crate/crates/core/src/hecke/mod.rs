//! The algebra H: the quotient of TV#_α G by
//! x_i x_{i+1} − x_{i+1} x_i = t_i g_i (subscripts mod n) and x_i x_j = x_j x_i
//! for non-adjacent i, j, with elements kept in the PBW basis x_1^{p_1}⋯x_n^{p_n} g.

mod center;
mod rewrite;

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub use center::{enumerate_i, enumerate_j, CenterPoly, Centrality, CycleSubset, Evidence};
pub use rewrite::normal_order_word;

use crate::algebra::{Algebra, AlgebraError};
use crate::coeffring::ParamPoly;
use crate::group::{GroupElem, MAX_N};
use crate::render::{self, Term};

/// x^p g in the PBW basis, p ∈ ℕ^n.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PbwMonomial {
    p: [u16; MAX_N],
    g: GroupElem,
}

impl PbwMonomial {
    pub fn new(p: &[u16], g: GroupElem) -> Self {
        let mut arr = [0u16; MAX_N];
        arr[..p.len()].copy_from_slice(p);
        PbwMonomial { p: arr, g }
    }

    pub fn exponents(&self) -> &[u16; MAX_N] {
        &self.p
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.p[i]
    }

    pub fn group(&self) -> &GroupElem {
        &self.g
    }

    /// The filtration degree Σ p_i.
    pub fn total_degree(&self) -> u32 {
        self.p.iter().map(|&k| k as u32).sum()
    }

    pub(crate) fn render_factors(&self) -> Vec<String> {
        let mut f: Vec<String> = self
            .p
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(i, &k)| render::power(&format!("x{}", i + 1), k as i64))
            .collect();
        f.extend(self.g.render_factors());
        f
    }
}

impl Ord for PbwMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.p.cmp(&other.p))
            .then_with(|| self.g.cmp(&other.g))
    }
}

impl PartialOrd for PbwMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors = self.render_factors();
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join("*"))
        }
    }
}

type Terms = BTreeMap<PbwMonomial, ParamPoly>;

fn accumulate(terms: &mut Terms, m: PbwMonomial, c: ParamPoly) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
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

/// A finite linear combination of PBW monomials with ParamPoly coefficients.
#[derive(Clone)]
pub struct HeckeElem {
    alg: Algebra,
    terms: Terms,
}

impl Algebra {
    /// The generator x_i (1 ≤ i ≤ n).
    pub fn x(&self, i: usize) -> Result<HeckeElem, AlgebraError> {
        self.check_index(i)?;
        let mut p = [0u16; MAX_N];
        p[i - 1] = 1;
        Ok(HeckeElem::monomial(
            self,
            PbwMonomial {
                p,
                g: self.group().identity(),
            },
            self.one_coeff(),
        ))
    }

    /// The group element g_i (1 ≤ i ≤ n) as an element of H.
    pub fn g(&self, i: usize) -> Result<HeckeElem, AlgebraError> {
        let g = self.group().generator(i)?;
        Ok(self.group_element(g))
    }

    pub fn group_element(&self, g: GroupElem) -> HeckeElem {
        HeckeElem::monomial(self, PbwMonomial { p: [0; MAX_N], g }, self.one_coeff())
    }

    /// x_i^ℓ, a single PBW monomial.
    pub fn x_pow_ell(&self, i: usize) -> Result<HeckeElem, AlgebraError> {
        self.check_index(i)?;
        let mut p = [0u16; MAX_N];
        p[i - 1] = self.ell() as u16;
        Ok(HeckeElem::monomial(
            self,
            PbwMonomial {
                p,
                g: self.group().identity(),
            },
            self.one_coeff(),
        ))
    }
}

impl HeckeElem {
    pub fn zero(alg: &Algebra) -> Self {
        HeckeElem {
            alg: alg.clone(),
            terms: Terms::new(),
        }
    }

    pub fn one(alg: &Algebra) -> Self {
        Self::scalar(alg, alg.one_coeff())
    }

    pub fn scalar(alg: &Algebra, c: ParamPoly) -> Self {
        Self::monomial(
            alg,
            PbwMonomial {
                p: [0; MAX_N],
                g: alg.group().identity(),
            },
            c,
        )
    }

    pub fn monomial(alg: &Algebra, m: PbwMonomial, c: ParamPoly) -> Self {
        let mut terms = Terms::new();
        accumulate(&mut terms, m, c);
        HeckeElem {
            alg: alg.clone(),
            terms,
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (PbwMonomial, ParamPoly)>>(
        alg: &Algebra,
        it: I,
    ) -> Self {
        let mut terms = Terms::new();
        for (m, c) in it {
            accumulate(&mut terms, m, c);
        }
        HeckeElem {
            alg: alg.clone(),
            terms,
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&PbwMonomial, &ParamPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &PbwMonomial) -> ParamPoly {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.alg.zero_coeff())
    }

    /// The filtration degree, or `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(PbwMonomial::total_degree).max()
    }

    /// The component of filtration degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> HeckeElem {
        HeckeElem {
            alg: self.alg.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total_degree() == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// The principal symbol: the top filtration-degree component.
    pub fn top_part(&self) -> HeckeElem {
        match self.total_degree() {
            Some(d) => self.homogeneous_part(d),
            None => self.clone(),
        }
    }

    pub fn scale(&self, c: &ParamPoly) -> HeckeElem {
        HeckeElem::from_terms(&self.alg, self.terms.iter().map(|(m, v)| (*m, v * c)))
    }

    /// Applies a map to every coefficient (e.g. a specialization of t).
    pub fn map_coefficients<F: Fn(&ParamPoly) -> ParamPoly>(
        &self,
        alg: &Algebra,
        f: F,
    ) -> HeckeElem {
        HeckeElem::from_terms(alg, self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    fn check(&self, other: &HeckeElem) {
        assert!(
            self.alg.n() == other.alg.n() && self.alg.ell() == other.alg.ell(),
            "elements of different algebras"
        );
    }

    /// self · x_j for a 0-based letter j.
    fn right_mul_x(&self, j: usize) -> Terms {
        let alg = &self.alg;
        let group = alg.group();
        let n = alg.n();
        let mut out = Terms::new();
        for (m, c) in &self.terms {
            // g x_j = ζ^χ x_j g
            let chi = group.action_exponent_unit(&m.g, j);
            let c = c.scale_zeta(chi as i64);

            // corrections from sliding x_j leftward past the blocks x_k^{p_k}, k > j
            for k in (j + 1..n).rev() {
                let block = m.p[k];
                if block == 0 {
                    continue;
                }
                let (rel_coeff, gen) = if k == j + 1 {
                    (-alg.t(j + 1), group.generator_mod(j + 1))
                } else if j == 0 && k == n - 1 {
                    (alg.t(n).clone(), group.generator_mod(n))
                } else {
                    continue;
                };
                // [x_k^m, x_j] = c Σ_{s} x_k^s g x_k^{m-1-s} = c (Σ_u ζ^{u χ(g,e_k)}) x_k^{m-1} g
                let step = group.action_exponent_unit(&gen, k) as i64;
                let mut geometric = alg.field().zero();
                for u in 0..block as i64 {
                    geometric += &alg.field().zeta_power(u * step);
                }
                // move g to the right of the untouched blocks x_{k+1}, …, x_n
                let mut suffix = [0i64; MAX_N];
                for (i, s) in suffix.iter_mut().enumerate().take(n).skip(k + 1) {
                    *s = m.p[i] as i64;
                }
                let suffix_chi = group.action_exponent(&gen, &suffix[..n]) as i64;
                let (alpha, g_new) = group.star_mul_exponent(&gen, &m.g);
                let scalar = &geometric * &alg.field().zeta_power(suffix_chi + alpha as i64);
                if scalar.is_zero() {
                    continue;
                }
                let mut p = m.p;
                p[k] -= 1;
                accumulate(
                    &mut out,
                    PbwMonomial { p, g: g_new },
                    &c * &rel_coeff.scale(&scalar),
                );
            }

            let mut p = m.p;
            p[j] += 1;
            accumulate(&mut out, PbwMonomial { p, g: m.g }, c);
        }
        out
    }

    /// self · h for a group basis element h.
    fn right_mul_group(&self, h: &GroupElem) -> Terms {
        let group = self.alg.group();
        let mut out = Terms::new();
        for (m, c) in &self.terms {
            let (alpha, gh) = group.star_mul_exponent(&m.g, h);
            accumulate(
                &mut out,
                PbwMonomial { p: m.p, g: gh },
                c.scale_zeta(alpha as i64),
            );
        }
        out
    }

    /// Product in H, returned in PBW normal form.
    pub fn mul(&self, other: &HeckeElem) -> HeckeElem {
        self.check(other);
        let n = self.alg.n();
        let mut out = Terms::new();
        // group the right factor's terms by x-part so that self · x^q is computed once
        let mut by_x: BTreeMap<[u16; MAX_N], Vec<(GroupElem, &ParamPoly)>> = BTreeMap::new();
        for (m, c) in &other.terms {
            by_x.entry(m.p).or_default().push((m.g, c));
        }
        for (q, groups) in by_x {
            let mut partial = self.clone();
            for (j, &count) in q.iter().enumerate().take(n) {
                for _ in 0..count {
                    partial.terms = partial.right_mul_x(j);
                }
            }
            for (h, c) in groups {
                for (m, v) in partial.right_mul_group(&h) {
                    accumulate(&mut out, m, &v * c);
                }
            }
        }
        HeckeElem {
            alg: self.alg.clone(),
            terms: out,
        }
    }

    pub fn pow(&self, exp: u32) -> HeckeElem {
        let mut acc = HeckeElem::one(&self.alg);
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn commutator(&self, other: &HeckeElem) -> HeckeElem {
        &self.mul(other) - &other.mul(self)
    }

    /// Product in the associated graded algebra SV#_α G, where the x's commute.
    pub fn graded_mul(&self, other: &HeckeElem) -> HeckeElem {
        self.check(other);
        let group = self.alg.group();
        let n = self.alg.n();
        let mut out = Terms::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let q: Vec<i64> = b.p[..n].iter().map(|&k| k as i64).collect();
                let chi = group.action_exponent(&a.g, &q);
                let (alpha, gh) = group.star_mul_exponent(&a.g, &b.g);
                let mut p = a.p;
                for (x, y) in p.iter_mut().zip(b.p) {
                    *x += y;
                }
                accumulate(
                    &mut out,
                    PbwMonomial { p, g: gh },
                    (ca * cb).scale_zeta((chi + alpha) as i64),
                );
            }
        }
        HeckeElem {
            alg: self.alg.clone(),
            terms: out,
        }
    }

    pub(crate) fn rendered_terms(&self) -> Vec<Term> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| Term::times(c.coefficient_term(), m.render_factors()))
            .collect()
    }
}

impl PartialEq for HeckeElem {
    fn eq(&self, other: &Self) -> bool {
        self.alg.n() == other.alg.n()
            && self.alg.ell() == other.alg.ell()
            && self.terms == other.terms
    }
}

impl Eq for HeckeElem {}

impl fmt::Display for HeckeElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render::join_terms(self.rendered_terms()))
    }
}

impl fmt::Debug for HeckeElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HeckeElem({self})")
    }
}

impl<'a> Add<&'a HeckeElem> for &'a HeckeElem {
    type Output = HeckeElem;
    fn add(self, rhs: &HeckeElem) -> HeckeElem {
        self.check(rhs);
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            accumulate(&mut terms, *m, c.clone());
        }
        HeckeElem {
            alg: self.alg.clone(),
            terms,
        }
    }
}

impl<'a> Sub<&'a HeckeElem> for &'a HeckeElem {
    type Output = HeckeElem;
    fn sub(self, rhs: &HeckeElem) -> HeckeElem {
        self.check(rhs);
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            accumulate(&mut terms, *m, -c);
        }
        HeckeElem {
            alg: self.alg.clone(),
            terms,
        }
    }
}

impl<'a> Mul<&'a HeckeElem> for &'a HeckeElem {
    type Output = HeckeElem;
    fn mul(self, rhs: &HeckeElem) -> HeckeElem {
        HeckeElem::mul(self, rhs)
    }
}

impl Neg for &HeckeElem {
    type Output = HeckeElem;
    fn neg(self) -> HeckeElem {
        HeckeElem {
            alg: self.alg.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests;
