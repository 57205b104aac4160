//! The crossed product Q(ζ)[t][y_1^±, …, y_n^±] #_α G and the embedding Θ of H into it.
//!
//! The y's commute, so multiplication here is a direct formula; this makes
//! the module an independent check on the rewriting engine in [`crate::hecke`].

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::{Algebra, AlgebraError};
use crate::chebyshev::{self, IntPoly};
use crate::coeffring::ParamPoly;
use crate::group::{GroupElem, MAX_N};
use crate::hecke::{enumerate_j, Evidence, HeckeElem};
use crate::render::{self, Term};

/// y^q g with q ∈ ℤ^n; the group part sits to the right.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct LaurentMonomial {
    q: [i32; MAX_N],
    g: GroupElem,
}

impl LaurentMonomial {
    pub fn new(q: &[i32], g: GroupElem) -> Self {
        let mut arr = [0i32; MAX_N];
        arr[..q.len()].copy_from_slice(q);
        LaurentMonomial { q: arr, g }
    }

    pub fn exponents(&self) -> &[i32; MAX_N] {
        &self.q
    }

    pub fn group(&self) -> &GroupElem {
        &self.g
    }

    /// Σ q_i, which may be negative.
    pub fn total_degree(&self) -> i64 {
        self.q.iter().map(|&k| k as i64).sum()
    }

    fn render_factors(&self) -> Vec<String> {
        let mut f: Vec<String> = self
            .q
            .iter()
            .enumerate()
            .filter(|(_, &k)| k != 0)
            .map(|(i, &k)| render::power(&format!("y{}", i + 1), k as i64))
            .collect();
        f.extend(self.g.render_factors());
        f
    }
}

impl Ord for LaurentMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.q.cmp(&other.q))
            .then_with(|| self.g.cmp(&other.g))
    }
}

impl PartialOrd for LaurentMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for LaurentMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors = self.render_factors();
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join("*"))
        }
    }
}

type Terms = BTreeMap<LaurentMonomial, ParamPoly>;

fn accumulate(terms: &mut Terms, m: LaurentMonomial, c: ParamPoly) {
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

#[derive(Clone)]
pub struct LaurentElem {
    alg: Algebra,
    terms: Terms,
}

impl LaurentElem {
    pub fn zero(alg: &Algebra) -> Self {
        LaurentElem {
            alg: alg.clone(),
            terms: Terms::new(),
        }
    }

    pub fn one(alg: &Algebra) -> Self {
        Self::scalar(alg, alg.one_coeff())
    }

    pub fn scalar(alg: &Algebra, c: ParamPoly) -> Self {
        Self::monomial(alg, LaurentMonomial::new(&[], alg.group().identity()), c)
    }

    pub fn monomial(alg: &Algebra, m: LaurentMonomial, c: ParamPoly) -> Self {
        let mut terms = Terms::new();
        accumulate(&mut terms, m, c);
        LaurentElem {
            alg: alg.clone(),
            terms,
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (LaurentMonomial, ParamPoly)>>(
        alg: &Algebra,
        it: I,
    ) -> Self {
        let mut terms = Terms::new();
        for (m, c) in it {
            accumulate(&mut terms, m, c);
        }
        LaurentElem {
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&LaurentMonomial, &ParamPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &LaurentMonomial) -> ParamPoly {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.alg.zero_coeff())
    }

    pub fn scale(&self, c: &ParamPoly) -> LaurentElem {
        LaurentElem::from_terms(&self.alg, self.terms.iter().map(|(m, v)| (*m, v * c)))
    }

    fn check(&self, other: &LaurentElem) {
        assert!(
            self.alg.n() == other.alg.n() && self.alg.ell() == other.alg.ell(),
            "elements of different algebras"
        );
    }

    /// (y^p g)(y^q h) = χ_g(q) α(g, h) y^{p+q} gh, extended bilinearly.
    pub fn lmul(&self, other: &LaurentElem) -> LaurentElem {
        self.check(other);
        let group = self.alg.group();
        let n = self.alg.n();
        let mut out = Terms::new();
        for (b, cb) in &other.terms {
            let q: Vec<i64> = b.q[..n].iter().map(|&k| k as i64).collect();
            for (a, ca) in &self.terms {
                let chi = group.action_exponent(&a.g, &q);
                let (alpha, gh) = group.star_mul_exponent(&a.g, &b.g);
                let mut p = a.q;
                for (x, y) in p.iter_mut().zip(b.q) {
                    *x += y;
                }
                accumulate(
                    &mut out,
                    LaurentMonomial { q: p, g: gh },
                    (ca * cb).scale_zeta((chi + alpha) as i64),
                );
            }
        }
        LaurentElem {
            alg: self.alg.clone(),
            terms: out,
        }
    }

    pub fn pow(&self, exp: u32) -> LaurentElem {
        (0..exp).fold(LaurentElem::one(&self.alg), |acc, _| acc.lmul(self))
    }

    pub fn commutator(&self, other: &LaurentElem) -> LaurentElem {
        &self.lmul(other) - &other.lmul(self)
    }

    pub fn max_total_degree(&self) -> Option<i64> {
        self.terms.keys().map(LaurentMonomial::total_degree).max()
    }

    pub(crate) fn rendered_terms(&self) -> Vec<Term> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| Term::times(c.coefficient_term(), m.render_factors()))
            .collect()
    }
}

impl PartialEq for LaurentElem {
    fn eq(&self, other: &Self) -> bool {
        self.alg.n() == other.alg.n()
            && self.alg.ell() == other.alg.ell()
            && self.terms == other.terms
    }
}

impl Eq for LaurentElem {}

impl fmt::Display for LaurentElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render::join_terms(self.rendered_terms()))
    }
}

impl fmt::Debug for LaurentElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentElem({self})")
    }
}

impl<'a> Add<&'a LaurentElem> for &'a LaurentElem {
    type Output = LaurentElem;
    fn add(self, rhs: &LaurentElem) -> LaurentElem {
        self.check(rhs);
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            accumulate(&mut terms, *m, c.clone());
        }
        LaurentElem {
            alg: self.alg.clone(),
            terms,
        }
    }
}

impl<'a> Sub<&'a LaurentElem> for &'a LaurentElem {
    type Output = LaurentElem;
    fn sub(self, rhs: &LaurentElem) -> LaurentElem {
        self.check(rhs);
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            accumulate(&mut terms, *m, -c);
        }
        LaurentElem {
            alg: self.alg.clone(),
            terms,
        }
    }
}

impl<'a> Mul<&'a LaurentElem> for &'a LaurentElem {
    type Output = LaurentElem;
    fn mul(self, rhs: &LaurentElem) -> LaurentElem {
        self.lmul(rhs)
    }
}

impl Neg for &LaurentElem {
    type Output = LaurentElem;
    fn neg(self) -> LaurentElem {
        LaurentElem {
            alg: self.alg.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Algebra {
    /// y^q as a Laurent element.
    pub fn y_monomial(&self, q: &[i32]) -> LaurentElem {
        LaurentElem::monomial(
            self,
            LaurentMonomial::new(q, self.group().identity()),
            self.one_coeff(),
        )
    }

    /// y_i^k for 1 ≤ i ≤ n.
    pub fn y(&self, i: usize, k: i32) -> Result<LaurentElem, AlgebraError> {
        self.check_index(i)?;
        let mut q = [0i32; MAX_N];
        q[i - 1] = k;
        Ok(self.y_monomial(&q[..self.n()]))
    }

    /// The group generator g_i in the Laurent crossed product.
    pub fn lg(&self, i: usize) -> Result<LaurentElem, AlgebraError> {
        let g = self.group().generator(i)?;
        Ok(self.laurent_group_element(g))
    }

    pub fn laurent_group_element(&self, g: GroupElem) -> LaurentElem {
        LaurentElem::monomial(self, LaurentMonomial::new(&[], g), self.one_coeff())
    }

    /// Θ(x_i) = y_i − (ζ t_i/(ζ−1)) y_{i+1}^{−1} g_i, subscripts mod n.
    pub fn theta_x(&self, i: usize) -> Result<LaurentElem, AlgebraError> {
        self.check_index(i)?;
        let n = self.n();
        let field = self.field();
        let scalar = &field.zeta() * &(&field.zeta() - &field.one()).inv()?;
        let mut q = [0i32; MAX_N];
        q[i % n] = -1;
        let correction = LaurentMonomial::new(&q[..n], self.group().generator(i)?);
        Ok(&self.y(i, 1)? - &LaurentElem::monomial(self, correction, self.t(i).scale(&scalar)))
    }

    /// Θ extended from the generators: x^p g ↦ Θ(x_1)^{p_1} ⋯ Θ(x_n)^{p_n} g.
    pub fn theta(&self, a: &HeckeElem) -> LaurentElem {
        let n = self.n();
        let images: Vec<LaurentElem> = (1..=n)
            .map(|i| self.theta_x(i).expect("in range"))
            .collect();
        let mut powers: Vec<Vec<LaurentElem>> = images
            .iter()
            .map(|_| vec![LaurentElem::one(self)])
            .collect();
        let mut out = LaurentElem::zero(self);
        for (m, c) in a.terms() {
            let mut acc = LaurentElem::scalar(self, c.clone());
            for (i, row) in powers.iter_mut().enumerate() {
                let k = m.exponent(i) as usize;
                while row.len() <= k {
                    let next = row.last().unwrap().lmul(&images[i]);
                    row.push(next);
                }
                if k > 0 {
                    acc = acc.lmul(&row[k]);
                }
            }
            acc = acc.lmul(&self.laurent_group_element(*m.group()));
            out = &out + &acc;
        }
        out
    }

    /// Θ(x_i^ℓ) = y_i^ℓ − τ_i^ℓ y_{i+1}^{−ℓ} for i < n and
    /// Θ(x_n^ℓ) = y_n^ℓ − (−1)^{n(ℓ−1)} τ_n^ℓ y_1^{−ℓ}.
    pub fn theta_xi_ell_closed(&self, i: usize) -> Result<LaurentElem, AlgebraError> {
        self.check_index(i)?;
        let n = self.n();
        let ell = self.ell() as i32;
        let mut coeff = self.tau(i)?.pow(self.ell());
        if i == n && (n as u32 * (self.ell() - 1)) % 2 == 1 {
            coeff = -&coeff;
        }
        let mut q = [0i32; MAX_N];
        q[i % n] = -ell;
        let tail = LaurentElem::monomial(
            self,
            LaurentMonomial::new(&q[..n], self.group().identity()),
            coeff,
        );
        Ok(&self.y(i, ell)? - &tail)
    }

    /// Θ(w) = y_1⋯y_n + (−1)^n ζ^{n−2} τ_1⋯τ_n y_1^{−1}⋯y_n^{−1}.
    pub fn theta_w_closed(&self) -> LaurentElem {
        let n = self.n();
        let sign = if n.is_multiple_of(2) { 1 } else { -1 };
        let coeff = self
            .deformation()
            .tau_product()
            .scale(&self.field().from_integer(sign))
            .scale_zeta(n as i64 - 2);
        let neg_delta = vec![-1i32; n];
        &self.y_monomial(&vec![1; n])
            + &LaurentElem::monomial(
                self,
                LaurentMonomial::new(&neg_delta, self.group().identity()),
                coeff,
            )
    }

    /// (y_1⋯y_n)^ℓ + (−1)^{nℓ} (τ_1⋯τ_n)^ℓ (y_1⋯y_n)^{−ℓ}, the common value of both sides below.
    pub fn center_relation_target(&self) -> LaurentElem {
        let n = self.n();
        let ell = self.ell();
        let sign = if (n as u32 * ell).is_multiple_of(2) {
            1
        } else {
            -1
        };
        let coeff = self
            .deformation()
            .tau_product()
            .pow(ell)
            .scale(&self.field().from_integer(sign));
        &self.y_monomial(&vec![ell as i32; n])
            + &LaurentElem::monomial(
                self,
                LaurentMonomial::new(&vec![-(ell as i32); n], self.group().identity()),
                coeff,
            )
    }

    /// Σ_J τ̃_{i_1}⋯τ̃_{i_k} ã^{δ−ε_{i_1}−⋯−ε_{i_k}} with ã_i = Θ(x_i^ℓ) in closed form.
    pub fn leftside(&self) -> LaurentElem {
        let n = self.n();
        let a: Vec<LaurentElem> = (1..=n)
            .map(|i| self.theta_xi_ell_closed(i).expect("in range"))
            .collect();
        let mut out = LaurentElem::zero(self);
        for s in enumerate_j(n) {
            let coeff = s.indices().iter().fold(self.one_coeff(), |acc, &i| {
                &acc * &self.tau_tilde(i).expect("index from J")
            });
            let mut term = LaurentElem::scalar(self, coeff);
            for (ai, &k) in a.iter().zip(&s.delta_minus_eps(n)) {
                if k > 0 {
                    term = term.lmul(&ai.pow(k as u32));
                }
            }
            out = &out + &term;
        }
        out
    }

    pub fn leftside_identity_check(&self) -> bool {
        self.leftside() == self.center_relation_target()
    }

    /// Σ_r (−1)^{nr} ζ^{(n−2)r} ν_r (τ_1⋯τ_n)^r b̃^{ℓ−2r} with b̃ = Θ(w) in closed form.
    pub fn rightside(&self) -> LaurentElem {
        let n = self.n() as i64;
        let ell = self.ell();
        let b = self.theta_w_closed();
        let tau_prod = self.deformation().tau_product();
        let mut out = LaurentElem::zero(self);
        for (r, nu_r) in chebyshev::nu_list(ell)
            .expect("ell >= 2")
            .into_iter()
            .enumerate()
        {
            let sign = if (n * r as i64) % 2 == 0 { 1 } else { -1 };
            let coeff =
                tau_prod
                    .pow(r as u32)
                    .scale(&self.field().from_rational(
                        nu_r * crate::cyclotomic::Rational::from_integer(sign.into()),
                    ))
                    .scale_zeta((n - 2) * r as i64);
            out = &out + &b.pow(ell - 2 * r as u32).scale(&coeff);
        }
        out
    }

    pub fn rightside_identity_check(&self) -> bool {
        self.rightside() == self.center_relation_target()
    }

    /// Image of a polynomial in (ξ, σ) under ξ ↦ y_1⋯y_n, σ ↦ (−1)^n ζ^{n−2} τ_1⋯τ_n.
    pub fn specialize_rho_poly(&self, p: &IntPoly) -> LaurentElem {
        let n = self.n();
        let sign = if n.is_multiple_of(2) { 1 } else { -1 };
        let sigma = self
            .deformation()
            .tau_product()
            .scale(&self.field().from_integer(sign))
            .scale_zeta(n as i64 - 2);
        LaurentElem::from_terms(
            self,
            p.terms().map(|(e, c)| {
                assert!(e[1] >= 0, "sigma appears with nonnegative powers only");
                let q = vec![e[0] as i32; n];
                (
                    LaurentMonomial::new(&q, self.group().identity()),
                    sigma
                        .pow(e[1] as u32)
                        .scale(&self.field().from_rational(c.clone())),
                )
            }),
        )
    }

    /// True iff `z` commutes with every y_j and every g_j.
    pub fn is_central_laurent(&self, z: &LaurentElem) -> bool {
        let n = self.n();
        (1..=n).all(|j| z.commutator(&self.y(j, 1).expect("in range")).is_zero())
            && (1..n).all(|j| z.commutator(&self.lg(j).expect("in range")).is_zero())
    }

    /// For every x^p g with Σp ≤ `max_degree`: Θ(x^p g) = y^p g + (terms of lower total degree).
    pub fn injectivity_spotcheck(&self, max_degree: u32) -> Evidence {
        let n = self.n();
        let mut checked = 0;
        let mut last_p: Option<[u16; MAX_N]> = None;
        let mut theta_p = LaurentElem::zero(self);
        for m in self.pbw_monomials(max_degree) {
            if last_p != Some(*m.exponents()) {
                let head = HeckeElem::monomial(
                    self,
                    crate::hecke::PbwMonomial::new(&m.exponents()[..n], self.group().identity()),
                    self.one_coeff(),
                );
                theta_p = self.theta(&head);
                last_p = Some(*m.exponents());
            }
            let image = theta_p.lmul(&self.laurent_group_element(*m.group()));
            let q: Vec<i32> = m.exponents()[..n].iter().map(|&k| k as i32).collect();
            let lead = LaurentMonomial::new(&q, *m.group());
            checked += 1;
            if !image.coefficient(&lead).is_one() {
                return Evidence {
                    checked,
                    failure: Some(format!("leading coefficient of Θ({m:?}) is not 1")),
                };
            }
            let degree = lead.total_degree();
            if image
                .terms()
                .any(|(t, _)| *t != lead && t.total_degree() >= degree)
            {
                return Evidence {
                    checked,
                    failure: Some(format!("Θ({m:?}) has a second term of degree >= {degree}")),
                };
            }
        }
        Evidence {
            checked,
            failure: None,
        }
    }
}
