//! Central elements of H and the relation between them: the index sets I and
//! J, the element w, x_i^ℓ, the polynomial F, and the finite checks built on them.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{Algebra, AlgebraError};
use crate::chebyshev;
use crate::coeffring::ParamPoly;
use crate::cyclotomic::Rational;
use crate::render::{self, Term};

use super::{HeckeElem, PbwMonomial};

/// A subset {i_1 < ⋯ < i_k} of {1, …, n}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleSubset {
    indices: Vec<usize>,
}

impl CycleSubset {
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        CycleSubset { indices }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// No two members are adjacent in the n-cycle: |i_r − i_s| ∉ {1, n−1}.
    pub fn is_independent(&self, n: usize) -> bool {
        self.indices.iter().enumerate().all(|(r, &a)| {
            self.indices[r + 1..].iter().all(|&b| {
                let d = a.abs_diff(b);
                d != 1 && d != n - 1
            })
        })
    }

    /// δ − ε_{i_1} − ⋯ − ε_{i_k}, where ε_i has ones in positions i and i+1 (mod n).
    pub fn delta_minus_eps(&self, n: usize) -> Vec<i64> {
        let mut v = vec![1i64; n];
        for &i in &self.indices {
            v[i - 1] -= 1;
            v[i % n] -= 1;
        }
        v
    }
}

impl fmt::Display for CycleSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// All subsets of {1, …, n}, by size and then lexicographically.
pub fn enumerate_i(n: usize) -> Vec<CycleSubset> {
    assert!(n < usize::BITS as usize);
    let mut all: Vec<CycleSubset> = (0u64..1 << n)
        .map(|mask| {
            CycleSubset::new(
                (0..n)
                    .filter(|b| mask >> b & 1 == 1)
                    .map(|b| b + 1)
                    .collect(),
            )
        })
        .collect();
    all.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.indices.cmp(&b.indices))
    });
    all
}

/// The independent sets of the n-cycle, including the empty set.
pub fn enumerate_j(n: usize) -> Vec<CycleSubset> {
    enumerate_i(n)
        .into_iter()
        .filter(|s| s.is_independent(n))
        .collect()
}

/// Outcome of a centrality test; a failure names the generator and carries
/// the nonzero commutator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Centrality {
    Central,
    NotCentral {
        generator: String,
        commutator: HeckeElem,
    },
}

impl Centrality {
    pub fn is_central(&self) -> bool {
        matches!(self, Centrality::Central)
    }
}

/// A commutative polynomial in a_1, …, a_n, b with ParamPoly coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct CenterPoly {
    n: usize,
    terms: BTreeMap<Vec<u32>, ParamPoly>,
}

impl CenterPoly {
    pub fn zero(n: usize) -> Self {
        CenterPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// Adds c · a^{a_exps} b^{b_exp}.
    pub fn add_term(&mut self, a_exps: &[u32], b_exp: u32, c: ParamPoly) {
        assert_eq!(a_exps.len(), self.n);
        if c.is_zero() {
            return;
        }
        let mut key = a_exps.to_vec();
        key.push(b_exp);
        let slot = self
            .terms
            .entry(key.clone())
            .or_insert_with(|| ParamPoly::zero(c.field(), c.nvars()));
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], u32, &ParamPoly)> {
        self.terms.iter().map(|(k, c)| (&k[..self.n], k[self.n], c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Substitutes a_i ↦ `a[i]` and b ↦ `b`; the images must commute.
    pub fn evaluate(&self, a: &[HeckeElem], b: &HeckeElem) -> HeckeElem {
        assert_eq!(a.len(), self.n);
        let alg = b.algebra();
        let mut b_powers = vec![HeckeElem::one(alg)];
        let mut out = HeckeElem::zero(alg);
        for (a_exps, b_exp, c) in self.terms() {
            while b_powers.len() <= b_exp as usize {
                let next = b_powers.last().unwrap().mul(b);
                b_powers.push(next);
            }
            let mut term = HeckeElem::scalar(alg, c.clone());
            for (ai, &k) in a.iter().zip(a_exps) {
                for _ in 0..k {
                    term = term.mul(ai);
                }
            }
            term = term.mul(&b_powers[b_exp as usize]);
            out = &out + &term;
        }
        out
    }
}

impl fmt::Display for CenterPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().rev().map(|(k, c)| {
            let mut factors: Vec<String> = k[..self.n]
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| render::power(&format!("a{}", i + 1), e as i64))
                .collect();
            if k[self.n] > 0 {
                factors.push(render::power("b", k[self.n] as i64));
            }
            Term::times(c.coefficient_term(), factors)
        });
        f.write_str(&render::join_terms(terms))
    }
}

impl fmt::Debug for CenterPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CenterPoly({self})")
    }
}

/// Outcome of a bounded exhaustive check: how many cases ran and the first failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evidence {
    pub checked: usize,
    pub failure: Option<String>,
}

impl Evidence {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

/// All p ∈ ℕ^n with Σ p_i ≤ bound.
fn compositions(n: usize, bound: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for k in 0..=left {
            cur[i] = k;
            rec(i + 1, left - k, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, bound, &mut cur, &mut out);
    out
}

impl Algebra {
    /// w = Σ_{J} τ_{i_1}⋯τ_{i_k} x^{δ−ε_{i_1}−⋯−ε_{i_k}} g_{i_1} ∗ ⋯ ∗ g_{i_k}.
    pub fn w(&self) -> HeckeElem {
        let n = self.n();
        let group = self.group();
        let mut terms = Vec::new();
        for s in enumerate_j(n) {
            let mut coeff = self.one_coeff();
            let mut zeta_exp = 0u32;
            let mut g = group.identity();
            for &i in s.indices() {
                coeff = &coeff * &self.tau(i).expect("index from J");
                let (a, h) = group.star_mul_exponent(&g, &group.generator_mod(i));
                zeta_exp += a;
                g = h;
            }
            let v: Vec<u16> = s.delta_minus_eps(n).iter().map(|&k| k as u16).collect();
            terms.push((PbwMonomial::new(&v, g), coeff.scale_zeta(zeta_exp as i64)));
        }
        HeckeElem::from_terms(self, terms)
    }

    /// Tests z against the generators x_1, …, x_n and g_1, …, g_{n−1}.
    pub fn is_central(&self, z: &HeckeElem) -> Centrality {
        let gens = (1..=self.n())
            .map(|i| (format!("x{i}"), self.x(i).expect("in range")))
            .chain((1..self.n()).map(|j| (format!("g{j}"), self.g(j).expect("in range"))));
        for (name, gen) in gens {
            let c = z.commutator(&gen);
            if !c.is_zero() {
                return Centrality::NotCentral {
                    generator: name,
                    commutator: c,
                };
            }
        }
        Centrality::Central
    }

    /// F = Σ_J τ̃_{i_1}⋯τ̃_{i_k} a^{δ−Σε} − Σ_r (−1)^{nr} ζ^{(n−2)r} ν_r (τ_1⋯τ_n)^r b^{ℓ−2r}.
    pub fn relation_polynomial(&self) -> CenterPoly {
        let n = self.n();
        let ell = self.ell();
        let mut f = CenterPoly::zero(n);
        for s in enumerate_j(n) {
            let coeff = s.indices().iter().fold(self.one_coeff(), |acc, &i| {
                &acc * &self.tau_tilde(i).expect("index from J")
            });
            let a: Vec<u32> = s.delta_minus_eps(n).iter().map(|&k| k as u32).collect();
            f.add_term(&a, 0, coeff);
        }
        let tau_prod = self.deformation().tau_product();
        for (r, nu_r) in chebyshev::nu_list(ell)
            .expect("ell >= 2")
            .into_iter()
            .enumerate()
        {
            let r = r as u32;
            let sign = if (n as u32 * r) % 2 == 1 { -1 } else { 1 };
            let scalar = self
                .field()
                .from_rational(nu_r)
                .scale(&Rational::from_integer(sign.into()));
            let coeff = tau_prod
                .pow(r)
                .scale(&scalar)
                .scale_zeta((n as i64 - 2) * r as i64);
            f.add_term(&vec![0; n], ell - 2 * r, -&coeff);
        }
        f
    }

    /// F(x_1^ℓ, …, x_n^ℓ, w), which vanishes in H.
    pub fn evaluate_f(&self) -> HeckeElem {
        let a: Vec<HeckeElem> = (1..=self.n())
            .map(|i| self.x_pow_ell(i).expect("in range"))
            .collect();
        self.relation_polynomial().evaluate(&a, &self.w())
    }

    /// For every x^{ℓp} w^m with 0 ≤ m < ℓ and ℓΣp_i + mn ≤ `max_total_degree`, checks that
    /// the PBW expansion contains x^{ℓp + mδ} (group part 1) with nonzero coefficient.
    pub fn pbw_independence_evidence(&self, max_total_degree: u32) -> Evidence {
        let n = self.n();
        let ell = self.ell();
        let w = self.w();
        let mut w_pow = HeckeElem::one(self);
        let mut leading = std::collections::BTreeSet::new();
        let mut checked = 0;
        for m in 0..ell {
            if m > 0 {
                w_pow = w_pow.mul(&w);
            }
            let used = m * n as u32;
            if used > max_total_degree {
                break;
            }
            for p in compositions(n, (max_total_degree - used) / ell) {
                let xp: Vec<u16> = p.iter().map(|&k| (k * ell) as u16).collect();
                let head = HeckeElem::monomial(
                    self,
                    PbwMonomial::new(&xp, self.group().identity()),
                    self.one_coeff(),
                );
                let product = head.mul(&w_pow);
                let lead_p: Vec<u16> = p.iter().map(|&k| (k * ell + m) as u16).collect();
                let lead = PbwMonomial::new(&lead_p, self.group().identity());
                checked += 1;
                if product.coefficient(&lead).is_zero() {
                    return Evidence {
                        checked,
                        failure: Some(format!(
                            "x^{:?} * w^{m} lacks its leading monomial {lead:?}",
                            xp
                        )),
                    };
                }
                if product.total_degree() != Some(lead.total_degree()) {
                    return Evidence {
                        checked,
                        failure: Some(format!("x^{:?} * w^{m} has degree above {lead:?}", xp)),
                    };
                }
                if !leading.insert(lead) {
                    return Evidence {
                        checked,
                        failure: Some(format!("leading monomial {lead:?} repeats")),
                    };
                }
            }
        }
        Evidence {
            checked,
            failure: None,
        }
    }

    /// For n = 3, with φ_i = x_i g_{i+1}: φ_i φ_{i+1} − ζ φ_{i+1} φ_i = ζ t_i for every i.
    pub fn sklyanin_check(&self) -> Result<bool, AlgebraError> {
        if self.n() != 3 {
            return Err(AlgebraError::Unsupported {
                required: 3,
                n: self.n(),
            });
        }
        let zeta = self.deformation().zeta_power(1);
        let phi = |i: usize| -> HeckeElem {
            let i = (i - 1) % 3 + 1;
            let next = i % 3 + 1;
            self.x(i)
                .expect("in range")
                .mul(&self.g(next).expect("in range"))
        };
        for i in 1..=3 {
            let (a, b) = (phi(i), phi(i + 1));
            let lhs = &a.mul(&b) - &b.mul(&a).scale(&zeta);
            let rhs = HeckeElem::scalar(self, &zeta * self.t(i));
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every PBW monomial x^p g with Σp ≤ `max_degree`.
    pub fn pbw_monomials(&self, max_degree: u32) -> Vec<PbwMonomial> {
        let mut out = Vec::new();
        for p in compositions(self.n(), max_degree) {
            let p: Vec<u16> = p.iter().map(|&k| k as u16).collect();
            for g in self.group().elements() {
                out.push(PbwMonomial::new(&p, g));
            }
        }
        out
    }
}
