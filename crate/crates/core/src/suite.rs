//! The verification suite for one configuration (n, ℓ, t) and the default grid.
//!
//! Every check gets its own RNG seeded from the configuration seed and the
//! check's position, so results do not depend on the order checks run in;
//! they are evaluated in parallel and reported in the fixed order below.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError};
use crate::chebyshev;
use crate::coeffring::ParamPoly;
use crate::cyclotomic::{CyclotomicField, Rational};
use crate::expr::{self, ExprError};
use crate::group::{Group, GroupElem};
use crate::hecke::{CenterPoly, Centrality, HeckeElem, PbwMonomial};
use crate::laurent::{LaurentElem, LaurentMonomial};

/// Grid used by `grid` and by the acceptance tests.
pub const GRID_N: [usize; 3] = [3, 4, 5];
pub const GRID_ELL: [u32; 3] = [2, 3, 4];
pub const DEFAULT_DEGREE_BOUND: u32 = 8;
pub const DEFAULT_SEED: u64 = 0;

/// Number of random (a, b) pairs for the Θ homomorphism check.
pub const HOMOMORPHISM_SAMPLES: usize = 200;
/// Number of random elements per algebra for the render/parse fixpoint.
pub const ROUNDTRIP_SAMPLES: usize = 100;
const ASSOCIATIVITY_SAMPLES: usize = 30;
/// Groups up to this order get the all-triples cocycle check; larger ones are sampled.
pub const COCYCLE_EXHAUSTIVE_MAX_ORDER: u64 = 512;
const COCYCLE_SAMPLES: usize = 200_000;
/// Θ of a degree-d monomial has up to 2^d terms, so the triangularity check is capped.
pub const INJECTIVITY_MAX_DEGREE: u32 = 4;
const CHEBYSHEV_MAX_ELL: u32 = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TMode {
    Symbolic,
    /// Literal values for t_1, …, t_n, each an expression in rationals and `zeta`.
    Specialized(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Config {
    pub n: usize,
    pub ell: u32,
    pub t_mode: TMode,
    pub degree_bound: u32,
    pub seed: u64,
}

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("value for t{index}: {source}")]
    Value { index: usize, source: ExprError },
    #[error("expected {expected} values for t, got {got}")]
    Arity { expected: usize, got: usize },
}

impl Config {
    pub fn symbolic(n: usize, ell: u32) -> Self {
        Config {
            n,
            ell,
            t_mode: TMode::Symbolic,
            degree_bound: DEFAULT_DEGREE_BOUND,
            seed: DEFAULT_SEED,
        }
    }

    pub fn algebra(&self) -> Result<Algebra, ConfigError> {
        match &self.t_mode {
            TMode::Symbolic => Ok(Algebra::symbolic(self.n, self.ell)?),
            TMode::Specialized(values) => {
                if values.len() != self.n {
                    return Err(ConfigError::Arity {
                        expected: self.n,
                        got: values.len(),
                    });
                }
                let field = CyclotomicField::new(self.ell).map_err(AlgebraError::from)?;
                let parsed = values
                    .iter()
                    .enumerate()
                    .map(|(i, v)| {
                        expr::parse_scalar(&field, v).map_err(|source| ConfigError::Value {
                            index: i + 1,
                            source,
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Algebra::specialized(self.n, self.ell, parsed)?)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub ok: bool,
}

impl Summary {
    fn of<'a>(checks: impl IntoIterator<Item = &'a CheckResult>) -> Self {
        let mut s = Summary {
            passed: 0,
            failed: 0,
            skipped: 0,
            ok: true,
        };
        for c in checks {
            match c.status {
                Status::Pass => s.passed += 1,
                Status::Fail => s.failed += 1,
                Status::Skipped => s.skipped += 1,
            }
        }
        s.ok = s.failed == 0;
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub config: Config,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.summary.ok
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridReport {
    pub reports: Vec<Report>,
    pub summary: Summary,
}

/// Outcome of one check: `Ok(None)` passes, `Ok(Some(reason))` is skipped,
/// `Err(witness)` fails.
type Outcome = Result<Option<String>, String>;

type CheckFn = fn(&Algebra, &Config, &mut ChaCha8Rng) -> Outcome;

/// The checks, in reporting order.
pub const CHECK_NAMES: [&str; 22] = [
    "cocycle",
    "g_n_star_power",
    "action_character",
    "defining_relations",
    "associativity",
    "theta_homomorphism",
    "theta_x_pow_ell_closed_form",
    "theta_w_closed_form",
    "w_leading_term",
    "central_x_pow_ell",
    "central_w",
    "x1_not_central",
    "laurent_centrality",
    "leftside_identity",
    "rightside_identity",
    "rho_substitution",
    "chebyshev_identities",
    "relation_f_zero",
    "pbw_independence",
    "injectivity_spotcheck",
    "sklyanin",
    "parser_roundtrip",
];

const CHECKS: [CheckFn; 22] = [
    check_cocycle,
    check_g_n_star_power,
    check_action_character,
    check_defining_relations,
    check_associativity,
    check_theta_homomorphism,
    check_theta_x_pow_ell,
    check_theta_w,
    check_w_leading_term,
    check_central_x_pow_ell,
    check_central_w,
    check_x1_not_central,
    check_laurent_centrality,
    check_leftside,
    check_rightside,
    check_rho_substitution,
    check_chebyshev,
    check_relation,
    check_pbw_independence,
    check_injectivity,
    check_sklyanin,
    check_parser_roundtrip,
];

fn check_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64 + 1);
    rng
}

/// Runs every check on one configuration.
pub fn run_suite(cfg: &Config) -> Result<Report, ConfigError> {
    let alg = cfg.algebra()?;
    let checks: Vec<CheckResult> = CHECKS
        .par_iter()
        .enumerate()
        .map(|(index, f)| {
            let mut rng = check_rng(cfg.seed, index);
            let start = Instant::now();
            let outcome = f(&alg, cfg, &mut rng);
            let ms = start.elapsed().as_millis() as u64;
            let (status, witness) = match outcome {
                Ok(None) => (Status::Pass, None),
                Ok(Some(reason)) => (Status::Skipped, Some(reason)),
                Err(w) => (Status::Fail, Some(w)),
            };
            CheckResult {
                name: CHECK_NAMES[index].to_string(),
                status,
                witness,
                ms,
            }
        })
        .collect();
    let summary = Summary::of(&checks);
    Ok(Report {
        config: cfg.clone(),
        checks,
        summary,
    })
}

/// The default grid {3,4,5} × {2,3,4} with symbolic t.
pub fn default_grid(degree_bound: u32, seed: u64) -> Vec<Config> {
    GRID_N
        .iter()
        .flat_map(|&n| {
            GRID_ELL.iter().map(move |&ell| Config {
                degree_bound,
                seed,
                ..Config::symbolic(n, ell)
            })
        })
        .collect()
}

pub fn run_grid(configs: &[Config]) -> Result<GridReport, ConfigError> {
    let reports = configs
        .par_iter()
        .map(run_suite)
        .collect::<Result<Vec<_>, _>>()?;
    let summary = Summary::of(reports.iter().flat_map(|r| &r.checks));
    Ok(GridReport { reports, summary })
}

fn ensure(cond: bool, witness: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(witness())
    }
}

fn pass() -> Outcome {
    Ok(None)
}

fn random_group_elem(group: &Group, rng: &mut ChaCha8Rng) -> GroupElem {
    let exps: Vec<i64> = (0..group.n() - 1)
        .map(|_| rng.gen_range(0..group.ell() as i64))
        .collect();
    group.from_exponents(&exps).expect("length n - 1")
}

/// A random nonzero coefficient: a small rational times a power of ζ times at most one t_i.
pub fn random_coefficient(alg: &Algebra, rng: &mut ChaCha8Rng) -> ParamPoly {
    let field = alg.field();
    let mut num = rng.gen_range(-4i64..=4);
    if num == 0 {
        num = 1;
    }
    let den = rng.gen_range(1i64..=3);
    let mut c = alg
        .deformation()
        .constant(field.from_rational(Rational::new(num.into(), den.into())))
        .scale_zeta(rng.gen_range(0..alg.ell() as i64));
    if rng.gen_bool(0.3) {
        c = &c + &alg.deformation().integer(rng.gen_range(-2..=2));
    }
    let k = rng.gen_range(0..=alg.n());
    if k > 0 {
        c = &c * alg.t(k);
    }
    c
}

/// A random sparse element with at most `max_terms` terms of total degree ≤ `max_degree`.
pub fn random_hecke(
    alg: &Algebra,
    rng: &mut ChaCha8Rng,
    max_degree: u32,
    max_terms: usize,
) -> HeckeElem {
    let n = alg.n();
    let count = rng.gen_range(1..=max_terms);
    HeckeElem::from_terms(
        alg,
        (0..count).map(|_| {
            let degree = rng.gen_range(0..=max_degree);
            let mut p = vec![0u16; n];
            for _ in 0..degree {
                p[rng.gen_range(0..n)] += 1;
            }
            let g = random_group_elem(alg.group(), rng);
            (PbwMonomial::new(&p, g), random_coefficient(alg, rng))
        }),
    )
}

/// A random sparse Laurent element with exponents in −2..=2.
pub fn random_laurent(alg: &Algebra, rng: &mut ChaCha8Rng, max_terms: usize) -> LaurentElem {
    let n = alg.n();
    let count = rng.gen_range(1..=max_terms);
    LaurentElem::from_terms(
        alg,
        (0..count).map(|_| {
            let q: Vec<i32> = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
            let g = random_group_elem(alg.group(), rng);
            (LaurentMonomial::new(&q, g), random_coefficient(alg, rng))
        }),
    )
}

fn check_cocycle(alg: &Algebra, _: &Config, rng: &mut ChaCha8Rng) -> Outcome {
    let group = alg.group();
    let show = |(g, h, k): (GroupElem, GroupElem, GroupElem)| format!("g = {g}, h = {h}, k = {k}");
    if group.order() <= COCYCLE_EXHAUSTIVE_MAX_ORDER {
        return group
            .cocycle_exhaustive()
            .map_or(Ok(None), |t| Err(show(t)));
    }
    for _ in 0..COCYCLE_SAMPLES {
        let t = (
            random_group_elem(group, rng),
            random_group_elem(group, rng),
            random_group_elem(group, rng),
        );
        if !group.cocycle_holds(&t.0, &t.1, &t.2) {
            return Err(show(t));
        }
    }
    pass()
}

fn check_g_n_star_power(alg: &Algebra, _: &Config, _: &mut ChaCha8Rng) -> Outcome {
    let (n, ell) = (alg.n(), alg.ell());
    let gn = alg.g(n).map_err(|e| e.to_string())?;
    let power = gn.pow(ell);
    let sign = if (n as u32 * (ell - 1)).is_multiple_of(2) {
        1
    } else {
        -1
    };
    let expected = HeckeElem::scalar(alg, alg.deformation().integer(sign));
    ensure(power == expected, || power.to_string())?;
    for i in 1..n {
        let p = alg.g(i).map_err(|e| e.to_string())?.pow(ell);
        ensure(p == HeckeElem::one(alg), || format!("g{i}^{ell} = {p}"))?;
    }
    pass()
}

fn check_action_character(alg: &Algebra, _: &Config, rng: &mut ChaCha8Rng) -> Outcome {
    let group = alg.group();
    let n = alg.n();
    let ell = alg.ell();
    let random_p =
        |rng: &mut ChaCha8Rng| -> Vec<i64> { (0..n).map(|_| rng.gen_range(-6..=6)).collect() };
    let elems: Vec<GroupElem> = group.elements().collect();
    let pairs: Vec<(GroupElem, GroupElem)> = if elems.len() * elems.len() <= 70_000 {
        elems
            .iter()
            .flat_map(|g| elems.iter().map(move |h| (*g, *h)))
            .collect()
    } else {
        (0..70_000)
            .map(|_| (random_group_elem(group, rng), random_group_elem(group, rng)))
            .collect()
    };
    for (g, h) in pairs {
        let p = random_p(rng);
        let q = random_p(rng);
        let gh = group.plain_mul(&g, &h);
        ensure(
            group.action_exponent(&gh, &p)
                == (group.action_exponent(&g, &p) + group.action_exponent(&h, &p)) % ell,
            || format!("chi_(gh) != chi_g chi_h at g = {g}, h = {h}, p = {p:?}"),
        )?;
        let pq: Vec<i64> = p.iter().zip(&q).map(|(a, b)| a + b).collect();
        ensure(
            group.action_exponent(&g, &pq)
                == (group.action_exponent(&g, &p) + group.action_exponent(&g, &q)) % ell,
            || format!("chi_g(p + q) != chi_g(p) chi_g(q) at g = {g}, p = {p:?}, q = {q:?}"),
        )?;
    }
    pass()
}

fn check_defining_relations(alg: &Algebra, _: &Config, _: &mut ChaCha8Rng) -> Outcome {
    let n = alg.n();
    let x = |i| alg.x(i).expect("in range");
    let g = |i| alg.g(i).expect("in range");
    for i in 1..=n {
        for j in 1..=n {
            let c = x(i).commutator(&x(j));
            let expected = if j == i % n + 1 {
                HeckeElem::scalar(alg, alg.t(i).clone()).mul(&g(i))
            } else if i == j % n + 1 {
                -&HeckeElem::scalar(alg, alg.t(j).clone()).mul(&g(j))
            } else {
                HeckeElem::zero(alg)
            };
            ensure(c == expected, || format!("[x{i}, x{j}] = {c}"))?;
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            let mut unit = vec![0i64; n];
            unit[j - 1] = 1;
            let gi = alg.group().generator(i).expect("in range");
            let chi = alg.group().action_exponent(&gi, &unit) as i64;
            let lhs = g(i).mul(&x(j));
            let rhs =
                HeckeElem::scalar(alg, alg.deformation().zeta_power(chi)).mul(&x(j).mul(&g(i)));
            ensure(lhs == rhs, || format!("g{i}*x{j} = {lhs}"))?;
        }
    }
    pass()
}

fn check_associativity(alg: &Algebra, _: &Config, rng: &mut ChaCha8Rng) -> Outcome {
    for _ in 0..ASSOCIATIVITY_SAMPLES {
        let a = random_hecke(alg, rng, 3, 3);
        let b = random_hecke(alg, rng, 3, 3);
        let c = random_hecke(alg, rng, 3, 3);
        ensure(a.mul(&b).mul(&c) == a.mul(&b.mul(&c)), || {
            format!("a = {a}; b = {b}; c = {c}")
        })?;
    }
    pass()
}

fn check_theta_homomorphism(alg: &Algebra, _: &Config, rng: &mut ChaCha8Rng) -> Outcome {
    for _ in 0..HOMOMORPHISM_SAMPLES {
        let a = random_hecke(alg, rng, 3, 3);
        let b = random_hecke(alg, rng, 3, 3);
        ensure(
            alg.theta(&a.mul(&b)) == alg.theta(&a).lmul(&alg.theta(&b)),
            || format!("a = {a}; b = {b}"),
        )?;
    }
    pass()
}

fn check_theta_x_pow_ell(alg: &Algebra, _: &Config, _: &mut ChaCha8Rng) -> Outcome {
    for i in 1..=alg.n() {
        let lhs = alg.theta(&alg.x_pow_ell(i).expect("in range"));
        let rhs = alg.theta_xi_ell_closed(i).expect("in range");
        ensure(lhs == rhs, || {
            format!("i = {i}: difference {}", &lhs - &rhs)
        })?;
    }
    pass()
}

fn check_theta_w(alg: &Algebra, _: &Config, _: &mut ChaCha8Rng) -> Outcome {
    let lhs = alg.theta(&alg.w());
    let rhs = alg.theta_w_closed();
    ensure(lhs == rhs, || format!("difference {}", &lhs - &rhs))?;
    pass()
}

fn product_of_x(alg: &Algebra) -> HeckeElem {
    HeckeElem::monomial(
        alg,
        PbwMonomial::new(&vec![1; alg.n()], alg.group().identity()),
        alg.one_coeff(),
    )
}

fn all_t_zero(alg: &Algebra) -> bool {
    (1..=alg.n()).all(|i| alg.t(i).is_zero())
}

fn check_w_leading_term(alg: &Algebra, _: &Config, _: &mut ChaCha8Rng) -> Outcome {
    let w = alg.w();
    let top = w.top_part();
    ensure(top == product_of_x(alg), || {
        format!("top part of w is {top}")
    })?;
    if all_t_zero(alg) {
        ensure(w == product_of_x(alg), || format!("undeformed w = {w}"))?;
    }
    pass()
}

fn centrality_witness(c: Centrality) -> Result<(), String> {
    match c {
        Centrality::Central => Ok(()),
        Centrality::NotCentral {
            generator,
            commutator,
        } => Err(format!("[z, {generator}] = {commutator}")),
    }
}

fn check_central_x_pow_ell(alg: &Algebra, _: &Config, _: &mut ChaCha8Rng) -> Outcome {
    for i in 1..=alg.n() {
        centrality_witness(alg.is_central(&alg.x_pow_ell(i).expect("in range")))
            .map_err(|w| format!("x{i}^l: {w}"))?;
    }
    pass()
}

fn check_central_w(alg: &Algebra, _: &Config, _: &mut ChaCha8Rng) -> Outcome {
    centrality_witness(alg.is_central(&alg.w()))?;
    pass()
}

fn check_x1_not_central(alg: &Algebra, _: &Config, _: &mut ChaCha8Rng) -> Outcome {
    let x1 = alg.x(1).expect("in range");
    let expected = HeckeElem::scalar(alg, alg.t(1).clone()).mul(&alg.g(1).expect("in range"));
    match alg.is_central(&x1) {
        Centrality::Central => Err("x1 reported central".into()),
        Centrality::NotCentral { commutator, .. }
            if !expected.is_zero() && commutator != expected =>
        {
            Err(format!("witness {commutator}, expected {expected}"))
        }
        Centrality::NotCentral { .. } => pass(),
    }
}

fn check_laurent_centrality(alg: &Algebra, _: &Config, _: &mut ChaCha8Rng) -> Outcome {
    for i in 1..=alg.n() {
        ensure(
            alg.is_central_laurent(&alg.theta_xi_ell_closed(i).expect("in range")),
            || format!("closed form of Theta(x{i}^l) is not central"),
        )?;
    }
    ensure(alg.is_central_laurent(&alg.theta_w_closed()), || {
        "closed form of Theta(w) is not central".into()
    })?;
    pass()
}

fn check_leftside(alg: &Algebra, _: &Config, _: &mut ChaCha8Rng) -> Outcome {
    let lhs = alg.leftside();
    let rhs = alg.center_relation_target();
    ensure(lhs == rhs, || format!("difference {}", &lhs - &rhs))?;
    pass()
}

fn check_rightside(alg: &Algebra, _: &Config, _: &mut ChaCha8Rng) -> Outcome {
    let lhs = alg.rightside();
    let rhs = alg.center_relation_target();
    ensure(lhs == rhs, || format!("difference {}", &lhs - &rhs))?;
    pass()
}

fn check_rho_substitution(alg: &Algebra, _: &Config, _: &mut ChaCha8Rng) -> Outcome {
    let (lhs, rhs) = chebyshev::rho_identity_sides(alg.ell()).map_err(|e| e.to_string())?;
    let l = alg.specialize_rho_poly(&lhs);
    let r = alg.specialize_rho_poly(&rhs);
    ensure(l == alg.center_relation_target(), || {
        format!("left side maps to {l}")
    })?;
    ensure(r == alg.rightside(), || format!("right side maps to {r}"))?;
    pass()
}

fn check_chebyshev(alg: &Algebra, _: &Config, _: &mut ChaCha8Rng) -> Outcome {
    let err = |e: chebyshev::ChebyshevError| e.to_string();
    for ell in (1..=CHEBYSHEV_MAX_ELL).chain([alg.ell()]) {
        ensure(chebyshev::identity_che1(ell).map_err(err)?, || {
            format!("che1 fails at l = {ell}")
        })?;
        ensure(chebyshev::identity_che2(ell).map_err(err)?, || {
            format!("che2 fails at l = {ell}")
        })?;
        ensure(chebyshev::identity_rho(ell).map_err(err)?, || {
            format!("rho identity fails at l = {ell}")
        })?;
        for (r, v) in chebyshev::nu_list(ell).map_err(err)?.iter().enumerate() {
            ensure(v.is_integer(), || {
                format!("nu({ell}, {r}) = {v} is not an integer")
            })?;
        }
    }
    pass()
}

fn check_relation(alg: &Algebra, _: &Config, _: &mut ChaCha8Rng) -> Outcome {
    let f = alg.evaluate_f();
    ensure(f.is_zero(), || f.to_string())?;
    if all_t_zero(alg) {
        let mut expected = CenterPoly::zero(alg.n());
        expected.add_term(&vec![1; alg.n()], 0, alg.one_coeff());
        expected.add_term(&vec![0; alg.n()], alg.ell(), -&alg.one_coeff());
        let poly = alg.relation_polynomial();
        ensure(poly == expected, || format!("undeformed F = {poly}"))?;
    }
    pass()
}

fn check_pbw_independence(alg: &Algebra, cfg: &Config, _: &mut ChaCha8Rng) -> Outcome {
    let ev = alg.pbw_independence_evidence(cfg.degree_bound);
    ev.failure.map_or(Ok(None), Err)
}

fn check_injectivity(alg: &Algebra, cfg: &Config, _: &mut ChaCha8Rng) -> Outcome {
    let ev = alg.injectivity_spotcheck(cfg.degree_bound.min(INJECTIVITY_MAX_DEGREE));
    ev.failure.map_or(Ok(None), Err)
}

fn check_sklyanin(alg: &Algebra, _: &Config, _: &mut ChaCha8Rng) -> Outcome {
    if alg.n() != 3 {
        return Ok(Some("requires n = 3".into()));
    }
    let ok = alg.sklyanin_check().map_err(|e| e.to_string())?;
    ensure(ok, || {
        "phi_i phi_(i+1) - zeta phi_(i+1) phi_i != zeta t_i".into()
    })?;
    pass()
}

fn check_parser_roundtrip(alg: &Algebra, _: &Config, rng: &mut ChaCha8Rng) -> Outcome {
    for _ in 0..ROUNDTRIP_SAMPLES {
        let h = random_hecke(alg, rng, 4, 5);
        let text = h.to_string();
        let back = expr::parse_hecke(alg, &text).map_err(|e| format!("{text}: {e}"))?;
        ensure(back == h && back.to_string() == text, || {
            format!("{text} reparsed as {back}")
        })?;
        let l = random_laurent(alg, rng, 5);
        let text = l.to_string();
        let back = expr::parse_laurent(alg, &text).map_err(|e| format!("{text}: {e}"))?;
        ensure(back == l && back.to_string() == text, || {
            format!("{text} reparsed as {back}")
        })?;
    }
    pass()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let mut names = CHECK_NAMES.to_vec();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), CHECKS.len());
    }

    #[test]
    fn smallest_configuration_passes() {
        let report = run_suite(&Config::symbolic(3, 2)).unwrap();
        for c in &report.checks {
            assert_ne!(c.status, Status::Fail, "{}: {:?}", c.name, c.witness);
        }
        assert_eq!(report.check("sklyanin").unwrap().status, Status::Pass);
        assert!(report.ok());
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let cfg = Config::symbolic(3, 3);
        let strip = |r: Report| -> Vec<(String, Status, Option<String>)> {
            r.checks
                .into_iter()
                .map(|c| (c.name, c.status, c.witness))
                .collect()
        };
        assert_eq!(
            strip(run_suite(&cfg).unwrap()),
            strip(run_suite(&cfg).unwrap())
        );
        let mut rng_a = check_rng(7, 3);
        let mut rng_b = check_rng(7, 3);
        let alg = cfg.algebra().unwrap();
        assert_eq!(
            random_hecke(&alg, &mut rng_a, 3, 3),
            random_hecke(&alg, &mut rng_b, 3, 3)
        );
    }

    #[test]
    fn specialized_zero_configuration() {
        let cfg = Config {
            t_mode: TMode::Specialized(vec!["0".into(); 3]),
            ..Config::symbolic(3, 2)
        };
        let report = run_suite(&cfg).unwrap();
        assert!(
            report.ok(),
            "{:?}",
            report
                .checks
                .iter()
                .filter(|c| c.status == Status::Fail)
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn specialized_values_are_parsed() {
        let cfg = Config {
            t_mode: TMode::Specialized(vec!["1".into(), "zeta".into(), "1/2 - zeta^2".into()]),
            ..Config::symbolic(3, 3)
        };
        let alg = cfg.algebra().unwrap();
        assert_eq!(alg.t(2), &alg.deformation().zeta_power(1));
        let bad = Config {
            t_mode: TMode::Specialized(vec!["1".into(), "t1".into(), "0".into()]),
            ..cfg.clone()
        };
        assert!(matches!(
            bad.algebra(),
            Err(ConfigError::Value { index: 2, .. })
        ));
        let short = Config {
            t_mode: TMode::Specialized(vec!["1".into()]),
            ..cfg
        };
        assert!(matches!(
            short.algebra(),
            Err(ConfigError::Arity {
                expected: 3,
                got: 1
            })
        ));
        assert!(Config::symbolic(2, 3).algebra().is_err());
        assert!(Config::symbolic(3, 1).algebra().is_err());
    }

    #[test]
    fn report_serializes_to_schema() {
        let report = run_suite(&Config::symbolic(3, 2)).unwrap();
        let v = serde_json::to_value(&report).unwrap();
        assert_eq!(v["config"]["n"], 3);
        assert_eq!(v["config"]["t_mode"], "symbolic");
        assert_eq!(v["checks"].as_array().unwrap().len(), CHECK_NAMES.len());
        assert_eq!(v["checks"][0]["name"], "cocycle");
        assert_eq!(v["checks"][0]["status"], "pass");
        assert!(v["checks"][0].get("witness").is_none());
        assert!(v["checks"][0]["ms"].is_u64());
        assert_eq!(v["summary"]["ok"], true);
    }
}
