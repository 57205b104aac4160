use proptest::prelude::*;

use super::*;
use crate::algebra::Algebra;

fn alg(n: usize, ell: u32) -> Algebra {
    Algebra::symbolic(n, ell).unwrap()
}

fn x(a: &Algebra, i: usize) -> HeckeElem {
    a.x(i).unwrap()
}

fn g(a: &Algebra, i: usize) -> HeckeElem {
    a.g(i).unwrap()
}

fn coeff(a: &Algebra, c: ParamPoly) -> HeckeElem {
    HeckeElem::scalar(a, c)
}

#[test]
fn x2_x1_reorders_with_t1_g1() {
    let a = alg(3, 2);
    let lhs = &x(&a, 2) * &x(&a, 1);
    let rhs = &(&x(&a, 1) * &x(&a, 2)) - &(&coeff(&a, a.t(1).clone()) * &g(&a, 1));
    assert_eq!(lhs, rhs);
    assert_eq!(lhs.to_string(), "x1*x2 - t1*g1");
}

#[test]
fn nonadjacent_generators_commute() {
    let a = alg(4, 3);
    assert_eq!(&x(&a, 3) * &x(&a, 1), &x(&a, 1) * &x(&a, 3));
    assert_eq!((&x(&a, 3) * &x(&a, 1)).to_string(), "x1*x3");
    assert!(x(&a, 1).commutator(&x(&a, 3)).is_zero());
}

#[test]
fn wraparound_pair_has_plus_sign() {
    for n in 3..=5 {
        let a = alg(n, 3);
        let lhs = &x(&a, n) * &x(&a, 1);
        let rhs = &(&x(&a, 1) * &x(&a, n)) + &(&coeff(&a, a.t(n).clone()) * &g(&a, n));
        assert_eq!(lhs, rhs, "n = {n}");
    }
}

#[test]
fn group_acts_on_x() {
    let a = alg(3, 3);
    let z = ParamPoly::zeta_power(a.field(), 3, 1);
    assert_eq!(
        &g(&a, 1) * &x(&a, 1),
        &coeff(&a, z) * &(&x(&a, 1) * &g(&a, 1))
    );
    assert_eq!((&g(&a, 1) * &x(&a, 1)).to_string(), "zeta*x1*g1");
}

#[test]
fn defining_relations_hold_for_all_pairs() {
    for (n, ell) in [(3, 2), (4, 3), (5, 4)] {
        let a = alg(n, ell);
        for i in 1..=n {
            for j in 1..=n {
                let c = x(&a, i).commutator(&x(&a, j));
                let expected = if j == i % n + 1 {
                    &coeff(&a, a.t(i).clone()) * &g(&a, i)
                } else if i == j % n + 1 {
                    -&(&coeff(&a, a.t(j).clone()) * &g(&a, j))
                } else {
                    HeckeElem::zero(&a)
                };
                assert_eq!(c, expected, "n={n} l={ell} [x{i}, x{j}]");
            }
        }
    }
}

#[test]
fn gen_g_n_is_all_ell_minus_one() {
    let a = alg(4, 3);
    let gn = g(&a, 4);
    let (m, c) = gn.terms().next().unwrap();
    assert!(c.is_one());
    assert_eq!(a.group().exponents(m.group()), vec![2, 2, 2]);
}

#[test]
fn enumerate_j_counts_match_brute_force() {
    for n in 3..=8usize {
        let brute = (0u32..1 << n)
            .filter(|mask| (0..n).all(|i| !(mask >> i & 1 == 1 && mask >> ((i + 1) % n) & 1 == 1)))
            .count();
        assert_eq!(enumerate_j(n).len(), brute, "n = {n}");
        assert_eq!(enumerate_i(n).len(), 1 << n);
    }
    assert_eq!(enumerate_j(3).len(), 4);
    assert_eq!(enumerate_j(4).len(), 7);
    assert_eq!(enumerate_j(5).len(), 11);
    let j4: Vec<String> = enumerate_j(4).iter().map(|s| s.to_string()).collect();
    assert!(j4.contains(&"{1,3}".to_string()) && j4.contains(&"{2,4}".to_string()));
    assert_eq!(enumerate_j(3)[0].to_string(), "{}");
}

#[test]
fn w_for_three_generators() {
    let a = alg(3, 2);
    let tau = |i| coeff(&a, a.tau(i).unwrap());
    let expected = [
        &(&x(&a, 1) * &x(&a, 2)) * &x(&a, 3),
        &(&tau(1) * &x(&a, 3)) * &g(&a, 1),
        &(&tau(2) * &x(&a, 1)) * &g(&a, 2),
        &(&tau(3) * &x(&a, 2)) * &g(&a, 3),
    ]
    .iter()
    .fold(HeckeElem::zero(&a), |acc, t| &acc + t);
    assert_eq!(a.w(), expected);
}

#[test]
fn w_for_four_generators_has_zeta_on_g2_g4() {
    let a = alg(4, 3);
    let tau = |i| coeff(&a, a.tau(i).unwrap());
    let zeta = coeff(&a, ParamPoly::zeta_power(a.field(), 4, 1));
    let terms = [
        &(&(&x(&a, 1) * &x(&a, 2)) * &x(&a, 3)) * &x(&a, 4),
        &(&(&tau(1) * &x(&a, 3)) * &x(&a, 4)) * &g(&a, 1),
        &(&(&tau(2) * &x(&a, 1)) * &x(&a, 4)) * &g(&a, 2),
        &(&(&tau(3) * &x(&a, 1)) * &x(&a, 2)) * &g(&a, 3),
        &(&(&tau(4) * &x(&a, 2)) * &x(&a, 3)) * &g(&a, 4),
        // g_1 g_3 and g_2 g_4 as products of basis elements: α(g_1,g_3) = 1, α(g_2,g_4) = ζ
        a.group_element(a.group().plain_mul(
            &a.group().generator(1).unwrap(),
            &a.group().generator(3).unwrap(),
        ))
        .scale(&(&a.tau(1).unwrap() * &a.tau(3).unwrap())),
        (&zeta
            * &a.group_element(a.group().plain_mul(
                &a.group().generator(2).unwrap(),
                &a.group().generator(4).unwrap(),
            )))
            .scale(&(&a.tau(2).unwrap() * &a.tau(4).unwrap())),
    ];
    let expected = terms.iter().fold(HeckeElem::zero(&a), |acc, t| &acc + t);
    assert_eq!(a.w(), expected);
    assert_eq!(
        &g(&a, 2) * &g(&a, 4),
        &zeta
            * &a.group_element(a.group().plain_mul(
                &a.group().generator(2).unwrap(),
                &a.group().generator(4).unwrap(),
            ))
    );
}

#[test]
fn undeformed_w_is_product_of_x() {
    for n in 3..=5 {
        let a = Algebra::undeformed(n, 3).unwrap();
        let prod = (2..=n).fold(x(&a, 1), |acc, i| &acc * &x(&a, i));
        assert_eq!(a.w(), prod);
    }
}

#[test]
fn x_is_not_central_with_witness_t1_g1() {
    let a = alg(3, 2);
    match a.is_central(&x(&a, 1)) {
        Centrality::NotCentral { commutator, .. } => {
            assert_eq!(commutator, &coeff(&a, a.t(1).clone()) * &g(&a, 1));
            assert_eq!(commutator.to_string(), "t1*g1");
        }
        Centrality::Central => panic!("x1 reported central"),
    }
}

#[test]
fn named_central_elements_are_central() {
    for (n, ell) in [(3, 2), (3, 3), (4, 2), (4, 3)] {
        let a = alg(n, ell);
        for i in 1..=n {
            assert!(
                a.is_central(&a.x_pow_ell(i).unwrap()).is_central(),
                "x{i}^l"
            );
        }
        assert!(a.is_central(&a.w()).is_central(), "w at n={n} l={ell}");
        assert!(!a.is_central(&x(&a, 2)).is_central());
    }
}

#[test]
fn relation_vanishes_small_cases() {
    for (n, ell) in [(3, 2), (3, 3), (4, 2), (4, 3)] {
        assert!(alg(n, ell).evaluate_f().is_zero(), "n={n} l={ell}");
    }
}

#[test]
fn undeformed_relation_polynomial_is_product_minus_power() {
    for (n, ell) in [(3, 2), (4, 3), (5, 4)] {
        let a = Algebra::undeformed(n, ell).unwrap();
        let f = a.relation_polynomial();
        let mut expected = CenterPoly::zero(n);
        expected.add_term(&vec![1; n], 0, a.one_coeff());
        expected.add_term(&vec![0; n], ell, -&a.one_coeff());
        assert_eq!(f.to_string(), expected.to_string());
        assert!(a.evaluate_f().is_zero());
    }
    let a = Algebra::undeformed(3, 2).unwrap();
    assert_eq!(a.relation_polynomial().to_string(), "a1*a2*a3 - b^2");
}

#[test]
fn independence_evidence_small() {
    for ell in [2, 3] {
        let ev = alg(3, ell).pbw_independence_evidence(8);
        assert!(ev.holds(), "{:?}", ev.failure);
        assert!(ev.checked > 0);
    }
    // w alone: leading monomial x_1 x_2 x_3 with coefficient 1
    let a = alg(3, 2);
    let top = a.w().top_part();
    assert_eq!(top, &(&x(&a, 1) * &x(&a, 2)) * &x(&a, 3));
}

#[test]
fn sklyanin_relation() {
    for ell in [2, 3, 4] {
        assert!(alg(3, ell).sklyanin_check().unwrap());
    }
    assert!(Algebra::undeformed(3, 3).unwrap().sklyanin_check().unwrap());
    assert!(matches!(
        alg(4, 2).sklyanin_check(),
        Err(AlgebraError::Unsupported { required: 3, n: 4 })
    ));
}

#[test]
fn index_errors() {
    let a = alg(3, 2);
    assert!(a.x(0).is_err());
    assert!(a.x(4).is_err());
    assert!(a.g(4).is_err());
    assert!(normal_order_word(&a, &[1, 5]).is_err());
}

fn word_product(a: &Algebra, word: &[usize]) -> HeckeElem {
    word.iter()
        .fold(HeckeElem::one(a), |acc, &i| &acc * &x(a, i))
}

#[test]
fn literal_rewriter_matches_mul_exhaustively_on_short_words() {
    for (n, ell) in [(3, 2), (3, 3), (4, 3), (5, 2)] {
        let a = alg(n, ell);
        for len in 0..=4u32 {
            for code in 0..(n as u32).pow(len) {
                let word: Vec<usize> = (0..len)
                    .map(|k| (code / (n as u32).pow(k)) as usize % n + 1)
                    .collect();
                assert_eq!(
                    normal_order_word(&a, &word).unwrap(),
                    word_product(&a, &word),
                    "{word:?}"
                );
            }
        }
    }
}

/// A random sparse element of total degree ≤ 3 with small integer coefficients
/// times monomials in t.
fn arb_element(a: Algebra) -> impl Strategy<Value = HeckeElem> {
    let n = a.n();
    let order = a.group().order() as usize;
    let term = (
        prop::collection::vec(0u16..=3, n),
        0..order,
        -3i64..=3,
        0..=n,
    );
    prop::collection::vec(term, 1..=3).prop_map(move |raw| {
        let elems: Vec<GroupElem> = a.group().elements().collect();
        HeckeElem::from_terms(
            &a,
            raw.into_iter().map(|(mut p, gi, c, tv)| {
                while p.iter().sum::<u16>() > 3 {
                    let k = p.iter().position(|&v| v > 0).unwrap();
                    p[k] -= 1;
                }
                let mut coeff = a.deformation().integer(c);
                if tv > 0 {
                    coeff = &coeff * a.t(tv);
                }
                (PbwMonomial::new(&p, elems[gi]), coeff)
            }),
        )
    })
}

fn arb_config() -> impl Strategy<Value = Algebra> {
    (3usize..=4, 2u32..=3).prop_map(|(n, ell)| alg(n, ell))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn mul_is_associative(
        (a, b, c) in arb_config().prop_flat_map(|h| (arb_element(h.clone()), arb_element(h.clone()), arb_element(h)))
    ) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn product_respects_filtration(
        (a, b) in arb_config().prop_flat_map(|h| (arb_element(h.clone()), arb_element(h)))
    ) {
        let ab = &a * &b;
        let (da, db) = (a.total_degree(), b.total_degree());
        if let (Some(da), Some(db), Some(dab)) = (da, db, ab.total_degree()) {
            prop_assert!(dab <= da + db);
        }
        if let (Some(da), Some(db)) = (da, db) {
            prop_assert_eq!(ab.homogeneous_part(da + db), a.top_part().graded_mul(&b.top_part()));
        }
    }

    #[test]
    fn distributive_and_unital(
        (a, b, c) in arb_config().prop_flat_map(|h| (arb_element(h.clone()), arb_element(h.clone()), arb_element(h)))
    ) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        let one = HeckeElem::one(a.algebra());
        prop_assert_eq!(&one * &a, a.clone());
        prop_assert_eq!(&a * &one, a.clone());
    }
}
