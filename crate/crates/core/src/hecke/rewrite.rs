//! Word-level normal ordering by adjacent transpositions.
//!
//! This is the textbook rewriting system for H: repeatedly pick the leftmost
//! out-of-order adjacent pair x_b x_a (b > a) and replace it by x_a x_b plus
//! the commutator term. Each state is (x-word, group element, coefficient);
//! group elements created mid-word are moved to the right end at once. Every
//! step lowers (length, inversions) lexicographically, so it terminates.
//! [`HeckeElem::mul`] uses a block-sliding formulation of the same rules and
//! is checked against this one in tests.

use crate::algebra::{Algebra, AlgebraError};
use crate::coeffring::ParamPoly;
use crate::group::{GroupElem, MAX_N};

use super::{HeckeElem, PbwMonomial};

/// Normal form of the word x_{w_1} x_{w_2} ⋯ x_{w_k} (1-based letters).
pub fn normal_order_word(alg: &Algebra, word: &[usize]) -> Result<HeckeElem, AlgebraError> {
    for &i in word {
        alg.check_index(i)?;
    }
    let group = alg.group();
    let n = alg.n();
    let mut done = HeckeElem::zero(alg);
    let mut work: Vec<(Vec<usize>, GroupElem, ParamPoly)> = vec![(
        word.iter().map(|i| i - 1).collect(),
        group.identity(),
        alg.one_coeff(),
    )];

    while let Some((w, g, c)) = work.pop() {
        let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) else {
            let mut p = [0u16; MAX_N];
            for &a in &w {
                p[a] += 1;
            }
            done = &done + &HeckeElem::monomial(alg, PbwMonomial { p, g }, c);
            continue;
        };
        let (b, a) = (w[i], w[i + 1]);

        // x_b x_a = x_a x_b + [x_b, x_a]
        let relation = if b == a + 1 {
            Some((-alg.t(a + 1), group.generator_mod(a + 1)))
        } else if a == 0 && b == n - 1 {
            Some((alg.t(n).clone(), group.generator_mod(n)))
        } else {
            None
        };
        if let Some((rel, gen)) = relation {
            let rest: Vec<usize> = w[..i].iter().chain(&w[i + 2..]).copied().collect();
            let mut tail = [0i64; MAX_N];
            for &x in &w[i + 2..] {
                tail[x] += 1;
            }
            let chi = group.action_exponent(&gen, &tail[..n]);
            let (alpha, g_new) = group.star_mul_exponent(&gen, &g);
            let coeff = (&c * &rel).scale_zeta((chi + alpha) as i64);
            if !coeff.is_zero() {
                work.push((rest, g_new, coeff));
            }
        }
        let mut swapped = w;
        swapped.swap(i, i + 1);
        work.push((swapped, g, c));
    }
    Ok(done)
}
