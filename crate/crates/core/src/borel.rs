//! Combinatorics of strongly stable (Borel-fixed) monomial ideals: the
//! D and M support invariants, generalized sporadic zeros, saturation by
//! inspection, regularity as the maximal generator degree, and the
//! Eliahou-Kervaire graded Betti numbers.
//!
//! Variable indices are 0-based internally; D and M are reported 1-based
//! to match the usual x_1 > ... > x_n conventions.

use crate::monomial::{binomial, Monomial};
use crate::monomial_ideal::{minimalize, MonomialIdeal};
use rand::Rng;
use std::collections::BTreeMap;

/// Generator-level strong stability: for every generator m and every
/// variable x_j dividing m, all swaps m*x_i/x_j with i < j stay inside.
/// For monomial ideals this is equivalent to stability of the whole ideal.
pub fn is_strongly_stable(ideal: &MonomialIdeal) -> bool {
    ideal.gens().iter().all(|m| {
        (0..ideal.nvars()).all(|j| {
            if m.exp(j) == 0 {
                return true;
            }
            (0..j).all(|i| {
                let swapped = Monomial::var(ideal.nvars(), j)
                    .div_into(m)
                    .unwrap()
                    .mul_var(i);
                ideal.contains(&swapped)
            })
        })
    })
}

/// D(I): the largest "smallest variable" over the minimal generators,
/// 1-based. Equals the codimension of R/I for strongly stable ideals.
pub fn d_invariant(ideal: &MonomialIdeal) -> u32 {
    ideal
        .gens()
        .iter()
        .filter_map(|m| m.min_var())
        .map(|i| i as u32 + 1)
        .max()
        .unwrap_or(0)
}

/// M(I): the largest "largest variable" over the minimal generators,
/// 1-based. Equals n - depth(R/I) for strongly stable ideals.
pub fn m_invariant(ideal: &MonomialIdeal) -> u32 {
    ideal
        .gens()
        .iter()
        .filter_map(|m| m.max_var())
        .map(|i| i as u32 + 1)
        .max()
        .unwrap_or(0)
}

/// Generalized sporadic zeros: every x^K with x_M^r * x^K a minimal
/// generator whose support reaches M(I), r > 0. Defined to be empty when
/// D(I) = M(I). Sorted by degree then descending degrevlex.
pub fn sporadic_zeros(ideal: &MonomialIdeal) -> Vec<Monomial> {
    let d = d_invariant(ideal);
    let m_inv = m_invariant(ideal);
    if d == m_inv {
        return Vec::new();
    }
    let col = (m_inv - 1) as usize;
    let mut out: Vec<Monomial> = Vec::new();
    for g in ideal.gens() {
        if g.max_var() == Some(col) {
            let mut cur = g.clone();
            for _ in 0..g.exp(col) {
                cur = Monomial::var(ideal.nvars(), col).div_into(&cur).unwrap();
                if !out.contains(&cur) {
                    out.push(cur.clone());
                }
            }
        }
    }
    out.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| crate::order::MonomialOrder::DegRevLex.cmp(b, a))
    });
    out
}

/// Number of sporadic zeros in each degree.
pub fn sporadic_zero_counts(ideal: &MonomialIdeal) -> BTreeMap<u32, usize> {
    let mut counts = BTreeMap::new();
    for m in sporadic_zeros(ideal) {
        *counts.entry(m.degree()).or_insert(0) += 1;
    }
    counts
}

/// Image of the ideal under x_n -> 0, living in one fewer variable:
/// generators involving x_n die, the rest restrict.
pub fn restrict_last_zero(ideal: &MonomialIdeal) -> MonomialIdeal {
    let n = ideal.nvars();
    assert!(n > 0);
    let gens = ideal
        .gens()
        .iter()
        .filter(|m| m.exp(n - 1) == 0)
        .map(|m| Monomial::from_exps(&m.exps()[..n - 1]))
        .collect();
    MonomialIdeal::new(n - 1, gens)
}

/// Image under x_{i+1} -> 1: the variable's exponent is erased from every
/// generator and the result re-minimalized. Same ambient variable count.
pub fn substitute_var_one(ideal: &MonomialIdeal, i: usize) -> MonomialIdeal {
    let gens = ideal.gens().iter().map(|m| m.set_var_to_one(i)).collect();
    MonomialIdeal::new(ideal.nvars(), gens)
}

/// A strongly stable ideal is saturated exactly when no minimal generator
/// involves the last variable.
pub fn is_saturated(ideal: &MonomialIdeal) -> bool {
    let n = ideal.nvars();
    ideal.gens().iter().all(|m| m.exp(n - 1) == 0)
}

/// Saturation of a strongly stable ideal: substitute x_n -> 1.
pub fn saturation(ideal: &MonomialIdeal) -> MonomialIdeal {
    substitute_var_one(ideal, ideal.nvars() - 1)
}

/// Saturation degree: the largest degree of a minimal generator involving
/// x_n, or 0 when already saturated.
pub fn sat_degree(ideal: &MonomialIdeal) -> u32 {
    let n = ideal.nvars();
    ideal
        .gens()
        .iter()
        .filter(|m| m.exp(n - 1) > 0)
        .map(|m| m.degree())
        .max()
        .unwrap_or(0)
}

/// Castelnuovo-Mumford regularity of a strongly stable ideal: the maximal
/// degree of a minimal generator.
pub fn regularity(ideal: &MonomialIdeal) -> u32 {
    ideal.max_gen_degree()
}

/// Eliahou-Kervaire Betti number beta_i of a strongly stable ideal
/// (i = 0 counts the minimal generators).
pub fn ek_betti(ideal: &MonomialIdeal, i: u32) -> i128 {
    ideal
        .gens()
        .iter()
        .map(|m| {
            let max = m.max_var().map(|v| v as i64 + 1).unwrap_or(0);
            binomial(max - 1, i as i64)
        })
        .sum()
}

/// Hilbert series numerator reconstructed from the Eliahou-Kervaire
/// resolution; used as an independent check against the pivot recursion.
pub fn ek_numerator(ideal: &MonomialIdeal) -> Vec<i128> {
    let mut num = vec![0i128; 1];
    num[0] = 1;
    for m in ideal.gens() {
        let max = m.max_var().map(|v| v as i64 + 1).unwrap_or(0);
        for i in 0..max.max(1) {
            let deg = (m.degree() as usize) + i as usize;
            if num.len() <= deg {
                num.resize(deg + 1, 0);
            }
            let sign = if i % 2 == 0 { -1 } else { 1 };
            num[deg] += sign * binomial(max - 1, i);
        }
    }
    while num.last() == Some(&0) {
        num.pop();
    }
    num
}

/// Smallest strongly stable ideal containing the given monomials: closure
/// under all elementary moves m -> m*x_i/x_j with i < j.
pub fn borel_closure(nvars: usize, seeds: Vec<Monomial>) -> MonomialIdeal {
    let mut seen: Vec<Monomial> = Vec::new();
    let mut queue: Vec<Monomial> = seeds;
    while let Some(m) = queue.pop() {
        if seen.contains(&m) {
            continue;
        }
        for j in 0..nvars {
            if m.exp(j) == 0 {
                continue;
            }
            for i in 0..j {
                queue.push(Monomial::var(nvars, j).div_into(&m).unwrap().mul_var(i));
            }
        }
        seen.push(m);
    }
    MonomialIdeal::new(nvars, minimalize(seen))
}

/// Random strongly stable ideal: the Borel closure of a few random
/// monomials of bounded degree.
pub fn random_strongly_stable<R: Rng>(
    nvars: usize,
    max_degree: u16,
    n_seeds: usize,
    rng: &mut R,
) -> MonomialIdeal {
    let seeds: Vec<Monomial> = (0..n_seeds)
        .map(|_| loop {
            let mut exps = vec![0u16; nvars];
            let deg = rng.gen_range(1..=max_degree);
            for _ in 0..deg {
                exps[rng.gen_range(0..nvars)] += 1;
            }
            let m = Monomial::from_exps(&exps);
            if !m.is_one() {
                break m;
            }
        })
        .collect();
    borel_closure(nvars, seeds)
}

/// Random Cohen-Macaulay strongly stable ideal of codimension `codim`:
/// supported on the first `codim` variables and containing the pure power
/// x_codim^a, which forces D = M = codim.
pub fn random_cm_borel<R: Rng>(nvars: usize, codim: usize, rng: &mut R) -> MonomialIdeal {
    assert!(codim >= 1 && codim <= nvars);
    let a = rng.gen_range(2..=5u16);
    let mut seeds = vec![{
        let mut exps = vec![0u16; nvars];
        exps[codim - 1] = a;
        Monomial::from_exps(&exps)
    }];
    for _ in 0..rng.gen_range(0..3usize) {
        let mut exps = vec![0u16; nvars];
        let deg = rng.gen_range(1..=a);
        for _ in 0..deg {
            exps[rng.gen_range(0..codim)] += 1;
        }
        let m = Monomial::from_exps(&exps);
        if !m.is_one() {
            seeds.push(m);
        }
    }
    borel_closure(nvars, seeds)
}

/// Per-degree comparison behind the sporadic-zero dimension identity: for
/// J the restriction of I to x_n = 0 and J^sat its saturation, returns
/// dim (J^sat / J)_m together with the sporadic zero count of I in degree
/// m. For saturated strongly stable I with D(I) < M(I) = n-1 these agree
/// in every degree m >= 1; when M(I) = n-1 = D(I) the count is empty by
/// convention while the quotient can survive, and when M(I) < n-1 the
/// restriction is already saturated so the dimension side vanishes.
pub fn sporadic_dimension_pair(ideal: &MonomialIdeal, m: u32) -> (i128, usize) {
    let j = restrict_last_zero(ideal);
    let jsat = substitute_var_one(&j, j.nvars() - 1);
    let diff = j.hilbert_function(m as i64) - jsat.hilbert_function(m as i64);
    let count = sporadic_zeros(ideal)
        .iter()
        .filter(|z| z.degree() == m)
        .count();
    (diff, count)
}
