//! Buchberger's algorithm with the normal (minimal lcm degree) selection
//! strategy, the coprime-leading-term criterion, and the chain criterion,
//! plus full normal-form reduction and an optional degree cap.
//!
//! The cap yields a d-Groebner basis: for homogeneous input, pairs are
//! processed in non-decreasing lcm degree, so once the cap is passed no
//! element of smaller degree can appear and the truncated basis determines
//! the ideal exactly in all degrees <= cap. A capped pair can also never be
//! the missing witness for a chain-criterion skip below the cap, because
//! the witness lcm always divides the skipped pair's lcm.

use crate::monomial::Monomial;
use crate::poly::{Polynomial, Ring};
use std::collections::BTreeSet;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BuchbergerStats {
    pub pairs_formed: usize,
    pub pairs_reduced: usize,
    pub zero_reductions: usize,
    pub skipped_coprime: usize,
    pub skipped_chain: usize,
    pub skipped_cap: usize,
}

#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub ring: Ring,
    /// Reduced basis: monic, pairwise non-divisible leading terms, every
    /// tail term irreducible; sorted ascending in the ring's order.
    pub basis: Vec<Polynomial>,
    /// Set when a degree cap discarded at least one pair, in which case the
    /// basis is only trustworthy in degrees <= the cap.
    pub truncated_at: Option<u32>,
    pub stats: BuchbergerStats,
}

/// Fully reduces `f` modulo a list of monic polynomials: every term of the
/// result is divisible by no leading term of `basis`.
pub fn normal_form(ring: &Ring, f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let mut work = f.clone();
    let mut remainder: Vec<(Monomial, crate::field::Coeff)> = Vec::new();
    'outer: while let Some((lm, lc)) = work.terms.first().cloned() {
        for g in basis {
            let glm = g.leading_monomial().expect("basis elements are nonzero");
            if let Some(q) = glm.div_into(&lm) {
                work = work.sub_scaled(ring, &lc, &q, g);
                continue 'outer;
            }
        }
        remainder.push((lm, lc));
        work.terms.remove(0);
    }
    Polynomial { terms: remainder }
}

/// True when the normal form of `f` against a (possibly truncated) basis
/// vanishes. For an untruncated Groebner basis this is ideal membership.
pub fn reduces_to_zero(ring: &Ring, f: &Polynomial, gb: &GroebnerBasis) -> bool {
    normal_form(ring, f, &gb.basis).is_zero()
}

fn s_poly(ring: &Ring, f: &Polynomial, g: &Polynomial) -> Polynomial {
    let lf = f.leading_monomial().unwrap();
    let lg = g.leading_monomial().unwrap();
    let lcm = lf.lcm(lg);
    let uf = lf.div_into(&lcm).unwrap();
    let ug = lg.div_into(&lcm).unwrap();
    let one = ring.field.one();
    f.mul_term(ring, &uf, &one)
        .sub(ring, &g.mul_term(ring, &ug, &one))
}

pub fn buchberger(ring: &Ring, gens: &[Polynomial], cap: Option<u32>) -> GroebnerBasis {
    let mut stats = BuchbergerStats::default();
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        // Interreducing the inputs up front keeps the pair queue small.
        let r = normal_form(ring, g, &basis);
        if !r.is_zero() {
            basis.push(r.monic(ring));
        }
    }

    // Pending pairs keyed by (lcm degree, i, j); BTreeSet pops the minimal
    // degree first, which is the normal selection strategy.
    let mut pending: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut truncated = false;
    let lcm_deg =
        |basis: &[Polynomial], i: usize, j: usize| -> u32 {
            basis[i]
                .leading_monomial()
                .unwrap()
                .lcm(basis[j].leading_monomial().unwrap())
                .degree()
        };
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pending.insert((lcm_deg(&basis, i, j), i, j));
            stats.pairs_formed += 1;
        }
    }

    while let Some((deg, i, j)) = pending.pop_first() {
        if let Some(cap) = cap {
            if deg > cap {
                stats.skipped_cap += 1;
                truncated = true;
                continue;
            }
        }
        let li = basis[i].leading_monomial().unwrap();
        let lj = basis[j].leading_monomial().unwrap();
        if li.is_coprime(lj) {
            stats.skipped_coprime += 1;
            continue;
        }
        let lcm = li.lcm(lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&lcm)
                && !pending.contains(&(lcm_deg(&basis, i.min(k), i.max(k)), i.min(k), i.max(k)))
                && !pending.contains(&(lcm_deg(&basis, j.min(k), j.max(k)), j.min(k), j.max(k)))
        });
        if chain {
            stats.skipped_chain += 1;
            continue;
        }
        let s = s_poly(ring, &basis[i], &basis[j]);
        let r = normal_form(ring, &s, &basis);
        stats.pairs_reduced += 1;
        if r.is_zero() {
            stats.zero_reductions += 1;
            continue;
        }
        let new_index = basis.len();
        basis.push(r.monic(ring));
        for k in 0..new_index {
            pending.insert((lcm_deg(&basis, k, new_index), k, new_index));
            stats.pairs_formed += 1;
        }
    }

    let basis = reduce_basis(ring, basis);
    let gb = GroebnerBasis {
        ring: ring.clone(),
        basis,
        truncated_at: if truncated { cap } else { None },
        stats,
    };
    if gb.truncated_at.is_none() {
        for g in gens {
            assert!(
                normal_form(ring, g, &gb.basis).is_zero(),
                "input generator fails to reduce to zero against its own basis"
            );
        }
    }
    gb
}

/// Minimalizes leading terms, tail-reduces every element against the
/// others, normalizes to monic, and sorts ascending in the order. The
/// result is the unique reduced basis for whatever the input generates.
fn reduce_basis(ring: &Ring, mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    basis.sort_by(|a, b| {
        ring.order
            .cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
    });
    let mut minimal: Vec<Polynomial> = Vec::new();
    for f in basis {
        let lf = f.leading_monomial().unwrap();
        if !minimal
            .iter()
            .any(|g| g.leading_monomial().unwrap().divides(lf))
        {
            minimal.push(f);
        }
    }
    let snapshot = minimal.clone();
    for (i, f) in minimal.iter_mut().enumerate() {
        let others: Vec<Polynomial> = snapshot
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        *f = normal_form(ring, f, &others).monic(ring);
    }
    minimal
}

impl GroebnerBasis {
    /// Leading monomials of the reduced basis, i.e. the minimal generators
    /// of the initial ideal (exact if untruncated, exact below the cap
    /// otherwise).
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect()
    }

    pub fn max_degree(&self) -> u32 {
        self.basis
            .iter()
            .filter_map(|g| g.degree())
            .max()
            .unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::linalg;
    use crate::monomial::{monomials_of_degree, Monomial};

    fn poly(ring: &Ring, terms: &[(i64, &[u16])]) -> Polynomial {
        Polynomial::from_terms(
            ring,
            terms
                .iter()
                .map(|(c, e)| (Monomial::from_exps(e), ring.field.from_i64(*c)))
                .collect(),
        )
    }

    /// dim of the degree-d slice of the ideal generated by `gens`, by brute
    /// force: rank of all monomial multiples of the generators in degree d.
    fn component_dim(ring: &Ring, gens: &[Polynomial], d: u32) -> usize {
        let basis_mons = monomials_of_degree(ring.nvars(), d);
        let index = |m: &Monomial| basis_mons.iter().position(|x| x == m).unwrap();
        let mut rows = Vec::new();
        for g in gens {
            let gd = g.degree().unwrap();
            if gd > d {
                continue;
            }
            for m in monomials_of_degree(ring.nvars(), d - gd) {
                let prod = g.mul_term(ring, &m, &ring.field.one());
                let mut row = vec![ring.field.zero(); basis_mons.len()];
                for (tm, tc) in &prod.terms {
                    row[index(tm)] = tc.clone();
                }
                rows.push(row);
            }
        }
        linalg::rank(&ring.field, rows)
    }

    #[test]
    fn normal_form_single_relation() {
        let r = Ring::standard(2, Field::Prime(32003));
        let rel = poly(&r, &[(1, &[2, 0]), (-1, &[0, 2])]);
        let f = poly(&r, &[(1, &[3, 0])]);
        let nf = normal_form(&r, &f, &[rel]);
        assert_eq!(nf, poly(&r, &[(1, &[1, 2])]));
    }

    #[test]
    fn twisted_cubic_slice_basis() {
        let r = Ring::standard(3, Field::Prime(32003));
        let gens = vec![
            poly(&r, &[(1, &[2, 0, 0]), (-1, &[0, 1, 1])]),
            poly(&r, &[(1, &[1, 1, 0]), (-1, &[0, 0, 2])]),
        ];
        let gb = buchberger(&r, &gens, None);
        assert!(gb.truncated_at.is_none());
        // The S-pair of the two quadrics contributes x2^2*x3 - x1*x3^2.
        let extra = poly(&r, &[(1, &[0, 2, 1]), (-1, &[1, 0, 2])]);
        assert!(gb.basis.contains(&extra));
        // Leading terms of a reduced basis never divide one another.
        let lms = gb.leading_monomials();
        for (i, a) in lms.iter().enumerate() {
            for (j, b) in lms.iter().enumerate() {
                if i != j {
                    assert!(!a.divides(b));
                }
            }
        }
        // Initial-ideal monomial counts must reproduce the brute-force
        // component dimensions of the ideal in every degree <= 4.
        for d in 0..=4u32 {
            let count = monomials_of_degree(3, d)
                .into_iter()
                .filter(|m| lms.iter().any(|l| l.divides(m)))
                .count();
            assert_eq!(count, component_dim(&r, &gens, d), "degree {d}");
        }
    }

    #[test]
    fn principal_ideal_basis_is_the_monic_generator() {
        let r = Ring::standard(3, Field::Rational);
        let f = poly(&r, &[(2, &[1, 1, 0]), (4, &[0, 0, 2])]);
        let gb = buchberger(&r, &[f.clone()], None);
        assert_eq!(gb.basis, vec![f.monic(&r)]);
    }

    #[test]
    fn recomputing_from_a_reduced_basis_is_stable() {
        let r = Ring::standard(3, Field::Prime(32003));
        let gens = vec![
            poly(&r, &[(1, &[2, 0, 0]), (-1, &[0, 1, 1])]),
            poly(&r, &[(1, &[1, 1, 0]), (-1, &[0, 0, 2])]),
        ];
        let gb = buchberger(&r, &gens, None);
        let again = buchberger(&r, &gb.basis, None);
        assert_eq!(gb.basis, again.basis);
    }

    #[test]
    fn degree_cap_truncates() {
        let r = Ring::standard(3, Field::Prime(32003));
        let gens = vec![
            poly(&r, &[(1, &[2, 0, 0]), (-1, &[0, 1, 1])]),
            poly(&r, &[(1, &[1, 1, 0]), (-1, &[0, 0, 2])]),
        ];
        let full = buchberger(&r, &gens, None);
        let capped = buchberger(&r, &gens, Some(2));
        assert_eq!(capped.truncated_at, Some(2));
        let expect: Vec<Polynomial> = full
            .basis
            .iter()
            .filter(|g| g.degree().unwrap() <= 2)
            .cloned()
            .collect();
        assert_eq!(capped.basis, expect);
        let uncapped = buchberger(&r, &gens, Some(50));
        assert_eq!(uncapped.truncated_at, None);
        assert_eq!(uncapped.basis, full.basis);
    }

    #[test]
    fn membership_via_normal_form() {
        let r = Ring::standard(3, Field::Prime(32003));
        let gens = vec![
            poly(&r, &[(1, &[2, 0, 0]), (-1, &[0, 1, 1])]),
            poly(&r, &[(1, &[1, 1, 0]), (-1, &[0, 0, 2])]),
        ];
        let gb = buchberger(&r, &gens, None);
        let inside = gens[0].mul(&r, &poly(&r, &[(3, &[1, 0, 2])]));
        assert!(reduces_to_zero(&r, &inside, &gb));
        let outside = poly(&r, &[(1, &[0, 0, 2])]);
        assert!(!reduces_to_zero(&r, &outside, &gb));
    }

    #[test]
    fn linear_ideal_reduced_basis() {
        let r = Ring::standard(3, Field::Prime(32003));
        // (x1 - x3, x2): already a reduced basis (up to sorting).
        let gens = vec![
            poly(&r, &[(1, &[1, 0, 0]), (-1, &[0, 0, 1])]),
            poly(&r, &[(1, &[0, 1, 0])]),
        ];
        let gb = buchberger(&r, &gens, None);
        assert_eq!(gb.basis.len(), 2);
        assert!(gb.basis.contains(&gens[0]));
        assert!(gb.basis.contains(&gens[1]));
    }

    #[test]
    fn inhomogeneous_input_terminates() {
        let r = Ring::standard(2, Field::Prime(32003));
        let gens = vec![
            poly(&r, &[(1, &[2, 0]), (-1, &[0, 1])]),
            poly(&r, &[(1, &[0, 3]), (-1, &[0, 0])]),
        ];
        let gb = buchberger(&r, &gens, None);
        for g in &gens {
            assert!(reduces_to_zero(&r, g, &gb));
        }
    }
}
