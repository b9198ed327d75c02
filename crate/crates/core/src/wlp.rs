//! Weak Lefschetz property testing. The quotient is first cut down to an
//! Artinian ring by dim-many seeded general linear forms; multiplication
//! by one further general form must then have maximal rank from every
//! degree to the next. Two independent draws of all forms must agree
//! before the verdict is reported.

use crate::change::{random_linear_form, trial_seed};
use crate::field::Coeff;
use crate::groebner::{buchberger, normal_form, GroebnerBasis};
use crate::hilbert::initial_ideal;
use crate::linalg;
use crate::monomial::Monomial;
use crate::monomial_ideal::MonomialIdeal;
use crate::poly::{Polynomial, Ring};
use crate::{Error, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WlpOutcome {
    pub holds: bool,
    /// Source degrees t where x_L: A_t -> A_{t+1} fails maximal rank.
    pub failing_degrees: Vec<u32>,
    /// Hilbert function of the Artinian reduction A.
    pub artinian_hf: Vec<i128>,
    pub seed: u64,
}

/// Rank of multiplication by `form` from degree d to d+1 on R/I, where
/// `gb` is an untruncated basis of I and `mi` its initial ideal. Returns
/// (rank, dim source, dim target).
pub fn multiplication_rank(
    ring: &Ring,
    gb: &GroebnerBasis,
    mi: &MonomialIdeal,
    form: &Polynomial,
    d: u32,
) -> (usize, usize, usize) {
    let source = mi.standard_monomials(d);
    let target = mi.standard_monomials(d + 1);
    let index: std::collections::HashMap<&Monomial, usize> =
        target.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows: Vec<Vec<Coeff>> = Vec::with_capacity(source.len());
    for m in &source {
        let image = normal_form(
            ring,
            &form.mul_term(ring, m, &ring.field.one()),
            &gb.basis,
        );
        let mut row = vec![ring.field.zero(); target.len()];
        for (tm, tc) in &image.terms {
            row[index[tm]] = tc.clone();
        }
        rows.push(row);
    }
    let rank = linalg::rank(&ring.field, rows);
    (rank, source.len(), target.len())
}

fn wlp_single_draw(ring: &Ring, gens: &[Polynomial], seed: u64) -> Result<WlpOutcome> {
    let dim = initial_ideal(ring, gens).dim();
    if dim < 0 {
        return Err(Error::Computation("unit ideal has no Lefschetz theory".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut extended = gens.to_vec();
    for _ in 0..dim {
        extended.push(random_linear_form(ring, &mut rng));
    }
    let lefschetz = random_linear_form(ring, &mut rng);
    let gb = buchberger(ring, &extended, None);
    let mi = MonomialIdeal::new(ring.nvars(), gb.leading_monomials());
    let (qdim, _, hf) = mi.dim_degree_hpoly();
    if qdim != 0 {
        return Err(Error::Computation(format!(
            "Artinian reduction failed: dimension {qdim} after {dim} forms"
        )));
    }
    let socle = hf.len() as u32 - 1;
    let mut failing = Vec::new();
    for t in 0..socle {
        let (rank, src, tgt) = multiplication_rank(ring, &gb, &mi, &lefschetz, t);
        if rank != src.min(tgt) {
            failing.push(t);
        }
    }
    Ok(WlpOutcome {
        holds: failing.is_empty(),
        failing_degrees: failing,
        artinian_hf: hf,
        seed,
    })
}

/// Tests the weak Lefschetz property with two independent draws; the
/// verdicts (and the Artinian Hilbert functions) must agree.
pub fn wlp_test(ring: &Ring, gens: &[Polynomial], seed: u64) -> Result<WlpOutcome> {
    let a = wlp_single_draw(ring, gens, trial_seed(seed, 201))?;
    let b = wlp_single_draw(ring, gens, trial_seed(seed, 202))?;
    if a.holds != b.holds || a.failing_degrees != b.failing_degrees || a.artinian_hf != b.artinian_hf
    {
        return Err(Error::Computation(format!(
            "independent Lefschetz draws disagree: {:?} vs {:?}",
            a.failing_degrees, b.failing_degrees
        )));
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn poly(ring: &Ring, terms: &[(i64, &[u16])]) -> Polynomial {
        Polynomial::from_terms(
            ring,
            terms
                .iter()
                .map(|(c, e)| (Monomial::from_exps(e), ring.field.from_i64(*c)))
                .collect(),
        )
    }

    #[test]
    fn monomial_complete_intersection_has_wlp() {
        // k[x,y,z]/(x^3, y^3, z^3) has the WLP in characteristic 0 (and
        // at 32003); its Hilbert function is 1,3,6,7,6,3,1.
        let r = Ring::standard(3, Field::Prime(32003));
        let gens = vec![
            poly(&r, &[(1, &[3, 0, 0])]),
            poly(&r, &[(1, &[0, 3, 0])]),
            poly(&r, &[(1, &[0, 0, 3])]),
        ];
        let out = wlp_test(&r, &gens, 3).unwrap();
        assert_eq!(out.artinian_hf, vec![1, 3, 6, 7, 6, 3, 1]);
        assert!(out.holds, "failing degrees {:?}", out.failing_degrees);
    }

    #[test]
    fn general_plane_points_have_wlp() {
        let r = Ring::standard(3, Field::Prime(32003));
        let gens = vec![
            poly(&r, &[(1, &[1, 1, 0]), (-1, &[1, 0, 1])]),
            poly(&r, &[(1, &[0, 1, 1]), (-1, &[1, 0, 1])]),
        ];
        let out = wlp_test(&r, &gens, 11).unwrap();
        assert_eq!(out.artinian_hf, vec![1, 2, 1]);
        assert!(out.holds);
    }

    #[test]
    fn monomial_almost_complete_intersection_fails_wlp() {
        // The classical failure (x^3, y^3, z^3, xyz): the Hilbert function
        // 1,3,6,6,3 calls for an isomorphism from degree 2 to 3, but
        // multiplication by any linear form has rank at most 5 there.
        let r = Ring::standard(3, Field::Prime(32003));
        let gens = vec![
            poly(&r, &[(1, &[3, 0, 0])]),
            poly(&r, &[(1, &[0, 3, 0])]),
            poly(&r, &[(1, &[0, 0, 3])]),
            poly(&r, &[(1, &[1, 1, 1])]),
        ];
        let out = wlp_test(&r, &gens, 19).unwrap();
        assert_eq!(out.artinian_hf, vec![1, 3, 6, 6, 3]);
        assert!(!out.holds);
        assert_eq!(out.failing_degrees, vec![2]);
    }

    #[test]
    fn rank_bookkeeping_is_consistent() {
        let r = Ring::standard(3, Field::Prime(32003));
        let gens = vec![
            poly(&r, &[(1, &[3, 0, 0])]),
            poly(&r, &[(1, &[0, 3, 0])]),
            poly(&r, &[(1, &[0, 0, 3])]),
        ];
        let gb = buchberger(&r, &gens, None);
        let mi = MonomialIdeal::new(3, gb.leading_monomials());
        let form = poly(&r, &[(1, &[1, 0, 0]), (1, &[0, 1, 0]), (1, &[0, 0, 1])]);
        let (rank, src, tgt) = multiplication_rank(&r, &gb, &mi, &form, 2);
        assert_eq!((src, tgt), (6, 7));
        assert_eq!(rank, 6);
    }
}
