//! Generic initial ideals in degrevlex: apply a seeded random invertible
//! linear change of coordinates, take the initial ideal of a reduced
//! Groebner basis, and require that independent draws agree before
//! trusting the result as generic.

use crate::borel;
use crate::change::{trial_seed, LinearChange};
use crate::groebner::buchberger;
use crate::monomial_ideal::MonomialIdeal;
use crate::poly::{Polynomial, Ring};
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct GinResult {
    /// Initial ideal of the first trial (all trials equal when `agreed`).
    pub gin: MonomialIdeal,
    /// Per-trial initial ideals, in trial order.
    pub per_trial: Vec<MonomialIdeal>,
    /// Seeds of the coordinate changes actually used.
    pub seeds: Vec<u64>,
    pub agreed: bool,
    pub is_strongly_stable: bool,
    /// Present when the underlying bases were degree-capped; generators of
    /// larger degree are then unknown (but none below the cap are missing).
    pub truncated_at: Option<u32>,
}

/// Computes Gin(I) with `trials` independent coordinate changes derived
/// from `seed`. With a cap, each Groebner run is truncated at that degree
/// and the result lists exactly the gin's minimal generators of degree
/// <= cap.
pub fn gin(
    ring: &Ring,
    gens: &[Polynomial],
    seed: u64,
    trials: usize,
    cap: Option<u32>,
) -> GinResult {
    assert!(trials >= 1);
    let seeds: Vec<u64> = (0..trials as u64).map(|t| trial_seed(seed, t)).collect();
    let outcomes: Vec<(MonomialIdeal, Option<u32>)> = crate::exec::par_map(&seeds, |&s| {
        let change = LinearChange::random(ring, s);
        let moved = change.apply_ideal(ring, gens);
        let gb = buchberger(ring, &moved, cap);
        (
            MonomialIdeal::new(ring.nvars(), gb.leading_monomials()),
            gb.truncated_at,
        )
    });
    let per_trial: Vec<MonomialIdeal> = outcomes.iter().map(|(m, _)| m.clone()).collect();
    let truncated_at = outcomes.iter().find_map(|(_, t)| *t);
    let first = per_trial[0].clone();
    let agreed = per_trial.iter().all(|m| *m == first);
    let is_strongly_stable = borel::is_strongly_stable(&first);
    GinResult {
        gin: first,
        per_trial,
        seeds,
        agreed,
        is_strongly_stable,
        truncated_at,
    }
}

impl GinResult {
    /// Promotes disagreement between draws into a hard error; theorem
    /// pipelines call this before reading anything off the gin.
    pub fn require_agreement(&self) -> Result<&MonomialIdeal> {
        if !self.agreed {
            return Err(Error::Computation(format!(
                "generic initial ideal draws disagree (seeds {:?})",
                self.seeds
            )));
        }
        Ok(&self.gin)
    }

    /// Borel-fixedness is a theorem for generic changes; its failure means
    /// the draws were not generic (or the characteristic interfered).
    pub fn require_strongly_stable(&self) -> Result<&MonomialIdeal> {
        self.require_agreement()?;
        if !self.is_strongly_stable {
            return Err(Error::TheoremViolation(format!(
                "generic initial ideal is not strongly stable: {}",
                self.gin
            )));
        }
        Ok(&self.gin)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::monomial::Monomial;

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
    fn gin_of_generic_linear_forms() {
        // Two random hyperplanes: the gin must be (x1, x2).
        let r = Ring::standard(4, Field::Prime(32003));
        let gens = vec![
            poly(&r, &[(1, &[1, 0, 0, 0]), (2, &[0, 1, 0, 0]), (3, &[0, 0, 1, 0])]),
            poly(&r, &[(5, &[0, 1, 0, 0]), (1, &[0, 0, 0, 1])]),
        ];
        let g = gin(&r, &gens, 11, 2, None);
        assert!(g.agreed);
        assert!(g.is_strongly_stable);
        assert_eq!(
            g.gin.gens(),
            &[
                Monomial::from_exps(&[1, 0, 0, 0]),
                Monomial::from_exps(&[0, 1, 0, 0]),
            ]
        );
    }

    #[test]
    fn gin_of_four_general_points_in_the_plane() {
        // Vanishing ideal of {(1:0:0), (0:1:0), (0:0:1), (1:1:1)}, a
        // complete intersection of the two quadrics below. The gin is
        // forced by the Hilbert function 1,3,4,4,... and strong stability
        // to be (x1^2, x1x2, x2^3).
        let r = Ring::standard(3, Field::Prime(32003));
        let gens = vec![
            poly(&r, &[(1, &[1, 1, 0]), (-1, &[1, 0, 1])]),
            poly(&r, &[(1, &[0, 1, 1]), (-1, &[1, 0, 1])]),
        ];
        let g = gin(&r, &gens, 5, 3, None);
        assert!(g.agreed);
        assert!(g.is_strongly_stable);
        assert_eq!(
            g.gin.gens(),
            &[
                Monomial::from_exps(&[2, 0, 0]),
                Monomial::from_exps(&[1, 1, 0]),
                Monomial::from_exps(&[0, 3, 0]),
            ]
        );
    }

    #[test]
    fn capped_gin_reports_truncation() {
        let r = Ring::standard(3, Field::Prime(32003));
        let gens = vec![
            poly(&r, &[(1, &[2, 0, 0]), (-1, &[0, 1, 1])]),
            poly(&r, &[(1, &[0, 2, 0]), (-1, &[1, 0, 1])]),
        ];
        let full = gin(&r, &gens, 3, 2, None);
        let capped = gin(&r, &gens, 3, 2, Some(2));
        assert!(capped.truncated_at.is_some());
        // Below the cap the generators coincide with the full gin.
        let below: Vec<_> = full
            .gin
            .gens()
            .iter()
            .filter(|m| m.degree() <= 2)
            .cloned()
            .collect();
        assert_eq!(capped.gin.gens().iter().filter(|m| m.degree() <= 2).cloned().collect::<Vec<_>>(), below);
    }

    #[test]
    fn hilbert_function_is_change_invariant() {
        let r = Ring::standard(3, Field::Prime(32003));
        let gens = vec![
            poly(&r, &[(1, &[2, 0, 0]), (-1, &[0, 1, 1])]),
            poly(&r, &[(1, &[1, 1, 0]), (-1, &[0, 0, 2])]),
        ];
        let plain = buchberger(&r, &gens, None);
        let plain_in = MonomialIdeal::new(3, plain.leading_monomials());
        let g = gin(&r, &gens, 17, 2, None);
        for d in 0..=6 {
            assert_eq!(
                plain_in.hilbert_function(d),
                g.gin.hilbert_function(d),
                "degree {d}"
            );
        }
    }
}
