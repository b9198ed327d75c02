//! s-reduction numbers of R/I, computed two independent ways:
//!
//! * witness: the least k with x_{n-s}^{k+1} in Gin(I), read off a
//!   degree-capped gin;
//! * crosscheck: the top nonzero degree of R/(I + J) for J generated by s
//!   random linear forms.
//!
//! The two must agree (and two independent draws of J must agree) before
//! a value is reported.

use crate::change::{random_linear_form, trial_seed};
use crate::gin;
use crate::hilbert::initial_ideal;
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Ring};
use crate::{Error, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionProfile {
    pub s: usize,
    /// r_s(R/I), once both formulations agree.
    pub value: i64,
    pub witness: i64,
    pub crosscheck: i64,
    pub seed: u64,
    /// Hilbert function of the Artinian quotient R/(I + J).
    pub quotient_hf: Vec<i128>,
}

/// Socle-degree route: quotient by `s` seeded random linear forms and read
/// the last nonzero degree of the Hilbert function. Fails if the quotient
/// is not Artinian (non-generic draw, or s below the dimension).
fn artinian_socle(ring: &Ring, gens: &[Polynomial], s: usize, seed: u64) -> Result<(i64, Vec<i128>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut extended = gens.to_vec();
    for _ in 0..s {
        extended.push(random_linear_form(ring, &mut rng));
    }
    let mi = initial_ideal(ring, &extended);
    let (dim, _, h) = mi.dim_degree_hpoly();
    if dim != 0 {
        return Err(Error::Computation(format!(
            "quotient by {s} linear forms is not Artinian (dimension {dim})"
        )));
    }
    Ok((h.len() as i64 - 1, h))
}

pub fn reduction_number(
    ring: &Ring,
    gens: &[Polynomial],
    s: usize,
    seed: u64,
) -> Result<ReductionProfile> {
    let n = ring.nvars();
    if s < 1 || s >= n {
        return Err(Error::Computation(format!(
            "reduction index s = {s} out of range for {n} variables"
        )));
    }
    let dim = initial_ideal(ring, gens).dim();
    if (s as i64) < dim {
        return Err(Error::Computation(format!(
            "r_{s} is infinite: quotient has dimension {dim}"
        )));
    }

    let (socle_a, hf_a) = artinian_socle(ring, gens, s, trial_seed(seed, 101))?;
    let (socle_b, hf_b) = artinian_socle(ring, gens, s, trial_seed(seed, 102))?;
    if socle_a != socle_b || hf_a != hf_b {
        return Err(Error::Computation(format!(
            "independent linear-form draws disagree on r_{s}: {socle_a} vs {socle_b}"
        )));
    }

    // The gin only needs to be known up to the degree of the expected pure
    // power, so cap it just above.
    let cap = (socle_a + 2) as u32;
    let gin_result = gin::gin(ring, gens, seed, 2, Some(cap));
    let gin_ideal = gin_result.require_strongly_stable()?;
    let var = n - s - 1;
    let witness = (1..=cap)
        .find(|&j| {
            let mut exps = vec![0u16; n];
            exps[var] = j as u16;
            gin_ideal.contains(&Monomial::from_exps(&exps))
        })
        .map(|j| j as i64 - 1)
        .ok_or_else(|| {
            Error::TheoremViolation(format!(
                "no pure power of x{} below degree {cap} in the gin",
                var + 1
            ))
        })?;

    if witness != socle_a {
        return Err(Error::TheoremViolation(format!(
            "reduction number mismatch: gin pure power gives {witness}, \
             Artinian socle gives {socle_a}"
        )));
    }

    Ok(ReductionProfile {
        s,
        value: witness,
        witness,
        crosscheck: socle_a,
        seed,
        quotient_hf: hf_a,
    })
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
    fn single_point_has_reduction_number_zero() {
        let r = Ring::standard(3, Field::Prime(32003));
        let gens = vec![
            poly(&r, &[(1, &[1, 0, 0]), (-1, &[0, 0, 1])]),
            poly(&r, &[(1, &[0, 1, 0]), (-2, &[0, 0, 1])]),
        ];
        let p = reduction_number(&r, &gens, 1, 5).unwrap();
        assert_eq!(p.value, 0);
        assert_eq!(p.quotient_hf, vec![1]);
    }

    #[test]
    fn plane_quartet_r1_is_two() {
        // 4 general plane points have h-vector (1, 2, 1): the Artinian
        // reduction vanishes first in degree 3, so r_1 = 2.
        let r = Ring::standard(3, Field::Prime(32003));
        let gens = vec![
            poly(&r, &[(1, &[1, 1, 0]), (-1, &[1, 0, 1])]),
            poly(&r, &[(1, &[0, 1, 1]), (-1, &[1, 0, 1])]),
        ];
        let p = reduction_number(&r, &gens, 1, 5).unwrap();
        assert_eq!(p.value, 2);
        assert_eq!(p.quotient_hf, vec![1, 2, 1]);
    }

    #[test]
    fn twisted_cubic_r2() {
        let r = Ring::standard(4, Field::Prime(32003));
        let gens = vec![
            poly(&r, &[(1, &[1, 0, 1, 0]), (-1, &[0, 2, 0, 0])]),
            poly(&r, &[(1, &[1, 0, 0, 1]), (-1, &[0, 1, 1, 0])]),
            poly(&r, &[(1, &[0, 1, 0, 1]), (-1, &[0, 0, 2, 0])]),
        ];
        // h-vector of the twisted cubic is (1, 2): r_2 = 1.
        let p = reduction_number(&r, &gens, 2, 9).unwrap();
        assert_eq!(p.value, 1);
        assert_eq!(p.quotient_hf, vec![1, 2]);
    }

    #[test]
    fn out_of_range_requests_error_cleanly() {
        let r = Ring::standard(3, Field::Prime(32003));
        let gens = vec![poly(&r, &[(1, &[1, 0, 0])])];
        assert!(reduction_number(&r, &gens, 0, 1).is_err());
        assert!(reduction_number(&r, &gens, 3, 1).is_err());
        // dim R/(x1) = 2 but s = 1: r_1 infinite.
        assert!(reduction_number(&r, &gens, 1, 1).is_err());
    }
}
