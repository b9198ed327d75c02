//! Invertible linear coordinate changes, the "generic" in generic initial
//! ideal. A change is stored with the seed that produced it so every
//! genericity-dependent result can be replayed.

use crate::field::{Coeff, Field};
use crate::linalg;
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Ring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

#[derive(Debug, Clone)]
pub struct LinearChange {
    /// Row i gives the image of x_{i+1} as a linear form.
    pub matrix: Vec<Vec<Coeff>>,
    pub seed: u64,
}

/// Stream-splits a base seed into per-trial seeds.
pub fn trial_seed(base: u64, trial: u64) -> u64 {
    base.wrapping_add(trial.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

impl LinearChange {
    pub fn identity(ring: &Ring) -> LinearChange {
        let n = ring.nvars();
        let field = &ring.field;
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { field.one() } else { field.zero() })
                    .collect()
            })
            .collect();
        LinearChange { matrix, seed: 0 }
    }

    /// Draws dense matrices from the seed until an invertible one appears
    /// (over F_32003 the first draw almost always is).
    pub fn random(ring: &Ring, seed: u64) -> LinearChange {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = ring.nvars();
        let field = &ring.field;
        loop {
            let matrix: Vec<Vec<Coeff>> = (0..n)
                .map(|_| (0..n).map(|_| field.random(&mut rng)).collect())
                .collect();
            if linalg::invert(field, &matrix).is_some() {
                return LinearChange { matrix, seed };
            }
        }
    }

    pub fn inverse(&self, ring: &Ring) -> LinearChange {
        let matrix = linalg::invert(&ring.field, &self.matrix)
            .expect("linear change is invertible by construction");
        LinearChange {
            matrix,
            seed: self.seed,
        }
    }

    fn row_form(&self, ring: &Ring, i: usize) -> Polynomial {
        let terms = self.matrix[i]
            .iter()
            .enumerate()
            .map(|(j, c)| (Monomial::var(ring.nvars(), j), c.clone()))
            .collect();
        Polynomial::from_terms(ring, terms)
    }

    /// Substitutes x_i by its image linear form in every generator, with a
    /// shared cache of linear-form powers.
    pub fn apply_ideal(&self, ring: &Ring, gens: &[Polynomial]) -> Vec<Polynomial> {
        let forms: Vec<Polynomial> = (0..ring.nvars()).map(|i| self.row_form(ring, i)).collect();
        let mut powers: HashMap<(usize, u16), Polynomial> = HashMap::new();
        gens.iter()
            .map(|f| {
                let mut out = Polynomial::zero();
                for (m, c) in &f.terms {
                    let mut term = Polynomial::constant(ring, c.clone());
                    for (i, &e) in m.exps().iter().enumerate() {
                        if e > 0 {
                            let pw = power(ring, &forms, &mut powers, i, e);
                            term = term.mul(ring, pw);
                        }
                    }
                    out = out.add(ring, &term);
                }
                out
            })
            .collect()
    }

    pub fn apply(&self, ring: &Ring, f: &Polynomial) -> Polynomial {
        self.apply_ideal(ring, std::slice::from_ref(f))
            .pop()
            .unwrap()
    }
}

fn power<'a>(
    ring: &Ring,
    forms: &[Polynomial],
    cache: &'a mut HashMap<(usize, u16), Polynomial>,
    i: usize,
    e: u16,
) -> &'a Polynomial {
    if !cache.contains_key(&(i, e)) {
        let value = if e == 1 {
            forms[i].clone()
        } else {
            let prev = power(ring, forms, cache, i, e - 1).clone();
            prev.mul(ring, &forms[i])
        };
        cache.insert((i, e), value);
    }
    &cache[&(i, e)]
}

/// A single random linear form with all coefficients nonzero (a dense draw
/// that is "general" for every purpose this crate has).
pub fn random_linear_form<R: Rng>(ring: &Ring, rng: &mut R) -> Polynomial {
    let field: &Field = &ring.field;
    let terms = (0..ring.nvars())
        .map(|j| (Monomial::var(ring.nvars(), j), field.random_nonzero(rng)))
        .collect();
    Polynomial::from_terms(ring, terms)
}
