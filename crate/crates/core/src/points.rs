//! Finite point sets in projective space and their vanishing ideals.
//!
//! The Buchberger-Moller construction processes monomials degree by
//! degree in increasing degrevlex, inserting evaluation vectors into an
//! incremental echelon form. A dependency yields a fully reduced Groebner
//! basis element; an independent vector marks a standard monomial. The
//! loop stops once the evaluation map is surjective and the Hilbert
//! series of the collected leading terms certifies that no later
//! generator can appear.

use crate::field::Coeff;
use crate::groebner::GroebnerBasis;
use crate::linalg::Echelon;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::monomial_ideal::MonomialIdeal;
use crate::order::MonomialOrder;
use crate::poly::{Polynomial, Ring};
use crate::{Error, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    /// Normalized projective representatives: first nonzero coordinate 1.
    pub points: Vec<Vec<Coeff>>,
    pub seed: Option<u64>,
}

fn normalize(ring: &Ring, mut coords: Vec<Coeff>) -> Option<Vec<Coeff>> {
    let field = &ring.field;
    let first = coords.iter().position(|c| !field.is_zero(c))?;
    let inv = field.inv(&coords[first]);
    for c in coords.iter_mut() {
        *c = field.mul(c, &inv);
    }
    Some(coords)
}

/// Distinct random points of P^{n-1}, deterministic in the seed.
pub fn random_points(ring: &Ring, count: usize, seed: u64) -> PointSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<Vec<Coeff>> = Vec::with_capacity(count);
    while points.len() < count {
        let coords: Vec<Coeff> = (0..ring.nvars()).map(|_| ring.field.random(&mut rng)).collect();
        if let Some(p) = normalize(ring, coords) {
            if !points.contains(&p) {
                points.push(p);
            }
        }
    }
    PointSet {
        points,
        seed: Some(seed),
    }
}

fn eval_monomial(ring: &Ring, m: &Monomial, point: &[Coeff]) -> Coeff {
    let field = &ring.field;
    let mut acc = field.one();
    for (i, &e) in m.exps().iter().enumerate() {
        for _ in 0..e {
            acc = field.mul(&acc, &point[i]);
        }
    }
    acc
}

/// Reduced degrevlex Groebner basis of the vanishing ideal of the points.
pub fn vanishing_ideal(ring: &Ring, ps: &PointSet) -> GroebnerBasis {
    let np = ps.points.len();
    assert!(np > 0, "empty point set");
    let field = ring.field;
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut lead = MonomialIdeal::zero(ring.nvars());

    for t in 0..=(2 * np as u32 + 8) {
        // Dependencies only make sense within one degree, so each degree
        // gets a fresh echelon. Active columns are the point evaluations;
        // trailing columns record which candidates entered a combination.
        let mut ech = Echelon::new(field, np);
        let mut standard: Vec<Monomial> = Vec::new();
        let mut candidates: Vec<Monomial> = monomials_of_degree(ring.nvars(), t)
            .into_iter()
            .filter(|m| !lead.contains(m))
            .collect();
        candidates.sort_by(|a, b| MonomialOrder::DegRevLex.cmp(a, b));
        for m in candidates {
            let mut v: Vec<Coeff> = ps
                .points
                .iter()
                .map(|p| eval_monomial(ring, &m, p))
                .collect();
            // Successful inserts occupy tail slots 0..rank; a failing probe
            // reuses the next free slot, which no stored row touches.
            let slot = standard.len().min(np);
            let mut tail = vec![field.zero(); np + 1];
            tail[slot] = field.one();
            v.extend(tail);
            match ech.insert(v) {
                Ok(()) => standard.push(m),
                Err(dep) => {
                    // The tail encodes c*m + sum c_i*s_i whose evaluation
                    // vanishes on every point.
                    let mut terms: Vec<(Monomial, Coeff)> = Vec::new();
                    for (i, s) in standard.iter().enumerate() {
                        let c = dep[np + i].clone();
                        if !field.is_zero(&c) {
                            terms.push((s.clone(), c));
                        }
                    }
                    terms.push((m.clone(), dep[np + slot].clone()));
                    let g = Polynomial::from_terms(ring, terms).monic(ring);
                    assert_eq!(g.leading_monomial(), Some(&m));
                    lead = lead.add_generator(m);
                    basis.push(g);
                }
            }
        }
        // Evaluation surjective at this degree, and the collected leading
        // terms already have the series of np points from here through the
        // polynomial range: no later generator can exist.
        if standard.len() == np {
            let horizon = (lead.hilbert_numerator().len() + ring.nvars()).max(t as usize) as u32 + 1;
            let settled =
                (t..=horizon).all(|e| lead.hilbert_function(e as i64) == np as i128);
            if settled {
                basis.sort_by(|a, b| {
                    MonomialOrder::DegRevLex
                        .cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
                });
                return GroebnerBasis {
                    ring: ring.clone(),
                    basis,
                    truncated_at: None,
                    stats: Default::default(),
                };
            }
        }
    }
    unreachable!("vanishing ideal construction exceeded the degree horizon");
}

/// Initial ideal of the vanishing ideal.
pub fn initial_of_points(ring: &Ring, ps: &PointSet) -> MonomialIdeal {
    MonomialIdeal::new(ring.nvars(), vanishing_ideal(ring, ps).leading_monomials())
}

/// h-vector of the coordinate ring of the points.
pub fn h_vector(ring: &Ring, ps: &PointSet) -> Vec<i128> {
    initial_of_points(ring, ps).dim_degree_hpoly().2
}

/// Random points on the hypersurface {q = 0}, avoiding a forbidden list.
/// Samples random lines and scans the univariate restriction for roots.
pub fn points_on_hypersurface(
    ring: &Ring,
    q: &Polynomial,
    count: usize,
    seed: u64,
    avoid: &[Vec<Coeff>],
) -> Result<PointSet> {
    let crate::field::Field::Prime(p) = ring.field else {
        return Err(Error::Computation(
            "hypersurface sampling needs a finite prime field".into(),
        ));
    };
    let field = ring.field;
    let deg = q.degree().ok_or_else(|| {
        Error::Computation("cannot sample points on the zero hypersurface".into())
    })? as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<Vec<Coeff>> = Vec::new();
    let mut attempts = 0usize;
    while points.len() < count {
        attempts += 1;
        if attempts > 400 * count + 1000 {
            return Err(Error::Computation(format!(
                "hypersurface sampling stalled after {attempts} lines"
            )));
        }
        let a: Vec<Coeff> = (0..ring.nvars()).map(|_| field.random(&mut rng)).collect();
        let b: Vec<Coeff> = (0..ring.nvars()).map(|_| field.random(&mut rng)).collect();
        // Restrict q to the line a + t*b: interpolate the degree-<=deg
        // univariate from deg+1 sample values, then scan for roots.
        let samples: Vec<Coeff> = (0..=deg as i64)
            .map(|tv| {
                let t = field.from_i64(tv);
                let pt: Vec<Coeff> = a
                    .iter()
                    .zip(&b)
                    .map(|(x, y)| field.add(x, &field.mul(&t, y)))
                    .collect();
                q.eval(ring, &pt)
            })
            .collect();
        let vander: Vec<Vec<Coeff>> = (0..=deg as i64)
            .map(|tv| {
                let t = field.from_i64(tv);
                let mut pw = field.one();
                (0..=deg)
                    .map(|_| {
                        let cur = pw.clone();
                        pw = field.mul(&pw, &t);
                        cur
                    })
                    .collect()
            })
            .collect();
        let Some(vinv) = crate::linalg::invert(&field, &vander) else {
            continue;
        };
        let coeffs = crate::linalg::mat_vec(&field, &vinv, &samples);
        if coeffs.iter().all(|c| field.is_zero(c)) {
            continue;
        }
        for tv in 0..p {
            // Horner evaluation of the restricted polynomial at t = tv.
            let t = Coeff::Fp(tv);
            let mut val = field.zero();
            for c in coeffs.iter().rev() {
                val = field.add(&field.mul(&val, &t), c);
            }
            if !field.is_zero(&val) {
                continue;
            }
            let pt: Vec<Coeff> = a
                .iter()
                .zip(&b)
                .map(|(x, y)| field.add(x, &field.mul(&t, y)))
                .collect();
            let Some(norm) = normalize(ring, pt) else {
                continue;
            };
            debug_assert!(field.is_zero(&q.eval(ring, &norm)));
            if points.contains(&norm) || avoid.contains(&norm) {
                continue;
            }
            points.push(norm);
            break;
        }
    }
    Ok(PointSet {
        points,
        seed: Some(seed),
    })
}

/// Disjoint union of two point sets; errors if they share a point.
pub fn union(a: &PointSet, b: &PointSet) -> Result<PointSet> {
    let mut points = a.points.clone();
    for p in &b.points {
        if points.contains(p) {
            return Err(Error::Computation(
                "point sets overlap; union would not be reduced".into(),
            ));
        }
        points.push(p.clone());
    }
    Ok(PointSet {
        points,
        seed: None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UppOutcome {
    pub holds: bool,
    /// A subset whose Hilbert function is not the generic truncation, if
    /// any.
    pub witness: Option<Vec<usize>>,
}

/// Uniform position check by brute force over all subsets: every subset
/// of size m must have Hilbert function min(H_X(t), m). Only sensible for
/// small sets; refuses more than `limit` points.
pub fn upp_check(ring: &Ring, ps: &PointSet, limit: usize) -> Result<UppOutcome> {
    let np = ps.points.len();
    if np > limit {
        return Err(Error::Computation(format!(
            "uniform position check limited to {limit} points, got {np}"
        )));
    }
    let full = initial_of_points(ring, ps);
    let horizon = full.hilbert_numerator().len() as u32 + 1;
    let full_hf: Vec<i128> = full.hilbert_values(0, horizon);
    for mask in 1u32..(1u32 << np) {
        let subset: Vec<usize> = (0..np).filter(|i| mask >> i & 1 == 1).collect();
        let sub = PointSet {
            points: subset.iter().map(|&i| ps.points[i].clone()).collect(),
            seed: None,
        };
        let m = sub.points.len() as i128;
        let sub_hf = initial_of_points(ring, &sub).hilbert_values(0, horizon);
        for (t, &h) in sub_hf.iter().enumerate() {
            if h != full_hf[t].min(m) {
                return Ok(UppOutcome {
                    holds: false,
                    witness: Some(subset),
                });
            }
        }
    }
    Ok(UppOutcome {
        holds: true,
        witness: None,
    })
}
