//! Hilbert functions and the invariants read from them.
//!
//! Tables are computed through the initial ideal of a plain (non-generic)
//! Groebner basis, which has the same Hilbert function as the ideal itself
//! and is far cheaper than a generic change of coordinates. Dimension and
//! degree come from the series numerator exactly. Macaulay's growth bound
//! is implemented via the d-binomial expansion, with a brute-force
//! lex-segment oracle alongside for cross-checking.

use crate::borel;
use crate::gin;
use crate::groebner::{buchberger, GroebnerBasis};
use crate::linalg::Echelon;
use crate::monomial::{binomial, monomials_of_degree, Monomial};
use crate::monomial_ideal::MonomialIdeal;
use crate::order::MonomialOrder;
use crate::poly::{Polynomial, Ring};
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertTable {
    pub from: u32,
    pub to: u32,
    /// H(R/I, t) for t in from..=to.
    pub values: Vec<i128>,
    /// First differences over the same window, with H(t) = 0 for t < 0.
    pub delta1: Vec<i128>,
    pub delta2: Vec<i128>,
    pub dim: i64,
    pub degree: i128,
    /// Series numerator after cancelling all (1-t) factors; equals the
    /// h-vector for Cohen-Macaulay quotients.
    pub h_poly: Vec<i128>,
}

fn differences(values: &[i128], first_prev: i128, second_prev: i128) -> (Vec<i128>, Vec<i128>) {
    let mut delta1 = Vec::with_capacity(values.len());
    let mut prev = first_prev;
    for &v in values {
        delta1.push(v - prev);
        prev = v;
    }
    let mut delta2 = Vec::with_capacity(values.len());
    let mut prev = second_prev;
    for &d in &delta1 {
        delta2.push(d - prev);
        prev = d;
    }
    (delta1, delta2)
}

/// Table of H(R/I) for a monomial ideal, degrees 0..=to.
pub fn table_from_monomial(ideal: &MonomialIdeal, to: u32) -> HilbertTable {
    let values = ideal.hilbert_values(0, to);
    let (delta1, delta2) = differences(&values, 0, 0);
    let (dim, degree, h_poly) = ideal.dim_degree_hpoly();
    HilbertTable {
        from: 0,
        to,
        values,
        delta1,
        delta2,
        dim,
        degree,
        h_poly,
    }
}

/// Initial ideal of I under the ring's current order, from an untruncated
/// basis.
pub fn initial_ideal(ring: &Ring, gens: &[Polynomial]) -> MonomialIdeal {
    let gb = buchberger(ring, gens, None);
    MonomialIdeal::new(ring.nvars(), gb.leading_monomials())
}

/// Hilbert table of R/I for arbitrary homogeneous generators.
pub fn hilbert_table(ring: &Ring, gens: &[Polynomial], to: u32) -> HilbertTable {
    table_from_monomial(&initial_ideal(ring, gens), to)
}

/// Initial degree of the ideal: smallest degree of a nonzero element.
pub fn alpha(ring: &Ring, gens: &[Polynomial]) -> Option<u32> {
    let gb = buchberger(ring, gens, None);
    gb.basis.iter().filter_map(|g| g.degree()).min()
}

/// The Macaulay upper bound h^<d> for the value in degree d+1 given value
/// h in degree d, via the d-binomial expansion of h. Requires d >= 1.
pub fn macaulay_bound(h: i128, d: u32) -> i128 {
    assert!(d >= 1, "growth bound needs a positive degree");
    if h == 0 {
        return 0;
    }
    let mut rem = h;
    let mut j = d as i64;
    let mut bound: i128 = 0;
    while rem > 0 && j >= 1 {
        let mut a = j;
        while binomial(a + 1, j) <= rem {
            a += 1;
        }
        rem -= binomial(a, j);
        bound += binomial(a + 1, j + 1);
        j -= 1;
    }
    assert_eq!(rem, 0, "d-binomial expansion must terminate exactly");
    bound
}

/// Brute-force oracle for maximal Hilbert function growth in `nvars`
/// variables: realizes H(R/I, d) = h by a lex-segment and measures
/// H(R/I, d+1). None when h exceeds the number of degree-d monomials.
pub fn lex_segment_growth(h: i128, d: u32, nvars: usize) -> Option<i128> {
    let mut all_d = monomials_of_degree(nvars, d);
    if h > all_d.len() as i128 || h < 0 {
        return None;
    }
    // Lex-largest monomials form the ideal's degree-d slice.
    all_d.sort_by(|a, b| MonomialOrder::Lex.cmp(b, a));
    let ideal_slice = &all_d[..all_d.len() - h as usize];
    let mut next: std::collections::HashSet<Monomial> = std::collections::HashSet::new();
    for m in ideal_slice {
        for i in 0..nvars {
            next.insert(m.mul_var(i));
        }
    }
    let total_next = binomial(d as i64 + nvars as i64, nvars as i64 - 1);
    Some(total_next - next.len() as i128)
}

/// Degrees t with H(t+1) exceeding the Macaulay bound applied to H(t).
/// Empty for every genuine graded-quotient Hilbert function.
pub fn macaulay_violations(table: &HilbertTable) -> Vec<u32> {
    let mut bad = Vec::new();
    for t in 1..table.values.len().saturating_sub(1) {
        let h = table.values[t];
        let next = table.values[t + 1];
        if next > macaulay_bound(h, table.from + t as u32) {
            bad.push(table.from + t as u32);
        }
    }
    bad
}

/// Echelonized vector-space basis of the degree-d component of the ideal,
/// built from Groebner basis multiples. Deterministic.
pub fn component_basis(ring: &Ring, gb: &GroebnerBasis, d: u32) -> Vec<Polynomial> {
    let monoms = monomials_of_degree(ring.nvars(), d);
    let index: std::collections::HashMap<&Monomial, usize> =
        monoms.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut ech = Echelon::new(ring.field, monoms.len());
    for g in &gb.basis {
        let gd = match g.degree() {
            Some(gd) if gd <= d => gd,
            _ => continue,
        };
        for m in monomials_of_degree(ring.nvars(), d - gd) {
            let prod = g.mul_term(ring, &m, &ring.field.one());
            let mut row = vec![ring.field.zero(); monoms.len()];
            for (tm, tc) in &prod.terms {
                row[index[tm]] = tc.clone();
            }
            let _ = ech.insert(row);
        }
    }
    // Re-emit the echelon rows as polynomials so the basis is canonical.
    ech.rows()
        .iter()
        .map(|row| {
            let terms = row
                .iter()
                .enumerate()
                .filter(|(_, c)| !ring.field.is_zero(c))
                .map(|(i, c)| (monoms[i].clone(), c.clone()))
                .collect();
            Polynomial::from_terms(ring, terms)
        })
        .collect()
}

/// Number of minimal generators of a monomial ideal in one degree,
/// computed dimension-style: |I_e| - |R_1 * I_{e-1}|.
pub fn monomial_min_gens_via_dims(ideal: &MonomialIdeal, e: u32) -> i128 {
    let in_e = monomials_of_degree(ideal.nvars(), e)
        .into_iter()
        .filter(|m| ideal.contains(m))
        .count() as i128;
    if e == 0 {
        return in_e;
    }
    let mut grown: std::collections::HashSet<Monomial> = std::collections::HashSet::new();
    for m in monomials_of_degree(ideal.nvars(), e - 1) {
        if ideal.contains(&m) {
            for i in 0..ideal.nvars() {
                grown.insert(m.mul_var(i));
            }
        }
    }
    in_e - grown.len() as i128
}

#[derive(Debug, Clone)]
pub struct Crystallization {
    pub d: u32,
    /// True when the capped gin shows no minimal generator in degree d+1.
    pub no_new_generator: bool,
    /// Certified regularity when the principle applies: the gin is then
    /// generated in degrees <= d and the ideal is d-regular.
    pub certified_regular_at: Option<u32>,
    pub gin: MonomialIdeal,
}

/// Checks the crystallization principle for an ideal generated in degrees
/// <= d: if Gin(I) has no minimal generator in degree d+1, it has none in
/// any larger degree, so I is d-regular. Uses a gin capped at d+1.
pub fn crystallization_check(
    ring: &Ring,
    gens: &[Polynomial],
    d: u32,
    seed: u64,
    trials: usize,
) -> Result<Crystallization> {
    assert!(
        gens.iter()
            .filter_map(|g| g.degree())
            .all(|e| e <= d),
        "crystallization applies to ideals generated in degrees <= d"
    );
    let gin_result = gin::gin(ring, gens, seed, trials, Some(d + 1));
    let gin_ideal = gin_result.require_strongly_stable()?.clone();
    let direct = gin_ideal.minimal_generators_of_degree(d + 1).len() as i128;
    let via_dims = monomial_min_gens_via_dims(&gin_ideal, d + 1);
    assert_eq!(
        direct, via_dims,
        "minimal generator count disagrees with the dimension count"
    );
    let no_new = direct == 0;
    Ok(Crystallization {
        d,
        no_new_generator: no_new,
        certified_regular_at: if no_new { Some(d) } else { None },
        gin: gin_ideal,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invariants {
    pub dim: i64,
    pub degree: i128,
    pub d_inv: u32,
    pub m_inv: u32,
    pub reg: u32,
    pub satdeg: u32,
    pub alpha: u32,
}

/// Full invariant extraction: dimension/degree/alpha from a plain initial
/// ideal, D/M/regularity/saturation degree from the gin.
pub fn invariants(
    ring: &Ring,
    gens: &[Polynomial],
    seed: u64,
    trials: usize,
) -> Result<(Invariants, gin::GinResult)> {
    let plain = initial_ideal(ring, gens);
    let (dim, degree, _) = plain.dim_degree_hpoly();
    let alpha = plain.min_gen_degree().unwrap_or(0);
    let gin_result = gin::gin(ring, gens, seed, trials, None);
    let g = gin_result.require_strongly_stable()?;
    let inv = Invariants {
        dim,
        degree,
        d_inv: borel::d_invariant(g),
        m_inv: borel::m_invariant(g),
        reg: borel::regularity(g),
        satdeg: borel::sat_degree(g),
        alpha,
    };
    Ok((inv, gin_result))
}

/// Evaluation vector of a polynomial basis: dimension of the span of
/// degree-d elements of an ideal, from the table instead.
pub fn codim_in_degree(ring: &Ring, table: &HilbertTable, d: u32) -> i128 {
    let full = binomial(d as i64 + ring.nvars() as i64 - 1, ring.nvars() as i64 - 1);
    full - table.values[(d - table.from) as usize]
}
