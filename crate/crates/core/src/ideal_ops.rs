//! Ideal-level plumbing built on the Buchberger engine: elimination by
//! block orders, intersections via the auxiliary-variable trick, colon
//! ideals as (I n (f)) / f, and saturation by iterated colon.

use crate::field::Coeff;
use crate::groebner::{buchberger, normal_form, GroebnerBasis};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::{Polynomial, Ring};

/// Generators of I n k[x_{block+1}, ..., x_n], returned in that smaller
/// ring (degrevlex). Requires `block` < nvars.
pub fn elimination(ring: &Ring, gens: &[Polynomial], block: usize) -> (Ring, Vec<Polynomial>) {
    let elim_ring = ring.with_order(MonomialOrder::Elimination { block });
    let reordered: Vec<Polynomial> = gens.iter().map(|g| g.reorder(&elim_ring)).collect();
    let gb = buchberger(&elim_ring, &reordered, None);
    let small = Ring::new(ring.vars[block..].to_vec(), ring.field);
    let kept = gb
        .basis
        .iter()
        .filter(|g| {
            g.leading_monomial()
                .map_or(true, |m| m.exps()[..block].iter().all(|&e| e == 0))
        })
        .map(|g| {
            let terms = g
                .terms
                .iter()
                .map(|(m, c)| {
                    assert!(
                        m.exps()[..block].iter().all(|&e| e == 0),
                        "block order left an eliminated variable below the leading term"
                    );
                    (Monomial::from_exps(&m.exps()[block..]), c.clone())
                })
                .collect();
            Polynomial::from_terms(&small, terms)
        })
        .collect();
    (small, kept)
}

/// I n J, computed by eliminating t from t*I + (1-t)*J.
pub fn intersection(ring: &Ring, i_gens: &[Polynomial], j_gens: &[Polynomial]) -> Vec<Polynomial> {
    let ext = ring.with_prepended_var("t0");
    let t = Polynomial::monomial(Monomial::var(ext.nvars(), 0), &ext.field);
    let one = Polynomial::constant(&ext, ext.field.one());
    let one_minus_t = one.sub(&ext, &t);
    let mut gens: Vec<Polynomial> = i_gens
        .iter()
        .map(|f| t.mul(&ext, &f.prepend_var(&ext)))
        .collect();
    gens.extend(j_gens.iter().map(|g| one_minus_t.mul(&ext, &g.prepend_var(&ext))));
    let (_, kept) = elimination(&ext, &gens, 1);
    kept.into_iter().map(|g| g.reorder(ring)).collect()
}

/// Quotient with no remainder; None if `g` does not divide `f` exactly.
pub fn exact_divide(ring: &Ring, f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
    assert!(!g.is_zero(), "division by zero polynomial");
    let mut rem = f.clone();
    let mut quot: Vec<(Monomial, Coeff)> = Vec::new();
    let gl = g.leading_monomial().unwrap();
    let gc = g.leading_coeff().unwrap();
    while let Some((lm, lc)) = rem.terms.first().cloned() {
        let q = gl.div_into(&lm)?;
        let c = ring.field.div(&lc, gc);
        rem = rem.sub_scaled(ring, &c, &q, g);
        quot.push((q, c));
    }
    Some(Polynomial::from_terms(ring, quot))
}

/// (I : f) for nonzero f, via (I n (f)) = f * (I : f).
pub fn colon_by_poly(ring: &Ring, gens: &[Polynomial], f: &Polynomial) -> Vec<Polynomial> {
    let meet = intersection(ring, gens, std::slice::from_ref(f));
    meet.iter()
        .map(|h| {
            exact_divide(ring, h, f)
                .expect("intersection with a principal ideal is divisible by its generator")
        })
        .collect()
}

/// Reduced Groebner basis as a canonical form for ideal comparison.
pub fn reduced_basis(ring: &Ring, gens: &[Polynomial]) -> Vec<Polynomial> {
    buchberger(ring, gens, None).basis
}

pub fn ideal_equals(ring: &Ring, a: &[Polynomial], b: &[Polynomial]) -> bool {
    reduced_basis(ring, a) == reduced_basis(ring, b)
}

/// I : x_{i+1}^infinity by iterating the colon until the reduced basis
/// stabilizes.
pub fn saturate_by_variable(ring: &Ring, gens: &[Polynomial], i: usize) -> Vec<Polynomial> {
    let x = Polynomial::monomial(Monomial::var(ring.nvars(), i), &ring.field);
    let mut current = reduced_basis(ring, gens);
    loop {
        let next = reduced_basis(ring, &colon_by_poly(ring, &current, &x));
        if next == current {
            return current;
        }
        current = next;
    }
}

/// Membership of `f` in the ideal generated by `gens` (computes a basis).
pub fn contains(ring: &Ring, gens: &[Polynomial], f: &Polynomial) -> bool {
    let gb = buchberger(ring, gens, None);
    normal_form(ring, f, &gb.basis).is_zero()
}

/// Membership against an existing untruncated basis.
pub fn contains_with_basis(ring: &Ring, gb: &GroebnerBasis, f: &Polynomial) -> bool {
    normal_form(ring, f, &gb.basis).is_zero()
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
    fn eliminating_the_leading_variable_of_a_linear_ideal() {
        let r = Ring::standard(3, Field::Prime(32003));
        let gens = vec![
            poly(&r, &[(1, &[1, 0, 0]), (-1, &[0, 0, 1])]),
            poly(&r, &[(1, &[0, 1, 0])]),
        ];
        let (small, kept) = elimination(&r, &gens, 1);
        assert_eq!(small.nvars(), 2);
        assert_eq!(kept.len(), 1);
        assert_eq!(kept[0], poly(&small, &[(1, &[1, 0])]));
    }

    #[test]
    fn intersection_of_coprime_principal_ideals_is_the_product() {
        let r = Ring::standard(3, Field::Prime(32003));
        let f = poly(&r, &[(1, &[2, 0, 0]), (-1, &[0, 1, 1])]);
        let g = poly(&r, &[(1, &[0, 2, 0]), (-1, &[1, 0, 1])]);
        let meet = intersection(&r, &[f.clone()], &[g.clone()]);
        let product = f.mul(&r, &g);
        assert!(ideal_equals(&r, &meet, &[product]));
    }

    #[test]
    fn intersection_with_itself_is_identity() {
        let r = Ring::standard(3, Field::Prime(32003));
        let f = poly(&r, &[(1, &[2, 0, 0]), (-1, &[0, 1, 1])]);
        let meet = intersection(&r, &[f.clone()], &[f.clone()]);
        assert!(ideal_equals(&r, &meet, &[f]));
    }

    #[test]
    fn intersection_members_lie_in_both_ideals() {
        let r = Ring::standard(3, Field::Prime(32003));
        let i_gens = vec![
            poly(&r, &[(1, &[2, 0, 0]), (-1, &[0, 1, 1])]),
            poly(&r, &[(1, &[1, 1, 0])]),
        ];
        let j_gens = vec![poly(&r, &[(1, &[0, 1, 0]), (3, &[0, 0, 1])])];
        let meet = intersection(&r, &i_gens, &j_gens);
        assert!(!meet.is_empty());
        for h in &meet {
            assert!(contains(&r, &i_gens, h));
            assert!(contains(&r, &j_gens, h));
        }
    }

    #[test]
    fn exact_division_recovers_cofactor() {
        let r = Ring::standard(3, Field::Prime(32003));
        let f = poly(&r, &[(1, &[2, 0, 0]), (-1, &[0, 1, 1])]);
        let g = poly(&r, &[(2, &[0, 2, 0]), (5, &[1, 0, 1])]);
        let fg = f.mul(&r, &g);
        assert_eq!(exact_divide(&r, &fg, &g), Some(f.clone()));
        assert_eq!(exact_divide(&r, &fg, &f), Some(g.clone()));
        let not_multiple = fg.add(&r, &poly(&r, &[(1, &[0, 0, 3])]));
        assert_eq!(exact_divide(&r, &not_multiple, &f), None);
    }

    #[test]
    fn colon_of_product_by_factor() {
        let r = Ring::standard(3, Field::Prime(32003));
        let f = poly(&r, &[(1, &[2, 0, 0]), (-1, &[0, 1, 1])]);
        let g = poly(&r, &[(1, &[0, 2, 0]), (-1, &[1, 0, 1])]);
        let fg = f.mul(&r, &g);
        let quot = colon_by_poly(&r, &[fg], &f);
        assert!(ideal_equals(&r, &quot, &[g]));
    }

    #[test]
    fn colon_splits_monomial_ideal() {
        let r = Ring::standard(3, Field::Prime(32003));
        let x1x2 = poly(&r, &[(1, &[1, 1, 0])]);
        let x1x3 = poly(&r, &[(1, &[1, 0, 1])]);
        let x1 = poly(&r, &[(1, &[1, 0, 0])]);
        let quot = colon_by_poly(&r, &[x1x2, x1x3], &x1);
        let x2 = poly(&r, &[(1, &[0, 1, 0])]);
        let x3 = poly(&r, &[(1, &[0, 0, 1])]);
        assert!(ideal_equals(&r, &quot, &[x2, x3]));
    }

    #[test]
    fn saturation_removes_embedded_component() {
        let r = Ring::standard(3, Field::Prime(32003));
        // x1 * (x1, x2, x3): saturating by x3 leaves (x1).
        let gens = vec![
            poly(&r, &[(1, &[2, 0, 0])]),
            poly(&r, &[(1, &[1, 1, 0])]),
            poly(&r, &[(1, &[1, 0, 1])]),
        ];
        let sat = saturate_by_variable(&r, &gens, 2);
        assert!(ideal_equals(&r, &sat, &[poly(&r, &[(1, &[1, 0, 0])])]));
    }

    #[test]
    fn saturation_of_saturated_ideal_is_identity() {
        let r = Ring::standard(3, Field::Prime(32003));
        // Two smooth conics meeting away from the line x3 = 0; their
        // complete intersection ideal is saturated and x3 is a nonzerodivisor
        // on the quotient away from irrelevant components.
        let gens = vec![
            poly(&r, &[(1, &[2, 0, 0]), (-1, &[0, 1, 1])]),
            poly(&r, &[(1, &[0, 2, 0]), (-1, &[1, 0, 1])]),
        ];
        let sat = saturate_by_variable(&r, &gens, 2);
        assert!(ideal_equals(&r, &sat, &gens));
    }
}
