//! Monomial orders. Degrevlex is the default everywhere; lex and block
//! orders exist for elimination.

use crate::monomial::Monomial;
use std::cmp::Ordering;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Degree reverse lexicographic with x_1 > x_2 > ... > x_n.
    DegRevLex,
    /// Pure lexicographic with x_1 > x_2 > ... > x_n.
    Lex,
    /// Eliminates the first `block` variables: compares the block's total
    /// degree (refined degrevlex-style within the block), then the rest by
    /// degrevlex. A Groebner basis in this order intersected with the
    /// block-free monomials generates the elimination ideal.
    Elimination { block: usize },
}

impl MonomialOrder {
    /// Greater means "larger in the order", so leading terms come first
    /// when terms are sorted descending.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => degrevlex(a.exps(), b.exps(), a.degree(), b.degree()),
            MonomialOrder::Lex => lex(a.exps(), b.exps()),
            MonomialOrder::Elimination { block } => {
                let (ab, ar) = a.exps().split_at(*block);
                let (bb, br) = b.exps().split_at(*block);
                let deg = |s: &[u16]| s.iter().map(|&e| e as u32).sum::<u32>();
                degrevlex(ab, bb, deg(ab), deg(bb))
                    .then_with(|| degrevlex(ar, br, deg(ar), deg(br)))
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

fn degrevlex(a: &[u16], b: &[u16], deg_a: u32, deg_b: u32) -> Ordering {
    match deg_a.cmp(&deg_b) {
        Ordering::Equal => {}
        other => return other,
    }
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            // The *smaller* exponent on the rightmost differing (i.e.
            // cheapest) variable wins.
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

fn lex(a: &[u16], b: &[u16]) -> Ordering {
    for i in 0..a.len() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::monomials_of_degree;

    fn m(exps: &[u16]) -> Monomial {
        Monomial::from_exps(exps)
    }

    #[test]
    fn degrevlex_textbook_degree_two() {
        // x1^2 > x1x2 > x2^2 > x1x3 > x2x3 > x3^2
        let expected = vec![
            m(&[2, 0, 0]),
            m(&[1, 1, 0]),
            m(&[0, 2, 0]),
            m(&[1, 0, 1]),
            m(&[0, 1, 1]),
            m(&[0, 0, 2]),
        ];
        let mut all = monomials_of_degree(3, 2);
        all.sort_by(|a, b| MonomialOrder::DegRevLex.cmp(b, a));
        assert_eq!(all, expected);
    }

    #[test]
    fn lex_textbook_degree_two() {
        // x1^2 > x1x2 > x1x3 > x2^2 > x2x3 > x3^2
        let expected = vec![
            m(&[2, 0, 0]),
            m(&[1, 1, 0]),
            m(&[1, 0, 1]),
            m(&[0, 2, 0]),
            m(&[0, 1, 1]),
            m(&[0, 0, 2]),
        ];
        let mut all = monomials_of_degree(3, 2);
        all.sort_by(|a, b| MonomialOrder::Lex.cmp(b, a));
        assert_eq!(all, expected);
    }

    #[test]
    fn degrevlex_separates_cubic_from_mixed_term() {
        // In 4 variables, x3^3 beats x1*x4^2 despite the smaller leading
        // variable: both have degree 3 and x4's exponent decides.
        let a = m(&[0, 0, 3, 0]);
        let b = m(&[1, 0, 0, 2]);
        assert_eq!(MonomialOrder::DegRevLex.cmp(&a, &b), Ordering::Greater);
        assert_eq!(MonomialOrder::Lex.cmp(&a, &b), Ordering::Less);
    }

    #[test]
    fn orders_are_total_and_multiplicative() {
        let pool: Vec<Monomial> = (0..=3u32)
            .flat_map(|d| monomials_of_degree(4, d))
            .collect();
        for order in [
            MonomialOrder::DegRevLex,
            MonomialOrder::Lex,
            MonomialOrder::Elimination { block: 2 },
        ] {
            for a in &pool {
                for b in &pool {
                    let ab = order.cmp(a, b);
                    assert_eq!(ab.reverse(), order.cmp(b, a));
                    if ab == Ordering::Equal {
                        assert_eq!(a, b);
                    }
                    for c in &pool {
                        // transitivity spot check
                        if ab != Ordering::Less && order.cmp(b, c) != Ordering::Less {
                            assert_ne!(order.cmp(a, c), Ordering::Less);
                        }
                    }
                    let t = m(&[1, 0, 2, 1]);
                    assert_eq!(order.cmp(&a.mul(&t), &b.mul(&t)), ab);
                }
            }
        }
    }

    #[test]
    fn elimination_block_dominates() {
        let order = MonomialOrder::Elimination { block: 1 };
        // Any monomial containing the eliminated variable beats any without.
        let with_t = m(&[1, 0, 0]);
        let without = m(&[0, 5, 5]);
        assert_eq!(order.cmp(&with_t, &without), Ordering::Greater);
        // Within the block-free part it falls back to degrevlex.
        let a = m(&[0, 2, 0]);
        let b = m(&[0, 1, 1]);
        assert_eq!(order.cmp(&a, &b), Ordering::Greater);
    }

    #[test]
    fn one_is_minimal_in_degree_orders() {
        let one = Monomial::one(3);
        for mm in monomials_of_degree(3, 2) {
            assert_eq!(MonomialOrder::DegRevLex.cmp(&mm, &one), Ordering::Greater);
        }
    }
}
