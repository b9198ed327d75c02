//! Monomial ideals: minimal generators, membership, and the exact Hilbert
//! series of the quotient via the pivot-variable recursion
//!
//!   N(I) = N(I + (x)) + t * N(I : x)
//!
//! on numerators, where N(I) / (1-t)^n is the Hilbert series of R/I.
//! Dimension, degree, and the h-polynomial all come from cancelling
//! (1-t)-factors out of the numerator, so no curve fitting or window
//! heuristics are involved.

use crate::monomial::{binomial, monomials_of_degree, Monomial};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    /// Minimal generators, sorted by degree then descending degrevlex.
    gens: Vec<Monomial>,
}

/// Drops every monomial divisible by another in the list.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::new();
    for m in gens {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> MonomialIdeal {
        let mut gens = minimalize(gens);
        gens.sort_by(|a, b| {
            a.degree().cmp(&b.degree()).then_with(|| {
                crate::order::MonomialOrder::DegRevLex.cmp(b, a)
            })
        });
        MonomialIdeal { nvars, gens }
    }

    pub fn zero(nvars: usize) -> MonomialIdeal {
        MonomialIdeal {
            nvars,
            gens: Vec::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn max_gen_degree(&self) -> u32 {
        self.gens.iter().map(|g| g.degree()).max().unwrap_or(0)
    }

    pub fn min_gen_degree(&self) -> Option<u32> {
        self.gens.iter().map(|g| g.degree()).min()
    }

    pub fn add_generator(&self, m: Monomial) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.push(m);
        MonomialIdeal::new(self.nvars, gens)
    }

    pub fn minimal_generators_of_degree(&self, d: u32) -> Vec<Monomial> {
        self.gens
            .iter()
            .filter(|g| g.degree() == d)
            .cloned()
            .collect()
    }

    /// Monomials of degree d not in the ideal.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        monomials_of_degree(self.nvars, d)
            .into_iter()
            .filter(|m| !self.contains(m))
            .collect()
    }

    /// Numerator of the Hilbert series of R/I over the common denominator
    /// (1-t)^nvars, as coefficients indexed by degree.
    pub fn hilbert_numerator(&self) -> Vec<i128> {
        numerator(&self.gens)
    }

    /// (dim, degree, h-polynomial) of R/I, all exact. The h-polynomial is
    /// the numerator after cancelling every (1-t) factor; its value at 1 is
    /// the degree (multiplicity). For I = R returns (-1, 0, []).
    pub fn dim_degree_hpoly(&self) -> (i64, i128, Vec<i128>) {
        let num = self.hilbert_numerator();
        if num.iter().all(|&c| c == 0) {
            return (-1, 0, Vec::new());
        }
        let mut q = trim(num);
        let mut strips = 0usize;
        while q.iter().sum::<i128>() == 0 {
            q = divide_by_one_minus_t(&q);
            strips += 1;
        }
        let dim = self.nvars as i64 - strips as i64;
        let degree = q.iter().sum::<i128>();
        (dim, degree, q)
    }

    pub fn dim(&self) -> i64 {
        self.dim_degree_hpoly().0
    }

    pub fn degree(&self) -> i128 {
        self.dim_degree_hpoly().1
    }

    /// H(R/I, d) evaluated from the series numerator.
    pub fn hilbert_function(&self, d: i64) -> i128 {
        let num = self.hilbert_numerator();
        let n = self.nvars as i64;
        num.iter()
            .enumerate()
            .map(|(j, &c)| c * binomial(d - j as i64 + n - 1, n - 1))
            .sum()
    }

    pub fn hilbert_values(&self, from: u32, to: u32) -> Vec<i128> {
        (from..=to).map(|d| self.hilbert_function(d as i64)).collect()
    }
}

fn trim(mut v: Vec<i128>) -> Vec<i128> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Q(t) = N(t) / (1-t), valid only when N(1) = 0.
fn divide_by_one_minus_t(n: &[i128]) -> Vec<i128> {
    let mut q = Vec::with_capacity(n.len().saturating_sub(1));
    let mut acc: i128 = 0;
    for (i, &c) in n.iter().enumerate() {
        acc += c;
        if i + 1 < n.len() {
            q.push(acc);
        } else {
            assert_eq!(acc, 0, "numerator not divisible by 1-t");
        }
    }
    trim(q)
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_shifted(a: &[i128], b: &[i128], shift: usize) -> Vec<i128> {
    let len = a.len().max(b.len() + shift);
    let mut out = vec![0i128; len];
    out[..a.len()].copy_from_slice(a);
    for (j, &y) in b.iter().enumerate() {
        out[j + shift] += y;
    }
    trim(out)
}

fn numerator(gens: &[Monomial]) -> Vec<i128> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return vec![0];
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        let mut acc = vec![1i128];
        for g in gens {
            let mut factor = vec![0i128; g.degree() as usize + 1];
            factor[0] = 1;
            factor[g.degree() as usize] = -1;
            acc = poly_mul(&acc, &factor);
        }
        return acc;
    }
    // Pivot on the variable hitting the most generators.
    let nvars = gens[0].nvars();
    let pivot = (0..nvars)
        .max_by_key(|&i| gens.iter().filter(|g| g.exp(i) > 0).count())
        .unwrap();
    // I + (x): generators not involving the pivot, plus the pivot itself.
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.exp(pivot) == 0).cloned().collect();
    plus.push(Monomial::var(nvars, pivot));
    // I : x: divide one pivot power out of each generator.
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            if g.exp(pivot) > 0 {
                Monomial::var(nvars, pivot).div_into(g).unwrap()
            } else {
                g.clone()
            }
        })
        .collect();
    let n_plus = numerator(&minimalize(plus));
    let n_colon = numerator(&minimalize(colon));
    poly_add_shifted(&n_plus, &n_colon, 1)
}

impl std::fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let vars: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        let parts: Vec<String> = self.gens.iter().map(|g| g.display(&vars)).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn mi(nvars: usize, gens: &[&[u16]]) -> MonomialIdeal {
        MonomialIdeal::new(nvars, gens.iter().map(|e| Monomial::from_exps(e)).collect())
    }

    #[test]
    fn minimal_generators_are_kept_canonical() {
        let i = mi(2, &[&[2, 0], &[2, 1], &[1, 1], &[0, 3]]);
        // x1^2*x2 is divisible by both x1^2 and x1*x2.
        assert_eq!(
            i.gens(),
            &[
                Monomial::from_exps(&[2, 0]),
                Monomial::from_exps(&[1, 1]),
                Monomial::from_exps(&[0, 3]),
            ]
        );
        assert!(i.contains(&Monomial::from_exps(&[2, 5])));
        assert!(!i.contains(&Monomial::from_exps(&[1, 0])));
    }

    #[test]
    fn complete_intersection_numerator_factors() {
        let i = mi(2, &[&[2, 0], &[1, 1], &[0, 3]]);
        // (x^2, xy, y^3): quotient basis 1 | x, y | y^2, so the series is
        // 1 + 2t + t^2 and the numerator (1+t)^2 (1-t)^2 = (1 - t^2)^2.
        assert_eq!(i.hilbert_numerator(), vec![1, 0, -2, 0, 1]);
        assert_eq!(i.hilbert_values(0, 5), vec![1, 2, 1, 0, 0, 0]);
        let (dim, degree, _) = i.dim_degree_hpoly();
        assert_eq!(dim, 0);
        assert_eq!(degree, 4);
    }

    #[test]
    fn series_hf_matches_standard_monomial_count_randomly() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..60 {
            let nvars = rng.gen_range(1..=4usize);
            let count = rng.gen_range(1..=6usize);
            let gens: Vec<Monomial> = (0..count)
                .map(|_| {
                    let exps: Vec<u16> =
                        (0..nvars).map(|_| rng.gen_range(0..4u16)).collect();
                    Monomial::from_exps(&exps)
                })
                .filter(|m| !m.is_one())
                .collect();
            let ideal = MonomialIdeal::new(nvars, gens);
            for d in 0..=8u32 {
                let counted = ideal.standard_monomials(d).len() as i128;
                assert_eq!(
                    ideal.hilbert_function(d as i64),
                    counted,
                    "ideal {ideal} degree {d}"
                );
            }
        }
    }

    #[test]
    fn dimension_and_degree_of_known_quotients() {
        // Coordinate subspace: R/(x1) is a polynomial ring in 2 variables.
        let hyperplane = mi(3, &[&[1, 0, 0]]);
        assert_eq!(hyperplane.dim(), 2);
        assert_eq!(hyperplane.degree(), 1);
        // Double structure: R/(x1^2) has degree 2.
        let double = mi(3, &[&[2, 0, 0]]);
        assert_eq!(double.dim(), 2);
        assert_eq!(double.degree(), 2);
        // Initial ideal of two conics meeting in 4 points (cone dimension 1).
        let conics = mi(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 1]]);
        assert_eq!(conics.dim(), 1);
        assert_eq!(conics.degree(), 4);
        assert_eq!(conics.hilbert_values(0, 5), vec![1, 3, 4, 4, 4, 4]);
        // Zero ideal: the full polynomial ring.
        let zero = MonomialIdeal::zero(3);
        assert_eq!(zero.dim(), 3);
        assert_eq!(zero.degree(), 1);
        // Unit ideal.
        let unit = mi(2, &[&[0, 0]]);
        assert_eq!(unit.dim(), -1);
    }

    #[test]
    fn hpoly_of_artinian_quotient_lists_graded_dims() {
        let i = mi(2, &[&[2, 0], &[1, 1], &[0, 3]]);
        let (_, _, h) = i.dim_degree_hpoly();
        // Quotient basis 1 | x,y | y^2: h-vector (1, 2, 1).
        assert_eq!(h, vec![1, 2, 1]);
    }

    #[test]
    fn standard_monomials_complement_the_ideal() {
        let i = mi(3, &[&[1, 1, 0], &[0, 0, 2]]);
        for d in 0..=5u32 {
            let std_count = i.standard_monomials(d).len();
            let in_count = monomials_of_degree(3, d)
                .iter()
                .filter(|m| i.contains(m))
                .count();
            assert_eq!(std_count + in_count, monomials_of_degree(3, d).len());
        }
    }
}
