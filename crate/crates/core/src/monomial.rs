//! Dense exponent-vector monomials.
//!
//! Variable index 0 is the *largest* variable in every supported order, so
//! index i corresponds to x_{i+1} in the usual x_1 > x_2 > ... > x_n
//! convention. The total degree is cached because every order comparison
//! starts with it.

use smallvec::SmallVec;

pub type Exponents = SmallVec<[u16; 8]>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    deg: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            exps: smallvec::smallvec![0; nvars],
            deg: 0,
        }
    }

    /// The single variable with the given 0-based index.
    pub fn var(nvars: usize, i: usize) -> Monomial {
        let mut exps: Exponents = smallvec::smallvec![0; nvars];
        exps[i] = 1;
        Monomial { exps, deg: 1 }
    }

    pub fn from_exps(exps: &[u16]) -> Monomial {
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial {
            exps: SmallVec::from_slice(exps),
            deg,
        }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            exps,
            deg: self.deg + other.deg,
        }
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.exps[i] += 1;
        m.deg += 1;
        m
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// other / self, if self divides other.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other
            .exps
            .iter()
            .zip(&self.exps)
            .map(|(b, a)| b - a)
            .collect();
        Some(Monomial {
            exps,
            deg: other.deg - self.deg,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, deg }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.min(b))
            .collect();
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, deg }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Smallest variable index with a positive exponent (min of the support).
    pub fn min_var(&self) -> Option<usize> {
        self.exps.iter().position(|&e| e > 0)
    }

    /// Largest variable index with a positive exponent (max of the support).
    pub fn max_var(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }

    /// Replace x_i by 1, i.e. drop the variable's exponent.
    pub fn set_var_to_one(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.deg -= m.exps[i] as u32;
        m.exps[i] = 0;
        m
    }

    /// Extend with extra trailing (smallest) variables, exponent zero.
    pub fn extend_vars(&self, extra: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.extend(std::iter::repeat(0).take(extra));
        Monomial { exps, deg: self.deg }
    }

    /// Render with the given variable names, e.g. `x1^2*x3`.
    pub fn display(&self, vars: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(vars[i].clone()),
                _ => parts.push(format!("{}^{}", vars[i], e)),
            }
        }
        parts.join("*")
    }
}

/// Every monomial of the given total degree, in lexicographic order of the
/// exponent vector (largest x_1-exponent first). Used by brute-force
/// oracles, component bases, and Borel enumeration.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps: Vec<u16> = vec![0; nvars];
    fill(&mut out, &mut exps, 0, degree);
    return out;

    fn fill(out: &mut Vec<Monomial>, exps: &mut Vec<u16>, pos: usize, rem: u32) {
        if pos + 1 == exps.len() {
            exps[pos] = rem as u16;
            out.push(Monomial::from_exps(exps));
            exps[pos] = 0;
            return;
        }
        for e in (0..=rem).rev() {
            exps[pos] = e as u16;
            fill(out, exps, pos + 1, rem - e);
        }
        exps[pos] = 0;
    }
}

/// Binomial coefficient as i128; returns 0 for k < 0 or k > n.
pub fn binomial(n: i64, k: i64) -> i128 {
    if k < 0 || k > n || n < 0 {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divide_and_multiply_round_trip() {
        let a = Monomial::from_exps(&[2, 0, 3]);
        let b = Monomial::from_exps(&[1, 0, 1]);
        assert!(b.divides(&a));
        let q = b.div_into(&a).unwrap();
        assert_eq!(q.mul(&b), a);
        assert!(!a.divides(&b));
        assert_eq!(a.div_into(&b), None);
    }

    #[test]
    fn lcm_gcd_product_identity() {
        let a = Monomial::from_exps(&[2, 1, 0, 4]);
        let b = Monomial::from_exps(&[1, 3, 2, 0]);
        assert_eq!(a.lcm(&b).mul(&a.gcd(&b)), a.mul(&b));
        assert!(!a.is_coprime(&b));
        let c = Monomial::from_exps(&[0, 0, 5, 0]);
        let d = Monomial::from_exps(&[3, 1, 0, 2]);
        assert!(c.is_coprime(&d));
    }

    #[test]
    fn support_endpoints() {
        let m = Monomial::from_exps(&[0, 2, 1, 0]);
        assert_eq!(m.min_var(), Some(1));
        assert_eq!(m.max_var(), Some(2));
        assert_eq!(Monomial::one(4).min_var(), None);
        assert_eq!(m.set_var_to_one(2), Monomial::from_exps(&[0, 2, 0, 0]));
    }

    #[test]
    fn degree_enumeration_counts_match_binomials() {
        for n in 1..=5usize {
            for d in 0..=6u32 {
                let count = monomials_of_degree(n, d).len() as i128;
                assert_eq!(count, binomial((d as i64) + (n as i64) - 1, n as i64 - 1));
            }
        }
        let all = monomials_of_degree(3, 4);
        let dedup: std::collections::HashSet<_> = all.iter().cloned().collect();
        assert_eq!(dedup.len(), all.len());
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(4, 5), 0);
        assert_eq!(binomial(-1, 0), 0);
        assert_eq!(binomial(52, 5), 2598960);
    }
}
