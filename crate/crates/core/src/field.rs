//! Coefficient arithmetic: a small prime field F_p or exact rationals.
//!
//! All polynomial code is generic over [`Field`] by passing the field as a
//! context value rather than through a type parameter; the enum dispatch is
//! cheap next to the symbolic work and keeps signatures readable.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

/// Default prime used as a stand-in for characteristic zero.
pub const DEFAULT_PRIME: u64 = 32003;

/// The coefficient domain of a polynomial ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    /// F_p for a prime p (kept below 2^31 so products fit in u64 via u128).
    Prime(u64),
    /// Exact rational numbers.
    Rational,
}

/// A single coefficient. Rationals are boxed so the enum stays two words.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Fp(u64),
    Rat(Box<BigRational>),
}

/// Deterministic trial-division primality test, adequate for the sizes the
/// CLI accepts.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl Field {
    pub fn default_prime() -> Field {
        Field::Prime(DEFAULT_PRIME)
    }

    pub fn zero(&self) -> Coeff {
        match self {
            Field::Prime(_) => Coeff::Fp(0),
            Field::Rational => Coeff::Rat(Box::new(BigRational::zero())),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            Field::Prime(_) => Coeff::Fp(1),
            Field::Rational => Coeff::Rat(Box::new(BigRational::one())),
        }
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match self {
            Field::Prime(p) => Coeff::Fp(n.rem_euclid(*p as i64) as u64),
            Field::Rational => Coeff::Rat(Box::new(BigRational::from(BigInt::from(n)))),
        }
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Fp(x) => *x == 0,
            Coeff::Rat(r) => r.is_zero(),
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Prime(p), Coeff::Fp(x), Coeff::Fp(y)) => Coeff::Fp((x + y) % p),
            (Field::Rational, Coeff::Rat(x), Coeff::Rat(y)) => {
                Coeff::Rat(Box::new(&**x + &**y))
            }
            _ => panic!("coefficient does not belong to this field"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Prime(p), Coeff::Fp(x), Coeff::Fp(y)) => Coeff::Fp((x + p - y) % p),
            (Field::Rational, Coeff::Rat(x), Coeff::Rat(y)) => {
                Coeff::Rat(Box::new(&**x - &**y))
            }
            _ => panic!("coefficient does not belong to this field"),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (Field::Prime(p), Coeff::Fp(x)) => Coeff::Fp(if *x == 0 { 0 } else { p - x }),
            (Field::Rational, Coeff::Rat(x)) => Coeff::Rat(Box::new(-&**x)),
            _ => panic!("coefficient does not belong to this field"),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Prime(p), Coeff::Fp(x), Coeff::Fp(y)) => {
                Coeff::Fp(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            (Field::Rational, Coeff::Rat(x), Coeff::Rat(y)) => {
                Coeff::Rat(Box::new(&**x * &**y))
            }
            _ => panic!("coefficient does not belong to this field"),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (Field::Prime(p), Coeff::Fp(x)) => {
                assert!(*x != 0, "inverse of zero");
                Coeff::Fp(mod_pow(*x, p - 2, *p))
            }
            (Field::Rational, Coeff::Rat(x)) => {
                assert!(!x.is_zero(), "inverse of zero");
                Coeff::Rat(Box::new(x.recip()))
            }
            _ => panic!("coefficient does not belong to this field"),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.mul(a, &self.inv(b))
    }

    /// Uniform random element; over Q this draws small integers, which is
    /// all the generic-coordinate machinery needs.
    pub fn random<R: Rng>(&self, rng: &mut R) -> Coeff {
        match self {
            Field::Prime(p) => Coeff::Fp(rng.gen_range(0..*p)),
            Field::Rational => self.from_i64(rng.gen_range(-50..=50)),
        }
    }

    pub fn random_nonzero<R: Rng>(&self, rng: &mut R) -> Coeff {
        loop {
            let c = self.random(rng);
            if !self.is_zero(&c) {
                return c;
            }
        }
    }

    /// Short label used in reports: "F_p" or "Q".
    pub fn label(&self) -> String {
        match self {
            Field::Prime(p) => format!("F_{p}"),
            Field::Rational => "Q".to_string(),
        }
    }
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

impl std::fmt::Display for Coeff {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Coeff::Fp(x) => write!(f, "{x}"),
            Coeff::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

impl Coeff {
    /// True when the coefficient is an integer equal to the argument,
    /// interpreting F_p values as their canonical representative.
    pub fn is_i64(&self, n: i64, field: Field) -> bool {
        self == &field.from_i64(n)
    }

    /// Whether the coefficient would print with a leading minus sign; used
    /// only by display code. F_p elements never do.
    pub fn display_negative(&self) -> bool {
        match self {
            Coeff::Fp(_) => false,
            Coeff::Rat(r) => r.is_negative(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(32003));
        assert!(is_prime(101));
        assert!(!is_prime(1));
        assert!(!is_prime(0));
        assert!(!is_prime(32001));
        assert!(!is_prime(1 << 20));
    }

    #[test]
    fn field_axioms_random_triples() {
        for field in [Field::Prime(32003), Field::Prime(101), Field::Rational] {
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            for _ in 0..200 {
                let a = field.random(&mut rng);
                let b = field.random(&mut rng);
                let c = field.random(&mut rng);
                let ab_c = field.add(&field.add(&a, &b), &c);
                let a_bc = field.add(&a, &field.add(&b, &c));
                assert_eq!(ab_c, a_bc);
                assert_eq!(field.mul(&a, &b), field.mul(&b, &a));
                let distl = field.mul(&a, &field.add(&b, &c));
                let distr = field.add(&field.mul(&a, &b), &field.mul(&a, &c));
                assert_eq!(distl, distr);
                assert!(field.is_zero(&field.sub(&a, &a)));
                assert!(field.is_zero(&field.add(&a, &field.neg(&a))));
            }
        }
    }

    #[test]
    fn inverses() {
        for field in [Field::Prime(32003), Field::Prime(5), Field::Rational] {
            let mut rng = ChaCha8Rng::seed_from_u64(11);
            for _ in 0..100 {
                let a = field.random_nonzero(&mut rng);
                assert_eq!(field.mul(&a, &field.inv(&a)), field.one());
                let b = field.random_nonzero(&mut rng);
                assert_eq!(field.mul(&field.div(&a, &b), &b), a);
            }
        }
    }

    #[test]
    fn from_i64_wraps_negatives() {
        let f = Field::Prime(7);
        assert_eq!(f.from_i64(-1), Coeff::Fp(6));
        assert_eq!(f.from_i64(-14), Coeff::Fp(0));
        assert_eq!(f.from_i64(13), Coeff::Fp(6));
        let q = Field::Rational;
        assert_eq!(q.from_i64(-3), q.neg(&q.from_i64(3)));
    }
}
