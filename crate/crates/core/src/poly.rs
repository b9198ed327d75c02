//! Polynomial rings and sparse polynomials.
//!
//! A [`Ring`] is a context value (variable names, coefficient field, active
//! monomial order) passed explicitly to every operation, mirroring how the
//! order is a property of the computation rather than of the data. Terms
//! are kept sorted descending in the ring's order with no zero
//! coefficients, so the leading term is always `terms[0]`.

use crate::field::{Coeff, Field};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    pub vars: Vec<String>,
    pub field: Field,
    pub order: MonomialOrder,
}

impl Ring {
    pub fn new(vars: Vec<String>, field: Field) -> Ring {
        Ring {
            vars,
            field,
            order: MonomialOrder::DegRevLex,
        }
    }

    /// Standard ring k[x1..xn] in degrevlex.
    pub fn standard(nvars: usize, field: Field) -> Ring {
        Ring::new((1..=nvars).map(|i| format!("x{i}")).collect(), field)
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn with_order(&self, order: MonomialOrder) -> Ring {
        Ring {
            vars: self.vars.clone(),
            field: self.field,
            order,
        }
    }

    /// Ring with an auxiliary variable `t` prepended as the new largest
    /// variable, in the order eliminating it.
    pub fn with_prepended_var(&self, name: &str) -> Ring {
        let mut vars = vec![name.to_string()];
        vars.extend(self.vars.iter().cloned());
        Ring {
            vars,
            field: self.field,
            order: MonomialOrder::Elimination { block: 1 },
        }
    }
}

pub type Term = (Monomial, Coeff);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    /// Sorted strictly descending in the owning ring's order.
    pub terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Normalizes an arbitrary term list: merges duplicate monomials, drops
    /// zeros, sorts descending in the ring's order.
    pub fn from_terms(ring: &Ring, mut terms: Vec<Term>) -> Polynomial {
        terms.sort_by(|a, b| ring.order.cmp(&b.0, &a.0));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = ring.field.add(lc, &c),
                _ => out.push((m, c)),
            }
            if let Some((_, lc)) = out.last() {
                if ring.field.is_zero(lc) {
                    out.pop();
                }
            }
        }
        Polynomial { terms: out }
    }

    pub fn monomial(m: Monomial, field: &Field) -> Polynomial {
        Polynomial {
            terms: vec![(m, field.one())],
        }
    }

    pub fn constant(ring: &Ring, c: Coeff) -> Polynomial {
        if ring.field.is_zero(&c) {
            Polynomial::zero()
        } else {
            Polynomial {
                terms: vec![(Monomial::one(ring.nvars()), c)],
            }
        }
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Total degree, None for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    pub fn add(&self, ring: &Ring, other: &Polynomial) -> Polynomial {
        self.merge(ring, other, false, None)
    }

    pub fn sub(&self, ring: &Ring, other: &Polynomial) -> Polynomial {
        self.merge(ring, other, true, None)
    }

    /// self - c * m * other, the inner loop of polynomial reduction, done
    /// as a single sorted-list merge.
    pub fn sub_scaled(
        &self,
        ring: &Ring,
        c: &Coeff,
        m: &Monomial,
        other: &Polynomial,
    ) -> Polynomial {
        self.merge(ring, other, true, Some((c, m)))
    }

    fn merge(
        &self,
        ring: &Ring,
        other: &Polynomial,
        negate: bool,
        scale: Option<(&Coeff, &Monomial)>,
    ) -> Polynomial {
        let field = &ring.field;
        let shape = |t: &Term| -> Term {
            let (m, c) = match scale {
                Some((sc, sm)) => (t.0.mul(sm), field.mul(&t.1, sc)),
                None => t.clone(),
            };
            if negate {
                (m, field.neg(&c))
            } else {
                (m, c)
            }
        };
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let rhs = shape(&other.terms[j]);
            match ring.order.cmp(&self.terms[i].0, &rhs.0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(rhs);
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(&self.terms[i].1, &rhs.1);
                    if !field.is_zero(&c) {
                        out.push((rhs.0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(other.terms[j..].iter().map(|t| shape(t)));
        Polynomial { terms: out }
    }

    pub fn neg(&self, ring: &Ring) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), ring.field.neg(c)))
                .collect(),
        }
    }

    pub fn scale(&self, ring: &Ring, c: &Coeff) -> Polynomial {
        if ring.field.is_zero(c) {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), ring.field.mul(k, c)))
                .collect(),
        }
    }

    /// Multiply by a single term; preserves sortedness.
    pub fn mul_term(&self, ring: &Ring, m: &Monomial, c: &Coeff) -> Polynomial {
        if ring.field.is_zero(c) {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), ring.field.mul(tc, c)))
                .collect(),
        }
    }

    pub fn mul(&self, ring: &Ring, other: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (m, c) in &other.terms {
            acc = acc.add(ring, &self.mul_term(ring, m, c));
        }
        acc
    }

    pub fn monic(&self, ring: &Ring) -> Polynomial {
        match self.leading_coeff() {
            None => Polynomial::zero(),
            Some(lc) => self.scale(ring, &ring.field.inv(lc)),
        }
    }

    /// Re-sorts the term list for use under a different order.
    pub fn reorder(&self, target: &Ring) -> Polynomial {
        Polynomial::from_terms(target, self.terms.clone())
    }

    /// Image in a ring with one extra largest variable prepended.
    pub fn prepend_var(&self, target: &Ring) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u16];
                exps.extend_from_slice(m.exps());
                (Monomial::from_exps(&exps), c.clone())
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Drops the first variable from every term; caller must guarantee the
    /// polynomial does not involve it.
    pub fn drop_first_var(&self, target: &Ring) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                assert_eq!(m.exp(0), 0, "polynomial still involves the dropped variable");
                (Monomial::from_exps(&m.exps()[1..]), c.clone())
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    pub fn eval(&self, ring: &Ring, point: &[Coeff]) -> Coeff {
        let field = &ring.field;
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    v = field.mul(&v, &point[i]);
                }
            }
            acc = field.add(&acc, &v);
        }
        acc
    }

    /// Canonical text form, re-parseable by the ideal grammar.
    pub fn display(&self, ring: &Ring) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = match (&ring.field, c) {
                (Field::Prime(p), Coeff::Fp(v)) => *v > p / 2,
                _ => c.display_negative(),
            };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let abs = if neg { ring.field.neg(c) } else { c.clone() };
            let coeff_is_one = abs == ring.field.one();
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else if coeff_is_one {
                out.push_str(&m.display(&ring.vars));
            } else {
                out.push_str(&format!("{}*{}", abs, m.display(&ring.vars)));
            }
        }
        out
    }
}
