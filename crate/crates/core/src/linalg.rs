//! Dense exact linear algebra over a [`Field`]: reduced row echelon form,
//! rank, kernels, inversion, and an incremental echelon structure used by
//! the vanishing-ideal and component-basis code.

use crate::field::{Coeff, Field};

/// Reduced row echelon form in place; returns the pivot columns in order.
pub fn rref(field: &Field, rows: &mut Vec<Vec<Coeff>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][col])) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = field.inv(&rows[r][col]);
        for x in rows[r].iter_mut() {
            *x = field.mul(x, &inv);
        }
        for i in 0..rows.len() {
            if i != r && !field.is_zero(&rows[i][col]) {
                let factor = rows[i][col].clone();
                for j in 0..ncols {
                    let s = field.mul(&factor, &rows[r][j]);
                    rows[i][j] = field.sub(&rows[i][j], &s);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.retain(|row| row.iter().any(|x| !field.is_zero(x)));
    pivots
}

pub fn rank(field: &Field, mut rows: Vec<Vec<Coeff>>) -> usize {
    rref(field, &mut rows).len()
}

/// Basis of the right kernel {x : A x = 0}.
pub fn kernel_basis(field: &Field, a: &[Vec<Coeff>], ncols: usize) -> Vec<Vec<Coeff>> {
    let mut rows: Vec<Vec<Coeff>> = a.to_vec();
    let pivots = rref(field, &mut rows);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![field.zero(); ncols];
        v[free] = field.one();
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = field.neg(&rows[ri][free]);
        }
        basis.push(v);
    }
    basis
}

/// Inverse of a square matrix, or None if singular.
pub fn invert(field: &Field, a: &[Vec<Coeff>]) -> Option<Vec<Vec<Coeff>>> {
    let n = a.len();
    let mut aug: Vec<Vec<Coeff>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j { field.one() } else { field.zero() });
            }
            r
        })
        .collect();
    let pivots = rref(field, &mut aug);
    if pivots != (0..n).collect::<Vec<_>>() {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn mat_vec(field: &Field, a: &[Vec<Coeff>], v: &[Coeff]) -> Vec<Coeff> {
    a.iter()
        .map(|row| {
            let mut acc = field.zero();
            for (x, y) in row.iter().zip(v) {
                acc = field.add(&acc, &field.mul(x, y));
            }
            acc
        })
        .collect()
}

/// Incremental echelon form over a fixed "active" width. Inserted vectors
/// may carry extra trailing bookkeeping columns (row operations touch the
/// full vector, pivots are only sought among the active columns), which is
/// how callers recover the linear combination that killed a vector.
pub struct Echelon {
    field: Field,
    width: usize,
    rows: Vec<Vec<Coeff>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: Field, width: usize) -> Echelon {
        Echelon {
            field,
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Coeff>] {
        &self.rows
    }

    /// Reduces `v` against the current rows. If its active part survives,
    /// it is normalized, back-substituted into the existing rows, and
    /// adopted (returning Ok); otherwise the fully reduced vector is handed
    /// back (its tail columns then encode the dependency).
    pub fn insert(&mut self, mut v: Vec<Coeff>) -> Result<(), Vec<Coeff>> {
        let field = &self.field;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            if !field.is_zero(&v[pc]) {
                let factor = v[pc].clone();
                for j in 0..v.len() {
                    let s = field.mul(&factor, &row[j]);
                    v[j] = field.sub(&v[j], &s);
                }
            }
        }
        let Some(pivot) = (0..self.width).find(|&j| !field.is_zero(&v[j])) else {
            return Err(v);
        };
        let inv = field.inv(&v[pivot]);
        for x in v.iter_mut() {
            *x = field.mul(x, &inv);
        }
        for row in self.rows.iter_mut() {
            if !field.is_zero(&row[pivot]) {
                let factor = row[pivot].clone();
                for j in 0..row.len() {
                    let s = field.mul(&factor, &v[j]);
                    row[j] = field.sub(&row[j], &s);
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(pivot);
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(field: &Field, rng: &mut ChaCha8Rng, n: usize, m: usize) -> Vec<Vec<Coeff>> {
        (0..n)
            .map(|_| (0..m).map(|_| field.random(rng)).collect())
            .collect()
    }

    #[test]
    fn inverse_round_trip() {
        for field in [Field::Prime(32003), Field::Rational] {
            let mut rng = ChaCha8Rng::seed_from_u64(3);
            for n in 1..=6 {
                let a = loop {
                    let a = random_matrix(&field, &mut rng, n, n);
                    if invert(&field, &a).is_some() {
                        break a;
                    }
                };
                let inv = invert(&field, &a).unwrap();
                for i in 0..n {
                    let col: Vec<Coeff> = (0..n).map(|j| a[j][i].clone()).collect();
                    let e = mat_vec(&field, &inv, &col);
                    for (j, x) in e.iter().enumerate() {
                        let expect = if i == j { field.one() } else { field.zero() };
                        assert_eq!(*x, expect);
                    }
                }
            }
        }
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let field = Field::Prime(101);
        let r1: Vec<Coeff> = vec![field.from_i64(1), field.from_i64(2)];
        let r2: Vec<Coeff> = vec![field.from_i64(2), field.from_i64(4)];
        assert!(invert(&field, &[r1, r2]).is_none());
    }

    #[test]
    fn rank_plus_nullity() {
        let field = Field::Prime(32003);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let n = rng.gen_range(1..6);
            let m = rng.gen_range(1..7);
            let a = random_matrix(&field, &mut rng, n, m);
            let r = rank(&field, a.clone());
            let kernel = kernel_basis(&field, &a, m);
            assert_eq!(r + kernel.len(), m);
            for v in &kernel {
                let image = mat_vec(&field, &a, v);
                assert!(image.iter().all(|x| field.is_zero(x)));
            }
        }
    }

    #[test]
    fn echelon_recovers_dependencies() {
        let field = Field::Prime(101);
        let mut ech = Echelon::new(field, 3);
        // Vectors augmented with identity tails.
        let tag = |i: usize| -> Vec<Coeff> {
            (0..3)
                .map(|j| if i == j { field.one() } else { field.zero() })
                .collect()
        };
        let mut v1: Vec<Coeff> = vec![field.from_i64(1), field.from_i64(2), field.from_i64(0)];
        v1.extend(tag(0));
        let mut v2: Vec<Coeff> = vec![field.from_i64(0), field.from_i64(1), field.from_i64(1)];
        v2.extend(tag(1));
        // v3 = v1 + 2*v2
        let mut v3: Vec<Coeff> = vec![field.from_i64(1), field.from_i64(4), field.from_i64(2)];
        v3.extend(tag(2));
        assert!(ech.insert(v1).is_ok());
        assert!(ech.insert(v2).is_ok());
        let dep = ech.insert(v3).unwrap_err();
        // Active part must vanish; the tail encodes c1*v1 + c2*v2 + c3*v3 = 0
        // up to scaling, with the c3 slot untouched (= 1).
        assert!(dep[..3].iter().all(|x| field.is_zero(x)));
        assert_eq!(dep[5], field.one());
        let c1 = &dep[3];
        let c2 = &dep[4];
        assert_eq!(*c1, field.from_i64(-1));
        assert_eq!(*c2, field.from_i64(-2));
    }
}
