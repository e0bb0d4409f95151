//! Dense matrices over exact rationals, with reduced row echelon form as the
//! workhorse for ranks, nullspaces, and solving.

use std::fmt;
use std::ops::Mul;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::LinalgError;

/// A dense `rows x cols` matrix with exact rational entries. `num_rational`
/// keeps every entry reduced with a positive denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{} ", self.get(r, c))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        RatMatrix { rows, cols, data }
    }

    /// Builds a matrix whose rows are the given vectors.
    pub fn from_row_vectors(cols: usize, rows: &[Vec<BigRational>]) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let data = rows.iter().flatten().cloned().collect();
        RatMatrix { rows: rows.len(), cols, data }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<BigRational>]) -> Self {
        assert!(columns.iter().all(|c| c.len() == rows), "ragged columns");
        RatMatrix::from_fn(rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigRational) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[BigRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> RatMatrix {
        RatMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Result<Vec<BigRational>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, got: v.len() });
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = BigRational::zero();
                for c in 0..self.cols {
                    let a = self.get(r, c);
                    if !a.is_zero() && !v[c].is_zero() {
                        acc += a * &v[c];
                    }
                }
                acc
            })
            .collect())
    }

    /// In-place reduced row echelon form; returns the pivot column of each
    /// pivot row, in order.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            // Prefer a 1 or -1 pivot to keep entries small; otherwise the
            // first nonzero.
            let mut chosen = None;
            for r in pivot_row..self.rows {
                let v = self.get(r, col);
                if v.is_zero() {
                    continue;
                }
                if v.is_one() || (-v).is_one() {
                    chosen = Some(r);
                    break;
                }
                if chosen.is_none() {
                    chosen = Some(r);
                }
            }
            let Some(r) = chosen else { continue };
            self.swap_rows(pivot_row, r);
            let inv = self.get(pivot_row, col).recip();
            if !inv.is_one() {
                for c in col..self.cols {
                    let v = self.get(pivot_row, c) * &inv;
                    self.set(pivot_row, c, v);
                }
            }
            for r2 in 0..self.rows {
                if r2 == pivot_row || self.get(r2, col).is_zero() {
                    continue;
                }
                let factor = self.get(r2, col).clone();
                for c in col..self.cols {
                    let v = self.get(r2, c) - &factor * self.get(pivot_row, c);
                    self.set(r2, c, v);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        let mut copy = self.clone();
        copy.rref_in_place().len()
    }

    /// Canonical basis of `{ v : self * v = 0 }`, one vector per free
    /// column of the RREF, each with a 1 in its free coordinate.
    pub fn nullspace_basis(&self) -> Vec<Vec<BigRational>> {
        let mut reduced = self.clone();
        let pivots = reduced.rref_in_place();
        let pivot_set: Vec<Option<usize>> = {
            let mut map = vec![None; self.cols];
            for (i, &col) in pivots.iter().enumerate() {
                map[col] = Some(i);
            }
            map
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut v = vec![BigRational::zero(); self.cols];
            v[free] = BigRational::one();
            for (i, &col) in pivots.iter().enumerate() {
                v[col] = -reduced.get(i, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `self * x = b`; `None` when inconsistent. With free columns,
    /// returns the solution whose free coordinates are zero.
    pub fn solve(&self, b: &[BigRational]) -> Result<Option<Vec<BigRational>>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.rows, got: b.len() });
        }
        let mut augmented = RatMatrix::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                b[r].clone()
            }
        });
        let pivots = augmented.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![BigRational::zero(); self.cols];
        for (i, &col) in pivots.iter().enumerate() {
            x[col] = augmented.get(i, self.cols).clone();
        }
        Ok(Some(x))
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;

    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut out = RatMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(r, c) + a * b;
                    out.set(r, c, v);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn identity_has_full_rank_and_trivial_nullspace() {
        let m = RatMatrix::identity(3);
        assert_eq!(m.rank(), 3);
        assert!(m.nullspace_basis().is_empty());
    }

    #[test]
    fn zero_matrix_nullspace_is_everything() {
        let m = RatMatrix::zeros(2, 3);
        assert_eq!(m.rank(), 0);
        let basis = m.nullspace_basis();
        assert_eq!(basis.len(), 3);
        for v in &basis {
            assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn k3_laplacian_kernel_is_all_ones() {
        let l = RatMatrix::from_fn(3, 3, |r, c| if r == c { rat(2) } else { rat(-1) });
        assert_eq!(l.rank(), 2);
        let basis = l.nullspace_basis();
        assert_eq!(basis.len(), 1);
        let v = &basis[0];
        assert!(v.iter().all(|x| x == &v[0]));
        assert!(l.mul_vec(v).unwrap().iter().all(Zero::is_zero));
    }

    #[test]
    fn solve_unique_and_inconsistent() {
        let m = RatMatrix::from_fn(2, 2, |r, c| rat([[2, 1], [1, 1]][r][c]));
        let x = m.solve(&[rat(3), rat(2)]).unwrap().unwrap();
        assert_eq!(x, vec![rat(1), rat(1)]);

        let singular = RatMatrix::from_fn(2, 2, |r, c| rat([[1, 1], [1, 1]][r][c]));
        assert_eq!(singular.solve(&[rat(0), rat(1)]).unwrap(), None);
    }

    #[test]
    fn rank_plus_nullity_is_cols() {
        let m = RatMatrix::from_fn(3, 5, |r, c| rat(((r * 5 + c) % 4) as i64));
        assert_eq!(m.rank() + m.nullspace_basis().len(), 5);
    }
}
