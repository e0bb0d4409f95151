//! Dense matrices over arbitrary-precision integers.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{LinalgError, RatMatrix};

/// A dense `rows x cols` matrix with [`BigInt`] entries, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
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

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from rows of `i64`s; all rows must share a length.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows.iter().flatten().map(|&x| BigInt::from(x)).collect();
        IntMatrix { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigInt) {
        self.data[r * self.cols + c] = value;
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }

    /// Entrywise conversion to a rational matrix.
    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix::from_fn(self.rows, self.cols, |r, c| {
            BigRational::from_integer(self.get(r, c).clone())
        })
    }

    /// Entrywise conversion to `i64`, or `None` if anything overflows.
    pub fn to_i64(&self) -> Option<Vec<Vec<i64>>> {
        use num_traits::ToPrimitive;
        let mut out = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut row = Vec::with_capacity(self.cols);
            for c in 0..self.cols {
                row.push(self.get(r, c).to_i64()?);
            }
            out.push(row);
        }
        Some(out)
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        use num_traits::ToPrimitive;
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).to_f64().unwrap()).collect())
            .collect()
    }

    /// Deletes one row and one column; used for reduced Laplacians.
    pub fn minor_matrix(&self, drop_row: usize, drop_col: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows - 1, self.cols - 1);
        let mut rr = 0;
        for r in 0..self.rows {
            if r == drop_row {
                continue;
            }
            let mut cc = 0;
            for c in 0..self.cols {
                if c == drop_col {
                    continue;
                }
                m.set(rr, cc, self.get(r, c).clone());
                cc += 1;
            }
            rr += 1;
        }
        m
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|r| (0..n).map(|c| self.get(r, c).clone()).collect())
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = num / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        Ok(sign * a[n - 1][n - 1].clone())
    }

    /// Monic characteristic polynomial of a square matrix, as coefficients
    /// `c_0 .. c_n` (ascending powers) of `det(xI - A)`.
    ///
    /// Uses the Faddeev–LeVerrier recurrence over exact rationals; all
    /// divisions come out integral.
    pub fn char_poly(&self) -> Result<Vec<BigInt>, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        if n == 0 {
            return Ok(coeffs);
        }
        // M_1 = A, c_{n-1} = -tr(A); M_{k+1} = A (M_k + c_{n-k} I).
        let mut m = self.clone();
        for k in 1..=n {
            let mut trace = BigInt::zero();
            for i in 0..n {
                trace += m.get(i, i);
            }
            // Trace is divisible by k at every step of the recurrence.
            let (c, rem) = num_integer::Integer::div_rem(&(-trace), &BigInt::from(k));
            debug_assert!(rem.is_zero(), "Faddeev-LeVerrier division must be exact");
            coeffs[n - k] = c.clone();
            if k < n {
                let mut shifted = m.clone();
                for i in 0..n {
                    let v = shifted.get(i, i) + &c;
                    shifted.set(i, i, v);
                }
                m = self * &shifted;
            }
        }
        Ok(coeffs)
    }

    pub fn trace(&self) -> Result<BigInt, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok((0..self.rows).map(|i| self.get(i, i)).sum())
    }

    /// `self * v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, got: v.len() });
        }
        Ok((0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c) * &v[c]).sum())
            .collect())
    }

    /// Absolute value of the determinant, `None` when not square.
    pub fn abs_determinant(&self) -> Result<BigInt, LinalgError> {
        Ok(self.determinant()?.abs())
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let add = a * rhs.get(k, c);
                    let v = out.get(r, c) + add;
                    out.set(r, c, v);
                }
            }
        }
        out
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;

    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        IntMatrix { rows: self.rows, cols: self.cols, data }
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;

    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        IntMatrix { rows: self.rows, cols: self.cols, data }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_2x2() {
        let m = IntMatrix::from_rows(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(m.determinant().unwrap(), BigInt::from(-2));
    }

    #[test]
    fn determinant_singular_and_identity() {
        let m = IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(m.determinant().unwrap(), BigInt::zero());
        assert_eq!(IntMatrix::identity(4).determinant().unwrap(), BigInt::one());
    }

    #[test]
    fn determinant_matches_cofactor_expansion_on_3x3() {
        let m = IntMatrix::from_rows(&[vec![2, -1, 3], vec![0, 4, -2], vec![1, 1, 1]]);
        // 2*(4+2) + 1*(0+2) + 3*(0-4) = 12 + 2 - 12 = 2
        assert_eq!(m.determinant().unwrap(), BigInt::from(2));
    }

    #[test]
    fn char_poly_of_k3_laplacian() {
        let l = IntMatrix::from_rows(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]);
        // x(x-3)^2 = x^3 - 6x^2 + 9x
        let coeffs = l.char_poly().unwrap();
        let expected: Vec<BigInt> = [0i64, 9, -6, 1].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(coeffs, expected);
    }

    #[test]
    fn char_poly_constant_term_is_signed_determinant() {
        let m = IntMatrix::from_rows(&[vec![1, 2, 0], vec![3, -1, 4], vec![0, 5, 2]]);
        let coeffs = m.char_poly().unwrap();
        // det(xI - A) at x = 0 is det(-A) = (-1)^n det(A).
        let det = m.determinant().unwrap();
        assert_eq!(coeffs[0], -det);
    }

    #[test]
    fn multiplication_and_transpose() {
        let a = IntMatrix::from_rows(&[vec![1, 2], vec![0, 1]]);
        let b = IntMatrix::from_rows(&[vec![1, 0], vec![3, 1]]);
        let ab = &a * &b;
        assert_eq!(ab, IntMatrix::from_rows(&[vec![7, 2], vec![3, 1]]));
        assert_eq!(a.transpose(), IntMatrix::from_rows(&[vec![1, 0], vec![2, 1]]));
    }

    #[test]
    fn minor_matrix_drops_row_and_column() {
        let m = IntMatrix::from_rows(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]);
        let reduced = m.minor_matrix(0, 0);
        assert_eq!(reduced, IntMatrix::from_rows(&[vec![5, 6], vec![8, 9]]));
    }
}
