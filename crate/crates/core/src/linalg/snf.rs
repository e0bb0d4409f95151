//! Smith normal form over the integers.
//!
//! Two equivalent implementations of the same pivot-reduction algorithm: a
//! [`BigInt`] version that tracks unimodular row/column witnesses, and an
//! `i128` version without witnesses that bails out on overflow. Pivot choice
//! (smallest nonzero magnitude, row-major tie-break) is identical in both,
//! so they produce the same invariant factors whenever both apply.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// Smith normal form `P * A * Q = diag(s_1 .. s_r, 0, ..)` of an integer
/// matrix, with `s_i > 0`, `s_i | s_{i+1}`, and unimodular `P`, `Q`.
#[derive(Debug, Clone)]
pub struct SmithForm {
    /// The nonzero invariant factors `s_1 .. s_r`.
    pub invariant_factors: Vec<BigInt>,
    pub rank: usize,
    /// Left witness `P` (rows x rows).
    pub left: IntMatrix,
    /// Right witness `Q` (cols x cols).
    pub right: IntMatrix,
    rows: usize,
    cols: usize,
}

impl SmithForm {
    /// The full diagonal matrix of the decomposition, zero-padded.
    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.rows, self.cols);
        for (i, s) in self.invariant_factors.iter().enumerate() {
            d.set(i, i, s.clone());
        }
        d
    }

    /// Checks `P * A * Q = D`, unimodularity of both witnesses, and the
    /// divisibility chain.
    pub fn verify(&self, original: &IntMatrix) -> bool {
        let product = &(&self.left * original) * &self.right;
        if product != self.diagonal_matrix() {
            return false;
        }
        let unimodular = |m: &IntMatrix| m.determinant().map(|d| d.abs().is_one()).unwrap_or(false);
        if !unimodular(&self.left) || !unimodular(&self.right) {
            return false;
        }
        self.invariant_factors
            .windows(2)
            .all(|w| (&w[1] % &w[0]).is_zero())
            && self.invariant_factors.iter().all(|s| s.is_positive())
    }
}

struct SnfState {
    a: Vec<Vec<BigInt>>,
    p: Vec<Vec<BigInt>>,
    q: Vec<Vec<BigInt>>,
    rows: usize,
    cols: usize,
}

impl SnfState {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            self.a.swap(i, j);
            self.p.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in &mut self.a {
            row.swap(i, j);
        }
        for row in &mut self.q {
            row.swap(i, j);
        }
    }

    /// row_i -= k * row_j
    fn row_sub(&mut self, i: usize, j: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let delta = k * &self.a[j][c];
            self.a[i][c] -= delta;
        }
        for c in 0..self.rows {
            let delta = k * &self.p[j][c];
            self.p[i][c] -= delta;
        }
    }

    /// col_i -= k * col_j
    fn col_sub(&mut self, i: usize, j: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for row in &mut self.a {
            let delta = k * &row[j];
            row[i] -= delta;
        }
        for row in &mut self.q {
            let delta = k * &row[j];
            row[i] -= delta;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for v in &mut self.a[i] {
            *v = -std::mem::take(v);
        }
        for v in &mut self.p[i] {
            *v = -std::mem::take(v);
        }
    }

    fn smallest_nonzero_from(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for r in t..self.rows {
            for c in t..self.cols {
                if self.a[r][c].is_zero() {
                    continue;
                }
                match best {
                    None => best = Some((r, c)),
                    Some((br, bc)) => {
                        if self.a[r][c].abs() < self.a[br][bc].abs() {
                            best = Some((r, c));
                        }
                    }
                }
            }
        }
        best
    }
}

/// Smith normal form with witnesses; never fails.
pub fn smith_normal_form(matrix: &IntMatrix) -> SmithForm {
    let rows = matrix.rows();
    let cols = matrix.cols();
    let mut state = SnfState {
        a: (0..rows).map(|r| (0..cols).map(|c| matrix.get(r, c).clone()).collect()).collect(),
        p: (0..rows)
            .map(|r| (0..rows).map(|c| if r == c { BigInt::one() } else { BigInt::zero() }).collect())
            .collect(),
        q: (0..cols)
            .map(|r| (0..cols).map(|c| if r == c { BigInt::one() } else { BigInt::zero() }).collect())
            .collect(),
        rows,
        cols,
    };

    let n = rows.min(cols);
    for t in 0..n {
        let Some((pr, pc)) = state.smallest_nonzero_from(t) else { break };
        state.swap_rows(t, pr);
        state.swap_cols(t, pc);

        'reduce: loop {
            // Clear the pivot column.
            for i in t + 1..rows {
                if state.a[i][t].is_zero() {
                    continue;
                }
                let quotient = state.a[i][t].div_floor(&state.a[t][t]);
                state.row_sub(i, t, &quotient);
                if !state.a[i][t].is_zero() {
                    // Remainder is strictly smaller; make it the pivot.
                    state.swap_rows(t, i);
                    continue 'reduce;
                }
            }
            // Clear the pivot row.
            for j in t + 1..cols {
                if state.a[t][j].is_zero() {
                    continue;
                }
                let quotient = state.a[t][j].div_floor(&state.a[t][t]);
                state.col_sub(j, t, &quotient);
                if !state.a[t][j].is_zero() {
                    state.swap_cols(t, j);
                    continue 'reduce;
                }
            }
            // Divisibility: the pivot must divide every remaining entry.
            for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(&state.a[i][j] % &state.a[t][t]).is_zero() {
                        // Fold row i into the pivot row and keep reducing.
                        let minus_one = -BigInt::one();
                        state.row_sub(t, i, &minus_one);
                        continue 'reduce;
                    }
                }
            }
            break;
        }
        if state.a[t][t].is_negative() {
            state.negate_row(t);
        }
    }

    let mut invariant_factors = Vec::new();
    for t in 0..n {
        if state.a[t][t].is_zero() {
            break;
        }
        invariant_factors.push(state.a[t][t].clone());
    }
    let rank = invariant_factors.len();

    let to_matrix = |rows_data: &Vec<Vec<BigInt>>, r: usize, c: usize| {
        let mut m = IntMatrix::zeros(r, c);
        for (i, row) in rows_data.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    };

    SmithForm {
        invariant_factors,
        rank,
        left: to_matrix(&state.p, rows, rows),
        right: to_matrix(&state.q, cols, cols),
        rows,
        cols,
    }
}

/// Invariant factors and rank of an integer matrix.
///
/// Runs the machine-integer path when all entries fit in `i128` and no
/// intermediate overflows; otherwise falls back to the big-integer form.
pub fn integer_invariant_factors(matrix: &IntMatrix) -> (Vec<BigInt>, usize) {
    if let Some(small) = to_i128_grid(matrix) {
        if let Some(factors) = snf_factors_i128(small) {
            let rank = factors.len();
            return (factors.into_iter().map(BigInt::from).collect(), rank);
        }
    }
    let form = smith_normal_form(matrix);
    let rank = form.rank;
    (form.invariant_factors, rank)
}

fn to_i128_grid(matrix: &IntMatrix) -> Option<Vec<Vec<i128>>> {
    use num_traits::ToPrimitive;
    let mut grid = Vec::with_capacity(matrix.rows());
    for r in 0..matrix.rows() {
        let mut row = Vec::with_capacity(matrix.cols());
        for c in 0..matrix.cols() {
            let v = matrix.get(r, c).to_i128()?;
            // Headroom so products of two entries cannot overflow.
            if v.unsigned_abs() > (1u128 << 62) {
                return None;
            }
            row.push(v);
        }
        grid.push(row);
    }
    Some(grid)
}

fn snf_factors_i128(mut a: Vec<Vec<i128>>) -> Option<Vec<i128>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let n = rows.min(cols);

    let row_sub = |a: &mut Vec<Vec<i128>>, i: usize, j: usize, k: i128| -> Option<()> {
        if k == 0 {
            return Some(());
        }
        for c in 0..cols {
            a[i][c] = a[i][c].checked_sub(k.checked_mul(a[j][c])?)?;
        }
        Some(())
    };
    let col_sub = |a: &mut Vec<Vec<i128>>, i: usize, j: usize, k: i128| -> Option<()> {
        if k == 0 {
            return Some(());
        }
        for r in 0..rows {
            a[r][i] = a[r][i].checked_sub(k.checked_mul(a[r][j])?)?;
        }
        Some(())
    };

    for t in 0..n {
        let mut best: Option<(usize, usize)> = None;
        for r in t..rows {
            for c in t..cols {
                if a[r][c] != 0 {
                    match best {
                        None => best = Some((r, c)),
                        Some((br, bc)) => {
                            if a[r][c].unsigned_abs() < a[br][bc].unsigned_abs() {
                                best = Some((r, c));
                            }
                        }
                    }
                }
            }
        }
        let Some((pr, pc)) = best else { break };
        a.swap(t, pr);
        if pc != t {
            for row in a.iter_mut() {
                row.swap(t, pc);
            }
        }

        'reduce: loop {
            for i in t + 1..rows {
                if a[i][t] != 0 {
                    let quotient = a[i][t].div_floor(&a[t][t]);
                    row_sub(&mut a, i, t, quotient)?;
                    if a[i][t] != 0 {
                        a.swap(t, i);
                        continue 'reduce;
                    }
                }
            }
            for j in t + 1..cols {
                if a[t][j] != 0 {
                    let quotient = a[t][j].div_floor(&a[t][t]);
                    col_sub(&mut a, j, t, quotient)?;
                    if a[t][j] != 0 {
                        for row in a.iter_mut() {
                            row.swap(t, j);
                        }
                        continue 'reduce;
                    }
                }
            }
            for i in t + 1..rows {
                for j in t + 1..cols {
                    if a[i][j].rem_euclid(a[t][t]) != 0 {
                        row_sub(&mut a, t, i, -1)?;
                        continue 'reduce;
                    }
                }
            }
            break;
        }
        if a[t][t] < 0 {
            for c in 0..cols {
                a[t][c] = a[t][c].checked_neg()?;
            }
        }
    }

    let mut factors = Vec::new();
    for t in 0..n {
        if a[t][t] == 0 {
            break;
        }
        factors.push(a[t][t]);
    }
    Some(factors)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diag_2_3_has_factors_1_6() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let form = smith_normal_form(&m);
        assert_eq!(form.invariant_factors, vec![BigInt::from(1), BigInt::from(6)]);
        assert!(form.verify(&m));
        // Determinantal divisors: d_1 = gcd of entries = 1, d_2 = |det| = 6.
        assert_eq!(m.determinant().unwrap().abs(), BigInt::from(6));
    }

    #[test]
    fn identity_has_all_ones() {
        let m = IntMatrix::identity(4);
        let form = smith_normal_form(&m);
        assert_eq!(form.invariant_factors, vec![BigInt::one(); 4]);
        assert!(form.verify(&m));
    }

    #[test]
    fn reduced_k4_laplacian() {
        let m = IntMatrix::from_rows(&[vec![3, -1, -1], vec![-1, 3, -1], vec![-1, -1, 3]]);
        let form = smith_normal_form(&m);
        let expected: Vec<BigInt> = [1, 4, 4].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(form.invariant_factors, expected);
        assert!(form.verify(&m));
        assert_eq!(m.determinant().unwrap(), BigInt::from(16));
    }

    #[test]
    fn rank_deficient_matrix() {
        let m = IntMatrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 6]]);
        let form = smith_normal_form(&m);
        assert_eq!(form.rank, 1);
        assert_eq!(form.invariant_factors, vec![BigInt::one()]);
        assert!(form.verify(&m));
    }

    #[test]
    fn fast_path_agrees_with_witness_path() {
        let cases = [
            vec![vec![6, 4, 2], vec![4, 6, 2], vec![2, 2, 8]],
            vec![vec![0, 0], vec![0, 0]],
            vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]],
            vec![vec![12, 8], vec![20, 14]],
        ];
        for rows in cases {
            let m = IntMatrix::from_rows(&rows);
            let form = smith_normal_form(&m);
            let (factors, rank) = integer_invariant_factors(&m);
            assert_eq!(factors, form.invariant_factors);
            assert_eq!(rank, form.rank);
            assert!(form.verify(&m));
        }
    }
}
