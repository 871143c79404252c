use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::vector::IntVector;

/// Dense row-major integer matrix. Zero rows or columns are allowed; they
/// show up naturally (a whole-space cone has an empty normal matrix).
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[IntVector]) -> Self {
        let cols = rows.first().map_or(0, |r| r.dim());
        for r in rows {
            assert_eq!(r.dim(), cols, "rows must share a common length");
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flat_map(|r| r.entries().to_vec()).collect(),
        }
    }

    /// Rows with an explicit width, so an empty row list still has a shape.
    pub fn from_rows_with_cols(rows: &[IntVector], cols: usize) -> Self {
        for r in rows {
            assert_eq!(r.dim(), cols, "rows must share the given length");
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flat_map(|r| r.entries().to_vec()).collect(),
        }
    }

    pub fn from_cols(cols: &[IntVector], rows: usize) -> Self {
        for c in cols {
            assert_eq!(c.dim(), rows, "columns must share the given length");
        }
        let mut m = IntMatrix::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, x) in c.entries().iter().enumerate() {
                *m.get_mut(i, j) = x.clone();
            }
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let vecs: Vec<IntVector> = rows.iter().map(|r| IntVector::from_i64(r)).collect();
        IntMatrix::from_rows(&vecs)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> IntVector {
        IntVector::new(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn col(&self, j: usize) -> IntVector {
        IntVector::new((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.get_mut(j, i) = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let term = a * other.get(k, j);
                    *out.get_mut(i, j) += term;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &IntVector) -> IntVector {
        assert_eq!(self.cols, v.dim(), "matrix-vector shape mismatch");
        IntVector::new(
            (0..self.rows)
                .map(|i| {
                    (0..self.cols)
                        .map(|j| self.get(i, j) * &v.entries()[j])
                        .sum()
                })
                .collect(),
        )
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let x = -self.get(i, j).clone();
            self.set(i, j, x);
        }
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                let Some(pivot_row) = (k + 1..n).find(|&i| !m.get(i, k).is_zero()) else {
                    return Ok(BigInt::zero());
                };
                m.swap_rows(k, pivot_row);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j);
                    debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                    m.set(i, j, num / &prev);
                }
                m.set(i, k, BigInt::zero());
            }
            prev = m.get(k, k).clone();
        }
        Ok(sign * m.get(n - 1, n - 1).clone())
    }

    /// Rank over the rationals, by fraction-free elimination with full pivoting.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut rank = 0;
        let mut prev = BigInt::one();
        while rank < rows && rank < cols {
            let pivot = (rank..rows)
                .flat_map(|i| (rank..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !m.get(i, j).is_zero());
            let Some((pi, pj)) = pivot else { break };
            m.swap_rows(rank, pi);
            m.swap_cols(rank, pj);
            let k = rank;
            for i in k + 1..rows {
                for j in k + 1..cols {
                    let num = m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j);
                    debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                    m.set(i, j, num / &prev);
                }
                m.set(i, k, BigInt::zero());
            }
            prev = m.get(k, k).clone();
            rank += 1;
        }
        rank
    }

    /// Inverse of a matrix with determinant +-1, via the adjugate.
    pub fn inverse_unimodular(&self) -> Result<IntMatrix> {
        let det = self.det()?;
        if !det.abs().is_one() {
            return Err(Error::NotPrimitive { content: det.abs() });
        }
        let n = self.rows;
        let mut inv = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let minor = self.delete_row_col(j, i).det()?;
                let sign = if (i + j) % 2 == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                };
                *inv.get_mut(i, j) = sign * minor / &det;
            }
        }
        Ok(inv)
    }

    pub fn delete_row_col(&self, row: usize, col: usize) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.rows - 1, self.cols - 1);
        let mut oi = 0;
        for i in 0..self.rows {
            if i == row {
                continue;
            }
            let mut oj = 0;
            for j in 0..self.cols {
                if j == col {
                    continue;
                }
                *out.get_mut(oi, oj) = self.get(i, j).clone();
                oj += 1;
            }
            oi += 1;
        }
        out
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Cofactor-expansion determinant: the independent oracle for `det`.
    pub(crate) fn det_cofactor(m: &IntMatrix) -> BigInt {
        assert!(m.is_square());
        let n = m.rows();
        if n == 0 {
            return BigInt::one();
        }
        if n == 1 {
            return m.get(0, 0).clone();
        }
        let mut acc = BigInt::zero();
        for j in 0..n {
            if m.get(0, j).is_zero() {
                continue;
            }
            let sign = if j % 2 == 0 { 1 } else { -1 };
            acc += BigInt::from(sign) * m.get(0, j) * det_cofactor(&m.delete_row_col(0, j));
        }
        acc
    }

    #[test]
    fn det_matches_cofactor_oracle_on_fixed_cases() {
        let cases = [
            IntMatrix::from_i64(&[&[2]]),
            IntMatrix::from_i64(&[&[1, 2], &[3, 4]]),
            IntMatrix::from_i64(&[&[2, 4], &[6, 8]]),
            IntMatrix::from_i64(&[&[1, 0, 0], &[1, 2, 0], &[-1, -1, 1]]),
            IntMatrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]),
            IntMatrix::from_i64(&[&[3, -2, 5], &[0, 0, 0], &[1, 1, 1]]),
            IntMatrix::from_i64(&[&[7, 3, -1, 2], &[0, 4, 4, 0], &[5, -5, 1, 9], &[2, 0, 0, -3]]),
        ];
        for m in &cases {
            assert_eq!(m.det().unwrap(), det_cofactor(m), "det mismatch on {m:?}");
        }
    }

    #[test]
    fn det_of_empty_matrix_is_one() {
        assert_eq!(IntMatrix::zeros(0, 0).det().unwrap(), BigInt::one());
    }

    #[test]
    fn det_rejects_non_square() {
        let m = IntMatrix::from_i64(&[&[1, 2, 3], &[4, 5, 6]]);
        assert!(matches!(m.det(), Err(Error::NotSquare { rows: 2, cols: 3 })));
    }

    #[test]
    fn rank_counts_pivots() {
        assert_eq!(IntMatrix::from_i64(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(IntMatrix::from_i64(&[&[1, 0], &[0, 1]]).rank(), 2);
        assert_eq!(IntMatrix::from_i64(&[&[1, 2, 3], &[4, 5, 6]]).rank(), 2);
        assert_eq!(IntMatrix::zeros(3, 2).rank(), 0);
        assert_eq!(IntMatrix::zeros(0, 4).rank(), 0);
    }

    #[test]
    fn unimodular_inverse_roundtrips() {
        let u = IntMatrix::from_i64(&[&[3, -2], &[-1, 1]]);
        let inv = u.inverse_unimodular().unwrap();
        assert_eq!(u.mul(&inv), IntMatrix::identity(2));
        assert_eq!(inv.mul(&u), IntMatrix::identity(2));
    }

    #[test]
    fn product_and_transpose_shapes() {
        let a = IntMatrix::from_i64(&[&[1, 2, 3], &[4, 5, 6]]);
        let b = a.transpose();
        let p = a.mul(&b);
        assert_eq!((p.rows(), p.cols()), (2, 2));
        assert_eq!(*p.get(0, 0), BigInt::from(14));
        assert_eq!(*p.get(0, 1), BigInt::from(32));
    }
}
