//! Dense matrices of arbitrary-precision integers.
//!
//! All arithmetic is exact; there is no floating point anywhere in this
//! crate. Matrices are immutable values for callers, with a small set of
//! in-place elementary row/column operations used by the normal-form
//! routines.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinalgError {
    NotSquare { rows: usize, cols: usize },
    DimensionOverBound { dim: usize, bound: usize },
    Singular,
    LengthMismatch { expected: usize, got: usize },
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match self {
            LinalgError::NotSquare { rows, cols } => {
                write!(f, "matrix is {rows}x{cols}, expected square")
            }
            LinalgError::DimensionOverBound { dim, bound } => {
                write!(f, "dimension {dim} exceeds the configured bound {bound}")
            }
            LinalgError::Singular => write!(f, "matrix is singular"),
            LinalgError::LengthMismatch { expected, got } => {
                write!(f, "vector has length {got}, expected {expected}")
            }
        }
    }
}

impl std::error::Error for LinalgError {}

/// Row-major dense integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
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
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// The all-ones matrix.
    pub fn ones(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::one(); rows * cols],
        }
    }

    pub fn from_fn<F>(rows: usize, cols: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> BigInt,
    {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    /// Convenience constructor for literal matrices in tests and examples.
    /// Panics if the rows are ragged.
    pub fn from_i64(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows
                .into_iter()
                .flatten()
                .map(BigInt::from)
                .collect(),
        }
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

    pub fn require_square(&self) -> Result<usize, LinalgError> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn transpose(&self) -> IntMatrix {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Deletes one row and one column. Panics if out of range.
    pub fn delete_row_col(&self, row: usize, col: usize) -> IntMatrix {
        assert!(row < self.rows && col < self.cols);
        Self::from_fn(self.rows - 1, self.cols - 1, |i, j| {
            let si = if i < row { i } else { i + 1 };
            let sj = if j < col { j } else { j + 1 };
            self[(si, sj)].clone()
        })
    }

    /// Appends one extra column on the right.
    pub fn augment_col(&self, col: &[BigInt]) -> Result<IntMatrix, LinalgError> {
        if col.len() != self.rows {
            return Err(LinalgError::LengthMismatch {
                expected: self.rows,
                got: col.len(),
            });
        }
        Ok(Self::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                col[i].clone()
            }
        }))
    }

    /// Block-diagonal assembly; the off-diagonal blocks are zero.
    pub fn block_diag(blocks: &[&IntMatrix]) -> IntMatrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(rows, cols);
        let mut ro = 0;
        let mut co = 0;
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m[(ro + i, co + j)] = b[(i, j)].clone();
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        m
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::LengthMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[to] += c * row[from]
    pub fn add_scaled_row(&mut self, from: usize, to: usize, c: &BigInt) {
        assert_ne!(from, to);
        for j in 0..self.cols {
            let delta = c * &self[(from, j)];
            self[(to, j)] += delta;
        }
    }

    /// col[to] += c * col[from]
    pub fn add_scaled_col(&mut self, from: usize, to: usize, c: &BigInt) {
        assert_ne!(from, to);
        for i in 0..self.rows {
            let delta = c * &self[(i, from)];
            self[(i, to)] += delta;
        }
    }

    pub fn negate_row(&mut self, row: usize) {
        for j in 0..self.cols {
            let v = -&self[(row, j)];
            self[(row, j)] = v;
        }
    }

    pub fn negate_col(&mut self, col: usize) {
        for i in 0..self.rows {
            let v = -&self[(i, col)];
            self[(i, col)] = v;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Exact determinant by Bareiss fraction-free elimination. Every
    /// intermediate division is exact, so no rationals appear.
    pub fn determinant(&self) -> Result<BigInt, LinalgError> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)];
                    debug_assert!((&num % &prev).is_zero());
                    m[(i, j)] = num / &prev;
                }
                m[(i, k)] = BigInt::zero();
            }
            prev = m[(k, k)].clone();
        }
        Ok(sign * m[(n - 1, n - 1)].clone())
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;

    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMatrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &rhs[(i, j)])
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;

    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMatrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &rhs[(i, j)])
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        IntMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).map(|t| &self[(i, t)] * &rhs[(t, j)]).sum()
        })
    }
}

impl Mul<&IntMatrix> for &BigInt {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        IntMatrix::from_fn(rhs.rows, rhs.cols, |i, j| self * &rhs[(i, j)])
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        let widths: Vec<usize> = (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self[(i, j)].to_string().len()).max().unwrap_or(1))
            .collect();
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>w$}", self[(i, j)].to_string(), w = widths[j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// |v| as a check helper: absolute value of a determinant-like quantity.
pub fn abs(v: &BigInt) -> BigInt {
    v.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_small() {
        let a = IntMatrix::from_i64(vec![vec![1, 2], vec![3, 4]]);
        assert_eq!(a.determinant().unwrap(), BigInt::from(-2));

        let id = IntMatrix::identity(4);
        assert_eq!(id.determinant().unwrap(), BigInt::one());

        let empty = IntMatrix::zeros(0, 0);
        assert_eq!(empty.determinant().unwrap(), BigInt::one());
    }

    #[test]
    fn determinant_singular_and_swaps() {
        let a = IntMatrix::from_i64(vec![vec![1, 2], vec![2, 4]]);
        assert_eq!(a.determinant().unwrap(), BigInt::zero());

        // zero pivot forces a row swap
        let b = IntMatrix::from_i64(vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(b.determinant().unwrap(), BigInt::from(-1));
    }

    #[test]
    fn determinant_rejects_non_square() {
        let a = IntMatrix::zeros(2, 3);
        assert_eq!(
            a.determinant(),
            Err(LinalgError::NotSquare { rows: 2, cols: 3 })
        );
    }

    #[test]
    fn block_diag_layout() {
        let a = IntMatrix::from_i64(vec![vec![5]]);
        let b = IntMatrix::from_i64(vec![vec![1, 2], vec![3, 4]]);
        let m = IntMatrix::block_diag(&[&a, &b]);
        let expected = IntMatrix::from_i64(vec![
            vec![5, 0, 0],
            vec![0, 1, 2],
            vec![0, 3, 4],
        ]);
        assert_eq!(m, expected);
    }

    #[test]
    fn elementary_ops() {
        let mut m = IntMatrix::from_i64(vec![vec![1, 2], vec![3, 4]]);
        m.add_scaled_row(0, 1, &BigInt::from(-3));
        assert_eq!(m, IntMatrix::from_i64(vec![vec![1, 2], vec![0, -2]]));
        m.swap_cols(0, 1);
        assert_eq!(m, IntMatrix::from_i64(vec![vec![2, 1], vec![-2, 0]]));
        m.negate_row(1);
        assert_eq!(m, IntMatrix::from_i64(vec![vec![2, 1], vec![2, 0]]));
    }

    #[test]
    fn product_and_vector() {
        let a = IntMatrix::from_i64(vec![vec![1, 2], vec![3, 4]]);
        let b = IntMatrix::from_i64(vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(&a * &b, IntMatrix::from_i64(vec![vec![2, 1], vec![4, 3]]));
        let v = vec![BigInt::from(1), BigInt::from(1)];
        assert_eq!(
            a.mul_vec(&v).unwrap(),
            vec![BigInt::from(3), BigInt::from(7)]
        );
    }
}
