//! Monic integer characteristic polynomials.
//!
//! `char_poly` uses the Samuelson-Berkowitz scheme: the coefficient vector
//! of det(xI - A) is a product of lower-triangular Toeplitz matrices built
//! from principal submatrices. The whole computation stays in the integers,
//! so no rational bookkeeping is needed.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::matrix::{IntMatrix, LinalgError};

/// p(x) = c0 + c1 x + ... + x^deg, coefficients stored ascending.
/// The leading coefficient is always 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn from_ascending(coeffs: Vec<BigInt>) -> Self {
        assert!(coeffs.last().is_some_and(One::is_one), "must be monic");
        IntPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of x^i.
    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// |p(-n)|, the quantity every order formula in this crate consumes.
    pub fn eval_abs_at_minus_n(&self, n: usize) -> BigInt {
        self.eval(&-BigInt::from(n)).abs()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && self.degree() > 0 {
                continue;
            }
            let sign = if first {
                if c.is_negative() { "-" } else { "" }
            } else if c.is_negative() {
                " - "
            } else {
                " + "
            };
            let mag = c.abs();
            write!(f, "{sign}")?;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    write!(f, "x")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Characteristic polynomial det(xI - A), monic, by the division-free
/// Berkowitz recurrence over trailing principal submatrices.
pub fn char_poly(a: &IntMatrix) -> Result<IntPoly, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();

    // Coefficient vector in descending powers; starts as the polynomial 1
    // for the empty matrix and gains one degree per Toeplitz multiply.
    let mut vec = vec![BigInt::one()];
    for size in 1..=n {
        let off = n - size;
        // first column of the Toeplitz factor: 1, -a11, -(R M^j C)
        let mut col = Vec::with_capacity(size + 1);
        col.push(BigInt::one());
        col.push(-a[(off, off)].clone());
        if size > 1 {
            // w starts as C, then w <- M w; dot with R each round
            let mut w: Vec<BigInt> = (off + 1..n).map(|i| a[(i, off)].clone()).collect();
            for _ in 2..=size {
                let dot: BigInt = (off + 1..n)
                    .map(|j| &a[(off, j)] * &w[j - off - 1])
                    .sum();
                col.push(-dot);
                let next: Vec<BigInt> = (off + 1..n)
                    .map(|i| (off + 1..n).map(|j| &a[(i, j)] * &w[j - off - 1]).sum())
                    .collect();
                w = next;
            }
        }
        let mut next = vec![BigInt::zero(); size + 1];
        for (i, item) in next.iter_mut().enumerate() {
            for (j, prev) in vec.iter().enumerate() {
                if i >= j && i - j < col.len() {
                    *item += &col[i - j] * prev;
                }
            }
        }
        vec = next;
    }

    vec.reverse();
    Ok(IntPoly::from_ascending(vec))
}
