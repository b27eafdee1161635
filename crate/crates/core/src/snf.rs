//! Smith normal form over the integers, with unimodular transforms.
//!
//! The algorithm is the classical row/column gcd elimination: pivot on the
//! minimum nonzero absolute value of the working submatrix, reduce the
//! pivot row and column by Euclidean steps, and repair divisibility by
//! folding any non-divisible submatrix entry into the pivot row. Entry
//! growth is irrelevant since all integers are arbitrary precision, and the
//! fixed pivot rule makes the output deterministic.

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::{IntMatrix, LinalgError};

/// Default dimension bound for the combinatorial gcd-of-minors oracle.
pub const DEFAULT_MINOR_BOUND: usize = 6;

/// U * A * V = S with U, V unimodular and S diagonal with a divisibility
/// chain d1 | d2 | ... (zeros, if any, at the end).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub diag: Vec<BigInt>,
}

impl SnfResult {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|d| !d.is_zero()).count()
    }

    /// Diagonal entries > 1, i.e. the invariant factors of the torsion part
    /// of the cokernel.
    pub fn nontrivial_factors(&self) -> Vec<BigInt> {
        self.diag
            .iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .cloned()
            .collect()
    }
}

/// Position of the entry with minimum nonzero absolute value in the
/// submatrix starting at (k, k), scanning row-major for determinism.
fn min_abs_pivot(m: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in k..m.rows() {
        for j in k..m.cols() {
            let v = m[(i, j)].abs();
            if v.is_zero() {
                continue;
            }
            match &best {
                Some((_, b)) if *b <= v => {}
                _ => best = Some(((i, j), v)),
            }
        }
    }
    best.map(|(pos, _)| pos)
}

pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let rows = a.rows();
    let cols = a.cols();
    let mut s = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for k in 0..rows.min(cols) {
        'phase: loop {
            let Some((pi, pj)) = min_abs_pivot(&s, k) else {
                break 'phase; // submatrix is zero; remaining diagonal stays 0
            };
            s.swap_rows(k, pi);
            u.swap_rows(k, pi);
            s.swap_cols(k, pj);
            v.swap_cols(k, pj);

            // One Euclidean sweep over column k, then row k. Remainders are
            // strictly smaller than the pivot, so re-pivoting terminates.
            let mut clean = true;
            for i in k + 1..rows {
                if s[(i, k)].is_zero() {
                    continue;
                }
                let q = -(&s[(i, k)] / &s[(k, k)]);
                s.add_scaled_row(k, i, &q);
                u.add_scaled_row(k, i, &q);
                if !s[(i, k)].is_zero() {
                    clean = false;
                }
            }
            for j in k + 1..cols {
                if s[(k, j)].is_zero() {
                    continue;
                }
                let q = -(&s[(k, j)] / &s[(k, k)]);
                s.add_scaled_col(k, j, &q);
                v.add_scaled_col(k, j, &q);
                if !s[(k, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue 'phase;
            }

            // Divisibility repair: fold a non-divisible entry into row k so
            // the next sweep shrinks the pivot to a proper divisor.
            let pivot = s[(k, k)].clone();
            let offender = (k + 1..rows)
                .cartesian_product(k + 1..cols)
                .find(|&(i, j)| !(&s[(i, j)] % &pivot).is_zero());
            match offender {
                Some((i, _)) => {
                    s.add_scaled_row(i, k, &BigInt::one());
                    u.add_scaled_row(i, k, &BigInt::one());
                }
                None => break 'phase,
            }
        }
        if s[(k, k)].is_negative() {
            s.negate_row(k);
            u.negate_row(k);
        }
    }

    let diag = (0..rows.min(cols)).map(|i| s[(i, i)].clone()).collect();
    SnfResult { s, u, v, diag }
}

/// Independent characterization of the SNF diagonal: d_i = g_i / g_{i-1}
/// where g_i is the gcd of all i x i minors (g_0 = 1), and d_i = 0 once
/// g_i = 0. Exponential in the dimension, hence the bound.
pub fn gcd_minors_diagonal(a: &IntMatrix) -> Result<Vec<BigInt>, LinalgError> {
    gcd_minors_diagonal_with_bound(a, DEFAULT_MINOR_BOUND)
}

pub fn gcd_minors_diagonal_with_bound(
    a: &IntMatrix,
    bound: usize,
) -> Result<Vec<BigInt>, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    if n > bound {
        return Err(LinalgError::DimensionOverBound { dim: n, bound });
    }

    let mut diag = Vec::with_capacity(n);
    let mut prev_gcd = BigInt::one();
    for size in 1..=n {
        let mut g = BigInt::zero();
        'minors: for rows in (0..n).combinations(size) {
            for cols in (0..n).combinations(size) {
                let sub = IntMatrix::from_fn(size, size, |i, j| a[(rows[i], cols[j])].clone());
                g = g.gcd(&sub.determinant().expect("square by construction"));
                if g.is_one() {
                    break 'minors;
                }
            }
        }
        if g.is_zero() {
            // all larger minors vanish as well
            while diag.len() < n {
                diag.push(BigInt::zero());
            }
            return Ok(diag);
        }
        debug_assert!((&g % &prev_gcd).is_zero());
        diag.push(&g / &prev_gcd);
        prev_gcd = g;
    }
    Ok(diag)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_invariants(a: &IntMatrix) -> SnfResult {
        let snf = smith_normal_form(a);
        // U*A*V = S
        assert_eq!(&(&snf.u * a) * &snf.v, snf.s, "transform identity failed");
        // unimodular transforms
        assert_eq!(snf.u.determinant().unwrap().abs(), BigInt::one());
        assert_eq!(snf.v.determinant().unwrap().abs(), BigInt::one());
        // diagonal, nonnegative, divisibility chain, zeros last
        for i in 0..snf.s.rows() {
            for j in 0..snf.s.cols() {
                if i != j {
                    assert!(snf.s[(i, j)].is_zero(), "off-diagonal entry at ({i},{j})");
                }
            }
        }
        for w in snf.diag.windows(2) {
            if w[0].is_zero() {
                assert!(w[1].is_zero(), "zero before nonzero in diagonal");
            } else {
                assert!((&w[1] % &w[0]).is_zero(), "chain violated: {} ∤ {}", w[0], w[1]);
            }
        }
        assert!(snf.diag.iter().all(|d| !d.is_negative()));
        snf
    }

    #[test]
    fn identity_is_fixed() {
        let snf = check_invariants(&IntMatrix::identity(3));
        assert_eq!(snf.diag, vec![BigInt::one(); 3]);
        assert_eq!(snf.u, IntMatrix::identity(3));
        assert_eq!(snf.v, IntMatrix::identity(3));
    }

    #[test]
    fn coprime_diagonal_merges() {
        let a = IntMatrix::from_i64(vec![vec![2, 0], vec![0, 3]]);
        let snf = check_invariants(&a);
        assert_eq!(snf.diag, vec![BigInt::one(), BigInt::from(6)]);
    }

    #[test]
    fn path_cone_matrix_at_two() {
        // 2*I + L(P4) + ones has invariant factors (1,1,1,336)
        let m = IntMatrix::from_i64(vec![
            vec![4, 0, 1, 1],
            vec![0, 5, 0, 1],
            vec![1, 0, 5, 0],
            vec![1, 1, 0, 4],
        ]);
        let snf = check_invariants(&m);
        assert_eq!(
            snf.diag,
            [1, 1, 1, 336].map(BigInt::from).to_vec()
        );
    }

    #[test]
    fn triangle_reduced_laplacian() {
        let a = IntMatrix::from_i64(vec![vec![2, -1], vec![-1, 2]]);
        let snf = check_invariants(&a);
        assert_eq!(snf.diag, vec![BigInt::one(), BigInt::from(3)]);
        assert_eq!(gcd_minors_diagonal(&a).unwrap(), snf.diag);
    }

    #[test]
    fn singular_and_rectangular() {
        let a = IntMatrix::from_i64(vec![vec![2, 4], vec![1, 2]]);
        let snf = check_invariants(&a);
        assert_eq!(snf.diag, vec![BigInt::one(), BigInt::zero()]);
        assert_eq!(snf.rank(), 1);

        let b = IntMatrix::from_i64(vec![vec![6, 10, 15]]);
        let snf = check_invariants(&b);
        assert_eq!(snf.diag, vec![BigInt::one()]);

        let z = IntMatrix::zeros(2, 3);
        let snf = check_invariants(&z);
        assert_eq!(snf.diag, vec![BigInt::zero(), BigInt::zero()]);
    }

    #[test]
    fn negative_entries_normalize() {
        let a = IntMatrix::from_i64(vec![vec![-4, 0], vec![0, -6]]);
        let snf = check_invariants(&a);
        assert_eq!(snf.diag, vec![BigInt::from(2), BigInt::from(12)]);
    }

    #[test]
    fn gcd_minors_examples() {
        let a = IntMatrix::from_i64(vec![vec![2, 0], vec![0, 3]]);
        assert_eq!(
            gcd_minors_diagonal(&a).unwrap(),
            vec![BigInt::one(), BigInt::from(6)]
        );

        let zero = IntMatrix::zeros(2, 2);
        assert_eq!(
            gcd_minors_diagonal(&zero).unwrap(),
            vec![BigInt::zero(), BigInt::zero()]
        );

        let big = IntMatrix::identity(7);
        assert_eq!(
            gcd_minors_diagonal(&big),
            Err(LinalgError::DimensionOverBound { dim: 7, bound: 6 })
        );
        assert!(gcd_minors_diagonal_with_bound(&big, 8).is_ok());

        let rect = IntMatrix::zeros(2, 3);
        assert!(matches!(
            gcd_minors_diagonal(&rect),
            Err(LinalgError::NotSquare { .. })
        ));
    }
}
