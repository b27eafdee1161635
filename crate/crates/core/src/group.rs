//! Finitely generated abelian groups in invariant-factor normal form, and
//! the cokernel constructions that produce them.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::graph::{Digraph, GraphError};
use crate::matrix::{IntMatrix, LinalgError};
use crate::snf::smith_normal_form;

/// Torsion chain d1 | d2 | ... (every factor at least 2) plus a free rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    torsion: Vec<BigInt>,
    free_rank: usize,
}

impl AbelianGroup {
    /// Normal form from any list of cyclic orders: factors of 1 are dropped,
    /// 0 counts as a free summand, and the divisibility chain is restored.
    pub fn from_cyclic_orders(orders: Vec<BigInt>, free_rank: usize) -> Self {
        let mut gens: Vec<&BigInt> = Vec::new();
        let mut extra_free = 0;
        for d in &orders {
            if d.is_zero() {
                extra_free += 1;
            } else if !d.is_one() {
                gens.push(d);
            }
        }
        let torsion = if gens.is_empty() {
            Vec::new()
        } else {
            let blocks: Vec<IntMatrix> = gens
                .iter()
                .map(|d| {
                    let mut m = IntMatrix::zeros(1, 1);
                    m[(0, 0)] = (*d).clone();
                    m
                })
                .collect();
            let refs: Vec<&IntMatrix> = blocks.iter().collect();
            let snf = smith_normal_form(&IntMatrix::block_diag(&refs));
            snf.nontrivial_factors()
        };
        AbelianGroup { torsion, free_rank: free_rank + extra_free }
    }

    pub fn trivial() -> Self {
        AbelianGroup { torsion: Vec::new(), free_rank: 0 }
    }

    pub fn cyclic(order: BigInt) -> Self {
        AbelianGroup::from_cyclic_orders(vec![order], 0)
    }

    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    /// Group order; None when the free rank is positive.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.torsion.iter().product())
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "trivial");
        }
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("ℤ/{d}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("ℤ".to_string()),
            r => parts.push(format!("ℤ^{r}")),
        }
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

/// cok(A) = ℤ^rows / (column span of A), read off the Smith normal form:
/// torsion from the finite nontrivial diagonal entries, free rank
/// rows − rank.
pub fn cokernel(a: &IntMatrix) -> AbelianGroup {
    let snf = smith_normal_form(a);
    let rank = snf.rank();
    AbelianGroup {
        torsion: snf.nontrivial_factors(),
        free_rank: a.rows() - rank,
    }
}

/// crit(g) as the cokernel of the reduced Laplacian. Eulerian connectivity
/// makes the result sink-independent and finite.
pub fn critical_group(g: &Digraph, sink: usize) -> Result<AbelianGroup, GraphError> {
    g.ensure_eulerian_connected()?;
    Ok(cokernel(&g.reduced_laplacian(sink)?))
}

/// Invariant-factor normal form of a direct sum, computed without any
/// factoring: stack all torsion factors into one diagonal matrix and take
/// its Smith normal form. Free ranks add.
pub fn direct_sum_normal_form(groups: &[AbelianGroup]) -> AbelianGroup {
    let mut orders = Vec::new();
    let mut free_rank = 0;
    for g in groups {
        orders.extend(g.torsion.iter().cloned());
        free_rank += g.free_rank;
    }
    AbelianGroup::from_cyclic_orders(orders, free_rank)
}

/// Order of the class of v in cok(a) for nonsingular square a: with
/// U·a·V = S and w = U·v, the order is lcm over i of dᵢ/gcd(dᵢ, wᵢ).
pub fn element_order_in_cokernel(a: &IntMatrix, v: &[BigInt]) -> Result<BigInt, LinalgError> {
    let k = a.require_square()?;
    if v.len() != k {
        return Err(LinalgError::LengthMismatch { expected: k, got: v.len() });
    }
    let snf = smith_normal_form(a);
    if snf.diag.iter().any(Zero::is_zero) {
        return Err(LinalgError::Singular);
    }
    let w = snf.u.mul_vec(v)?;
    let mut order = BigInt::one();
    for (d, wi) in snf.diag.iter().zip(&w) {
        let step = d / d.gcd(wi);
        order = order.lcm(&step);
    }
    Ok(order)
}

/// Cokernel of a with the class of the all-ones vector killed, computed as
/// the cokernel of [a | 1-column].
pub fn quotient_by_all_ones(a: &IntMatrix) -> Result<AbelianGroup, LinalgError> {
    let k = a.require_square()?;
    let ones = vec![BigInt::one(); k];
    Ok(cokernel(&a.augment_col(&ones)?))
}
