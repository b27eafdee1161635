//! Brute-force spanning tree and arborescence counters.
//!
//! These enumerate edge subsets directly, so they are slow and bounded, but
//! they share no code with the Laplacian pipeline and serve as independent
//! ground truth for it.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::graph::Digraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    OverBudget { what: &'static str, value: usize, bound: usize },
    NotUndirected,
    RootOutOfRange { root: usize, count: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match self {
            OracleError::OverBudget { what, value, bound } => {
                write!(f, "{what} = {value} exceeds oracle budget {bound}")
            }
            OracleError::NotUndirected => {
                write!(f, "spanning tree counting needs a symmetrized undirected graph")
            }
            OracleError::RootOutOfRange { root, count } => {
                write!(f, "root {root} out of range for {count} vertices")
            }
        }
    }
}

impl std::error::Error for OracleError {}

/// Size limits above which the enumeration oracles refuse to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub max_dim: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_vertices: 8, max_edges: 14, max_dim: 6 }
    }
}

impl OracleBudget {
    fn check(&self, what: &'static str, value: usize, bound: usize) -> Result<(), OracleError> {
        if value > bound {
            return Err(OracleError::OverBudget { what, value, bound });
        }
        Ok(())
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when x and y were already connected.
    fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        self.parent[rx] = ry;
        rx != ry
    }
}

/// Counts spanning trees of a symmetrized undirected multigraph by checking
/// every (k-1)-subset of support edges; an edge of multiplicity m
/// contributes a factor m when selected. Loops are skipped since no tree
/// contains one.
pub fn spanning_tree_count(g: &Digraph, budget: &OracleBudget) -> Result<BigInt, OracleError> {
    if !g.is_undirected_symmetric() {
        return Err(OracleError::NotUndirected);
    }
    let k = g.vertex_count();
    budget.check("vertex count", k, budget.max_vertices)?;
    let edges: Vec<(usize, usize, u64)> =
        g.arcs().filter(|&(u, v, _)| u < v).collect();
    budget.check("edge count", edges.len(), budget.max_edges)?;

    let mut total = BigInt::zero();
    for subset in edges.iter().combinations(k - 1) {
        let mut uf = UnionFind::new(k);
        if subset.iter().all(|&&(u, v, _)| uf.union(u, v)) {
            let weight: BigInt = subset.iter().map(|&&(_, _, m)| BigInt::from(m)).product();
            total += weight;
        }
    }
    Ok(total)
}

/// Counts spanning arborescences oriented toward the root: arc subsets of
/// size k-1 in which every non-root vertex has exactly one outgoing arc and
/// every vertex reaches the root. Multiplicities multiply as above.
pub fn arborescence_count(
    g: &Digraph,
    root: usize,
    budget: &OracleBudget,
) -> Result<BigInt, OracleError> {
    let k = g.vertex_count();
    if root >= k {
        return Err(OracleError::RootOutOfRange { root, count: k });
    }
    budget.check("vertex count", k, budget.max_vertices)?;
    let arcs: Vec<(usize, usize, u64)> =
        g.arcs().filter(|&(t, h, _)| t != h).collect();
    budget.check("arc count", arcs.len(), budget.max_edges)?;

    let mut total = BigInt::zero();
    'subsets: for subset in arcs.iter().combinations(k - 1) {
        let mut next = vec![usize::MAX; k];
        for &&(t, h, _) in &subset {
            if t == root || next[t] != usize::MAX {
                continue 'subsets;
            }
            next[t] = h;
        }
        for start in 0..k {
            let mut v = start;
            let mut steps = 0;
            while v != root {
                v = next[v];
                steps += 1;
                if v == usize::MAX || steps > k {
                    continue 'subsets;
                }
            }
        }
        let weight: BigInt = subset.iter().map(|&&(_, _, m)| BigInt::from(m)).product();
        total += weight;
    }
    Ok(total)
}
