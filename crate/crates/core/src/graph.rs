//! Directed multigraphs, Laplacians, and the cone (join) construction.
//!
//! Arcs are stored as a map keyed by (tail, head) with multiplicity counts,
//! so iteration order and every derived matrix are deterministic.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::matrix::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    NoVertices,
    VertexOutOfRange { vertex: usize, count: usize },
    ZeroMultiplicity { tail: usize, head: usize },
    SingleVertex,
    SinkOutOfRange { sink: usize, count: usize },
    EmptyCone,
    Unbalanced { vertex: usize, indegree: u64, outdegree: u64 },
    Disconnected { vertex: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match self {
            GraphError::NoVertices => write!(f, "graph must have at least one vertex"),
            GraphError::VertexOutOfRange { vertex, count } => {
                write!(f, "vertex {vertex} out of range for {count} vertices")
            }
            GraphError::ZeroMultiplicity { tail, head } => {
                write!(f, "arc ({tail}, {head}) has multiplicity 0")
            }
            GraphError::SingleVertex => {
                write!(f, "operation needs at least two vertices")
            }
            GraphError::SinkOutOfRange { sink, count } => {
                write!(f, "sink {sink} out of range for {count} vertices")
            }
            GraphError::EmptyCone => write!(f, "cone needs at least one new vertex"),
            GraphError::Unbalanced { vertex, indegree, outdegree } => {
                write!(
                    f,
                    "vertex {vertex} is unbalanced: indegree {indegree}, outdegree {outdegree}"
                )
            }
            GraphError::Disconnected { vertex } => {
                write!(f, "vertex {vertex} is not connected to vertex 0")
            }
        }
    }
}

impl std::error::Error for GraphError {}

/// Finite directed multigraph on vertices 0..k. Loops and parallel arcs are
/// allowed; an undirected edge is a pair of opposite arcs of equal
/// multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    vertex_count: usize,
    arcs: BTreeMap<(usize, usize), u64>,
}

impl Digraph {
    /// Builds a digraph from (tail, head, multiplicity) triples. Repeated
    /// (tail, head) pairs accumulate.
    pub fn from_arcs(
        vertex_count: usize,
        arcs: &[(usize, usize, u64)],
    ) -> Result<Self, GraphError> {
        if vertex_count == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut map = BTreeMap::new();
        for &(tail, head, mult) in arcs {
            for v in [tail, head] {
                if v >= vertex_count {
                    return Err(GraphError::VertexOutOfRange { vertex: v, count: vertex_count });
                }
            }
            if mult == 0 {
                return Err(GraphError::ZeroMultiplicity { tail, head });
            }
            *map.entry((tail, head)).or_insert(0) += mult;
        }
        Ok(Digraph { vertex_count, arcs: map })
    }

    /// Builds the symmetric digraph of an undirected multigraph: each edge
    /// {u, v} becomes the arcs (u, v) and (v, u) with equal multiplicity, and
    /// a loop stays a single loop arc.
    pub fn from_undirected(
        vertex_count: usize,
        edges: &[(usize, usize, u64)],
    ) -> Result<Self, GraphError> {
        let mut arcs = Vec::with_capacity(2 * edges.len());
        for &(u, v, mult) in edges {
            arcs.push((u, v, mult));
            if u != v {
                arcs.push((v, u, mult));
            }
        }
        Digraph::from_arcs(vertex_count, &arcs)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Arc multiset entries in key order: ((tail, head), multiplicity).
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.arcs.iter().map(|(&(t, h), &m)| (t, h, m))
    }

    pub fn multiplicity(&self, tail: usize, head: usize) -> u64 {
        self.arcs.get(&(tail, head)).copied().unwrap_or(0)
    }

    pub fn outdegree(&self, v: usize) -> u64 {
        self.arcs
            .range((v, 0)..=(v, usize::MAX))
            .map(|(_, &m)| m)
            .sum()
    }

    pub fn indegree(&self, v: usize) -> u64 {
        self.arcs
            .iter()
            .filter(|(&(_, h), _)| h == v)
            .map(|(_, &m)| m)
            .sum()
    }

    /// True when every arc (u, v) is matched by (v, u) with the same
    /// multiplicity, i.e. the digraph is a symmetrized undirected graph.
    pub fn is_undirected_symmetric(&self) -> bool {
        self.arcs
            .iter()
            .all(|(&(t, h), &m)| self.multiplicity(h, t) == m)
    }

    /// True iff every vertex is balanced (indegree = outdegree) and the
    /// underlying undirected graph is connected. For balanced digraphs weak
    /// connectivity already implies strong connectivity.
    pub fn is_eulerian_connected(&self) -> bool {
        self.ensure_eulerian_connected().is_ok()
    }

    /// As `is_eulerian_connected`, but reports the first offending vertex.
    pub fn ensure_eulerian_connected(&self) -> Result<(), GraphError> {
        for v in 0..self.vertex_count {
            let indegree = self.indegree(v);
            let outdegree = self.outdegree(v);
            if indegree != outdegree {
                return Err(GraphError::Unbalanced { vertex: v, indegree, outdegree });
            }
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for (t, h, _) in self.arcs() {
                let w = if t == v {
                    h
                } else if h == v {
                    t
                } else {
                    continue;
                };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        match seen.iter().position(|&s| !s) {
            None => Ok(()),
            Some(vertex) => Err(GraphError::Disconnected { vertex }),
        }
    }

    /// L = D − Aᵗ: entry (i, i) is outdeg(i) minus the loop multiplicity at
    /// i, entry (i, j) for i ≠ j is −(multiplicity of arc (j, i)). Columns
    /// always sum to zero; rows too iff the digraph is balanced.
    pub fn laplacian(&self) -> IntMatrix {
        let k = self.vertex_count;
        let mut l = IntMatrix::zeros(k, k);
        for v in 0..k {
            l[(v, v)] = BigInt::from(self.outdegree(v)) - BigInt::from(self.multiplicity(v, v));
        }
        for (t, h, m) in self.arcs() {
            if t != h {
                l[(h, t)] -= BigInt::from(m);
            }
        }
        l
    }

    /// The Laplacian with the sink's row and column deleted.
    pub fn reduced_laplacian(&self, sink: usize) -> Result<IntMatrix, GraphError> {
        if self.vertex_count < 2 {
            return Err(GraphError::SingleVertex);
        }
        if sink >= self.vertex_count {
            return Err(GraphError::SinkOutOfRange { sink, count: self.vertex_count });
        }
        Ok(self.laplacian().delete_row_col(sink, sink))
    }

    /// The join of this graph with K_n: n new vertices, indexed after the
    /// original ones, joined to every original vertex and to each other by
    /// undirected edges. Balance and connectivity are preserved.
    pub fn cone(&self, n: usize) -> Result<Digraph, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyCone);
        }
        let k = self.vertex_count;
        let mut arcs: Vec<(usize, usize, u64)> =
            self.arcs().collect();
        for c in k..k + n {
            for v in 0..k {
                arcs.push((v, c, 1));
                arcs.push((c, v, 1));
            }
            for c2 in c + 1..k + n {
                arcs.push((c, c2, 1));
                arcs.push((c2, c, 1));
            }
        }
        Digraph::from_arcs(k + n, &arcs)
    }
}
