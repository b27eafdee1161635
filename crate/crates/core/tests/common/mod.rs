//! Shared graph corpus for integration tests.

use critcone::Digraph;
use itertools::Itertools;

pub fn complete_graph(k: usize) -> Digraph {
    let edges: Vec<(usize, usize, u64)> = (0..k)
        .flat_map(|u| (u + 1..k).map(move |v| (u, v, 1)))
        .collect();
    Digraph::from_undirected(k, &edges).unwrap()
}

fn pair_index(k: usize, u: usize, v: usize) -> usize {
    // index of {u, v} with u < v in lexicographic pair order
    (0..u).map(|a| k - 1 - a).sum::<usize>() + (v - u - 1)
}

fn is_connected_mask(k: usize, mask: u32) -> bool {
    let mut seen = vec![false; k];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for y in 0..k {
            if y == x || seen[y] {
                continue;
            }
            let (u, v) = (x.min(y), x.max(y));
            if mask & (1 << pair_index(k, u, v)) != 0 {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen.iter().all(|&s| s)
}

fn canonical_mask(k: usize, mask: u32) -> u32 {
    (0..k)
        .permutations(k)
        .map(|perm| {
            let mut out = 0;
            for u in 0..k {
                for v in u + 1..k {
                    if mask & (1 << pair_index(k, u, v)) != 0 {
                        let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
                        out |= 1 << pair_index(k, a, b);
                    }
                }
            }
            out
        })
        .min()
        .unwrap()
}

/// One representative per isomorphism class of connected simple undirected
/// graphs on at most `max_vertices` vertices. For max_vertices = 5 this
/// yields 31 graphs (1 + 1 + 2 + 6 + 21).
pub fn connected_undirected_graphs(max_vertices: usize) -> Vec<Digraph> {
    let mut graphs = Vec::new();
    for k in 1..=max_vertices {
        let pairs = k * (k - 1) / 2;
        let mut seen = std::collections::BTreeSet::new();
        for mask in 0..(1u32 << pairs) {
            if !is_connected_mask(k, mask) || !seen.insert(canonical_mask(k, mask)) {
                continue;
            }
            let edges: Vec<(usize, usize, u64)> = (0..k)
                .flat_map(|u| (u + 1..k).map(move |v| (u, v)))
                .filter(|&(u, v)| mask & (1 << pair_index(k, u, v)) != 0)
                .map(|(u, v)| (u, v, 1))
                .collect();
            graphs.push(Digraph::from_undirected(k, &edges).unwrap());
        }
    }
    graphs
}

/// Eulerian digraphs on at most 5 vertices that are not symmetrized
/// undirected graphs.
pub fn directed_eulerian_samples() -> Vec<Digraph> {
    let cycle = |k: usize, mult: u64| {
        let arcs: Vec<(usize, usize, u64)> =
            (0..k).map(|i| (i, (i + 1) % k, mult)).collect();
        Digraph::from_arcs(k, &arcs).unwrap()
    };
    let samples = vec![
        cycle(3, 1),
        cycle(4, 1),
        cycle(5, 1),
        cycle(3, 2),
        // two directed triangles sharing vertex 0
        Digraph::from_arcs(
            5,
            &[(0, 1, 1), (1, 2, 1), (2, 0, 1), (0, 3, 1), (3, 4, 1), (4, 0, 1)],
        )
        .unwrap(),
        // tournament orientation of K5: arcs i -> i+1 and i -> i+2 mod 5
        Digraph::from_arcs(
            5,
            &(0..5)
                .flat_map(|i| [(i, (i + 1) % 5, 1), (i, (i + 2) % 5, 1)])
                .collect::<Vec<_>>(),
        )
        .unwrap(),
    ];
    for g in &samples {
        assert!(g.is_eulerian_connected());
        assert!(!g.is_undirected_symmetric());
    }
    samples
}

/// The full acceptance corpus: every connected simple undirected graph on
/// up to 5 vertices plus the genuinely directed Eulerian samples.
pub fn corpus() -> Vec<Digraph> {
    let mut graphs = connected_undirected_graphs(5);
    graphs.extend(directed_eulerian_samples());
    graphs
}
