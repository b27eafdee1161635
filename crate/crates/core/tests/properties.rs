//! Randomized invariants connecting the independent computation paths.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use critcone::snf::smith_normal_form;
use critcone::{
    char_poly, cokernel, critical_group, direct_sum_normal_form, gcd_minors_diagonal,
    matrix::abs, spanning_tree_count, theorem_structure, AbelianGroup, Digraph, IntMatrix,
    OracleBudget,
};

fn square_matrix(max_dim: usize) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim).prop_flat_map(|d| {
        prop::collection::vec(-9i64..=9, d * d)
            .prop_map(move |entries| IntMatrix::from_fn(d, d, |i, j| entries[i * d + j].into()))
    })
}

/// Always contains the full directed cycle through all vertices, so the
/// result is connected; extra random cycles keep it balanced.
fn eulerian_digraph() -> impl Strategy<Value = Digraph> {
    (3usize..=5).prop_flat_map(|k| {
        let extra = prop::collection::vec(
            (Just((0..k).collect::<Vec<usize>>()).prop_shuffle(), 2..=k),
            0..=3,
        );
        extra.prop_map(move |cycles| {
            let mut arcs: Vec<(usize, usize, u64)> =
                (0..k).map(|i| (i, (i + 1) % k, 1)).collect();
            for (perm, len) in cycles {
                for i in 0..len {
                    arcs.push((perm[i], perm[(i + 1) % len], 1));
                }
            }
            Digraph::from_arcs(k, &arcs).unwrap()
        })
    })
}

/// A spanning path plus random extra edges; extra picks may double edges,
/// which exercises multiplicity handling.
fn connected_undirected() -> impl Strategy<Value = Digraph> {
    (2usize..=5).prop_flat_map(|k| {
        let pairs: Vec<(usize, usize)> = (0..k)
            .flat_map(|u| (u + 1..k).map(move |v| (u, v)))
            .collect();
        prop::collection::vec(any::<bool>(), pairs.len()).prop_map(move |included| {
            let mut edges: Vec<(usize, usize, u64)> =
                (1..k).map(|v| (v - 1, v, 1)).collect();
            edges.extend(
                pairs
                    .iter()
                    .zip(&included)
                    .filter(|(_, &inc)| inc)
                    .map(|(&(u, v), _)| (u, v, 1)),
            );
            Digraph::from_undirected(k, &edges).unwrap()
        })
    })
}

fn cofactor_det(a: &IntMatrix) -> BigInt {
    let n = a.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut det = BigInt::zero();
    for j in 0..n {
        let term = &a[(0, j)] * cofactor_det(&a.delete_row_col(0, j));
        if j % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

proptest! {
    #[test]
    fn snf_agrees_with_gcd_minors_and_keeps_transforms_unimodular(a in square_matrix(5)) {
        let snf = smith_normal_form(&a);
        prop_assert_eq!(&(&(&snf.u * &a) * &snf.v), &snf.s);
        prop_assert!(abs(&snf.u.determinant().unwrap()).is_one());
        prop_assert!(abs(&snf.v.determinant().unwrap()).is_one());
        prop_assert_eq!(&snf.diag, &gcd_minors_diagonal(&a).unwrap());
        let product: BigInt = snf.diag.iter().product();
        prop_assert_eq!(product, abs(&a.determinant().unwrap()));
    }

    #[test]
    fn determinant_matches_cofactor_expansion(a in square_matrix(4)) {
        prop_assert_eq!(a.determinant().unwrap(), cofactor_det(&a));
    }

    #[test]
    fn char_poly_constant_term_is_signed_determinant(a in square_matrix(4)) {
        let p = char_poly(&a).unwrap();
        let det = a.determinant().unwrap();
        let signed = if a.rows() % 2 == 0 { det } else { -det };
        prop_assert_eq!(p.eval(&BigInt::zero()), signed);
    }

    #[test]
    fn laplacian_columns_sum_to_zero(
        k in 1usize..=5,
        raw_arcs in prop::collection::vec((0usize..5, 0usize..5, 1u64..=3), 0..10),
    ) {
        let arcs: Vec<(usize, usize, u64)> = raw_arcs
            .into_iter()
            .map(|(t, h, m)| (t % k, h % k, m))
            .collect();
        let g = Digraph::from_arcs(k, &arcs).unwrap();
        let l = g.laplacian();
        for j in 0..k {
            let sum: BigInt = (0..k).map(|i| l[(i, j)].clone()).sum();
            prop_assert!(sum.is_zero());
        }
    }

    #[test]
    fn eulerian_rows_sum_to_zero_and_structure_matches(g in eulerian_digraph(), n in 2usize..=4) {
        let l = g.laplacian();
        let k = g.vertex_count();
        for i in 0..k {
            let sum: BigInt = (0..k).map(|j| l[(i, j)].clone()).sum();
            prop_assert!(sum.is_zero());
        }
        let direct = critical_group(&g.cone(n).unwrap(), k + n - 1).unwrap();
        prop_assert_eq!(direct, theorem_structure(&g, n).unwrap());
    }

    #[test]
    fn critical_group_is_sink_independent(g in eulerian_digraph()) {
        let reference = critical_group(&g, 0).unwrap();
        for sink in 1..g.vertex_count() {
            prop_assert_eq!(&critical_group(&g, sink).unwrap(), &reference);
        }
    }

    #[test]
    fn coning_is_associative(g in eulerian_digraph(), a in 1usize..=3, b in 1usize..=3) {
        let twice = g.cone(a).unwrap().cone(b).unwrap();
        prop_assert_eq!(twice, g.cone(a + b).unwrap());
    }

    #[test]
    fn direct_sum_is_commutative_associative_with_identity(
        xs in prop::collection::vec(2i64..=12, 0..4),
        ys in prop::collection::vec(2i64..=12, 0..4),
        zs in prop::collection::vec(2i64..=12, 0..4),
    ) {
        let grp = |v: &Vec<i64>| {
            AbelianGroup::from_cyclic_orders(v.iter().map(|&d| BigInt::from(d)).collect(), 0)
        };
        let (x, y, z) = (grp(&xs), grp(&ys), grp(&zs));
        let ab = direct_sum_normal_form(&[x.clone(), y.clone()]);
        let ba = direct_sum_normal_form(&[y.clone(), x.clone()]);
        prop_assert_eq!(&ab, &ba);
        let left = direct_sum_normal_form(&[ab, z.clone()]);
        let right = direct_sum_normal_form(&[x.clone(), direct_sum_normal_form(&[y, z])]);
        prop_assert_eq!(left, right);
        prop_assert_eq!(
            direct_sum_normal_form(&[x.clone(), AbelianGroup::trivial()]),
            x
        );
    }

    #[test]
    fn matrix_tree_theorem_on_random_graphs(g in connected_undirected()) {
        let trees = spanning_tree_count(&g, &OracleBudget::default()).unwrap();
        let det = abs(&g.reduced_laplacian(0).unwrap().determinant().unwrap());
        prop_assert_eq!(&trees, &det);
        let order = critical_group(&g, 0).unwrap().order().unwrap();
        prop_assert_eq!(order, det);
    }

    #[test]
    fn full_laplacian_cokernel_splits_off_one_free_rank(g in eulerian_digraph()) {
        let full = cokernel(&g.laplacian());
        prop_assert_eq!(full.free_rank(), 1);
        let crit = critical_group(&g, 0).unwrap();
        prop_assert_eq!(full.torsion(), crit.torsion());
    }
}
