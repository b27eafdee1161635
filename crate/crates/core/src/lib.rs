//! Critical groups of Eulerian digraphs and their iterated cones, in exact
//! integer arithmetic.
//!
//! The critical group of an Eulerian connected digraph is the cokernel of
//! its reduced Laplacian, presented here in invariant-factor normal form
//! via the Smith normal form. On top of that sit the cone constructions:
//! joining a graph G on k vertices with the complete graph K_n changes its
//! critical group in a controlled way, and the [`cone`] module both
//! computes the result directly and re-derives it from k-dimensional data
//! (the matrix nI + L + 1 and the characteristic polynomial of L), checking
//! the two against each other.
//!
//! Everything is arbitrary-precision; there is no floating point anywhere.
//!
//! ```
//! use critcone::{cone1_group, critical_group, Digraph};
//!
//! // the complete graph K4 has critical group Z/4 + Z/4
//! let k4 = Digraph::from_undirected(
//!     4,
//!     &[(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)],
//! )
//! .unwrap();
//! let crit = critical_group(&k4, 3).unwrap();
//! assert_eq!(crit.to_string(), "ℤ/4 ⊕ ℤ/4");
//!
//! // coning the triangle once gives K4, so the groups agree
//! let k3 = Digraph::from_undirected(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap();
//! assert_eq!(cone1_group(&k3).unwrap(), crit);
//! ```

pub mod cone;
pub mod graph;
pub mod group;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod snf;

pub use cone::{
    all_ones_order_check, block_reduction, cone1_group, cone_det_identity, cone_matrix,
    full_report, gcd_identity_check, order_formula, splitting_analysis, theorem_structure,
    verify_cone, ConeCheck, ConeError, ConeReport, SplitReport,
};
pub use graph::{Digraph, GraphError};
pub use group::{
    cokernel, critical_group, direct_sum_normal_form, element_order_in_cokernel,
    quotient_by_all_ones, AbelianGroup,
};
pub use matrix::{IntMatrix, LinalgError};
pub use oracle::{arborescence_count, spanning_tree_count, OracleBudget, OracleError};
pub use poly::{char_poly, IntPoly};
pub use snf::{gcd_minors_diagonal, gcd_minors_diagonal_with_bound, SnfResult, DEFAULT_MINOR_BOUND};
