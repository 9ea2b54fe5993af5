//! Brute-force oracles for the combinatorial readings of the coefficients.
//!
//! The enumerators depend only on the exact arithmetic and the sequence
//! terms; [`crosscheck`] is where they meet the coefficient routes.

mod budget;
pub mod crosscheck;
mod enumerate;
mod matrix;
mod volume;

pub use budget::Budget;
pub use crosscheck::{
    acyclic_recurrence_report, bipartite_report, inverse_matrix_report, selections_report,
    verify_inverse_relation, volume_ratio_report,
};
pub use enumerate::{
    acyclic_multidigraphs_recurrence, count_acyclic_multidigraphs, count_bipartite_multigraphs,
    count_selections, BoxWeights,
};
pub use matrix::{invert_triangular, TriMatrix};
pub use volume::volume_ratio;
