//! Linear algebra over a field and the prop `Vect(k)`.
//!
//! Relations and corelations of `Vect(k)` are both linear subspaces of
//! `k^n × k^m`; [`corel_to_rel`] and [`rel_to_corel`] are the two halves of
//! that isomorphism.

pub mod algebra;
mod engine;
mod subspace;

pub use engine::LinearEngine;
pub use subspace::{
    all_subspaces, corel_canonical_lin, corel_matrix, corel_to_rel, corel_to_subspace,
    rel_to_corel, rel_to_subspace, scalar_corel_is_identity, subspace_of_span, subspace_to_corel,
    subspace_to_rel, Subspace,
};
