//! Free Lie and associative algebras on graded generators: Lyndon bases,
//! presentation quotient dimensions, the explicit relation catalogs of the
//! deformation families, relation verification in models, and word-rank
//! flatness tables.

pub mod appendix_b;
pub mod lyndon;
pub mod ncpoly;
pub mod presentation;
pub mod relations;

pub use appendix_b::{appendix_b_verify, AppendixBOutcome};
pub use lyndon::{lyndon_words, witt_dimension, LyndonBasis, TensorVec};
pub use ncpoly::{GenId, GenTable, NcPoly, NcWord};
pub use relations::{counit_check_type_b, relation_set, substitute_params, verify_relations_in_model, RelKind, Relation};
pub use presentation::{
    free_lie_dim_by_rank, lie_ideal_component_dim, positive_part_presentation_a,
    positive_part_presentation_b, presentation_dims, DimReport, LieWordContext, Presentation,
};
