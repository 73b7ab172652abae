//! Finite-length verification of local code properties: entropy, matrix
//! types, brute-force property checkers and ensemble-level estimators.

mod entropy;
mod estimate;
mod properties;
mod stats;
mod types;

pub use entropy::{q_ary_entropy, q_ary_entropy_inv};
pub use estimate::{
    estimate_containment, estimate_containment_many, similarity_expectation, similarity_many, BoundVerdict,
    ContainmentEstimate, EstimateMode, SimilarityEstimate, CONFIDENCE, EXHAUSTIVE_TAPE_LIMIT,
};
pub use properties::{
    check_list_decodable, check_list_recoverable, check_local_property, CenterMode, ListMode, PropertyKind,
    PropertyParams, PropertyReport, SearchMode, Verdict, Witness,
};
pub use stats::clopper_pearson;
pub use types::{
    arrangements, empirical_row_distribution, enumerate_types, tau_dim, type_class_size, vector_at, Arrangements,
    TypeClassSize, TypeDistribution,
};
