//! The positive loop half over `Q(q)`: quantum relation families in the
//! free associative algebra, per-degree ideal spans and exact quotient
//! dimensions, the enveloping-series count they are measured against, the
//! graded-dimension certificate, the chain-family dependence probe, and the
//! coefficientwise `q = 1` bridge to the classical families.

pub mod certificate;
pub mod dims;
pub mod envelope;
pub mod families;
pub mod specialize;
pub mod word_poly;

pub use certificate::{
    dependence_check, injectivity_certificate, DegreeRow, DependenceReport, FamilyDependence,
    GradedDimReport,
};
pub use dims::{
    fplus_dim, fplus_dim_dense, fplus_dim_with, ideal_rank, ideal_rank_at_one, ideal_rows,
};
pub use envelope::{envelope_dim, EnvelopeCounter};
pub use families::{
    q_family_instances, q_family_set, q_instantiate, s_q_instance, QRelationFamily,
};
pub use specialize::{check_specialization, SpecializationReport};
pub use word_poly::{words_of_degree, words_within, NCWordPoly};
