//! Loop-half presentations over an affine type: the relation families, the
//! graded dimensions they carve out, exact comparisons between the ideals
//! the families generate, and the twisted loop model the presentations
//! evaluate onto.

pub mod dims;
pub mod equiv;
pub mod loop_algebra;
pub mod presentation;
pub mod realization;

pub use dims::{
    check_dims_against_roots, drop_witnesses, graded_dims, mismatches, DimEntry, DropWitness,
};
pub use equiv::{
    check_equivalence, check_family_membership, check_membership, EquivalenceReport,
    MembershipReport, SetRelation,
};
pub use loop_algebra::{build_twisted_loop, CycVec, LoopElement, TwistedLoop};
pub use presentation::{family_set, Family, LoopPresentation};
pub use realization::{
    evaluate, verify_evaluation, verify_relations, DimTriple, EvalReport, RelationReport,
};
