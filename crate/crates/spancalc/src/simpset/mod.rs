//! Truncated simplicial sets and exhaustive lifting problems.
//!
//! A [`TruncatedSimplicialSet`] stores, for each level `k ≤ bound`, a finite
//! indexed set of simplices together with total face and degeneracy tables
//! and a degeneracy witness per simplex.  On top of that the module provides
//! standard simplices ([`StandardSimplex`]), named subcomplexes (boundaries,
//! horns, spines, left spines), simplicial maps with validated naturality,
//! exhaustive map enumeration, and a backtracking solver for lifting
//! problems, from which right-lifting-property checks against the usual
//! generator families are derived.

mod complex;
mod lifting;
mod maps;
mod standard;
mod subcomplex;

pub use complex::{ComplexError, SimplexId, TruncatedSimplicialSet};
pub(crate) use complex::assemble_complex;
pub use lifting::{
    extensions, has_rlp, rlp_counterexample, solve_lifting, GeneratorFamily, LiftingError,
    LiftingSquare, RlpCounterexample,
};
pub use maps::{
    char_map, disjoint_union, enumerate_maps, fiber_product, operator_action, DisjointUnion,
    FiberProduct, MapError, SimplicialMap,
};
pub use standard::{induced_map, monotone_maps, standard_simplex, StandardSimplex};
pub use subcomplex::{
    face_subcomplex, named_subcomplex, named_subcomplex_in, subcomplex_from_vertex_sets,
    ExtractedSubcomplex, NamedSubcomplex, Subcomplex, SubcomplexError,
};
