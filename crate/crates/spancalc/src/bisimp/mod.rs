//! Bisimplicial calculus: box products, divisions, markings, corner maps,
//! and the left-spine decompositions.
//!
//! A truncated bisimplicial set is a rectangular grid of element lists
//! carrying two commuting simplicial structures, one *horizontal* (degree
//! `m`) and one *vertical* (degree `n`).  On top of that core this module
//! provides:
//!
//! * [`box_product`] — the external product of two simplicial sets, with
//!   `(X □ Y)_{m,n} = X_m × Y_n`;
//! * [`BisimplicialMap`] with exhaustive enumeration and a lifting solver;
//! * the divisions [`under`] (`A\X`, "A under X") and [`over`] (`X/B`,
//!   "X over B"), adjoint to the box product, together with
//!   [`adjunction_witness`] which replays the adjunction bijections on
//!   concrete hom-sets;
//! * markings — distinguished edges — on simplicial and bisimplicial sets
//!   and the marked variants of boxes and divisions;
//! * the corner maps [`pair_under`] (`⟨u\f⟩`) and [`pair_over`] (`⟨f/v⟩`),
//!   the pushout product [`pushout_product`] (`u ⊙′ v`), and the
//!   Reedy-fibration decider [`reedy_counterexample`];
//! * fixed-edge division spaces and [`pointwise_crosscheck`], which
//!   compares the marked corner-map condition with its edgewise
//!   counterpart;
//! * [`left_spine_factorization_check`], replaying the subcomplex
//!   decomposition of a left horn into the left spine, the first face,
//!   and the remaining faces;
//! * [`segal_bisimplicial`], realising a span Segal space as a
//!   bisimplicial set whose rows are nerves of diagram groupoids.

mod division;
mod fixed_edge;
mod maps;
mod marking;
mod pair;
mod set;
mod spine;

pub use division::{
    adjunction_witness, marked_adjunction_witness, over, over_marked, under, under_marked,
    AdjunctionWitness, Division,
};
pub use fixed_edge::{
    fixed_edge_comparison, fixed_edge_space, FixedEdgeComparison, FixedEdgeSpace,
};
pub use marking::{
    enumerate_marked_bisimplicial_maps, enumerate_marked_maps, l_marking, marked_box,
    MarkedBisimplicialMap, MarkedBisimplicialSet, MarkedSimplicialMap, MarkedSimplicialSet,
};
pub use maps::{
    box_map, enumerate_bisimplicial_maps, pushout_product, solve_bisimplicial_lifting,
    terminal_map, BimapError, BisimplicialLiftingSquare, BisimplicialMap, PushoutProduct,
};
pub use pair::{
    is_reedy_fibration, pair_over, pair_under, pair_under_marked, reedy_counterexample, PairMap,
    ReedyCounterexample,
};
pub use set::{
    box_product, terminal_bisimplicial, BicomplexError, BisimplexId, BoxProduct,
    TruncatedBisimplicialSet,
};
pub use spine::{
    left_spine_base_case, left_spine_factorization_check, pointwise_crosscheck, PointwiseReport,
    PushoutCount, SpineFactorizationReport,
};

use thiserror::Error;

use crate::simpset::{LiftingError, MapError, SubcomplexError};

/// Errors surfaced by the bisimplicial calculus.
#[derive(Debug, Error)]
pub enum BisimpError {
    /// Two objects that must share truncation bounds do not.
    #[error("bound mismatch: {0}")]
    BoundMismatch(String),
    /// A precondition of an operation fails (e.g. a map that must be a
    /// Reedy fibration is not one within the inspected bounds).
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// A map that must be injective is not.
    #[error("the map must be injective")]
    NotMono,
    /// A marked map sends a marked edge to an unmarked one.
    #[error("marking violation: {0}")]
    MarkingViolation(String),
    /// The designated subcomplex does not contain the required low edge.
    #[error("the subcomplex does not contain the edge from vertex 0 to vertex 1")]
    MissingLowEdge,
    /// One of the adjunction bijections failed on a concrete hom-set.
    #[error("adjunction bijection failed: {0}")]
    AdjunctionFailure(String),
    /// An underlying bisimplicial map was malformed.
    #[error(transparent)]
    Bimap(#[from] BimapError),
    /// The two sides of the pointwise trivial-fibration comparison differ.
    #[error("pointwise comparison disagreed: {0}")]
    PointwiseDisagreement(String),
    /// An underlying simplicial map operation failed.
    #[error(transparent)]
    Map(#[from] MapError),
    /// A lifting-problem solver rejected its inputs.
    #[error(transparent)]
    Lifting(#[from] LiftingError),
    /// A subcomplex operation rejected its inputs.
    #[error(transparent)]
    Subcomplex(#[from] SubcomplexError),
}
