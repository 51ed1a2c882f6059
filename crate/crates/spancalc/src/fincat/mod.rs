//! Finite categories, functors, pullbacks, adequate triples, and nerves.
//!
//! A [`FinCategory`] is a finite presentation with a total composition
//! table; construction validates unit and associativity laws exhaustively
//! and reports violations with witnesses.  On top of this the module
//! provides functors with checked preservation ([`FinFunctor`]), natural
//! transformations, pullback squares carrying replayable universality
//! certificates, adequate triples in the weakened (footnote) form, the
//! 1-categorical (co)cartesianness deciders, and nerves as truncated
//! simplicial sets.

mod category;
mod examples;
mod functor;
mod nerve;
mod pullback;
mod triple;

pub use category::{
    CategoryBuilder, CategoryError, FinCategory, Groupoid, MorId, ObjId, Subcategory,
};
pub use examples::{
    chain_poset, collage, divisor_lattice, finset_skeleton, poset_category, terminal_category,
    walking_arrow, walking_iso, Collage,
};
pub use functor::{
    natural_isos, natural_transformations, poset_functor, FinFunctor, FunctorError,
};
pub use nerve::{nerve, nerve_map, Nerve};
pub use pullback::{compute_pullback, is_pullback_square, ChoiceStrategy, PullbackSquare};
pub use triple::{
    is_adequate, is_cartesian_1cat, is_cocartesian_1cat, AdequacyReport, StabilityFailure,
    Triple, TripleError, TripleFunctor,
};
