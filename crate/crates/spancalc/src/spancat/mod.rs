//! Span diagrams in an adequate triple and the simplicial objects they form.
//!
//! A *span* in a category equipped with an adequate triple structure is a
//! two-legged diagram `x ↞ w ↣ x′` whose backward leg is egressive and whose
//! forward leg is ingressive.  Higher-level span diagrams are functors out of
//! the interval poset of `[n]` (see [`crate::subdiv`]) whose constituent
//! squares are all ambigressive pullbacks.  This module provides:
//!
//! * [`SpanDiagram`] — a single such diagram, with face/degeneracy operators
//!   and the full ambigressive-cartesianness check;
//! * [`compose_spans`] — composition of two spans by the chosen pullback;
//! * [`SpanComplex`] — the truncated simplicial set of all span diagrams,
//!   the quasicategory-style model;
//! * [`SpanSegalSpace`] — the levelwise groupoid of span diagrams and
//!   natural isomorphisms, the Segal-space-style model, together with
//!   [`zeroth_row`](SpanSegalSpace::zeroth_row) relating the two;
//! * [`equivalence_embedding`] — the levelwise embedding of functor
//!   groupoids into span groupoids along the interval retraction, checked
//!   for being a groupoid equivalence split by the vertex section.

mod complex;
mod diagram;
mod embedding;
mod enumerate;
mod groupoid;

use thiserror::Error;

use crate::fincat::FunctorError;
use crate::subdiv::SubdivError;

pub use complex::{span_map, DiagramKey, SpanComplex};
pub use diagram::{compose_spans, SpanDiagram};
pub use embedding::{equivalence_embedding, EmbeddingLevel, EmbeddingReport, EmbeddingVariant};
pub use enumerate::{enumerate_poset_functors, PartialDiagram, PosetShape};
pub use groupoid::{
    span_segal_functor, span_segal_space, DiagramGroupoid, DiagramIso, SegalSpaceMap,
    SpanSegalSpace,
};

/// Errors raised by the span constructions.
#[derive(Debug, Error)]
pub enum SpanError {
    /// The triple fails the adequacy check; the payload describes the
    /// missing pullbacks or stability failures.
    #[error("the triple is not adequate: {0}")]
    InadequateTriple(String),
    /// A functor was offered as a span diagram but its source is not an
    /// interval poset category.
    #[error("the functor's source is not an interval poset of any level")]
    NotASpanShape,
    /// An operation expected a diagram of one level but received another.
    #[error("expected a diagram of level {expected}, got level {got}")]
    WrongLevel { expected: usize, got: usize },
    /// Two spans were composed whose middle feet disagree, or a span was
    /// built from legs with different sources.
    #[error("the diagrams do not share the required corner object")]
    NotComposable,
    /// The chosen-pullback search found no pullback for a composable
    /// corner (impossible over an adequate triple, reported defensively).
    #[error("no pullback exists for the composable corner")]
    MissingPullback,
    /// A dimension error bubbled up from the interval-poset layer.
    #[error(transparent)]
    Subdiv(#[from] SubdivError),
    /// A functor-construction error bubbled up from the category layer.
    #[error(transparent)]
    Functor(#[from] FunctorError),
}

/// All span diagrams of level `n` in the triple, in canonical enumeration
/// order.  Checks adequacy first and refuses to enumerate otherwise.
pub fn span_level(
    triple: &crate::fincat::Triple,
    n: usize,
) -> Result<Vec<SpanDiagram>, SpanError> {
    complex::check_adequate(triple)?;
    let functors = complex::enumerate_acart_level(triple, n)?;
    functors.into_iter().map(SpanDiagram::new).collect()
}
