//! Finite, dimension-truncated calculator for span categories and Segal
//! spaces of spans.
//!
//! The crate works with explicit finite presentations throughout:
//!
//! * [`simpset`] — truncated simplicial sets, simplicial maps, subcomplexes,
//!   and an exhaustive lifting-problem solver;
//! * [`fincat`] — finite categories, functors, adequate triples, and
//!   replayable pullback certificates;
//! * [`subdiv`] — the twisted-arrow style posets `Σₙ`, their functoriality,
//!   and the induced subdivision of simplicial subsets of a simplex;
//! * [`spancat`] — span level sets, ambigressive-cartesian diagrams, span
//!   composition, and the simplicial groupoid model of the span Segal space;
//! * [`bisimp`] — truncated bisimplicial sets, box products, divisions,
//!   markings, and the box/division adjunction with explicit witnesses;
//! * [`fibcheck`] — fibration and cocartesianness deciders (quasi-category
//!   and Segal-space models) together with the end-to-end theorem verifiers;
//! * [`cli`] — the command-line front end and the line-oriented input format.
//!
//! Everything is decided by exhaustive enumeration at a configurable
//! truncation bound, so every verdict is replayable and every failure comes
//! with a concrete witness.

pub mod bisimp;
pub mod cli;
pub mod fibcheck;
pub mod fincat;
pub mod report;
pub mod simpset;
pub mod spancat;
pub mod subdiv;

/// Default truncation bound for simplicial levels.
pub const DEFAULT_BOUND: usize = 4;

/// Hard cap on the truncation bound accepted anywhere in the crate.
pub const GLOBAL_CAP: usize = 6;
