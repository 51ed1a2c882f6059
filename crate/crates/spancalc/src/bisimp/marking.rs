//! Markings: distinguished sets of edges on simplicial sets (level 1) and
//! bisimplicial sets (bidegree `(1, 0)`), always containing the degenerate
//! edges, together with marking-preserving maps and the marked box product.

use std::collections::BTreeSet;
use std::rc::Rc;

use super::set::box_product;
use super::{BisimpError, BisimplexId, BisimplicialMap, BoxProduct, TruncatedBisimplicialSet};
use crate::simpset::{enumerate_maps, SimplexId, SimplicialMap, TruncatedSimplicialSet};

/// A simplicial set with a distinguished set of edges containing every
/// degenerate edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedSimplicialSet {
    set: Rc<TruncatedSimplicialSet>,
    marked: BTreeSet<usize>,
}

impl MarkedSimplicialSet {
    /// Only the degenerate edges are marked.
    pub fn flat(set: &Rc<TruncatedSimplicialSet>) -> Self {
        Self::with_edges(set, std::iter::empty())
    }

    /// Every edge is marked.
    pub fn sharp(set: &Rc<TruncatedSimplicialSet>) -> Self {
        Self::with_edges(set, set.simplices(1))
    }

    /// The degenerate edges plus the given ones.
    pub fn with_edges(
        set: &Rc<TruncatedSimplicialSet>,
        extra: impl IntoIterator<Item = SimplexId>,
    ) -> Self {
        assert!(set.bound() >= 1, "a marking needs edges to mark");
        let mut marked: BTreeSet<usize> =
            set.simplices(1).filter(|&id| set.is_degenerate(id)).map(|id| id.index).collect();
        for id in extra {
            assert_eq!(id.level, 1, "only edges can be marked");
            marked.insert(id.index);
        }
        MarkedSimplicialSet { set: Rc::clone(set), marked }
    }

    pub fn set(&self) -> &TruncatedSimplicialSet {
        &self.set
    }

    pub fn set_rc(&self) -> &Rc<TruncatedSimplicialSet> {
        &self.set
    }

    pub fn is_marked(&self, id: SimplexId) -> bool {
        assert_eq!(id.level, 1);
        self.marked.contains(&id.index)
    }

    /// Indices of the marked edges.
    pub fn marked(&self) -> &BTreeSet<usize> {
        &self.marked
    }
}

/// The flat marking plus one designated edge — the marking of a simplex
/// (or of a subcomplex of one, under extraction) whose only marked
/// nondegenerate edge is the edge from vertex 0 to vertex 1.
pub fn l_marking(set: &Rc<TruncatedSimplicialSet>, edge: SimplexId) -> MarkedSimplicialSet {
    MarkedSimplicialSet::with_edges(set, [edge])
}

/// A bisimplicial set with a distinguished set of elements at bidegree
/// `(1, 0)` containing every horizontally degenerate one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedBisimplicialSet {
    set: Rc<TruncatedBisimplicialSet>,
    marked: BTreeSet<usize>,
}

impl MarkedBisimplicialSet {
    /// Only the horizontally degenerate edges are marked.
    pub fn flat(set: &Rc<TruncatedBisimplicialSet>) -> Self {
        Self::with_marked(set, std::iter::empty())
    }

    /// Every element of bidegree `(1, 0)` is marked.
    pub fn sharp(set: &Rc<TruncatedBisimplicialSet>) -> Self {
        let all: Vec<BisimplexId> = set.elements(1, 0).collect();
        Self::with_marked(set, all)
    }

    /// The horizontally degenerate edges plus the given ones.
    pub fn with_marked(
        set: &Rc<TruncatedBisimplicialSet>,
        extra: impl IntoIterator<Item = BisimplexId>,
    ) -> Self {
        assert!(set.h_bound() >= 1, "a marking needs edges to mark");
        let mut marked: BTreeSet<usize> = set
            .elements(1, 0)
            .filter(|&id| set.is_h_degenerate(id))
            .map(|id| id.index)
            .collect();
        for id in extra {
            assert_eq!((id.m, id.n), (1, 0), "only bidegree (1,0) elements can be marked");
            marked.insert(id.index);
        }
        MarkedBisimplicialSet { set: Rc::clone(set), marked }
    }

    pub fn set(&self) -> &TruncatedBisimplicialSet {
        &self.set
    }

    pub fn set_rc(&self) -> &Rc<TruncatedBisimplicialSet> {
        &self.set
    }

    pub fn is_marked(&self, id: BisimplexId) -> bool {
        assert_eq!((id.m, id.n), (1, 0));
        self.marked.contains(&id.index)
    }

    /// Indices of the marked elements at bidegree `(1, 0)`.
    pub fn marked(&self) -> &BTreeSet<usize> {
        &self.marked
    }

    /// Whether the marking is constant on the path components of the edge
    /// space: for every element at bidegree `(1, 1)` — a path between its
    /// two vertical faces — both endpoints are marked or both are not.
    pub fn respects_path_components(&self) -> bool {
        if self.set.v_bound() == 0 {
            return true;
        }
        self.set.elements(1, 1).all(|path| {
            let head = self.set.v_face(path, 0);
            let tail = self.set.v_face(path, 1);
            self.is_marked(head) == self.is_marked(tail)
        })
    }
}

/// A marking-preserving map of marked simplicial sets.
#[derive(Clone, Debug)]
pub struct MarkedSimplicialMap {
    map: SimplicialMap,
    source: MarkedSimplicialSet,
    target: MarkedSimplicialSet,
}

impl MarkedSimplicialMap {
    pub fn new(
        map: SimplicialMap,
        source: MarkedSimplicialSet,
        target: MarkedSimplicialSet,
    ) -> Result<Self, BisimpError> {
        if *map.source() != *source.set() || *map.target() != *target.set() {
            return Err(BisimpError::MarkingViolation(
                "the underlying map does not connect the marked sets".into(),
            ));
        }
        for &index in source.marked() {
            let edge = SimplexId { level: 1, index };
            if !target.is_marked(map.apply(edge)) {
                return Err(BisimpError::MarkingViolation(format!(
                    "marked edge {edge} maps to an unmarked edge"
                )));
            }
        }
        Ok(MarkedSimplicialMap { map, source, target })
    }

    pub fn map(&self) -> &SimplicialMap {
        &self.map
    }

    pub fn source(&self) -> &MarkedSimplicialSet {
        &self.source
    }

    pub fn target(&self) -> &MarkedSimplicialSet {
        &self.target
    }
}

/// A marking-preserving map of marked bisimplicial sets.
#[derive(Clone, Debug)]
pub struct MarkedBisimplicialMap {
    map: BisimplicialMap,
    source: MarkedBisimplicialSet,
    target: MarkedBisimplicialSet,
}

impl MarkedBisimplicialMap {
    pub fn new(
        map: BisimplicialMap,
        source: MarkedBisimplicialSet,
        target: MarkedBisimplicialSet,
    ) -> Result<Self, BisimpError> {
        if *map.source() != *source.set() || *map.target() != *target.set() {
            return Err(BisimpError::MarkingViolation(
                "the underlying map does not connect the marked sets".into(),
            ));
        }
        for &index in source.marked() {
            let edge = BisimplexId { m: 1, n: 0, index };
            if !target.is_marked(map.apply(edge)) {
                return Err(BisimpError::MarkingViolation(format!(
                    "marked element {edge} maps to an unmarked element"
                )));
            }
        }
        Ok(MarkedBisimplicialMap { map, source, target })
    }

    pub fn map(&self) -> &BisimplicialMap {
        &self.map
    }

    pub fn source(&self) -> &MarkedBisimplicialSet {
        &self.source
    }

    pub fn target(&self) -> &MarkedBisimplicialSet {
        &self.target
    }
}

/// The box product of a marked simplicial set with a plain one: the pair
/// of an edge and a vertex is marked exactly when the edge is.
pub fn marked_box(
    a: &MarkedSimplicialSet,
    b: &Rc<TruncatedSimplicialSet>,
) -> (BoxProduct, MarkedBisimplicialSet) {
    let product = box_product(a.set_rc(), b);
    let marked: Vec<BisimplexId> = product
        .set()
        .elements(1, 0)
        .filter(|&id| a.is_marked(product.pair_of(id).0))
        .collect();
    let marking = MarkedBisimplicialSet::with_marked(product.set_rc(), marked);
    (product, marking)
}

/// All simplicial maps sending marked edges to marked edges.
pub fn enumerate_marked_maps(
    a: &MarkedSimplicialSet,
    x: &MarkedSimplicialSet,
) -> Vec<SimplicialMap> {
    enumerate_maps(a.set_rc(), x.set_rc())
        .into_iter()
        .filter(|f| {
            a.marked().iter().all(|&index| x.is_marked(f.apply(SimplexId { level: 1, index })))
        })
        .collect()
}

/// All bisimplicial maps sending marked elements to marked elements.
pub fn enumerate_marked_bisimplicial_maps(
    a: &MarkedBisimplicialSet,
    x: &MarkedBisimplicialSet,
) -> Vec<BisimplicialMap> {
    super::maps::enumerate_bisimplicial_maps(a.set_rc(), x.set_rc())
        .into_iter()
        .filter(|f| {
            a.marked().iter().all(|&index| x.is_marked(f.apply(BisimplexId { m: 1, n: 0, index })))
        })
        .collect()
}
