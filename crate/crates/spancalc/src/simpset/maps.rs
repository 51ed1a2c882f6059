//! Simplicial maps, map enumeration, and limits of complexes.

use super::complex::{assemble_complex, SimplexId, TruncatedSimplicialSet};
use super::standard::standard_simplex;
use std::collections::{BTreeMap, BTreeSet};
use std::rc::Rc;
use thiserror::Error;

/// Errors raised when building or combining simplicial maps.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum MapError {
    #[error("source and target have different bounds ({0} vs {1})")]
    BoundMismatch(usize, usize),
    #[error("component table has wrong shape at level {0}")]
    ComponentShape(usize),
    #[error("component of {0} is the out-of-range simplex {1}")]
    BadComponent(SimplexId, SimplexId),
    #[error("map fails to commute with {op} at {at}")]
    NotNatural { at: SimplexId, op: String },
    #[error("maps are not composable (inner target differs from outer source)")]
    NotComposable,
    #[error("maps do not share the required (co)domain")]
    DomainMismatch,
    #[error("mediator condition fails: the given maps do not agree over the cospan")]
    MediatorMismatch,
}

/// A level-wise map of truncated simplicial sets commuting with faces and
/// degeneracies.  Construction validates naturality exhaustively.
#[derive(Clone, Debug)]
pub struct SimplicialMap {
    source: Rc<TruncatedSimplicialSet>,
    target: Rc<TruncatedSimplicialSet>,
    components: Vec<Vec<SimplexId>>,
}

impl PartialEq for SimplicialMap {
    fn eq(&self, other: &Self) -> bool {
        self.components == other.components
            && *self.source == *other.source
            && *self.target == *other.target
    }
}

impl Eq for SimplicialMap {}

impl SimplicialMap {
    /// Build a map from its level-wise component tables, checking that it
    /// commutes with all faces and degeneracies.
    pub fn new(
        source: Rc<TruncatedSimplicialSet>,
        target: Rc<TruncatedSimplicialSet>,
        components: Vec<Vec<SimplexId>>,
    ) -> Result<Self, MapError> {
        if source.bound() != target.bound() {
            return Err(MapError::BoundMismatch(source.bound(), target.bound()));
        }
        let bound = source.bound();
        if components.len() != bound + 1 {
            return Err(MapError::ComponentShape(components.len()));
        }
        for level in 0..=bound {
            if components[level].len() != source.level_len(level) {
                return Err(MapError::ComponentShape(level));
            }
            for (index, &image) in components[level].iter().enumerate() {
                if image.level != level || image.index >= target.level_len(level) {
                    return Err(MapError::BadComponent(
                        SimplexId { level, index },
                        image,
                    ));
                }
            }
        }
        let map = SimplicialMap {
            source,
            target,
            components,
        };
        for level in 0..=bound {
            for id in map.source.simplices(level) {
                if level >= 1 {
                    for i in 0..=level {
                        if map.apply(map.source.face(id, i)) != map.target.face(map.apply(id), i)
                        {
                            return Err(MapError::NotNatural {
                                at: id,
                                op: format!("d_{i}"),
                            });
                        }
                    }
                }
                if level < bound {
                    for i in 0..=level {
                        if map.apply(map.source.degeneracy(id, i))
                            != map.target.degeneracy(map.apply(id), i)
                        {
                            return Err(MapError::NotNatural {
                                at: id,
                                op: format!("s_{i}"),
                            });
                        }
                    }
                }
            }
        }
        Ok(map)
    }

    pub fn identity(x: &Rc<TruncatedSimplicialSet>) -> Self {
        let components = (0..=x.bound())
            .map(|level| x.simplices(level).collect())
            .collect();
        SimplicialMap {
            source: x.clone(),
            target: x.clone(),
            components,
        }
    }

    /// The unique map to the point `Δ⁰` (truncated at the same bound).
    pub fn to_point(x: &Rc<TruncatedSimplicialSet>) -> Self {
        let point = Rc::new(standard_simplex(0, x.bound()));
        let components = (0..=x.bound())
            .map(|level| {
                x.simplices(level)
                    .map(|_| SimplexId::new(level, 0))
                    .collect()
            })
            .collect();
        SimplicialMap {
            source: x.clone(),
            target: point,
            components,
        }
    }

    pub fn source(&self) -> &TruncatedSimplicialSet {
        &self.source
    }

    pub fn target(&self) -> &TruncatedSimplicialSet {
        &self.target
    }

    pub fn source_rc(&self) -> &Rc<TruncatedSimplicialSet> {
        &self.source
    }

    pub fn target_rc(&self) -> &Rc<TruncatedSimplicialSet> {
        &self.target
    }

    pub fn apply(&self, id: SimplexId) -> SimplexId {
        self.components[id.level][id.index]
    }

    pub fn components(&self) -> &[Vec<SimplexId>] {
        &self.components
    }

    /// Composition `self ∘ inner`.
    pub fn compose(&self, inner: &SimplicialMap) -> Result<SimplicialMap, MapError> {
        if !Rc::ptr_eq(&inner.target, &self.source) && *inner.target != *self.source {
            return Err(MapError::NotComposable);
        }
        let components = inner
            .components
            .iter()
            .map(|level| level.iter().map(|&id| self.apply(id)).collect())
            .collect();
        Ok(SimplicialMap {
            source: inner.source.clone(),
            target: self.target.clone(),
            components,
        })
    }

    /// Level-wise injectivity.
    pub fn is_injective(&self) -> bool {
        self.components.iter().all(|level| {
            let mut seen = BTreeSet::new();
            level.iter().all(|id| seen.insert(*id))
        })
    }
}

/// Act on a simplex by a simplicial operator, given as a weakly monotone map
/// `[k] → [level of x]`.  Uses the epi–mono factorization of the operator.
pub fn operator_action(x_set: &TruncatedSimplicialSet, x: SimplexId, op: &[u8]) -> SimplexId {
    let n = x.level;
    debug_assert!(
        op.windows(2).all(|w| w[0] <= w[1]) && op.iter().all(|&v| (v as usize) <= n),
        "operator must be weakly monotone into [{n}]"
    );
    let k = op.len() - 1;
    if k == n && op.iter().enumerate().all(|(t, &v)| v as usize == t) {
        return x;
    }
    // merge a repeat: op = y ∘ σ_t, so op* = s_t ∘ y*
    if let Some(t) = (0..k).find(|&t| op[t] == op[t + 1]) {
        let mut y = op.to_vec();
        y.remove(t + 1);
        let z = operator_action(x_set, x, &y);
        return x_set.degeneracy(z, t);
    }
    // strip the largest missing value: op = δ_j ∘ y, so op* = y* ∘ d_j
    let j = (0..=n)
        .rev()
        .find(|j| !op.contains(&(*j as u8)))
        .expect("a non-identity injective operator misses a value");
    let y: Vec<u8> = op
        .iter()
        .map(|&v| if (v as usize) > j { v - 1 } else { v })
        .collect();
    operator_action(x_set, x_set.face(x, j), &y)
}

/// The characteristic map `Δⁿ → X` of an `n`-simplex of `X` (Yoneda).
pub fn char_map(x_set: &Rc<TruncatedSimplicialSet>, x: SimplexId) -> SimplicialMap {
    let source = super::standard::StandardSimplex::new(x.level, x_set.bound());
    let components: Vec<Vec<SimplexId>> = (0..=x_set.bound())
        .map(|k| {
            source
                .complex()
                .simplices(k)
                .map(|id| operator_action(x_set, x, source.key_of(id)))
                .collect()
        })
        .collect();
    SimplicialMap::new(source.complex().clone(), x_set.clone(), components)
        .expect("characteristic map is simplicial")
}

/// Backtracking enumeration of maps `domain → codomain`, optionally with
/// forced values and a fiber constraint `f ∘ h = bottom`.
pub(crate) fn search_maps(
    domain: &Rc<TruncatedSimplicialSet>,
    codomain: &Rc<TruncatedSimplicialSet>,
    forced: Option<&[Vec<Option<SimplexId>>]>,
    fiber: Option<(&SimplicialMap, &SimplicialMap)>,
    stop_early: bool,
) -> Vec<SimplicialMap> {
    struct Search<'a> {
        domain: &'a TruncatedSimplicialSet,
        codomain: &'a TruncatedSimplicialSet,
        forced: Option<&'a [Vec<Option<SimplexId>>]>,
        fiber: Option<(&'a SimplicialMap, &'a SimplicialMap)>,
        comps: Vec<Vec<SimplexId>>,
        results: Vec<Vec<Vec<SimplexId>>>,
        stop_early: bool,
    }

    impl Search<'_> {
        fn faces_ok(&self, id: SimplexId, v: SimplexId) -> bool {
            if id.level == 0 {
                return true;
            }
            (0..=id.level).all(|i| {
                let fb = self.domain.face(id, i);
                self.codomain.face(v, i) == self.comps[fb.level][fb.index]
            })
        }

        fn fiber_ok(&self, id: SimplexId, v: SimplexId) -> bool {
            match self.fiber {
                None => true,
                Some((f, bottom)) => f.apply(v) == bottom.apply(id),
            }
        }

        fn forced_at(&self, id: SimplexId) -> Option<SimplexId> {
            self.forced.and_then(|f| f[id.level][id.index])
        }

        /// Returns true when the search should stop completely.
        fn go(&mut self, level: usize, index: usize) -> bool {
            if index == self.domain.level_len(level) {
                if level == self.domain.bound() {
                    self.results.push(self.comps.clone());
                    return self.stop_early;
                }
                return self.go(level + 1, 0);
            }
            let id = SimplexId { level, index };
            if let Some((i, tau)) = self.domain.witness(id) {
                // degenerate simplices are forced by naturality
                let v = self
                    .codomain
                    .degeneracy(self.comps[tau.level][tau.index], i);
                if let Some(w) = self.forced_at(id) {
                    if w != v {
                        return false;
                    }
                }
                self.comps[level][index] = v;
                return self.go(level, index + 1);
            }
            if let Some(v) = self.forced_at(id) {
                if !self.faces_ok(id, v) || !self.fiber_ok(id, v) {
                    return false;
                }
                self.comps[level][index] = v;
                return self.go(level, index + 1);
            }
            for v in self.codomain.simplices(level) {
                if self.faces_ok(id, v) && self.fiber_ok(id, v) {
                    self.comps[level][index] = v;
                    if self.go(level, index + 1) {
                        return true;
                    }
                }
            }
            false
        }
    }

    assert_eq!(domain.bound(), codomain.bound(), "bound mismatch in search");
    let comps: Vec<Vec<SimplexId>> = (0..=domain.bound())
        .map(|level| vec![SimplexId::new(level, usize::MAX); domain.level_len(level)])
        .collect();
    let mut search = Search {
        domain,
        codomain,
        forced,
        fiber,
        comps,
        results: Vec::new(),
        stop_early,
    };
    search.go(0, 0);
    let results = std::mem::take(&mut search.results);
    results
        .into_iter()
        .map(|components| {
            SimplicialMap::new(domain.clone(), codomain.clone(), components)
                .expect("search produced a non-simplicial map")
        })
        .collect()
}

/// Exhaustively enumerate all simplicial maps `a → x`, in a deterministic
/// order.
pub fn enumerate_maps(
    a: &Rc<TruncatedSimplicialSet>,
    x: &Rc<TruncatedSimplicialSet>,
) -> Vec<SimplicialMap> {
    search_maps(a, x, None, None, false)
}

/// The strict fiber product of `f: X → Z` and `g: Y → Z`, with projections.
#[derive(Clone, Debug)]
pub struct FiberProduct {
    pub complex: Rc<TruncatedSimplicialSet>,
    /// Projection to the source of `f`.
    pub left: SimplicialMap,
    /// Projection to the source of `g`.
    pub right: SimplicialMap,
    index: Vec<BTreeMap<(usize, usize), usize>>,
}

impl FiberProduct {
    /// Id of the pair `(x, y)` if it lies in the fiber product.
    pub fn pair_id(&self, x: SimplexId, y: SimplexId) -> Option<SimplexId> {
        if x.level != y.level {
            return None;
        }
        self.index[x.level]
            .get(&(x.index, y.index))
            .map(|&index| SimplexId::new(x.level, index))
    }

    /// The unique map into the fiber product induced by a commuting cone.
    pub fn mediator(
        &self,
        q_left: &SimplicialMap,
        q_right: &SimplicialMap,
    ) -> Result<SimplicialMap, MapError> {
        if *q_left.source() != *q_right.source() {
            return Err(MapError::DomainMismatch);
        }
        let bound = q_left.source().bound();
        let mut components = Vec::with_capacity(bound + 1);
        for level in 0..=bound {
            let mut row = Vec::with_capacity(q_left.source().level_len(level));
            for id in q_left.source().simplices(level) {
                let pair = self
                    .pair_id(q_left.apply(id), q_right.apply(id))
                    .ok_or(MapError::MediatorMismatch)?;
                row.push(pair);
            }
            components.push(row);
        }
        SimplicialMap::new(q_left.source_rc().clone(), self.complex.clone(), components)
    }
}

/// Compute the strict fiber product of two maps with a common target.
pub fn fiber_product(f: &SimplicialMap, g: &SimplicialMap) -> Result<FiberProduct, MapError> {
    if *f.target() != *g.target() {
        return Err(MapError::DomainMismatch);
    }
    let bound = f.source().bound();
    let x = f.source();
    let y = g.source();
    let levels: Vec<Vec<(usize, usize)>> = (0..=bound)
        .map(|level| {
            x.simplices(level)
                .flat_map(|xi| {
                    y.simplices(level)
                        .filter(move |&yi| f.apply(xi) == g.apply(yi))
                        .map(move |yi| (xi.index, yi.index))
                })
                .collect()
        })
        .collect();
    let (complex, index) = assemble_complex(
        bound,
        levels,
        |level, &(xi, yi), i| {
            let fx = x.face(SimplexId::new(level, xi), i);
            let fy = y.face(SimplexId::new(level, yi), i);
            (fx.index, fy.index)
        },
        |level, &(xi, yi), i| {
            let sx = x.degeneracy(SimplexId::new(level, xi), i);
            let sy = y.degeneracy(SimplexId::new(level, yi), i);
            (sx.index, sy.index)
        },
    );
    let complex = Rc::new(complex);
    let mut left: Vec<Vec<SimplexId>> = (0..=bound)
        .map(|level| vec![SimplexId::new(level, 0); complex.level_len(level)])
        .collect();
    let mut right = left.clone();
    for (level, level_index) in index.iter().enumerate() {
        for (&(xi, yi), &idx) in level_index {
            left[level][idx] = SimplexId::new(level, xi);
            right[level][idx] = SimplexId::new(level, yi);
        }
    }
    let left = SimplicialMap::new(complex.clone(), f.source_rc().clone(), left)?;
    let right = SimplicialMap::new(complex.clone(), g.source_rc().clone(), right)?;
    Ok(FiberProduct {
        complex,
        left,
        right,
        index,
    })
}

/// The disjoint union of two complexes, with its inclusions.
#[derive(Clone, Debug)]
pub struct DisjointUnion {
    pub complex: Rc<TruncatedSimplicialSet>,
    pub left: SimplicialMap,
    pub right: SimplicialMap,
}

/// Compute the disjoint union `X ⊔ Y`.
pub fn disjoint_union(
    x: &Rc<TruncatedSimplicialSet>,
    y: &Rc<TruncatedSimplicialSet>,
) -> DisjointUnion {
    assert_eq!(x.bound(), y.bound(), "bound mismatch in disjoint union");
    let bound = x.bound();
    let levels: Vec<Vec<(u8, usize)>> = (0..=bound)
        .map(|level| {
            x.simplices(level)
                .map(|id| (0u8, id.index))
                .chain(y.simplices(level).map(|id| (1u8, id.index)))
                .collect()
        })
        .collect();
    let side = |tag: u8| if tag == 0 { &**x } else { &**y };
    let (complex, index) = assemble_complex(
        bound,
        levels,
        |level, &(tag, idx), i| (tag, side(tag).face(SimplexId::new(level, idx), i).index),
        |level, &(tag, idx), i| {
            (
                tag,
                side(tag).degeneracy(SimplexId::new(level, idx), i).index,
            )
        },
    );
    let complex = Rc::new(complex);
    let mk = |tag: u8, src: &Rc<TruncatedSimplicialSet>| {
        let components: Vec<Vec<SimplexId>> = (0..=bound)
            .map(|level| {
                src.simplices(level)
                    .map(|id| SimplexId::new(level, index[level][&(tag, id.index)]))
                    .collect()
            })
            .collect();
        SimplicialMap::new(src.clone(), complex.clone(), components)
            .expect("inclusion into a disjoint union is simplicial")
    };
    DisjointUnion {
        left: mk(0, x),
        right: mk(1, y),
        complex,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simpset::StandardSimplex;

    fn rc_simplex(n: usize, bound: usize) -> Rc<TruncatedSimplicialSet> {
        StandardSimplex::new(n, bound).complex().clone()
    }

    #[test]
    fn oracle_point_maps_count_vertices() {
        // Hom(Δ⁰, Δⁿ) has n + 1 elements
        for n in 0..=3 {
            let pt = rc_simplex(0, 3);
            let dn = rc_simplex(n, 3);
            assert_eq!(enumerate_maps(&pt, &dn).len(), n + 1);
        }
    }

    #[test]
    fn oracle_one_map_to_the_point() {
        let d1 = rc_simplex(1, 3);
        let pt = rc_simplex(0, 3);
        let maps = enumerate_maps(&d1, &pt);
        assert_eq!(maps.len(), 1);
        assert_eq!(maps[0], SimplicialMap::to_point(&d1));
    }

    #[test]
    fn oracle_simplex_endomap_counts_are_monotone_map_counts() {
        // Hom(Δ¹, Δ¹) ≅ monotone maps [1] → [1]: 3 of them
        let d1 = rc_simplex(1, 3);
        assert_eq!(enumerate_maps(&d1, &d1).len(), 3);
    }

    #[test]
    fn composition_with_identity_is_identity() {
        let d2 = rc_simplex(2, 3);
        let id = SimplicialMap::identity(&d2);
        for f in enumerate_maps(&d2, &d2) {
            assert_eq!(id.compose(&f).unwrap(), f);
            assert_eq!(f.compose(&id).unwrap(), f);
        }
    }

    #[test]
    fn operator_action_agrees_with_char_map() {
        let d2 = StandardSimplex::new(2, 3);
        let x = d2.id_of(&[0, 1, 2]);
        let cm = char_map(d2.complex(), x);
        // characteristic map of the top simplex is the identity
        assert_eq!(cm, SimplicialMap::identity(d2.complex()));
        // action by a codegeneracy produces the witnessed degeneracy
        let deg = operator_action(d2.complex(), x, &[0, 0, 1, 2]);
        assert_eq!(deg, d2.id_of(&[0, 0, 1, 2]));
    }

    #[test]
    fn fiber_product_over_point_is_product() {
        let d1 = rc_simplex(1, 2);
        let f = SimplicialMap::to_point(&d1);
        let fp = fiber_product(&f, &f).unwrap();
        // (Δ¹ × Δ¹)_0 has 4 vertices, level 1 has 9 pairs of edges
        assert_eq!(fp.complex.level_len(0), 4);
        assert_eq!(fp.complex.level_len(1), 9);
        fp.complex.validate().unwrap();
        let med = fp.mediator(&SimplicialMap::identity(&d1), &SimplicialMap::identity(&d1));
        let diag = med.unwrap();
        assert_eq!(fp.left.compose(&diag).unwrap(), SimplicialMap::identity(&d1));
    }

    #[test]
    fn disjoint_union_counts_add() {
        let d1 = rc_simplex(1, 2);
        let d2 = rc_simplex(2, 2);
        let du = disjoint_union(&d1, &d2);
        du.complex.validate().unwrap();
        for level in 0..=2 {
            assert_eq!(
                du.complex.level_len(level),
                d1.level_len(level) + d2.level_len(level)
            );
        }
        assert!(du.left.is_injective() && du.right.is_injective());
    }
}
