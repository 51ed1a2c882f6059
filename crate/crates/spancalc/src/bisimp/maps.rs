//! Maps of truncated bisimplicial sets: validated naturality in both
//! directions, exhaustive enumeration, a lifting solver, and the pushout
//! product of two injections.

use std::collections::{BTreeMap, BTreeSet};
use std::rc::Rc;

use thiserror::Error;

use super::set::{assemble_bicomplex, box_product, terminal_bisimplicial};
use super::{BisimplexId, BoxProduct, TruncatedBisimplicialSet};
use crate::simpset::{LiftingError, SimplicialMap};

use super::BisimpError;

/// A malformed bisimplicial map.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum BimapError {
    #[error("source and target have different bounds ({0:?} vs {1:?})")]
    Bounds((usize, usize), (usize, usize)),
    #[error("component table has wrong shape at bidegree ({0},{1})")]
    Shape(usize, usize),
    #[error("component of {0} is out of range")]
    Dangling(BisimplexId),
    #[error("map fails to commute with {op} at {at}")]
    NotNatural { at: BisimplexId, op: String },
    #[error("maps are not composable (inner target differs from outer source)")]
    NotComposable,
    #[error("the maps do not share the required endpoints")]
    Endpoints,
}

/// A map of truncated bisimplicial sets, stored as one component table per
/// bidegree and validated against all four operator families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BisimplicialMap {
    source: Rc<TruncatedBisimplicialSet>,
    target: Rc<TruncatedBisimplicialSet>,
    components: Vec<Vec<Vec<usize>>>,
}

impl BisimplicialMap {
    pub fn new(
        source: Rc<TruncatedBisimplicialSet>,
        target: Rc<TruncatedBisimplicialSet>,
        components: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self, BimapError> {
        let bounds = (source.h_bound(), source.v_bound());
        if bounds != (target.h_bound(), target.v_bound()) {
            return Err(BimapError::Bounds(bounds, (target.h_bound(), target.v_bound())));
        }
        if components.len() != bounds.0 + 1 {
            return Err(BimapError::Shape(components.len(), 0));
        }
        for (m, per_m) in components.iter().enumerate() {
            if per_m.len() != bounds.1 + 1 {
                return Err(BimapError::Shape(m, per_m.len()));
            }
            for (n, cell) in per_m.iter().enumerate() {
                if cell.len() != source.len(m, n) {
                    return Err(BimapError::Shape(m, n));
                }
                for (index, &image) in cell.iter().enumerate() {
                    if image >= target.len(m, n) {
                        return Err(BimapError::Dangling(BisimplexId { m, n, index }));
                    }
                }
            }
        }
        let map = BisimplicialMap { source, target, components };
        map.check_natural()?;
        Ok(map)
    }

    fn check_natural(&self) -> Result<(), BimapError> {
        let (src, tgt) = (&self.source, &self.target);
        for id in src.all_elements() {
            let v = self.apply(id);
            for i in 0..=id.m {
                if id.m >= 1 && self.apply(src.h_face(id, i)) != tgt.h_face(v, i) {
                    return Err(BimapError::NotNatural { at: id, op: format!("d^h_{i}") });
                }
                if id.m < src.h_bound() && self.apply(src.h_degen(id, i)) != tgt.h_degen(v, i) {
                    return Err(BimapError::NotNatural { at: id, op: format!("s^h_{i}") });
                }
            }
            for i in 0..=id.n {
                if id.n >= 1 && self.apply(src.v_face(id, i)) != tgt.v_face(v, i) {
                    return Err(BimapError::NotNatural { at: id, op: format!("d^v_{i}") });
                }
                if id.n < src.v_bound() && self.apply(src.v_degen(id, i)) != tgt.v_degen(v, i) {
                    return Err(BimapError::NotNatural { at: id, op: format!("s^v_{i}") });
                }
            }
        }
        Ok(())
    }

    pub fn identity(set: &Rc<TruncatedBisimplicialSet>) -> Self {
        let components = (0..=set.h_bound())
            .map(|m| (0..=set.v_bound()).map(|n| (0..set.len(m, n)).collect()).collect())
            .collect();
        BisimplicialMap { source: Rc::clone(set), target: Rc::clone(set), components }
    }

    pub fn source(&self) -> &TruncatedBisimplicialSet {
        &self.source
    }

    pub fn target(&self) -> &TruncatedBisimplicialSet {
        &self.target
    }

    pub fn source_rc(&self) -> &Rc<TruncatedBisimplicialSet> {
        &self.source
    }

    pub fn target_rc(&self) -> &Rc<TruncatedBisimplicialSet> {
        &self.target
    }

    pub fn components(&self) -> &[Vec<Vec<usize>>] {
        &self.components
    }

    pub fn apply(&self, id: BisimplexId) -> BisimplexId {
        BisimplexId { m: id.m, n: id.n, index: self.components[id.m][id.n][id.index] }
    }

    /// Compose `self ∘ inner`.
    pub fn compose(&self, inner: &BisimplicialMap) -> Result<BisimplicialMap, BimapError> {
        if *inner.target() != *self.source() {
            return Err(BimapError::NotComposable);
        }
        let components = self
            .components
            .iter()
            .enumerate()
            .map(|(m, per_m)| {
                per_m
                    .iter()
                    .enumerate()
                    .map(|(n, _)| {
                        inner.components[m][n]
                            .iter()
                            .map(|&mid| self.components[m][n][mid])
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Ok(BisimplicialMap {
            source: Rc::clone(&inner.source),
            target: Rc::clone(&self.target),
            components,
        })
    }

    pub fn is_injective(&self) -> bool {
        self.components.iter().all(|per_m| {
            per_m.iter().all(|cell| {
                let distinct: BTreeSet<usize> = cell.iter().copied().collect();
                distinct.len() == cell.len()
            })
        })
    }
}

/// The unique map from `x` to the terminal bisimplicial set of the same
/// bounds.
pub fn terminal_map(x: &Rc<TruncatedBisimplicialSet>) -> BisimplicialMap {
    let point = terminal_bisimplicial(x.h_bound(), x.v_bound());
    let components = (0..=x.h_bound())
        .map(|m| (0..=x.v_bound()).map(|n| vec![0; x.len(m, n)]).collect())
        .collect();
    BisimplicialMap { source: Rc::clone(x), target: point, components }
}

/// Backtracking enumeration of bisimplicial maps `domain → codomain`,
/// optionally with forced values and a fiber constraint `f ∘ h = bottom`.
///
/// Elements are assigned in order of total degree, so the witness of a
/// degenerate element is always assigned first and forces its value.
pub(crate) fn search_bisimplicial_maps(
    domain: &Rc<TruncatedBisimplicialSet>,
    codomain: &Rc<TruncatedBisimplicialSet>,
    forced: Option<&[Vec<Vec<Option<usize>>>]>,
    fiber: Option<(&BisimplicialMap, &BisimplicialMap)>,
    stop_early: bool,
) -> Vec<BisimplicialMap> {
    struct Search<'a> {
        domain: &'a TruncatedBisimplicialSet,
        codomain: &'a TruncatedBisimplicialSet,
        order: &'a [BisimplexId],
        forced: Option<&'a [Vec<Vec<Option<usize>>>]>,
        fiber: Option<(&'a BisimplicialMap, &'a BisimplicialMap)>,
        comps: Vec<Vec<Vec<usize>>>,
        results: Vec<Vec<Vec<Vec<usize>>>>,
        stop_early: bool,
    }

    impl Search<'_> {
        fn image(&self, id: BisimplexId) -> BisimplexId {
            BisimplexId { m: id.m, n: id.n, index: self.comps[id.m][id.n][id.index] }
        }

        fn faces_ok(&self, id: BisimplexId, v: BisimplexId) -> bool {
            if id.m >= 1 {
                for i in 0..=id.m {
                    if self.codomain.h_face(v, i) != self.image(self.domain.h_face(id, i)) {
                        return false;
                    }
                }
            }
            if id.n >= 1 {
                for i in 0..=id.n {
                    if self.codomain.v_face(v, i) != self.image(self.domain.v_face(id, i)) {
                        return false;
                    }
                }
            }
            true
        }

        fn fiber_ok(&self, id: BisimplexId, v: BisimplexId) -> bool {
            match self.fiber {
                None => true,
                Some((f, bottom)) => f.apply(v) == bottom.apply(id),
            }
        }

        fn forced_at(&self, id: BisimplexId) -> Option<usize> {
            self.forced.and_then(|f| f[id.m][id.n][id.index])
        }

        /// Returns true when the search should stop completely.
        fn go(&mut self, pos: usize) -> bool {
            if pos == self.order.len() {
                self.results.push(self.comps.clone());
                return self.stop_early;
            }
            let id = self.order[pos];
            let witnessed = self
                .domain
                .h_witness(id)
                .map(|(i, tau)| self.codomain.h_degen(self.image(tau), i))
                .or_else(|| {
                    self.domain
                        .v_witness(id)
                        .map(|(i, tau)| self.codomain.v_degen(self.image(tau), i))
                });
            if let Some(v) = witnessed {
                // degenerate elements are forced by naturality
                if let Some(w) = self.forced_at(id) {
                    if w != v.index {
                        return false;
                    }
                }
                self.comps[id.m][id.n][id.index] = v.index;
                return self.go(pos + 1);
            }
            if let Some(w) = self.forced_at(id) {
                let v = BisimplexId { m: id.m, n: id.n, index: w };
                if !self.faces_ok(id, v) || !self.fiber_ok(id, v) {
                    return false;
                }
                self.comps[id.m][id.n][id.index] = w;
                return self.go(pos + 1);
            }
            for v in self.codomain.elements(id.m, id.n) {
                if self.faces_ok(id, v) && self.fiber_ok(id, v) {
                    self.comps[id.m][id.n][id.index] = v.index;
                    if self.go(pos + 1) {
                        return true;
                    }
                }
            }
            false
        }
    }

    assert_eq!(
        (domain.h_bound(), domain.v_bound()),
        (codomain.h_bound(), codomain.v_bound()),
        "bound mismatch in bisimplicial search"
    );
    let mut order: Vec<BisimplexId> = domain.all_elements().collect();
    order.sort_by_key(|id| (id.m + id.n, id.m, id.index));
    let comps: Vec<Vec<Vec<usize>>> = (0..=domain.h_bound())
        .map(|m| (0..=domain.v_bound()).map(|n| vec![usize::MAX; domain.len(m, n)]).collect())
        .collect();
    let mut search = Search {
        domain,
        codomain,
        order: &order,
        forced,
        fiber,
        comps,
        results: Vec::new(),
        stop_early,
    };
    search.go(0);
    let results = std::mem::take(&mut search.results);
    results
        .into_iter()
        .map(|components| {
            BisimplicialMap::new(Rc::clone(domain), Rc::clone(codomain), components)
                .expect("search produced a non-bisimplicial map")
        })
        .collect()
}

/// Exhaustively enumerate all bisimplicial maps `a → x`, in a
/// deterministic order.
pub fn enumerate_bisimplicial_maps(
    a: &Rc<TruncatedBisimplicialSet>,
    x: &Rc<TruncatedBisimplicialSet>,
) -> Vec<BisimplicialMap> {
    search_bisimplicial_maps(a, x, None, None, false)
}

/// A commuting lifting square of bisimplicial maps
///
/// ```text
///   A --top--> X
///   |          |
/// left       right
///   v          v
///   B -bottom> Y
/// ```
///
/// whose solutions are maps `h: B → X` with `h ∘ left = top` and
/// `right ∘ h = bottom`.
#[derive(Clone, Copy)]
pub struct BisimplicialLiftingSquare<'a> {
    pub left: &'a BisimplicialMap,
    pub right: &'a BisimplicialMap,
    pub top: &'a BisimplicialMap,
    pub bottom: &'a BisimplicialMap,
}

/// Enumerate all diagonal fillers of the square.  The left map must be
/// injective.
pub fn solve_bisimplicial_lifting(
    square: &BisimplicialLiftingSquare,
) -> Result<Vec<BisimplicialMap>, LiftingError> {
    let (left, right, top, bottom) = (square.left, square.right, square.top, square.bottom);
    if *left.source() != *top.source()
        || *left.target() != *bottom.source()
        || *right.source() != *top.target()
        || *right.target() != *bottom.target()
    {
        return Err(LiftingError::ShapeMismatch);
    }
    let via_top = right.compose(top).expect("endpoints checked");
    let via_left = bottom.compose(left).expect("endpoints checked");
    if via_top != via_left {
        return Err(LiftingError::NotCommuting);
    }
    if !left.is_injective() {
        return Err(LiftingError::NotInjective);
    }
    let b = left.target_rc();
    let mut forced: Vec<Vec<Vec<Option<usize>>>> = (0..=b.h_bound())
        .map(|m| (0..=b.v_bound()).map(|n| vec![None; b.len(m, n)]).collect())
        .collect();
    for id in left.source().all_elements() {
        let down = left.apply(id);
        forced[down.m][down.n][down.index] = Some(top.apply(id).index);
    }
    let solutions = search_bisimplicial_maps(
        b,
        right.source_rc(),
        Some(&forced),
        Some((right, bottom)),
        false,
    );
    for h in &solutions {
        debug_assert_eq!(h.compose(left).unwrap(), *top);
        debug_assert_eq!(right.compose(h).unwrap(), *bottom);
    }
    Ok(solutions)
}

/// The functorial action of a pair of simplicial maps on box products:
/// `(u □ v)(a, b) = (u(a), v(b))`.
pub fn box_map(
    u: &SimplicialMap,
    v: &SimplicialMap,
    src: &BoxProduct,
    dst: &BoxProduct,
) -> Result<BisimplicialMap, BimapError> {
    if *u.source() != **src.left()
        || *v.source() != **src.right()
        || *u.target() != **dst.left()
        || *v.target() != **dst.right()
    {
        return Err(BimapError::Endpoints);
    }
    let set = src.set();
    let components = (0..=set.h_bound())
        .map(|m| {
            (0..=set.v_bound())
                .map(|n| {
                    set.elements(m, n)
                        .map(|id| {
                            let (x, y) = src.pair_of(id);
                            dst.pair_id(u.apply(x), v.apply(y)).index
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    BisimplicialMap::new(Rc::clone(src.set_rc()), Rc::clone(dst.set_rc()), components)
}

/// The pushout product of two injections `u: A ↪ A′` and `v: B ↪ B′`:
/// the union `A□B′ ∪ A′□B` inside `A′□B′`, together with its inclusion
/// (the corner map `u ⊙′ v`) and the two structure maps of the pushout.
#[derive(Clone, Debug)]
pub struct PushoutProduct {
    set: Rc<TruncatedBisimplicialSet>,
    map: BisimplicialMap,
    target: BoxProduct,
    left_box: BoxProduct,
    right_box: BoxProduct,
    from_left: BisimplicialMap,
    from_right: BisimplicialMap,
    index: Vec<Vec<BTreeMap<(usize, usize), usize>>>,
}

impl PushoutProduct {
    /// The union `A□B′ ∪ A′□B`.
    pub fn set_rc(&self) -> &Rc<TruncatedBisimplicialSet> {
        &self.set
    }

    /// The corner inclusion `u ⊙′ v` into `A′□B′`.
    pub fn map(&self) -> &BisimplicialMap {
        &self.map
    }

    /// The full box product `A′□B′`.
    pub fn target(&self) -> &BoxProduct {
        &self.target
    }

    /// The box product `A□B′`.
    pub fn left_box(&self) -> &BoxProduct {
        &self.left_box
    }

    /// The box product `A′□B`.
    pub fn right_box(&self) -> &BoxProduct {
        &self.right_box
    }

    /// The map `A□B′ → A□B′ ∪ A′□B`.
    pub fn from_left(&self) -> &BisimplicialMap {
        &self.from_left
    }

    /// The map `A′□B → A□B′ ∪ A′□B`.
    pub fn from_right(&self) -> &BisimplicialMap {
        &self.from_right
    }

    /// The element of the union with the given `A′`- and `B′`-coordinates,
    /// if the pair lies in the union.
    pub fn pair_id(&self, x: crate::simpset::SimplexId, y: crate::simpset::SimplexId) -> Option<BisimplexId> {
        self.index[x.level][y.level]
            .get(&(x.index, y.index))
            .map(|&index| BisimplexId { m: x.level, n: y.level, index })
    }

    /// The `(A′, B′)`-coordinates of an element of the union.
    pub fn pair_of(&self, id: BisimplexId) -> (crate::simpset::SimplexId, crate::simpset::SimplexId) {
        self.target.pair_of(self.map.apply(id))
    }
}

/// Form the pushout product of two injective simplicial maps.
pub fn pushout_product(
    u: &SimplicialMap,
    v: &SimplicialMap,
) -> Result<PushoutProduct, BisimpError> {
    if !u.is_injective() || !v.is_injective() {
        return Err(BisimpError::NotMono);
    }
    let a_big = u.target_rc();
    let b_big = v.target_rc();
    let target = box_product(a_big, b_big);
    let left_box = box_product(u.source_rc(), b_big);
    let right_box = box_product(a_big, v.source_rc());
    let h_bound = a_big.bound();
    let v_bound = b_big.bound();
    let im_u: Vec<BTreeSet<usize>> = (0..=h_bound)
        .map(|m| u.source().simplices(m).map(|id| u.apply(id).index).collect())
        .collect();
    let im_v: Vec<BTreeSet<usize>> = (0..=v_bound)
        .map(|n| v.source().simplices(n).map(|id| v.apply(id).index).collect())
        .collect();
    let grid: Vec<Vec<Vec<(usize, usize)>>> = (0..=h_bound)
        .map(|m| {
            (0..=v_bound)
                .map(|n| {
                    (0..a_big.level_len(m))
                        .flat_map(|x| (0..b_big.level_len(n)).map(move |y| (x, y)))
                        .filter(|&(x, y)| im_u[m].contains(&x) || im_v[n].contains(&y))
                        .collect()
                })
                .collect()
        })
        .collect();
    let (set, index) = assemble_bicomplex(
        h_bound,
        v_bound,
        grid,
        |m, _, key: &(usize, usize), i| {
            (a_big.face(crate::simpset::SimplexId { level: m, index: key.0 }, i).index, key.1)
        },
        |m, _, key, i| {
            (a_big.degeneracy(crate::simpset::SimplexId { level: m, index: key.0 }, i).index, key.1)
        },
        |_, n, key, i| {
            (key.0, b_big.face(crate::simpset::SimplexId { level: n, index: key.1 }, i).index)
        },
        |_, n, key, i| {
            (key.0, b_big.degeneracy(crate::simpset::SimplexId { level: n, index: key.1 }, i).index)
        },
    );
    let set = Rc::new(set);
    let mut pairs: Vec<Vec<Vec<(usize, usize)>>> =
        (0..=h_bound).map(|m| (0..=v_bound).map(|n| vec![(0, 0); set.len(m, n)]).collect()).collect();
    for (m, per_m) in index.iter().enumerate() {
        for (n, cell) in per_m.iter().enumerate() {
            for (&pair, &i) in cell {
                pairs[m][n][i] = pair;
            }
        }
    }
    let map_components: Vec<Vec<Vec<usize>>> = pairs
        .iter()
        .enumerate()
        .map(|(m, per_m)| {
            per_m
                .iter()
                .enumerate()
                .map(|(n, cell)| {
                    cell.iter()
                        .map(|&(x, y)| {
                            target
                                .pair_id(
                                    crate::simpset::SimplexId { level: m, index: x },
                                    crate::simpset::SimplexId { level: n, index: y },
                                )
                                .index
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let map = BisimplicialMap::new(Rc::clone(&set), Rc::clone(target.set_rc()), map_components)?;
    let from_left_components: Vec<Vec<Vec<usize>>> = (0..=h_bound)
        .map(|m| {
            (0..=v_bound)
                .map(|n| {
                    left_box
                        .set()
                        .elements(m, n)
                        .map(|id| {
                            let (a, b) = left_box.pair_of(id);
                            index[m][n][&(u.apply(a).index, b.index)]
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let from_left =
        BisimplicialMap::new(Rc::clone(left_box.set_rc()), Rc::clone(&set), from_left_components)?;
    let from_right_components: Vec<Vec<Vec<usize>>> = (0..=h_bound)
        .map(|m| {
            (0..=v_bound)
                .map(|n| {
                    right_box
                        .set()
                        .elements(m, n)
                        .map(|id| {
                            let (a, b) = right_box.pair_of(id);
                            index[m][n][&(a.index, v.apply(b).index)]
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let from_right =
        BisimplicialMap::new(Rc::clone(right_box.set_rc()), Rc::clone(&set), from_right_components)?;
    Ok(PushoutProduct { set, map, target, left_box, right_box, from_left, from_right, index })
}
