//! Individual span diagrams: functors out of interval posets, the
//! ambigressive-cartesianness test, faces/degeneracies, and composition.

use std::rc::Rc;

use crate::fincat::{poset_functor, FinCategory, FinFunctor, MorId, ObjId, Triple};
use crate::subdiv::{interval_category, IntervalPoset};
use crate::GLOBAL_CAP;

use super::SpanError;

/// A level-`n` span diagram: a functor from the interval poset of `[n]`.
///
/// Level 0 is an object, level 1 an ordinary span `x ↞ w ↣ x′`, and higher
/// levels are grids of spans.  Whether the diagram is *ambigressive
/// cartesian* with respect to a triple — every constituent square an
/// ambigressive pullback — is a property checked separately, so the type
/// also represents raw candidates during enumeration.
#[derive(Clone, Debug)]
pub struct SpanDiagram {
    poset: IntervalPoset,
    functor: FinFunctor,
}

impl SpanDiagram {
    /// Wrap a functor whose source is the interval poset category of some
    /// level; rejects any other source.
    pub fn new(functor: FinFunctor) -> Result<Self, SpanError> {
        let count = functor.source().object_count();
        let n = (0..=GLOBAL_CAP)
            .find(|&n| (n + 1) * (n + 2) / 2 == count)
            .ok_or(SpanError::NotASpanShape)?;
        let shape = interval_category(n)?;
        if functor.source() != shape.as_ref() {
            return Err(SpanError::NotASpanShape);
        }
        let poset = IntervalPoset::new(n)?;
        Ok(SpanDiagram { poset, functor })
    }

    /// The level-1 diagram `tgt(back) ↞ src ↣ tgt(fwd)`; the two legs must
    /// share their source.
    pub fn from_legs(
        cat: &Rc<FinCategory>,
        back: MorId,
        fwd: MorId,
    ) -> Result<Self, SpanError> {
        if cat.src(back) != cat.src(fwd) {
            return Err(SpanError::NotComposable);
        }
        let shape = interval_category(1)?;
        let poset = IntervalPoset::new(1)?;
        // Elements in lexicographic order: (0,0), (0,1), (1,1).
        let obj_map = vec![cat.tgt(back), cat.src(back), cat.tgt(fwd)];
        let mor_map = shape
            .morphisms()
            .map(|m| {
                let u = poset.element(shape.src(m).0);
                let v = poset.element(shape.tgt(m).0);
                if u == v {
                    cat.id(obj_map[shape.src(m).0])
                } else if v == (0, 0) {
                    back
                } else {
                    fwd
                }
            })
            .collect();
        let functor = FinFunctor::new(Rc::clone(&shape), Rc::clone(cat), obj_map, mor_map)?;
        Ok(SpanDiagram { poset, functor })
    }

    /// The diagram's level `n`.
    pub fn level(&self) -> usize {
        self.poset.n()
    }

    pub fn functor(&self) -> &FinFunctor {
        &self.functor
    }

    pub fn into_functor(self) -> FinFunctor {
        self.functor
    }

    /// The object at grid position `(i, j)`.
    pub fn object_at(&self, i: usize, j: usize) -> ObjId {
        let idx = self
            .poset
            .index_of((i, j))
            .expect("grid position within the diagram's level");
        self.functor.apply_obj(ObjId(idx))
    }

    /// The image of the unique shape arrow `from → to`; panics unless
    /// `from ≤ to` in the interval order.
    pub fn leg(&self, from: (usize, usize), to: (usize, usize)) -> MorId {
        let u = ObjId(self.poset.index_of(from).expect("interval in range"));
        let v = ObjId(self.poset.index_of(to).expect("interval in range"));
        self.functor.apply_mor(self.functor.source().hom(u, v)[0])
    }

    /// The backward (egressive) leg of a level-1 diagram.
    pub fn back_leg(&self) -> MorId {
        assert_eq!(self.level(), 1, "legs are defined for level-1 diagrams");
        self.leg((0, 1), (0, 0))
    }

    /// The forward (ingressive) leg of a level-1 diagram.
    pub fn fwd_leg(&self) -> MorId {
        assert_eq!(self.level(), 1, "legs are defined for level-1 diagrams");
        self.leg((0, 1), (1, 1))
    }

    /// Does every square of the diagram — including the degenerate ones
    /// with repeated rows or columns — form an ambigressive pullback?
    ///
    /// At level 0 there is a single degenerate square of identities, so the
    /// check is vacuously true; at level 1 it reduces to the backward leg
    /// being egressive and the forward leg ingressive.
    pub fn is_ambigressive_cartesian(&self, triple: &Triple) -> bool {
        functor_is_ambigressive_cartesian(&self.poset, &self.functor, triple)
    }

    /// The `i`-th face: precompose with the interval functor induced by the
    /// coface vertex map `[n−1] → [n]` skipping `i`.
    pub fn face(&self, i: usize) -> SpanDiagram {
        let n = self.level();
        assert!(n >= 1 && i <= n, "face index within range");
        let alpha: Vec<usize> = (0..n).map(|v| if v < i { v } else { v + 1 }).collect();
        let delta = induced_interval_functor(&alpha, n - 1, n);
        let functor = self
            .functor
            .compose(&delta)
            .expect("interval functors compose with diagrams");
        SpanDiagram::new(functor).expect("faces of span diagrams are span diagrams")
    }

    /// The `i`-th degeneracy: precompose with the interval functor induced
    /// by the codegeneracy vertex map `[n+1] → [n]` repeating `i`.
    pub fn degeneracy(&self, i: usize) -> SpanDiagram {
        let n = self.level();
        assert!(i <= n, "degeneracy index within range");
        assert!(n + 1 <= GLOBAL_CAP, "degeneracy stays within the cap");
        let alpha: Vec<usize> = (0..=n + 1).map(|v| if v <= i { v } else { v - 1 }).collect();
        let sigma = induced_interval_functor(&alpha, n + 1, n);
        let functor = self
            .functor
            .compose(&sigma)
            .expect("interval functors compose with diagrams");
        SpanDiagram::new(functor).expect("degeneracies of span diagrams are span diagrams")
    }
}

impl PartialEq for SpanDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.level() == other.level()
            && self.functor.obj_map() == other.functor.obj_map()
            && self.functor.mor_map() == other.functor.mor_map()
    }
}

impl Eq for SpanDiagram {}

/// The full ambigressive-cartesianness check on a bare functor, shared with
/// the level enumerator: quantifies over every quadruple `i ≤ i′ ≤ j′ ≤ j`
/// and tests the square with corners `(i,j)`, `(i,j′)`, `(i′,j)`, `(i′,j′)`.
pub(crate) fn functor_is_ambigressive_cartesian(
    poset: &IntervalPoset,
    functor: &FinFunctor,
    triple: &Triple,
) -> bool {
    let n = poset.n();
    let shape = functor.source();
    let arrow = |a: (usize, usize), b: (usize, usize)| -> MorId {
        let u = ObjId(poset.index_of(a).expect("interval in range"));
        let v = ObjId(poset.index_of(b).expect("interval in range"));
        functor.apply_mor(shape.hom(u, v)[0])
    };
    for i in 0..=n {
        for ip in i..=n {
            for jp in ip..=n {
                for j in jp..=n {
                    // Square with apex (i,j): bottom f and top q forwards
                    // (ingressive), left p and right g backwards (egressive).
                    let f = arrow((i, jp), (ip, jp));
                    let g = arrow((ip, j), (ip, jp));
                    let p = arrow((i, j), (i, jp));
                    let q = arrow((i, j), (ip, j));
                    if !triple.is_ambigressive_pullback(f, g, p, q) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The functor between interval poset categories induced by a monotone
/// vertex map `alpha: [src_n] → [dst_n]`, sending `(i, j) ↦ (α(i), α(j))`.
pub(crate) fn induced_interval_functor(
    alpha: &[usize],
    src_n: usize,
    dst_n: usize,
) -> FinFunctor {
    let src_cat = interval_category(src_n).expect("level within the cap");
    let dst_cat = interval_category(dst_n).expect("level within the cap");
    let src_poset = IntervalPoset::new(src_n).expect("level within the cap");
    let dst_poset = IntervalPoset::new(dst_n).expect("level within the cap");
    let obj_map = src_poset
        .elements()
        .iter()
        .map(|&(i, j)| {
            ObjId(
                dst_poset
                    .index_of((alpha[i], alpha[j]))
                    .expect("monotone maps send intervals to intervals"),
            )
        })
        .collect();
    poset_functor(&src_cat, &dst_cat, obj_map)
}

/// Compose two spans by the triple's chosen pullback, returning the full
/// 2-level diagram that witnesses the composition.  Its middle square is
/// the chosen pullback of the forward leg of `s1` against the backward leg
/// of `s2`, and its first face (`face(1)`) is the composite span.
pub fn compose_spans(
    triple: &Triple,
    s1: &SpanDiagram,
    s2: &SpanDiagram,
) -> Result<SpanDiagram, SpanError> {
    if s1.level() != 1 {
        return Err(SpanError::WrongLevel {
            expected: 1,
            got: s1.level(),
        });
    }
    if s2.level() != 1 {
        return Err(SpanError::WrongLevel {
            expected: 1,
            got: s2.level(),
        });
    }
    if s1.functor.target() != triple.cat() || s2.functor.target() != triple.cat() {
        return Err(SpanError::NotComposable);
    }
    if s1.object_at(1, 1) != s2.object_at(0, 0) {
        return Err(SpanError::NotComposable);
    }
    let w1 = s1.fwd_leg();
    let b2 = s2.back_leg();
    let sq = triple.pullback(w1, b2).ok_or(SpanError::MissingPullback)?;
    let cat = triple.cat();
    let compose = |g: MorId, f: MorId| cat.compose(g, f).expect("derived legs are composable");
    let shape = interval_category(2)?;
    let poset = IntervalPoset::new(2)?;
    let obj_at = |e: (usize, usize)| -> ObjId {
        match e {
            (0, 0) => s1.object_at(0, 0),
            (0, 1) => s1.object_at(0, 1),
            (1, 1) => s1.object_at(1, 1),
            (1, 2) => s2.object_at(0, 1),
            (2, 2) => s2.object_at(1, 1),
            (0, 2) => sq.apex,
            _ => unreachable!("not an interval of [2]"),
        }
    };
    let arrow_at = |u: (usize, usize), v: (usize, usize)| -> MorId {
        match (u, v) {
            ((0, 1), (0, 0)) => s1.back_leg(),
            ((0, 1), (1, 1)) => w1,
            ((1, 2), (1, 1)) => b2,
            ((1, 2), (2, 2)) => s2.fwd_leg(),
            ((0, 2), (0, 1)) => sq.to_f_source,
            ((0, 2), (1, 2)) => sq.to_g_source,
            ((0, 2), (0, 0)) => compose(s1.back_leg(), sq.to_f_source),
            ((0, 2), (1, 1)) => compose(w1, sq.to_f_source),
            ((0, 2), (2, 2)) => compose(s2.fwd_leg(), sq.to_g_source),
            _ => unreachable!("not a relation of the interval poset of [2]"),
        }
    };
    let obj_map: Vec<ObjId> = poset.elements().iter().map(|&e| obj_at(e)).collect();
    let mor_map: Vec<MorId> = shape
        .morphisms()
        .map(|m| {
            let u = poset.element(shape.src(m).0);
            let v = poset.element(shape.tgt(m).0);
            if u == v {
                cat.id(obj_at(u))
            } else {
                arrow_at(u, v)
            }
        })
        .collect();
    let functor = FinFunctor::new(
        Rc::clone(&shape),
        Rc::clone(triple.cat_rc()),
        obj_map,
        mor_map,
    )?;
    SpanDiagram::new(functor)
}
