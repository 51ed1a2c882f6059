//! Edgewise subdivision of standard simplices.
//!
//! The subdivision of `Δⁿ` is modelled on the poset of closed intervals
//! `[i, j] ⊆ [n]` ordered by *reverse* inclusion: `(i, j) ≤ (i′, j′)` exactly
//! when `i ≤ i′ ≤ j′ ≤ j`.  The nerve of that poset is the subdivided
//! simplex; a subcomplex `A ⊆ Δⁿ` subdivides to the union of the nerves of
//! the interval posets of its simplices.  Monotone vertex maps act
//! functorially by `(i, j) ↦ (α(i), α(j))`, and the long diagonal
//! `j ↦ (j, n)` embeds `Δⁿ` into its subdivision with retraction
//! `(i, j) ↦ i`.

use std::collections::{BTreeMap, BTreeSet};
use std::rc::Rc;

use thiserror::Error;

use crate::fincat::{
    chain_poset, nerve, nerve_map, poset_category, poset_functor, FinCategory, FinFunctor, Nerve,
    ObjId,
};
use crate::simpset::{SimplexId, SimplicialMap, StandardSimplex, Subcomplex};
use crate::GLOBAL_CAP;

/// Errors raised by the subdivision constructions.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SubdivError {
    /// The requested dimension lies beyond the global truncation cap.
    #[error("dimension {0} exceeds the global cap {GLOBAL_CAP}")]
    CapExceeded(usize),
    /// A vertex map had the wrong number of entries for its stated source.
    #[error("vertex map has {got} entries, expected {expected}")]
    BadArity { expected: usize, got: usize },
    /// A vertex map was not weakly monotone.
    #[error("vertex map {0:?} is not monotone")]
    NotMonotone(Vec<usize>),
    /// A vertex map hit a value outside the target range.
    #[error("vertex map value {value} exceeds target dimension {max}")]
    OutOfRange { value: usize, max: usize },
}

/// The poset of closed intervals of `[n]` under reverse inclusion.
///
/// Elements are pairs `(i, j)` with `0 ≤ i ≤ j ≤ n`, listed in lexicographic
/// order, and `(i, j) ≤ (i′, j′)` holds exactly when `[i′, j′] ⊆ [i, j]`.
/// The whole interval `(0, n)` is the bottom element.
#[derive(Debug, Clone)]
pub struct IntervalPoset {
    n: usize,
    elements: Vec<(usize, usize)>,
    index: BTreeMap<(usize, usize), usize>,
}

impl IntervalPoset {
    pub fn new(n: usize) -> Result<Self, SubdivError> {
        if n > GLOBAL_CAP {
            return Err(SubdivError::CapExceeded(n));
        }
        let mut elements = Vec::new();
        for i in 0..=n {
            for j in i..=n {
                elements.push((i, j));
            }
        }
        let index = elements
            .iter()
            .enumerate()
            .map(|(idx, &e)| (e, idx))
            .collect();
        Ok(IntervalPoset { n, elements, index })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> &[(usize, usize)] {
        &self.elements
    }

    pub fn element(&self, idx: usize) -> (usize, usize) {
        self.elements[idx]
    }

    pub fn index_of(&self, e: (usize, usize)) -> Option<usize> {
        self.index.get(&e).copied()
    }

    /// Reverse-inclusion order: `a ≤ b` when `b`'s interval sits inside `a`'s.
    pub fn leq(&self, a: (usize, usize), b: (usize, usize)) -> bool {
        a.0 <= b.0 && b.1 <= a.1
    }

    /// The bottom element `(0, n)`.
    pub fn bottom(&self) -> (usize, usize) {
        (0, self.n)
    }

    /// Cover relations, derived from the order: `a` is covered by `b` when
    /// `a < b` with nothing strictly between.  These are exactly the one-step
    /// shrinkings `(i, j) → (i, j−1)` and `(i, j) → (i+1, j)`.
    pub fn hasse_covers(&self) -> Vec<((usize, usize), (usize, usize))> {
        let mut covers = Vec::new();
        for &a in &self.elements {
            for &b in &self.elements {
                if a == b || !self.leq(a, b) {
                    continue;
                }
                let between = self
                    .elements
                    .iter()
                    .any(|&c| c != a && c != b && self.leq(a, c) && self.leq(c, b));
                if !between {
                    covers.push((a, b));
                }
            }
        }
        covers
    }
}

/// The interval poset of `[n]` as a finite category with objects named
/// `iv<i>_<j>`, in the element order of [`IntervalPoset`].
pub fn interval_category(n: usize) -> Result<Rc<FinCategory>, SubdivError> {
    let poset = IntervalPoset::new(n)?;
    let names: Vec<String> = poset
        .elements()
        .iter()
        .map(|&(i, j)| format!("iv{i}_{j}"))
        .collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    Ok(Rc::new(poset_category(&refs, |a, b| {
        poset.leq(poset.element(a), poset.element(b))
    })))
}

/// An interval poset together with its category and truncated nerve — the
/// ambient complex in which subdivisions live.
#[derive(Debug, Clone)]
pub struct IntervalNerve {
    poset: IntervalPoset,
    cat: Rc<FinCategory>,
    nerve: Nerve,
}

impl IntervalNerve {
    pub fn n(&self) -> usize {
        self.poset.n()
    }

    pub fn bound(&self) -> usize {
        self.nerve.bound()
    }

    pub fn poset(&self) -> &IntervalPoset {
        &self.poset
    }

    pub fn cat(&self) -> &Rc<FinCategory> {
        &self.cat
    }

    pub fn nerve(&self) -> &Nerve {
        &self.nerve
    }

    /// The interval labelling an object of the category.
    pub fn interval_of(&self, o: ObjId) -> (usize, usize) {
        self.poset.element(o.0)
    }

    /// The object labelled by an interval; panics if out of range.
    pub fn object_of(&self, i: usize, j: usize) -> ObjId {
        ObjId(
            self.poset
                .index_of((i, j))
                .expect("interval lies within the poset"),
        )
    }

    /// The vertex of the nerve at the given interval.
    pub fn vertex_id(&self, i: usize, j: usize) -> SimplexId {
        self.nerve.vertex_of(self.object_of(i, j))
    }

    /// The intervals visited by a simplex of the nerve, in chain order.
    pub fn intervals_of(&self, id: SimplexId) -> Vec<(usize, usize)> {
        let (start, arrows) = self.nerve.chain(id);
        let mut intervals = vec![self.interval_of(*start)];
        for &m in arrows {
            intervals.push(self.interval_of(self.cat.tgt(m)));
        }
        intervals
    }
}

/// Builds the interval poset of `[n]`, its category, and the nerve truncated
/// at `bound`.
pub fn interval_nerve(n: usize, bound: usize) -> Result<IntervalNerve, SubdivError> {
    if bound > GLOBAL_CAP {
        return Err(SubdivError::CapExceeded(bound));
    }
    let poset = IntervalPoset::new(n)?;
    let cat = interval_category(n)?;
    let nerve = nerve(&cat, bound);
    Ok(IntervalNerve { poset, cat, nerve })
}

fn validate_vertex_map(alpha: &[usize], src_n: usize, dst_n: usize) -> Result<(), SubdivError> {
    if alpha.len() != src_n + 1 {
        return Err(SubdivError::BadArity {
            expected: src_n + 1,
            got: alpha.len(),
        });
    }
    if let Some(&value) = alpha.iter().find(|&&v| v > dst_n) {
        return Err(SubdivError::OutOfRange { value, max: dst_n });
    }
    if alpha.windows(2).any(|w| w[0] > w[1]) {
        return Err(SubdivError::NotMonotone(alpha.to_vec()));
    }
    Ok(())
}

/// The functor between interval categories induced by a monotone vertex map
/// `α: [m] → [n]`, sending `(i, j)` to `(α(i), α(j))`.
pub fn interval_functor(
    alpha: &[usize],
    src: &IntervalNerve,
    dst: &IntervalNerve,
) -> Result<FinFunctor, SubdivError> {
    validate_vertex_map(alpha, src.n(), dst.n())?;
    let obj_map = src
        .poset()
        .elements()
        .iter()
        .map(|&(i, j)| dst.object_of(alpha[i], alpha[j]))
        .collect();
    Ok(poset_functor(src.cat(), dst.cat(), obj_map))
}

/// The simplicial map of subdivided simplices induced by a monotone vertex
/// map; the nerve of [`interval_functor`].
pub fn interval_simplicial_map(
    alpha: &[usize],
    src: &IntervalNerve,
    dst: &IntervalNerve,
) -> Result<SimplicialMap, SubdivError> {
    let functor = interval_functor(alpha, src, dst)?;
    Ok(nerve_map(&functor, src.nerve(), dst.nerve()))
}

/// Subdivides a subcomplex `a ⊆ Δⁿ`, producing the subcomplex of the interval
/// nerve whose chains factor through the interval poset of some simplex of
/// `a`; equivalently, chains all of whose endpoints lie in the vertex image
/// of a single simplex of `a`.  Subdividing all of `Δⁿ` yields the full
/// nerve.
pub fn subdivide(std: &StandardSimplex, a: &Subcomplex, target: &IntervalNerve) -> Subcomplex {
    assert!(
        Rc::ptr_eq(std.complex(), a.ambient()),
        "subcomplex must live in the given standard simplex"
    );
    assert_eq!(
        std.n(),
        target.n(),
        "interval nerve must match the simplex dimension"
    );
    let mut vertex_sets: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    for level in 0..=a.ambient().bound() {
        for id in a.level_members(level) {
            if !a.ambient().is_degenerate(id) {
                vertex_sets.insert(std.key_of(id).iter().map(|&v| v as usize).collect());
            }
        }
    }
    Subcomplex::from_predicate(target.nerve().complex_rc(), |id| {
        let intervals = target.intervals_of(id);
        vertex_sets
            .iter()
            .any(|set| intervals.iter().all(|(i, j)| set.contains(i) && set.contains(j)))
    })
    .expect("subdivisions are closed under faces and degeneracies")
}

/// The section `Δⁿ → sd(Δⁿ)` along the long diagonal `j ↦ (j, n)` together
/// with the retraction `sd(Δⁿ) → Δⁿ` taking `(i, j) ↦ i`; the retraction
/// composed with the section is the identity level-wise.
pub fn retraction_pair(
    std: &StandardSimplex,
    target: &IntervalNerve,
) -> (SimplicialMap, SimplicialMap) {
    let n = std.n();
    assert_eq!(n, target.n(), "interval nerve must match the simplex");
    assert_eq!(
        std.complex().bound(),
        target.bound(),
        "section and retraction need matching truncation bounds"
    );
    let cat = target.cat();

    let section_components: Vec<Vec<SimplexId>> = (0..=std.complex().bound())
        .map(|level| {
            std.complex()
                .simplices(level)
                .map(|id| {
                    let key = std.key_of(id);
                    let objs: Vec<ObjId> = key
                        .iter()
                        .map(|&v| target.object_of(v as usize, n))
                        .collect();
                    let arrows = objs
                        .windows(2)
                        .map(|w| {
                            let hom = cat.hom(w[0], w[1]);
                            debug_assert_eq!(hom.len(), 1);
                            hom[0]
                        })
                        .collect();
                    target
                        .nerve()
                        .chain_id(&(objs[0], arrows))
                        .expect("diagonal chains exist in the interval nerve")
                })
                .collect()
        })
        .collect();
    let section = SimplicialMap::new(
        Rc::clone(std.complex()),
        Rc::clone(target.nerve().complex_rc()),
        section_components,
    )
    .expect("the long diagonal is simplicial");

    let retraction_components: Vec<Vec<SimplexId>> = (0..=target.bound())
        .map(|level| {
            target
                .nerve()
                .complex()
                .simplices(level)
                .map(|id| {
                    let key: Vec<u8> = target
                        .intervals_of(id)
                        .iter()
                        .map(|&(i, _)| i as u8)
                        .collect();
                    std.id_of(&key)
                })
                .collect()
        })
        .collect();
    let retraction = SimplicialMap::new(
        Rc::clone(target.nerve().complex_rc()),
        Rc::clone(std.complex()),
        retraction_components,
    )
    .expect("left endpoints are simplicial");

    (section, retraction)
}

/// The section/retraction pair at the level of poset functors for the
/// backward convention: `i: [n] → Σ`, `j ↦ (j, n)` and `r: Σ → [n]`,
/// `(i, j) ↦ i`, with `r ∘ i = id`.
pub fn backward_retraction_functors(n: usize) -> Result<(FinFunctor, FinFunctor), SubdivError> {
    let poset = IntervalPoset::new(n)?;
    let chain = Rc::new(chain_poset(n));
    let intervals = interval_category(n)?;
    let section_objs = (0..=n)
        .map(|j| ObjId(poset.index_of((j, n)).expect("diagonal interval")))
        .collect();
    let section = poset_functor(&chain, &intervals, section_objs);
    let retraction_objs = poset.elements().iter().map(|&(i, _)| ObjId(i)).collect();
    let retraction = poset_functor(&intervals, &chain, retraction_objs);
    Ok((section, retraction))
}

/// The forward variant: `i′: [n]ᵒᵖ → Σ`, `j ↦ (0, j)` and `r′: Σ → [n]ᵒᵖ`,
/// `(i, j) ↦ j`, again with `r′ ∘ i′ = id`.
pub fn forward_retraction_functors(n: usize) -> Result<(FinFunctor, FinFunctor), SubdivError> {
    let poset = IntervalPoset::new(n)?;
    let chain_op = Rc::new(chain_poset(n).opposite());
    let intervals = interval_category(n)?;
    let section_objs = (0..=n)
        .map(|j| ObjId(poset.index_of((0, j)).expect("initial interval")))
        .collect();
    let section = poset_functor(&chain_op, &intervals, section_objs);
    let retraction_objs = poset.elements().iter().map(|&(_, j)| ObjId(j)).collect();
    let retraction = poset_functor(&intervals, &chain_op, retraction_objs);
    Ok((section, retraction))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simpset::{named_subcomplex_in, NamedSubcomplex};

    #[test]
    fn interval_counts_match_the_closed_formula() {
        for n in 0..=GLOBAL_CAP {
            let poset = IntervalPoset::new(n).unwrap();
            assert_eq!(poset.len(), (n + 1) * (n + 2) / 2);
        }
        assert!(matches!(
            IntervalPoset::new(GLOBAL_CAP + 1),
            Err(SubdivError::CapExceeded(_))
        ));
    }

    #[test]
    fn interval_poset_of_the_point_and_the_arrow() {
        let p0 = IntervalPoset::new(0).unwrap();
        assert_eq!(p0.elements(), &[(0, 0)]);

        let p1 = IntervalPoset::new(1).unwrap();
        assert_eq!(p1.elements(), &[(0, 0), (0, 1), (1, 1)]);
        assert!(p1.leq((0, 1), (0, 0)));
        assert!(p1.leq((0, 1), (1, 1)));
        assert!(!p1.leq((0, 0), (1, 1)));
        assert!(!p1.leq((1, 1), (0, 0)));
        assert!(!p1.leq((0, 0), (0, 1)));
        assert_eq!(p1.bottom(), (0, 1));
    }

    #[test]
    fn hasse_covers_are_the_one_step_shrinkings() {
        let poset = IntervalPoset::new(4).unwrap();
        assert_eq!(poset.len(), 15);
        let mut expected = BTreeSet::new();
        for i in 0..=4usize {
            for j in (i + 1)..=4 {
                expected.insert(((i, j), (i, j - 1)));
                expected.insert(((i, j), (i + 1, j)));
            }
        }
        let covers: BTreeSet<_> = poset.hasse_covers().into_iter().collect();
        assert_eq!(covers.len(), 20);
        assert_eq!(covers, expected);
    }

    #[test]
    fn induced_functors_act_on_interval_endpoints() {
        let one = interval_nerve(1, 2).unwrap();
        let two = interval_nerve(2, 2).unwrap();
        let zero = interval_nerve(0, 2).unwrap();

        let d1 = interval_functor(&[0, 2], &one, &two).unwrap();
        assert_eq!(d1.apply_obj(one.object_of(0, 1)), two.object_of(0, 2));
        assert_eq!(d1.apply_obj(one.object_of(0, 0)), two.object_of(0, 0));
        assert_eq!(d1.apply_obj(one.object_of(1, 1)), two.object_of(2, 2));

        let s0 = interval_functor(&[0, 0], &one, &zero).unwrap();
        for o in one.cat().objects() {
            assert_eq!(s0.apply_obj(o), zero.object_of(0, 0));
        }

        let id = interval_functor(&[0, 1], &one, &one).unwrap();
        assert_eq!(id, FinFunctor::identity(one.cat()));

        assert_eq!(
            interval_functor(&[1, 0], &one, &one),
            Err(SubdivError::NotMonotone(vec![1, 0]))
        );
        assert_eq!(
            interval_functor(&[0, 3], &one, &two),
            Err(SubdivError::OutOfRange { value: 3, max: 2 })
        );
    }

    /// Monotone maps `[m] → [n]` for small dimensions, as vertex vectors.
    fn monotone_vertex_maps(m: usize, n: usize) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..=m {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    let lo = prefix.last().copied().unwrap_or(0);
                    (lo..=n).map(move |v| {
                        let mut next = prefix.clone();
                        next.push(v);
                        next
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn induced_functors_compose() {
        let nerves: Vec<IntervalNerve> =
            (0..=4).map(|n| interval_nerve(n, 1).unwrap()).collect();
        for m in 0..=2usize {
            for n in 0..=3usize {
                for p in 0..=4usize {
                    for alpha in monotone_vertex_maps(m, n) {
                        for beta in monotone_vertex_maps(n, p) {
                            let composite: Vec<usize> =
                                alpha.iter().map(|&i| beta[i]).collect();
                            let lhs =
                                interval_functor(&composite, &nerves[m], &nerves[p]).unwrap();
                            let f = interval_functor(&alpha, &nerves[m], &nerves[n]).unwrap();
                            let g = interval_functor(&beta, &nerves[n], &nerves[p]).unwrap();
                            assert_eq!(lhs, g.compose(&f).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn subdividing_the_whole_simplex_gives_the_full_nerve() {
        for n in 0..=3usize {
            let bound = 3;
            let std = StandardSimplex::new(n, bound);
            let target = interval_nerve(n, bound).unwrap();
            let sd = subdivide(&std, &Subcomplex::full(std.complex()), &target);
            let full = Subcomplex::full(target.nerve().complex_rc());
            assert!(sd.is_subset_of(&full).unwrap() && full.is_subset_of(&sd).unwrap());
        }
    }

    #[test]
    fn subdivided_interval_has_three_vertices_and_two_edges() {
        let std = StandardSimplex::new(1, 2);
        let target = interval_nerve(1, 2).unwrap();
        let sd = subdivide(&std, &Subcomplex::full(std.complex()), &target);
        assert_eq!(sd.level_members(0).count(), 3);
        let nondeg_edges = sd
            .level_members(1)
            .filter(|&id| !target.nerve().complex().is_degenerate(id))
            .count();
        assert_eq!(nondeg_edges, 2);
    }

    #[test]
    fn subdividing_the_initial_horn_of_the_triangle() {
        let std = StandardSimplex::new(2, 2);
        let target = interval_nerve(2, 2).unwrap();
        let horn = named_subcomplex_in(NamedSubcomplex::Horn(0), &std).unwrap();
        let sd = subdivide(&std, &horn, &target);
        let vertices: BTreeSet<(usize, usize)> = sd
            .level_members(0)
            .map(|id| target.intervals_of(id)[0])
            .collect();
        let expected: BTreeSet<(usize, usize)> =
            [(0, 0), (0, 1), (1, 1), (0, 2), (2, 2)].into_iter().collect();
        assert_eq!(vertices, expected);
    }

    #[test]
    fn subdivision_preserves_inclusions_of_named_subcomplexes() {
        for n in [3usize, 4] {
            let std = StandardSimplex::new(n, n);
            let target = interval_nerve(n, n).unwrap();
            let mut subs = vec![Subcomplex::full(std.complex())];
            subs.push(named_subcomplex_in(NamedSubcomplex::Boundary, &std).unwrap());
            subs.push(named_subcomplex_in(NamedSubcomplex::Spine, &std).unwrap());
            subs.push(named_subcomplex_in(NamedSubcomplex::LeftSpine, &std).unwrap());
            for k in 0..=n {
                subs.push(named_subcomplex_in(NamedSubcomplex::Horn(k), &std).unwrap());
            }
            let images: Vec<Subcomplex> =
                subs.iter().map(|a| subdivide(&std, a, &target)).collect();
            let mut compared = 0;
            for (a, sd_a) in subs.iter().zip(&images) {
                for (b, sd_b) in subs.iter().zip(&images) {
                    if a.is_subset_of(b).unwrap() {
                        compared += 1;
                        assert!(sd_a.is_subset_of(sd_b).unwrap());
                    }
                }
            }
            assert!(compared > subs.len(), "some proper inclusions were checked");
        }
    }

    #[test]
    fn subdividing_a_horn_matches_the_union_over_its_faces() {
        use crate::simpset::face_subcomplex;
        for n in [2usize, 3] {
            let std = StandardSimplex::new(n, n);
            let target = interval_nerve(n, n).unwrap();
            for k in 0..=n {
                let horn = named_subcomplex_in(NamedSubcomplex::Horn(k), &std).unwrap();
                let sd_horn = subdivide(&std, &horn, &target);
                let mut union = Subcomplex::empty(target.nerve().complex_rc());
                for i in 0..=n {
                    if i != k {
                        let face = face_subcomplex(&std, i as u8);
                        union = union.union(&subdivide(&std, &face, &target)).unwrap();
                    }
                }
                assert!(sd_horn.is_subset_of(&union).unwrap());
                assert!(union.is_subset_of(&sd_horn).unwrap());
            }
        }
    }

    #[test]
    fn retraction_composed_with_section_is_the_identity() {
        for n in 0..=4usize {
            let std = StandardSimplex::new(n, n.max(1));
            let target = interval_nerve(n, n.max(1)).unwrap();
            let (section, retraction) = retraction_pair(&std, &target);
            let roundtrip = retraction.compose(&section).unwrap();
            let identity = SimplicialMap::identity(std.complex());
            assert_eq!(roundtrip.components(), identity.components());
        }
    }

    #[test]
    fn retraction_pair_hits_the_expected_vertices() {
        let std = StandardSimplex::new(2, 2);
        let target = interval_nerve(2, 2).unwrap();
        let (section, retraction) = retraction_pair(&std, &target);
        assert_eq!(section.apply(std.vertex_id(1)), target.vertex_id(1, 2));
        assert_eq!(retraction.apply(target.vertex_id(0, 1)), std.vertex_id(0));
    }

    #[test]
    fn functor_level_retractions_are_identities() {
        for n in 0..=3usize {
            let (i, r) = backward_retraction_functors(n).unwrap();
            let roundtrip = r.compose(&i).unwrap();
            assert_eq!(roundtrip, FinFunctor::identity(i.source_rc()));

            let (i_fwd, r_fwd) = forward_retraction_functors(n).unwrap();
            let roundtrip = r_fwd.compose(&i_fwd).unwrap();
            assert_eq!(roundtrip, FinFunctor::identity(i_fwd.source_rc()));
        }
    }

    #[test]
    fn subdivided_maps_agree_with_nerve_maps_on_a_face() {
        let one = interval_nerve(1, 2).unwrap();
        let two = interval_nerve(2, 2).unwrap();
        let map = interval_simplicial_map(&[0, 2], &one, &two).unwrap();
        assert_eq!(map.apply(one.vertex_id(0, 1)), two.vertex_id(0, 2));
        assert!(map.is_injective());
    }
}
