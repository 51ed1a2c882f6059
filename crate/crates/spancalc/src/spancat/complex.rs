//! The truncated simplicial set of span diagrams — the quasicategory-style
//! model — together with the simplicial maps induced by triple functors.

use std::collections::BTreeMap;
use std::rc::Rc;

use crate::fincat::{FinFunctor, MorId, ObjId, Triple, TripleFunctor, is_adequate};
use crate::simpset::{SimplexId, SimplicialMap, TruncatedSimplicialSet, assemble_complex};
use crate::subdiv::IntervalPoset;

use super::diagram::{functor_is_ambigressive_cartesian, induced_interval_functor};
use super::enumerate::{PartialDiagram, PosetShape, enumerate_poset_functors};
use super::{SpanDiagram, SpanError};

/// The identifying key of a span diagram inside a level: its object and
/// morphism images in shape order.
pub type DiagramKey = (Vec<ObjId>, Vec<MorId>);

/// The truncated simplicial set whose `n`-simplices are the ambigressive
/// cartesian diagrams of level `n` in an adequate triple.  Faces and
/// degeneracies precompose with the induced interval functors.
#[derive(Debug)]
pub struct SpanComplex {
    triple: Triple,
    bound: usize,
    posets: Vec<IntervalPoset>,
    levels: Vec<Vec<FinFunctor>>,
    index: Vec<BTreeMap<DiagramKey, usize>>,
    complex: Rc<TruncatedSimplicialSet>,
}

/// Reject triples that fail adequacy, with the report's description.
pub(crate) fn check_adequate(triple: &Triple) -> Result<(), SpanError> {
    let report = is_adequate(triple);
    if report.holds() {
        Ok(())
    } else {
        Err(SpanError::InadequateTriple(report.describe(triple.cat())))
    }
}

/// Enumerate the ambigressive cartesian diagrams of one level, in canonical
/// order.  Uses cover-square pruning during the search and the full
/// quantified check as the final filter.
pub(crate) fn enumerate_acart_level(
    triple: &Triple,
    n: usize,
) -> Result<Vec<FinFunctor>, SpanError> {
    let poset = IntervalPoset::new(n)?;
    let shape = PosetShape::new(crate::subdiv::interval_category(n)?);
    let prune = |partial: &PartialDiagram, e: usize| -> bool {
        cover_prune(&poset, triple, partial, e)
    };
    let candidates = enumerate_poset_functors(&shape, triple.cat_rc(), prune);
    Ok(candidates
        .into_iter()
        .filter(|f| functor_is_ambigressive_cartesian(&poset, f, triple))
        .collect())
}

/// Early pruning at element `(i, j)`: the fresh backward cover must be
/// egressive, the fresh forward cover ingressive, and the fresh cover
/// square an ambigressive pullback.  Sound because the classes are closed
/// under composition; completeness is restored by the final full check.
fn cover_prune(
    poset: &IntervalPoset,
    triple: &Triple,
    partial: &PartialDiagram,
    e: usize,
) -> bool {
    let (i, j) = poset.element(e);
    let backward = (j + 1 <= poset.n()).then(|| poset.index_of((i, j + 1)).unwrap());
    let forward = (i >= 1).then(|| poset.index_of((i - 1, j)).unwrap());
    if let Some(s) = backward {
        if !triple.is_egressive(partial.arrow(s, e).unwrap()) {
            return false;
        }
    }
    if let Some(s) = forward {
        if !triple.is_ingressive(partial.arrow(s, e).unwrap()) {
            return false;
        }
    }
    if let (Some(xp), Some(y)) = (backward, forward) {
        let w = poset.index_of((i - 1, j + 1)).unwrap();
        let f = partial.arrow(y, e).unwrap();
        let g = partial.arrow(xp, e).unwrap();
        let p = partial.arrow(w, y).unwrap();
        let q = partial.arrow(w, xp).unwrap();
        if !triple.is_ambigressive_pullback(f, g, p, q) {
            return false;
        }
    }
    true
}

pub(crate) fn key_of(f: &FinFunctor) -> DiagramKey {
    (f.obj_map().to_vec(), f.mor_map().to_vec())
}

/// Transform a level-`m` key along an interval functor `Σ_k → Σ_m`
/// (a coface for `k = m − 1`, a codegeneracy for `k = m + 1`).
pub(crate) fn reindex_key(key: &DiagramKey, along: &FinFunctor) -> DiagramKey {
    let objs = along
        .obj_map()
        .iter()
        .map(|&o| key.0[o.0])
        .collect();
    let mors = along
        .mor_map()
        .iter()
        .map(|&m| key.1[m.0])
        .collect();
    (objs, mors)
}

/// The coface interval functors `δ_i: Σ_{m−1} → Σ_m` for `1 ≤ m ≤ bound`.
pub(crate) fn coface_functors(bound: usize) -> Vec<Vec<FinFunctor>> {
    (0..=bound)
        .map(|m| {
            if m == 0 {
                Vec::new()
            } else {
                (0..=m)
                    .map(|i| {
                        let alpha: Vec<usize> =
                            (0..m).map(|v| if v < i { v } else { v + 1 }).collect();
                        induced_interval_functor(&alpha, m - 1, m)
                    })
                    .collect()
            }
        })
        .collect()
}

/// The codegeneracy interval functors `σ_i: Σ_{m+1} → Σ_m` for `m < bound`.
pub(crate) fn codegeneracy_functors(bound: usize) -> Vec<Vec<FinFunctor>> {
    (0..=bound)
        .map(|m| {
            if m == bound {
                Vec::new()
            } else {
                (0..=m)
                    .map(|i| {
                        let alpha: Vec<usize> =
                            (0..=m + 1).map(|v| if v <= i { v } else { v - 1 }).collect();
                        induced_interval_functor(&alpha, m + 1, m)
                    })
                    .collect()
            }
        })
        .collect()
}

impl SpanComplex {
    /// Build the span complex of an adequate triple up to the bound.
    pub fn new(triple: Triple, bound: usize) -> Result<Self, SpanError> {
        check_adequate(&triple)?;
        let mut posets = Vec::with_capacity(bound + 1);
        let mut levels = Vec::with_capacity(bound + 1);
        for m in 0..=bound {
            posets.push(IntervalPoset::new(m)?);
            levels.push(enumerate_acart_level(&triple, m)?);
        }
        let cofaces = coface_functors(bound);
        let codegens = codegeneracy_functors(bound);
        let key_levels: Vec<Vec<DiagramKey>> = levels
            .iter()
            .map(|fs| fs.iter().map(key_of).collect())
            .collect();
        let (complex, index) = assemble_complex(
            bound,
            key_levels,
            |m, key, i| reindex_key(key, &cofaces[m][i]),
            |m, key, i| reindex_key(key, &codegens[m][i]),
        );
        Ok(SpanComplex {
            triple,
            bound,
            posets,
            levels,
            index,
            complex: Rc::new(complex),
        })
    }

    pub fn triple(&self) -> &Triple {
        &self.triple
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn complex(&self) -> &TruncatedSimplicialSet {
        &self.complex
    }

    pub fn complex_rc(&self) -> &Rc<TruncatedSimplicialSet> {
        &self.complex
    }

    /// The diagrams of one level, in the canonical enumeration order that
    /// matches the simplex indices of [`complex`](Self::complex).
    pub fn level(&self, m: usize) -> &[FinFunctor] {
        &self.levels[m]
    }

    /// The span diagram behind a simplex id.
    pub fn diagram(&self, id: SimplexId) -> SpanDiagram {
        SpanDiagram::new(self.levels[id.level][id.index].clone())
            .expect("stored levels hold span diagrams")
    }

    /// Look up the simplex id of a diagram given as a functor.
    pub fn find(&self, functor: &FinFunctor) -> Option<SimplexId> {
        let count = functor.source().object_count();
        let m = (0..=self.bound).find(|&m| self.posets[m].len() == count)?;
        self.index[m]
            .get(&key_of(functor))
            .map(|&index| SimplexId { level: m, index })
    }

    /// The vertex carrying an object of the triple's category.
    pub fn vertex(&self, o: ObjId) -> SimplexId {
        let functor = &self.levels[0];
        let index = functor
            .iter()
            .position(|f| f.obj_map()[0] == o)
            .expect("every object is a level-0 diagram");
        SimplexId { level: 0, index }
    }

    /// The edge carrying the span with the given legs, if it is a member.
    pub fn span_edge(&self, back: MorId, fwd: MorId) -> Option<SimplexId> {
        let diagram = SpanDiagram::from_legs(self.triple.cat_rc(), back, fwd).ok()?;
        self.find(diagram.functor())
    }

    /// The two legs of an edge: `(backward, forward)`.
    pub fn edge_legs(&self, id: SimplexId) -> (MorId, MorId) {
        assert_eq!(id.level, 1, "legs are defined for edges");
        let d = self.diagram(id);
        (d.back_leg(), d.fwd_leg())
    }
}

/// The simplicial map between span complexes induced by a functor of
/// adequate triples, sending a diagram to its post-composition.
///
/// The triple functor's own validation has already checked that classes and
/// ambigressive pullbacks are preserved, so every image diagram is again a
/// member; the simplicial-map constructor re-verifies naturality of the
/// assignment.
pub fn span_map(
    p: &TripleFunctor,
    source: &SpanComplex,
    target: &SpanComplex,
) -> Result<SimplicialMap, SpanError> {
    assert_eq!(
        source.bound(),
        target.bound(),
        "span complexes must share their truncation bound"
    );
    let mut components = Vec::with_capacity(source.bound() + 1);
    for m in 0..=source.bound() {
        let mut level = Vec::with_capacity(source.level(m).len());
        for f in source.level(m) {
            let image = p
                .functor()
                .compose(f)
                .expect("triple functors compose with diagrams");
            let id = target.find(&image).unwrap_or_else(|| {
                panic!("triple functors carry members to members (level {m})")
            });
            level.push(id);
        }
        components.push(level);
    }
    SimplicialMap::new(
        Rc::clone(source.complex_rc()),
        Rc::clone(target.complex_rc()),
        components,
    )
    .map_err(|e| panic!("induced maps are simplicial: {e}"))
}
