//! Fixed-edge division spaces.
//!
//! For a subcomplex `A ⊆ Δᵐ` containing the edge `{0,1}` and an element
//! `e ∈ X_{1,0}`, the space `(A\X)^e` is the fibre of the restriction
//! `A\X → Δ^{0,1}\X` over the vertex picking out `e`: the simplices of
//! `A\X` whose member maps send the low edge to the vertically constant
//! copy of `e`.  These spaces assemble into the comparison map
//!
//! ```text
//! p_e : (Δᵐ\X)^e  →  (Δᵐ\Y)^{f(e)} ×_{(A\Y)^{f(e)}} (A\X)^e
//! ```
//!
//! whose behaviour on every fixed edge detects the corner-map condition
//! of the marked division calculus one edge at a time.

use std::rc::Rc;

use super::division::{under, Division};
use super::maps::BisimplicialMap;
use super::{BisimpError, BisimplexId, TruncatedBisimplicialSet};
use crate::simpset::{
    fiber_product, ExtractedSubcomplex, FiberProduct, SimplexId, SimplicialMap, StandardSimplex,
    Subcomplex,
};

/// The fibre `(A\X)^e` of a division over the constant diagram at an
/// edge, extracted as a standalone complex.
#[derive(Clone, Debug)]
pub struct FixedEdgeSpace {
    edge: BisimplexId,
    division: Division,
    members: Subcomplex,
    space: ExtractedSubcomplex,
}

impl FixedEdgeSpace {
    /// The fixed element of `X_{1,0}`.
    pub fn edge(&self) -> BisimplexId {
        self.edge
    }

    /// The ambient division `A\X`.
    pub fn division(&self) -> &Division {
        &self.division
    }

    /// The fibre as a subcomplex of the division.
    pub fn members(&self) -> &Subcomplex {
        &self.members
    }

    /// The fibre as a standalone complex.
    pub fn complex(&self) -> &Rc<crate::simpset::TruncatedSimplicialSet> {
        &self.space.complex
    }

    /// The inclusion of the fibre into the division complex.
    pub fn inclusion(&self) -> &SimplicialMap {
        &self.space.inclusion
    }

    /// Locate a division simplex inside the fibre.
    pub fn from_division(&self, id: SimplexId) -> Option<SimplexId> {
        self.space.from_ambient(id)
    }
}

/// The vertically constant copy of `e` at level `n`.
fn constant_edge(x: &TruncatedBisimplicialSet, e: BisimplexId, n: usize) -> BisimplexId {
    let mut out = e;
    for _ in 0..n {
        out = x.v_degen(out, 0);
    }
    out
}

/// Build `(A\X)^e` for a subcomplex `a` of the standard simplex `std`
/// that contains the edge `{0,1}`.
pub fn fixed_edge_space(
    std: &StandardSimplex,
    a: &Subcomplex,
    x: &Rc<TruncatedBisimplicialSet>,
    e: BisimplexId,
) -> Result<FixedEdgeSpace, BisimpError> {
    if **a.ambient() != **std.complex() {
        return Err(BisimpError::Precondition(
            "the subcomplex does not live in the given standard simplex".into(),
        ));
    }
    let low_edge = std.edge_id(0, 1);
    if !a.contains(low_edge) {
        return Err(BisimpError::MissingLowEdge);
    }
    if e.m != 1 || e.n != 0 || e.index >= x.len(1, 0) {
        return Err(BisimpError::Precondition(format!(
            "{e} is not an element of bidegree (1,0)"
        )));
    }
    let extracted = a.extract();
    let low_local = extracted
        .from_ambient(low_edge)
        .expect("the low edge is a member of the subcomplex");
    let division = under(&extracted.complex, x)?;
    let members = Subcomplex::from_predicate(division.complex_rc(), |id| {
        let image = division.member(id.level, id.index).components()[1][low_local.index];
        image.index == constant_edge(x, e, id.level).index
    })
    .map_err(|err| {
        BisimpError::Precondition(format!("the fixed-edge fibre is not closed: {err}"))
    })?;
    let space = members.extract();
    Ok(FixedEdgeSpace { edge: e, division, members, space })
}

/// The comparison map `p_e` of fixed-edge spaces induced by a
/// bisimplicial map `f: X → Y` and a subcomplex `A ⊆ Δᵐ`.
#[derive(Clone, Debug)]
pub struct FixedEdgeComparison {
    source: FixedEdgeSpace,
    near: FixedEdgeSpace,
    far: FixedEdgeSpace,
    base: FixedEdgeSpace,
    pullback: FiberProduct,
    map: SimplicialMap,
}

impl FixedEdgeComparison {
    /// The comparison map from `(Δᵐ\X)^e` into the pullback.
    pub fn map(&self) -> &SimplicialMap {
        &self.map
    }

    /// The pullback `(Δᵐ\Y)^{f(e)} ×_{(A\Y)^{f(e)}} (A\X)^e`.
    pub fn pullback(&self) -> &FiberProduct {
        &self.pullback
    }

    /// `(Δᵐ\X)^e`.
    pub fn source_space(&self) -> &FixedEdgeSpace {
        &self.source
    }

    /// `(A\X)^e`.
    pub fn near_space(&self) -> &FixedEdgeSpace {
        &self.near
    }

    /// `(Δᵐ\Y)^{f(e)}`.
    pub fn far_space(&self) -> &FixedEdgeSpace {
        &self.far
    }

    /// `(A\Y)^{f(e)}`.
    pub fn base_space(&self) -> &FixedEdgeSpace {
        &self.base
    }
}

/// Transport a map of division complexes to the extracted fixed-edge
/// fibres, given that it carries the source fibre into the target fibre.
fn transport(
    src: &FixedEdgeSpace,
    dst: &FixedEdgeSpace,
    ambient_map: &SimplicialMap,
) -> SimplicialMap {
    let components: Vec<Vec<SimplexId>> = (0..=src.complex().bound())
        .map(|level| {
            src.complex()
                .simplices(level)
                .map(|id| {
                    let in_division = src.inclusion().apply(id);
                    dst.from_division(ambient_map.apply(in_division))
                        .expect("the ambient map preserves the fixed edge")
                })
                .collect()
        })
        .collect();
    SimplicialMap::new(Rc::clone(src.complex()), Rc::clone(dst.complex()), components)
        .expect("a transported fixed-edge map is simplicial")
}

/// Restriction of fixed-edge spaces along the inclusion `A ⊆ Δᵐ`,
/// implemented by precomposing member maps with the inclusion.
fn restrict_fixed(
    full_space: &FixedEdgeSpace,
    sub_space: &FixedEdgeSpace,
    inclusion: &SimplicialMap,
) -> SimplicialMap {
    let ambient = super::division::restrict_along(
        full_space.division(),
        sub_space.division(),
        inclusion,
    );
    transport(full_space, sub_space, &ambient)
}

/// Pushforward of fixed-edge spaces along `f: X → Y`.
fn push_fixed(
    src_space: &FixedEdgeSpace,
    dst_space: &FixedEdgeSpace,
    f: &BisimplicialMap,
) -> SimplicialMap {
    let ambient = super::division::push_along(src_space.division(), dst_space.division(), f);
    transport(src_space, dst_space, &ambient)
}

/// Build the comparison map `p_e` for `f: X → Y`, the standard simplex
/// `std`, a subcomplex `a ⊆ std` containing the edge `{0,1}`, and a
/// fixed element `e ∈ X_{1,0}`.
pub fn fixed_edge_comparison(
    std: &StandardSimplex,
    a: &Subcomplex,
    f: &BisimplicialMap,
    e: BisimplexId,
) -> Result<FixedEdgeComparison, BisimpError> {
    let fe = f.apply(e);
    let full = Subcomplex::full(std.complex());
    let source = fixed_edge_space(std, &full, f.source_rc(), e)?;
    let near = fixed_edge_space(std, a, f.source_rc(), e)?;
    let far = fixed_edge_space(std, &full, f.target_rc(), fe)?;
    let base = fixed_edge_space(std, a, f.target_rc(), fe)?;
    let inclusion = &a.extract().inclusion;
    let far_to_base = restrict_fixed(&far, &base, inclusion);
    let near_to_base = push_fixed(&near, &base, f);
    let pullback = fiber_product(&far_to_base, &near_to_base)?;
    let to_far = push_fixed(&source, &far, f);
    let to_near = restrict_fixed(&source, &near, inclusion);
    let map = pullback.mediator(&to_far, &to_near)?;
    Ok(FixedEdgeComparison { source, near, far, base, pullback, map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bisimp::{box_product, BoxProduct};
    use crate::simpset::{char_map, standard_simplex, NamedSubcomplex, TruncatedSimplicialSet};

    fn delta(n: usize, bound: usize) -> Rc<TruncatedSimplicialSet> {
        Rc::new(standard_simplex(n, bound))
    }

    fn interval_box() -> (StandardSimplex, BoxProduct) {
        let std = StandardSimplex::new(1, 1);
        let x = box_product(std.complex(), &delta(1, 1));
        (std, x)
    }

    #[test]
    fn fixing_the_whole_interval_leaves_one_member_per_level() {
        // Every simplex of Δ¹ is a vertex or a degeneracy of the low
        // edge, so a fixed-edge member of Δ¹\X is fully determined.
        let (std, x) = interval_box();
        let e = x.pair_id(std.edge_id(0, 1), SimplexId { level: 0, index: 0 });
        let full = Subcomplex::full(std.complex());
        let space = fixed_edge_space(&std, &full, x.set_rc(), e).unwrap();
        for level in 0..=space.complex().bound() {
            assert_eq!(space.complex().level_len(level), 1, "level {level}");
        }
        space.complex().validate().unwrap();
    }

    #[test]
    fn a_subcomplex_without_the_low_edge_is_rejected() {
        let (std, x) = interval_box();
        let e = x.pair_id(std.edge_id(0, 1), SimplexId { level: 0, index: 0 });
        let vertices_only = Subcomplex::from_generators(
            std.complex(),
            &[std.vertex_id(0), std.vertex_id(1)],
        );
        let err = fixed_edge_space(&std, &vertices_only, x.set_rc(), e).unwrap_err();
        assert!(matches!(err, BisimpError::MissingLowEdge));
    }

    #[test]
    fn the_fixed_edge_space_is_the_strict_fiber_over_the_edge_vertex() {
        // Replay the defining pullback: (A\X)^e must agree with the
        // fibre product of A\X → Δ^{0,1}\X with the vertex at e.
        let std = StandardSimplex::new(2, 2);
        let x = box_product(std.complex(), &delta(1, 1));
        let e = x.pair_id(std.edge_id(0, 1), SimplexId { level: 0, index: 0 });
        let horn = crate::simpset::named_subcomplex_in(NamedSubcomplex::Horn(0), &std).unwrap();
        let space = fixed_edge_space(&std, &horn, x.set_rc(), e).unwrap();

        let horn_ex = horn.extract();
        let division = under(&horn_ex.complex, x.set_rc()).unwrap();
        let edge_sub = Subcomplex::from_generators(std.complex(), &[std.edge_id(0, 1)]);
        let edge_ex = edge_sub.extract();
        let edge_division = under(&edge_ex.complex, x.set_rc()).unwrap();
        // The inclusion Δ^{0,1} → A of extracted complexes.
        let edge_to_horn_components: Vec<Vec<SimplexId>> = (0..=edge_ex.complex.bound())
            .map(|level| {
                edge_ex
                    .complex
                    .simplices(level)
                    .map(|id| horn_ex.from_ambient(edge_ex.inclusion.apply(id)).unwrap())
                    .collect()
            })
            .collect();
        let edge_to_horn = SimplicialMap::new(
            Rc::clone(&edge_ex.complex),
            Rc::clone(&horn_ex.complex),
            edge_to_horn_components,
        )
        .unwrap();
        let restriction = super::super::division::restrict_along(
            &division,
            &edge_division,
            &edge_to_horn,
        );
        let local_edge = edge_ex.from_ambient(std.edge_id(0, 1)).unwrap();
        let target_index = (0..edge_division.complex().level_len(0))
            .find(|&i| {
                edge_division.member(0, i).components()[1][local_edge.index].index == e.index
            })
            .unwrap();
        let vertex = char_map(
            edge_division.complex_rc(),
            SimplexId { level: 0, index: target_index },
        );
        let strict = fiber_product(&restriction, &vertex).unwrap();
        for level in 0..=space.complex().bound() {
            assert_eq!(
                space.complex().level_len(level),
                strict.complex.level_len(level),
                "level {level}"
            );
        }
    }

    #[test]
    fn the_comparison_along_an_identity_is_bijective() {
        let std = StandardSimplex::new(2, 2);
        let x = box_product(std.complex(), &delta(1, 1));
        let f = BisimplicialMap::identity(x.set_rc());
        let e = x.pair_id(std.edge_id(0, 1), SimplexId { level: 0, index: 1 });
        let horn = crate::simpset::named_subcomplex_in(NamedSubcomplex::Horn(0), &std).unwrap();
        let comparison = fixed_edge_comparison(&std, &horn, &f, e).unwrap();
        assert!(comparison.map().is_injective());
        assert_eq!(
            comparison.map().source().total_len(),
            comparison.map().target().total_len()
        );
    }
}
