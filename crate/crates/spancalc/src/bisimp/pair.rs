//! Corner maps of the division adjunctions and the Reedy-fibration
//! decider.
//!
//! Given an argument map `u: A → A′` and a bisimplicial map `f: X → Y`,
//! the divisions fit into a square whose induced comparison
//!
//! ```text
//! ⟨u\f⟩ : A′\X  →  A\X ×_{A\Y} A′\Y
//! ```
//!
//! is the *under corner map*; dually `⟨f/v⟩ : X/B′ → X/B ×_{Y/B} Y/B′`
//! for `v: B → B′`.  A bisimplicial map is a Reedy fibration when every
//! corner map against a boundary inclusion has the right lifting property
//! against all horns; [`reedy_counterexample`] searches for a failure of
//! that property within the truncation.

use std::rc::Rc;

use super::division::{over, push_along, restrict_along, under, under_marked, Division};
use super::marking::{MarkedBisimplicialMap, MarkedSimplicialMap};
use super::maps::BisimplicialMap;
use super::BisimpError;
use crate::simpset::{
    fiber_product, named_subcomplex, rlp_counterexample, FiberProduct, GeneratorFamily,
    NamedSubcomplex, RlpCounterexample, SimplicialMap,
};

/// A corner map `⟨u\f⟩` or `⟨f/v⟩` together with the divisions and the
/// fibre product it compares against.
#[derive(Clone, Debug)]
pub struct PairMap {
    source: Division,
    near: Division,
    far: Division,
    base: Division,
    pullback: FiberProduct,
    map: SimplicialMap,
}

impl PairMap {
    /// The comparison map from the source division into the pullback.
    pub fn map(&self) -> &SimplicialMap {
        &self.map
    }

    /// The pullback of the two outer division maps.
    pub fn pullback(&self) -> &FiberProduct {
        &self.pullback
    }

    /// The division the corner map starts from (`A′\X` or `X/B′`).
    pub fn source_division(&self) -> &Division {
        &self.source
    }

    /// The division restricted to (`A\X` or `X/B`).
    pub fn near_division(&self) -> &Division {
        &self.near
    }

    /// The division pushed to (`A′\Y` or `Y/B′`).
    pub fn far_division(&self) -> &Division {
        &self.far
    }

    /// The division both outer maps land in (`A\Y` or `Y/B`).
    pub fn base_division(&self) -> &Division {
        &self.base
    }
}

fn assemble_pair(
    source: Division,
    near: Division,
    far: Division,
    base: Division,
    f: &BisimplicialMap,
    argument_map: &SimplicialMap,
) -> Result<PairMap, BisimpError> {
    let to_base_near = push_along(&near, &base, f);
    let to_base_far = restrict_along(&far, &base, argument_map);
    let pullback = fiber_product(&to_base_near, &to_base_far)?;
    let q_near = restrict_along(&source, &near, argument_map);
    let q_far = push_along(&source, &far, f);
    let map = pullback.mediator(&q_near, &q_far)?;
    Ok(PairMap { source, near, far, base, pullback, map })
}

/// The under corner map `⟨u\f⟩ : A′\X → A\X ×_{A\Y} A′\Y`.
pub fn pair_under(u: &SimplicialMap, f: &BisimplicialMap) -> Result<PairMap, BisimpError> {
    let source = under(u.target_rc(), f.source_rc())?;
    let near = under(u.source_rc(), f.source_rc())?;
    let far = under(u.target_rc(), f.target_rc())?;
    let base = under(u.source_rc(), f.target_rc())?;
    assemble_pair(source, near, far, base, f, u)
}

/// The marked under corner map: all four divisions are marked divisions,
/// so only members compatible with the markings of the arguments and of
/// the (bi)simplicial sets participate.
pub fn pair_under_marked(
    u: &MarkedSimplicialMap,
    f: &MarkedBisimplicialMap,
) -> Result<PairMap, BisimpError> {
    let source = under_marked(u.target(), f.source())?;
    let near = under_marked(u.source(), f.source())?;
    let far = under_marked(u.target(), f.target())?;
    let base = under_marked(u.source(), f.target())?;
    assemble_pair(source, near, far, base, f.map(), u.map())
}

/// The over corner map `⟨f/v⟩ : X/B′ → X/B ×_{Y/B} Y/B′`.
pub fn pair_over(f: &BisimplicialMap, v: &SimplicialMap) -> Result<PairMap, BisimpError> {
    let source = over(f.source_rc(), v.target_rc())?;
    let near = over(f.source_rc(), v.source_rc())?;
    let far = over(f.target_rc(), v.target_rc())?;
    let base = over(f.target_rc(), v.source_rc())?;
    assemble_pair(source, near, far, base, f, v)
}

/// A witness that a bisimplicial map is not a Reedy fibration: the corner
/// map against the boundary inclusion `∂Δᵐ ↪ Δᵐ` fails a horn lifting.
#[derive(Clone, Debug)]
pub struct ReedyCounterexample {
    /// The dimension `m` of the boundary inclusion.
    pub boundary_dim: usize,
    /// The corner map that fails to be a Kan fibration.
    pub corner: SimplicialMap,
    /// The unfillable horn square against the corner map.
    pub horn: RlpCounterexample,
}

/// Search for a failure of the Reedy fibration property of `f` within the
/// truncation: for each boundary inclusion `∂Δᵐ ↪ Δᵐ` with
/// `m ≤ min(up_to, h_bound)`, the corner map `⟨∂Δᵐ\f⟩` must have the
/// right lifting property against all horns up to the vertical bound.
pub fn reedy_counterexample(
    f: &BisimplicialMap,
    up_to: usize,
) -> Result<Option<ReedyCounterexample>, BisimpError> {
    let h_bound = f.source().h_bound();
    let v_bound = f.source().v_bound();
    for m in 0..=up_to.min(h_bound) {
        let boundary = named_subcomplex(NamedSubcomplex::Boundary, m, h_bound)?.extract();
        let corner = pair_under(&boundary.inclusion, f)?;
        if let Some(horn) =
            rlp_counterexample(corner.map(), GeneratorFamily::Horns, v_bound)?
        {
            return Ok(Some(ReedyCounterexample {
                boundary_dim: m,
                corner: corner.map().clone(),
                horn,
            }));
        }
    }
    Ok(None)
}

/// Decide whether `f` is a Reedy fibration within the truncation.
pub fn is_reedy_fibration(f: &BisimplicialMap, up_to: usize) -> Result<bool, BisimpError> {
    Ok(reedy_counterexample(f, up_to)?.is_none())
}

/// Check that `f` is a Reedy fibration and return an error naming the
/// failing corner otherwise.  Convenience for preconditions.
pub(crate) fn require_reedy(f: &BisimplicialMap, up_to: usize) -> Result<(), BisimpError> {
    match reedy_counterexample(f, up_to)? {
        None => Ok(()),
        Some(witness) => Err(BisimpError::Precondition(format!(
            "the map is not a Reedy fibration: the corner against the boundary of \
             dimension {} fails a {}-horn lifting",
            witness.boundary_dim, witness.horn.n
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bisimp::{
        box_map, box_product, enumerate_bisimplicial_maps, pushout_product,
        solve_bisimplicial_lifting, terminal_map, BisimplicialLiftingSquare,
        MarkedBisimplicialSet, MarkedSimplicialSet,
    };
    use crate::fincat::{nerve, walking_iso};
    use crate::simpset::{
        enumerate_maps, solve_lifting, standard_simplex, LiftingSquare, TruncatedSimplicialSet,
    };

    fn delta(n: usize, bound: usize) -> Rc<TruncatedSimplicialSet> {
        Rc::new(standard_simplex(n, bound))
    }

    #[test]
    fn corner_against_an_identity_argument_is_bijective() {
        let a = delta(1, 1);
        let u = SimplicialMap::identity(&a);
        let x = box_product(&delta(1, 1), &delta(1, 1));
        let y = box_product(&delta(1, 1), &delta(1, 1));
        let f = box_map(
            &SimplicialMap::identity(&delta(1, 1)),
            &SimplicialMap::identity(&delta(1, 1)),
            &x,
            &y,
        )
        .unwrap();
        let corner = pair_under(&u, &f).unwrap();
        assert!(corner.map().is_injective());
        assert_eq!(
            corner.map().source().total_len(),
            corner.map().target().total_len()
        );
    }

    #[test]
    fn corner_against_an_identity_map_is_bijective() {
        let x = box_product(&delta(1, 1), &delta(1, 1));
        let f = BisimplicialMap::identity(x.set_rc());
        let boundary = named_subcomplex(NamedSubcomplex::Boundary, 1, 1).unwrap().extract();
        let corner = pair_under(&boundary.inclusion, &f).unwrap();
        assert!(corner.map().is_injective());
        assert_eq!(
            corner.map().source().total_len(),
            corner.map().target().total_len()
        );
    }

    #[test]
    fn identities_are_reedy_fibrations() {
        let x = box_product(&delta(1, 1), &delta(2, 2));
        let f = BisimplicialMap::identity(x.set_rc());
        assert!(is_reedy_fibration(&f, 1).unwrap());
    }

    #[test]
    fn kan_columns_make_the_terminal_map_reedy() {
        // The zeroth column of Δ⁰ □ N(J) is the nerve of a groupoid,
        // which fills every horn within the truncation.
        let c = Rc::new(walking_iso());
        let j = nerve(&c, 2);
        let x = box_product(&delta(0, 0), j.complex_rc());
        let f = terminal_map(x.set_rc());
        assert!(is_reedy_fibration(&f, 0).unwrap());
    }

    #[test]
    fn a_non_kan_column_fails_the_reedy_condition() {
        // Δ² has an unfillable outer horn, so the terminal map from
        // Δ⁰ □ Δ² is not a Reedy fibration.
        let x = box_product(&delta(0, 0), &delta(2, 2));
        let f = terminal_map(x.set_rc());
        let witness = reedy_counterexample(&f, 0).unwrap().expect("Δ² is not Kan");
        assert_eq!(witness.boundary_dim, 0);
        assert_eq!(witness.horn.n, 2);
    }

    #[test]
    fn matching_maps_of_a_box_hit_only_diagonal_pairs() {
        // Δ¹ □ N(J) is *not* Reedy fibrant over the point: the corner
        // against ∂Δ¹ ↪ Δ¹ lands in the diagonal of the N(J)-coordinate,
        // so an off-diagonal edge of the matching object has no lift.
        let c = Rc::new(walking_iso());
        let j = nerve(&c, 2);
        let x = box_product(&delta(1, 1), j.complex_rc());
        let f = terminal_map(x.set_rc());
        let witness = reedy_counterexample(&f, 1).unwrap().expect("matching map is not Kan");
        assert_eq!(witness.boundary_dim, 1);
        assert_eq!((witness.horn.n, witness.horn.k), (1, Some(0)));
    }

    #[test]
    fn a_horn_inclusion_of_columns_is_not_reedy() {
        let horn = named_subcomplex(NamedSubcomplex::Horn(1), 2, 2).unwrap().extract();
        let x = box_product(&delta(0, 0), &horn.complex);
        let y = box_product(&delta(0, 0), &delta(2, 2));
        let f = box_map(
            &SimplicialMap::identity(&delta(0, 0)),
            &horn.inclusion,
            &x,
            &y,
        )
        .unwrap();
        let witness = reedy_counterexample(&f, 0).unwrap().expect("not a Reedy fibration");
        assert_eq!(witness.boundary_dim, 0);
        assert!(require_reedy(&f, 0).is_err());
    }

    #[test]
    fn marked_corner_with_flat_markings_matches_the_plain_corner() {
        let boundary = named_subcomplex(NamedSubcomplex::Boundary, 1, 1).unwrap().extract();
        let x = box_product(&delta(1, 1), &delta(1, 1));
        let f = BisimplicialMap::identity(x.set_rc());
        let plain = pair_under(&boundary.inclusion, &f).unwrap();
        let u = MarkedSimplicialMap::new(
            boundary.inclusion.clone(),
            MarkedSimplicialSet::flat(&boundary.complex),
            MarkedSimplicialSet::flat(&delta(1, 1)),
        )
        .unwrap();
        let marked_f = MarkedBisimplicialMap::new(
            f,
            MarkedBisimplicialSet::flat(x.set_rc()),
            MarkedBisimplicialSet::flat(x.set_rc()),
        )
        .unwrap();
        let marked = pair_under_marked(&u, &marked_f).unwrap();
        assert_eq!(plain.map().components(), marked.map().components());
    }

    /// The three adjoint formulations of a lifting problem — against the
    /// pushout product, against the under corner, and against the over
    /// corner — have the same total number of solutions.
    #[test]
    fn adjoint_lifting_problems_have_matching_solution_totals() {
        let u = named_subcomplex(NamedSubcomplex::Boundary, 1, 1).unwrap().extract();
        let v = named_subcomplex(NamedSubcomplex::Boundary, 1, 1).unwrap().extract();
        let x = box_product(&delta(1, 1), &delta(1, 1));
        let f = terminal_map(x.set_rc());

        // (a) u ⊙′ v against f.
        let pp = pushout_product(&u.inclusion, &v.inclusion).unwrap();
        let bottom_box = terminal_map(pp.target().set_rc());
        let mut total_box = 0usize;
        for top in enumerate_bisimplicial_maps(pp.set_rc(), x.set_rc()) {
            let square = BisimplicialLiftingSquare {
                left: pp.map(),
                right: &f,
                top: &top,
                bottom: &bottom_box,
            };
            total_box += solve_bisimplicial_lifting(&square).unwrap().len();
        }

        // (b) v against ⟨u\f⟩.
        let corner_under = pair_under(&u.inclusion, &f).unwrap();
        let mut total_under = 0usize;
        for top in enumerate_maps(&v.complex, corner_under.map().source_rc()) {
            for bottom in enumerate_maps(v.inclusion.target_rc(), corner_under.map().target_rc())
            {
                let left_then_bottom = bottom.compose(&v.inclusion).unwrap();
                let top_then_right = corner_under.map().compose(&top).unwrap();
                if left_then_bottom.components() != top_then_right.components() {
                    continue;
                }
                let square = LiftingSquare {
                    left: &v.inclusion,
                    right: corner_under.map(),
                    top: &top,
                    bottom: &bottom,
                };
                total_under += solve_lifting(&square).unwrap().len();
            }
        }

        // (c) u against ⟨f/v⟩.
        let corner_over = pair_over(&f, &v.inclusion).unwrap();
        let mut total_over = 0usize;
        for top in enumerate_maps(&u.complex, corner_over.map().source_rc()) {
            for bottom in enumerate_maps(u.inclusion.target_rc(), corner_over.map().target_rc())
            {
                let left_then_bottom = bottom.compose(&u.inclusion).unwrap();
                let top_then_right = corner_over.map().compose(&top).unwrap();
                if left_then_bottom.components() != top_then_right.components() {
                    continue;
                }
                let square = LiftingSquare {
                    left: &u.inclusion,
                    right: corner_over.map(),
                    top: &top,
                    bottom: &bottom,
                };
                total_over += solve_lifting(&square).unwrap().len();
            }
        }

        assert!(total_box > 0);
        assert_eq!(total_box, total_under);
        assert_eq!(total_box, total_over);
    }
}
