//! Lifting problems, their exhaustive solutions, and right-lifting-property
//! checks against the standard generator families.

use super::complex::SimplexId;
use super::maps::{enumerate_maps, search_maps, SimplicialMap};
use super::subcomplex::{named_subcomplex, NamedSubcomplex};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LiftingError {
    #[error("the four maps do not form a square (endpoint mismatch)")]
    ShapeMismatch,
    #[error("the square does not commute")]
    NotCommuting,
    #[error("the left map of a lifting square must be injective")]
    NotInjective,
    #[error("requested bound {0} exceeds the complex bound {1}")]
    BoundTooLarge(usize, usize),
}

/// A commuting lifting square
///
/// ```text
///        top
///     A ----> X
///   i |       | f
///     v       v
///     B ----> Y
///      bottom
/// ```
///
/// with `i` injective.  Solutions are maps `h: B → X` with `h ∘ i = top` and
/// `f ∘ h = bottom`.
pub struct LiftingSquare<'a> {
    pub left: &'a SimplicialMap,
    pub right: &'a SimplicialMap,
    pub top: &'a SimplicialMap,
    pub bottom: &'a SimplicialMap,
}

impl LiftingSquare<'_> {
    fn validate(&self) -> Result<(), LiftingError> {
        let ok = *self.left.source() == *self.top.source()
            && *self.left.target() == *self.bottom.source()
            && *self.right.source() == *self.top.target()
            && *self.right.target() == *self.bottom.target();
        if !ok {
            return Err(LiftingError::ShapeMismatch);
        }
        if !self.left.is_injective() {
            return Err(LiftingError::NotInjective);
        }
        let via_top = self.right.compose(self.top).expect("validated shapes");
        let via_bottom = self.bottom.compose(self.left).expect("validated shapes");
        if via_top != via_bottom {
            return Err(LiftingError::NotCommuting);
        }
        Ok(())
    }

    fn forced(&self) -> Vec<Vec<Option<SimplexId>>> {
        let b = self.left.target();
        let mut forced: Vec<Vec<Option<SimplexId>>> = (0..=b.bound())
            .map(|level| vec![None; b.level_len(level)])
            .collect();
        for level in 0..=b.bound() {
            for a in self.left.source().simplices(level) {
                let image = self.left.apply(a);
                forced[image.level][image.index] = Some(self.top.apply(a));
            }
        }
        forced
    }
}

/// All fillers of a lifting square.  Every returned map is re-validated:
/// it is simplicial, restricts to `top`, and projects to `bottom`.
pub fn solve_lifting(square: &LiftingSquare) -> Result<Vec<SimplicialMap>, LiftingError> {
    solve(square, false)
}

/// Whether the square has at least one filler.
pub fn lift_exists(square: &LiftingSquare) -> Result<bool, LiftingError> {
    Ok(!solve(square, true)?.is_empty())
}

fn solve(square: &LiftingSquare, stop_early: bool) -> Result<Vec<SimplicialMap>, LiftingError> {
    square.validate()?;
    let forced = square.forced();
    let fillers = search_maps(
        square.left.target_rc(),
        square.right.source_rc(),
        Some(&forced),
        Some((square.right, square.bottom)),
        stop_early,
    );
    for h in &fillers {
        // post-hoc re-verification of both triangles
        assert_eq!(
            h.compose(square.left).expect("shapes validated"),
            *square.top,
            "filler does not restrict to the top map"
        );
        assert_eq!(
            square.right.compose(h).expect("shapes validated"),
            *square.bottom,
            "filler does not project to the bottom map"
        );
    }
    Ok(fillers)
}

/// All extensions of `g: A → Y` along an injective `i: A → B`.
pub fn extensions(
    i: &SimplicialMap,
    g: &SimplicialMap,
) -> Result<Vec<SimplicialMap>, LiftingError> {
    if *i.source() != *g.source() {
        return Err(LiftingError::ShapeMismatch);
    }
    if !i.is_injective() {
        return Err(LiftingError::NotInjective);
    }
    let b = i.target();
    let mut forced: Vec<Vec<Option<SimplexId>>> = (0..=b.bound())
        .map(|level| vec![None; b.level_len(level)])
        .collect();
    for level in 0..=b.bound() {
        for a in i.source().simplices(level) {
            let image = i.apply(a);
            forced[image.level][image.index] = Some(g.apply(a));
        }
    }
    Ok(search_maps(
        i.target_rc(),
        g.target_rc(),
        Some(&forced),
        None,
        false,
    ))
}

/// Generator families for right-lifting-property checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorFamily {
    /// `∂Δⁿ ⊆ Δⁿ` for `0 ≤ n ≤ up_to`.
    Boundaries,
    /// `Λⁿ_k ⊆ Δⁿ` for `1 ≤ n ≤ up_to`, `0 ≤ k ≤ n`.
    Horns,
    /// `Λⁿ_k ⊆ Δⁿ` for `2 ≤ n ≤ up_to`, `0 < k < n`.
    InnerHorns,
    /// `Λⁿ_0 ⊆ Δⁿ` for `1 ≤ n ≤ up_to`.
    LeftHorns,
}

impl GeneratorFamily {
    fn generators(self, up_to: usize) -> Vec<(usize, Option<usize>)> {
        let mut out = Vec::new();
        match self {
            GeneratorFamily::Boundaries => {
                for n in 0..=up_to {
                    out.push((n, None));
                }
            }
            GeneratorFamily::Horns => {
                for n in 1..=up_to {
                    for k in 0..=n {
                        out.push((n, Some(k)));
                    }
                }
            }
            GeneratorFamily::InnerHorns => {
                for n in 2..=up_to {
                    for k in 1..n {
                        out.push((n, Some(k)));
                    }
                }
            }
            GeneratorFamily::LeftHorns => {
                for n in 1..=up_to {
                    out.push((n, Some(0)));
                }
            }
        }
        out
    }
}

/// A lifting problem from a generator family with no filler.
#[derive(Clone, Debug)]
pub struct RlpCounterexample {
    /// Dimension of the generator.
    pub n: usize,
    /// Horn index, or `None` for a boundary inclusion.
    pub k: Option<usize>,
    pub top: SimplicialMap,
    pub bottom: SimplicialMap,
}

/// Search for a lifting problem from the family with no filler, trying the
/// generators in dimension order and squares in enumeration order.
pub fn rlp_counterexample(
    f: &SimplicialMap,
    family: GeneratorFamily,
    up_to: usize,
) -> Result<Option<RlpCounterexample>, LiftingError> {
    let bound = f.source().bound();
    if up_to > bound {
        return Err(LiftingError::BoundTooLarge(up_to, bound));
    }
    for (n, k) in family.generators(up_to) {
        let kind = match k {
            Some(k) => NamedSubcomplex::Horn(k),
            None => NamedSubcomplex::Boundary,
        };
        let sub = named_subcomplex(kind, n, bound).expect("generator dimensions are valid");
        let ex = sub.extract();
        for top in enumerate_maps(&ex.complex, f.source_rc()) {
            let pushed = f.compose(&top).expect("top lands in the source of f");
            for bottom in extensions(&ex.inclusion, &pushed)? {
                let square = LiftingSquare {
                    left: &ex.inclusion,
                    right: f,
                    top: &top,
                    bottom: &bottom,
                };
                if !lift_exists(&square)? {
                    return Ok(Some(RlpCounterexample { n, k, top, bottom }));
                }
            }
        }
    }
    Ok(None)
}

/// Whether `f` has the right lifting property against the family up to the
/// given dimension.
pub fn has_rlp(
    f: &SimplicialMap,
    family: GeneratorFamily,
    up_to: usize,
) -> Result<bool, LiftingError> {
    Ok(rlp_counterexample(f, family, up_to)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simpset::{StandardSimplex, TruncatedSimplicialSet};
    use std::rc::Rc;

    fn rc_simplex(n: usize, bound: usize) -> Rc<TruncatedSimplicialSet> {
        StandardSimplex::new(n, bound).complex().clone()
    }

    #[test]
    fn identity_has_rlp_against_everything() {
        let d2 = rc_simplex(2, 3);
        let id = SimplicialMap::identity(&d2);
        for family in [
            GeneratorFamily::Boundaries,
            GeneratorFamily::Horns,
            GeneratorFamily::InnerHorns,
            GeneratorFamily::LeftHorns,
        ] {
            assert!(has_rlp(&id, family, 3).unwrap());
        }
    }

    #[test]
    fn inner_horn_inclusion_fails_boundary_rlp() {
        let horn = named_subcomplex(NamedSubcomplex::Horn(1), 2, 2).unwrap();
        let ex = horn.extract();
        let witness = rlp_counterexample(&ex.inclusion, GeneratorFamily::Boundaries, 2)
            .unwrap()
            .expect("Λ²₁ ↪ Δ² is not a trivial fibration");
        assert!(witness.k.is_none());
    }

    #[test]
    fn triangle_to_point_fills_inner_horns_but_not_all_horns() {
        let d2 = rc_simplex(2, 2);
        let to_point = SimplicialMap::to_point(&d2);
        assert!(has_rlp(&to_point, GeneratorFamily::InnerHorns, 2).unwrap());
        // Δ² is not a Kan complex: the outer horn Λ²₀ with edges (0→1, 0→2)
        // placed as (01 ↦ 12, 02 ↦ something) cannot always be filled
        assert!(!has_rlp(&to_point, GeneratorFamily::Horns, 2).unwrap());
    }

    #[test]
    fn inner_horn_fillers_in_a_simplex_are_unique() {
        // Δ² is the nerve of the poset [2]; inner-horn fillers are unique
        let d2 = rc_simplex(2, 2);
        let horn = named_subcomplex(NamedSubcomplex::Horn(1), 2, 2).unwrap();
        let ex = horn.extract();
        let to_point_d2 = SimplicialMap::to_point(&d2);
        for top in enumerate_maps(&ex.complex, &d2) {
            let bottom = SimplicialMap::to_point(ex.inclusion.target_rc());
            let square = LiftingSquare {
                left: &ex.inclusion,
                right: &to_point_d2,
                top: &top,
                bottom: &bottom,
            };
            let fillers = solve_lifting(&square).unwrap();
            assert_eq!(fillers.len(), 1, "nerve inner-horn fillers are unique");
        }
    }

    #[test]
    fn extension_counts_along_vertex_inclusion() {
        // extensions of a point Δ⁰ → Δ¹ along Δ⁰ ↪ Δ¹ (vertex 0): maps
        // Δ¹ → Δ¹ fixing vertex 0 are exactly 2 (constant 0 and identity)
        let d1 = StandardSimplex::new(1, 2);
        let pt = StandardSimplex::new(0, 2);
        let incl = crate::simpset::induced_map(&pt, &d1, &[0]);
        for v in 0..=1u8 {
            let g = crate::simpset::induced_map(&pt, &d1, &[v]);
            let exts = extensions(&incl, &g).unwrap();
            let expected = if v == 0 { 2 } else { 1 };
            assert_eq!(exts.len(), expected, "extensions fixing vertex at {v}");
        }
    }
}
