//! Divisions: the two right adjoints of the box product.  `A\X` ("A under
//! X") has `n`-simplices the maps `A □ Δⁿ → X`, and `X/B` ("X over B") has
//! `m`-simplices the maps `Δᵐ □ B → X`.
//!
//! Both are computed memberwise: a map `A □ Δⁿ → X` is the same as a
//! simplicial map from `A` into the `n`-th row of `X`, and a map
//! `Δᵐ □ B → X` the same as a map from `B` into the `m`-th column.  The
//! simplicial structure on a division postcomposes members with the
//! transition maps between neighbouring rows (respectively columns).

use std::collections::{BTreeMap, BTreeSet};
use std::rc::Rc;

use super::marking::{
    enumerate_marked_bisimplicial_maps, enumerate_marked_maps, marked_box, MarkedBisimplicialSet,
    MarkedSimplicialSet,
};
use super::maps::{enumerate_bisimplicial_maps, BisimplicialMap};
use super::set::box_product;
use super::{BisimpError, BisimplexId, BoxProduct, TruncatedBisimplicialSet};
use crate::simpset::{
    assemble_complex, enumerate_maps, SimplexId, SimplicialMap, TruncatedSimplicialSet,
};

/// Which of the two divisions a [`Division`] is.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    Under,
    Over,
}

/// The component table of a member map, used as its identity.
type MemberKey = Vec<Vec<SimplexId>>;

/// A division complex `A\X` or `X/B`, with one member map per simplex.
///
/// For `A\X` the simplices at level `n` are maps `A → row_n(X)`; for `X/B`
/// the simplices at level `m` are maps `B → column_m(X)`.  An optional
/// marking (present on the over-division of a marked bisimplicial set)
/// distinguishes the 1-simplices whose member hits marked elements only.
#[derive(Clone, Debug)]
pub struct Division {
    side: Side,
    argument: Rc<TruncatedSimplicialSet>,
    ambient: Rc<TruncatedBisimplicialSet>,
    complex: Rc<TruncatedSimplicialSet>,
    strips: Vec<Rc<TruncatedSimplicialSet>>,
    members: Vec<Vec<SimplicialMap>>,
    index: Vec<BTreeMap<MemberKey, usize>>,
    marking: Option<BTreeSet<usize>>,
}

impl Division {
    pub fn complex(&self) -> &TruncatedSimplicialSet {
        &self.complex
    }

    pub fn complex_rc(&self) -> &Rc<TruncatedSimplicialSet> {
        &self.complex
    }

    /// The divided-by argument: `A` for `A\X`, `B` for `X/B`.
    pub fn argument(&self) -> &Rc<TruncatedSimplicialSet> {
        &self.argument
    }

    /// The divided bisimplicial set `X`.
    pub fn ambient(&self) -> &Rc<TruncatedBisimplicialSet> {
        &self.ambient
    }

    /// The row (under) or column (over) that members at `level` map into.
    pub fn strip(&self, level: usize) -> &Rc<TruncatedSimplicialSet> {
        &self.strips[level]
    }

    /// The member map of one simplex.
    pub fn member(&self, level: usize, index: usize) -> &SimplicialMap {
        &self.members[level][index]
    }

    pub fn members(&self, level: usize) -> &[SimplicialMap] {
        &self.members[level]
    }

    /// Locate a member by its component table.
    pub fn index_of(&self, level: usize, components: &[Vec<SimplexId>]) -> Option<usize> {
        self.index[level].get(components).copied()
    }

    /// The marking carried by the over-division of a marked bisimplicial
    /// set, if any.
    pub fn marking(&self) -> Option<MarkedSimplicialSet> {
        self.marking.as_ref().map(|marked| {
            MarkedSimplicialSet::with_edges(
                &self.complex,
                marked.iter().map(|&index| SimplexId { level: 1, index }),
            )
        })
    }
}

/// Shared constructor: enumerate members into each strip, filter, and
/// assemble the division complex from their component tables.
fn divide(
    side: Side,
    argument: &Rc<TruncatedSimplicialSet>,
    ambient: &Rc<TruncatedBisimplicialSet>,
    keep: impl Fn(&SimplicialMap, usize) -> bool,
) -> Result<Division, BisimpError> {
    let (arg_bound, result_bound) = match side {
        Side::Under => (ambient.h_bound(), ambient.v_bound()),
        Side::Over => (ambient.v_bound(), ambient.h_bound()),
    };
    if argument.bound() != arg_bound {
        return Err(BisimpError::BoundMismatch(format!(
            "division argument has bound {}, the divided set expects {}",
            argument.bound(),
            arg_bound
        )));
    }
    let strips: Vec<Rc<TruncatedSimplicialSet>> = (0..=result_bound)
        .map(|level| match side {
            Side::Under => ambient.row(level),
            Side::Over => ambient.column(level),
        })
        .collect();
    let members: Vec<Vec<SimplicialMap>> = strips
        .iter()
        .enumerate()
        .map(|(level, strip)| {
            enumerate_maps(argument, strip).into_iter().filter(|g| keep(g, level)).collect()
        })
        .collect();
    let keys: Vec<Vec<MemberKey>> = members
        .iter()
        .map(|level| level.iter().map(|g| g.components().to_vec()).collect())
        .collect();
    let reindex = |level: usize, key: &MemberKey, op: &dyn Fn(BisimplexId) -> BisimplexId| {
        key.iter()
            .enumerate()
            .map(|(arg_level, images)| {
                images
                    .iter()
                    .map(|image| {
                        let at = match side {
                            Side::Under => BisimplexId { m: arg_level, n: level, index: image.index },
                            Side::Over => BisimplexId { m: level, n: arg_level, index: image.index },
                        };
                        SimplexId { level: arg_level, index: op(at).index }
                    })
                    .collect()
            })
            .collect()
    };
    let (complex, index) = assemble_complex(
        result_bound,
        keys,
        |level, key, i| {
            reindex(level, key, &|at| match side {
                Side::Under => ambient.v_face(at, i),
                Side::Over => ambient.h_face(at, i),
            })
        },
        |level, key, i| {
            reindex(level, key, &|at| match side {
                Side::Under => ambient.v_degen(at, i),
                Side::Over => ambient.h_degen(at, i),
            })
        },
    );
    Ok(Division {
        side,
        argument: Rc::clone(argument),
        ambient: Rc::clone(ambient),
        complex: Rc::new(complex),
        strips,
        members,
        index,
        marking: None,
    })
}

/// The division `A\X`: level `n` consists of the maps `A □ Δⁿ → X`.
pub fn under(
    a: &Rc<TruncatedSimplicialSet>,
    x: &Rc<TruncatedBisimplicialSet>,
) -> Result<Division, BisimpError> {
    divide(Side::Under, a, x, |_, _| true)
}

/// The division `X/B`: level `m` consists of the maps `Δᵐ □ B → X`.
pub fn over(
    x: &Rc<TruncatedBisimplicialSet>,
    b: &Rc<TruncatedSimplicialSet>,
) -> Result<Division, BisimpError> {
    divide(Side::Over, b, x, |_, _| true)
}

/// The marked division `A\X` for marked `A` and `X`: only members sending
/// every marked edge of `A` to columns of marked elements survive.  The
/// result is an unmarked simplicial set.
pub fn under_marked(
    a: &MarkedSimplicialSet,
    x: &MarkedBisimplicialSet,
) -> Result<Division, BisimpError> {
    let x_set = Rc::clone(x.set_rc());
    let marked_edges: Vec<usize> = a.marked().iter().copied().collect();
    let x_marking = x.clone();
    divide(Side::Under, a.set_rc(), &x_set, move |g, n| {
        marked_edges.iter().all(|&edge| {
            let image = g.components()[1][edge];
            (0..=n).all(|j| {
                let at = BisimplexId { m: 1, n, index: image.index };
                x_marking.is_marked(x_marking.set().v_vertex(at, j))
            })
        })
    })
}

/// The marked division `X/B` for marked `X`: the underlying complex is the
/// plain division of the underlying sets, and a 1-simplex is marked when
/// its member map hits marked elements over every vertex of `B`.
pub fn over_marked(
    x: &MarkedBisimplicialSet,
    b: &Rc<TruncatedSimplicialSet>,
) -> Result<Division, BisimpError> {
    let mut division = divide(Side::Over, b, x.set_rc(), |_, _| true)?;
    let marked = division
        .members(1)
        .iter()
        .enumerate()
        .filter(|(_, member)| {
            member.components()[0].iter().all(|image| {
                x.is_marked(BisimplexId { m: 1, n: 0, index: image.index })
            })
        })
        .map(|(index, _)| index)
        .collect();
    division.marking = Some(marked);
    Ok(division)
}

/// The restriction `A′\X → A\X` (or `X/B′ → X/B`) induced by a map
/// `u: A → A′` of arguments: precompose each member with `u`.
pub(crate) fn restrict_along(
    src: &Division,
    dst: &Division,
    u: &SimplicialMap,
) -> SimplicialMap {
    assert_eq!(src.side, dst.side, "divisions must have the same orientation");
    let components: Vec<Vec<SimplexId>> = src
        .members
        .iter()
        .enumerate()
        .map(|(level, members)| {
            members
                .iter()
                .map(|g| {
                    let composite = g.compose(u).expect("argument map endpoints");
                    let index = dst
                        .index_of(level, composite.components())
                        .expect("restricted member stays in the target division");
                    SimplexId { level, index }
                })
                .collect()
        })
        .collect();
    SimplicialMap::new(Rc::clone(src.complex_rc()), Rc::clone(dst.complex_rc()), components)
        .expect("restriction along an argument map is simplicial")
}

/// The pushforward `A\X → A\Y` (or `X/B → Y/B`) induced by a bisimplicial
/// map `f: X → Y`: postcompose each member with the strip components of
/// `f`.
pub(crate) fn push_along(src: &Division, dst: &Division, f: &BisimplicialMap) -> SimplicialMap {
    assert_eq!(src.side, dst.side, "divisions must have the same orientation");
    let components: Vec<Vec<SimplexId>> = src
        .members
        .iter()
        .enumerate()
        .map(|(level, members)| {
            members
                .iter()
                .map(|g| {
                    let key: MemberKey = g
                        .components()
                        .iter()
                        .enumerate()
                        .map(|(arg_level, images)| {
                            images
                                .iter()
                                .map(|image| {
                                    let at = match src.side {
                                        Side::Under => BisimplexId {
                                            m: arg_level,
                                            n: level,
                                            index: image.index,
                                        },
                                        Side::Over => BisimplexId {
                                            m: level,
                                            n: arg_level,
                                            index: image.index,
                                        },
                                    };
                                    SimplexId { level: arg_level, index: f.apply(at).index }
                                })
                                .collect()
                        })
                        .collect();
                    let index = dst
                        .index_of(level, &key)
                        .expect("pushed member stays in the target division");
                    SimplexId { level, index }
                })
                .collect()
        })
        .collect();
    SimplicialMap::new(Rc::clone(src.complex_rc()), Rc::clone(dst.complex_rc()), components)
        .expect("pushforward along a bisimplicial map is simplicial")
}

/// Cardinalities of the three hom-sets identified by the division
/// adjunctions, as verified by [`adjunction_witness`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdjunctionWitness {
    /// `|Hom(A □ B, X)|`.
    pub box_maps: usize,
    /// `|Hom(B, A\X)|`.
    pub under_maps: usize,
    /// `|Hom(A, X/B)|`.
    pub over_maps: usize,
}

/// Transpose a box-product map to a map into the under-division.
fn transpose_under(
    product: &BoxProduct,
    division: &Division,
    f: &BisimplicialMap,
) -> Result<SimplicialMap, BisimpError> {
    let b = product.right();
    let a = product.left();
    let components: Vec<Vec<SimplexId>> = (0..=b.bound())
        .map(|n| {
            (0..b.level_len(n))
                .map(|bi| {
                    let key: MemberKey = (0..=a.bound())
                        .map(|m| {
                            (0..a.level_len(m))
                                .map(|ai| {
                                    let pair = product.pair_id(
                                        SimplexId { level: m, index: ai },
                                        SimplexId { level: n, index: bi },
                                    );
                                    SimplexId { level: m, index: f.apply(pair).index }
                                })
                                .collect()
                        })
                        .collect();
                    division
                        .index_of(n, &key)
                        .map(|index| SimplexId { level: n, index })
                        .ok_or_else(|| {
                            BisimpError::AdjunctionFailure(format!(
                                "transposed member at level {n} is not in the division"
                            ))
                        })
                })
                .collect::<Result<_, _>>()
        })
        .collect::<Result<_, _>>()?;
    SimplicialMap::new(Rc::clone(b), Rc::clone(division.complex_rc()), components)
        .map_err(|e| BisimpError::AdjunctionFailure(format!("transpose is not simplicial: {e}")))
}

/// Transpose a map into the under-division back to a box-product map.
fn transpose_under_inverse(
    product: &BoxProduct,
    division: &Division,
    g: &SimplicialMap,
    x: &Rc<TruncatedBisimplicialSet>,
) -> Result<BisimplicialMap, BisimpError> {
    let set = product.set();
    let components: Vec<Vec<Vec<usize>>> = (0..=set.h_bound())
        .map(|m| {
            (0..=set.v_bound())
                .map(|n| {
                    set.elements(m, n)
                        .map(|id| {
                            let (a_id, b_id) = product.pair_of(id);
                            let member = division.member(n, g.apply(b_id).index);
                            member.components()[m][a_id.index].index
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    BisimplicialMap::new(Rc::clone(product.set_rc()), Rc::clone(x), components)
        .map_err(|e| BisimpError::AdjunctionFailure(format!("transpose is not bisimplicial: {e}")))
}

/// Transpose a box-product map to a map into the over-division.
fn transpose_over(
    product: &BoxProduct,
    division: &Division,
    f: &BisimplicialMap,
) -> Result<SimplicialMap, BisimpError> {
    let a = product.left();
    let b = product.right();
    let components: Vec<Vec<SimplexId>> = (0..=a.bound())
        .map(|m| {
            (0..a.level_len(m))
                .map(|ai| {
                    let key: MemberKey = (0..=b.bound())
                        .map(|k| {
                            (0..b.level_len(k))
                                .map(|bi| {
                                    let pair = product.pair_id(
                                        SimplexId { level: m, index: ai },
                                        SimplexId { level: k, index: bi },
                                    );
                                    SimplexId { level: k, index: f.apply(pair).index }
                                })
                                .collect()
                        })
                        .collect();
                    division
                        .index_of(m, &key)
                        .map(|index| SimplexId { level: m, index })
                        .ok_or_else(|| {
                            BisimpError::AdjunctionFailure(format!(
                                "transposed member at level {m} is not in the division"
                            ))
                        })
                })
                .collect::<Result<_, _>>()
        })
        .collect::<Result<_, _>>()?;
    SimplicialMap::new(Rc::clone(a), Rc::clone(division.complex_rc()), components)
        .map_err(|e| BisimpError::AdjunctionFailure(format!("transpose is not simplicial: {e}")))
}

/// Transpose a map into the over-division back to a box-product map.
fn transpose_over_inverse(
    product: &BoxProduct,
    division: &Division,
    g: &SimplicialMap,
    x: &Rc<TruncatedBisimplicialSet>,
) -> Result<BisimplicialMap, BisimpError> {
    let set = product.set();
    let components: Vec<Vec<Vec<usize>>> = (0..=set.h_bound())
        .map(|m| {
            (0..=set.v_bound())
                .map(|n| {
                    set.elements(m, n)
                        .map(|id| {
                            let (a_id, b_id) = product.pair_of(id);
                            let member = division.member(m, g.apply(a_id).index);
                            member.components()[n][b_id.index].index
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    BisimplicialMap::new(Rc::clone(product.set_rc()), Rc::clone(x), components)
        .map_err(|e| BisimpError::AdjunctionFailure(format!("transpose is not bisimplicial: {e}")))
}

/// Verify both adjunction bijections on concrete hom-sets: the transposes
/// must be mutually inverse bijections between the enumerated maps
/// `A □ B → X`, `B → A\X`, and `A → X/B`.
fn check_bijections(
    product: &BoxProduct,
    x: &Rc<TruncatedBisimplicialSet>,
    box_maps: &[BisimplicialMap],
    under_div: &Division,
    under_maps: &[SimplicialMap],
    over_div: &Division,
    over_maps: &[SimplicialMap],
) -> Result<AdjunctionWitness, BisimpError> {
    let under_set: BTreeSet<MemberKey> =
        under_maps.iter().map(|g| g.components().to_vec()).collect();
    let over_set: BTreeSet<MemberKey> =
        over_maps.iter().map(|g| g.components().to_vec()).collect();
    let box_set: BTreeSet<Vec<Vec<Vec<usize>>>> =
        box_maps.iter().map(|f| f.components().to_vec()).collect();
    let mut seen_under = BTreeSet::new();
    let mut seen_over = BTreeSet::new();
    for f in box_maps {
        let phi = transpose_under(product, under_div, f)?;
        if !under_set.contains(phi.components()) {
            return Err(BisimpError::AdjunctionFailure(
                "a transposed map is missing from the under hom-set".into(),
            ));
        }
        let back = transpose_under_inverse(product, under_div, &phi, x)?;
        if back != *f {
            return Err(BisimpError::AdjunctionFailure(
                "under transposition fails to round-trip a box map".into(),
            ));
        }
        seen_under.insert(phi.components().to_vec());
        let psi = transpose_over(product, over_div, f)?;
        if !over_set.contains(psi.components()) {
            return Err(BisimpError::AdjunctionFailure(
                "a transposed map is missing from the over hom-set".into(),
            ));
        }
        let back = transpose_over_inverse(product, over_div, &psi, x)?;
        if back != *f {
            return Err(BisimpError::AdjunctionFailure(
                "over transposition fails to round-trip a box map".into(),
            ));
        }
        seen_over.insert(psi.components().to_vec());
    }
    for g in under_maps {
        let f = transpose_under_inverse(product, under_div, g, x)?;
        if !box_set.contains(f.components()) {
            return Err(BisimpError::AdjunctionFailure(
                "an untransposed under map is missing from the box hom-set".into(),
            ));
        }
        let again = transpose_under(product, under_div, &f)?;
        if again.components() != g.components() {
            return Err(BisimpError::AdjunctionFailure(
                "under transposition fails to round-trip a division map".into(),
            ));
        }
    }
    for g in over_maps {
        let f = transpose_over_inverse(product, over_div, g, x)?;
        if !box_set.contains(f.components()) {
            return Err(BisimpError::AdjunctionFailure(
                "an untransposed over map is missing from the box hom-set".into(),
            ));
        }
        let again = transpose_over(product, over_div, &f)?;
        if again.components() != g.components() {
            return Err(BisimpError::AdjunctionFailure(
                "over transposition fails to round-trip a division map".into(),
            ));
        }
    }
    if seen_under.len() != box_maps.len()
        || seen_over.len() != box_maps.len()
        || box_maps.len() != under_maps.len()
        || box_maps.len() != over_maps.len()
    {
        return Err(BisimpError::AdjunctionFailure(format!(
            "hom-set sizes disagree: box {}, under {}, over {}",
            box_maps.len(),
            under_maps.len(),
            over_maps.len()
        )));
    }
    Ok(AdjunctionWitness {
        box_maps: box_maps.len(),
        under_maps: under_maps.len(),
        over_maps: over_maps.len(),
    })
}

/// Enumerate the three hom-sets `Hom(A □ B, X)`, `Hom(B, A\X)`, and
/// `Hom(A, X/B)` and verify that the adjunction transposes are mutually
/// inverse bijections between them.
pub fn adjunction_witness(
    a: &Rc<TruncatedSimplicialSet>,
    b: &Rc<TruncatedSimplicialSet>,
    x: &Rc<TruncatedBisimplicialSet>,
) -> Result<AdjunctionWitness, BisimpError> {
    let product = box_product(a, b);
    let box_maps = enumerate_bisimplicial_maps(product.set_rc(), x);
    let under_div = under(a, x)?;
    let under_maps = enumerate_maps(b, under_div.complex_rc());
    let over_div = over(x, b)?;
    let over_maps = enumerate_maps(a, over_div.complex_rc());
    check_bijections(&product, x, &box_maps, &under_div, &under_maps, &over_div, &over_maps)
}

/// The marked analogue of [`adjunction_witness`]: `A` and `X` are marked,
/// the box hom-set consists of marking-preserving maps, the under hom-set
/// of plain maps into the marked under-division, and the over hom-set of
/// marking-preserving maps into the marked over-division.
pub fn marked_adjunction_witness(
    a: &MarkedSimplicialSet,
    b: &Rc<TruncatedSimplicialSet>,
    x: &MarkedBisimplicialSet,
) -> Result<AdjunctionWitness, BisimpError> {
    let (product, product_marking) = marked_box(a, b);
    let box_maps = enumerate_marked_bisimplicial_maps(&product_marking, x);
    let under_div = under_marked(a, x)?;
    let under_maps = enumerate_maps(b, under_div.complex_rc());
    let over_div = over_marked(x, b)?;
    let over_marking = over_div.marking().expect("marked over-division carries a marking");
    let over_maps = enumerate_marked_maps(a, &over_marking);
    check_bijections(
        &product,
        x.set_rc(),
        &box_maps,
        &under_div,
        &under_maps,
        &over_div,
        &over_maps,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{nerve, walking_iso};
    use crate::simpset::{named_subcomplex, standard_simplex, NamedSubcomplex};

    fn delta(n: usize, bound: usize) -> Rc<TruncatedSimplicialSet> {
        Rc::new(standard_simplex(n, bound))
    }

    #[test]
    fn dividing_by_a_point_projects_rows_and_columns() {
        let c = Rc::new(walking_iso());
        let y = nerve(&c, 2);
        let x = box_product(&delta(1, 1), y.complex_rc());
        let under_div = under(&delta(0, 1), x.set_rc()).unwrap();
        assert_eq!(*under_div.complex(), *x.set().column(0));
        let over_div = over(x.set_rc(), &delta(0, 2)).unwrap();
        assert_eq!(*over_div.complex(), *x.set().row(0));
    }

    #[test]
    fn under_division_levels_count_box_maps() {
        // (A\X)_n must be in bijection with maps A □ Δⁿ → X.
        let a = named_subcomplex(NamedSubcomplex::Horn(0), 1, 1).unwrap().extract();
        let x = box_product(&delta(1, 1), &delta(1, 1));
        let division = under(&a.complex, x.set_rc()).unwrap();
        for n in 0..=1usize {
            let product = box_product(&a.complex, &delta(n, 1));
            let count = enumerate_bisimplicial_maps(product.set_rc(), x.set_rc()).len();
            assert_eq!(division.complex().level_len(n), count, "level {n}");
        }
    }

    #[test]
    fn adjunction_counts_agree_on_a_small_instance() {
        let a = delta(1, 1);
        let b = named_subcomplex(NamedSubcomplex::Boundary, 2, 2).unwrap().extract().complex;
        let x = box_product(&delta(1, 1), &delta(2, 2));
        let witness = adjunction_witness(&a, &b, x.set_rc()).unwrap();
        assert_eq!(witness.box_maps, witness.under_maps);
        assert_eq!(witness.box_maps, witness.over_maps);
        assert!(witness.box_maps > 0);
    }

    #[test]
    fn flat_marking_divides_like_the_unmarked_sets() {
        let a = MarkedSimplicialSet::flat(&delta(1, 1));
        let x = box_product(&delta(1, 1), &delta(1, 1));
        let marking = MarkedBisimplicialSet::with_marked(
            x.set_rc(),
            x.set().elements(1, 0).filter(|id| id.index % 2 == 0).collect::<Vec<_>>(),
        );
        let marked = under_marked(&a, &marking).unwrap();
        let plain = under(a.set_rc(), x.set_rc()).unwrap();
        assert_eq!(*marked.complex(), *plain.complex());
        for level in 0..=1 {
            assert_eq!(marked.members(level).len(), plain.members(level).len());
        }
    }

    #[test]
    fn sharp_target_marking_divides_like_the_unmarked_sets() {
        let std2 = crate::simpset::StandardSimplex::new(2, 2);
        let a = crate::bisimp::l_marking(std2.complex(), std2.edge_id(0, 1));
        let x = box_product(&delta(2, 2), &delta(1, 1));
        let sharp = MarkedBisimplicialSet::sharp(x.set_rc());
        let marked = under_marked(&a, &sharp).unwrap();
        let plain = under(a.set_rc(), x.set_rc()).unwrap();
        assert_eq!(*marked.complex(), *plain.complex());
    }

    #[test]
    fn marked_membership_is_detected_by_vertices() {
        // Full inclusion: a member lies in the marked division exactly
        // when all of its vertices do.
        let std2 = crate::simpset::StandardSimplex::new(2, 2);
        let a = crate::bisimp::l_marking(std2.complex(), std2.edge_id(0, 1));
        let x = box_product(&delta(2, 2), &delta(2, 2));
        let marking = MarkedBisimplicialSet::with_marked(
            x.set_rc(),
            x.set().elements(1, 0).filter(|id| id.index % 3 == 0).collect::<Vec<_>>(),
        );
        let marked = under_marked(&a, &marking).unwrap();
        let plain = under(a.set_rc(), x.set_rc()).unwrap();
        for n in 0..=plain.complex().bound() {
            for id in plain.complex().simplices(n) {
                let key = plain.member(n, id.index).components().to_vec();
                let in_marked = marked.index_of(n, &key).is_some();
                let all_vertices = (0..=n).all(|j| {
                    let vertex = plain.complex().vertex(id, j);
                    let vkey = plain.member(0, vertex.index).components().to_vec();
                    marked.index_of(0, &vkey).is_some()
                });
                assert_eq!(in_marked, all_vertices, "simplex {id}");
            }
        }
    }

    #[test]
    fn marked_adjunction_counts_agree() {
        let std1 = crate::simpset::StandardSimplex::new(1, 1);
        let a = crate::bisimp::l_marking(std1.complex(), std1.edge_id(0, 1));
        let b = delta(1, 1);
        let x = box_product(&delta(1, 1), &delta(1, 1));
        let marking = MarkedBisimplicialSet::with_marked(
            x.set_rc(),
            x.set()
                .elements(1, 0)
                .filter(|&id| !x.set().is_h_degenerate(id))
                .take(1)
                .collect::<Vec<_>>(),
        );
        let witness = marked_adjunction_witness(&a, &b, &marking).unwrap();
        assert_eq!(witness.box_maps, witness.under_maps);
        assert_eq!(witness.box_maps, witness.over_maps);
        // The marked hom-sets are strictly smaller than the unmarked ones
        // here: the marked edge of A must land on a marked column.
        let plain = adjunction_witness(a.set_rc(), &b, x.set_rc()).unwrap();
        assert!(witness.box_maps < plain.box_maps);
    }

    #[test]
    fn over_marking_of_the_zeroth_row_mirrors_the_ambient_marking() {
        let x = box_product(&delta(1, 1), &delta(1, 1));
        let chosen: Vec<_> = x
            .set()
            .elements(1, 0)
            .filter(|&id| !x.set().is_h_degenerate(id))
            .take(1)
            .collect();
        let marking = MarkedBisimplicialSet::with_marked(x.set_rc(), chosen.clone());
        let division = over_marked(&marking, &delta(0, 1)).unwrap();
        let result = division.marking().unwrap();
        // Members of the zeroth row correspond to elements of X_{*,0} in
        // order, so the marked edges must be exactly the marked elements.
        let expected: BTreeSet<usize> = marking.marked().iter().copied().collect();
        assert_eq!(*result.marked(), expected);
    }
}
