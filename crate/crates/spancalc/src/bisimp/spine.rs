//! Left spines, the subcomplex factorization of left horns, and the
//! pointwise crosscheck of the marked corner-map condition.
//!
//! The left spine `Lₙ ⊆ Δⁿ` is the union of the edge `{0,1}` with the
//! spine of the first face `d₁Δⁿ` (the chain `0-2-3-⋯-n`).  The left horn
//! decomposes as
//!
//! ```text
//! Λⁿ₀ = Lₙ ∪ d₁Δⁿ ∪ Q,    Q = d₂Δⁿ ∪ ⋯ ∪ dₙΔⁿ,
//! ```
//!
//! where `Lₙ ∪ d₁Δⁿ` is a pushout of `Lₙ` along the spine of `d₁Δⁿ`, and
//! `Q ≅ Δ^{0,1} ⋆ ∂Δ^{2,…,n}` is attached along
//! `Δ^{0,1} ∪ (Δ^{0} ⋆ ∂Δ^{2,…,n})`.  [`left_spine_factorization_check`]
//! replays all of these identities as concrete subcomplex equalities and
//! counts maps out of the pushouts against supplied targets.

use std::collections::BTreeMap;
use std::rc::Rc;

use super::fixed_edge::fixed_edge_comparison;
use super::marking::{l_marking, MarkedBisimplicialMap, MarkedSimplicialMap};
use super::pair::{pair_under_marked, require_reedy};
use super::{BisimpError, BisimplexId};
use crate::simpset::{
    enumerate_maps, face_subcomplex, has_rlp, named_subcomplex_in, ExtractedSubcomplex,
    GeneratorFamily, NamedSubcomplex, SimplexId, SimplicialMap, StandardSimplex, Subcomplex,
    TruncatedSimplicialSet,
};

/// `L₂` and `Λ²₀` are literally the same subcomplex of `Δ²`.
pub fn left_spine_base_case() -> bool {
    let std = StandardSimplex::new(2, 2);
    let spine = named_subcomplex_in(NamedSubcomplex::LeftSpine, &std);
    let horn = named_subcomplex_in(NamedSubcomplex::Horn(0), &std);
    match (spine, horn) {
        (Ok(spine), Ok(horn)) => spine == horn,
        _ => false,
    }
}

/// The subcomplex of simplices whose vertices stay within one link of a
/// vertex chain.
fn chain_spine(std: &StandardSimplex, chain: &[u8]) -> Subcomplex {
    Subcomplex::from_predicate(std.complex(), |id| {
        let key = std.key_of(id);
        chain
            .windows(2)
            .any(|w| key.iter().all(|&v| v == w[0] || v == w[1]))
    })
    .expect("a chain spine is a closed subcomplex")
}

/// Map counts for one pushout square against one target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PushoutCount {
    /// Label of the target complex.
    pub target: String,
    /// Maps out of the union vs. compatible pairs, for `Lₙ ∪ d₁Δⁿ`
    /// glued along the spine of `d₁Δⁿ`.
    pub spine_pushout: (usize, usize),
    /// Maps out of the union vs. compatible pairs, for `Λⁿ₀` glued from
    /// `Lₙ ∪ d₁Δⁿ` and `Q` along their intersection.
    pub horn_pushout: (usize, usize),
}

/// Outcome of replaying the left-horn factorization in dimension `n`.
#[derive(Clone, Debug)]
pub struct SpineFactorizationReport {
    /// The dimension checked.
    pub n: usize,
    /// `Lₙ ∪ d₁Δⁿ ∪ Q == Λⁿ₀`.
    pub union_is_left_horn: bool,
    /// `Lₙ ∩ d₁Δⁿ` is the spine of `d₁Δⁿ`.
    pub spine_is_the_overlap: bool,
    /// `Q` equals the join `Δ^{0,1} ⋆ ∂Δ^{2,…,n}` described by vertex
    /// sets.
    pub q_is_a_join: bool,
    /// `(Lₙ ∪ d₁Δⁿ) ∩ Q == Δ^{0,1} ∪ (Δ^{0} ⋆ ∂Δ^{2,…,n})`.
    pub q_overlap_matches: bool,
    /// Universal-property counts per target.
    pub pushout_counts: Vec<PushoutCount>,
}

impl SpineFactorizationReport {
    /// Every identity holds and every pair of counts agrees.
    pub fn holds(&self) -> bool {
        self.union_is_left_horn
            && self.spine_is_the_overlap
            && self.q_is_a_join
            && self.q_overlap_matches
            && self
                .pushout_counts
                .iter()
                .all(|c| c.spine_pushout.0 == c.spine_pushout.1 && c.horn_pushout.0 == c.horn_pushout.1)
    }
}

/// The component table of the restriction of `g` (defined on the
/// extraction `big`) to the extraction `small` of a subcomplex contained
/// in `big`'s subcomplex.
fn restriction_key(
    small: &ExtractedSubcomplex,
    big: &ExtractedSubcomplex,
    g: &SimplicialMap,
) -> Vec<Vec<SimplexId>> {
    (0..=small.complex.bound())
        .map(|level| {
            small
                .complex
                .simplices(level)
                .map(|id| {
                    let ambient = small.inclusion.apply(id);
                    g.apply(big.from_ambient(ambient).expect("nested subcomplexes"))
                })
                .collect()
        })
        .collect()
}

/// Count maps `union → target` and compatible pairs out of the two
/// pieces, which must agree when the union is the pushout over the
/// overlap.
fn pushout_count(
    union: &Subcomplex,
    left: &Subcomplex,
    right: &Subcomplex,
    overlap: &Subcomplex,
    target: &Rc<TruncatedSimplicialSet>,
) -> (usize, usize) {
    let union_ex = union.extract();
    let left_ex = left.extract();
    let right_ex = right.extract();
    let overlap_ex = overlap.extract();
    let union_count = enumerate_maps(&union_ex.complex, target).len();
    let mut left_keys: BTreeMap<Vec<Vec<SimplexId>>, usize> = BTreeMap::new();
    for g in enumerate_maps(&left_ex.complex, target) {
        *left_keys.entry(restriction_key(&overlap_ex, &left_ex, &g)).or_default() += 1;
    }
    let mut pairs = 0usize;
    for h in enumerate_maps(&right_ex.complex, target) {
        pairs += left_keys
            .get(&restriction_key(&overlap_ex, &right_ex, &h))
            .copied()
            .unwrap_or(0);
    }
    (union_count, pairs)
}

/// Replay the subcomplex factorization `Λⁿ₀ = Lₙ ∪ d₁Δⁿ ∪ Q` in
/// dimension `n ≥ 3`, checking each identity and verifying the pushout
/// universal property by counting maps into each supplied target (which
/// must be truncated at bound `n`).
pub fn left_spine_factorization_check(
    n: usize,
    targets: &[(String, Rc<TruncatedSimplicialSet>)],
) -> Result<SpineFactorizationReport, BisimpError> {
    if n < 3 {
        return Err(BisimpError::Precondition(format!(
            "the factorization is defined for dimension at least 3, got {n}"
        )));
    }
    let std = StandardSimplex::new(n, n);
    let left_spine = named_subcomplex_in(NamedSubcomplex::LeftSpine, &std)?;
    let horn = named_subcomplex_in(NamedSubcomplex::Horn(0), &std)?;
    let d1 = face_subcomplex(&std, 1);
    let mut q = face_subcomplex(&std, 2);
    for i in 3..=n {
        q = q.union(&face_subcomplex(&std, i as u8))?;
    }

    let glued = left_spine.union(&d1)?;
    let union_is_left_horn = glued.union(&q)? == horn;

    let chain: Vec<u8> = std::iter::once(0).chain(2..=n as u8).collect();
    let d1_spine = chain_spine(&std, &chain);
    let spine_is_the_overlap = left_spine.intersect(&d1)? == d1_spine;

    // Q is the join Δ^{0,1} ⋆ ∂Δ^{2,…,n}: vertex sets missing at least
    // one of 2,…,n.
    let q_join = Subcomplex::from_predicate(std.complex(), |id| {
        let key = std.key_of(id);
        (2..=n as u8).any(|v| !key.contains(&v))
    })
    .expect("the join description is a closed subcomplex");
    let q_is_a_join = q == q_join;

    // The attachment overlap is Δ^{0,1} ∪ (Δ^{0} ⋆ ∂Δ^{2,…,n}): vertex
    // sets within {0,1}, or avoiding 1 and missing one of 2,…,n.
    let q_overlap = Subcomplex::from_predicate(std.complex(), |id| {
        let key = std.key_of(id);
        key.iter().all(|&v| v <= 1)
            || (!key.contains(&1) && (2..=n as u8).any(|v| !key.contains(&v)))
    })
    .expect("the attachment overlap is a closed subcomplex");
    let q_overlap_matches = glued.intersect(&q)? == q_overlap;

    let pushout_counts = targets
        .iter()
        .map(|(name, target)| PushoutCount {
            target: name.clone(),
            spine_pushout: pushout_count(&glued, &left_spine, &d1, &d1_spine, target),
            horn_pushout: pushout_count(&horn, &glued, &q, &q_overlap, target),
        })
        .collect();

    Ok(SpineFactorizationReport {
        n,
        union_is_left_horn,
        spine_is_the_overlap,
        q_is_a_join,
        q_overlap_matches,
        pushout_counts,
    })
}

/// Outcome of comparing the marked corner-map condition with its
/// edgewise counterpart.
#[derive(Clone, Debug)]
pub struct PointwiseReport {
    /// Whether the marked corner map `⟨i^L\f⟩` is a trivial fibration.
    pub marked_corner_is_trivial: bool,
    /// For each marked element of `X_{1,0}`, whether the fixed-edge
    /// comparison `p_e` is a trivial fibration.
    pub per_edge: Vec<(usize, bool)>,
}

impl PointwiseReport {
    /// The two sides of the equivalence agree.
    pub fn agree(&self) -> bool {
        self.marked_corner_is_trivial == self.per_edge.iter().all(|&(_, ok)| ok)
    }
}

/// Compare the two equivalent formulations of the marked corner-map
/// condition for a marked bisimplicial map `f`, the standard simplex
/// `std`, and a subcomplex `a ⊆ std` containing the edge `{0,1}`:
///
/// 1. `⟨i^L\f⟩` is a trivial fibration, where `i^L` is the `L`-marked
///    inclusion `A^L ↪ (Δⁿ)^L`;
/// 2. for every marked `e ∈ X_{1,0}`, the fixed-edge comparison `p_e`
///    is a trivial fibration.
///
/// Preconditions: the underlying map must be a Reedy fibration within
/// the truncation and the marking of the source must respect path
/// components.  The two sides are provably equivalent, so a
/// disagreement is reported as an error.
pub fn pointwise_crosscheck(
    f: &MarkedBisimplicialMap,
    std: &StandardSimplex,
    a: &Subcomplex,
    up_to: usize,
) -> Result<PointwiseReport, BisimpError> {
    if !a.contains(std.edge_id(0, 1)) {
        return Err(BisimpError::MissingLowEdge);
    }
    if !f.source().respects_path_components() {
        return Err(BisimpError::Precondition(
            "the marking of the source does not respect path components".into(),
        ));
    }
    require_reedy(f.map(), f.map().source().h_bound())?;

    let extracted = a.extract();
    let local_edge = extracted
        .from_ambient(std.edge_id(0, 1))
        .expect("the subcomplex contains the low edge");
    let marked_inclusion = MarkedSimplicialMap::new(
        extracted.inclusion.clone(),
        l_marking(&extracted.complex, local_edge),
        l_marking(std.complex(), std.edge_id(0, 1)),
    )?;
    let corner = pair_under_marked(&marked_inclusion, f)?;
    let bound = corner.map().source().bound().min(up_to);
    let marked_corner_is_trivial = has_rlp(corner.map(), GeneratorFamily::Boundaries, bound)?;

    let mut per_edge = Vec::new();
    for &index in f.source().marked() {
        let e = BisimplexId { m: 1, n: 0, index };
        let comparison = fixed_edge_comparison(std, a, f.map(), e)?;
        let bound = comparison.map().source().bound().min(up_to);
        let trivial = has_rlp(comparison.map(), GeneratorFamily::Boundaries, bound)?;
        per_edge.push((index, trivial));
    }

    let report = PointwiseReport { marked_corner_is_trivial, per_edge };
    if !report.agree() {
        let edgewise: Vec<usize> = report
            .per_edge
            .iter()
            .filter(|&&(_, ok)| !ok)
            .map(|&(index, _)| index)
            .collect();
        return Err(BisimpError::PointwiseDisagreement(format!(
            "the marked corner map is {} a trivial fibration but the edgewise checks fail at {:?}",
            if report.marked_corner_is_trivial { "" } else { "not" },
            edgewise
        )));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bisimp::{box_map, box_product, MarkedBisimplicialSet};
    use crate::simpset::standard_simplex;

    fn delta(n: usize, bound: usize) -> Rc<TruncatedSimplicialSet> {
        Rc::new(standard_simplex(n, bound))
    }

    #[test]
    fn the_base_case_holds() {
        assert!(left_spine_base_case());
    }

    #[test]
    fn the_factorization_replays_in_dimension_three() {
        let targets = vec![
            ("interval".to_string(), delta(1, 3)),
            ("triangle".to_string(), delta(2, 3)),
        ];
        let report = left_spine_factorization_check(3, &targets).unwrap();
        assert!(report.union_is_left_horn);
        assert!(report.spine_is_the_overlap);
        assert!(report.q_is_a_join);
        assert!(report.q_overlap_matches);
        assert!(report.holds(), "{report:?}");
    }

    #[test]
    fn dimension_two_is_rejected() {
        assert!(left_spine_factorization_check(2, &[]).is_err());
    }

    #[test]
    fn the_crosscheck_agrees_on_a_vertex_collapse() {
        // Vertically constant bisimplicial sets have discrete divisions,
        // so any map between them is a Reedy fibration; collapsing a
        // vertex of the horizontal factor gives a nontrivial instance.
        let std = StandardSimplex::new(2, 2);
        let point = delta(0, 1);
        let x = box_product(std.complex(), &point);
        let y = box_product(std.complex(), &point);
        let collapse = crate::simpset::induced_map(&std, &std, &[0, 1, 1]);
        let f = box_map(&collapse, &SimplicialMap::identity(&point), &x, &y).unwrap();

        let e = x.pair_id(std.edge_id(0, 1), SimplexId { level: 0, index: 0 });
        let x_marked = MarkedBisimplicialSet::with_marked(x.set_rc(), [e]);
        let y_marked = MarkedBisimplicialSet::sharp(y.set_rc());
        let marked_f = MarkedBisimplicialMap::new(f, x_marked, y_marked).unwrap();

        let horn = named_subcomplex_in(NamedSubcomplex::Horn(0), &std).unwrap();
        let report = pointwise_crosscheck(&marked_f, &std, &horn, 1).unwrap();
        assert!(report.marked_corner_is_trivial);
        assert!(report.per_edge.iter().all(|&(_, ok)| ok));
        assert!(report.per_edge.len() >= 2);
    }

    #[test]
    fn the_crosscheck_rejects_non_reedy_maps() {
        let std = StandardSimplex::new(2, 2);
        let x = box_product(std.complex(), &delta(1, 1));
        let f = crate::bisimp::terminal_map(x.set_rc());
        let marked_f = MarkedBisimplicialMap::new(
            f,
            MarkedBisimplicialSet::flat(x.set_rc()),
            MarkedBisimplicialSet::sharp(&crate::bisimp::terminal_bisimplicial(2, 1)),
        )
        .unwrap();
        let horn = named_subcomplex_in(NamedSubcomplex::Horn(0), &std).unwrap();
        let err = pointwise_crosscheck(&marked_f, &std, &horn, 1).unwrap_err();
        assert!(matches!(err, BisimpError::Precondition(_)));
    }
}
