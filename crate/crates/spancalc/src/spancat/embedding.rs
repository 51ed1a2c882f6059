//! Embedding functor groupoids into span groupoids along the interval
//! retraction, and checking that the embedding is a levelwise groupoid
//! equivalence split by the vertex section.
//!
//! For the *backward-iso* variant the triple has every morphism ingressive
//! and only isomorphisms egressive; restricting a span diagram to the
//! intervals `(j, n)` recovers a chain of forward legs, and conversely a
//! chain extends to a span diagram with identity backward legs.  The
//! *forward-iso* variant dualizes: it restricts along `(0, j)` and lands in
//! functors out of the opposite chain.

use std::rc::Rc;

use crate::fincat::{poset_functor, FinCategory, ObjId, Triple};
use crate::subdiv::{interval_category, IntervalPoset};

use super::complex::enumerate_acart_level;
use super::groupoid::DiagramGroupoid;
use super::SpanError;

/// Which leg of the spans is required to be invertible.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmbeddingVariant {
    /// Backward legs are isomorphisms; the embedding restricts along
    /// `j ↦ (j, n)` and compares with functors out of the chain.
    BackwardIso,
    /// Forward legs are isomorphisms; the embedding restricts along
    /// `j ↦ (0, j)` and compares with functors out of the opposite chain.
    ForwardIso,
}

/// Verdicts for one level of the embedding.
#[derive(Clone, Debug)]
pub struct EmbeddingLevel {
    pub level: usize,
    /// Does the retraction followed by the embedding act as the identity
    /// on members and isomorphisms?
    pub retraction_splits: bool,
    /// Is every span diagram isomorphic to one in the embedding's image?
    pub essentially_surjective: bool,
    /// Does the embedding induce bijections on all hom-sets?
    pub fully_faithful: bool,
}

/// The per-level verdicts of the equivalence check.
#[derive(Clone, Debug)]
pub struct EmbeddingReport {
    pub variant: EmbeddingVariant,
    pub levels: Vec<EmbeddingLevel>,
}

impl EmbeddingReport {
    /// All three verdicts at every level.
    pub fn holds(&self) -> bool {
        self.levels.iter().all(|l| {
            l.retraction_splits && l.essentially_surjective && l.fully_faithful
        })
    }
}

/// Check, level by level up to `max_level`, that precomposition with the
/// interval retraction embeds the groupoid of chain diagrams into the span
/// groupoid as an equivalence, split by the vertex section.
pub fn equivalence_embedding(
    cat: &Rc<FinCategory>,
    variant: EmbeddingVariant,
    max_level: usize,
) -> Result<EmbeddingReport, SpanError> {
    let triple = match variant {
        EmbeddingVariant::BackwardIso => Triple::with_iso_egressives(Rc::clone(cat)),
        EmbeddingVariant::ForwardIso => Triple::with_iso_ingressives(Rc::clone(cat)),
    };
    super::complex::check_adequate(&triple)?;
    let mut levels = Vec::with_capacity(max_level + 1);
    for n in 0..=max_level {
        levels.push(check_level(cat, &triple, variant, n)?);
    }
    Ok(EmbeddingReport { variant, levels })
}

fn check_level(
    cat: &Rc<FinCategory>,
    triple: &Triple,
    variant: EmbeddingVariant,
    n: usize,
) -> Result<EmbeddingLevel, SpanError> {
    let poset = IntervalPoset::new(n)?;
    let sigma_cat = interval_category(n)?;
    let chain_cat: Rc<FinCategory> = match variant {
        EmbeddingVariant::BackwardIso => Rc::new(crate::fincat::chain_poset(n)),
        EmbeddingVariant::ForwardIso => Rc::new(crate::fincat::chain_poset(n).opposite()),
    };
    // The retraction r: Σₙ → chain and the section i: chain → Σₙ.
    let rmap: Vec<ObjId> = poset
        .elements()
        .iter()
        .map(|&(i, j)| match variant {
            EmbeddingVariant::BackwardIso => ObjId(i),
            EmbeddingVariant::ForwardIso => ObjId(j),
        })
        .collect();
    let imap: Vec<ObjId> = (0..=n)
        .map(|j| {
            let e = match variant {
                EmbeddingVariant::BackwardIso => (j, n),
                EmbeddingVariant::ForwardIso => (0, j),
            };
            ObjId(poset.index_of(e).expect("interval in range"))
        })
        .collect();
    let retraction = poset_functor(&sigma_cat, &chain_cat, rmap);
    let section = poset_functor(&chain_cat, &sigma_cat, imap);
    // Source groupoid: all chain diagrams.  Destination: the span level.
    let source = DiagramGroupoid::all_diagrams(&chain_cat, cat);
    let members = enumerate_acart_level(triple, n)?;
    let dest = DiagramGroupoid::of_functors(&sigma_cat, cat, members);
    // The embedding on members and isomorphisms.
    let embed_member: Vec<usize> = source
        .members()
        .iter()
        .map(|f| {
            let image = f
                .compose(&retraction)
                .expect("retraction composes with chain diagrams");
            dest.index_of(&image)
                .expect("embedded diagrams are ambigressive cartesian")
        })
        .collect();
    let embed_iso: Vec<usize> = source
        .isos()
        .iter()
        .map(|iso| {
            let components: Vec<_> = retraction
                .obj_map()
                .iter()
                .map(|o| iso.components[o.0])
                .collect();
            dest.iso_index(
                embed_member[iso.src],
                embed_member[iso.dst],
                &components,
            )
            .expect("embedded isomorphisms are transports")
        })
        .collect();
    // Retraction on members and isomorphisms.
    let retract_member: Vec<usize> = dest
        .members()
        .iter()
        .map(|g| {
            let image = g
                .compose(&section)
                .expect("section composes with span diagrams");
            source
                .index_of(&image)
                .expect("restricted diagrams are chain diagrams")
        })
        .collect();
    let retraction_splits = {
        let members_fixed = (0..source.len()).all(|a| retract_member[embed_member[a]] == a);
        let isos_fixed = source.isos().iter().enumerate().all(|(k, iso)| {
            let embedded = dest.iso(embed_iso[k]);
            let back: Vec<_> = section
                .obj_map()
                .iter()
                .map(|o| embedded.components[o.0])
                .collect();
            back == iso.components
                && retract_member[embedded.src] == iso.src
                && retract_member[embedded.dst] == iso.dst
        });
        members_fixed && isos_fixed
    };
    let essentially_surjective = (0..dest.len())
        .all(|d| (0..source.len()).any(|a| dest.isomorphic(embed_member[a], d)));
    let fully_faithful = (0..source.len()).all(|a| {
        (0..source.len()).all(|b| {
            let src_hom = source.hom(a, b);
            let dst_hom = dest.hom(embed_member[a], embed_member[b]);
            if src_hom.len() != dst_hom.len() {
                return false;
            }
            // Injectivity: distinct isos have distinct images (they do,
            // since components are carried bijectively along r's image),
            // checked directly for good measure.
            let mut images: Vec<usize> = src_hom.iter().map(|&k| embed_iso[k]).collect();
            images.sort_unstable();
            images.dedup();
            images.len() == src_hom.len()
        })
    });
    Ok(EmbeddingLevel {
        level: n,
        retraction_splits,
        essentially_surjective,
        fully_faithful,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{finset_skeleton, terminal_category, walking_arrow, walking_iso};

    #[test]
    fn terminal_category_gives_singleton_levels() {
        let point = Rc::new(terminal_category());
        for variant in [EmbeddingVariant::BackwardIso, EmbeddingVariant::ForwardIso] {
            let report = equivalence_embedding(&point, variant, 3).unwrap();
            assert!(report.holds());
            assert_eq!(report.levels.len(), 4);
        }
    }

    #[test]
    fn walking_iso_embeds_essentially_surjectively_at_level_one() {
        // Every arrow of the walking isomorphism is invertible, so every
        // span is isomorphic to one with an identity backward leg.
        let iso = Rc::new(walking_iso());
        let report =
            equivalence_embedding(&iso, EmbeddingVariant::BackwardIso, 2).unwrap();
        assert!(report.holds(), "report: {report:?}");
    }

    #[test]
    fn walking_arrow_embeds_under_both_variants() {
        let arrow = Rc::new(walking_arrow());
        for variant in [EmbeddingVariant::BackwardIso, EmbeddingVariant::ForwardIso] {
            let report = equivalence_embedding(&arrow, variant, 2).unwrap();
            assert!(report.holds(), "variant {variant:?}: {report:?}");
        }
    }

    #[test]
    fn finite_sets_embed_up_to_level_two() {
        let fs = Rc::new(finset_skeleton(2).unwrap());
        for variant in [EmbeddingVariant::BackwardIso, EmbeddingVariant::ForwardIso] {
            let report = equivalence_embedding(&fs, variant, 2).unwrap();
            assert!(report.holds(), "variant {variant:?}: {report:?}");
        }
    }

    #[test]
    fn forward_variant_level_counts_match_the_opposite_chain() {
        // The forward-iso source groupoid is functors out of the opposite
        // chain, so its level-1 member count equals the morphism count.
        let arrow = Rc::new(walking_arrow());
        let chain_op = Rc::new(crate::fincat::chain_poset(1).opposite());
        let source = DiagramGroupoid::all_diagrams(&chain_op, &arrow);
        assert_eq!(source.len(), arrow.mor_count());
        let report =
            equivalence_embedding(&arrow, EmbeddingVariant::ForwardIso, 1).unwrap();
        assert!(report.holds());
    }
}
