//! Triples of categories with distinguished morphism classes, adequacy,
//! and 1-categorical (co)cartesianness.

use std::collections::BTreeSet;
use std::rc::Rc;

use thiserror::Error;

use super::category::{FinCategory, MorId, Subcategory};
use super::functor::FinFunctor;
use super::pullback::{compute_pullback, is_pullback_square, ChoiceStrategy, PullbackSquare};

/// Errors raised while constructing triples or triple functors.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum TripleError {
    #[error("{class} class omits the isomorphism `{mor}`")]
    ClassMissingIso { class: &'static str, mor: String },
    #[error("{class} class is not closed under composition: `{g}` o `{f}` = `{h}` escapes it")]
    ClassNotClosed {
        class: &'static str,
        g: String,
        f: String,
        h: String,
    },
    #[error("functor endpoints do not match the given triples")]
    CategoryMismatch,
    #[error("image of the {class} morphism `{mor}` is not {class}")]
    ClassNotPreserved { class: &'static str, mor: String },
    #[error(
        "ambigressive pullback over (`{f}`, `{g}`) with apex legs (`{p}`, `{q}`) is not sent to a pullback"
    )]
    AmbigressivePullbackNotPreserved {
        f: String,
        g: String,
        p: String,
        q: String,
    },
}

/// A category with two wide subcategories of distinguished morphisms:
/// the ingressives (drawn horizontally) and the egressives (vertical).
///
/// Both classes must contain every isomorphism and be closed under
/// composition.  Each triple also fixes a deterministic pullback-choice
/// strategy so that span composition over it is reproducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triple {
    cat: Rc<FinCategory>,
    ingressive: BTreeSet<MorId>,
    egressive: BTreeSet<MorId>,
    choice: ChoiceStrategy,
}

impl Triple {
    pub fn new(
        cat: Rc<FinCategory>,
        ingressive: BTreeSet<MorId>,
        egressive: BTreeSet<MorId>,
    ) -> Result<Self, TripleError> {
        for (class, mors) in [("ingressive", &ingressive), ("egressive", &egressive)] {
            for m in cat.isos() {
                if !mors.contains(&m) {
                    return Err(TripleError::ClassMissingIso {
                        class,
                        mor: cat.mor_name(m).to_owned(),
                    });
                }
            }
            for &g in mors.iter() {
                for &f in mors.iter() {
                    if let Some(h) = cat.compose(g, f) {
                        if !mors.contains(&h) {
                            return Err(TripleError::ClassNotClosed {
                                class,
                                g: cat.mor_name(g).to_owned(),
                                f: cat.mor_name(f).to_owned(),
                                h: cat.mor_name(h).to_owned(),
                            });
                        }
                    }
                }
            }
        }
        Ok(Triple {
            cat,
            ingressive,
            egressive,
            choice: ChoiceStrategy::default(),
        })
    }

    /// The maximal triple `(C, C, C)`.
    pub fn all(cat: Rc<FinCategory>) -> Self {
        let mors: BTreeSet<MorId> = cat.morphisms().collect();
        Triple::new(cat, mors.clone(), mors).expect("all morphisms form a triple")
    }

    /// The triple `(C, C, C-isos)`, which is adequate for any `C`.
    pub fn with_iso_egressives(cat: Rc<FinCategory>) -> Self {
        let ing: BTreeSet<MorId> = cat.morphisms().collect();
        let egr = cat.isos();
        Triple::new(cat, ing, egr).expect("isomorphisms form a triple class")
    }

    /// The triple `(C, C-isos, C)`.
    pub fn with_iso_ingressives(cat: Rc<FinCategory>) -> Self {
        let ing = cat.isos();
        let egr: BTreeSet<MorId> = cat.morphisms().collect();
        Triple::new(cat, ing, egr).expect("isomorphisms form a triple class")
    }

    pub fn with_choice(mut self, choice: ChoiceStrategy) -> Self {
        self.choice = choice;
        self
    }

    pub fn cat(&self) -> &FinCategory {
        &self.cat
    }

    pub fn cat_rc(&self) -> &Rc<FinCategory> {
        &self.cat
    }

    pub fn choice(&self) -> ChoiceStrategy {
        self.choice
    }

    pub fn is_ingressive(&self, m: MorId) -> bool {
        self.ingressive.contains(&m)
    }

    pub fn is_egressive(&self, m: MorId) -> bool {
        self.egressive.contains(&m)
    }

    pub fn ingressives(&self) -> &BTreeSet<MorId> {
        &self.ingressive
    }

    pub fn egressives(&self) -> &BTreeSet<MorId> {
        &self.egressive
    }

    /// The wide subcategory on the ingressive morphisms.
    pub fn ingressive_subcategory(&self) -> Subcategory {
        self.cat
            .subcategory(&self.ingressive)
            .expect("triple classes are validated at construction")
    }

    /// The wide subcategory on the egressive morphisms.
    pub fn egressive_subcategory(&self) -> Subcategory {
        self.cat
            .subcategory(&self.egressive)
            .expect("triple classes are validated at construction")
    }

    /// The chosen pullback of the cospan `f -> . <- g`, under this
    /// triple's recorded choice strategy.
    pub fn pullback(&self, f: MorId, g: MorId) -> Option<PullbackSquare> {
        compute_pullback(&self.cat, f, g, self.choice)
    }

    /// Is the square with bottom `f`, right `g`, left `p`, top `q` an
    /// ambigressive pullback?  Horizontal arrows (`f`, `q`) must be
    /// ingressive, vertical arrows (`g`, `p`) egressive, and the square a
    /// pullback.
    pub fn is_ambigressive_pullback(&self, f: MorId, g: MorId, p: MorId, q: MorId) -> bool {
        self.is_ingressive(f)
            && self.is_ingressive(q)
            && self.is_egressive(g)
            && self.is_egressive(p)
            && is_pullback_square(&self.cat, f, g, p, q)
    }

    /// The same data with ingressives and egressives swapped, on the
    /// opposite category (used for the dual/backward constructions).
    pub fn opposite(&self) -> Triple {
        Triple {
            cat: Rc::new(self.cat.opposite()),
            ingressive: self.egressive.clone(),
            egressive: self.ingressive.clone(),
            choice: self.choice,
        }
    }
}

/// A pullback-stability violation: the square over the ambigressive
/// cospan `(f, g)` with legs `(to_f_source, to_g_source)` is a pullback,
/// but the leg named by `class` is not in that class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityFailure {
    pub f: MorId,
    pub g: MorId,
    pub to_f_source: MorId,
    pub to_g_source: MorId,
    pub class: &'static str,
}

/// Outcome of the adequacy check, with witnesses for both clauses.
#[derive(Clone, Debug, Default)]
pub struct AdequacyReport {
    /// Ambigressive cospans `(f ingressive, g egressive)` with no pullback.
    pub missing_pullbacks: Vec<(MorId, MorId)>,
    /// Pullback squares over ambigressive cospans with a mis-classed leg.
    pub stability_failures: Vec<StabilityFailure>,
}

impl AdequacyReport {
    pub fn holds(&self) -> bool {
        self.missing_pullbacks.is_empty() && self.stability_failures.is_empty()
    }

    pub fn describe(&self, cat: &FinCategory) -> String {
        if self.holds() {
            return "adequate".to_owned();
        }
        let mut lines = Vec::new();
        for &(f, g) in &self.missing_pullbacks {
            lines.push(format!(
                "no pullback of ({}, {})",
                cat.mor_display(f),
                cat.mor_display(g)
            ));
        }
        for s in &self.stability_failures {
            lines.push(format!(
                "pullback of ({}, {}) via legs ({}, {}) has a non-{} leg",
                cat.mor_display(s.f),
                cat.mor_display(s.g),
                cat.mor_display(s.to_f_source),
                cat.mor_display(s.to_g_source),
                s.class
            ));
        }
        lines.join("; ")
    }
}

/// Checks that the triple is adequate: (1) every cospan of an ingressive
/// and an egressive has a pullback, and (2) every pullback square over
/// such a cospan again has an ingressive top and an egressive side (the
/// weakened stability condition, quantifying over all pullback squares).
pub fn is_adequate(t: &Triple) -> AdequacyReport {
    let c = t.cat();
    let mut report = AdequacyReport::default();
    for &f in t.ingressives() {
        for &g in t.egressives() {
            if c.tgt(f) != c.tgt(g) {
                continue;
            }
            if t.pullback(f, g).is_none() {
                report.missing_pullbacks.push((f, g));
            }
            for w in c.objects() {
                for &p in c.hom(w, c.src(f)) {
                    for &q in c.hom(w, c.src(g)) {
                        if !is_pullback_square(c, f, g, p, q) {
                            continue;
                        }
                        if !t.is_egressive(p) {
                            report.stability_failures.push(StabilityFailure {
                                f,
                                g,
                                to_f_source: p,
                                to_g_source: q,
                                class: "egressive",
                            });
                        }
                        if !t.is_ingressive(q) {
                            report.stability_failures.push(StabilityFailure {
                                f,
                                g,
                                to_f_source: p,
                                to_g_source: q,
                                class: "ingressive",
                            });
                        }
                    }
                }
            }
        }
    }
    report
}

/// A functor of triples: ingressives map to ingressives, egressives to
/// egressives, and ambigressive pullback squares to pullback squares.
/// All three conditions are checked exhaustively at construction.
#[derive(Clone, Debug)]
pub struct TripleFunctor {
    source: Triple,
    target: Triple,
    functor: FinFunctor,
}

impl TripleFunctor {
    pub fn new(source: Triple, target: Triple, functor: FinFunctor) -> Result<Self, TripleError> {
        if functor.source() != source.cat() || functor.target() != target.cat() {
            return Err(TripleError::CategoryMismatch);
        }
        for &m in source.ingressives() {
            if !target.is_ingressive(functor.apply_mor(m)) {
                return Err(TripleError::ClassNotPreserved {
                    class: "ingressive",
                    mor: source.cat().mor_name(m).to_owned(),
                });
            }
        }
        for &m in source.egressives() {
            if !target.is_egressive(functor.apply_mor(m)) {
                return Err(TripleError::ClassNotPreserved {
                    class: "egressive",
                    mor: source.cat().mor_name(m).to_owned(),
                });
            }
        }
        let c = source.cat();
        let d = target.cat();
        for &f in source.ingressives() {
            for &g in source.egressives() {
                if c.tgt(f) != c.tgt(g) {
                    continue;
                }
                for w in c.objects() {
                    for &p in c.hom(w, c.src(f)) {
                        for &q in c.hom(w, c.src(g)) {
                            if !source.is_ambigressive_pullback(f, g, p, q) {
                                continue;
                            }
                            let fp = |m: MorId| functor.apply_mor(m);
                            if !is_pullback_square(d, fp(f), fp(g), fp(p), fp(q)) {
                                return Err(TripleError::AmbigressivePullbackNotPreserved {
                                    f: c.mor_name(f).to_owned(),
                                    g: c.mor_name(g).to_owned(),
                                    p: c.mor_name(p).to_owned(),
                                    q: c.mor_name(q).to_owned(),
                                });
                            }
                        }
                    }
                }
            }
        }
        Ok(TripleFunctor {
            source,
            target,
            functor,
        })
    }

    pub fn source(&self) -> &Triple {
        &self.source
    }

    pub fn target(&self) -> &Triple {
        &self.target
    }

    pub fn functor(&self) -> &FinFunctor {
        &self.functor
    }

    /// The restriction `p_dag : C_ingressive -> D_ingressive`, together
    /// with the two subcategory embeddings.
    pub fn ingressive_restriction(&self) -> (FinFunctor, Subcategory, Subcategory) {
        self.restriction(
            self.source.ingressive_subcategory(),
            self.target.ingressive_subcategory(),
        )
    }

    /// The restriction `p^dag : C_egressive -> D_egressive`.
    pub fn egressive_restriction(&self) -> (FinFunctor, Subcategory, Subcategory) {
        self.restriction(
            self.source.egressive_subcategory(),
            self.target.egressive_subcategory(),
        )
    }

    fn restriction(&self, sub_src: Subcategory, sub_tgt: Subcategory) -> (FinFunctor, Subcategory, Subcategory) {
        let obj_map = sub_src.cat.objects().map(|o| self.functor.apply_obj(o)).collect();
        let mor_map = sub_src
            .cat
            .morphisms()
            .map(|m| {
                sub_tgt
                    .from_ambient(self.functor.apply_mor(sub_src.to_ambient(m)))
                    .expect("triple functor preserves the class")
            })
            .collect();
        let f = FinFunctor::new(
            Rc::clone(&sub_src.cat),
            Rc::clone(&sub_tgt.cat),
            obj_map,
            mor_map,
        )
        .expect("restriction of a functor is a functor");
        (f, sub_src, sub_tgt)
    }
}

/// Decides whether `f` is `p`-cocartesian in the strict 1-categorical
/// sense: for every `f2 : src f -> c2` and every `h : p(tgt f) -> p(c2)`
/// with `h . p(f) = p(f2)`, there is a unique `g : tgt f -> c2` with
/// `p(g) = h` and `g . f = f2`.
pub fn is_cocartesian_1cat(p: &FinFunctor, f: MorId) -> bool {
    let c = p.source();
    let d = p.target();
    let pf = p.apply_mor(f);
    for f2 in c.morphisms_from(c.src(f)) {
        for &h in d.hom(d.tgt(pf), d.tgt(p.apply_mor(f2))) {
            if d.compose(h, pf) != Some(p.apply_mor(f2)) {
                continue;
            }
            let count = c
                .hom(c.tgt(f), c.tgt(f2))
                .iter()
                .filter(|&&g| p.apply_mor(g) == h && c.compose(g, f) == Some(f2))
                .count();
            if count != 1 {
                return false;
            }
        }
    }
    true
}

/// Dual of [`is_cocartesian_1cat`]: `f` is `p`-cartesian when every
/// `f2 : c2 -> tgt f` and `h : p(c2) -> p(src f)` with `p(f) . h = p(f2)`
/// admit a unique `g : c2 -> src f` over `h` with `f . g = f2`.
pub fn is_cartesian_1cat(p: &FinFunctor, f: MorId) -> bool {
    let c = p.source();
    let d = p.target();
    let pf = p.apply_mor(f);
    for f2 in c.morphisms_to(c.tgt(f)) {
        for &h in d.hom(d.src(p.apply_mor(f2)), d.src(pf)) {
            if d.compose(pf, h) != Some(p.apply_mor(f2)) {
                continue;
            }
            let count = c
                .hom(c.src(f2), c.src(f))
                .iter()
                .filter(|&&g| p.apply_mor(g) == h && c.compose(f, g) == Some(f2))
                .count();
            if count != 1 {
                return false;
            }
        }
    }
    true
}
