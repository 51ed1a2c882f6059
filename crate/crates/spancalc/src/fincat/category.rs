//! Finite categories presented by total composition tables.

use std::collections::{BTreeMap, BTreeSet};
use std::rc::Rc;

use thiserror::Error;

/// Index of an object in a [`FinCategory`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ObjId(pub usize);

/// Index of a morphism in a [`FinCategory`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MorId(pub usize);

/// Errors raised while building or validating a finite category.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CategoryError {
    #[error("duplicate object name `{0}`")]
    DuplicateObject(String),
    #[error("duplicate morphism name `{0}`")]
    DuplicateMorphism(String),
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("unknown morphism `{0}`")]
    UnknownMorphism(String),
    #[error("morphism name `{0}` collides with a synthesized identity")]
    ReservedIdentityName(String),
    #[error("`{g}` and `{f}` are not composable (target of `{f}` is not source of `{g}`)")]
    NotComposable { g: String, f: String },
    #[error("declared composite `{g}` o `{f}` = `{h}` has mismatched endpoints")]
    CompositeEndpoints { g: String, f: String, h: String },
    #[error("conflicting composites for `{g}` o `{f}`: both `{old}` and `{new}`")]
    CompositeConflict {
        g: String,
        f: String,
        old: String,
        new: String,
    },
    #[error("missing composite for `{g}` o `{f}`")]
    MissingComposite { g: String, f: String },
    #[error(
        "associativity fails on `{h}` o `{g}` o `{f}`: bracketing left gives `{left}`, right gives `{right}`"
    )]
    NotAssociative {
        h: String,
        g: String,
        f: String,
        left: String,
        right: String,
    },
    #[error("morphism `{0}` is not invertible, so the category is not a groupoid")]
    NotGroupoid(String),
    #[error("morphism set is not closed under composition: `{g}` o `{f}` = `{h}` escapes it")]
    SubcategoryNotClosed { g: String, f: String, h: String },
    #[error("morphism set omits the identity of `{0}`")]
    SubcategoryMissingIdentity(String),
}

/// A finite category with named objects and morphisms and a total
/// composition table.
///
/// Identities are synthesized by the builder under the name `id_<object>`
/// and occupy the first morphism indices (identity of object `i` is
/// morphism `i`).  Instances can only be produced by [`CategoryBuilder`],
/// which guarantees the unit and associativity laws.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinCategory {
    object_names: Vec<String>,
    mor_names: Vec<String>,
    src: Vec<ObjId>,
    tgt: Vec<ObjId>,
    /// `compose[g][f]` is `g . f` when `tgt(f) == src(g)`, `None` otherwise.
    compose: Vec<Vec<Option<MorId>>>,
    /// `homs[x][y]` caches the morphisms from `x` to `y` in index order.
    homs: Vec<Vec<Vec<MorId>>>,
}

impl FinCategory {
    fn assemble(
        object_names: Vec<String>,
        mor_names: Vec<String>,
        src: Vec<ObjId>,
        tgt: Vec<ObjId>,
        compose: Vec<Vec<Option<MorId>>>,
    ) -> Self {
        let n = object_names.len();
        let mut homs = vec![vec![Vec::new(); n]; n];
        for m in 0..mor_names.len() {
            homs[src[m].0][tgt[m].0].push(MorId(m));
        }
        FinCategory {
            object_names,
            mor_names,
            src,
            tgt,
            compose,
            homs,
        }
    }

    pub fn object_count(&self) -> usize {
        self.object_names.len()
    }

    pub fn mor_count(&self) -> usize {
        self.mor_names.len()
    }

    pub fn objects(&self) -> impl DoubleEndedIterator<Item = ObjId> {
        (0..self.object_count()).map(ObjId)
    }

    pub fn morphisms(&self) -> impl DoubleEndedIterator<Item = MorId> {
        (0..self.mor_count()).map(MorId)
    }

    pub fn object_name(&self, o: ObjId) -> &str {
        &self.object_names[o.0]
    }

    pub fn mor_name(&self, m: MorId) -> &str {
        &self.mor_names[m.0]
    }

    /// Renders `name: src -> tgt`, for witnesses and error messages.
    pub fn mor_display(&self, m: MorId) -> String {
        format!(
            "{}: {} -> {}",
            self.mor_name(m),
            self.object_name(self.src(m)),
            self.object_name(self.tgt(m))
        )
    }

    pub fn find_object(&self, name: &str) -> Option<ObjId> {
        self.object_names.iter().position(|n| n == name).map(ObjId)
    }

    pub fn find_morphism(&self, name: &str) -> Option<MorId> {
        self.mor_names.iter().position(|n| n == name).map(MorId)
    }

    pub fn src(&self, m: MorId) -> ObjId {
        self.src[m.0]
    }

    pub fn tgt(&self, m: MorId) -> ObjId {
        self.tgt[m.0]
    }

    /// The identity of `o`; identities occupy the first indices.
    pub fn id(&self, o: ObjId) -> MorId {
        MorId(o.0)
    }

    pub fn is_identity(&self, m: MorId) -> bool {
        m.0 < self.object_count()
    }

    /// `g . f` (first `f`, then `g`), or `None` when not composable.
    pub fn compose(&self, g: MorId, f: MorId) -> Option<MorId> {
        self.compose[g.0][f.0]
    }

    pub fn hom(&self, x: ObjId, y: ObjId) -> &[MorId] {
        &self.homs[x.0][y.0]
    }

    pub fn morphisms_from(&self, x: ObjId) -> Vec<MorId> {
        self.morphisms().filter(|&m| self.src(m) == x).collect()
    }

    pub fn morphisms_to(&self, y: ObjId) -> Vec<MorId> {
        self.morphisms().filter(|&m| self.tgt(m) == y).collect()
    }

    /// The two-sided inverse of `m`, if one exists.
    pub fn inverse(&self, m: MorId) -> Option<MorId> {
        let (x, y) = (self.src(m), self.tgt(m));
        self.hom(y, x).iter().copied().find(|&g| {
            self.compose(g, m) == Some(self.id(x)) && self.compose(m, g) == Some(self.id(y))
        })
    }

    pub fn is_iso(&self, m: MorId) -> bool {
        self.inverse(m).is_some()
    }

    pub fn isos(&self) -> BTreeSet<MorId> {
        self.morphisms().filter(|&m| self.is_iso(m)).collect()
    }

    pub fn is_groupoid(&self) -> bool {
        self.morphisms().all(|m| self.is_iso(m))
    }

    /// The wide subcategory on a morphism set closed under composition and
    /// containing all identities.  Objects and names are inherited.
    pub fn subcategory(self: &Rc<Self>, mors: &BTreeSet<MorId>) -> Result<Subcategory, CategoryError> {
        for o in self.objects() {
            if !mors.contains(&self.id(o)) {
                return Err(CategoryError::SubcategoryMissingIdentity(
                    self.object_name(o).to_owned(),
                ));
            }
        }
        for &g in mors {
            for &f in mors {
                if let Some(h) = self.compose(g, f) {
                    if !mors.contains(&h) {
                        return Err(CategoryError::SubcategoryNotClosed {
                            g: self.mor_name(g).to_owned(),
                            f: self.mor_name(f).to_owned(),
                            h: self.mor_name(h).to_owned(),
                        });
                    }
                }
            }
        }
        // Identities come first in `mors` because identity indices are the
        // smallest, so the builder's reserved-name convention is preserved.
        let embed: Vec<MorId> = mors.iter().copied().collect();
        let reindex: BTreeMap<MorId, MorId> = embed
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, MorId(new)))
            .collect();
        let cat = FinCategory::assemble(
            self.object_names.clone(),
            embed.iter().map(|&m| self.mor_name(m).to_owned()).collect(),
            embed.iter().map(|&m| self.src(m)).collect(),
            embed.iter().map(|&m| self.tgt(m)).collect(),
            embed
                .iter()
                .map(|&g| {
                    embed
                        .iter()
                        .map(|&f| self.compose(g, f).map(|h| reindex[&h]))
                        .collect()
                })
                .collect(),
        );
        Ok(Subcategory {
            ambient: Rc::clone(self),
            cat: Rc::new(cat),
            mor_embed: embed,
            mor_reindex: reindex,
        })
    }

    /// The maximal subgroupoid: all objects, only invertible morphisms.
    pub fn core(self: &Rc<Self>) -> Subcategory {
        self.subcategory(&self.isos())
            .expect("isomorphisms always contain identities and compose")
    }

    /// The opposite category; morphism names are reused.
    pub fn opposite(&self) -> FinCategory {
        let m = self.mor_count();
        let mut compose = vec![vec![None; m]; m];
        for g in 0..m {
            for f in 0..m {
                // In the opposite, g after f corresponds to f after g here.
                compose[g][f] = self.compose[f][g];
            }
        }
        FinCategory::assemble(
            self.object_names.clone(),
            self.mor_names.clone(),
            self.tgt.clone(),
            self.src.clone(),
            compose,
        )
    }
}

/// A wide (or morphism-restricted) subcategory together with the
/// embedding data tying its morphism indices to the ambient category.
#[derive(Clone, Debug)]
pub struct Subcategory {
    pub ambient: Rc<FinCategory>,
    pub cat: Rc<FinCategory>,
    /// Subcategory morphism index -> ambient morphism.
    pub mor_embed: Vec<MorId>,
    /// Ambient morphism -> subcategory index (members only).
    pub mor_reindex: BTreeMap<MorId, MorId>,
}

impl Subcategory {
    pub fn to_ambient(&self, m: MorId) -> MorId {
        self.mor_embed[m.0]
    }

    pub fn from_ambient(&self, m: MorId) -> Option<MorId> {
        self.mor_reindex.get(&m).copied()
    }

    pub fn contains(&self, m: MorId) -> bool {
        self.mor_reindex.contains_key(&m)
    }
}

/// A finite category in which every morphism is invertible.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Groupoid(Rc<FinCategory>);

impl Groupoid {
    pub fn new(cat: Rc<FinCategory>) -> Result<Self, CategoryError> {
        if let Some(bad) = cat.morphisms().find(|&m| !cat.is_iso(m)) {
            return Err(CategoryError::NotGroupoid(cat.mor_name(bad).to_owned()));
        }
        Ok(Groupoid(cat))
    }

    pub fn category(&self) -> &Rc<FinCategory> {
        &self.0
    }
}

/// Incremental builder for [`FinCategory`].
///
/// Identities are synthesized automatically as `id_<object>` and their
/// composites are filled in by the unit laws; all other composites of
/// non-identity morphisms must be declared explicitly.  [`Self::build`]
/// checks totality and associativity and reports the first violation.
#[derive(Default)]
pub struct CategoryBuilder {
    objects: Vec<String>,
    morphisms: Vec<(String, String, String)>,
    composites: Vec<(String, String, String)>,
}

impl CategoryBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn object(&mut self, name: &str) -> &mut Self {
        self.objects.push(name.to_owned());
        self
    }

    pub fn morphism(&mut self, name: &str, src: &str, tgt: &str) -> &mut Self {
        self.morphisms
            .push((name.to_owned(), src.to_owned(), tgt.to_owned()));
        self
    }

    /// Declares `g . f = h` (apply `f` first).
    pub fn composite(&mut self, g: &str, f: &str, h: &str) -> &mut Self {
        self.composites
            .push((g.to_owned(), f.to_owned(), h.to_owned()));
        self
    }

    pub fn build(&self) -> Result<FinCategory, CategoryError> {
        let mut object_index = BTreeMap::new();
        for (i, name) in self.objects.iter().enumerate() {
            if object_index.insert(name.clone(), ObjId(i)).is_some() {
                return Err(CategoryError::DuplicateObject(name.clone()));
            }
        }

        let mut mor_names: Vec<String> = self.objects.iter().map(|o| format!("id_{o}")).collect();
        let mut src: Vec<ObjId> = (0..self.objects.len()).map(ObjId).collect();
        let mut tgt = src.clone();
        let mut mor_index: BTreeMap<String, MorId> = mor_names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), MorId(i)))
            .collect();
        for (name, s, t) in &self.morphisms {
            if name.starts_with("id_") {
                return Err(CategoryError::ReservedIdentityName(name.clone()));
            }
            let s = *object_index
                .get(s)
                .ok_or_else(|| CategoryError::UnknownObject(s.clone()))?;
            let t = *object_index
                .get(t)
                .ok_or_else(|| CategoryError::UnknownObject(t.clone()))?;
            let id = MorId(mor_names.len());
            if mor_index.insert(name.clone(), id).is_some() {
                return Err(CategoryError::DuplicateMorphism(name.clone()));
            }
            mor_names.push(name.clone());
            src.push(s);
            tgt.push(t);
        }

        let m = mor_names.len();
        let mut compose: Vec<Vec<Option<MorId>>> = vec![vec![None; m]; m];
        // Unit laws populate every composite involving an identity.
        for g in 0..m {
            let g_id = MorId(g);
            compose[g][src[g].0] = Some(g_id);
            compose[tgt[g].0][g] = Some(g_id);
        }
        for (g_name, f_name, h_name) in &self.composites {
            let g = *mor_index
                .get(g_name)
                .ok_or_else(|| CategoryError::UnknownMorphism(g_name.clone()))?;
            let f = *mor_index
                .get(f_name)
                .ok_or_else(|| CategoryError::UnknownMorphism(f_name.clone()))?;
            let h = *mor_index
                .get(h_name)
                .ok_or_else(|| CategoryError::UnknownMorphism(h_name.clone()))?;
            if tgt[f.0] != src[g.0] {
                return Err(CategoryError::NotComposable {
                    g: g_name.clone(),
                    f: f_name.clone(),
                });
            }
            if src[h.0] != src[f.0] || tgt[h.0] != tgt[g.0] {
                return Err(CategoryError::CompositeEndpoints {
                    g: g_name.clone(),
                    f: f_name.clone(),
                    h: h_name.clone(),
                });
            }
            match compose[g.0][f.0] {
                Some(old) if old != h => {
                    return Err(CategoryError::CompositeConflict {
                        g: g_name.clone(),
                        f: f_name.clone(),
                        old: mor_names[old.0].clone(),
                        new: h_name.clone(),
                    });
                }
                _ => compose[g.0][f.0] = Some(h),
            }
        }

        // Totality: every composable pair must have an entry.
        for g in 0..m {
            for f in 0..m {
                if tgt[f] == src[g] && compose[g][f].is_none() {
                    return Err(CategoryError::MissingComposite {
                        g: mor_names[g].clone(),
                        f: mor_names[f].clone(),
                    });
                }
            }
        }

        // Associativity, checked on every composable triple.
        for f in 0..m {
            for g in 0..m {
                if tgt[f] != src[g] {
                    continue;
                }
                let gf = compose[g][f].unwrap();
                for h in 0..m {
                    if tgt[g] != src[h] {
                        continue;
                    }
                    let hg = compose[h][g].unwrap();
                    let left = compose[hg.0][f].unwrap();
                    let right = compose[h][gf.0].unwrap();
                    if left != right {
                        return Err(CategoryError::NotAssociative {
                            h: mor_names[h].clone(),
                            g: mor_names[g].clone(),
                            f: mor_names[f].clone(),
                            left: mor_names[left.0].clone(),
                            right: mor_names[right.0].clone(),
                        });
                    }
                }
            }
        }

        Ok(FinCategory::assemble(
            self.objects.clone(),
            mor_names,
            src,
            tgt,
            compose,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::examples::{divisor_lattice, finset_skeleton, walking_iso};

    #[test]
    fn builder_rejects_missing_composite() {
        let mut b = CategoryBuilder::new();
        b.object("a").object("b").object("c");
        b.morphism("f", "a", "b").morphism("g", "b", "c");
        let err = b.build().unwrap_err();
        assert_eq!(
            err,
            CategoryError::MissingComposite {
                g: "g".into(),
                f: "f".into()
            }
        );
    }

    #[test]
    fn builder_rejects_nonassociative_table() {
        // Two parallel endomorphisms with a composition table that breaks
        // associativity: u.u = id but u.(u.u) would need u.id = u, while
        // (u.u).u = id.u = u -- so instead break it via two generators.
        let mut b = CategoryBuilder::new();
        b.object("x");
        b.morphism("u", "x", "x").morphism("v", "x", "x");
        // u.u = v, u.v = v, v.u = id, v.v = v  =>  (u.u).u = v.u = id
        // but u.(u.u) = u.v = v.
        b.composite("u", "u", "v")
            .composite("u", "v", "v")
            .composite("v", "u", "id_x")
            .composite("v", "v", "v");
        let err = b.build().unwrap_err();
        assert!(matches!(err, CategoryError::NotAssociative { .. }), "{err}");
    }

    #[test]
    fn builder_rejects_reserved_identity_names() {
        let mut b = CategoryBuilder::new();
        b.object("a");
        b.morphism("id_a", "a", "a");
        assert_eq!(
            b.build().unwrap_err(),
            CategoryError::ReservedIdentityName("id_a".into())
        );
    }

    #[test]
    fn walking_iso_is_a_groupoid_and_equals_its_core() {
        let c = Rc::new(walking_iso());
        assert!(c.is_groupoid());
        let core = c.core();
        assert_eq!(core.cat.mor_count(), c.mor_count());
        assert_eq!(
            c.inverse(c.find_morphism("u").unwrap()),
            c.find_morphism("v")
        );
    }

    #[test]
    fn finset_skeleton_counts_match_function_counts() {
        // Functions [a] -> [b] number b^a (with 0^0 = 1); sizes 0..=2 give
        // 3 + 3 + 5 = 11 morphisms, and sizes 0..=3 give 60.
        assert_eq!(finset_skeleton(2).unwrap().mor_count(), 11);
        assert_eq!(finset_skeleton(3).unwrap().mor_count(), 60);
    }

    #[test]
    fn finset_core_is_identities_and_the_swap() {
        let c = Rc::new(finset_skeleton(2).unwrap());
        let isos = c.isos();
        assert_eq!(isos.len(), 4, "three identities plus the swap on [2]");
        let core = c.core();
        assert_eq!(core.cat.mor_count(), 4);
        let swap = c.find_morphism("f2to2_10").unwrap();
        assert!(isos.contains(&swap));
        assert_eq!(c.compose(swap, swap), Some(c.id(c.src(swap))));
    }

    #[test]
    fn divisor_lattice_12_has_six_objects_and_eighteen_arrows() {
        let c = divisor_lattice(12);
        assert_eq!(c.object_count(), 6);
        assert_eq!(c.mor_count(), 18);
    }

    #[test]
    fn opposite_is_involutive_and_swaps_endpoints() {
        let c = finset_skeleton(2).unwrap();
        let op = c.opposite();
        assert_eq!(op.opposite(), c);
        let f = c.find_morphism("f0to1_e").unwrap();
        assert_eq!(op.src(f), c.tgt(f));
        assert_eq!(op.tgt(f), c.src(f));
    }

    #[test]
    fn subcategory_rejects_unclosed_morphism_sets() {
        let c = Rc::new(divisor_lattice(4)); // chain 1 | 2 | 4
        let mut mors: BTreeSet<MorId> = c.objects().map(|o| c.id(o)).collect();
        mors.insert(c.find_morphism("le_1_2").unwrap());
        mors.insert(c.find_morphism("le_2_4").unwrap());
        let err = c.subcategory(&mors).unwrap_err();
        assert!(matches!(err, CategoryError::SubcategoryNotClosed { .. }), "{err}");
        mors.insert(c.find_morphism("le_1_4").unwrap());
        assert!(c.subcategory(&mors).is_ok());
    }
}
