//! Backtracking enumeration of diagrams indexed by finite posets.
//!
//! Diagrams are assigned element by element along a linear extension of the
//! shape poset.  Placing an element fixes its image object together with the
//! images of the cover arrows into it; the images of all longer arrows are
//! derived by composition through the cover sources and checked for
//! consistency, so a completed assignment is a functor by construction.  An
//! acceptance callback sees each partial diagram as soon as an element is
//! placed, allowing searches to prune early (for instance on the class
//! membership of a freshly placed leg).

use std::collections::BTreeMap;
use std::rc::Rc;

use crate::fincat::{FinCategory, FinFunctor, MorId, ObjId};

/// A finite poset category prepared for diagram search: the full order
/// relation, the cover relation, and a linear extension.
#[derive(Debug)]
pub struct PosetShape {
    cat: Rc<FinCategory>,
    leq: Vec<Vec<bool>>,
    covers_into: Vec<Vec<usize>>,
    order: Vec<usize>,
}

impl PosetShape {
    /// Prepare a thin, skeletal category (a poset) for diagram search.
    ///
    /// Panics if some hom-set has more than one element or if the order
    /// fails antisymmetry; shapes are always built internally from posets,
    /// so a violation is a programming error.
    pub fn new(cat: Rc<FinCategory>) -> Self {
        let n = cat.object_count();
        let mut leq = vec![vec![false; n]; n];
        for a in 0..n {
            for b in 0..n {
                let hom = cat.hom(ObjId(a), ObjId(b));
                assert!(hom.len() <= 1, "diagram shapes must be thin categories");
                leq[a][b] = !hom.is_empty();
            }
        }
        for a in 0..n {
            assert!(leq[a][a], "every object must carry its identity");
            for b in 0..n {
                assert!(
                    a == b || !(leq[a][b] && leq[b][a]),
                    "diagram shapes must be skeletal (antisymmetric)"
                );
            }
        }
        let mut covers_into = vec![Vec::new(); n];
        for b in 0..n {
            for a in 0..n {
                if a == b || !leq[a][b] {
                    continue;
                }
                let between = (0..n).any(|c| c != a && c != b && leq[a][c] && leq[c][b]);
                if !between {
                    covers_into[b].push(a);
                }
            }
        }
        let mut order = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        while order.len() < n {
            let next = (0..n)
                .find(|&e| !placed[e] && (0..n).all(|u| u == e || !leq[u][e] || placed[u]))
                .expect("a finite poset always has a minimal unplaced element");
            placed[next] = true;
            order.push(next);
        }
        PosetShape {
            cat,
            leq,
            covers_into,
            order,
        }
    }

    pub fn cat(&self) -> &Rc<FinCategory> {
        &self.cat
    }

    /// Number of elements (objects of the shape).
    pub fn len(&self) -> usize {
        self.leq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leq.is_empty()
    }

    /// Order relation between elements, by object index.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    /// The elements covering into `e` (sources of cover arrows ending at
    /// `e`), in ascending index order.
    pub fn covers_into(&self, e: usize) -> &[usize] {
        &self.covers_into[e]
    }

    /// A linear extension: every element appears after all its strict
    /// predecessors.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// The unique arrow `a → b`; panics unless `a ≤ b`.
    pub fn arrow(&self, a: usize, b: usize) -> MorId {
        self.cat.hom(ObjId(a), ObjId(b))[0]
    }
}

/// The state of an in-progress diagram assignment, exposed to acceptance
/// callbacks.  `object(e)` is `Some` once element `e` has been placed, and
/// `arrow(a, b)` holds the image of the unique shape arrow `a → b` for every
/// placed pair `a < b`.
#[derive(Debug)]
pub struct PartialDiagram {
    objects: Vec<Option<ObjId>>,
    arrows: BTreeMap<(usize, usize), MorId>,
}

impl PartialDiagram {
    pub fn object(&self, e: usize) -> Option<ObjId> {
        self.objects[e]
    }

    pub fn arrow(&self, a: usize, b: usize) -> Option<MorId> {
        self.arrows.get(&(a, b)).copied()
    }
}

/// Enumerate all functors from the shape poset into the target category, in
/// a canonical deterministic order (objects ascending, then cover-arrow
/// choices in hom-list order along the linear extension).
///
/// The `accept` callback runs after each element is placed and all arrows
/// into it have been derived; returning `false` prunes the branch.  The
/// returned functors are exactly those whose every prefix was accepted.
pub fn enumerate_poset_functors<F>(
    shape: &PosetShape,
    target: &Rc<FinCategory>,
    mut accept: F,
) -> Vec<FinFunctor>
where
    F: FnMut(&PartialDiagram, usize) -> bool,
{
    let mut partial = PartialDiagram {
        objects: vec![None; shape.len()],
        arrows: BTreeMap::new(),
    };
    let mut out = Vec::new();
    place(shape, target, &mut partial, 0, &mut accept, &mut out);
    out
}

fn place<F>(
    shape: &PosetShape,
    target: &Rc<FinCategory>,
    partial: &mut PartialDiagram,
    depth: usize,
    accept: &mut F,
    out: &mut Vec<FinFunctor>,
) where
    F: FnMut(&PartialDiagram, usize) -> bool,
{
    if depth == shape.order().len() {
        out.push(emit(shape, target, partial));
        return;
    }
    let e = shape.order()[depth];
    let sources = shape.covers_into(e);
    for cand in target.objects() {
        let homs: Vec<Vec<MorId>> = sources
            .iter()
            .map(|&s| {
                target
                    .hom(partial.objects[s].expect("cover sources precede"), cand)
                    .to_vec()
            })
            .collect();
        if homs.iter().any(|h| h.is_empty()) {
            continue;
        }
        let mut pick = vec![0usize; sources.len()];
        loop {
            partial.objects[e] = Some(cand);
            let mut inserted: Vec<(usize, usize)> = Vec::new();
            for (si, &s) in sources.iter().enumerate() {
                partial.arrows.insert((s, e), homs[si][pick[si]]);
                inserted.push((s, e));
            }
            let consistent = derive_arrows(shape, target, partial, depth, e, &mut inserted);
            if consistent && accept(partial, e) {
                place(shape, target, partial, depth + 1, accept, out);
            }
            for pair in inserted.drain(..) {
                partial.arrows.remove(&pair);
            }
            partial.objects[e] = None;
            if !bump(&mut pick, &homs) {
                break;
            }
        }
    }
}

/// Derive the images of all non-cover arrows into `e` by composing through
/// the cover sources, recording them in `partial` and `inserted`.  Returns
/// `false` when two routes disagree.
fn derive_arrows(
    shape: &PosetShape,
    target: &FinCategory,
    partial: &mut PartialDiagram,
    depth: usize,
    e: usize,
    inserted: &mut Vec<(usize, usize)>,
) -> bool {
    let sources = shape.covers_into(e);
    for &u in &shape.order()[..depth] {
        if !shape.leq(u, e) || sources.contains(&u) {
            continue;
        }
        let mut value: Option<MorId> = None;
        for &s in sources {
            if !shape.leq(u, s) {
                continue;
            }
            let lift = partial.arrows[&(u, s)];
            let step = partial.arrows[&(s, e)];
            let via = target
                .compose(step, lift)
                .expect("images of composable arrows compose");
            match value {
                None => value = Some(via),
                Some(v) if v != via => return false,
                Some(_) => {}
            }
        }
        let v = value.expect("every strict predecessor factors through a cover source");
        partial.arrows.insert((u, e), v);
        inserted.push((u, e));
    }
    true
}

/// Advance the odometer over cover-arrow choices; `false` when exhausted.
fn bump(pick: &mut [usize], homs: &[Vec<MorId>]) -> bool {
    for d in 0..pick.len() {
        pick[d] += 1;
        if pick[d] < homs[d].len() {
            return true;
        }
        pick[d] = 0;
    }
    false
}

fn emit(shape: &PosetShape, target: &Rc<FinCategory>, partial: &PartialDiagram) -> FinFunctor {
    let obj_map: Vec<ObjId> = partial
        .objects
        .iter()
        .map(|o| o.expect("all elements placed"))
        .collect();
    let mor_map: Vec<MorId> = shape
        .cat()
        .morphisms()
        .map(|m| {
            let u = shape.cat().src(m).0;
            let v = shape.cat().tgt(m).0;
            if u == v {
                target.id(obj_map[u])
            } else {
                partial.arrows[&(u, v)]
            }
        })
        .collect();
    FinFunctor::new(
        Rc::clone(shape.cat()),
        Rc::clone(target),
        obj_map,
        mor_map,
    )
    .expect("the search maintains functoriality")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{chain_poset, divisor_lattice, walking_arrow, walking_iso};

    #[test]
    fn functors_from_a_chain_count_composable_strings() {
        // Functors [1] → C correspond to morphisms of C, and functors
        // [2] → C to composable pairs.
        let arrow = Rc::new(walking_arrow());
        let shape1 = PosetShape::new(Rc::new(chain_poset(1)));
        let shape2 = PosetShape::new(Rc::new(chain_poset(2)));
        let fs1 = enumerate_poset_functors(&shape1, &arrow, |_, _| true);
        assert_eq!(fs1.len(), arrow.mor_count());
        let fs2 = enumerate_poset_functors(&shape2, &arrow, |_, _| true);
        let mut pairs = 0usize;
        for f in arrow.morphisms() {
            for g in arrow.morphisms() {
                if arrow.compose(g, f).is_some() {
                    pairs += 1;
                }
            }
        }
        assert_eq!(fs2.len(), pairs);
    }

    #[test]
    fn functors_into_a_poset_are_monotone_maps() {
        // Both shape and target thin: a functor is exactly a monotone map.
        let six = Rc::new(divisor_lattice(6));
        let shape = PosetShape::new(Rc::new(chain_poset(2)));
        let fs = enumerate_poset_functors(&shape, &six, |_, _| true);
        let mut oracle = 0usize;
        for a in six.objects() {
            for b in six.objects() {
                if six.hom(a, b).is_empty() {
                    continue;
                }
                for c in six.objects() {
                    if !six.hom(b, c).is_empty() {
                        oracle += 1;
                    }
                }
            }
        }
        assert_eq!(fs.len(), oracle);
    }

    #[test]
    fn acceptance_callback_prunes_branches() {
        let iso = Rc::new(walking_iso());
        let shape = PosetShape::new(Rc::new(chain_poset(1)));
        // 2 objects, hom(x, y) a singleton for every pair: 4 functors.
        let all = enumerate_poset_functors(&shape, &iso, |_, _| true);
        assert_eq!(all.len(), 4);
        // Pin the first vertex to object 0: half the branches survive.
        let pinned = enumerate_poset_functors(&shape, &iso, |partial, e| {
            e != 0 || partial.object(0) == Some(ObjId(0))
        });
        assert_eq!(pinned.len(), 2);
        assert!(pinned.iter().all(|f| f.apply_obj(ObjId(0)) == ObjId(0)));
    }

    #[test]
    fn derived_arrows_compose_along_the_longest_path() {
        // In the shape [2], the image of the long arrow 0→2 must be the
        // composite of the images of 0→1 and 1→2.
        let six = Rc::new(divisor_lattice(6));
        let chain = Rc::new(chain_poset(2));
        let shape = PosetShape::new(Rc::clone(&chain));
        for f in enumerate_poset_functors(&shape, &six, |_, _| true) {
            let long = f.apply_mor(chain.hom(ObjId(0), ObjId(2))[0]);
            let first = f.apply_mor(chain.hom(ObjId(0), ObjId(1))[0]);
            let second = f.apply_mor(chain.hom(ObjId(1), ObjId(2))[0]);
            assert_eq!(six.compose(second, first), Some(long));
        }
    }

    /// Cross-check against the simplicial side: maps from the nerve of the
    /// interval poset into the nerve of `C` are exactly functors out of the
    /// interval poset.  Truncating at level 2 already pins composition, so
    /// the two counts must agree on the nose.
    #[test]
    fn subdivision_maps_count_interval_diagrams() {
        use crate::fincat::nerve;
        use crate::simpset::enumerate_maps;
        use crate::subdiv::interval_nerve;

        for cat in [Rc::new(walking_iso()), Rc::new(divisor_lattice(6))] {
            let target_nerve = nerve(&cat, 2);
            for n in 0..=2 {
                let source = interval_nerve(n, 2).unwrap();
                let maps = enumerate_maps(source.nerve().complex_rc(), target_nerve.complex_rc());
                let shape = PosetShape::new(Rc::clone(source.cat()));
                let functors = enumerate_poset_functors(&shape, &cat, |_, _| true);
                assert_eq!(maps.len(), functors.len(), "n = {n}");
            }
        }
    }
}
