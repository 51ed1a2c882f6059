//! Nerves of finite categories as truncated simplicial sets.

use std::collections::BTreeMap;
use std::rc::Rc;

use crate::simpset::{assemble_complex, SimplexId, SimplicialMap, TruncatedSimplicialSet};

use super::category::{FinCategory, MorId, ObjId};
use super::functor::FinFunctor;

/// A composable chain: starting object plus the arrows in order.
type Chain = (ObjId, Vec<MorId>);

/// The nerve of a finite category, truncated at a bound: level `k` holds
/// the composable `k`-chains, faces drop an end or compose adjacent
/// arrows, and degeneracies insert identities.
#[derive(Clone, Debug)]
pub struct Nerve {
    cat: Rc<FinCategory>,
    complex: Rc<TruncatedSimplicialSet>,
    chains: Vec<Vec<Chain>>,
    index: Vec<BTreeMap<Chain, usize>>,
}

fn chain_end(cat: &FinCategory, chain: &Chain) -> ObjId {
    chain.1.last().map_or(chain.0, |&m| cat.tgt(m))
}

fn chain_vertex(cat: &FinCategory, chain: &Chain, i: usize) -> ObjId {
    if i == 0 {
        chain.0
    } else {
        cat.tgt(chain.1[i - 1])
    }
}

/// Builds the nerve of `cat`, truncated at `bound`.
pub fn nerve(cat: &Rc<FinCategory>, bound: usize) -> Nerve {
    let mut chains: Vec<Vec<Chain>> = Vec::with_capacity(bound + 1);
    chains.push(cat.objects().map(|o| (o, Vec::new())).collect());
    for _ in 1..=bound {
        let prev = chains.last().unwrap();
        let mut next = Vec::new();
        for chain in prev {
            let end = chain_end(cat, chain);
            for m in cat.morphisms_from(end) {
                let mut mors = chain.1.clone();
                mors.push(m);
                next.push((chain.0, mors));
            }
        }
        chains.push(next);
    }
    let face = {
        let cat = Rc::clone(cat);
        move |k: usize, key: &Chain, i: usize| -> Chain {
            let (start, mors) = key;
            if i == 0 {
                (cat.tgt(mors[0]), mors[1..].to_vec())
            } else if i == k {
                (*start, mors[..k - 1].to_vec())
            } else {
                let mut out = Vec::with_capacity(k - 1);
                out.extend_from_slice(&mors[..i - 1]);
                out.push(
                    cat.compose(mors[i], mors[i - 1])
                        .expect("adjacent chain arrows compose"),
                );
                out.extend_from_slice(&mors[i + 1..]);
                (*start, out)
            }
        }
    };
    let degeneracy = {
        let cat = Rc::clone(cat);
        move |_k: usize, key: &Chain, i: usize| -> Chain {
            let (start, mors) = key;
            let repeated = chain_vertex(&cat, key, i);
            let mut out = Vec::with_capacity(mors.len() + 1);
            out.extend_from_slice(&mors[..i]);
            out.push(cat.id(repeated));
            out.extend_from_slice(&mors[i..]);
            (*start, out)
        }
    };
    let (complex, index) = assemble_complex(bound, chains.clone(), face, degeneracy);
    complex.validate().expect("nerve is a valid complex");
    Nerve {
        cat: Rc::clone(cat),
        complex: Rc::new(complex),
        chains,
        index,
    }
}

impl Nerve {
    pub fn cat(&self) -> &Rc<FinCategory> {
        &self.cat
    }

    pub fn complex(&self) -> &TruncatedSimplicialSet {
        &self.complex
    }

    pub fn complex_rc(&self) -> &Rc<TruncatedSimplicialSet> {
        &self.complex
    }

    pub fn bound(&self) -> usize {
        self.complex.bound()
    }

    pub fn chain(&self, id: SimplexId) -> &Chain {
        &self.chains[id.level][id.index]
    }

    pub fn chain_id(&self, chain: &Chain) -> Option<SimplexId> {
        self.index
            .get(chain.1.len())
            .and_then(|level| level.get(chain))
            .map(|&index| SimplexId {
                level: chain.1.len(),
                index,
            })
    }

    pub fn vertex_of(&self, o: ObjId) -> SimplexId {
        self.chain_id(&(o, Vec::new())).expect("objects are vertices")
    }

    pub fn edge_of(&self, m: MorId) -> SimplexId {
        self.chain_id(&(self.cat.src(m), vec![m]))
            .expect("morphisms are edges")
    }

    /// The morphism presented by an edge (composite of its chain).
    pub fn edge_morphism(&self, e: SimplexId) -> MorId {
        assert_eq!(e.level, 1, "edges live at level 1");
        self.chain(e).1[0]
    }
}

/// The simplicial map `N(F): N(src) -> N(dst)` induced by a functor.
/// Both nerves must share the truncation bound.
pub fn nerve_map(f: &FinFunctor, src: &Nerve, dst: &Nerve) -> SimplicialMap {
    assert_eq!(src.bound(), dst.bound(), "nerve bounds must agree");
    assert!(f.source() == src.cat().as_ref() && f.target() == dst.cat().as_ref());
    let components = src
        .chains
        .iter()
        .map(|level| {
            level
                .iter()
                .map(|(start, mors)| {
                    let image = (
                        f.apply_obj(*start),
                        mors.iter().map(|&m| f.apply_mor(m)).collect(),
                    );
                    dst.chain_id(&image).expect("functors preserve chains")
                })
                .collect()
        })
        .collect();
    SimplicialMap::new(
        Rc::clone(src.complex_rc()),
        Rc::clone(dst.complex_rc()),
        components,
    )
    .expect("induced map of nerves is simplicial")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::examples::{
        chain_poset, divisor_lattice, terminal_category, walking_arrow, walking_iso,
    };
    use crate::simpset::{
        enumerate_maps, extensions, named_subcomplex_in, standard_simplex, NamedSubcomplex,
        StandardSimplex, Subcomplex,
    };

    #[test]
    fn nerve_of_terminal_category_has_one_simplex_per_level() {
        let n = nerve(&Rc::new(terminal_category()), 4);
        for k in 0..=4 {
            assert_eq!(n.complex().level_len(k), 1);
        }
    }

    #[test]
    fn nerve_of_walking_arrow_matches_the_standard_1_simplex() {
        let n = nerve(&Rc::new(walking_arrow()), 3);
        let d1 = standard_simplex(1, 3);
        for k in 0..=3 {
            assert_eq!(n.complex().level_len(k), d1.level_len(k));
            assert_eq!(
                n.complex().nondegenerate(k).count(),
                d1.nondegenerate(k).count()
            );
        }
    }

    #[test]
    fn three_maps_from_the_interval_into_the_walking_arrow_nerve() {
        let n = nerve(&Rc::new(walking_arrow()), 2);
        let interval = standard_simplex(1, 2);
        let maps = enumerate_maps(&Rc::new(interval), n.complex_rc());
        assert_eq!(maps.len(), 3, "two degenerate edges plus the arrow");
    }

    #[test]
    fn nerve_of_walking_iso_nondegenerate_counts() {
        // Independent count: nondegenerate k-chains alternate the two
        // non-identity arrows, so there are exactly two per level k >= 1
        // (and two vertices), giving 2 + 2 + 2 = 6 through level 2.
        let n = nerve(&Rc::new(walking_iso()), 2);
        assert_eq!(n.complex().nondegenerate(0).count(), 2);
        assert_eq!(n.complex().nondegenerate(1).count(), 2);
        assert_eq!(n.complex().nondegenerate(2).count(), 2);
        let total: usize = (0..=2).map(|k| n.complex().nondegenerate(k).count()).sum();
        assert_eq!(total, 6);
        assert_eq!(n.complex().level_len(2), 8, "all composable 2-chains");
    }

    #[test]
    fn nerve_chain_lookups_roundtrip() {
        let cat = Rc::new(divisor_lattice(6));
        let n = nerve(&cat, 3);
        for k in 0..=3 {
            for s in n.complex().simplices(k) {
                assert_eq!(n.chain_id(&n.chain(s).clone()), Some(s));
            }
        }
        let m = cat.find_morphism("le_2_6").unwrap();
        assert_eq!(n.edge_morphism(n.edge_of(m)), m);
    }

    #[test]
    fn nerves_fill_inner_horns_uniquely() {
        for cat in [divisor_lattice(4), walking_iso()] {
            let n = nerve(&Rc::new(cat), 3);
            for dim in 2..=3usize {
                let std = StandardSimplex::new(dim, 3);
                for k in 1..dim {
                    let horn = named_subcomplex_in(NamedSubcomplex::Horn(k), &std).unwrap();
                    let extracted = Subcomplex::extract(&horn);
                    for top in enumerate_maps(&extracted.complex, n.complex_rc()) {
                        let fillers = extensions(&extracted.inclusion, &top).unwrap();
                        assert_eq!(fillers.len(), 1, "inner horns of a nerve fill uniquely");
                    }
                }
            }
        }
    }

    #[test]
    fn nerve_map_of_a_functor_sends_edges_to_image_edges() {
        let two = Rc::new(chain_poset(2));
        let one = Rc::new(chain_poset(1));
        // Collapse v0, v1 to v0 and send v2 to v1.
        let v0 = one.find_object("v0").unwrap();
        let v1 = one.find_object("v1").unwrap();
        let le = one.find_morphism("le_v0_v1").unwrap();
        let f = FinFunctor::new(
            Rc::clone(&two),
            Rc::clone(&one),
            vec![v0, v0, v1],
            two.morphisms()
                .map(|m| {
                    let (s, t) = (two.src(m), two.tgt(m));
                    match (two.object_name(s), two.object_name(t)) {
                        (_, "v2") if two.object_name(s) != "v2" => le,
                        ("v2", "v2") => one.id(v1),
                        _ => one.id(v0),
                    }
                })
                .collect(),
        )
        .unwrap();
        let n2 = nerve(&two, 2);
        let n1 = nerve(&one, 2);
        let map = nerve_map(&f, &n2, &n1);
        let e = n2.edge_of(two.find_morphism("le_v1_v2").unwrap());
        assert_eq!(map.apply(e), n1.edge_of(le));
        let collapsed = n2.edge_of(two.find_morphism("le_v0_v1").unwrap());
        assert!(n1.complex().is_degenerate(map.apply(collapsed)));
    }
}
