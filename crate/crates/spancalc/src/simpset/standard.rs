//! Standard simplices `Δⁿ` and the simplicial maps induced by vertex maps.

use super::complex::{assemble_complex, SimplexId, TruncatedSimplicialSet};
use super::maps::SimplicialMap;
use crate::GLOBAL_CAP;
use std::collections::BTreeMap;
use std::rc::Rc;

/// All weakly monotone maps `[k] → [n]`, as value vectors in lexicographic
/// order.
pub fn monotone_maps(k: usize, n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = vec![0u8; k + 1];
    loop {
        out.push(cur.clone());
        // lexicographic successor within weakly monotone vectors of values ≤ n
        let Some(pos) = (0..=k).rev().find(|&i| (cur[i] as usize) < n) else {
            break;
        };
        let v = cur[pos] + 1;
        for slot in cur.iter_mut().skip(pos) {
            *slot = v;
        }
    }
    out
}

/// A standard simplex together with lookups between simplex ids and their
/// monotone-map keys.
#[derive(Clone, Debug)]
pub struct StandardSimplex {
    n: usize,
    complex: Rc<TruncatedSimplicialSet>,
    keys: Vec<Vec<Vec<u8>>>,
    index: Vec<BTreeMap<Vec<u8>, usize>>,
}

impl StandardSimplex {
    /// Build `Δⁿ` truncated at `bound`.  Level `k` is the set of weakly
    /// monotone maps `[k] → [n]` in lexicographic order.
    pub fn new(n: usize, bound: usize) -> Self {
        assert!(n <= GLOBAL_CAP, "simplex dimension exceeds the global cap");
        assert!(bound <= GLOBAL_CAP, "bound exceeds the global cap");
        let keys: Vec<Vec<Vec<u8>>> = (0..=bound).map(|k| monotone_maps(k, n)).collect();
        let (complex, index) = assemble_complex(
            bound,
            keys.clone(),
            |_, key, i| {
                let mut out = key.clone();
                out.remove(i);
                out
            },
            |_, key, i| {
                let mut out = key.clone();
                out.insert(i, out[i]);
                out
            },
        );
        StandardSimplex {
            n,
            complex: Rc::new(complex),
            keys,
            index,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bound(&self) -> usize {
        self.complex.bound()
    }

    pub fn complex(&self) -> &Rc<TruncatedSimplicialSet> {
        &self.complex
    }

    /// Simplex id of a monotone-map key.
    pub fn id_of(&self, key: &[u8]) -> SimplexId {
        let level = key.len() - 1;
        let index = *self.index[level]
            .get(key)
            .unwrap_or_else(|| panic!("{key:?} is not a simplex key of Δ^{}", self.n));
        SimplexId { level, index }
    }

    /// Monotone-map key of a simplex id.
    pub fn key_of(&self, id: SimplexId) -> &[u8] {
        &self.keys[id.level][id.index]
    }

    /// The top nondegenerate simplex (requires `n ≤ bound`).
    pub fn top(&self) -> SimplexId {
        let key: Vec<u8> = (0..=self.n as u8).collect();
        self.id_of(&key)
    }

    /// The vertex `j`.
    pub fn vertex_id(&self, j: u8) -> SimplexId {
        self.id_of(&[j])
    }

    /// The edge from vertex `a` to vertex `b` (weakly increasing).
    pub fn edge_id(&self, a: u8, b: u8) -> SimplexId {
        self.id_of(&[a, b])
    }
}

/// Build `Δⁿ` truncated at `bound` as a plain complex.
pub fn standard_simplex(n: usize, bound: usize) -> TruncatedSimplicialSet {
    (*StandardSimplex::new(n, bound).complex).clone()
}

/// The simplicial map `Δ^m → Δ^n` induced by a weakly monotone vertex map
/// `alpha: [m] → [n]`.
pub fn induced_map(src: &StandardSimplex, dst: &StandardSimplex, alpha: &[u8]) -> SimplicialMap {
    assert_eq!(alpha.len(), src.n + 1, "vertex map arity mismatch");
    assert!(
        alpha.windows(2).all(|w| w[0] <= w[1]) && alpha.iter().all(|&v| (v as usize) <= dst.n),
        "vertex map must be weakly monotone into [n]"
    );
    assert_eq!(src.bound(), dst.bound(), "bound mismatch");
    let components: Vec<Vec<SimplexId>> = (0..=src.bound())
        .map(|k| {
            src.keys[k]
                .iter()
                .map(|key| {
                    let image: Vec<u8> = key.iter().map(|&v| alpha[v as usize]).collect();
                    dst.id_of(&image)
                })
                .collect()
        })
        .collect();
    SimplicialMap::new(src.complex.clone(), dst.complex.clone(), components)
        .expect("induced map of a monotone vertex map is simplicial")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binomial(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        let mut acc = 1usize;
        for i in 0..k {
            acc = acc * (n - i) / (i + 1);
        }
        acc
    }

    #[test]
    fn oracle_monotone_map_counts_match_binomials() {
        // |Hom_Δ([k], [n])| = C(n + k + 1, k + 1)
        for n in 0..=4 {
            for k in 0..=4 {
                assert_eq!(
                    monotone_maps(k, n).len(),
                    binomial(n + k + 1, k + 1),
                    "count of monotone [{k}] → [{n}]"
                );
            }
        }
    }

    #[test]
    fn monotone_maps_are_lexicographic_and_distinct() {
        let maps = monotone_maps(2, 3);
        for w in maps.windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn oracle_delta2_level1_has_six_simplices_three_nondegenerate() {
        let d2 = StandardSimplex::new(2, 4);
        assert_eq!(d2.complex().level_len(1), 6);
        assert_eq!(d2.complex().nondegenerate(1).count(), 3);
    }

    #[test]
    fn oracle_delta4_level4_has_one_nondegenerate_simplex() {
        let d4 = StandardSimplex::new(4, 4);
        assert_eq!(d4.complex().nondegenerate(4).count(), 1);
        let top = d4.top();
        assert!(!d4.complex().is_degenerate(top));
    }

    #[test]
    fn standard_simplices_validate() {
        for n in 0..=4 {
            standard_simplex(n, 4).validate().unwrap();
        }
    }

    #[test]
    fn nondegenerate_keys_are_strictly_monotone() {
        let d3 = StandardSimplex::new(3, 4);
        for k in 0..=3 {
            for id in d3.complex().simplices(k) {
                let key = d3.key_of(id);
                let strict = key.windows(2).all(|w| w[0] < w[1]);
                assert_eq!(
                    !d3.complex().is_degenerate(id),
                    strict,
                    "nondegeneracy must coincide with strict monotonicity"
                );
            }
        }
    }

    #[test]
    fn induced_map_composes_faces_correctly() {
        let d1 = StandardSimplex::new(1, 3);
        let d2 = StandardSimplex::new(2, 3);
        // δ_1: Δ¹ → Δ² hitting vertices {0, 2}
        let f = induced_map(&d1, &d2, &[0, 2]);
        let e = d1.id_of(&[0, 1]);
        assert_eq!(f.apply(e), d2.id_of(&[0, 2]));
        assert_eq!(f.apply(d1.id_of(&[0, 0])), d2.id_of(&[0, 0]));
    }
}
