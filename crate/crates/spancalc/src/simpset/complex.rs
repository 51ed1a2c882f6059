//! Core representation of truncated simplicial sets.

use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Identifier of a simplex: its level and its index within that level.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct SimplexId {
    pub level: usize,
    pub index: usize,
}

impl SimplexId {
    pub fn new(level: usize, index: usize) -> Self {
        SimplexId { level, index }
    }
}

impl fmt::Display for SimplexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.level, self.index)
    }
}

/// Structure tables attached to a single simplex.
#[derive(Clone, PartialEq, Eq, Debug)]
struct SimplexData {
    /// Faces `d_0 … d_k`; empty at level 0.
    faces: Vec<SimplexId>,
    /// Degeneracies `s_0 … s_k`; empty at the top level.
    degeneracies: Vec<SimplexId>,
    /// `Some((i, τ))` with `s_i(τ) = x` when the simplex is degenerate.
    witness: Option<(usize, SimplexId)>,
}

/// Violations of the simplicial identities or of the witness discipline.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("simplex {at} has {got} faces, expected {want}")]
    FaceArity { at: SimplexId, got: usize, want: usize },
    #[error("simplex {at} has {got} degeneracies, expected {want}")]
    DegeneracyArity { at: SimplexId, got: usize, want: usize },
    #[error("structure map from {0} refers to out-of-range simplex {1}")]
    DanglingReference(SimplexId, SimplexId),
    #[error("face identity d_{i} d_{j} fails at {at}")]
    FaceIdentity { at: SimplexId, i: usize, j: usize },
    #[error("degeneracy identity s_{i} s_{j} fails at {at}")]
    DegeneracyIdentity { at: SimplexId, i: usize, j: usize },
    #[error("mixed identity for d_{i} s_{j} fails at {at}")]
    MixedIdentity { at: SimplexId, i: usize, j: usize },
    #[error("degeneracy witness of {0} does not reproduce it")]
    BadWitness(SimplexId),
    #[error("simplex {at} is marked nondegenerate but equals s_{i} of its i-th face")]
    MissedWitness { at: SimplexId, i: usize },
}

/// A simplicial set truncated at a fixed level bound.
///
/// Every level `k ≤ bound` is a finite indexed set; faces and degeneracies
/// are total tables (degeneracies are absent at the top level, where they
/// would leave the truncation).  Each simplex carries a degeneracy witness
/// `(i, τ)` with `s_i(τ) = x` when one exists.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSimplicialSet {
    bound: usize,
    levels: Vec<Vec<SimplexData>>,
}

impl TruncatedSimplicialSet {
    /// The complex with no simplices at all.
    pub fn empty(bound: usize) -> Self {
        TruncatedSimplicialSet {
            bound,
            levels: vec![Vec::new(); bound + 1],
        }
    }

    /// Truncation bound (inclusive top level).
    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Number of simplices at `level`.
    pub fn level_len(&self, level: usize) -> usize {
        self.levels[level].len()
    }

    /// Total number of simplices across all levels.
    pub fn total_len(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.iter().all(Vec::is_empty)
    }

    /// All simplices at `level`, in index order.
    pub fn simplices(&self, level: usize) -> impl Iterator<Item = SimplexId> + '_ {
        (0..self.level_len(level)).map(move |index| SimplexId { level, index })
    }

    /// The nondegenerate simplices at `level`, in index order.
    pub fn nondegenerate(&self, level: usize) -> impl Iterator<Item = SimplexId> + '_ {
        self.simplices(level)
            .filter(move |&id| self.witness(id).is_none())
    }

    /// All simplices of the complex in (level, index) order.
    pub fn all_simplices(&self) -> impl Iterator<Item = SimplexId> + '_ {
        (0..=self.bound).flat_map(move |level| self.simplices(level))
    }

    fn data(&self, id: SimplexId) -> &SimplexData {
        &self.levels[id.level][id.index]
    }

    /// The face `d_i` of a simplex (requires `level ≥ 1`).
    pub fn face(&self, id: SimplexId, i: usize) -> SimplexId {
        self.data(id).faces[i]
    }

    /// The degeneracy `s_i` of a simplex (requires `level < bound`).
    pub fn degeneracy(&self, id: SimplexId, i: usize) -> SimplexId {
        self.data(id).degeneracies[i]
    }

    /// Degeneracy witness `(i, τ)` with `s_i(τ) = x`, if the simplex is
    /// degenerate.
    pub fn witness(&self, id: SimplexId) -> Option<(usize, SimplexId)> {
        self.data(id).witness
    }

    pub fn is_degenerate(&self, id: SimplexId) -> bool {
        self.witness(id).is_some()
    }

    /// The `j`-th vertex of a simplex, computed by iterated faces.
    pub fn vertex(&self, id: SimplexId, j: usize) -> SimplexId {
        let mut cur = id;
        // drop vertices j+1..=level from the top, then 0..j from the bottom
        for _ in (j + 1)..=id.level {
            cur = self.face(cur, cur.level);
        }
        for _ in 0..j {
            cur = self.face(cur, 0);
        }
        cur
    }

    /// All vertices of a simplex, in order.
    pub fn vertices(&self, id: SimplexId) -> Vec<SimplexId> {
        (0..=id.level).map(|j| self.vertex(id, j)).collect()
    }

    /// Exhaustively check the simplicial identities and the witness
    /// discipline.
    pub fn validate(&self) -> Result<(), ComplexError> {
        for level in 0..=self.bound {
            for id in self.simplices(level) {
                let data = self.data(id);
                let want_faces = if level == 0 { 0 } else { level + 1 };
                if data.faces.len() != want_faces {
                    return Err(ComplexError::FaceArity {
                        at: id,
                        got: data.faces.len(),
                        want: want_faces,
                    });
                }
                let want_degens = if level == self.bound { 0 } else { level + 1 };
                if data.degeneracies.len() != want_degens {
                    return Err(ComplexError::DegeneracyArity {
                        at: id,
                        got: data.degeneracies.len(),
                        want: want_degens,
                    });
                }
                if level >= 1 {
                    for &r in &data.faces {
                        if r.level + 1 != level || r.index >= self.levels[r.level].len() {
                            return Err(ComplexError::DanglingReference(id, r));
                        }
                    }
                }
                for &r in &data.degeneracies {
                    if r.level != level + 1 || r.index >= self.levels[r.level].len() {
                        return Err(ComplexError::DanglingReference(id, r));
                    }
                }
            }
        }
        for level in 0..=self.bound {
            for id in self.simplices(level) {
                // d_i d_j = d_{j-1} d_i  for i < j
                if level >= 2 {
                    for j in 1..=level {
                        for i in 0..j {
                            let lhs = self.face(self.face(id, j), i);
                            let rhs = self.face(self.face(id, i), j - 1);
                            if lhs != rhs {
                                return Err(ComplexError::FaceIdentity { at: id, i, j });
                            }
                        }
                    }
                }
                // s_i s_j = s_{j+1} s_i  for i ≤ j
                if level + 2 <= self.bound {
                    for j in 0..=level {
                        for i in 0..=j {
                            let lhs = self.degeneracy(self.degeneracy(id, j), i);
                            let rhs = self.degeneracy(self.degeneracy(id, i), j + 1);
                            if lhs != rhs {
                                return Err(ComplexError::DegeneracyIdentity { at: id, i, j });
                            }
                        }
                    }
                }
                // d_i s_j identities
                if level < self.bound {
                    for j in 0..=level {
                        for i in 0..=level + 1 {
                            let lhs = self.face(self.degeneracy(id, j), i);
                            let rhs = if i < j {
                                self.degeneracy(self.face(id, i), j - 1)
                            } else if i == j || i == j + 1 {
                                id
                            } else {
                                self.degeneracy(self.face(id, i - 1), j)
                            };
                            if lhs != rhs {
                                return Err(ComplexError::MixedIdentity { at: id, i, j });
                            }
                        }
                    }
                }
                // witness discipline
                match self.witness(id) {
                    Some((i, tau)) => {
                        if tau.level + 1 != level || self.degeneracy(tau, i) != id {
                            return Err(ComplexError::BadWitness(id));
                        }
                    }
                    None => {
                        if level >= 1 {
                            for i in 0..level {
                                if self.degeneracy(self.face(id, i), i) == id {
                                    return Err(ComplexError::MissedWitness { at: id, i });
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Assemble a complex from per-level key lists and key-level structure maps.
///
/// `levels[k]` must list the distinct level-`k` keys in canonical order and
/// be closed under the `face` and `degeneracy` closures.  Degeneracy
/// witnesses are computed from the key structure (`x = s_i(d_i x)` test).
/// Returns the complex together with the key-to-index maps.
pub(crate) fn assemble_complex<K, F, G>(
    bound: usize,
    levels: Vec<Vec<K>>,
    face: F,
    degeneracy: G,
) -> (TruncatedSimplicialSet, Vec<BTreeMap<K, usize>>)
where
    K: Ord + Clone + fmt::Debug,
    F: Fn(usize, &K, usize) -> K,
    G: Fn(usize, &K, usize) -> K,
{
    assert_eq!(levels.len(), bound + 1, "one key list per level");
    let index: Vec<BTreeMap<K, usize>> = levels
        .iter()
        .map(|keys| {
            let map: BTreeMap<K, usize> = keys
                .iter()
                .enumerate()
                .map(|(i, k)| (k.clone(), i))
                .collect();
            assert_eq!(map.len(), keys.len(), "duplicate keys in level");
            map
        })
        .collect();
    let lookup = |level: usize, key: &K| -> SimplexId {
        let idx = *index[level]
            .get(key)
            .unwrap_or_else(|| panic!("complex not closed: missing key {key:?} at level {level}"));
        SimplexId { level, index: idx }
    };
    let mut out: Vec<Vec<SimplexData>> = Vec::with_capacity(bound + 1);
    for (k, keys) in levels.iter().enumerate() {
        let mut data = Vec::with_capacity(keys.len());
        for key in keys {
            let faces: Vec<SimplexId> = if k == 0 {
                Vec::new()
            } else {
                (0..=k).map(|i| lookup(k - 1, &face(k, key, i))).collect()
            };
            let degeneracies: Vec<SimplexId> = if k == bound {
                Vec::new()
            } else {
                (0..=k)
                    .map(|i| lookup(k + 1, &degeneracy(k, key, i)))
                    .collect()
            };
            let witness = if k == 0 {
                None
            } else {
                (0..k).find_map(|i| {
                    let tau = face(k, key, i);
                    if degeneracy(k - 1, &tau, i) == *key {
                        Some((i, lookup(k - 1, &tau)))
                    } else {
                        None
                    }
                })
            };
            data.push(SimplexData {
                faces,
                degeneracies,
                witness,
            });
        }
        out.push(data);
    }
    (
        TruncatedSimplicialSet {
            bound,
            levels: out,
        },
        index,
    )
}
