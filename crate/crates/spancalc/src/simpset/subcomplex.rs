//! Subcomplexes, the named families (boundary, horns, spines), and
//! extraction of a subcomplex as a standalone complex.

use super::complex::{assemble_complex, SimplexId, TruncatedSimplicialSet};
use super::maps::SimplicialMap;
use super::standard::StandardSimplex;
use std::collections::{BTreeMap, BTreeSet};
use std::rc::Rc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SubcomplexError {
    #[error("subcomplexes live in different ambient complexes")]
    AmbientMismatch,
    #[error("member set is not closed under {op} at {at}")]
    NotClosed { at: SimplexId, op: String },
    #[error("{kind} is undefined for n = {n}")]
    BadDimension { kind: String, n: usize },
}

/// A simplicial subset of an ambient complex: per-level member sets closed
/// under faces and degeneracies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subcomplex {
    ambient: Rc<TruncatedSimplicialSet>,
    members: Vec<BTreeSet<usize>>,
}

impl Subcomplex {
    pub fn empty(ambient: &Rc<TruncatedSimplicialSet>) -> Self {
        Subcomplex {
            ambient: ambient.clone(),
            members: vec![BTreeSet::new(); ambient.bound() + 1],
        }
    }

    pub fn full(ambient: &Rc<TruncatedSimplicialSet>) -> Self {
        let members = (0..=ambient.bound())
            .map(|level| ambient.simplices(level).map(|id| id.index).collect())
            .collect();
        Subcomplex {
            ambient: ambient.clone(),
            members,
        }
    }

    /// Build from explicit member sets, checking closure under faces and
    /// degeneracies.
    pub fn from_members(
        ambient: &Rc<TruncatedSimplicialSet>,
        members: Vec<BTreeSet<usize>>,
    ) -> Result<Self, SubcomplexError> {
        let sub = Subcomplex {
            ambient: ambient.clone(),
            members,
        };
        sub.check_closed()?;
        Ok(sub)
    }

    /// The smallest subcomplex containing the given simplices.
    pub fn from_generators(
        ambient: &Rc<TruncatedSimplicialSet>,
        generators: &[SimplexId],
    ) -> Self {
        let mut members = vec![BTreeSet::new(); ambient.bound() + 1];
        let mut stack: Vec<SimplexId> = generators.to_vec();
        while let Some(id) = stack.pop() {
            if !members[id.level].insert(id.index) {
                continue;
            }
            if id.level >= 1 {
                for i in 0..=id.level {
                    stack.push(ambient.face(id, i));
                }
            }
            if id.level < ambient.bound() {
                for i in 0..=id.level {
                    stack.push(ambient.degeneracy(id, i));
                }
            }
        }
        Subcomplex {
            ambient: ambient.clone(),
            members,
        }
    }

    /// Build from a membership predicate, checking closure.
    pub fn from_predicate(
        ambient: &Rc<TruncatedSimplicialSet>,
        pred: impl Fn(SimplexId) -> bool,
    ) -> Result<Self, SubcomplexError> {
        let members = (0..=ambient.bound())
            .map(|level| {
                ambient
                    .simplices(level)
                    .filter(|&id| pred(id))
                    .map(|id| id.index)
                    .collect()
            })
            .collect();
        Self::from_members(ambient, members)
    }

    fn check_closed(&self) -> Result<(), SubcomplexError> {
        for level in 0..=self.ambient.bound() {
            for &index in &self.members[level] {
                let id = SimplexId { level, index };
                if level >= 1 {
                    for i in 0..=level {
                        if !self.contains(self.ambient.face(id, i)) {
                            return Err(SubcomplexError::NotClosed {
                                at: id,
                                op: format!("d_{i}"),
                            });
                        }
                    }
                }
                if level < self.ambient.bound() {
                    for i in 0..=level {
                        if !self.contains(self.ambient.degeneracy(id, i)) {
                            return Err(SubcomplexError::NotClosed {
                                at: id,
                                op: format!("s_{i}"),
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn ambient(&self) -> &Rc<TruncatedSimplicialSet> {
        &self.ambient
    }

    pub fn contains(&self, id: SimplexId) -> bool {
        self.members[id.level].contains(&id.index)
    }

    pub fn level_members(&self, level: usize) -> impl Iterator<Item = SimplexId> + '_ {
        self.members[level]
            .iter()
            .map(move |&index| SimplexId { level, index })
    }

    pub fn level_len(&self, level: usize) -> usize {
        self.members[level].len()
    }

    pub fn total_len(&self) -> usize {
        self.members.iter().map(BTreeSet::len).sum()
    }

    fn same_ambient(&self, other: &Subcomplex) -> Result<(), SubcomplexError> {
        if Rc::ptr_eq(&self.ambient, &other.ambient) || *self.ambient == *other.ambient {
            Ok(())
        } else {
            Err(SubcomplexError::AmbientMismatch)
        }
    }

    pub fn union(&self, other: &Subcomplex) -> Result<Subcomplex, SubcomplexError> {
        self.same_ambient(other)?;
        let members = self
            .members
            .iter()
            .zip(&other.members)
            .map(|(a, b)| a.union(b).copied().collect())
            .collect();
        Ok(Subcomplex {
            ambient: self.ambient.clone(),
            members,
        })
    }

    pub fn intersect(&self, other: &Subcomplex) -> Result<Subcomplex, SubcomplexError> {
        self.same_ambient(other)?;
        let members = self
            .members
            .iter()
            .zip(&other.members)
            .map(|(a, b)| a.intersection(b).copied().collect())
            .collect();
        Ok(Subcomplex {
            ambient: self.ambient.clone(),
            members,
        })
    }

    pub fn is_subset_of(&self, other: &Subcomplex) -> Result<bool, SubcomplexError> {
        self.same_ambient(other)?;
        Ok(self
            .members
            .iter()
            .zip(&other.members)
            .all(|(a, b)| a.is_subset(b)))
    }

    /// Realize the subcomplex as a standalone complex with its inclusion
    /// into the ambient complex.
    pub fn extract(&self) -> ExtractedSubcomplex {
        let ambient = &self.ambient;
        let levels: Vec<Vec<usize>> = self
            .members
            .iter()
            .map(|set| set.iter().copied().collect())
            .collect();
        let (complex, index) = assemble_complex(
            ambient.bound(),
            levels,
            |level, &idx, i| ambient.face(SimplexId::new(level, idx), i).index,
            |level, &idx, i| ambient.degeneracy(SimplexId::new(level, idx), i).index,
        );
        let complex = Rc::new(complex);
        let components: Vec<Vec<SimplexId>> = (0..=ambient.bound())
            .map(|level| {
                self.members[level]
                    .iter()
                    .map(|&idx| SimplexId::new(level, idx))
                    .collect()
            })
            .collect();
        let inclusion = SimplicialMap::new(complex.clone(), ambient.clone(), components)
            .expect("inclusion of a subcomplex is simplicial");
        ExtractedSubcomplex {
            complex,
            inclusion,
            index,
        }
    }
}

/// A subcomplex realized as a standalone complex.
#[derive(Clone, Debug)]
pub struct ExtractedSubcomplex {
    pub complex: Rc<TruncatedSimplicialSet>,
    /// Inclusion of `complex` into the ambient complex.
    pub inclusion: SimplicialMap,
    index: Vec<BTreeMap<usize, usize>>,
}

impl ExtractedSubcomplex {
    /// The extracted id corresponding to an ambient member.
    pub fn from_ambient(&self, id: SimplexId) -> Option<SimplexId> {
        self.index[id.level]
            .get(&id.index)
            .map(|&index| SimplexId::new(id.level, index))
    }
}

/// The named subcomplex families of a standard simplex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedSubcomplex {
    /// `∂Δⁿ`: simplices missing at least one vertex.
    Boundary,
    /// `Λⁿ_k`: simplices missing at least one vertex other than `k`.
    Horn(usize),
    /// Union of the edges `{i, i+1}`.
    Spine,
    /// `Δ^{01} ∪ spine(d₁Δⁿ)`: edges `{0,1}, {0,2}, {2,3}, …, {n-1,n}`.
    LeftSpine,
}

/// Build a named subcomplex of `Δⁿ` (with its own ambient standard simplex).
pub fn named_subcomplex(
    kind: NamedSubcomplex,
    n: usize,
    bound: usize,
) -> Result<Subcomplex, SubcomplexError> {
    let std = StandardSimplex::new(n, bound);
    named_subcomplex_in(kind, &std)
}

/// Build a named subcomplex inside an existing standard simplex.
pub fn named_subcomplex_in(
    kind: NamedSubcomplex,
    std: &StandardSimplex,
) -> Result<Subcomplex, SubcomplexError> {
    let n = std.n();
    match kind {
        NamedSubcomplex::Horn(k) if n < 1 || k > n => {
            return Err(SubcomplexError::BadDimension {
                kind: format!("horn({k})"),
                n,
            })
        }
        NamedSubcomplex::Spine | NamedSubcomplex::LeftSpine if n < 1 => {
            return Err(SubcomplexError::BadDimension {
                kind: "spine".into(),
                n,
            })
        }
        _ => {}
    }
    let pred = |id: SimplexId| -> bool {
        let key = std.key_of(id);
        let image: BTreeSet<u8> = key.iter().copied().collect();
        match kind {
            NamedSubcomplex::Boundary => image.len() < n + 1,
            NamedSubcomplex::Horn(k) => {
                (0..=n).any(|j| j != k && !image.contains(&(j as u8)))
            }
            NamedSubcomplex::Spine => {
                (0..n).any(|i| image.iter().all(|&v| v == i as u8 || v == (i + 1) as u8))
            }
            NamedSubcomplex::LeftSpine => {
                let within = |a: u8, b: u8| image.iter().all(|&v| v == a || v == b);
                within(0, 1) || within(0, 2) || (2..n).any(|j| within(j as u8, (j + 1) as u8))
            }
        }
    };
    Subcomplex::from_predicate(std.complex(), pred)
}

/// Subcomplex of a standard simplex spanned by faces with the given vertex
/// sets (each set must be a nonempty subset of `{0, …, n}`).
pub fn subcomplex_from_vertex_sets(
    std: &StandardSimplex,
    sets: impl IntoIterator<Item = BTreeSet<u8>>,
) -> Subcomplex {
    let sets: Vec<BTreeSet<u8>> = sets.into_iter().collect();
    Subcomplex::from_predicate(std.complex(), |id| {
        let image: BTreeSet<u8> = std.key_of(id).iter().copied().collect();
        sets.iter().any(|s| image.is_subset(s))
    })
    .expect("vertex-set subcomplexes are closed")
}

/// The face `d_iΔⁿ` as a subcomplex.
pub fn face_subcomplex(std: &StandardSimplex, i: u8) -> Subcomplex {
    let set: BTreeSet<u8> = (0..=std.n() as u8).filter(|&v| v != i).collect();
    subcomplex_from_vertex_sets(std, [set])
}
