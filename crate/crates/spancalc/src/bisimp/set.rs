//! Truncated bisimplicial sets: grids of elements carrying two commuting
//! simplicial structures.

use std::collections::BTreeMap;
use std::fmt;
use std::rc::Rc;

use thiserror::Error;

use crate::simpset::{assemble_complex, ComplexError, SimplexId, TruncatedSimplicialSet};

/// Address of one element of a [`TruncatedBisimplicialSet`]: horizontal
/// degree `m`, vertical degree `n`, and position within that bidegree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BisimplexId {
    pub m: usize,
    pub n: usize,
    pub index: usize,
}

impl fmt::Display for BisimplexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})#{}", self.m, self.n, self.index)
    }
}

/// Structure tables for one element: images of the face and degeneracy
/// operators in each direction, plus degeneracy witnesses.
///
/// `h_faces[i]` is the index of `d_i` applied horizontally (empty at
/// horizontal degree zero), `h_degens[i]` the index of `s_i` (empty at the
/// horizontal bound), and likewise vertically.  A witness `(i, t)` records
/// that this element equals `s_i(t)` in the given direction.
#[derive(Clone, Debug, PartialEq, Eq)]
struct BisimplexData {
    h_faces: Vec<usize>,
    h_degens: Vec<usize>,
    v_faces: Vec<usize>,
    v_degens: Vec<usize>,
    h_witness: Option<(usize, usize)>,
    v_witness: Option<(usize, usize)>,
}

/// A bisimplicial set truncated to bidegrees `(m, n)` with `m ≤ h_bound`
/// and `n ≤ v_bound`.
///
/// Rows (fixed vertical degree) and columns (fixed horizontal degree) are
/// ordinary truncated simplicial sets and can be extracted as such; the
/// two directions commute.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedBisimplicialSet {
    h_bound: usize,
    v_bound: usize,
    grid: Vec<Vec<Vec<BisimplexData>>>,
}

impl TruncatedBisimplicialSet {
    pub fn h_bound(&self) -> usize {
        self.h_bound
    }

    pub fn v_bound(&self) -> usize {
        self.v_bound
    }

    /// Number of elements at bidegree `(m, n)`.
    pub fn len(&self, m: usize, n: usize) -> usize {
        self.grid[m][n].len()
    }

    /// Total number of elements across all bidegrees.
    pub fn total_len(&self) -> usize {
        self.grid.iter().flatten().map(Vec::len).sum()
    }

    /// The elements of one bidegree.
    pub fn elements(&self, m: usize, n: usize) -> impl Iterator<Item = BisimplexId> {
        (0..self.len(m, n)).map(move |index| BisimplexId { m, n, index })
    }

    /// All elements, lexicographically by bidegree.
    pub fn all_elements(&self) -> impl Iterator<Item = BisimplexId> + '_ {
        (0..=self.h_bound).flat_map(move |m| {
            (0..=self.v_bound).flat_map(move |n| self.elements(m, n))
        })
    }

    fn data(&self, id: BisimplexId) -> &BisimplexData {
        &self.grid[id.m][id.n][id.index]
    }

    /// Horizontal face `d_i`: lowers `m` by one.
    pub fn h_face(&self, id: BisimplexId, i: usize) -> BisimplexId {
        assert!(id.m >= 1 && i <= id.m, "horizontal face d_{i} undefined at {id}");
        BisimplexId { m: id.m - 1, n: id.n, index: self.data(id).h_faces[i] }
    }

    /// Horizontal degeneracy `s_i`: raises `m` by one.
    pub fn h_degen(&self, id: BisimplexId, i: usize) -> BisimplexId {
        assert!(id.m < self.h_bound && i <= id.m, "horizontal degeneracy s_{i} undefined at {id}");
        BisimplexId { m: id.m + 1, n: id.n, index: self.data(id).h_degens[i] }
    }

    /// Vertical face `d_i`: lowers `n` by one.
    pub fn v_face(&self, id: BisimplexId, i: usize) -> BisimplexId {
        assert!(id.n >= 1 && i <= id.n, "vertical face d_{i} undefined at {id}");
        BisimplexId { m: id.m, n: id.n - 1, index: self.data(id).v_faces[i] }
    }

    /// Vertical degeneracy `s_i`: raises `n` by one.
    pub fn v_degen(&self, id: BisimplexId, i: usize) -> BisimplexId {
        assert!(id.n < self.v_bound && i <= id.n, "vertical degeneracy s_{i} undefined at {id}");
        BisimplexId { m: id.m, n: id.n + 1, index: self.data(id).v_degens[i] }
    }

    /// The witness `(i, t)` with `self = s_i(t)` horizontally, if any.
    pub fn h_witness(&self, id: BisimplexId) -> Option<(usize, BisimplexId)> {
        self.data(id)
            .h_witness
            .map(|(i, index)| (i, BisimplexId { m: id.m - 1, n: id.n, index }))
    }

    /// The witness `(i, t)` with `self = s_i(t)` vertically, if any.
    pub fn v_witness(&self, id: BisimplexId) -> Option<(usize, BisimplexId)> {
        self.data(id)
            .v_witness
            .map(|(i, index)| (i, BisimplexId { m: id.m, n: id.n - 1, index }))
    }

    pub fn is_h_degenerate(&self, id: BisimplexId) -> bool {
        self.data(id).h_witness.is_some()
    }

    pub fn is_v_degenerate(&self, id: BisimplexId) -> bool {
        self.data(id).v_witness.is_some()
    }

    /// Degenerate in either direction.
    pub fn is_degenerate(&self, id: BisimplexId) -> bool {
        self.is_h_degenerate(id) || self.is_v_degenerate(id)
    }

    /// The `j`-th vertical vertex: the image under the vertex inclusion
    /// `[0] → [n]` hitting `j`, applied in the vertical direction.
    pub fn v_vertex(&self, id: BisimplexId, j: usize) -> BisimplexId {
        assert!(j <= id.n);
        let mut cur = id;
        while cur.n > j {
            cur = self.v_face(cur, cur.n);
        }
        while cur.n > 0 {
            cur = self.v_face(cur, 0);
        }
        cur
    }

    /// The `j`-th horizontal vertex.
    pub fn h_vertex(&self, id: BisimplexId, j: usize) -> BisimplexId {
        assert!(j <= id.m);
        let mut cur = id;
        while cur.m > j {
            cur = self.h_face(cur, cur.m);
        }
        while cur.m > 0 {
            cur = self.h_face(cur, 0);
        }
        cur
    }

    /// The row at vertical degree `n`: level `m` is the bidegree `(m, n)`
    /// element list, with the horizontal structure.  Simplex indices agree
    /// with element indices.
    pub fn row(&self, n: usize) -> Rc<TruncatedSimplicialSet> {
        assert!(n <= self.v_bound);
        let levels: Vec<Vec<usize>> =
            (0..=self.h_bound).map(|m| (0..self.len(m, n)).collect()).collect();
        let (complex, _) = assemble_complex(
            self.h_bound,
            levels,
            |m, key, i| self.grid[m][n][*key].h_faces[i],
            |m, key, i| self.grid[m][n][*key].h_degens[i],
        );
        Rc::new(complex)
    }

    /// The column at horizontal degree `m`, with the vertical structure.
    pub fn column(&self, m: usize) -> Rc<TruncatedSimplicialSet> {
        assert!(m <= self.h_bound);
        let levels: Vec<Vec<usize>> =
            (0..=self.v_bound).map(|n| (0..self.len(m, n)).collect()).collect();
        let (complex, _) = assemble_complex(
            self.v_bound,
            levels,
            |n, key, i| self.grid[m][n][*key].v_faces[i],
            |n, key, i| self.grid[m][n][*key].v_degens[i],
        );
        Rc::new(complex)
    }

    /// Check the bisimplicial identities: every row and column must be a
    /// valid truncated simplicial set, and the two directions must commute
    /// on all four face/degeneracy combinations.
    pub fn validate(&self) -> Result<(), BicomplexError> {
        for n in 0..=self.v_bound {
            self.row(n).validate().map_err(|source| BicomplexError::Row { n, source })?;
        }
        for m in 0..=self.h_bound {
            self.column(m).validate().map_err(|source| BicomplexError::Column { m, source })?;
        }
        for id in self.all_elements() {
            let (m, n) = (id.m, id.n);
            for i in 0..=m {
                for j in 0..=n {
                    if m >= 1 && n >= 1 && self.v_face(self.h_face(id, i), j) != self.h_face(self.v_face(id, j), i) {
                        return Err(BicomplexError::mixed(id, format!("d^v_{j} d^h_{i} = d^h_{i} d^v_{j}")));
                    }
                    if m >= 1 && n < self.v_bound && self.v_degen(self.h_face(id, i), j) != self.h_face(self.v_degen(id, j), i) {
                        return Err(BicomplexError::mixed(id, format!("s^v_{j} d^h_{i} = d^h_{i} s^v_{j}")));
                    }
                    if m < self.h_bound && n >= 1 && self.v_face(self.h_degen(id, i), j) != self.h_degen(self.v_face(id, j), i) {
                        return Err(BicomplexError::mixed(id, format!("d^v_{j} s^h_{i} = s^h_{i} d^v_{j}")));
                    }
                    if m < self.h_bound && n < self.v_bound && self.v_degen(self.h_degen(id, i), j) != self.h_degen(self.v_degen(id, j), i) {
                        return Err(BicomplexError::mixed(id, format!("s^v_{j} s^h_{i} = s^h_{i} s^v_{j}")));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A bisimplicial identity violation found by
/// [`TruncatedBisimplicialSet::validate`].
#[derive(Debug, Error, PartialEq, Eq)]
pub enum BicomplexError {
    #[error("row {n} is not simplicial: {source}")]
    Row { n: usize, source: ComplexError },
    #[error("column {m} is not simplicial: {source}")]
    Column { m: usize, source: ComplexError },
    #[error("mixed identity {identity} fails at {at}")]
    Mixed { at: BisimplexId, identity: String },
}

impl BicomplexError {
    fn mixed(at: BisimplexId, identity: String) -> Self {
        BicomplexError::Mixed { at, identity }
    }
}

/// Assemble a truncated bisimplicial set from abstract keys.
///
/// `grid[m][n]` lists the keys at bidegree `(m, n)`; the four closures
/// give the keys of faces and degeneracies in each direction, as
/// `(m, n, key, i)` for an operator out of bidegree `(m, n)`.  Keys must
/// be distinct within a bidegree and the grid closed under all four
/// operator families.  Returns the set together with key-to-index maps.
pub(crate) fn assemble_bicomplex<K: Ord + Clone + fmt::Debug>(
    h_bound: usize,
    v_bound: usize,
    grid: Vec<Vec<Vec<K>>>,
    h_face: impl Fn(usize, usize, &K, usize) -> K,
    h_degen: impl Fn(usize, usize, &K, usize) -> K,
    v_face: impl Fn(usize, usize, &K, usize) -> K,
    v_degen: impl Fn(usize, usize, &K, usize) -> K,
) -> (TruncatedBisimplicialSet, Vec<Vec<BTreeMap<K, usize>>>) {
    assert_eq!(grid.len(), h_bound + 1, "grid must list h_bound + 1 horizontal degrees");
    let mut index: Vec<Vec<BTreeMap<K, usize>>> = Vec::with_capacity(h_bound + 1);
    for row in &grid {
        assert_eq!(row.len(), v_bound + 1, "grid must list v_bound + 1 vertical degrees");
        let mut maps = Vec::with_capacity(v_bound + 1);
        for keys in row {
            let mut map = BTreeMap::new();
            for (i, key) in keys.iter().enumerate() {
                let previous = map.insert(key.clone(), i);
                assert!(previous.is_none(), "duplicate key {key:?} in a bidegree");
            }
            maps.push(map);
        }
        index.push(maps);
    }
    let look = |m: usize, n: usize, key: &K| -> usize {
        *index[m][n]
            .get(key)
            .unwrap_or_else(|| panic!("bicomplex not closed: missing key {key:?} at ({m},{n})"))
    };
    let mut out: Vec<Vec<Vec<BisimplexData>>> = Vec::with_capacity(h_bound + 1);
    for m in 0..=h_bound {
        let mut out_row = Vec::with_capacity(v_bound + 1);
        for n in 0..=v_bound {
            let mut cell = Vec::with_capacity(grid[m][n].len());
            for key in &grid[m][n] {
                let h_faces = if m == 0 {
                    Vec::new()
                } else {
                    (0..=m).map(|i| look(m - 1, n, &h_face(m, n, key, i))).collect()
                };
                let h_degens = if m == h_bound {
                    Vec::new()
                } else {
                    (0..=m).map(|i| look(m + 1, n, &h_degen(m, n, key, i))).collect()
                };
                let v_faces = if n == 0 {
                    Vec::new()
                } else {
                    (0..=n).map(|i| look(m, n - 1, &v_face(m, n, key, i))).collect()
                };
                let v_degens = if n == v_bound {
                    Vec::new()
                } else {
                    (0..=n).map(|i| look(m, n + 1, &v_degen(m, n, key, i))).collect()
                };
                let h_witness = (0..m).find_map(|i| {
                    let below = h_face(m, n, key, i);
                    (h_degen(m - 1, n, &below, i) == *key).then(|| (i, look(m - 1, n, &below)))
                });
                let v_witness = (0..n).find_map(|i| {
                    let below = v_face(m, n, key, i);
                    (v_degen(m, n - 1, &below, i) == *key).then(|| (i, look(m, n - 1, &below)))
                });
                cell.push(BisimplexData { h_faces, h_degens, v_faces, v_degens, h_witness, v_witness });
            }
            out_row.push(cell);
        }
        out.push(out_row);
    }
    (TruncatedBisimplicialSet { h_bound, v_bound, grid: out }, index)
}

/// The box product of two truncated simplicial sets, with element lookup
/// tables in both directions.
///
/// Elements at bidegree `(m, n)` are the pairs of an `m`-simplex of the
/// left factor and an `n`-simplex of the right factor; the horizontal
/// structure acts on the left coordinate and the vertical structure on
/// the right.
#[derive(Clone, Debug)]
pub struct BoxProduct {
    set: Rc<TruncatedBisimplicialSet>,
    left: Rc<TruncatedSimplicialSet>,
    right: Rc<TruncatedSimplicialSet>,
    pairs: Vec<Vec<Vec<(usize, usize)>>>,
    index: Vec<Vec<BTreeMap<(usize, usize), usize>>>,
}

impl BoxProduct {
    pub fn set(&self) -> &TruncatedBisimplicialSet {
        &self.set
    }

    pub fn set_rc(&self) -> &Rc<TruncatedBisimplicialSet> {
        &self.set
    }

    pub fn left(&self) -> &Rc<TruncatedSimplicialSet> {
        &self.left
    }

    pub fn right(&self) -> &Rc<TruncatedSimplicialSet> {
        &self.right
    }

    /// The coordinates of an element.
    pub fn pair_of(&self, id: BisimplexId) -> (SimplexId, SimplexId) {
        let (x, y) = self.pairs[id.m][id.n][id.index];
        (SimplexId { level: id.m, index: x }, SimplexId { level: id.n, index: y })
    }

    /// The element with the given coordinates.
    pub fn pair_id(&self, x: SimplexId, y: SimplexId) -> BisimplexId {
        let index = self.index[x.level][y.level][&(x.index, y.index)];
        BisimplexId { m: x.level, n: y.level, index }
    }
}

/// Form the box product `left □ right`.  The horizontal bound is the
/// bound of `left`, the vertical bound that of `right`.
pub fn box_product(
    left: &Rc<TruncatedSimplicialSet>,
    right: &Rc<TruncatedSimplicialSet>,
) -> BoxProduct {
    let h_bound = left.bound();
    let v_bound = right.bound();
    let grid: Vec<Vec<Vec<(usize, usize)>>> = (0..=h_bound)
        .map(|m| {
            (0..=v_bound)
                .map(|n| {
                    (0..left.level_len(m))
                        .flat_map(|x| (0..right.level_len(n)).map(move |y| (x, y)))
                        .collect()
                })
                .collect()
        })
        .collect();
    let (set, index) = assemble_bicomplex(
        h_bound,
        v_bound,
        grid.clone(),
        |m, _, key: &(usize, usize), i| {
            (left.face(SimplexId { level: m, index: key.0 }, i).index, key.1)
        },
        |m, _, key, i| (left.degeneracy(SimplexId { level: m, index: key.0 }, i).index, key.1),
        |_, n, key, i| (key.0, right.face(SimplexId { level: n, index: key.1 }, i).index),
        |_, n, key, i| (key.0, right.degeneracy(SimplexId { level: n, index: key.1 }, i).index),
    );
    BoxProduct { set: Rc::new(set), left: Rc::clone(left), right: Rc::clone(right), pairs: grid, index }
}

/// The terminal truncated bisimplicial set: a single element at every
/// bidegree.
pub fn terminal_bisimplicial(h_bound: usize, v_bound: usize) -> Rc<TruncatedBisimplicialSet> {
    let grid: Vec<Vec<Vec<()>>> = vec![vec![vec![()]; v_bound + 1]; h_bound + 1];
    let trivial = |_: usize, _: usize, _: &(), _: usize| ();
    let (set, _) = assemble_bicomplex(h_bound, v_bound, grid, trivial, trivial, trivial, trivial);
    Rc::new(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{divisor_lattice, nerve};
    use crate::simpset::standard_simplex;

    fn delta(n: usize, bound: usize) -> Rc<TruncatedSimplicialSet> {
        Rc::new(standard_simplex(n, bound))
    }

    #[test]
    fn box_of_two_points_is_terminal() {
        let b = box_product(&delta(0, 2), &delta(0, 3));
        assert_eq!(*b.set(), *terminal_bisimplicial(2, 3));
        for id in b.set().all_elements() {
            assert_eq!(b.set().len(id.m, id.n), 1);
        }
        b.set().validate().unwrap();
    }

    #[test]
    fn interval_box_point_has_three_edges_in_the_first_column() {
        // (Δ¹ □ Δ⁰) at bidegree (1, 0): the three 1-simplices of Δ¹
        // (two degenerate, one not) paired with the unique point.
        let b = box_product(&delta(1, 1), &delta(0, 0));
        assert_eq!(b.set().len(1, 0), 3);
        assert_eq!(b.set().len(1, 0), b.left().level_len(1) * b.right().level_len(0));
        b.set().validate().unwrap();
    }

    #[test]
    fn box_bidegree_sizes_are_products() {
        let a = delta(2, 2);
        let c = Rc::new(divisor_lattice(6));
        let y = nerve(&c, 2);
        let b = box_product(&a, y.complex_rc());
        for m in 0..=2 {
            for n in 0..=2 {
                assert_eq!(b.set().len(m, n), a.level_len(m) * y.complex().level_len(n));
            }
        }
        b.set().validate().unwrap();
    }

    #[test]
    fn rows_and_columns_recover_the_factors() {
        let a = delta(2, 2);
        let c = delta(1, 1);
        let b = box_product(&a, &c);
        // Row 0 pairs every simplex of the left factor with the unique
        // vertex of Δ¹ it restricts to — the vertex count is 2, so row n
        // has level_len(m) * 2 simplices; column 0 mirrors this.
        for n in 0..=1 {
            let row = b.set().row(n);
            row.validate().unwrap();
            for m in 0..=2 {
                assert_eq!(row.level_len(m), a.level_len(m) * c.level_len(n));
            }
        }
        for m in 0..=2 {
            let col = b.set().column(m);
            col.validate().unwrap();
            for n in 0..=1 {
                assert_eq!(col.level_len(n), a.level_len(m) * c.level_len(n));
            }
        }
    }

    #[test]
    fn row_of_a_box_with_a_point_is_the_left_factor() {
        let a = delta(2, 2);
        let b = box_product(&a, &delta(0, 0));
        assert_eq!(*b.set().row(0), *a);
    }

    #[test]
    fn pair_lookups_round_trip() {
        let b = box_product(&delta(1, 1), &delta(2, 2));
        for id in b.set().all_elements() {
            let (x, y) = b.pair_of(id);
            assert_eq!(b.pair_id(x, y), id);
        }
    }

    #[test]
    fn vertices_project_to_coordinate_vertices() {
        let left = delta(2, 2);
        let right = delta(1, 1);
        let b = box_product(&left, &right);
        for id in b.set().elements(2, 1) {
            let (x, y) = b.pair_of(id);
            for j in 0..=1 {
                let (vx, vy) = b.pair_of(b.set().v_vertex(id, j));
                assert_eq!(vx, x);
                assert_eq!(vy, right.vertex(y, j));
            }
            for j in 0..=2 {
                let (hx, hy) = b.pair_of(b.set().h_vertex(id, j));
                assert_eq!(hx, left.vertex(x, j));
                assert_eq!(hy, y);
            }
        }
    }

    #[test]
    fn degeneracy_witnesses_track_the_degenerate_coordinate() {
        let b = box_product(&delta(1, 1), &delta(1, 1));
        for id in b.set().elements(1, 1) {
            let (x, y) = b.pair_of(id);
            assert_eq!(b.set().is_h_degenerate(id), b.left().is_degenerate(x));
            assert_eq!(b.set().is_v_degenerate(id), b.right().is_degenerate(y));
            if let Some((i, t)) = b.set().h_witness(id) {
                assert_eq!(b.set().h_degen(t, i), id);
            }
            if let Some((i, t)) = b.set().v_witness(id) {
                assert_eq!(b.set().v_degen(t, i), id);
            }
        }
    }
}
