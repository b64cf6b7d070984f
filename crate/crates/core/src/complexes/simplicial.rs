use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::poset::FinitePoset;
use crate::error::{Error, Result};

/// Largest number of faces a complex may have.
pub const MAX_FACES: u128 = 5_000_000;

/// Boundary matrices with fewer columns than this are reduced densely.
pub const DENSE_COLUMN_LIMIT: usize = 1 << 13;

/// A finite abstract simplicial complex, stored as all of its faces grouped by
/// dimension. Each face is a sorted list of vertex ids and each dimension is
/// sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    faces: Vec<Vec<Vec<u32>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetDocument {
    pub vertices: usize,
    pub dimension: i64,
    pub facets: Vec<Vec<u32>>,
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        Self { faces: Vec::new() }
    }

    /// The complex generated by the given simplices.
    pub fn from_facets<I, F>(facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: AsRef<[u32]>,
    {
        let mut tops: BTreeSet<Vec<u32>> = BTreeSet::new();
        for f in facets {
            let mut f = f.as_ref().to_vec();
            f.sort_unstable();
            f.dedup();
            if !f.is_empty() {
                tops.insert(f);
            }
        }
        let estimate: u128 = tops.iter().map(|f| (1u128 << f.len().min(120)) - 1).sum();
        let largest = tops.iter().map(Vec::len).max().unwrap_or(0);
        if largest >= 120 || (1u128 << largest) - 1 > MAX_FACES {
            return Err(Error::TooLarge { what: "simplicial complex", size: estimate, limit: MAX_FACES });
        }
        if estimate > MAX_FACES {
            // overlap may make the real count much smaller, so count exactly before refusing
            let exact = count_faces_bounded(&tops, MAX_FACES);
            if exact > MAX_FACES {
                return Err(Error::TooLarge { what: "simplicial complex", size: estimate, limit: MAX_FACES });
            }
        }
        let mut by_dim: Vec<BTreeSet<Vec<u32>>> = Vec::new();
        for f in &tops {
            add_subfaces(f, &mut by_dim);
        }
        Ok(Self { faces: by_dim.into_iter().map(|d| d.into_iter().collect()).collect() })
    }

    /// From a list of faces that is already closed under taking nonempty subsets.
    pub fn from_closed_faces(faces: Vec<Vec<Vec<u32>>>) -> Self {
        let faces = faces
            .into_iter()
            .map(|mut dim| {
                for f in &mut dim {
                    f.sort_unstable();
                }
                dim.sort();
                dim.dedup();
                dim
            })
            .collect::<Vec<_>>();
        let mut c = Self { faces };
        while c.faces.last().is_some_and(Vec::is_empty) {
            c.faces.pop();
        }
        c
    }

    /// Dimension, or -1 for the empty complex.
    pub fn dimension(&self) -> i64 {
        self.faces.len() as i64 - 1
    }

    pub fn faces(&self, dim: usize) -> &[Vec<u32>] {
        self.faces.get(dim).map_or(&[], Vec::as_slice)
    }

    pub fn face_counts(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn face_count(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    pub fn vertices(&self) -> Vec<u32> {
        self.faces(0).iter().map(|f| f[0]).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.faces.iter().enumerate().map(|(d, f)| if d % 2 == 0 { f.len() as i64 } else { -(f.len() as i64) }).sum()
    }

    /// Faces not contained in a larger face.
    pub fn facets(&self) -> Vec<Vec<u32>> {
        let mut covered: BTreeSet<&[u32]> = BTreeSet::new();
        let mut out = Vec::new();
        for d in (0..self.faces.len()).rev() {
            for f in &self.faces[d] {
                if !covered.contains(f.as_slice()) {
                    out.push(f.clone());
                }
            }
            if d > 0 {
                for f in &self.faces[d] {
                    for i in 0..f.len() {
                        let mut g = f.clone();
                        g.remove(i);
                        covered.insert(self.faces[d - 1][self.index_in(d - 1, &g)].as_slice());
                    }
                }
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).reverse().then_with(|| a.cmp(b)));
        out
    }

    fn index_in(&self, dim: usize, face: &[u32]) -> usize {
        self.faces[dim].binary_search_by(|f| f.as_slice().cmp(face)).expect("complex is closed under subsets")
    }

    pub fn to_facet_document(&self) -> FacetDocument {
        FacetDocument { vertices: self.faces(0).len(), dimension: self.dimension(), facets: self.facets() }
    }

    /// Sparse GF(2) boundary matrix from dimension `dim` to `dim - 1`, as
    /// column lists of row indices. Rows and columns follow `faces`.
    pub fn boundary_columns(&self, dim: usize) -> Vec<Vec<u32>> {
        if dim == 0 || dim >= self.faces.len() {
            return vec![Vec::new(); self.faces(dim).len()];
        }
        let lower: HashMap<&[u32], u32> =
            self.faces[dim - 1].iter().enumerate().map(|(i, f)| (f.as_slice(), i as u32)).collect();
        self.faces[dim]
            .iter()
            .map(|f| {
                let mut col: Vec<u32> = (0..f.len())
                    .map(|i| {
                        let mut g = f.clone();
                        g.remove(i);
                        lower[g.as_slice()]
                    })
                    .collect();
                col.sort_unstable();
                col
            })
            .collect()
    }

    /// Boundary matrix in MatrixMarket coordinate pattern format, 1-based.
    pub fn boundary_matrix_market(&self, dim: usize) -> String {
        let cols = self.boundary_columns(dim);
        let rows = if dim == 0 { 0 } else { self.faces(dim - 1).len() };
        let nnz: usize = cols.iter().map(Vec::len).sum();
        let mut out = String::from("%%MatrixMarket matrix coordinate pattern general\n");
        writeln!(out, "{} {} {}", rows, cols.len(), nnz).unwrap();
        for (j, col) in cols.iter().enumerate() {
            for &i in col {
                writeln!(out, "{} {}", i + 1, j + 1).unwrap();
            }
        }
        out
    }

    /// Face poset, ordered by inclusion. Element ids enumerate faces by
    /// dimension, then lexicographically.
    pub fn face_poset(&self) -> (FinitePoset, Vec<Vec<u32>>) {
        let mut offsets = vec![0usize];
        for d in &self.faces {
            offsets.push(offsets.last().unwrap() + d.len());
        }
        let all: Vec<Vec<u32>> = self.faces.iter().flatten().cloned().collect();
        let mut covers = vec![Vec::new(); all.len()];
        for d in 1..self.faces.len() {
            for (j, f) in self.faces[d].iter().enumerate() {
                for i in 0..f.len() {
                    let mut g = f.clone();
                    g.remove(i);
                    covers[offsets[d - 1] + self.index_in(d - 1, &g)].push(offsets[d] + j);
                }
            }
        }
        (FinitePoset::from_covers(covers), all)
    }
}

fn add_subfaces(f: &[u32], by_dim: &mut Vec<BTreeSet<Vec<u32>>>) {
    if by_dim.len() < f.len() {
        by_dim.resize(f.len(), BTreeSet::new());
    }
    if by_dim[f.len() - 1].contains(f) {
        return;
    }
    by_dim[f.len() - 1].insert(f.to_vec());
    if f.len() > 1 {
        for i in 0..f.len() {
            let mut g = f.to_vec();
            g.remove(i);
            add_subfaces(&g, by_dim);
        }
    }
}

fn count_faces_bounded(tops: &BTreeSet<Vec<u32>>, limit: u128) -> u128 {
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut stack: Vec<Vec<u32>> = tops.iter().cloned().collect();
    while let Some(f) = stack.pop() {
        if f.is_empty() || !seen.insert(f.clone()) {
            continue;
        }
        if seen.len() as u128 > limit {
            return seen.len() as u128;
        }
        for i in 0..f.len() {
            let mut g = f.clone();
            g.remove(i);
            stack.push(g);
        }
    }
    seen.len() as u128
}

/// Rank over GF(2) of a matrix given by columns of row indices.
pub fn gf2_rank(rows: usize, columns: &[Vec<u32>]) -> usize {
    if columns.len() < DENSE_COLUMN_LIMIT && (rows as u128) * (columns.len() as u128) <= 1 << 30 {
        gf2_rank_dense(rows, columns)
    } else {
        gf2_rank_sparse(columns)
    }
}

/// Bit-packed Gaussian elimination.
pub fn gf2_rank_dense(rows: usize, columns: &[Vec<u32>]) -> usize {
    let words = columns.len().div_ceil(64);
    if words == 0 || rows == 0 {
        return 0;
    }
    let mut m = vec![0u64; rows * words];
    for (j, col) in columns.iter().enumerate() {
        for &i in col {
            m[i as usize * words + j / 64] |= 1 << (j % 64);
        }
    }
    let mut rank = 0;
    for j in 0..columns.len() {
        let (w, b) = (j / 64, 1u64 << (j % 64));
        let Some(p) = (rank..rows).find(|&i| m[i * words + w] & b != 0) else {
            continue;
        };
        if p != rank {
            for x in 0..words {
                m.swap(p * words + x, rank * words + x);
            }
        }
        let (head, tail) = m.split_at_mut((rank + 1) * words);
        let pivot = &head[rank * words..];
        for row in tail.chunks_exact_mut(words) {
            if row[w] & b != 0 {
                for x in w..words {
                    row[x] ^= pivot[x];
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Standard column reduction with a pivot table keyed by lowest row.
pub fn gf2_rank_sparse(columns: &[Vec<u32>]) -> usize {
    let mut reduced: Vec<Vec<u32>> = Vec::with_capacity(columns.len());
    let mut pivot_of: HashMap<u32, usize> = HashMap::new();
    for col in columns {
        let mut c = col.clone();
        c.sort_unstable();
        c.dedup();
        while let Some(&low) = c.last() {
            match pivot_of.get(&low) {
                Some(&other) => c = symmetric_difference(&c, &reduced[other]),
                None => break,
            }
        }
        if let Some(&low) = c.last() {
            pivot_of.insert(low, reduced.len());
        }
        reduced.push(c);
    }
    pivot_of.len()
}

fn symmetric_difference(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Betti numbers over GF(2), trailing zeros removed.
pub fn z2_betti(complex: &SimplicialComplex) -> Vec<usize> {
    let top = complex.faces.len();
    let ranks: Vec<usize> = (0..=top)
        .map(|d| if d == 0 || d >= top { 0 } else { gf2_rank(complex.faces(d - 1).len(), &complex.boundary_columns(d)) })
        .collect();
    let mut betti: Vec<usize> = (0..top).map(|d| complex.faces(d).len() - ranks[d] - ranks[d + 1]).collect();
    while betti.last() == Some(&0) {
        betti.pop();
    }
    betti
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sphere(d: u32) -> SimplicialComplex {
        let all: Vec<u32> = (0..d + 2).collect();
        let facets: Vec<Vec<u32>> = (0..all.len())
            .map(|i| all.iter().copied().enumerate().filter(|&(j, _)| j != i).map(|(_, v)| v).collect())
            .collect();
        SimplicialComplex::from_facets(facets).unwrap()
    }

    #[test]
    fn spheres() {
        for d in 0..5 {
            let mut expected = vec![0; d as usize + 1];
            expected[0] += 1;
            expected[d as usize] += 1;
            assert_eq!(z2_betti(&sphere(d)), expected, "d={d}");
        }
    }

    #[test]
    fn point_and_empty() {
        assert_eq!(z2_betti(&SimplicialComplex::from_facets([[7u32]]).unwrap()), vec![1]);
        assert_eq!(z2_betti(&SimplicialComplex::empty()), Vec::<usize>::new());
        assert_eq!(SimplicialComplex::empty().dimension(), -1);
    }

    #[test]
    fn projective_plane_has_mod_two_homology() {
        let facets = [
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
            [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3],
        ];
        let rp2 = SimplicialComplex::from_facets(facets).unwrap();
        assert_eq!(rp2.face_counts(), vec![6, 15, 10]);
        assert_eq!(z2_betti(&rp2), vec![1, 1, 1]);
    }

    #[test]
    fn facets_round_trip() {
        let c = SimplicialComplex::from_facets(vec![vec![0, 1, 2], vec![2, 3], vec![1, 0]]).unwrap();
        assert_eq!(c.facets(), vec![vec![0, 1, 2], vec![2, 3]]);
        assert_eq!(c.euler_characteristic(), 1);
        let doc = c.to_facet_document();
        let back: FacetDocument = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
        assert_eq!(SimplicialComplex::from_facets(back.facets).unwrap(), c);
    }

    #[test]
    fn boundary_squares_to_zero() {
        let c = sphere(3);
        for d in 2..=c.dimension() as usize {
            let outer = c.boundary_columns(d);
            let inner = c.boundary_columns(d - 1);
            for col in &outer {
                let mut acc: Vec<u32> = Vec::new();
                for &i in col {
                    acc = symmetric_difference(&acc, &inner[i as usize]);
                }
                assert!(acc.is_empty());
            }
        }
    }

    #[test]
    fn matrix_market_header() {
        let c = SimplicialComplex::from_facets([[0u32, 1]]).unwrap();
        let mm = c.boundary_matrix_market(1);
        assert_eq!(mm, "%%MatrixMarket matrix coordinate pattern general\n2 1 2\n1 1\n2 1\n");
    }

    #[test]
    fn face_poset_of_triangle_boundary() {
        let c = sphere(1);
        let (p, faces) = c.face_poset();
        assert_eq!(faces.len(), 6);
        assert_eq!(p.atoms().len(), 3);
        let chains = p.chains();
        let sd = SimplicialComplex::from_closed_faces(
            chains.iter().map(|d| d.iter().map(|c| c.iter().map(|&x| x as u32).collect()).collect()).collect(),
        );
        assert_eq!(sd.face_counts(), vec![6, 6]);
        assert_eq!(z2_betti(&sd), vec![1, 1]);
    }

    #[test]
    fn refuses_huge_simplex() {
        let big: Vec<u32> = (0..40).collect();
        assert!(matches!(SimplicialComplex::from_facets([big]), Err(Error::TooLarge { .. })));
    }

    proptest! {
        #[test]
        fn dense_and_sparse_ranks_agree(
            rows in 1usize..40,
            cols in proptest::collection::vec(proptest::collection::vec(0u32..40, 0..8), 0..70),
        ) {
            let cols: Vec<Vec<u32>> = cols
                .into_iter()
                .map(|c| {
                    let mut c: Vec<u32> = c.into_iter().filter(|&i| (i as usize) < rows).collect();
                    c.sort_unstable();
                    c.dedup();
                    c
                })
                .collect();
            prop_assert_eq!(gf2_rank_dense(rows, &cols), gf2_rank_sparse(&cols));
        }
    }
}
