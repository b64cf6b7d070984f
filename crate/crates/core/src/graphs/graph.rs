use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::circular::{enumerate_stable_sets, enumerate_subsets, CircularSet};
use crate::error::{Error, Result};

/// A finite graph with a symmetric adjacency relation. Loops are allowed.
///
/// Adjacency rows are bitsets, so edge tests are O(1) and neighbourhood
/// intersections are word-parallel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<Vec<u64>>,
    labels: Option<Vec<CircularSet>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Self { n, words, rows: vec![vec![0; words]; n], labels: None }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            g.add_edge(u, (u + 1) % n);
        }
        g
    }

    /// The terminal graph: one vertex with a loop.
    pub fn looped_point() -> Self {
        Self::from_edges(1, &[(0, 0)])
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range");
        self.rows[u][v / 64] |= 1 << (v % 64);
        self.rows[v][u / 64] |= 1 << (u % 64);
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u][v / 64] >> (v % 64) & 1 == 1
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.has_edge(v, v)
    }

    pub fn looped_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.has_loop(v)).collect()
    }

    pub fn is_loopless(&self) -> bool {
        (0..self.n).all(|v| !self.has_loop(v))
    }

    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.has_edge(v, u)).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Unordered edges `(u, v)` with `u <= v`, loops included.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn labels(&self) -> Option<&[CircularSet]> {
        self.labels.as_deref()
    }

    pub fn with_labels(mut self, labels: Vec<CircularSet>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::InvalidParameters(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        let mut seen = std::collections::HashSet::new();
        if !labels.iter().all(|l| seen.insert(*l)) {
            return Err(Error::InvalidParameters("labels are not injective".into()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Map from label bitmask to vertex index.
    pub fn label_index(&self) -> Result<HashMap<u64, usize>> {
        let labels = self.labels.as_ref().ok_or(Error::MissingLabels)?;
        Ok(labels.iter().enumerate().map(|(i, l)| (l.bits(), i)).collect())
    }

    pub fn induced_subgraph(&self, keep: &[usize]) -> Self {
        let mut g = Self::empty(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        if let Some(labels) = &self.labels {
            g.labels = Some(keep.iter().map(|&v| labels[v]).collect());
        }
        g
    }

    pub fn remove_vertex(&self, v: usize) -> Self {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Adjacency as `u64` masks; only valid for graphs with at most 64 vertices.
    pub(crate) fn masks(&self) -> Result<Vec<u64>> {
        if self.n > 64 {
            return Err(Error::TooLarge { what: "graph", size: self.n as u128, limit: 64 });
        }
        Ok(self.rows.iter().map(|r| r[0]).collect())
    }

    /// DIMACS edge format, 1-based, loops omitted.
    pub fn to_dimacs(&self) -> String {
        let edges: Vec<_> = self.edges().into_iter().filter(|(u, v)| u != v).collect();
        let mut out = format!("p edge {} {}\n", self.n, edges.len());
        for (u, v) in edges {
            out.push_str(&format!("e {} {}\n", u + 1, v + 1));
        }
        out
    }
}

fn disjointness_graph(sets: Vec<CircularSet>) -> Graph {
    let mut g = Graph::empty(sets.len());
    for (i, s) in sets.iter().enumerate() {
        for (j, t) in sets.iter().enumerate().skip(i + 1) {
            if s.is_disjoint(t) {
                g.add_edge(i, j);
            }
        }
    }
    g.labels = Some(sets);
    g
}

/// The stable Kneser graph `SG(n,k)` on the stable `n`-subsets of `Z_{2n+k}`.
pub fn stable_kneser_graph(n: usize, k: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::ZeroN);
    }
    Ok(disjointness_graph(enumerate_stable_sets(n, 2 * n + k)?))
}

/// The Kneser graph `KG(n,k)` on all `n`-subsets of `Z_{2n+k}`.
pub fn kneser_graph(n: usize, k: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::ZeroN);
    }
    Ok(disjointness_graph(enumerate_subsets(n, 2 * n + k)?))
}

/// JSON form of a (stable) Kneser graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub vertices: Vec<Vec<usize>>,
    pub edges: Vec<[usize; 2]>,
}

impl GraphDocument {
    pub fn new(graph: &Graph, params: Option<(usize, usize)>) -> Self {
        let vertices = match graph.labels() {
            Some(labels) => labels.iter().map(|l| l.members()).collect(),
            None => (0..graph.vertex_count()).map(|v| vec![v]).collect(),
        };
        Self {
            m: params.map(|(n, k)| 2 * n + k),
            n: params.map(|(n, _)| n),
            k: params.map(|(_, k)| k),
            vertices,
            edges: graph.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let n = self.vertices.len();
        let mut g = Graph::empty(n);
        for &[u, v] in &self.edges {
            if u >= n || v >= n {
                return Err(Error::Parse(format!("edge ({u},{v}) out of range")));
            }
            g.add_edge(u, v);
        }
        if let Some(m) = self.m {
            let labels = self
                .vertices
                .iter()
                .map(|members| CircularSet::new(m, members))
                .collect::<Result<Vec<_>>>()?;
            g = g.with_labels(labels)?;
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sg_1k_is_complete() {
        for k in 0..6 {
            let g = stable_kneser_graph(1, k).unwrap();
            assert_eq!(g, Graph::complete(k + 2).with_labels(g.labels().unwrap().to_vec()).unwrap());
        }
    }

    #[test]
    fn sg_n1_is_odd_cycle() {
        for n in 1..7 {
            let g = stable_kneser_graph(n, 1).unwrap();
            assert_eq!(g.vertex_count(), 2 * n + 1);
            assert_eq!(g.edge_count(), 2 * n + 1);
            assert!((0..g.vertex_count()).all(|v| g.degree(v) == 2));
        }
    }

    #[test]
    fn small_counts() {
        assert_eq!(stable_kneser_graph(2, 2).unwrap().vertex_count(), 9);
        let petersen = kneser_graph(2, 1).unwrap();
        assert_eq!((petersen.vertex_count(), petersen.edge_count()), (10, 15));
        let kg20 = kneser_graph(2, 0).unwrap();
        assert_eq!((kg20.vertex_count(), kg20.edge_count()), (6, 3));
        assert_eq!(Graph::complete(3).edge_count(), kneser_graph(1, 1).unwrap().edge_count());
        assert_eq!(stable_kneser_graph(0, 3), Err(Error::ZeroN));
        assert_eq!(kneser_graph(0, 3), Err(Error::ZeroN));
    }

    #[test]
    fn sg_n0_is_single_edge() {
        for n in 1..8 {
            let g = stable_kneser_graph(n, 0).unwrap();
            assert_eq!(g.vertex_count(), 2);
            assert_eq!(g.edges(), vec![(0, 1)]);
        }
    }

    #[test]
    fn stable_kneser_is_induced_subgraph_of_kneser() {
        let kg = kneser_graph(3, 2).unwrap();
        let sg = stable_kneser_graph(3, 2).unwrap();
        let index = kg.label_index().unwrap();
        let keep: Vec<usize> = sg.labels().unwrap().iter().map(|l| index[&l.bits()]).collect();
        assert_eq!(kg.induced_subgraph(&keep), sg);
    }

    #[test]
    fn document_round_trip() {
        let g = stable_kneser_graph(2, 2).unwrap();
        let doc = GraphDocument::new(&g, Some((2, 2)));
        let json = serde_json::to_string(&doc).unwrap();
        let back: GraphDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_graph().unwrap(), g);
        assert_eq!(doc.m, Some(6));
    }

    #[test]
    fn dimacs_export() {
        let text = Graph::cycle(3).to_dimacs();
        assert_eq!(text, "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
    }
}
