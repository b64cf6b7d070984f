use std::collections::HashMap;

use serde::Serialize;

use super::poset::FinitePoset;
use super::simplicial::{SimplicialComplex, MAX_FACES};
use crate::error::{Error, Result};
use crate::graphs::Graph;

/// Largest Hom poset that will be built.
pub const MAX_HOM_CELLS: u128 = 1_000_000;

/// A multihomomorphism `G -> H`: for each vertex of `G` a nonempty set of
/// vertices of `H`, packed as a mask (so `H` has at most 64 vertices).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MultiHom {
    pub images: Vec<u64>,
}

impl MultiHom {
    pub fn new(images: Vec<u64>) -> Self {
        Self { images }
    }

    pub fn leq(&self, other: &Self) -> bool {
        self.images.len() == other.images.len() && self.images.iter().zip(&other.images).all(|(a, b)| a & !b == 0)
    }

    /// Cell dimension `sum (|f(v)| - 1)`.
    pub fn dimension(&self) -> usize {
        self.images.iter().map(|m| m.count_ones() as usize - 1).sum()
    }

    /// True iff every product `f(u) x f(v)` over an edge `uv` of `g` lies in `E(h)`.
    pub fn is_valid(&self, g: &Graph, h: &Graph) -> bool {
        let Ok(adj) = h.masks() else { return false };
        self.images.len() == g.vertex_count()
            && self.images.iter().all(|&m| m != 0 && m >> h.vertex_count() == 0)
            && g.edges().iter().all(|&(u, v)| {
                ones(self.images[u]).all(|x| self.images[v] & !adj[x] == 0)
            })
    }

    /// Vertex relabelling of the target, `perm[x]` being the image of `x`.
    pub fn map_target(&self, perm: &[usize]) -> Self {
        Self {
            images: self.images.iter().map(|&m| ones(m).fold(0u64, |acc, x| acc | 1 << perm[x])).collect(),
        }
    }
}

fn ones(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let x = m.trailing_zeros() as usize;
            m &= m - 1;
            x
        })
    })
}

/// The poset of multihomomorphisms, with cells indexed as in `cells`.
#[derive(Debug, Clone)]
pub struct HomPoset {
    pub cells: Vec<MultiHom>,
    pub poset: FinitePoset,
}

impl HomPoset {
    pub fn index(&self) -> HashMap<&MultiHom, usize> {
        self.cells.iter().enumerate().map(|(i, c)| (c, i)).collect()
    }
}

/// Crude upper bound `(2^|H| - 1)^|G|` on the number of cells.
pub fn estimate_hom_size(g: &Graph, h: &Graph) -> u128 {
    let per_vertex = if h.vertex_count() >= 127 { u128::MAX } else { (1u128 << h.vertex_count()) - 1 };
    (0..g.vertex_count()).fold(1u128, |acc, _| acc.saturating_mul(per_vertex))
}

/// `Hom(G, H)` as a poset under coordinatewise inclusion. Refuses with
/// [`Error::TooLarge`] when the cell count exceeds `limit`.
pub fn hom_poset(g: &Graph, h: &Graph, limit: u128) -> Result<HomPoset> {
    let adj = h.masks()?;
    let full = if h.vertex_count() == 64 { u64::MAX } else { (1u64 << h.vertex_count()) - 1 };
    let looped: u64 = h.looped_vertices().iter().fold(0, |acc, &v| acc | 1 << v);
    let mut cells = Vec::new();
    let mut current = vec![0u64; g.vertex_count()];
    let ctx = Enumeration { g, adj: &adj, full, looped, limit };
    if !ctx.enumerate(0, &mut current, &mut cells) {
        return Err(Error::TooLarge { what: "Hom poset", size: estimate_hom_size(g, h).max(limit + 1), limit });
    }
    cells.sort();
    let index: HashMap<&MultiHom, usize> = cells.iter().enumerate().map(|(i, c)| (c, i)).collect();
    // g covers f iff g adds exactly one target vertex at one source vertex
    let covers: Vec<Vec<usize>> = cells
        .iter()
        .map(|f| {
            let mut ups = Vec::new();
            for v in 0..f.images.len() {
                for x in ones(full & !f.images[v]) {
                    let mut bigger = f.clone();
                    bigger.images[v] |= 1 << x;
                    if let Some(&j) = index.get(&bigger) {
                        ups.push(j);
                    }
                }
            }
            ups
        })
        .collect();
    drop(index);
    Ok(HomPoset { poset: FinitePoset::from_covers(covers), cells })
}

struct Enumeration<'a> {
    g: &'a Graph,
    adj: &'a [u64],
    full: u64,
    looped: u64,
    limit: u128,
}

impl Enumeration<'_> {
    fn enumerate(&self, v: usize, current: &mut Vec<u64>, out: &mut Vec<MultiHom>) -> bool {
        if v == current.len() {
            if out.len() as u128 >= self.limit {
                return false;
            }
            out.push(MultiHom::new(current.clone()));
            return true;
        }
        let mut allowed = self.full;
        for u in 0..v {
            if self.g.has_edge(u, v) {
                for x in ones(current[u]) {
                    allowed &= self.adj[x];
                }
            }
        }
        let self_loop = self.g.has_loop(v);
        if self_loop {
            allowed &= self.looped;
        }
        // nonempty submasks of `allowed`
        let mut sub = allowed;
        while sub != 0 {
            let ok = !self_loop || ones(sub).all(|x| sub & !self.adj[x] == 0);
            if ok {
                current[v] = sub;
                if !self.enumerate(v + 1, current, out) {
                    return false;
                }
            }
            sub = (sub - 1) & allowed;
        }
        current[v] = 0;
        true
    }
}

/// Neighbourhood complex: simplices are vertex sets with a common neighbour.
pub fn neighbourhood_complex(g: &Graph) -> Result<SimplicialComplex> {
    let facets: Vec<Vec<u32>> = (0..g.vertex_count())
        .map(|v| g.neighbours(v).into_iter().map(|u| u as u32).collect::<Vec<u32>>())
        .filter(|f| !f.is_empty())
        .collect();
    SimplicialComplex::from_facets(facets)
}

/// Order complex: simplices are the chains of the poset.
pub fn order_complex(p: &FinitePoset) -> Result<SimplicialComplex> {
    let count = p.chain_count();
    if count > MAX_FACES {
        return Err(Error::TooLarge { what: "order complex", size: count, limit: MAX_FACES });
    }
    let chains = p.chains();
    Ok(SimplicialComplex::from_closed_faces(
        chains.into_iter().map(|d| d.into_iter().map(|c| c.into_iter().map(|x| x as u32).collect()).collect()).collect(),
    ))
}

/// Looped graph on the atoms of `p`, two atoms adjacent iff they have a
/// common upper bound. Every atom carries a loop.
pub fn looped_one_skeleton(p: &FinitePoset) -> Graph {
    let atoms = p.atoms();
    let ups: Vec<Vec<usize>> = atoms
        .iter()
        .map(|&a| {
            let mut u = p.strictly_above(a).to_vec();
            u.push(a);
            u.sort_unstable();
            u
        })
        .collect();
    let mut g = Graph::empty(atoms.len());
    for i in 0..atoms.len() {
        g.add_edge(i, i);
        for j in i + 1..atoms.len() {
            if intersects(&ups[i], &ups[j]) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

fn intersects(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}
