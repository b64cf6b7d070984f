use super::graph::Graph;
use crate::error::{Error, Result};

/// Largest exponential graph [`exponential`] will materialise.
pub const MAX_EXPONENTIAL_VERTICES: u128 = 4096;

/// Categorical product: `(u,u') ~ (v,v')` iff `u ~ v` and `u' ~ v'`.
///
/// Vertex `(u, u')` has index `u * |V(H)| + u'`.
pub fn product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.vertex_count();
    let mut out = Graph::empty(g.vertex_count() * nh);
    for (u, v) in g.edges() {
        for (a, b) in h.edges() {
            out.add_edge(u * nh + a, v * nh + b);
            out.add_edge(u * nh + b, v * nh + a);
        }
    }
    out
}

/// Decodes vertex `index` of `[G,H]` into the function `V(G) -> V(H)` it stands for.
pub fn exponential_vertex(index: usize, g_order: usize, h_order: usize) -> Vec<usize> {
    let mut f = vec![0; g_order];
    let mut rest = index;
    for slot in f.iter_mut() {
        *slot = rest % h_order;
        rest /= h_order;
    }
    f
}

/// The exponential graph `[G,H]`: all functions `V(G) -> V(H)`, with `f ~ g`
/// iff `(f(u), g(v))` is an edge of `H` for every edge `(u,v)` of `G`.
///
/// Looped vertices are exactly the graph homomorphisms `G -> H`.
pub fn exponential(g: &Graph, h: &Graph) -> Result<Graph> {
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    let size = (nh as u128).checked_pow(ng as u32).unwrap_or(u128::MAX);
    if size > MAX_EXPONENTIAL_VERTICES {
        return Err(Error::TooLarge { what: "exponential graph", size, limit: MAX_EXPONENTIAL_VERTICES });
    }
    let size = size as usize;
    let functions: Vec<Vec<usize>> = (0..size).map(|i| exponential_vertex(i, ng, nh)).collect();
    let mut arcs = Vec::new();
    for (u, v) in g.edges() {
        arcs.push((u, v));
        if u != v {
            arcs.push((v, u));
        }
    }
    let mut out = Graph::empty(size);
    for (i, f) in functions.iter().enumerate() {
        for (j, k) in functions.iter().enumerate().skip(i) {
            if arcs.iter().all(|&(u, v)| h.has_edge(f[u], k[v])) {
                out.add_edge(i, j);
            }
        }
    }
    Ok(out)
}

/// Counts graph homomorphisms `G -> H` by backtracking.
pub fn count_homomorphisms(g: &Graph, h: &Graph) -> u64 {
    fn extend(g: &Graph, h: &Graph, f: &mut Vec<usize>, count: &mut u64) {
        let u = f.len();
        if u == g.vertex_count() {
            *count += 1;
            return;
        }
        for x in 0..h.vertex_count() {
            if g.has_loop(u) && !h.has_loop(x) {
                continue;
            }
            if (0..u).all(|w| !g.has_edge(u, w) || h.has_edge(x, f[w])) {
                f.push(x);
                extend(g, h, f, count);
                f.pop();
            }
        }
    }
    let mut count = 0;
    extend(g, h, &mut Vec::new(), &mut count);
    count
}
