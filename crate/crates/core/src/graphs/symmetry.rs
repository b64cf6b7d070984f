use std::collections::BTreeMap;

use serde::Serialize;

use super::circular::{dihedral_act, CircularSet, DihedralElement};
use super::graph::Graph;
use crate::error::{Error, Result};

/// Automorphism search is only offered up to this many vertices.
pub const MAX_AUTOMORPHISM_VERTICES: usize = 16;

/// Order of the automorphism group, by backtracking over degree classes.
pub fn automorphism_group_order(g: &Graph) -> Result<u64> {
    let n = g.vertex_count();
    if n > MAX_AUTOMORPHISM_VERTICES {
        return Err(Error::TooLarge {
            what: "automorphism search",
            size: n as u128,
            limit: MAX_AUTOMORPHISM_VERTICES as u128,
        });
    }
    // vertices are only mapped inside their (degree, loop) class
    let class: Vec<(usize, bool)> = (0..n).map(|v| (g.degree(v), g.has_loop(v))).collect();
    let mut image = Vec::with_capacity(n);
    let mut used = vec![false; n];
    let mut count = 0;
    extend(g, &class, &mut image, &mut used, &mut count);
    Ok(count)
}

fn extend(g: &Graph, class: &[(usize, bool)], image: &mut Vec<usize>, used: &mut [bool], count: &mut u64) {
    let v = image.len();
    if v == g.vertex_count() {
        *count += 1;
        return;
    }
    for w in 0..g.vertex_count() {
        if used[w] || class[w] != class[v] {
            continue;
        }
        if (0..v).all(|u| g.has_edge(u, v) == g.has_edge(image[u], w)) {
            image.push(w);
            used[w] = true;
            extend(g, class, image, used, count);
            used[w] = false;
            image.pop();
        }
    }
}

/// Outcome of the freeness test for one group element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum FreenessWitness {
    /// `(v, v . gamma^power)` is an edge.
    Witness { vertex: CircularSet, power: usize },
    NotFree,
}

/// For every non-identity element `gamma` of the group generated by
/// `generators`, looks for a vertex `v` and power `p >= 1` with
/// `(v, v . gamma^p)` an edge of `T`. Vertices are searched in index order,
/// powers in increasing order.
pub fn free_action_check(
    t: &Graph,
    generators: &[DihedralElement],
) -> Result<BTreeMap<DihedralElement, FreenessWitness>> {
    let labels = t.labels().ok_or(Error::MissingLabels)?;
    let index = t.label_index()?;
    let m = match labels.first() {
        Some(l) => l.modulus(),
        None => return Ok(BTreeMap::new()),
    };
    let image = |v: usize, g: &DihedralElement| -> Result<usize> {
        let moved = dihedral_act(&labels[v], g)?;
        index.get(&moved.bits()).copied().ok_or(Error::ActionNotAutomorphism)
    };
    for g in generators {
        for (u, v) in t.edges() {
            if !t.has_edge(image(u, g)?, image(v, g)?) {
                return Err(Error::ActionNotAutomorphism);
            }
        }
    }
    let mut out = BTreeMap::new();
    for gamma in DihedralElement::generated(m, generators) {
        if gamma.is_identity() {
            continue;
        }
        let order = gamma.order();
        let mut found = FreenessWitness::NotFree;
        'search: for v in 0..t.vertex_count() {
            for power in 1..order {
                let w = image(v, &gamma.pow(power))?;
                if t.has_edge(v, w) {
                    found = FreenessWitness::Witness { vertex: labels[v], power };
                    break 'search;
                }
            }
        }
        out.insert(gamma, found);
    }
    Ok(out)
}
