//! Exact chromatic numbers by branch and bound.
//!
//! The lower bound is a greedily grown clique, the upper bound a DSATUR
//! colouring. Each candidate colour count between the two is decided by a
//! DSATUR-ordered backtracking search that only opens one new colour class
//! at a time. Vertex and colour orders are fixed, so witnesses are
//! reproducible.

use serde::Serialize;

use super::graph::Graph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Colouring {
    pub colours: usize,
    pub assignment: Vec<usize>,
}

impl Colouring {
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.assignment.len() == g.vertex_count()
            && self.assignment.iter().all(|&c| c < self.colours)
            && g.edges().iter().all(|&(u, v)| self.assignment[u] != self.assignment[v])
    }
}

fn check_loopless(g: &Graph) -> Result<()> {
    match (0..g.vertex_count()).find(|&v| g.has_loop(v)) {
        Some(v) => Err(Error::Looped(v)),
        None => Ok(()),
    }
}

/// Exact chromatic number with a witness colouring. Limited to 64 vertices.
pub fn chromatic_number(g: &Graph) -> Result<Colouring> {
    check_loopless(g)?;
    let adj = g.masks()?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Colouring { colours: 0, assignment: vec![] });
    }
    let lower = greedy_clique(&adj).count_ones() as usize;
    let mut best = dsatur_greedy(&adj);
    let mut colours = best.iter().max().map_or(0, |&c| c + 1);
    while colours > lower {
        match colour_with(&adj, colours - 1) {
            Some(assignment) => {
                best = assignment;
                colours -= 1;
            }
            None => break,
        }
    }
    Ok(Colouring { colours, assignment: best })
}

/// A proper colouring with at most `colours` colours, if one exists.
pub fn colour_with_at_most(g: &Graph, colours: usize) -> Result<Option<Colouring>> {
    check_loopless(g)?;
    let adj = g.masks()?;
    Ok(colour_with(&adj, colours).map(|assignment| {
        let used = assignment.iter().max().map_or(0, |&c| c + 1);
        Colouring { colours: used, assignment }
    }))
}

/// True iff deleting any single vertex lowers the chromatic number.
pub fn vertex_criticality_check(g: &Graph) -> Result<bool> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let chi = chromatic_number(g)?.colours;
    for v in 0..g.vertex_count() {
        let smaller = g.remove_vertex(v);
        if colour_with_at_most(&smaller, chi - 1)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn greedy_clique(adj: &[u64]) -> u64 {
    let n = adj.len();
    let mut best = 0u64;
    for start in 0..n {
        let mut clique = 1u64 << start;
        let mut candidates = adj[start];
        while candidates != 0 {
            // pick the candidate with most neighbours among the remaining candidates
            let mut pick = None;
            let mut pick_score = 0;
            let mut c = candidates;
            while c != 0 {
                let v = c.trailing_zeros() as usize;
                c &= c - 1;
                let score = (adj[v] & candidates).count_ones() + 1;
                if pick.is_none() || score > pick_score {
                    pick = Some(v);
                    pick_score = score;
                }
            }
            let v = pick.expect("nonempty candidates");
            clique |= 1 << v;
            candidates &= adj[v];
        }
        if clique.count_ones() > best.count_ones() {
            best = clique;
        }
    }
    best
}

const UNCOLOURED: usize = usize::MAX;

fn pick_dsatur(adj: &[u64], assignment: &[usize], forbidden: &[u64]) -> Option<usize> {
    let mut best: Option<(u32, u32, usize)> = None;
    for v in 0..adj.len() {
        if assignment[v] != UNCOLOURED {
            continue;
        }
        let saturation = forbidden[v].count_ones();
        let uncoloured_degree = (0..adj.len())
            .filter(|&u| adj[v] >> u & 1 == 1 && assignment[u] == UNCOLOURED)
            .count() as u32;
        let key = (saturation, uncoloured_degree, usize::MAX - v);
        if best.is_none_or(|b| key > b) {
            best = Some(key);
        }
    }
    best.map(|(_, _, inv)| usize::MAX - inv)
}

fn dsatur_greedy(adj: &[u64]) -> Vec<usize> {
    let n = adj.len();
    let mut assignment = vec![UNCOLOURED; n];
    let mut forbidden = vec![0u64; n];
    while let Some(v) = pick_dsatur(adj, &assignment, &forbidden) {
        let c = (!forbidden[v]).trailing_zeros() as usize;
        assign(adj, &mut assignment, &mut forbidden, v, c);
    }
    assignment
}

fn assign(adj: &[u64], assignment: &mut [usize], forbidden: &mut [u64], v: usize, c: usize) {
    assignment[v] = c;
    let mut nb = adj[v];
    while nb != 0 {
        let u = nb.trailing_zeros() as usize;
        nb &= nb - 1;
        forbidden[u] |= 1 << c;
    }
}

fn recompute_forbidden(adj: &[u64], assignment: &[usize]) -> Vec<u64> {
    (0..adj.len())
        .map(|v| {
            let mut mask = 0u64;
            let mut nb = adj[v];
            while nb != 0 {
                let u = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if assignment[u] != UNCOLOURED {
                    mask |= 1 << assignment[u];
                }
            }
            mask
        })
        .collect()
}

fn colour_with(adj: &[u64], colours: usize) -> Option<Vec<usize>> {
    let n = adj.len();
    if n == 0 {
        return Some(vec![]);
    }
    if colours == 0 || colours > 64 {
        return if colours > 64 { Some(dsatur_greedy(adj)) } else { None };
    }
    let mut assignment = vec![UNCOLOURED; n];
    if search(adj, colours, &mut assignment, 0) {
        Some(assignment)
    } else {
        None
    }
}

fn search(adj: &[u64], colours: usize, assignment: &mut Vec<usize>, used: usize) -> bool {
    let forbidden = recompute_forbidden(adj, assignment);
    let v = match pick_dsatur(adj, assignment, &forbidden) {
        Some(v) => v,
        None => return true,
    };
    let limit = (used + 1).min(colours);
    for c in 0..limit {
        if forbidden[v] >> c & 1 == 1 {
            continue;
        }
        assignment[v] = c;
        if search(adj, colours, assignment, used.max(c + 1)) {
            return true;
        }
        assignment[v] = UNCOLOURED;
    }
    false
}
