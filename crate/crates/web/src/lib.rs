//! Browser bindings for the sgtopo demo page. Every export returns a JSON
//! string; the page parses it and draws.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use sgtopo::charclasses::classify;
use sgtopo::complexes::CovectorMap;
use sgtopo::geometry::{moment_vectors, representation, v_of_set};
use sgtopo::graphs::{chromatic_number, stable_kneser_graph, stable_set_count, DihedralElement};
use sgtopo::matroid::{dihedral_act_sign, is_covector, SignVector};

const MAX_DRAWN_VERTICES: u128 = 1500;
const MAX_COLOURED_VERTICES: usize = 40;

#[derive(Serialize)]
struct Vertex {
    members: Vec<usize>,
    x: f64,
    y: f64,
}

#[derive(Serialize)]
struct GraphView {
    n: usize,
    k: usize,
    m: usize,
    vertices: Vec<Vertex>,
    edges: Vec<[usize; 2]>,
    chi: Option<usize>,
    colouring: Option<Vec<usize>>,
    max_edge_defect: f64,
}

fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

/// `SG(n,k)` with every vertex placed at the projection of `v(S)` onto the
/// first rotation plane of the representation.
pub fn graph_view_json(n: usize, k: usize) -> Result<String, String> {
    let count = stable_set_count(n, 2 * n + k);
    if count > MAX_DRAWN_VERTICES {
        return Err(format!("SG({n},{k}) has {count} vertices; the page draws at most {MAX_DRAWN_VERTICES}"));
    }
    let g = stable_kneser_graph(n, k).map_err(|e| e.to_string())?;
    let config = moment_vectors(n, k).map_err(|e| e.to_string())?;
    let rep = representation(n, k).map_err(|e| e.to_string())?;
    let plane = rep.blocks().into_iter().find(|&(_, size)| size == 2).map(|(at, _)| at).unwrap_or(0);
    let labels = g.labels().ok_or("graph has no labels")?;
    let mut images = Vec::with_capacity(labels.len());
    for s in labels {
        images.push(v_of_set(s, &config).map_err(|e| e.to_string())?);
    }
    let vertices = labels
        .iter()
        .zip(&images)
        .map(|(s, v)| Vertex {
            members: s.members(),
            x: v[plane],
            y: if v.len() > plane + 1 { v[plane + 1] } else { 0.0 },
        })
        .collect();
    let edges: Vec<[usize; 2]> = g.edges().into_iter().map(|(u, v)| [u, v]).collect();
    let max_edge_defect = edges.iter().map(|&[u, v]| (&images[u] + &images[v]).norm()).fold(0.0, f64::max);
    let colouring = if g.vertex_count() <= MAX_COLOURED_VERTICES {
        Some(chromatic_number(&g).map_err(|e| e.to_string())?)
    } else {
        None
    };
    to_json(&GraphView {
        n,
        k,
        m: 2 * n + k,
        vertices,
        edges,
        chi: colouring.as_ref().map(|c| c.colours),
        colouring: colouring.map(|c| c.assignment),
        max_edge_defect,
    })
}

#[derive(Serialize)]
struct CovectorView {
    covector: String,
    is_covector: bool,
    sides: Option<[Vec<usize>; 2]>,
    vertices: Option<[Vec<Vec<usize>>; 2]>,
    sigma: Option<String>,
    rho: Option<String>,
}

/// The two vertex sets a covector of `C^{m,k+1}` picks out in `SG(n,k)`,
/// plus its images under the generators `sigma` and `rho`.
pub fn covector_view_json(signs: &str, n: usize, k: usize) -> Result<String, String> {
    let s: SignVector = signs.trim().parse().map_err(|e: sgtopo::Error| e.to_string())?;
    let m = 2 * n + k;
    if s.len() != m {
        return Err(format!("need {m} signs for SG({n},{k}), got {}", s.len()));
    }
    let mut view = CovectorView {
        covector: s.to_string(),
        is_covector: !s.is_zero() && is_covector(&s, k),
        sides: None,
        vertices: None,
        sigma: None,
        rho: None,
    };
    if view.is_covector {
        let map = CovectorMap::new(n, k).map_err(|e| e.to_string())?;
        let members = |mask: u64| (0..m).filter(|&j| mask >> j & 1 == 1).collect::<Vec<_>>();
        let [s0, s1] = CovectorMap::sides(&s);
        view.sides = Some([members(s0), members(s1)]);
        let cell = map.map(&s).map_err(|e| e.to_string())?;
        let sets = |mask: u64| -> Vec<Vec<usize>> {
            map.vertices().iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, v)| v.members()).collect()
        };
        view.vertices = Some([sets(cell.images[0]), sets(cell.images[1])]);
        let act = |g: DihedralElement| dihedral_act_sign(&s, &g, k).map(|t| t.to_string()).map_err(|e| e.to_string());
        view.sigma = Some(act(DihedralElement::sigma(m))?);
        view.rho = Some(act(DihedralElement::rho(m))?);
    }
    to_json(&view)
}

/// Classification report for `SG(n,k)`.
pub fn classify_json(n: usize, k: usize, max_degree: u32) -> Result<String, String> {
    to_json(&classify(n, k, max_degree.min(128)).map_err(|e| e.to_string())?)
}

#[wasm_bindgen(js_name = graphView)]
pub fn graph_view(n: usize, k: usize) -> Result<String, JsError> {
    graph_view_json(n, k).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = covectorView)]
pub fn covector_view(signs: &str, n: usize, k: usize) -> Result<String, JsError> {
    covector_view_json(signs, n, k).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = classifyReport)]
pub fn classify_report(n: usize, k: usize, max_degree: u32) -> Result<String, JsError> {
    classify_json(n, k, max_degree).map_err(|e| JsError::new(&e))
}
