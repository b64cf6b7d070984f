use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use sgtopo::charclasses::{classify as classify_one, ClassificationReport};
use sgtopo::complexes::{hom_poset, neighbourhood_complex, order_complex, z2_betti, MAX_HOM_CELLS};
use sgtopo::geometry::{sweep_csv, sweep_row, verify_realization, RealizationReport, SweepRow};
use sgtopo::graphs::{automorphism_group_order, chromatic_number, stable_kneser_graph, vertex_criticality_check, Graph};
use sgtopo::matroid::{cocircuit_count, enumerate_covectors, SignVector};

use crate::pretty;

/// Rendered report plus any invariant the underlying checks found broken.
pub struct Output {
    pub text: String,
    pub violations: Vec<String>,
}

/// Inclusive integer range written `A..B`, `A..=B` or `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Range {
    pub lo: usize,
    pub hi: usize,
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad range bound {t:?}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => (num(s)?, num(s)?),
        };
        if lo > hi {
            return Err(format!("empty range {s}"));
        }
        Ok(Range { lo, hi })
    }
}

fn workers() -> Result<rayon::ThreadPool, String> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("SGTOPO_WORKERS") {
        let n: usize = v.parse().map_err(|_| format!("SGTOPO_WORKERS={v:?} is not a number"))?;
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| e.to_string())
}

fn json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string_pretty(value).map(|s| s + "\n").map_err(|e| e.to_string())
}

fn sphere_betti(k: usize) -> Vec<usize> {
    let mut b = vec![0; k + 1];
    b[0] += 1;
    b[k] += 1;
    b
}

#[derive(Debug, Serialize)]
pub struct GraphReport {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub vertices: usize,
    pub edges: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub colouring: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub critical: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub aut_order: Option<u64>,
}

pub fn graph(n: usize, k: usize, chromatic: bool, critical: bool, aut: bool, pretty: bool) -> Result<Output, String> {
    let g = stable_kneser_graph(n, k).map_err(|e| e.to_string())?;
    let mut violations = Vec::new();
    let colouring = if chromatic { Some(chromatic_number(&g).map_err(|e| e.to_string())?) } else { None };
    if let Some(c) = &colouring {
        if !c.is_proper(&g) {
            violations.push("witness colouring is not proper".to_string());
        }
        if c.colours != k + 2 {
            violations.push(format!("chromatic number {} differs from k + 2 = {}", c.colours, k + 2));
        }
    }
    let critical = if critical { Some(vertex_criticality_check(&g).map_err(|e| e.to_string())?) } else { None };
    if critical == Some(false) {
        violations.push("graph is not vertex-critical".to_string());
    }
    let aut_order = if aut { Some(automorphism_group_order(&g).map_err(|e| e.to_string())?) } else { None };
    let report = GraphReport {
        n,
        k,
        m: 2 * n + k,
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        chi: colouring.as_ref().map(|c| c.colours),
        colouring: colouring.map(|c| c.assignment),
        critical,
        aut_order,
    };
    let text = if pretty {
        let show = |x: Option<String>| x.unwrap_or_else(|| "-".into());
        pretty::fields(&[
            ("graph", format!("SG({n},{k}) on Z_{}", report.m)),
            ("vertices", report.vertices.to_string()),
            ("edges", report.edges.to_string()),
            ("chi", show(report.chi.map(|c| c.to_string()))),
            ("critical", show(report.critical.map(|c| c.to_string()))),
            ("aut_order", show(report.aut_order.map(|c| c.to_string()))),
        ])
    } else {
        json(&report)?
    };
    Ok(Output { text, violations })
}

#[derive(Debug, Serialize)]
pub struct HomologyReport {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub hom_cells: usize,
    pub order_complex_faces: usize,
    pub hom_betti: Vec<usize>,
    pub neighbourhood_betti: Vec<usize>,
    pub expected_betti: Vec<usize>,
    pub matches_sphere: bool,
}

pub fn homology(n: usize, k: usize, pretty: bool) -> Result<Output, String> {
    let g = stable_kneser_graph(n, k).map_err(|e| e.to_string())?;
    let hp = hom_poset(&Graph::complete(2), &g, MAX_HOM_CELLS).map_err(|e| e.to_string())?;
    let oc = order_complex(&hp.poset).map_err(|e| e.to_string())?;
    let hom_betti = z2_betti(&oc);
    let neighbourhood_betti = z2_betti(&neighbourhood_complex(&g).map_err(|e| e.to_string())?);
    let expected = sphere_betti(k);
    let matches_sphere = hom_betti == expected && neighbourhood_betti == expected;
    let mut violations = Vec::new();
    if !matches_sphere {
        violations.push(format!("Betti numbers {hom_betti:?} / {neighbourhood_betti:?} differ from S^{k}"));
    }
    let report = HomologyReport {
        n,
        k,
        m: 2 * n + k,
        hom_cells: hp.cells.len(),
        order_complex_faces: oc.face_count(),
        hom_betti,
        neighbourhood_betti,
        expected_betti: expected,
        matches_sphere,
    };
    let text = if pretty {
        pretty::fields(&[
            ("graph", format!("SG({n},{k})")),
            ("Hom(K2,-) cells", report.hom_cells.to_string()),
            ("order complex faces", report.order_complex_faces.to_string()),
            ("Hom betti", pretty::list(&report.hom_betti)),
            ("N(G) betti", pretty::list(&report.neighbourhood_betti)),
            ("S^k betti", pretty::list(&report.expected_betti)),
        ])
    } else {
        json(&report)?
    };
    Ok(Output { text, violations })
}

#[derive(Debug, Serialize)]
pub struct MatroidReport {
    pub m: usize,
    pub k: usize,
    pub rank: usize,
    pub nonzero_sign_vectors: u64,
    pub covectors: usize,
    pub cocircuits: usize,
    pub cocircuits_expected: u128,
    pub realization: Option<RealizationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub covector_list: Option<Vec<SignVector>>,
}

pub fn matroid(m: usize, k: usize, samples: usize, seed: u64, list: bool, pretty: bool) -> Result<Output, String> {
    let covectors = enumerate_covectors(m, k).map_err(|e| e.to_string())?;
    let cocircuits = covectors.iter().filter(|s| s.zero_count() == k).count();
    let expected = if m > k { cocircuit_count(m, k) } else { 0 };
    let realization = if m > k { Some(verify_realization(m, k, samples, seed).map_err(|e| e.to_string())?) } else { None };
    let mut violations = Vec::new();
    if cocircuits as u128 != expected {
        violations.push(format!("{cocircuits} cocircuits, expected {expected}"));
    }
    if let Some(r) = realization.as_ref().filter(|r| !r.passed) {
        violations.push(format!(
            "realization failed: {} non-covector samples, {} cocircuit failures",
            r.non_covector_samples,
            r.cocircuit_failures.len()
        ));
    }
    let report = MatroidReport {
        m,
        k,
        rank: k + 1,
        nonzero_sign_vectors: 3u64.pow(m as u32) - 1,
        covectors: covectors.len(),
        cocircuits,
        cocircuits_expected: expected,
        realization,
        covector_list: list.then_some(covectors),
    };
    let text = if pretty {
        let real = match &report.realization {
            Some(r) => format!("{} ({} samples, {} topes seen)", if r.passed { "pass" } else { "FAIL" }, r.samples, r.distinct_topes_sampled),
            None => "not applicable (m <= k)".into(),
        };
        let mut t = pretty::fields(&[
            ("matroid", format!("C^{{{m},{}}}", k + 1)),
            ("nonzero sign vectors", report.nonzero_sign_vectors.to_string()),
            ("covectors", report.covectors.to_string()),
            ("cocircuits", report.cocircuits.to_string()),
            ("realization", real),
        ]);
        if let Some(l) = &report.covector_list {
            for s in l {
                t += &format!("  {s}\n");
            }
        }
        t
    } else {
        json(&report)?
    };
    Ok(Output { text, violations })
}

pub fn classify(k: usize, range: Range, max_degree: u32, pretty: bool) -> Result<Output, String> {
    let pool = workers()?;
    let reports: Vec<ClassificationReport> = pool.install(|| {
        (range.lo..=range.hi).into_par_iter().map(|n| classify_one(n, k, max_degree)).collect::<Result<_, _>>()
    })
    .map_err(|e| e.to_string())?;
    let mut violations = Vec::new();
    for r in &reports {
        if r.window_vanishes == Some(false) {
            violations.push(format!("({},{}): predicted window {:?} does not vanish", r.n, r.k, r.window));
        }
        violations.extend(
            r.caveats.iter().filter(|c| c.contains("contradicted")).map(|c| format!("({},{}): {c}", r.n, r.k)),
        );
    }
    let text = if pretty {
        let rows: Vec<Vec<String>> = reports
            .iter()
            .map(|r| {
                vec![
                    r.n.to_string(),
                    r.k.to_string(),
                    r.m.to_string(),
                    r.ring_case.tag().to_string(),
                    r.window.map(|[a, b]| format!("[{a},{b})")).unwrap_or_else(|| "-".into()),
                    r.wbar_vanishing_degrees.first().map(|d| d.to_string()).unwrap_or_else(|| "-".into()),
                    serde_json::to_value(r.verdict).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default(),
                ]
            })
            .collect();
        pretty::table(&["n", "k", "m", "ring", "window", "first zero", "verdict"], &rows)
    } else {
        json(&reports)?
    };
    Ok(Output { text, violations })
}

pub fn geometry(k: usize, range: Range, samples: usize, seed: u64, tol: f64, pretty: bool) -> Result<Output, String> {
    let pool = workers()?;
    let rows: Vec<SweepRow> = pool
        .install(|| (range.lo..=range.hi).into_par_iter().map(|n| sweep_row(n, k, samples, seed)).collect::<Result<_, _>>())
        .map_err(|e| e.to_string())?;
    let violations = rows
        .iter()
        .filter(|r| r.max_equivariance_deviation.is_nan() || r.max_equivariance_deviation >= tol)
        .map(|r| format!("({},{}): equivariance deviation {:e} exceeds {tol:e}", r.n, r.k, r.max_equivariance_deviation))
        .collect();
    let text = if pretty {
        let table: Vec<Vec<String>> = rows
            .iter()
            .map(|r| {
                vec![
                    r.n.to_string(),
                    r.k.to_string(),
                    r.vertices.to_string(),
                    format!("{:.6}", r.min_norm),
                    format!("{:.6}", r.max_defect),
                    format!("{:.1e}", r.max_equivariance_deviation),
                    format!("{:.6}", r.sampled_max_defect),
                ]
            })
            .collect();
        pretty::table(&["n", "k", "vertices", "min |v(S)|", "max edge defect", "equivariance", "sampled defect"], &table)
    } else {
        sweep_csv(&rows)
    };
    Ok(Output { text, violations })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!("2..30".parse::<Range>().unwrap(), Range { lo: 2, hi: 30 });
        assert_eq!("2..=5".parse::<Range>().unwrap(), Range { lo: 2, hi: 5 });
        assert_eq!("4".parse::<Range>().unwrap(), Range { lo: 4, hi: 4 });
        assert!("5..2".parse::<Range>().is_err());
        assert!("a..2".parse::<Range>().is_err());
    }

    #[test]
    fn graph_examples() {
        let out = graph(2, 2, true, true, true, false).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
        assert_eq!(v["chi"], 4);
        assert_eq!(v["critical"], true);
        assert_eq!(v["aut_order"], 12);
        assert!(out.violations.is_empty());
    }

    #[test]
    fn matroid_interpolation_case() {
        let out = matroid(4, 3, 2000, 1, false, false).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
        assert_eq!(v["covectors"], 80);
        assert_eq!(v["nonzero_sign_vectors"], 80);
    }
}
