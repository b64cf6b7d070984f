use std::fmt::Write as _;

use nalgebra::DVector;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use super::realization::{sign_vector_of_point, DEFAULT_ZERO_TOL};
use super::rep::{representation, MomentConfig, OrthogonalRep};
use crate::complexes::CovectorMap;
use crate::error::{Error, Result};
use crate::graphs::{dihedral_act, enumerate_stable_sets, CircularSet, DihedralElement};

/// `sum_{i in S} (-1)^i v_i`, unnormalised.
pub fn vertex_sum(s: &CircularSet, config: &MomentConfig) -> DVector<f64> {
    let mut acc = DVector::zeros(config.dimension());
    for i in s.members() {
        if i % 2 == 0 {
            acc += &config.vectors[i];
        } else {
            acc -= &config.vectors[i];
        }
    }
    acc
}

/// `v(S)`, the normalised alternating sum.
pub fn v_of_set(s: &CircularSet, config: &MomentConfig) -> Result<DVector<f64>> {
    if s.modulus() != config.m {
        return Err(Error::ModulusMismatch { left: s.modulus(), right: config.m });
    }
    let sum = vertex_sum(s, config);
    let norm = sum.norm();
    if norm < 1e-12 {
        return Err(Error::DegenerateVertexSum(s.to_string()));
    }
    Ok(sum / norm)
}

/// All vertex images of `SG(n,k)` with their raw norms.
struct VertexImages {
    sets: Vec<CircularSet>,
    points: Vec<DVector<f64>>,
    norms: Vec<f64>,
}

impl VertexImages {
    fn new(n: usize, k: usize) -> Result<(Self, MomentConfig)> {
        let config = MomentConfig::new(2 * n + k, k)?;
        let sets = enumerate_stable_sets(n, config.m)?;
        let mut points = Vec::with_capacity(sets.len());
        let mut norms = Vec::with_capacity(sets.len());
        for s in &sets {
            let sum = vertex_sum(s, &config);
            norms.push(sum.norm());
            points.push(v_of_set(s, &config)?);
        }
        Ok((Self { sets, points, norms }, config))
    }

    fn max_edge_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.sets.len() {
            for j in i + 1..self.sets.len() {
                if self.sets[i].is_disjoint(&self.sets[j]) {
                    worst = worst.max((&self.points[i] + &self.points[j]).norm());
                }
            }
        }
        worst
    }
}

/// Smallest `|sum_{i in S} (-1)^i v_i|` over the vertices of `SG(n,k)`.
pub fn min_vertex_norm(n: usize, k: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::ZeroN);
    }
    let (images, _) = VertexImages::new(n, k)?;
    Ok(images.norms.iter().copied().fold(f64::INFINITY, f64::min))
}

/// Largest `|v(S) + v(T)|` over edges `ST` of `SG(n,k)`.
pub fn max_edge_defect(n: usize, k: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::ZeroN);
    }
    let (images, _) = VertexImages::new(n, k)?;
    Ok(images.max_edge_defect())
}

/// `x ~ y` in the Borsuk graph iff `d(x, -y) < eps`.
pub fn borsuk_adjacent(x: &DVector<f64>, y: &DVector<f64>, eps: f64) -> bool {
    (x + y).norm() < eps
}

/// The first stable `n`-subset of `S_l(sign(x))`, in enumeration order.
pub fn point_to_vertex(x: &DVector<f64>, l: usize, n: usize, k: usize) -> Result<CircularSet> {
    if l > 1 {
        return Err(Error::InvalidParameters(format!("side must be 0 or 1, got {l}")));
    }
    let map = CovectorMap::new(n, k)?;
    let config = MomentConfig::new(map.modulus(), k)?;
    if x.len() != config.dimension() {
        return Err(Error::InvalidParameters(format!(
            "point has dimension {}, expected {}",
            x.len(),
            config.dimension()
        )));
    }
    let s = sign_vector_of_point(x, &config, DEFAULT_ZERO_TOL);
    let side = CovectorMap::sides(&s)[l];
    map.vertices()
        .iter()
        .find(|t| t.bits() & !side == 0)
        .copied()
        .ok_or_else(|| Error::NoStableSubset { n, set: CircularSet::from_bits_unchecked(map.modulus(), side).to_string() })
}

/// Maximum deviations of the equivariance identities for one `(n, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EquivarianceDeviations {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub relations: f64,
    pub moment_identities: f64,
    pub vertex_map: f64,
}

impl EquivarianceDeviations {
    pub fn max(&self) -> f64 {
        self.relations.max(self.moment_identities).max(self.vertex_map)
    }
}

/// Group relations, moment-curve identities and `v(S . g) = v(S) . g` for
/// `g` in `{sigma, rho}`.
pub fn equivariance_deviations(n: usize, k: usize) -> Result<EquivarianceDeviations> {
    let rep = representation(n, k)?;
    let (images, config) = VertexImages::new(n, k)?;
    Ok(EquivarianceDeviations {
        n,
        k,
        m: rep.m,
        relations: rep.deviations().max(),
        moment_identities: config.identity_deviations(&rep).max(),
        vertex_map: vertex_map_deviation(&rep, &images, &config)?,
    })
}

fn vertex_map_deviation(rep: &OrthogonalRep, images: &VertexImages, config: &MomentConfig) -> Result<f64> {
    let mut worst = 0.0f64;
    for g in [DihedralElement::sigma(rep.m), DihedralElement::rho(rep.m)] {
        for (s, p) in images.sets.iter().zip(&images.points) {
            let moved = v_of_set(&dihedral_act(s, &g)?, config)?;
            worst = worst.max((moved - rep.act(p, &g)).norm());
        }
    }
    Ok(worst)
}

/// One row of the geometry sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub vertices: usize,
    pub min_norm: f64,
    pub max_defect: f64,
    pub max_equivariance_deviation: f64,
    pub sampled_points: usize,
    pub sampled_max_defect: f64,
}

/// Sweep over `n` for fixed `k`. Besides the exact vertex quantities, each
/// row maps `samples` seeded Gaussian points through `point_to_vertex` on
/// both sides and records the largest `|v(S_0) + v(S_1)|`.
pub fn sweep(ns: impl IntoIterator<Item = usize>, k: usize, samples: usize, seed: u64) -> Result<Vec<SweepRow>> {
    ns.into_iter().map(|n| sweep_row(n, k, samples, seed)).collect()
}

pub fn sweep_row(n: usize, k: usize, samples: usize, seed: u64) -> Result<SweepRow> {
    if n == 0 {
        return Err(Error::ZeroN);
    }
    let rep = representation(n, k)?;
    let (images, config) = VertexImages::new(n, k)?;
    let deviation = rep
        .deviations()
        .max()
        .max(config.identity_deviations(&rep).max())
        .max(vertex_map_deviation(&rep, &images, &config)?);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((n as u64) << 32 | k as u64));
    let mut sampled_max_defect = 0.0f64;
    let mut sampled_points = 0;
    for _ in 0..samples {
        let x = DVector::from_fn(k + 1, |_, _| rng.sample::<f64, _>(StandardNormal));
        let s = sign_vector_of_point(&x, &config, DEFAULT_ZERO_TOL);
        if s.zero_count() > 0 {
            continue;
        }
        let [a, b] = CovectorMap::sides(&s);
        let pick = |side: u64| images.sets.iter().position(|t| t.bits() & !side == 0);
        if let (Some(i), Some(j)) = (pick(a), pick(b)) {
            sampled_points += 1;
            sampled_max_defect = sampled_max_defect.max((&images.points[i] + &images.points[j]).norm());
        } else {
            return Err(Error::NoStableSubset { n, set: s.to_string() });
        }
    }
    Ok(SweepRow {
        n,
        k,
        m: rep.m,
        vertices: images.sets.len(),
        min_norm: images.norms.iter().copied().fold(f64::INFINITY, f64::min),
        max_defect: images.max_edge_defect(),
        max_equivariance_deviation: deviation,
        sampled_points,
        sampled_max_defect,
    })
}

pub const SWEEP_CSV_HEADER: &str =
    "n,k,m,vertices,min_norm,max_defect,max_equivariance_deviation,sampled_points,sampled_max_defect";

/// CSV with a fixed float format, so equal inputs give identical bytes.
pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(SWEEP_CSV_HEADER);
    out.push('\n');
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{:.12},{:.12},{:.3e},{},{:.12}",
            r.n,
            r.k,
            r.m,
            r.vertices,
            r.min_norm,
            r.max_defect,
            r.max_equivariance_deviation,
            r.sampled_points,
            r.sampled_max_defect
        )
        .unwrap();
    }
    out
}
