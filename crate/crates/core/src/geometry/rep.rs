use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::DihedralElement;

/// Right action on row vectors: `x . g = x M_g`. Stored as the matrix `M_g`.
///
/// `R(phi)` below is the block with `(cos, sin) R(phi) = (cos(t + phi), sin(t + phi))`
/// for `(cos t, sin t)`, i.e. rotation by `phi` acting on row vectors.
fn rotation_block(m: &mut DMatrix<f64>, at: usize, phi: f64) {
    let (s, c) = phi.sin_cos();
    m[(at, at)] = c;
    m[(at, at + 1)] = s;
    m[(at + 1, at)] = -s;
    m[(at + 1, at + 1)] = c;
}

/// The orthogonal representation `W_{n,k}` of `D_{2m}` on `R^{k+1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthogonalRep {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub sigma: DMatrix<f64>,
    pub rho: DMatrix<f64>,
}

/// Maximum entrywise deviations of the defining relations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RelationDeviations {
    pub sigma_orthogonal: f64,
    pub rho_orthogonal: f64,
    pub sigma_order: f64,
    pub rho_order: f64,
    pub sigma_rho_order: f64,
}

impl RelationDeviations {
    pub fn max(&self) -> f64 {
        [self.sigma_orthogonal, self.rho_orthogonal, self.sigma_order, self.rho_order, self.sigma_rho_order]
            .into_iter()
            .fold(0.0, f64::max)
    }
}

fn max_abs(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0, |acc, x| acc.max(x.abs()))
}

impl OrthogonalRep {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroN);
        }
        let m = 2 * n + k;
        Ok(Self::for_modulus(m, k, n))
    }

    fn for_modulus(m: usize, k: usize, n: usize) -> Self {
        let d = k + 1;
        let mut sigma = DMatrix::zeros(d, d);
        let mut rho = DMatrix::identity(d, d);
        let mf = m as f64;
        if k.is_multiple_of(2) {
            sigma[(0, 0)] = 1.0;
            for i in 1..=k / 2 {
                rotation_block(&mut sigma, 2 * i - 1, 2.0 * PI * i as f64 / mf);
                rho[(2 * i, 2 * i)] = -1.0;
            }
        } else {
            for i in 0..=k / 2 {
                rotation_block(&mut sigma, 2 * i, (2 * i + 1) as f64 * PI / mf);
                rho[(2 * i + 1, 2 * i + 1)] = -1.0;
            }
        }
        Self { n, k, m, sigma: -sigma, rho }
    }

    pub fn dimension(&self) -> usize {
        self.k + 1
    }

    /// `M_g` for `g = sigma^a rho^f`, so that `x . g = x M_g`.
    pub fn matrix(&self, g: &DihedralElement) -> DMatrix<f64> {
        assert_eq!(g.modulus(), self.m, "group element of another dihedral group");
        let mut out = DMatrix::identity(self.dimension(), self.dimension());
        for _ in 0..g.shift() {
            out = &out * &self.sigma;
        }
        if g.flip() {
            out = &out * &self.rho;
        }
        out
    }

    /// `x . g` for a point `x` given as a column vector.
    pub fn act(&self, x: &DVector<f64>, g: &DihedralElement) -> DVector<f64> {
        self.matrix(g).transpose() * x
    }

    /// Invariant blocks: `(offset, size)` of each diagonal block.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        if self.k.is_multiple_of(2) {
            std::iter::once((0, 1)).chain((0..self.k / 2).map(|i| (1 + 2 * i, 2))).collect()
        } else {
            (0..=self.k / 2).map(|i| (2 * i, 2)).collect()
        }
    }

    pub fn deviations(&self) -> RelationDeviations {
        let d = self.dimension();
        let id = DMatrix::<f64>::identity(d, d);
        let mut power = id.clone();
        for _ in 0..self.m {
            power = &power * &self.sigma;
        }
        let sr = &self.sigma * &self.rho;
        RelationDeviations {
            sigma_orthogonal: max_abs(&(self.sigma.transpose() * &self.sigma - &id)),
            rho_orthogonal: max_abs(&(self.rho.transpose() * &self.rho - &id)),
            sigma_order: max_abs(&(power - &id)),
            rho_order: max_abs(&(&self.rho * &self.rho - &id)),
            sigma_rho_order: max_abs(&(&sr * &sr - &id)),
        }
    }
}

pub fn representation(n: usize, k: usize) -> Result<OrthogonalRep> {
    OrthogonalRep::new(n, k)
}

/// Points `v_0, ..., v_{m-1}` on the trigonometric moment curve in `R^{k+1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentConfig {
    pub m: usize,
    pub k: usize,
    pub vectors: Vec<DVector<f64>>,
}

/// Maximum norm deviations of the identities `v_j . sigma = -v_{j+1}`,
/// `v_j . rho = v_{-j}` and `v_{j+m} = (-1)^m v_j`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IdentityDeviations {
    pub shift: f64,
    pub reflection: f64,
    pub periodicity: f64,
}

impl IdentityDeviations {
    pub fn max(&self) -> f64 {
        self.shift.max(self.reflection).max(self.periodicity)
    }
}

impl MomentConfig {
    /// Valid for any `m > k`; the dihedral identities need `m = 2n + k`.
    pub fn new(m: usize, k: usize) -> Result<Self> {
        if m <= k {
            return Err(Error::InvalidParameters(format!("need m > k, got m = {m}, k = {k}")));
        }
        let vectors = (0..m as i64).map(|j| Self::point(m, k, j)).collect();
        Ok(Self { m, k, vectors })
    }

    /// `v_j` for any integer `j`, straight from the formula.
    pub fn point(m: usize, k: usize, j: i64) -> DVector<f64> {
        let mut v = DVector::zeros(k + 1);
        let (mf, jf) = (m as f64, j as f64);
        if k.is_multiple_of(2) {
            v[0] = 1.0;
            for i in 1..=k / 2 {
                let (s, c) = (2.0 * PI * (i as f64) * jf / mf).sin_cos();
                v[2 * i - 1] = c;
                v[2 * i] = s;
            }
        } else {
            for i in 0..=k / 2 {
                let (s, c) = (PI * (2 * i + 1) as f64 * jf / mf).sin_cos();
                v[2 * i] = c;
                v[2 * i + 1] = s;
            }
        }
        v
    }

    pub fn dimension(&self) -> usize {
        self.k + 1
    }

    /// `v_j` with the index reduced mod `m` and the twist `v_{j+m} = (-1)^m v_j`.
    pub fn extended(&self, j: i64) -> DVector<f64> {
        let m = self.m as i64;
        let v = &self.vectors[j.rem_euclid(m) as usize];
        if self.m % 2 == 1 && j.div_euclid(m) % 2 != 0 {
            -v
        } else {
            v.clone()
        }
    }

    pub fn identity_deviations(&self, rep: &OrthogonalRep) -> IdentityDeviations {
        let (sigma, rho) = (DihedralElement::sigma(self.m), DihedralElement::rho(self.m));
        let mut dev = IdentityDeviations { shift: 0.0, reflection: 0.0, periodicity: 0.0 };
        let sign = if self.m.is_multiple_of(2) { 1.0 } else { -1.0 };
        for j in 0..self.m as i64 {
            let v = &self.vectors[j as usize];
            dev.shift = dev.shift.max((rep.act(v, &sigma) + Self::point(self.m, self.k, j + 1)).norm());
            dev.reflection = dev.reflection.max((rep.act(v, &rho) - Self::point(self.m, self.k, -j)).norm());
            let wrapped = Self::point(self.m, self.k, j + self.m as i64);
            dev.periodicity = dev.periodicity.max((wrapped - v * sign).norm());
        }
        dev
    }

    /// Smallest `|det|` over all `(k+1)`-subsets, normalised by the Hadamard bound.
    /// Only meant for small `m`.
    pub fn min_normalised_minor(&self) -> f64 {
        let d = self.dimension();
        let mut best = f64::INFINITY;
        let mut idx: Vec<usize> = (0..d).collect();
        loop {
            let cols: Vec<DVector<f64>> = idx.iter().map(|&j| self.vectors[j].clone()).collect();
            let mat = DMatrix::from_columns(&cols);
            let scale: f64 = cols.iter().map(|c| c.norm()).product();
            best = best.min(mat.determinant().abs() / scale);
            // next combination
            let mut i = d;
            while i > 0 && idx[i - 1] == self.m - d + i - 1 {
                i -= 1;
            }
            if i == 0 {
                return best;
            }
            idx[i - 1] += 1;
            for t in i..d {
                idx[t] = idx[t - 1] + 1;
            }
        }
    }
}

pub fn moment_vectors(n: usize, k: usize) -> Result<MomentConfig> {
    if n == 0 {
        return Err(Error::ZeroN);
    }
    MomentConfig::new(2 * n + k, k)
}
