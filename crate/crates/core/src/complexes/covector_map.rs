use std::collections::HashMap;

use serde::Serialize;

use super::hom::MultiHom;
use crate::error::{Error, Result};
use crate::graphs::{dihedral_act, enumerate_stable_sets, CircularSet, DihedralElement};
use crate::matroid::{act_sign, covector_extension_feasible, enumerate_covectors, is_covector, Sign, SignVector};

/// Equivariance checks enumerate all covectors, so are limited to this modulus.
pub const MAX_EQUIVARIANCE_MODULUS: usize = 9;

/// Nerve checks run over all vertex subsets, so are limited to this many vertices.
pub const MAX_NERVE_VERTICES: usize = 22;

const EVEN_POSITIONS: u64 = 0x5555_5555_5555_5555;

/// The map from covectors of `C^{m,k+1}` to cells of `Hom(K_2, SG(n,k))`,
/// `l -> { T : T stable n-set, T within S_l(s) }` where
/// `S_l(s) = { j : (-1)^j s_j = (-1)^l }`.
#[derive(Debug, Clone)]
pub struct CovectorMap {
    n: usize,
    k: usize,
    m: usize,
    vertices: Vec<CircularSet>,
    index: HashMap<u64, usize>,
}

impl CovectorMap {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        let m = 2 * n + k;
        let vertices = enumerate_stable_sets(n, m)?;
        let index = vertices.iter().enumerate().map(|(i, t)| (t.bits(), i)).collect();
        Ok(Self { n, k, m, vertices, index })
    }

    pub fn vertices(&self) -> &[CircularSet] {
        &self.vertices
    }

    pub fn modulus(&self) -> usize {
        self.m
    }

    /// `S_0(s)` and `S_1(s)` as masks over `Z_m`.
    pub fn sides(s: &SignVector) -> [u64; 2] {
        let odd = !EVEN_POSITIONS;
        [
            (s.plus_mask() & EVEN_POSITIONS) | (s.minus_mask() & odd),
            (s.plus_mask() & odd) | (s.minus_mask() & EVEN_POSITIONS),
        ]
    }

    pub fn map(&self, s: &SignVector) -> Result<MultiHom> {
        if s.len() != self.m {
            return Err(Error::LengthMismatch { len: s.len(), m: self.m });
        }
        if s.is_zero() || !is_covector(s, self.k) {
            return Err(Error::NotCovector { vector: s.to_string(), rank: self.k + 1 });
        }
        let mut images = Vec::with_capacity(2);
        for side in Self::sides(s) {
            let mask = self
                .vertices
                .iter()
                .enumerate()
                .filter(|(_, t)| t.bits() & !side == 0)
                .fold(0u64, |acc, (i, _)| acc | 1 << i);
            if mask == 0 {
                let set = CircularSet::from_bits(self.m, side)?;
                return Err(Error::NoStableSubset { n: self.n, set: set.to_string() });
            }
            images.push(mask);
        }
        Ok(MultiHom::new(images))
    }

    /// Permutation of the vertex indices induced by `g`.
    pub fn vertex_permutation(&self, g: &DihedralElement) -> Result<Vec<usize>> {
        self.vertices
            .iter()
            .map(|t| {
                let moved = dihedral_act(t, g)?;
                self.index.get(&moved.bits()).copied().ok_or(Error::ActionNotAutomorphism)
            })
            .collect()
    }
}

/// `covector_to_hom` for a single covector.
pub fn covector_to_hom(s: &SignVector, n: usize, k: usize) -> Result<MultiHom> {
    CovectorMap::new(n, k)?.map(s)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivarianceReport {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub covectors: usize,
    pub group_elements: usize,
    pub checks: usize,
    pub violations: Vec<String>,
    pub passed: bool,
}

/// Checks `f(s.g) = f(s).g` for every covector and group element, and that
/// negation swaps the two sides.
pub fn check_equivariance_combinatorial(n: usize, k: usize) -> Result<EquivarianceReport> {
    let map = CovectorMap::new(n, k)?;
    let m = map.modulus();
    if m > MAX_EQUIVARIANCE_MODULUS {
        return Err(Error::TooLarge {
            what: "equivariance check",
            size: m as u128,
            limit: MAX_EQUIVARIANCE_MODULUS as u128,
        });
    }
    let covectors = enumerate_covectors(m, k)?;
    let group = DihedralElement::all(m);
    let perms = group.iter().map(|g| map.vertex_permutation(g)).collect::<Result<Vec<_>>>()?;
    let images = covectors.iter().map(|s| map.map(s)).collect::<Result<Vec<_>>>()?;
    let mut violations = Vec::new();
    let mut checks = 0;
    for (s, f) in covectors.iter().zip(&images) {
        for (g, perm) in group.iter().zip(&perms) {
            checks += 1;
            if map.map(&act_sign(s, g))? != f.map_target(perm) {
                violations.push(format!("{s} . {g}"));
            }
        }
        checks += 1;
        let negated = map.map(&s.neg())?;
        if negated.images != [f.images[1], f.images[0]] {
            violations.push(format!("-({s})"));
        }
    }
    Ok(EquivarianceReport {
        n,
        k,
        m,
        covectors: covectors.len(),
        group_elements: group.len(),
        checks,
        passed: violations.is_empty(),
        violations,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NerveReport {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub vertices: usize,
    pub subsets_checked: u64,
    pub distinct_unions: usize,
    pub mismatches: Vec<String>,
    pub passed: bool,
}

/// For every nonempty family of stable sets with union `U`, compares
/// "the sign pattern `(-1)^j` on `U` extends to a covector" with
/// "some stable n-set avoids `U`".
pub fn verify_nerve(n: usize, k: usize) -> Result<NerveReport> {
    let map = CovectorMap::new(n, k)?;
    let m = map.modulus();
    let verts: Vec<u64> = map.vertices().iter().map(CircularSet::bits).collect();
    if verts.len() > MAX_NERVE_VERTICES {
        return Err(Error::TooLarge {
            what: "nerve check",
            size: 1u128 << verts.len().min(127),
            limit: 1u128 << MAX_NERVE_VERTICES,
        });
    }
    let mut by_union: HashMap<u64, bool> = HashMap::new();
    let mut mismatches = Vec::new();
    let mut unions = vec![0u64; 1 << verts.len()];
    for family in 1u64..1 << verts.len() {
        let low = family.trailing_zeros() as usize;
        let u = unions[(family & (family - 1)) as usize] | verts[low];
        unions[family as usize] = u;
        if by_union.contains_key(&u) {
            continue;
        }
        let pattern: Vec<Option<Sign>> = (0..m)
            .map(|j| (u >> j & 1 == 1).then_some(if j % 2 == 0 { Sign::Plus } else { Sign::Minus }))
            .collect();
        let extends = covector_extension_feasible(&pattern, k);
        let avoided = verts.iter().any(|&t| t & u == 0);
        if extends != avoided {
            mismatches.push(CircularSet::from_bits(m, u)?.to_string());
        }
        by_union.insert(u, extends);
    }
    Ok(NerveReport {
        n,
        k,
        m,
        vertices: verts.len(),
        subsets_checked: (1u64 << verts.len()) - 1,
        distinct_unions: by_union.len(),
        passed: mismatches.is_empty(),
        mismatches,
    })
}
