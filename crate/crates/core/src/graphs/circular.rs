use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest modulus a [`CircularSet`] can carry (one bit per residue).
pub const MAX_MODULUS: usize = 64;

/// A subset of `Z_m`, stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CircularSet {
    m: usize,
    bits: u64,
}

impl CircularSet {
    pub fn new(m: usize, members: &[usize]) -> Result<Self> {
        check_modulus(m)?;
        let mut bits = 0u64;
        for &j in members {
            if j >= m {
                return Err(Error::InvalidParameters(format!("{j} is not a residue mod {m}")));
            }
            bits |= 1 << j;
        }
        Ok(Self { m, bits })
    }

    pub fn from_bits(m: usize, bits: u64) -> Result<Self> {
        check_modulus(m)?;
        if bits & !full_mask(m) != 0 {
            return Err(Error::InvalidParameters(format!("mask {bits:#x} exceeds Z_{m}")));
        }
        Ok(Self { m, bits })
    }

    pub(crate) fn from_bits_unchecked(m: usize, bits: u64) -> Self {
        Self { m, bits }
    }

    pub fn modulus(&self) -> usize {
        self.m
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, j: usize) -> bool {
        j < self.m && self.bits >> j & 1 == 1
    }

    pub fn members(&self) -> Vec<usize> {
        (0..self.m).filter(|&j| self.contains(j)).collect()
    }

    /// Rotation by one step: `{j + 1 : j in S}`.
    pub fn rotate(&self) -> Self {
        let top = self.bits >> (self.m - 1) & 1;
        let bits = ((self.bits << 1) | top) & full_mask(self.m);
        Self { m: self.m, bits }
    }

    /// True if no two cyclically consecutive residues are both members.
    pub fn is_stable(&self) -> bool {
        self.bits & self.rotate().bits == 0
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.bits & other.bits == 0
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn union(&self, other: &Self) -> Self {
        Self { m: self.m, bits: self.bits | other.bits }
    }
}

impl fmt::Display for CircularSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, j) in self.members().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{j}")?;
        }
        write!(f, "}}")
    }
}

pub(crate) fn full_mask(m: usize) -> u64 {
    if m >= 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

fn check_modulus(m: usize) -> Result<()> {
    if m == 0 || m > MAX_MODULUS {
        return Err(Error::InvalidParameters(format!("modulus {m} outside 1..={MAX_MODULUS}")));
    }
    Ok(())
}

/// All `n`-subsets of `Z_m` in lexicographic order of their sorted members.
pub fn enumerate_subsets(n: usize, m: usize) -> Result<Vec<CircularSet>> {
    check_modulus(m)?;
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    collect(n, m, 0, 1, false, &mut current, &mut out);
    Ok(out)
}

/// All stable `n`-subsets of `Z_m`, lexicographic in their sorted members.
///
/// Empty when `m < 2n`.
pub fn enumerate_stable_sets(n: usize, m: usize) -> Result<Vec<CircularSet>> {
    if n == 0 {
        return Err(Error::ZeroN);
    }
    check_modulus(m)?;
    let mut out = Vec::new();
    if m < 2 * n {
        return Ok(out);
    }
    let mut current = Vec::with_capacity(n);
    collect(n, m, 0, 2, true, &mut current, &mut out);
    Ok(out)
}

fn collect(
    n: usize,
    m: usize,
    start: usize,
    gap: usize,
    cyclic: bool,
    current: &mut Vec<usize>,
    out: &mut Vec<CircularSet>,
) {
    if current.len() == n {
        if cyclic && n > 1 && current[0] == 0 && current[n - 1] == m - 1 {
            return;
        }
        let bits = current.iter().fold(0u64, |acc, &j| acc | 1 << j);
        out.push(CircularSet::from_bits_unchecked(m, bits));
        return;
    }
    let remaining = n - current.len() - 1;
    let last = match m.checked_sub(remaining * gap) {
        Some(l) => l,
        None => return,
    };
    for j in start..last {
        current.push(j);
        collect(n, m, j + gap, gap, cyclic, current, out);
        current.pop();
    }
}

/// Number of stable `n`-subsets of `Z_m`: `m/(m-n) * C(m-n, n)`.
pub fn stable_set_count(n: usize, m: usize) -> u128 {
    if n == 0 || m < 2 * n {
        return 0;
    }
    let c = binomial((m - n) as u128, n as u128);
    c * m as u128 / (m - n) as u128
}

pub(crate) fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// An element `sigma^shift rho^flip` of the dihedral group of order `2m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DihedralElement {
    m: usize,
    shift: usize,
    flip: bool,
}

impl DihedralElement {
    pub fn new(m: usize, shift: i64, flip: bool) -> Self {
        assert!(m >= 1, "dihedral group needs m >= 1");
        let shift = shift.rem_euclid(m as i64) as usize;
        Self { m, shift, flip }
    }

    pub fn identity(m: usize) -> Self {
        Self::new(m, 0, false)
    }

    pub fn sigma(m: usize) -> Self {
        Self::new(m, 1, false)
    }

    pub fn rho(m: usize) -> Self {
        Self::new(m, 0, true)
    }

    pub fn modulus(&self) -> usize {
        self.m
    }

    pub fn shift(&self) -> usize {
        self.shift
    }

    pub fn flip(&self) -> bool {
        self.flip
    }

    pub fn is_identity(&self) -> bool {
        self.shift == 0 && !self.flip
    }

    /// Product `self * other`; acting on the right, `x.(gh) = (x.g).h`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m, "dihedral elements of different groups");
        let b = other.shift as i64;
        let shift = self.shift as i64 + if self.flip { -b } else { b };
        Self::new(self.m, shift, self.flip ^ other.flip)
    }

    pub fn inverse(&self) -> Self {
        if self.flip {
            *self
        } else {
            Self::new(self.m, -(self.shift as i64), false)
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::identity(self.m), |acc, _| acc.compose(self))
    }

    pub fn order(&self) -> usize {
        let mut g = *self;
        let mut k = 1;
        while !g.is_identity() {
            g = g.compose(self);
            k += 1;
        }
        k
    }

    /// Image of a residue `j` under the right action: `j -> (-1)^flip (j + shift)`.
    pub fn apply_residue(&self, j: i64) -> i64 {
        let t = j + self.shift as i64;
        let t = if self.flip { -t } else { t };
        t.rem_euclid(self.m as i64)
    }

    /// All `2m` group elements, rotations first.
    pub fn all(m: usize) -> Vec<Self> {
        let mut out: Vec<Self> = (0..m).map(|s| Self::new(m, s as i64, false)).collect();
        out.extend((0..m).map(|s| Self::new(m, s as i64, true)));
        out
    }

    /// Subgroup generated by `generators`, sorted.
    pub fn generated(m: usize, generators: &[Self]) -> Vec<Self> {
        let mut seen = std::collections::BTreeSet::new();
        let mut queue = vec![Self::identity(m)];
        seen.insert(Self::identity(m));
        while let Some(g) = queue.pop() {
            for h in generators {
                let p = g.compose(h);
                if seen.insert(p) {
                    queue.push(p);
                }
            }
        }
        seen.into_iter().collect()
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.shift, self.flip) {
            (0, false) => write!(f, "e"),
            (0, true) => write!(f, "rho"),
            (s, false) => write!(f, "sigma^{s}"),
            (s, true) => write!(f, "sigma^{s} rho"),
        }
    }
}

/// Right action `S.g` of the dihedral group on subsets of `Z_m`.
pub fn dihedral_act(set: &CircularSet, g: &DihedralElement) -> Result<CircularSet> {
    if set.modulus() != g.modulus() {
        return Err(Error::ModulusMismatch { left: set.modulus(), right: g.modulus() });
    }
    let m = set.modulus();
    let bits = set
        .members()
        .into_iter()
        .fold(0u64, |acc, j| acc | 1 << g.apply_residue(j as i64));
    Ok(CircularSet::from_bits_unchecked(m, bits))
}
