use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_MAX_DEGREE: u32 = 64;

/// Mod 2 cohomology rings that occur, keyed by group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RingCase {
    /// `H*(D_2m)`, `m` odd: `Z2[α]`.
    Odd,
    /// `H*(D_2m)`, `m = 2 mod 4`: `Z2[α, β]`.
    #[serde(rename = "TWO_MOD_4")]
    TwoMod4,
    /// `H*(D_2m)`, `m = 0 mod 4`: `Z2[x, y, u]/(xy)`.
    #[serde(rename = "ZERO_MOD_4")]
    ZeroMod4,
    /// `H*(C_m)`, `m = 0 mod 4`: `Z2[x, u]/(x^2)`.
    #[serde(rename = "CYCLIC_4")]
    Cyclic4,
    /// `H*(C_2)`: `Z2[α]`.
    C2,
}

impl RingCase {
    pub fn generators(self) -> &'static [(&'static str, u32)] {
        match self {
            RingCase::Odd | RingCase::C2 => &[("α", 1)],
            RingCase::TwoMod4 => &[("α", 1), ("β", 1)],
            RingCase::ZeroMod4 => &[("x", 1), ("y", 1), ("u", 2)],
            RingCase::Cyclic4 => &[("x", 1), ("u", 2)],
        }
    }

    pub fn relations(self) -> &'static [&'static str] {
        match self {
            RingCase::ZeroMod4 => &["x·y"],
            RingCase::Cyclic4 => &["x^2"],
            _ => &[],
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            RingCase::Odd => "ODD",
            RingCase::TwoMod4 => "TWO_MOD_4",
            RingCase::ZeroMod4 => "ZERO_MOD_4",
            RingCase::Cyclic4 => "CYCLIC_4",
            RingCase::C2 => "C2",
        }
    }

    /// False for monomials in the relation ideal.
    fn is_standard(self, e: &Exponents) -> bool {
        match self {
            RingCase::ZeroMod4 => e[0] == 0 || e[1] == 0,
            RingCase::Cyclic4 => e[0] < 2,
            _ => true,
        }
    }

    fn generator_index(self, name: &str) -> Option<usize> {
        let alias = match name {
            "alpha" | "a" => "α",
            "beta" | "b" => "β",
            other => other,
        };
        self.generators().iter().position(|(g, _)| *g == alias)
    }
}

impl fmt::Display for RingCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Generators, degrees and relations of a ring, for reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingDescriptor {
    pub case: RingCase,
    pub generators: Vec<(String, u32)>,
    pub relations: Vec<String>,
}

impl RingDescriptor {
    pub fn new(case: RingCase) -> Self {
        Self {
            case,
            generators: case.generators().iter().map(|(g, d)| (g.to_string(), *d)).collect(),
            relations: case.relations().iter().map(|r| r.to_string()).collect(),
        }
    }
}

/// Ring of `H*(D_2m; Z2)` for `m = 2n + k`.
pub fn ring_for(n: usize, k: usize) -> Result<RingDescriptor> {
    Ok(RingDescriptor::new(case_for(n, k)?))
}

pub(crate) fn case_for(n: usize, k: usize) -> Result<RingCase> {
    if n == 0 {
        return Err(Error::ZeroN);
    }
    Ok(match (2 * n + k) % 4 {
        0 => RingCase::ZeroMod4,
        2 => RingCase::TwoMod4,
        _ => RingCase::Odd,
    })
}

pub(crate) type Exponents = [u32; 3];

/// An element of a graded ring over Z2, truncated above `max_degree`.
/// Stored as the set of standard monomials with coefficient 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedPoly {
    ring: RingCase,
    max_degree: u32,
    terms: BTreeSet<Exponents>,
}

impl GradedPoly {
    pub fn zero(ring: RingCase, max_degree: u32) -> Self {
        Self { ring, max_degree, terms: BTreeSet::new() }
    }

    pub fn one(ring: RingCase, max_degree: u32) -> Self {
        Self::monomial(ring, max_degree, [0; 3])
    }

    pub(crate) fn monomial(ring: RingCase, max_degree: u32, e: Exponents) -> Self {
        let mut p = Self::zero(ring, max_degree);
        p.toggle(e);
        p
    }

    /// The generator called `name`.
    pub fn generator(ring: RingCase, max_degree: u32, name: &str) -> Result<Self> {
        let i = ring
            .generator_index(name)
            .ok_or_else(|| Error::Parse(format!("{name} is not a generator of {ring}")))?;
        let mut e = [0; 3];
        e[i] = 1;
        Ok(Self::monomial(ring, max_degree, e))
    }

    pub fn ring(&self) -> RingCase {
        self.ring
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    fn degree_of(&self, e: &Exponents) -> u32 {
        self.ring.generators().iter().zip(e).map(|((_, d), x)| d * x).sum()
    }

    fn toggle(&mut self, e: Exponents) {
        if self.ring.is_standard(&e) && self.degree_of(&e) <= self.max_degree && !self.terms.remove(&e) {
            self.terms.insert(e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.contains(&[0; 3])
    }

    pub fn constant_term(&self) -> bool {
        self.terms.contains(&[0; 3])
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Homogeneous component of degree `d`.
    pub fn component(&self, d: u32) -> Self {
        Self {
            ring: self.ring,
            max_degree: self.max_degree,
            terms: self.terms.iter().copied().filter(|e| self.degree_of(e) == d).collect(),
        }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring.to_string(), other.ring.to_string()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = Self::zero(self.ring, self.max_degree.min(other.max_degree));
        for e in self.terms.symmetric_difference(&other.terms) {
            out.toggle(*e);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = Self::zero(self.ring, self.max_degree.min(other.max_degree));
        for a in &self.terms {
            for b in &other.terms {
                out.toggle([a[0] + b[0], a[1] + b[1], a[2] + b[2]]);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut out = Self::one(self.ring, self.max_degree);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base)?;
            }
            base = base.mul(&base)?;
            e >>= 1;
        }
        Ok(out)
    }

    /// Multiplicative inverse up to `max_degree`: `q_0 = 1`,
    /// `q_d = sum_{i >= 1} p_i q_{d-i}`.
    pub fn invert(&self) -> Result<Self> {
        if !self.constant_term() {
            return Err(Error::NotInvertible);
        }
        let parts: Vec<Self> = (0..=self.max_degree).map(|d| self.component(d)).collect();
        let mut inv: Vec<Self> = vec![Self::one(self.ring, self.max_degree)];
        for d in 1..=self.max_degree as usize {
            let mut acc = Self::zero(self.ring, self.max_degree);
            for i in 1..=d {
                if !parts[i].is_zero() && !inv[d - i].is_zero() {
                    acc = acc.add(&parts[i].mul(&inv[d - i])?)?;
                }
            }
            inv.push(acc);
        }
        let mut out = Self::zero(self.ring, self.max_degree);
        for part in inv {
            out = out.add(&part)?;
        }
        Ok(out)
    }

    /// Same element with a lower truncation degree.
    pub fn truncate(&self, max_degree: u32) -> Self {
        let mut out = Self::zero(self.ring, max_degree.min(self.max_degree));
        for e in &self.terms {
            out.toggle(*e);
        }
        out
    }

    /// Monomials as exponent lists, in display order.
    pub fn monomials(&self) -> Vec<Vec<u32>> {
        let n = self.ring.generators().len();
        self.sorted_terms().into_iter().map(|e| e[..n].to_vec()).collect()
    }

    fn sorted_terms(&self) -> Vec<Exponents> {
        let mut terms: Vec<Exponents> = self.terms.iter().copied().collect();
        terms.sort_by(|a, b| self.degree_of(a).cmp(&self.degree_of(b)).then_with(|| b.cmp(a)));
        terms
    }

    /// Parses text such as `1 + x + y·u^2`; `*` may replace `·`.
    pub fn parse(ring: RingCase, max_degree: u32, text: &str) -> Result<Self> {
        let mut out = Self::zero(ring, max_degree);
        let text = text.trim();
        if text == "0" {
            return Ok(out);
        }
        for term in text.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(Error::Parse(format!("empty term in {text:?}")));
            }
            let mut e = [0u32; 3];
            if term != "1" {
                for factor in term.split(['·', '*']) {
                    let factor = factor.trim();
                    let (name, power) = match factor.split_once('^') {
                        Some((name, p)) => {
                            (name.trim(), p.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad power in {factor:?}")))?)
                        }
                        None => (factor, 1),
                    };
                    let i = ring
                        .generator_index(name)
                        .ok_or_else(|| Error::Parse(format!("{name:?} is not a generator of {ring}")))?;
                    e[i] += power;
                }
            }
            out.toggle(e);
        }
        Ok(out)
    }
}

impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let gens = self.ring.generators();
        let parts: Vec<String> = self
            .sorted_terms()
            .iter()
            .map(|e| {
                let factors: Vec<String> = gens
                    .iter()
                    .zip(e)
                    .filter(|(_, &x)| x > 0)
                    .map(|((g, _), &x)| if x == 1 { g.to_string() } else { format!("{g}^{x}") })
                    .collect();
                if factors.is_empty() {
                    "1".to_string()
                } else {
                    factors.join("·")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
