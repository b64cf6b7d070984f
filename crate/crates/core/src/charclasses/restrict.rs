use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::ring::{GradedPoly, RingCase};
use crate::error::{Error, Result};

/// Restriction (and inflation) maps between the rings of [`RingCase`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Restriction {
    /// `D_2m -> C_m` inclusion, `m = 0 mod 4`.
    J,
    /// `C_m -> C_2` quotient, pulled back along `p`.
    P,
    /// Subgroup generated by `rho`.
    PhiRho,
    /// Subgroup generated by `sigma rho`.
    PhiSigmaRho,
    /// Subgroup generated by the half turn `sigma^{m/2}`.
    PhiHalfTurn,
}

impl Restriction {
    pub const ALL: [Restriction; 5] =
        [Restriction::J, Restriction::P, Restriction::PhiRho, Restriction::PhiSigmaRho, Restriction::PhiHalfTurn];

    pub fn name(self) -> &'static str {
        match self {
            Restriction::J => "j",
            Restriction::P => "p",
            Restriction::PhiRho => "phi_rho",
            Restriction::PhiSigmaRho => "phi_sigma_rho",
            Restriction::PhiHalfTurn => "phi_half_turn",
        }
    }

    /// Target ring and the images of the source generators, as text.
    fn table(self, source: RingCase) -> Option<(RingCase, &'static [&'static str])> {
        use RingCase::*;
        use Restriction::*;
        Some(match (source, self) {
            (Odd, PhiRho) => (C2, &["α"]),
            (TwoMod4, PhiHalfTurn) => (C2, &["α", "0"]),
            (TwoMod4, PhiRho) => (C2, &["0", "α"]),
            (ZeroMod4, J) => (Cyclic4, &["x", "x", "u"]),
            (ZeroMod4, PhiRho) => (C2, &["α", "0", "0"]),
            (ZeroMod4, PhiSigmaRho) => (C2, &["0", "α", "0"]),
            (ZeroMod4, PhiHalfTurn) => (C2, &["0", "0", "α^2"]),
            (Cyclic4, PhiHalfTurn) => (C2, &["0", "α^2"]),
            (C2, P) => (Cyclic4, &["x"]),
            _ => return None,
        })
    }

    pub fn target(self, source: RingCase) -> Option<RingCase> {
        self.table(source).map(|(t, _)| t)
    }

    /// Maps offered from `source`.
    pub fn available(source: RingCase) -> Vec<Restriction> {
        Self::ALL.into_iter().filter(|r| r.table(source).is_some()).collect()
    }
}

impl fmt::Display for Restriction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Restriction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_end_matches('*');
        Self::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown homomorphism {s:?}")))
    }
}

/// Applies the ring homomorphism monomial by monomial.
pub fn restrict(p: &GradedPoly, hom: Restriction) -> Result<GradedPoly> {
    let (target, images) = hom
        .table(p.ring())
        .ok_or_else(|| Error::InvalidRestriction { hom: hom.to_string(), ring: p.ring().to_string() })?;
    let images = images
        .iter()
        .map(|s| GradedPoly::parse(target, p.max_degree(), s))
        .collect::<Result<Vec<_>>>()?;
    let mut out = GradedPoly::zero(target, p.max_degree());
    for e in p.monomials() {
        let mut term = GradedPoly::one(target, p.max_degree());
        for (img, &x) in images.iter().zip(&e) {
            if x > 0 {
                term = term.mul(&img.pow(x)?)?;
            }
        }
        out = out.add(&term)?;
    }
    Ok(out)
}
