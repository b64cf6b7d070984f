use nalgebra::DMatrix;

use super::ring::{case_for, GradedPoly, RingCase};
use crate::error::{Error, Result};
use crate::geometry::OrthogonalRep;
use crate::graphs::DihedralElement;

fn parse(ring: RingCase, max_degree: u32, text: &str) -> GradedPoly {
    GradedPoly::parse(ring, max_degree, text).expect("built-in polynomial text")
}

/// Total Stiefel-Whitney class of `xi_{n,k}` from the closed forms.
pub fn total_sw_class(n: usize, k: usize, max_degree: u32) -> Result<GradedPoly> {
    let ring = case_for(n, k)?;
    let p = |s: &str| parse(ring, max_degree, s);
    match ring {
        RingCase::Odd => p("1 + α").pow((k as u32 - 1) / 2 + 1),
        RingCase::TwoMod4 => {
            let r = k as u32 / 2;
            p("1 + α")
                .mul(&p("1 + β").pow(r.div_ceil(2))?)?
                .mul(&p("1 + α").mul(&p("1 + α + β"))?.pow(r / 2)?)
        }
        RingCase::ZeroMod4 => {
            let r = k as u32 / 2;
            p("1 + y").mul(&p("1 + x + y + u").pow(r.div_ceil(2))?)?.mul(&p("1 + x + y").pow(r / 2)?)
        }
        RingCase::Cyclic4 | RingCase::C2 => unreachable!("not a dihedral ring"),
    }
}

/// Number of `-1` eigenvalues of an involution block.
fn minus_eigenvalues(block: &DMatrix<f64>) -> Result<u32> {
    let e = (block.nrows() as f64 - block.trace()) / 2.0;
    let rounded = e.round();
    if (e - rounded).abs() > 1e-6 || (block * block - DMatrix::identity(block.nrows(), block.nrows())).amax() > 1e-6 {
        return Err(Error::InvalidParameters("block matrix is not an involution".into()));
    }
    Ok(rounded as u32)
}

fn binomial2(e: u32) -> bool {
    (e * e.saturating_sub(1) / 2) % 2 == 1
}

/// The same class, recomputed as a Whitney product over the invariant blocks
/// of the numeric representation. Each block's class is read off from the
/// eigenvalue counts of the involutions `rho`, `sigma rho` and `sigma^{m/2}`
/// via the restriction maps to their order-two subgroups.
pub fn total_sw_class_from_blocks(n: usize, k: usize, max_degree: u32) -> Result<GradedPoly> {
    let ring = case_for(n, k)?;
    let rep = OrthogonalRep::new(n, k)?;
    let m = rep.m;
    let rho = rep.matrix(&DihedralElement::rho(m));
    let sigma_rho = rep.matrix(&DihedralElement::new(m, 1, true));
    let half = (m % 2 == 0).then(|| rep.matrix(&DihedralElement::new(m, (m / 2) as i64, false)));
    let p = |s: &str| parse(ring, max_degree, s);
    let gens: Vec<GradedPoly> =
        ring.generators().iter().map(|(g, _)| GradedPoly::generator(ring, max_degree, g)).collect::<Result<_>>()?;
    let mut w = GradedPoly::one(ring, max_degree);
    for (at, size) in rep.blocks() {
        let sub = |mat: &DMatrix<f64>| mat.view((at, at), (size, size)).into_owned();
        let factor = match ring {
            RingCase::Odd => p("1 + α").pow(minus_eigenvalues(&sub(&rho))?)?,
            RingCase::TwoMod4 => {
                // rho and the half turn are diagonal here, so the block splits into lines
                let (r, z) = (sub(&rho), sub(half.as_ref().expect("m even")));
                let mut f = GradedPoly::one(ring, max_degree);
                for i in 0..size {
                    let off = (0..size).filter(|&j| j != i).map(|j| r[(i, j)].abs().max(z[(i, j)].abs())).fold(0.0, f64::max);
                    if off > 1e-9 {
                        return Err(Error::InvalidParameters("involutions are not simultaneously diagonal".into()));
                    }
                    let mut line = GradedPoly::one(ring, max_degree);
                    if z[(i, i)] < 0.0 {
                        line = line.add(&gens[0])?;
                    }
                    if r[(i, i)] < 0.0 {
                        line = line.add(&gens[1])?;
                    }
                    f = f.mul(&line)?;
                }
                f
            }
            RingCase::ZeroMod4 => {
                let e_rho = minus_eigenvalues(&sub(&rho))?;
                let e_sr = minus_eigenvalues(&sub(&sigma_rho))?;
                let e_half = minus_eigenvalues(&sub(half.as_ref().expect("m even")))?;
                let (x, y, u) = (&gens[0], &gens[1], &gens[2]);
                let mut f = GradedPoly::one(ring, max_degree);
                if e_rho % 2 == 1 {
                    f = f.add(x)?;
                }
                if e_sr % 2 == 1 {
                    f = f.add(y)?;
                }
                if binomial2(e_rho) {
                    f = f.add(&x.mul(x)?)?;
                }
                if binomial2(e_sr) {
                    f = f.add(&y.mul(y)?)?;
                }
                if binomial2(e_half) {
                    f = f.add(u)?;
                }
                f
            }
            RingCase::Cyclic4 | RingCase::C2 => unreachable!("not a dihedral ring"),
        };
        w = w.mul(&factor)?;
    }
    Ok(w)
}

/// Dual class `w̄ = w^{-1}`.
pub fn wbar(n: usize, k: usize, max_degree: u32) -> Result<GradedPoly> {
    total_sw_class(n, k, max_degree)?.invert()
}
