use std::collections::BTreeSet;

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use super::rep::{representation, MomentConfig};
use crate::error::{Error, Result};
use crate::graphs::{enumerate_subsets, DihedralElement};
use crate::matroid::{act_sign, is_cocircuit, is_covector, Sign, SignVector, MAX_SIGN_LENGTH};

pub const DEFAULT_ZERO_TOL: f64 = 1e-9;

/// Tope sets are compared against enumeration up to this length.
pub const MAX_TOPE_ENUMERATION: usize = 16;

/// `(sign <x, v_0>, ..., sign <x, v_{m-1}>)` for `x` scaled to unit length,
/// entries below `zero_tol` in absolute value read as zero.
pub fn sign_vector_of_point(x: &DVector<f64>, config: &MomentConfig, zero_tol: f64) -> SignVector {
    let norm = x.norm();
    let signs: Vec<Sign> = config
        .vectors
        .iter()
        .map(|v| {
            let t = x.dot(v) / norm;
            if t.abs() < zero_tol {
                Sign::Zero
            } else if t > 0.0 {
                Sign::Plus
            } else {
                Sign::Minus
            }
        })
        .collect();
    SignVector::from_signs(&signs)
}

/// Unit normal to the span of the chosen `k` vectors, by signed maximal minors.
pub fn cocircuit_point(config: &MomentConfig, zeros: &[usize]) -> Result<DVector<f64>> {
    let d = config.dimension();
    if zeros.len() + 1 != d {
        return Err(Error::InvalidParameters(format!("need {} zero positions, got {}", d - 1, zeros.len())));
    }
    let rows = DMatrix::from_fn(zeros.len(), d, |r, c| config.vectors[zeros[r]][c]);
    let x = DVector::from_fn(d, |i, _| {
        let minor = rows.clone().remove_column(i);
        let det = if minor.nrows() == 0 { 1.0 } else { minor.determinant() };
        if i % 2 == 0 {
            det
        } else {
            -det
        }
    });
    let norm = x.norm();
    if norm < 1e-12 {
        return Err(Error::InvalidParameters(format!("vectors {zeros:?} are dependent")));
    }
    Ok(x / norm)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RealizationReport {
    pub m: usize,
    pub k: usize,
    pub samples: usize,
    pub seed: u64,
    pub non_covector_samples: usize,
    pub samples_with_zeros: usize,
    pub distinct_topes_sampled: usize,
    pub topes_expected: Option<usize>,
    pub topes_missing: Option<usize>,
    pub cocircuits_expected: usize,
    pub cocircuits_realized: usize,
    pub cocircuit_failures: Vec<String>,
    pub max_zero_residual: f64,
    pub min_nonzero_margin: f64,
    pub passed: bool,
}

/// Samples points, half from the standard Gaussian and half as small
/// perturbations of cocircuit points, and checks that every sign vector seen
/// is a covector. Every cocircuit is realized exactly from its zero set.
pub fn verify_realization(m: usize, k: usize, samples: usize, seed: u64) -> Result<RealizationReport> {
    if m > MAX_SIGN_LENGTH {
        return Err(Error::TooLarge { what: "sign vector length", size: m as u128, limit: MAX_SIGN_LENGTH as u128 });
    }
    let config = MomentConfig::new(m, k)?;
    let d = config.dimension();

    let mut anchors = Vec::new();
    let mut realized = BTreeSet::new();
    let mut failures = Vec::new();
    let mut max_zero_residual = 0.0f64;
    let mut min_nonzero_margin = f64::INFINITY;
    for zero_set in enumerate_subsets(k, m)? {
        let zeros = zero_set.members();
        let x = cocircuit_point(&config, &zeros)?;
        for (j, v) in config.vectors.iter().enumerate() {
            let t = x.dot(v).abs();
            if zero_set.contains(j) {
                max_zero_residual = max_zero_residual.max(t);
            } else {
                min_nonzero_margin = min_nonzero_margin.min(t);
            }
        }
        let s = sign_vector_of_point(&x, &config, DEFAULT_ZERO_TOL);
        if s.zero_count() != k || !is_cocircuit(&s, k) {
            failures.push(s.to_string());
        }
        realized.insert(s);
        realized.insert(s.neg());
        anchors.push(x);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut topes = BTreeSet::new();
    let mut non_covector_samples = 0;
    let mut samples_with_zeros = 0;
    for i in 0..samples {
        let noise = DVector::from_fn(d, |_, _| rng.sample::<f64, _>(StandardNormal));
        let x = if i % 2 == 0 || anchors.is_empty() {
            noise
        } else {
            let sign = if (i / 2) % 2 == 0 { 1.0 } else { -1.0 };
            &anchors[(i / 4) % anchors.len()] * sign + noise * 1e-3
        };
        let s = sign_vector_of_point(&x, &config, DEFAULT_ZERO_TOL);
        if s.is_zero() || !is_covector(&s, k) {
            non_covector_samples += 1;
        }
        if s.zero_count() == 0 {
            topes.insert(s);
        } else {
            samples_with_zeros += 1;
        }
    }

    let (topes_expected, topes_missing) = if m <= MAX_TOPE_ENUMERATION {
        let full = (0u64..1 << m)
            .map(|plus| SignVector::from_planes(m, plus, !plus & ((1u64 << m) - 1)))
            .filter(|s| is_covector(s, k))
            .collect::<BTreeSet<_>>();
        (Some(full.len()), Some(full.difference(&topes).count()))
    } else {
        (None, None)
    };
    let cocircuits_expected = 2 * enumerate_subsets(k, m)?.len();
    let passed = non_covector_samples == 0
        && failures.is_empty()
        && realized.len() == cocircuits_expected
        && topes_missing.is_none_or(|x| x == 0);
    Ok(RealizationReport {
        m,
        k,
        samples,
        seed,
        non_covector_samples,
        samples_with_zeros,
        distinct_topes_sampled: topes.len(),
        topes_expected,
        topes_missing,
        cocircuits_expected,
        cocircuits_realized: realized.len(),
        cocircuit_failures: failures,
        max_zero_residual,
        min_nonzero_margin,
        passed,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SignActionReport {
    pub n: usize,
    pub k: usize,
    pub samples: usize,
    pub seed: u64,
    pub comparisons: usize,
    pub mismatches: Vec<String>,
    pub passed: bool,
}

/// Compares `sign(x . g)` with the combinatorial action on `sign(x)` for
/// Gaussian `x` and `g` in `{sigma, rho}`.
pub fn check_sign_action(n: usize, k: usize, samples: usize, seed: u64) -> Result<SignActionReport> {
    let rep = representation(n, k)?;
    let config = MomentConfig::new(rep.m, k)?;
    let generators = [DihedralElement::sigma(rep.m), DihedralElement::rho(rep.m)];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mismatches = Vec::new();
    let mut comparisons = 0;
    for _ in 0..samples {
        let x = DVector::from_fn(k + 1, |_, _| rng.sample::<f64, _>(StandardNormal));
        let s = sign_vector_of_point(&x, &config, DEFAULT_ZERO_TOL);
        if s.zero_count() > 0 {
            continue;
        }
        for g in &generators {
            comparisons += 1;
            let moved = sign_vector_of_point(&rep.act(&x, g), &config, DEFAULT_ZERO_TOL);
            let predicted = act_sign(&s, g);
            if moved != predicted && mismatches.len() < 16 {
                mismatches.push(format!("{s} . {g}: geometric {moved}, combinatorial {predicted}"));
            }
        }
    }
    Ok(SignActionReport { n, k, samples, seed, comparisons, passed: mismatches.is_empty(), mismatches })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_one_topes_match() {
        let r = verify_realization(3, 1, 20_000, 7).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.topes_expected, Some(6));
        assert_eq!(r.distinct_topes_sampled, 6);
    }

    #[test]
    fn five_two_cocircuits() {
        let r = verify_realization(5, 2, 10_000, 1).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.cocircuits_realized, 20);
        assert!(r.max_zero_residual < 1e-12);
    }

    #[test]
    fn negation_of_point() {
        let config = MomentConfig::new(7, 3).unwrap();
        let x = DVector::from_vec(vec![0.3, -1.2, 0.5, 0.9]);
        let s = sign_vector_of_point(&x, &config, DEFAULT_ZERO_TOL);
        assert_eq!(sign_vector_of_point(&-x, &config, DEFAULT_ZERO_TOL), s.neg());
        assert_eq!(s.zero_count(), 0);
    }

    #[test]
    fn geometric_action_matches_combinatorial() {
        for (n, k) in [(2, 1), (2, 2), (3, 4), (2, 3), (4, 5)] {
            let r = check_sign_action(n, k, 2000, 3).unwrap();
            assert!(r.passed, "{:?}", r.mismatches);
            assert!(r.comparisons > 3000);
        }
    }

    #[test]
    fn degenerate_modulus_rejected() {
        assert!(verify_realization(2, 2, 10, 0).is_err());
    }
}
