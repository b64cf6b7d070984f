//! The alternating oriented matroid `C^{m,k+1}` of `m` points on the
//! degree-`k` moment curve.
//!
//! A nonzero sign vector is a covector iff it is the sign pattern of a real
//! polynomial of degree at most `k` sampled at `m` increasing points. The
//! least such degree is computed in O(m): every zero entry is a root, and
//! between two consecutive nonzero entries with `z` zeros in between one
//! more root is needed exactly when the signs disagree with `(-1)^z`.

use serde::{Deserialize, Serialize};

use super::sign::{Sign, SignVector, MAX_SIGN_LENGTH};
use crate::graphs::{binomial, DihedralElement};
use crate::error::{Error, Result};

/// Largest `m` for which the `3^m` enumeration is attempted.
pub const MAX_ENUMERATION_LENGTH: usize = 16;

/// Least degree of a real polynomial whose signs at `m` increasing points are `s`.
pub fn minimal_degree(s: &SignVector) -> Result<usize> {
    if s.is_zero() {
        return Err(Error::ZeroSignVector);
    }
    let mut degree = s.zero_count();
    let mut last: Option<Sign> = None;
    let mut zeros_between = 0usize;
    for x in s.signs() {
        match x {
            Sign::Zero => zeros_between += 1,
            _ => {
                if let Some(prev) = last {
                    let differ = prev != x;
                    let even = zeros_between.is_multiple_of(2);
                    if differ == even {
                        degree += 1;
                    }
                }
                last = Some(x);
                zeros_between = 0;
            }
        }
    }
    Ok(degree)
}

pub fn is_covector(s: &SignVector, k: usize) -> bool {
    minimal_degree(s).is_ok_and(|d| d <= k)
}

/// Cocircuits: covectors with exactly `k` zeros.
pub fn is_cocircuit(s: &SignVector, k: usize) -> bool {
    s.zero_count() == k && is_covector(s, k)
}

/// True iff the nonzero entries contain an alternating subsequence of length `k + 2`.
pub fn is_vector(s: &SignVector, k: usize) -> Result<bool> {
    if s.is_zero() {
        return Err(Error::ZeroSignVector);
    }
    let mut changes = 0usize;
    let mut last: Option<Sign> = None;
    for x in s.signs().into_iter().filter(|&x| x != Sign::Zero) {
        if last.is_some_and(|p| p != x) {
            changes += 1;
        }
        last = Some(x);
    }
    Ok(changes > k)
}

fn check_parameters(m: usize, k: usize) -> Result<()> {
    if m <= k {
        return Err(Error::InvalidParameters(format!("need m > k, got m = {m}, k = {k}")));
    }
    if m > MAX_ENUMERATION_LENGTH {
        return Err(Error::TooLarge {
            what: "sign vector enumeration length",
            size: m as u128,
            limit: MAX_ENUMERATION_LENGTH as u128,
        });
    }
    Ok(())
}

/// All nonzero sign vectors of length `m`, lexicographic with `- < 0 < +`.
pub fn all_sign_vectors(m: usize) -> impl Iterator<Item = SignVector> {
    assert!(m <= MAX_SIGN_LENGTH);
    let total = 3u64.pow(m as u32);
    (0..total).filter_map(move |mut code| {
        let mut plus = 0u64;
        let mut minus = 0u64;
        for j in (0..m).rev() {
            match code % 3 {
                0 => minus |= 1 << j,
                2 => plus |= 1 << j,
                _ => {}
            }
            code /= 3;
        }
        let s = SignVector::from_planes(m, plus, minus);
        (!s.is_zero()).then_some(s)
    })
}

/// Nonzero covectors of `C^{m,k+1}`, lexicographic with `- < 0 < +`.
pub fn enumerate_covectors(m: usize, k: usize) -> Result<Vec<SignVector>> {
    check_parameters(m, k)?;
    Ok(all_sign_vectors(m).filter(|s| is_covector(s, k)).collect())
}

pub fn enumerate_cocircuits(m: usize, k: usize) -> Result<Vec<SignVector>> {
    check_parameters(m, k)?;
    Ok(all_sign_vectors(m).filter(|s| is_cocircuit(s, k)).collect())
}

/// Closed form `2 C(m,k)` for the number of cocircuits.
pub fn cocircuit_count(m: usize, k: usize) -> u128 {
    2 * binomial(m as u128, k as u128)
}

/// Right action of the dihedral group on sign vectors, induced by
/// `v_j . sigma = -v_{j+1}` and `v_j . rho = v_{-j}`:
/// `(s.sigma)_j = -s_{j-1}` and `(s.rho)_j = s_{-j}` on the twisted extension.
pub fn act_sign(s: &SignVector, g: &DihedralElement) -> SignVector {
    assert_eq!(s.len(), g.modulus(), "sign vector length and group modulus differ");
    let a = g.shift() as i64;
    let twist = if a % 2 == 1 { Sign::Minus } else { Sign::Plus };
    let signs: Vec<Sign> = (0..s.len() as i64)
        .map(|j| {
            let source = if g.flip() { -j - a } else { j - a };
            s.extended(source).mul(twist)
        })
        .collect();
    SignVector::from_signs(&signs)
}

/// [`act_sign`] restricted to covectors of `C^{m,k+1}`.
pub fn dihedral_act_sign(s: &SignVector, g: &DihedralElement, k: usize) -> Result<SignVector> {
    if s.len() != g.modulus() {
        return Err(Error::LengthMismatch { len: s.len(), m: g.modulus() });
    }
    if (s.len() + k) % 2 == 1 {
        return Err(Error::InvalidParameters(format!("m = {} and k = {k} differ in parity", s.len())));
    }
    if !is_covector(s, k) {
        return Err(Error::NotCovector { vector: s.to_string(), rank: k + 1 });
    }
    Ok(act_sign(s, g))
}

/// True iff some completion of the free (`None`) slots is a covector of `C^{m,k+1}`.
pub fn covector_extension_feasible(partial: &[Option<Sign>], k: usize) -> bool {
    // state: None before the first nonzero entry, otherwise (last sign, odd zero run)
    let mut before_first: Option<usize> = Some(0);
    let mut after: [[Option<usize>; 2]; 2] = [[None; 2]; 2];
    let idx = |x: Sign| usize::from(x == Sign::Plus);
    let relax = |slot: &mut Option<usize>, cost: usize| {
        if slot.is_none_or(|c| cost < c) {
            *slot = Some(cost);
        }
    };
    for entry in partial {
        let choices: &[Sign] = match entry {
            Some(x) => std::slice::from_ref(x),
            None => &[Sign::Minus, Sign::Zero, Sign::Plus],
        };
        let mut next_before = None;
        let mut next_after: [[Option<usize>; 2]; 2] = [[None; 2]; 2];
        for &x in choices {
            if x == Sign::Zero {
                if let Some(c) = before_first {
                    relax(&mut next_before, c + 1);
                }
                for last in 0..2 {
                    for odd in 0..2 {
                        if let Some(c) = after[last][odd] {
                            relax(&mut next_after[last][1 - odd], c + 1);
                        }
                    }
                }
            } else {
                let xi = idx(x);
                if let Some(c) = before_first {
                    relax(&mut next_after[xi][0], c);
                }
                for last in 0..2 {
                    for odd in 0..2 {
                        if let Some(c) = after[last][odd] {
                            let differ = last != xi;
                            let mismatch = differ == (odd == 0);
                            relax(&mut next_after[xi][0], c + usize::from(mismatch));
                        }
                    }
                }
            }
        }
        before_first = next_before;
        after = next_after;
    }
    after.iter().flatten().flatten().any(|&c| c <= k)
}

/// JSON form of a covector listing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CovectorList {
    pub m: usize,
    pub k: usize,
    pub covector_count: usize,
    pub cocircuit_count: usize,
    pub covectors: Vec<SignVector>,
}

impl CovectorList {
    pub fn build(m: usize, k: usize) -> Result<Self> {
        let covectors = enumerate_covectors(m, k)?;
        let cocircuit_count = covectors.iter().filter(|s| s.zero_count() == k).count();
        Ok(Self { m, k, covector_count: covectors.len(), cocircuit_count, covectors })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sv(s: &str) -> SignVector {
        s.parse().unwrap()
    }

    #[test]
    fn degree_examples() {
        assert_eq!(minimal_degree(&sv("+0-")).unwrap(), 1);
        assert_eq!(minimal_degree(&sv("+0+")).unwrap(), 2);
        assert_eq!(minimal_degree(&sv("+++")).unwrap(), 0);
        assert_eq!(minimal_degree(&sv("+-+")).unwrap(), 2);
        assert_eq!(minimal_degree(&sv("0+")).unwrap(), 1);
        assert_eq!(minimal_degree(&sv("000")), Err(Error::ZeroSignVector));
    }

    #[test]
    fn covector_examples() {
        assert!(!is_covector(&sv("+-+"), 1));
        assert!(is_covector(&sv("+0-"), 1));
        for s in all_sign_vectors(5) {
            assert!(is_covector(&s, 4));
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_covectors(3, 1).unwrap().len(), 12);
        assert_eq!(enumerate_cocircuits(3, 1).unwrap().len(), 6);
        assert!(enumerate_cocircuits(5, 1).unwrap().contains(&sv("+++0-")));
        assert_eq!(enumerate_covectors(4, 3).unwrap().len(), 80);
        assert!(enumerate_covectors(3, 3).is_err());
        for m in 1..=10 {
            for k in 0..m {
                assert_eq!(
                    enumerate_cocircuits(m, k).unwrap().len() as u128,
                    cocircuit_count(m, k),
                    "m={m} k={k}"
                );
            }
        }
    }

    #[test]
    fn enumeration_order_is_lexicographic() {
        let list = enumerate_covectors(3, 2).unwrap();
        assert_eq!(list.first().unwrap().to_string(), "---");
        assert_eq!(list.last().unwrap().to_string(), "+++");
    }

    #[test]
    fn covectors_closed_under_negation() {
        for m in 2..=7 {
            for k in 0..m {
                let list = enumerate_covectors(m, k).unwrap();
                assert_eq!(list.len() % 2, 0);
                assert!(list.iter().all(|s| is_covector(&s.neg(), k)));
            }
        }
    }

    #[test]
    fn vector_examples() {
        assert!(is_vector(&sv("+-+"), 1).unwrap());
        for k in 0..3 {
            assert!(!is_vector(&sv("+++"), k).unwrap());
        }
        assert_eq!(is_vector(&sv("00"), 0), Err(Error::ZeroSignVector));
    }

    #[test]
    fn vectors_are_orthogonal_to_covectors() {
        // supports are disjoint, or the coordinatewise products take both signs
        for (m, k) in [(5, 2), (6, 2), (6, 3), (5, 1)] {
            let covectors = enumerate_covectors(m, k).unwrap();
            let vectors: Vec<_> = all_sign_vectors(m).filter(|s| is_vector(s, k).unwrap()).collect();
            for y in &covectors {
                for x in &vectors {
                    let same = (x.plus_mask() & y.plus_mask()) | (x.minus_mask() & y.minus_mask());
                    let opposite = (x.plus_mask() & y.minus_mask()) | (x.minus_mask() & y.plus_mask());
                    assert!(
                        (same == 0) == (opposite == 0),
                        "{x} and {y} are not orthogonal"
                    );
                }
            }
        }
    }

    #[test]
    fn sigma_action_example() {
        let s = sv("+++0-");
        let t = dihedral_act_sign(&s, &DihedralElement::sigma(5), 1).unwrap();
        assert_eq!(t.to_string(), "----0");
        assert!(dihedral_act_sign(&sv("+-+-+"), &DihedralElement::sigma(5), 1).is_err());
    }

    #[test]
    fn sigma_to_the_m_is_identity() {
        for m in 2..=7 {
            let k = m - 2;
            let sm = DihedralElement::sigma(m).pow(m);
            for s in enumerate_covectors(m, k).unwrap() {
                assert_eq!(act_sign(&s, &sm), s);
            }
        }
    }

    #[test]
    fn action_is_right_action_preserving_covectors_and_order() {
        for (m, k) in [(5, 1), (6, 2), (7, 3), (6, 4)] {
            let covectors = enumerate_covectors(m, k).unwrap();
            let group = DihedralElement::all(m);
            for s in &covectors {
                for g in &group {
                    let sg = act_sign(s, g);
                    assert!(is_covector(&sg, k), "{s}.{g} = {sg}");
                    for h in [DihedralElement::sigma(m), DihedralElement::rho(m)] {
                        assert_eq!(act_sign(&sg, &h), act_sign(s, &g.compose(&h)));
                    }
                }
            }
            for s in covectors.iter().step_by(7) {
                for t in &covectors {
                    if s.leq(t) {
                        for g in &group {
                            assert!(act_sign(s, g).leq(&act_sign(t, g)));
                        }
                    }
                }
            }
        }
    }

    fn brute_feasible(partial: &[Option<Sign>], k: usize) -> bool {
        let free: Vec<usize> = (0..partial.len()).filter(|&j| partial[j].is_none()).collect();
        let total = 3usize.pow(free.len() as u32);
        (0..total).any(|mut code| {
            let mut signs: Vec<Sign> = partial.iter().map(|x| x.unwrap_or(Sign::Zero)).collect();
            for &j in &free {
                signs[j] = [Sign::Minus, Sign::Zero, Sign::Plus][code % 3];
                code /= 3;
            }
            is_covector(&SignVector::from_signs(&signs), k)
        })
    }

    #[test]
    fn extension_examples() {
        use Sign::*;
        assert!(covector_extension_feasible(&[Some(Plus), Some(Minus), None], 1));
        assert!(!covector_extension_feasible(
            &[Some(Plus), Some(Minus), Some(Plus), Some(Minus), None, None],
            2
        ));
        for k in 0..4 {
            assert!(covector_extension_feasible(&[None; 6], k));
        }
    }

    proptest! {
        #[test]
        fn extension_matches_brute_force(
            entries in proptest::collection::vec(0u8..4, 1..8),
            k in 0usize..5,
        ) {
            let partial: Vec<Option<Sign>> = entries
                .iter()
                .map(|&e| match e {
                    0 => Some(Sign::Minus),
                    1 => Some(Sign::Zero),
                    2 => Some(Sign::Plus),
                    _ => None,
                })
                .collect();
            prop_assert_eq!(covector_extension_feasible(&partial, k), brute_feasible(&partial, k));
        }

        #[test]
        fn cocircuits_are_minimal(m in 2usize..8, k_frac in 0.0f64..1.0) {
            let k = ((m as f64) * k_frac) as usize % m;
            let covectors = enumerate_covectors(m, k).unwrap();
            for c in covectors.iter().filter(|s| s.zero_count() == k) {
                let below = covectors.iter().filter(|t| t.leq(c) && *t != c).count();
                prop_assert_eq!(below, 0);
            }
        }
    }
}
