use serde::Serialize;

use super::restrict::{restrict, Restriction};
use super::ring::{case_for, GradedPoly, RingCase};
use super::sw::total_sw_class;
use crate::error::Result;

/// A predicted range `lo <= d < hi` of vanishing degrees of `w̄_d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Window {
    pub lo: u32,
    pub hi: u32,
    pub rule: String,
}

fn v2(s: u32) -> u32 {
    s.trailing_zeros()
}

/// Every window rule that applies to `(n, k)`, in a fixed order.
pub fn vanishing_windows(n: usize, k: usize) -> Result<Vec<Window>> {
    let ring = case_for(n, k)?;
    let mut out = Vec::new();
    let mut push = |lo: i64, hi: u32, rule: String| {
        if lo >= 1 && (lo as u32) < hi {
            out.push(Window { lo: lo as u32, hi, rule });
        }
    };
    match ring {
        RingCase::Odd => {
            let r = (k as u32 - 1) / 2;
            if r > 0 {
                let a = v2(r);
                push(1 << a, 1 << (a + 1), format!("odd m, r = {r}, a = {a}"));
            }
        }
        RingCase::ZeroMod4 => {
            let r = k as u32 / 2;
            if r >= 3 {
                if r.is_multiple_of(2) {
                    let s = r / 2;
                    let a = v2(s);
                    if a > 0 {
                        push(3 * (1 << a) + 1, 1 << (a + 2), format!("m = 0 mod 4, r = 2s, s = {s}, a = {a}"));
                    }
                } else {
                    let s = (r - 1) / 2;
                    let a = v2(s);
                    push(3 * (1 << a) - 1, 1 << (a + 2), format!("m = 0 mod 4, r = 2s+1, s = {s}, a = {a}"));
                }
                if r.is_multiple_of(2) && r >= 4 {
                    let s = (r - 2) / 2;
                    let a = v2(s);
                    if a > 0 {
                        push(3 * (1 << a) - 2, 1 << (a + 2), format!("m = 0 mod 4, r = 2s+2, s = {s}, a = {a}"));
                    }
                }
                if r.is_multiple_of(2) && r >= 6 {
                    let s = (r - 4) / 2;
                    let a = v2(s);
                    if a > 1 {
                        push(3 * (1 << a) - 5, 1 << (a + 2), format!("m = 0 mod 4, r = 2s+4, s = {s}, a = {a}"));
                    }
                }
            }
        }
        RingCase::TwoMod4 => {
            let r = k as u32 / 2;
            if r >= 2 {
                if r.is_multiple_of(2) {
                    let s = r / 2;
                    let a = v2(s);
                    push(3 * (1 << a), 1 << (a + 2), format!("m = 2 mod 4, r = 2s, s = {s}, a = {a}"));
                } else {
                    let s = (r - 1) / 2;
                    let a = v2(s);
                    push(3 * (1 << a) - 1, 1 << (a + 2), format!("m = 2 mod 4, r = 2s+1, s = {s}, a = {a}"));
                }
                if r.is_multiple_of(2) && r >= 4 {
                    let s = (r - 2) / 2;
                    let a = v2(s);
                    if a > 0 {
                        push(3 * (1 << a) - 3, 1 << (a + 2), format!("m = 2 mod 4, r = 2s+2, s = {s}, a = {a}"));
                    }
                }
            }
        }
        RingCase::Cyclic4 | RingCase::C2 => unreachable!("not a dihedral ring"),
    }
    Ok(out)
}

/// The first applicable window, if any.
pub fn vanishing_window(n: usize, k: usize) -> Result<Option<(u32, u32)>> {
    Ok(vanishing_windows(n, k)?.first().map(|w| (w.lo, w.hi)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    TestGraphCertified,
    TestGraphUpToDegree,
    NonTestForLargeN,
    /// `w̄` vanishes only in odd degrees above 1, where no criterion applies.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassificationReport {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub ring_case: RingCase,
    pub max_degree: u32,
    pub w: String,
    pub wbar: String,
    pub wbar_vanishing_degrees: Vec<u32>,
    pub window: Option<[u32; 2]>,
    pub window_vanishes: Option<bool>,
    pub verdict: Verdict,
    pub certificate: Option<String>,
    pub caveats: Vec<String>,
}

/// `w = 1 + g` with `g` a degree one generator whose powers never vanish.
fn is_one_plus_free_generator(p: &GradedPoly) -> Option<String> {
    let ring = p.ring();
    let candidates: &[&str] = match ring {
        RingCase::Odd | RingCase::C2 => &["α"],
        RingCase::TwoMod4 => &["α", "β"],
        RingCase::ZeroMod4 => &["x", "y"],
        RingCase::Cyclic4 => &[],
    };
    candidates.iter().find_map(|g| {
        let target = GradedPoly::parse(ring, p.max_degree(), &format!("1 + {g}")).ok()?;
        (target == *p).then(|| g.to_string())
    })
}

/// A structural reason for `w̄_r != 0` in every degree, if one is known.
fn certificate(w: &GradedPoly) -> Result<Option<String>> {
    if let Some(g) = is_one_plus_free_generator(w) {
        return Ok(Some(format!("w = 1 + {g}, so w̄_r = {g}^r != 0 for every r")));
    }
    for hom in Restriction::available(w.ring()) {
        let image = restrict(w, hom)?;
        if let Some(g) = is_one_plus_free_generator(&image) {
            return Ok(Some(format!("{hom}*(w) = 1 + {g}, so {hom}*(w̄_r) = {g}^r != 0 for every r")));
        }
        if image.ring() == RingCase::Cyclic4 {
            let target = GradedPoly::parse(RingCase::Cyclic4, w.max_degree(), "1 + x + u + x·u")?;
            if image == target {
                return Ok(Some(format!(
                    "{hom}*(w) = (1 + x)(1 + u), so {hom}*(w̄) = (1 + x)(1 + u + u^2 + ...) is nonzero in every degree"
                )));
            }
        }
    }
    Ok(None)
}

pub fn classify(n: usize, k: usize, max_degree: u32) -> Result<ClassificationReport> {
    let ring = case_for(n, k)?;
    let w = total_sw_class(n, k, max_degree)?;
    let wbar = w.invert()?;
    let vanishing: Vec<u32> = (1..=max_degree).filter(|&d| wbar.component(d).is_zero()).collect();
    let window = vanishing_window(n, k)?;
    let window_vanishes = window
        .filter(|&(_, hi)| hi - 1 <= max_degree)
        .map(|(lo, hi)| (lo..hi).all(|d| vanishing.contains(&d)));
    let cert = certificate(&w)?;
    let mut caveats = Vec::new();
    let verdict = if cert.is_some() {
        if !vanishing.is_empty() {
            caveats.push(format!("certificate contradicted by vanishing degrees {vanishing:?}"));
        }
        Verdict::TestGraphCertified
    } else if vanishing.iter().any(|&d| d == 1 || d % 2 == 0) {
        caveats.push("for n >= N(k), N unspecified".to_string());
        Verdict::NonTestForLargeN
    } else if vanishing.is_empty() {
        caveats.push(format!("w̄_r != 0 checked only for r <= {max_degree}"));
        Verdict::TestGraphUpToDegree
    } else {
        caveats.push("w̄ vanishes only in odd degrees above 1; no criterion applies".to_string());
        Verdict::Inconclusive
    };
    Ok(ClassificationReport {
        n,
        k,
        m: 2 * n + k,
        ring_case: ring,
        max_degree,
        w: w.to_string(),
        wbar: wbar.to_string(),
        wbar_vanishing_degrees: vanishing,
        window: window.map(|(lo, hi)| [lo, hi]),
        window_vanishes,
        verdict,
        certificate: cert,
        caveats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_examples() {
        assert_eq!(vanishing_window(2, 5).unwrap(), Some((2, 4)));
        assert_eq!(vanishing_window(3, 6).unwrap(), Some((2, 4)));
        assert_eq!(vanishing_window(2, 3).unwrap(), Some((1, 2)));
        assert_eq!(vanishing_window(2, 1).unwrap(), None);
    }

    #[test]
    fn certified_families() {
        for n in 1..=10 {
            for k in [0, 1, 2] {
                let r = classify(n, k, 32).unwrap();
                assert_eq!(r.verdict, Verdict::TestGraphCertified, "{n},{k}");
                assert!(r.caveats.is_empty());
            }
        }
        for s in 1..=4 {
            assert_eq!(classify(2 * s, 4, 32).unwrap().verdict, Verdict::TestGraphCertified);
        }
    }

    #[test]
    fn obstructed_cases() {
        let r = classify(2, 5, 32).unwrap();
        assert_eq!(r.verdict, Verdict::NonTestForLargeN);
        assert_eq!(r.wbar_vanishing_degrees.first(), Some(&2));
        assert_eq!(r.window_vanishes, Some(true));
        for (n, k) in [(2, 3), (3, 7), (3, 6), (5, 6)] {
            assert_eq!(classify(n, k, 32).unwrap().verdict, Verdict::NonTestForLargeN, "{n},{k}");
        }
    }

    #[test]
    fn report_json_fields() {
        let v = serde_json::to_value(classify(2, 1, 8).unwrap()).unwrap();
        for key in ["n", "k", "m", "ring_case", "w", "wbar_vanishing_degrees", "window", "verdict", "caveats"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["verdict"], "TEST_GRAPH_CERTIFIED");
        assert_eq!(v["ring_case"], "ODD");
    }
}
