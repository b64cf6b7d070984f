use std::collections::HashMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sgtopo::charclasses::{
    classify, restrict, total_sw_class, total_sw_class_from_blocks, vanishing_windows, wbar, GradedPoly, Restriction,
    RingCase, Verdict,
};
use sgtopo::complexes::{
    check_equivariance_combinatorial, hom_poset, order_complex, verify_nerve, z2_betti, CovectorMap, MAX_HOM_CELLS,
};
use sgtopo::geometry::{equivariance_deviations, max_edge_defect, min_vertex_norm, moment_vectors, representation, sweep, sweep_csv};
use sgtopo::graphs::{chromatic_number, stable_kneser_graph, vertex_criticality_check, Graph};
use sgtopo::matroid::{all_sign_vectors, enumerate_cocircuits, enumerate_covectors, is_covector, Sign, SignVector};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    let covectors = enumerate_covectors(3, 1).map_err(|e| e.to_string())?;
    let cocircuits = enumerate_cocircuits(3, 1).map_err(|e| e.to_string())?;
    ensure(covectors.len() == 12, || format!("{} covectors", covectors.len()))?;
    ensure(cocircuits.len() == 6, || format!("{} cocircuits", cocircuits.len()))?;
    let map = CovectorMap::new(1, 1).map_err(|e| e.to_string())?;
    let target = stable_kneser_graph(1, 1).map_err(|e| e.to_string())?;
    ensure(target.labels() == Some(map.vertices()), || "vertex orders differ".into())?;
    let hp = hom_poset(&Graph::complete(2), &target, MAX_HOM_CELLS).map_err(|e| e.to_string())?;
    let index = hp.index();
    let mut image = Vec::new();
    for s in &covectors {
        let cell = map.map(s).map_err(|e| e.to_string())?;
        image.push(*index.get(&cell).ok_or_else(|| format!("{s} maps outside Hom"))?);
    }
    let mut sorted = image.clone();
    sorted.sort_unstable();
    sorted.dedup();
    ensure(sorted.len() == covectors.len() && sorted.len() == hp.cells.len(), || {
        format!("{} distinct images of {} covectors onto {} cells", sorted.len(), covectors.len(), hp.cells.len())
    })?;
    for (i, s) in covectors.iter().enumerate() {
        for (j, t) in covectors.iter().enumerate() {
            ensure(s.leq(t) == hp.poset.leq(image[i], image[j]), || format!("order differs at {s}, {t}"))?;
        }
    }
    Ok("12 covectors, 6 cocircuits, order isomorphism onto 12 cells".into())
}

/// Sign pattern of the lowest-degree polynomial with the prescribed signs at
/// `t_j = 2j`: roots at the zero positions and one root between each pair of
/// consecutive nonzero positions where the remaining factor changes sign.
/// Returns the degree after checking the constructed signs exactly.
fn minimal_polynomial_degree(s: &[i8]) -> usize {
    let t = |j: usize| 2 * j as i128;
    let zeros: Vec<usize> = (0..s.len()).filter(|&j| s[j] == 0).collect();
    let support: Vec<usize> = (0..s.len()).filter(|&j| s[j] != 0).collect();
    let zero_factor_sign = |j: usize| -> i8 {
        zeros.iter().map(|&z| if t(j) > t(z) { 1 } else { -1 }).product()
    };
    let wanted: Vec<i8> = support.iter().map(|&j| s[j] * zero_factor_sign(j)).collect();
    let mut roots: Vec<i128> = zeros.iter().map(|&z| t(z)).collect();
    for w in 0..support.len().saturating_sub(1) {
        if wanted[w] != wanted[w + 1] {
            roots.push(t(support[w]) + 1);
        }
    }
    let eval = |x: i128| roots.iter().fold(1i128, |acc, r| acc * (x - r));
    let lead = if eval(t(support[0])).signum() as i8 == s[support[0]] { 1 } else { -1 };
    for j in 0..s.len() {
        let value = lead * eval(t(j));
        assert_eq!(value.signum() as i8, s[j], "construction failed for {s:?}");
    }
    roots.len()
}

fn criterion_2() -> Outcome {
    let mut checked = 0usize;
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for m in 1..=7 {
        for k in 0..=4 {
            for s in all_sign_vectors(m) {
                let signs: Vec<i8> = s.signs().into_iter().map(Sign::to_i8).collect();
                // no nonzero polynomial of degree <= k has more than k roots,
                // and the construction is the cheapest one
                let oracle = minimal_polynomial_degree(&signs) <= k;
                ensure(oracle == is_covector(&s, k), || format!("m={m} k={k} {s}: oracle says {oracle}"))?;
                checked += 1;
            }
            for _ in 0..2000 {
                let coeffs: Vec<i64> = (0..=k).map(|_| rng.random_range(-6..=6)).collect();
                let values: Vec<i8> = (0..m as i64)
                    .map(|j| coeffs.iter().rev().fold(0i64, |acc, c| acc * j + c).signum() as i8)
                    .collect();
                let s = SignVector::from_i8s(&values);
                ensure(s.is_zero() || is_covector(&s, k), || format!("sampled polynomial gives non-covector {s}"))?;
            }
        }
    }
    Ok(format!("{checked} sign vectors agree with the polynomial oracle"))
}

fn sphere_betti(k: usize) -> Vec<usize> {
    let mut b = vec![0; k + 1];
    b[0] += 1;
    b[k] += 1;
    b
}

const SPHERE_CASES: [(usize, usize); 6] = [(1, 1), (1, 2), (1, 3), (2, 1), (3, 1), (2, 2)];

fn criterion_3() -> Outcome {
    let mut parts = Vec::new();
    for (n, k) in SPHERE_CASES {
        let g = stable_kneser_graph(n, k).map_err(|e| e.to_string())?;
        let hp = hom_poset(&Graph::complete(2), &g, MAX_HOM_CELLS).map_err(|e| e.to_string())?;
        let oc = order_complex(&hp.poset).map_err(|e| e.to_string())?;
        let b = z2_betti(&oc);
        ensure(b == sphere_betti(k), || format!("({n},{k}): betti {b:?}"))?;
        parts.push(format!("({n},{k}) {} cells {b:?}", hp.cells.len()));
    }
    Ok(parts.join("; "))
}

fn criterion_4() -> Outcome {
    for (n, k) in SPHERE_CASES {
        let g = stable_kneser_graph(n, k).map_err(|e| e.to_string())?;
        let c = chromatic_number(&g).map_err(|e| e.to_string())?;
        ensure(c.colours == k + 2 && c.is_proper(&g), || format!("({n},{k}): chi = {}", c.colours))?;
        ensure(vertex_criticality_check(&g).map_err(|e| e.to_string())?, || format!("({n},{k}) not critical"))?;
    }
    Ok("chi = k+2 and vertex-critical on all six instances".into())
}

fn criterion_5() -> Outcome {
    let mut worst = 0.0f64;
    let mut cases = 0;
    for m in 2..=40usize {
        for n in 1..=m / 2 {
            let k = m - 2 * n;
            let rep = representation(n, k).map_err(|e| e.to_string())?;
            let config = moment_vectors(n, k).map_err(|e| e.to_string())?;
            let dev = rep.deviations().max().max(config.identity_deviations(&rep).max());
            worst = worst.max(dev);
            ensure(dev < 1e-9, || format!("({n},{k}): deviation {dev:e}"))?;
            cases += 1;
        }
    }
    for (n, k) in [(2, 1), (2, 2), (4, 2), (3, 4), (2, 7)] {
        let dev = equivariance_deviations(n, k).map_err(|e| e.to_string())?;
        worst = worst.max(dev.max());
        ensure(dev.max() < 1e-9, || format!("v(S) equivariance ({n},{k}): {:e}", dev.max()))?;
    }
    let mut checks = 0;
    for m in 2..=9usize {
        for n in 1..=m / 2 {
            let r = check_equivariance_combinatorial(n, m - 2 * n).map_err(|e| e.to_string())?;
            ensure(r.passed, || format!("({n},{}): {:?}", m - 2 * n, r.violations))?;
            checks += r.checks;
        }
    }
    Ok(format!("{cases} representations, max deviation {worst:.1e}; {checks} combinatorial checks, 0 violations"))
}

fn criterion_6() -> Outcome {
    let mut parts = Vec::new();
    for (n, k) in [(2, 1), (2, 2)] {
        let r = verify_nerve(n, k).map_err(|e| e.to_string())?;
        ensure(r.passed, || format!("({n},{k}) mismatches {:?}", r.mismatches))?;
        parts.push(format!("({n},{k}) {} families", r.subsets_checked));
    }
    Ok(parts.join("; "))
}

fn criterion_7() -> Outcome {
    let mut cases = 0;
    for k in 0..=8 {
        for n in 1..=10 {
            let closed = total_sw_class(n, k, 64).map_err(|e| e.to_string())?;
            let blocks = total_sw_class_from_blocks(n, k, 64).map_err(|e| e.to_string())?;
            ensure(closed == blocks, || format!("({n},{k}): {closed} vs {blocks}"))?;
            cases += 1;
        }
    }
    let expected = GradedPoly::parse(RingCase::Cyclic4, 64, "1 + x + u + x·u").map_err(|e| e.to_string())?;
    for s in 1..=3 {
        let w = total_sw_class(2 * s, 4, 64).map_err(|e| e.to_string())?;
        let jw = restrict(&w, Restriction::J).map_err(|e| e.to_string())?;
        ensure(jw == expected, || format!("j*(w) for s={s} is {jw}"))?;
    }
    Ok(format!("{cases} (n,k) pairs agree; j*(w) = (1+x)(1+u) for s = 1,2,3"))
}

fn criterion_8() -> Outcome {
    let mut windows = 0;
    for k in 0..=20 {
        for n in [1, 2] {
            let w = wbar(n, k, 64).map_err(|e| e.to_string())?;
            for win in vanishing_windows(n, k).map_err(|e| e.to_string())? {
                for d in win.lo..win.hi {
                    ensure(w.component(d).is_zero(), || format!("({n},{k}) {}: w̄_{d} != 0", win.rule))?;
                }
                windows += 1;
            }
        }
    }
    let alpha = |d: u32| GradedPoly::parse(RingCase::Odd, 64, &format!("α^{d}")).expect("monomial");
    let w3 = wbar(2, 3, 64).map_err(|e| e.to_string())?;
    ensure(w3.component(1).is_zero() && w3.component(2) == alpha(2), || "k=3 spot check".into())?;
    let w5 = wbar(2, 5, 64).map_err(|e| e.to_string())?;
    ensure(
        w5.component(2).is_zero() && w5.component(3).is_zero() && w5.component(4) == alpha(4),
        || "k=5 spot check".into(),
    )?;
    Ok(format!("{windows} windows vanish; k=3: w̄_2 = α^2, k=5: w̄_4 = α^4"))
}

fn criterion_9() -> Outcome {
    let mut certified = Vec::new();
    for n in 1..=10 {
        certified.push((n, 1));
        certified.push((n, 2));
    }
    certified.extend((1..=4).map(|s| (2 * s, 4)));
    for &(n, k) in &certified {
        let r = classify(n, k, 64).map_err(|e| e.to_string())?;
        ensure(r.verdict == Verdict::TestGraphCertified, || format!("({n},{k}): {:?}", r.verdict))?;
    }
    let mut obstructed = Vec::new();
    for n in 1..=6 {
        obstructed.extend([(n, 3), (n, 5), (n, 7)]);
        if n % 2 == 1 {
            obstructed.push((n, 6));
        }
    }
    for &(n, k) in &obstructed {
        let r = classify(n, k, 64).map_err(|e| e.to_string())?;
        ensure(r.verdict == Verdict::NonTestForLargeN, || format!("({n},{k}): {:?}", r.verdict))?;
        ensure(r.caveats.iter().any(|c| c.contains("N unspecified")), || format!("({n},{k}) lacks caveat"))?;
    }
    Ok(format!("{} certified, {} obstructed", certified.len(), obstructed.len()))
}

fn criterion_10() -> Outcome {
    let norms: Vec<f64> = (2..=20).map(|n| min_vertex_norm(n, 2)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    for w in norms.windows(2) {
        ensure(w[1] > w[0], || format!("min norms not increasing: {norms:?}"))?;
    }
    let defects: Vec<f64> = (2..=30).map(|n| max_edge_defect(n, 2)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    let n0 = (0..defects.len())
        .find(|&i| defects[i..].iter().all(|&d| d < 0.75))
        .map(|i| i + 2)
        .ok_or_else(|| format!("defect never settles below 0.75: {defects:?}"))?;
    let first = sweep_csv(&sweep(2..=30, 2, 500, 42).map_err(|e| e.to_string())?);
    let second = sweep_csv(&sweep(2..=30, 2, 500, 42).map_err(|e| e.to_string())?);
    ensure(first == second, || "sweep CSV differs between runs".into())?;
    Ok(format!(
        "norms {:.4} -> {:.4}; defect < 0.75 from n0 = {n0} (defect(30) = {:.4}); CSV {} bytes reproducible",
        norms[0],
        norms[norms.len() - 1],
        defects[defects.len() - 1],
        first.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, Duration, fn() -> Outcome); 10] = [
        ("matroid/complex duality", Duration::from_secs(1), criterion_1),
        ("covector rule vs polynomial oracle", Duration::from_secs(60), criterion_2),
        ("sphere homology of Hom(K2, SG)", Duration::from_secs(300), criterion_3),
        ("chromatic number and criticality", Duration::from_secs(120), criterion_4),
        ("equivariance", Duration::from_secs(600), criterion_5),
        ("nerve", Duration::from_secs(600), criterion_6),
        ("Stiefel-Whitney cross-check", Duration::from_secs(600), criterion_7),
        ("vanishing windows", Duration::from_secs(10), criterion_8),
        ("classification endpoints", Duration::from_secs(600), criterion_9),
        ("geometry sweep", Duration::from_secs(600), criterion_10),
    ];
    let mut failures = 0;
    let mut timings = HashMap::new();
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        timings.insert(i + 1, elapsed);
        let outcome = match outcome {
            Ok(detail) if elapsed > *budget => Err(format!("{detail}; took {elapsed:.2?}, budget {budget:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{elapsed:.2?}]", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {why} [{elapsed:.2?}]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
