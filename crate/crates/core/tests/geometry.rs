use nalgebra::DVector;
use sgtopo::geometry::*;
use sgtopo::graphs::{enumerate_stable_sets, DihedralElement};

#[test]
fn realization_samples_are_covectors() {
    for (m, k) in [(3, 1), (5, 2), (6, 3), (8, 4), (7, 0)] {
        let r = verify_realization(m, k, 20_000, 11).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.non_covector_samples, 0);
        assert_eq!(r.cocircuits_realized, r.cocircuits_expected);
    }
}

#[test]
fn numeric_sign_action_matches_combinatorial() {
    for (n, k) in [(1, 1), (2, 2), (3, 1), (2, 4), (1, 5)] {
        let r = check_sign_action(n, k, 2000, 5).unwrap();
        assert!(r.passed, "{:?}", r.mismatches);
    }
}

#[test]
fn representation_is_orthogonal() {
    for (n, k) in [(2, 1), (3, 2), (2, 4), (4, 3)] {
        let rep = representation(n, k).unwrap();
        let d = rep.dimension();
        for g in DihedralElement::all(rep.m) {
            let mat = rep.matrix(&g);
            let err = (mat.transpose() * &mat - nalgebra::DMatrix::identity(d, d)).amax();
            assert!(err < 1e-12, "({n},{k}) {g:?}");
        }
    }
}

#[test]
fn vertex_map_lands_on_unit_sphere() {
    let (n, k) = (3, 2);
    let config = moment_vectors(n, k).unwrap();
    for s in enumerate_stable_sets(n, 2 * n + k).unwrap() {
        let v = v_of_set(&s, &config).unwrap();
        assert!((v.norm() - 1.0).abs() < 1e-12);
    }
}

#[test]
fn point_to_vertex_picks_a_stable_set() {
    let (n, k) = (2, 2);
    let dim = k + 1;
    for seed in 0..20u32 {
        let x = DVector::from_fn(dim, |i, _| ((seed as usize * 7 + i * 3) % 5) as f64 - 2.1);
        for l in 0..2 {
            let s = point_to_vertex(&x, l, n, k).unwrap();
            assert!(s.is_stable() && s.len() == n);
        }
    }
}

#[test]
fn borsuk_adjacency() {
    let x = DVector::from_vec(vec![1.0, 0.0]);
    let y = DVector::from_vec(vec![-1.0, 0.01]);
    assert!(borsuk_adjacent(&x, &y, 0.1));
    assert!(!borsuk_adjacent(&x, &x, 0.1));
}

#[test]
fn sweep_csv_shape() {
    let rows = sweep(2..=5, 2, 100, 1).unwrap();
    let csv = sweep_csv(&rows);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[0], SWEEP_CSV_HEADER);
}
