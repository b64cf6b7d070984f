use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn sgtopo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sgtopo")).args(args).env("SGTOPO_WORKERS", "2").output().expect("binary runs")
}

fn stdout_json(args: &[&str]) -> Value {
    let out = sgtopo(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn assert_schema(name: &str, value: &Value) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../schemas").join(name);
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    let errors: Vec<String> = validator.iter_errors(value).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{name}: {errors:?}");
}

#[test]
fn graph_reports() {
    let v = stdout_json(&["graph", "2", "2", "--chromatic", "--critical", "--aut"]);
    assert_schema("graph.schema.json", &v);
    assert_eq!((v["chi"].as_u64(), v["critical"].as_bool(), v["aut_order"].as_u64()), (Some(4), Some(true), Some(12)));
    let v = stdout_json(&["graph", "1", "3", "--chromatic"]);
    assert_eq!(v["chi"], 5);
    let v = stdout_json(&["graph", "2", "1", "--chromatic", "--aut"]);
    assert_schema("graph.schema.json", &v);
    assert_eq!((v["chi"].as_u64(), v["aut_order"].as_u64()), (Some(3), Some(10)));
}

#[test]
fn homology_reports() {
    for (n, k, betti) in [("2", "1", vec![1, 1]), ("2", "2", vec![1, 0, 1]), ("1", "1", vec![1, 1])] {
        let v = stdout_json(&["homology", n, k]);
        assert_schema("homology.schema.json", &v);
        assert_eq!(v["hom_betti"], serde_json::json!(betti));
        assert_eq!(v["matches_sphere"], true);
    }
}

#[test]
fn matroid_reports() {
    let v = stdout_json(&["matroid", "3", "1"]);
    assert_schema("matroid.schema.json", &v);
    assert_eq!((v["covectors"].as_u64(), v["cocircuits"].as_u64()), (Some(12), Some(6)));
    assert_eq!(v["realization"]["passed"], true);
    let v = stdout_json(&["matroid", "5", "2", "--samples", "5000"]);
    assert_eq!(v["realization"]["passed"], true);
    let v = stdout_json(&["matroid", "4", "3", "--list"]);
    assert_schema("matroid.schema.json", &v);
    assert_eq!(v["covectors"], 80);
    assert_eq!(v["covector_list"].as_array().unwrap().len(), 80);
}

#[test]
fn classify_sweeps() {
    let verdicts = |k: &str| -> Vec<String> {
        let v = stdout_json(&["classify", "--k", k, "--n-range", "1..8", "--max-degree", "64"]);
        assert_schema("classification.schema.json", &v);
        let rows = v.as_array().unwrap();
        let ns: Vec<u64> = rows.iter().map(|r| r["n"].as_u64().unwrap()).collect();
        assert_eq!(ns, (1..=8).collect::<Vec<_>>());
        rows.iter().map(|r| r["verdict"].as_str().unwrap().to_string()).collect()
    };
    assert!(verdicts("1").iter().all(|v| v == "TEST_GRAPH_CERTIFIED"));
    assert!(verdicts("5").iter().all(|v| v == "NON_TEST_FOR_LARGE_N"));
    let k4 = verdicts("4");
    for (i, v) in k4.iter().enumerate() {
        let n = i + 1;
        assert_eq!(v == "TEST_GRAPH_CERTIFIED", n % 2 == 0, "n={n}: {v}");
    }
}

#[test]
fn geometry_csv_is_deterministic() {
    let run = || sgtopo(&["geometry", "--k", "2", "--sweep", "2..12", "--samples", "200", "--seed", "9"]);
    let (a, b) = (run(), run());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,k,m,vertices,min_norm,max_defect,max_equivariance_deviation,sampled_points,sampled_max_defect");
    assert_eq!(lines.len(), 12);
    assert!(lines[1].starts_with("2,2,6,9,"));
    // worker count must not change the bytes
    let single = Command::new(env!("CARGO_BIN_EXE_sgtopo"))
        .args(["geometry", "--k", "2", "--sweep", "2..12", "--samples", "200", "--seed", "9"])
        .env("SGTOPO_WORKERS", "1")
        .output()
        .unwrap();
    assert_eq!(single.stdout, text.as_bytes());
}

#[test]
fn geometry_single_row() {
    let out = sgtopo(&["geometry", "--n", "2", "--k", "1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(&row[..4], &["2", "1", "5", "5"]);
    assert!((row[4].parse::<f64>().unwrap() - 1.618034).abs() < 1e-6);
}

#[test]
fn violated_tolerance_exits_nonzero() {
    let out = sgtopo(&["geometry", "--n", "3", "--k", "2", "--tol", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("violation"));
}

#[test]
fn bad_input_exits_with_usage_error() {
    assert_eq!(sgtopo(&["classify", "--k", "3", "--n-range", "4..1"]).status.code(), Some(2));
    assert_eq!(sgtopo(&["graph", "0", "2"]).status.code(), Some(2));
    assert_eq!(sgtopo(&["homology", "4", "6"]).status.code(), Some(2));
}

#[test]
fn output_file_and_pretty() {
    let dir = std::env::temp_dir().join(format!("sgtopo-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("classify.txt");
    let out = sgtopo(&["classify", "--k", "3", "--n-range", "1..3", "--pretty", "-o", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("n  k  m"));
    assert_eq!(text.lines().count(), 5);
    std::fs::remove_dir_all(&dir).unwrap();
}
