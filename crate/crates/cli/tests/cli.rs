use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;
use vc3::generate::{complete, petersen};
use vc3_cli::dimacs::{parse_dimacs, write_dimacs};

fn vc3(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vc3"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn validator() -> jsonschema::Validator {
    let schema_path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../schema/result.json");
    let schema: Value =
        serde_json::from_str(&std::fs::read_to_string(schema_path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).expect("schema compiles")
}

fn assert_valid(v: &jsonschema::Validator, doc: &Value) {
    let errors: Vec<String> = v.iter_errors(doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}\n{doc:#}");
}

#[test]
fn solve_k4() {
    let dir = TempDir::new().unwrap();
    let k4 = write(&dir, "k4.col", &write_dimacs(&complete(4), 4, &[]));
    let yes = json(&vc3(&["solve", s(&k4), "--k", "3"]));
    assert_eq!(yes["answer"], "YES");
    assert_eq!(yes["size"], 3);
    assert_eq!(yes["cover"].as_array().unwrap().len(), 3);
    let no = json(&vc3(&["solve", s(&k4), "--k", "2"]));
    assert_eq!(no["answer"], "NO");
    assert!(no["cover"].is_null());
}

#[test]
fn tau_of_petersen() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "p.col", &write_dimacs(&petersen(), 10, &[]));
    let out = json(&vc3(&["tau", s(&p)]));
    assert_eq!(out["tau"], 6);
    assert_eq!(out["ex"], 10);
    assert_eq!(out["circuit_rank"], 6);
    assert_eq!(out["tau_upper_bound"], 6);
}

#[test]
fn analyze_reports_worst_vector() {
    let out = json(&vc3(&["analyze"]));
    let catalog = out["catalog"].as_array().unwrap();
    let worst = catalog
        .iter()
        .find(|e| e["vector"] == serde_json::json!([3, 7]))
        .expect("(3, 7) listed");
    assert!((worst["number"].as_f64().unwrap() - 1.15855).abs() < 1e-4);
    for e in catalog {
        let x = e["number"].as_f64().unwrap();
        assert!(x.is_finite() && x > 1.0);
    }
    let alpha = out["interleave"]["alpha"].as_f64().unwrap();
    assert!((alpha - 0.04799).abs() < 1e-4);
}

#[test]
fn gen_round_trip_and_determinism() {
    for model in ["cubic", "maxdeg3", "tree", "cycle"] {
        let a = vc3(&["gen", "--model", model, "--n", "30", "--seed", "11"]);
        let b = vc3(&["gen", "--model", model, "--n", "30", "--seed", "11"]);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "model {model} not reproducible");
        let text = String::from_utf8(a.stdout).unwrap();
        let parsed = parse_dimacs(&text).unwrap();
        assert_eq!(parsed.num_vertices, 30);
        let body: String = text
            .lines()
            .filter(|l| !l.starts_with('c'))
            .map(|l| format!("{l}\n"))
            .collect();
        assert_eq!(write_dimacs(&parsed.graph, 30, &[]), body);
        if model == "cubic" {
            assert!(parsed.graph.vertices().all(|v| parsed.graph.degree(v) == 3));
        }
    }
    let a = vc3(&["gen", "--model", "cubic", "--n", "30", "--seed", "1"]);
    let b = vc3(&["gen", "--model", "cubic", "--n", "30", "--seed", "2"]);
    assert_ne!(a.stdout, b.stdout);
}

#[test]
fn gen_to_file() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("g.col");
    let out = json(&vc3(&[
        "gen",
        "--model",
        "tree",
        "--n",
        "12",
        "--seed",
        "4",
        "--out",
        s(&path),
    ]));
    assert_eq!(out["command"], "gen");
    assert_eq!(out["m"], 11);
    assert!(parse_dimacs(&std::fs::read_to_string(path).unwrap()).is_ok());
}

#[test]
fn verify_accepts_minimize_output() {
    let dir = TempDir::new().unwrap();
    for seed in 0..5 {
        let g = vc3(&[
            "gen",
            "--model",
            "maxdeg3",
            "--n",
            "24",
            "--seed",
            &seed.to_string(),
        ]);
        let gp = write(&dir, "g.col", std::str::from_utf8(&g.stdout).unwrap());
        let m = vc3(&["minimize", s(&gp)]);
        json(&m);
        let mp = write(&dir, "m.json", std::str::from_utf8(&m.stdout).unwrap());
        let v = json(&vc3(&["verify", s(&gp), s(&mp)]));
        assert_eq!(v["valid"], true);
        let oracle = json(&vc3(&["oracle", s(&gp)]));
        assert_eq!(oracle["size"], v["size"]);
    }
    let k4 = write(&dir, "k4.col", &write_dimacs(&complete(4), 4, &[]));
    let cover = write(&dir, "c.txt", "1\n2\n");
    assert_eq!(json(&vc3(&["verify", s(&k4), s(&cover)]))["valid"], false);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.col", "p edge 2 1\ne 1 3\n");
    let out = vc3(&["tau", s(&bad)]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(
        vc3(&["tau", "/nonexistent/file.col"]).status.code(),
        Some(3)
    );
    assert_eq!(vc3(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(vc3(&["minimize"]).status.code(), Some(2));
    assert_eq!(
        vc3(&["gen", "--model", "cubic", "--n", "7"]).status.code(),
        Some(2)
    );

    let p = write(&dir, "p.col", &write_dimacs(&petersen(), 10, &[]));
    let limited = vc3(&["solve", s(&p), "--k", "5", "--node-budget", "1"]);
    assert_eq!(limited.status.code(), Some(4));
    assert_eq!(
        vc3(&["solve", s(&p), "--k", "5", "--node-budget", "0"])
            .status
            .code(),
        Some(2)
    );
    let big = vc3(&["gen", "--model", "cubic", "--n", "40", "--seed", "1"]);
    let bp = write(&dir, "big.col", std::str::from_utf8(&big.stdout).unwrap());
    assert_eq!(vc3(&["oracle", s(&bp)]).status.code(), Some(4));
}

#[test]
fn duplicate_edges_warn() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "d.col", "p edge 3 3\ne 1 2\ne 2 1\ne 2 3\n");
    let out = json(&vc3(&["minimize", s(&p)]));
    assert_eq!(out["stats"]["duplicate_edges"], 1);
    assert_eq!(out["warnings"].as_array().unwrap().len(), 1);
    assert_eq!(out["size"], 1);
}

#[test]
fn deterministic_reruns() {
    let dir = TempDir::new().unwrap();
    let g = vc3(&["gen", "--model", "cubic", "--n", "40", "--seed", "5"]);
    let gp = write(&dir, "g.col", std::str::from_utf8(&g.stdout).unwrap());
    let a = vc3(&["minimize", s(&gp), "--instrument"]);
    let b = vc3(&["minimize", s(&gp), "--instrument"]);
    let c = vc3(&["minimize", s(&gp), "--instrument", "--threads", "4"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    let doc = json(&a);
    assert_eq!(doc["stats"]["tau_trajectory_ok"], true);
    assert_eq!(doc["stats"]["tau_drop_ok"], true);
}

#[test]
fn outputs_match_schema() {
    let v = validator();
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "p.col", &write_dimacs(&petersen(), 10, &[]));
    let cover = write(&dir, "c.txt", "1\n2\n");
    let runs: Vec<Vec<&str>> = vec![
        vec!["solve", s(&p), "--k", "6"],
        vec![
            "solve",
            s(&p),
            "--k",
            "5",
            "--lp-bound",
            "on",
            "--struction",
        ],
        vec!["minimize", s(&p), "--instrument", "--timing"],
        vec!["kernelize", s(&p), "--k", "6"],
        vec!["kernelize", s(&p), "--k", "2"],
        vec!["tau", s(&p)],
        vec!["analyze"],
        vec!["verify", s(&p), s(&cover)],
        vec!["oracle", s(&p)],
    ];
    for args in runs {
        assert_valid(&v, &json(&vc3(&args)));
    }
    let out = dir.path().join("g.col");
    assert_valid(
        &v,
        &json(&vc3(&[
            "gen",
            "--model",
            "cycle",
            "--n",
            "5",
            "--out",
            s(&out),
        ])),
    );
}
