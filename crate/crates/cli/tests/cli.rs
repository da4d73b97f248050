use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn matchex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matchex"))
        .args(args)
        .env_remove("MATCHEX_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).unwrap_or_else(|e| panic!("bad JSON ({e}): {}", stdout(o)))
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn verify_kn_passes() {
    let o = matchex(&["verify", "kn", "--n", "4"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v.as_array().unwrap().len(), 1);
    assert_eq!(v[0]["pass"], true);
    assert_eq!(v[0]["theorem"], "matching-complex-kn");
    assert_eq!(v[0]["millis"], 0);
    assert_eq!(v[0]["observed"]["homology"]["betti"], serde_json::json!([[2, 3]]));
}

#[test]
fn verify_targets_each_pass() {
    for args in [
        &["verify", "knn", "--n", "3"][..],
        &["verify", "sharpness", "--n", "5"],
        &["verify", "sharpness", "--n", "30"],
        &["verify", "filtration", "--n", "4"],
        &["verify", "facets", "--n", "4"],
        &["verify", "facets", "--n", "3", "--bipartite"],
        &["verify", "join", "--m", "4", "--n", "2", "--r", "3"],
        &["verify", "cm", "--kn", "5", "--r", "1", "--k", "0"],
    ] {
        let o = matchex(args);
        assert_eq!(code(&o), 0, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(json(&o).as_array().unwrap().iter().all(|r| r["pass"] == true));
    }
}

#[test]
fn verify_domination_table() {
    let o = matchex(&["verify", "domination"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)[0]["observed"]["betti"], serde_json::json!([[4, 115], [5, 24]]));
}

#[test]
fn failing_verification_exits_one() {
    // M_1 of a path on four vertices is an edge plus an isolated vertex: disconnected
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("path.txt");
    fs::write(&g, "4 3\n1 2\n2 3\n3 4\n").unwrap();
    let o = matchex(&["verify", "cm", "--graph", g.to_str().unwrap(), "--r", "1", "--k", "1"]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)[0]["pass"], false);
}

#[test]
fn usage_and_io_errors_exit_two() {
    assert_eq!(code(&matchex(&["verify", "kn"])), 2);
    assert_eq!(code(&matchex(&["frobnicate"])), 2);
    assert_eq!(code(&matchex(&["verify", "kn", "--n", "9"])), 2);
    assert_eq!(code(&matchex(&["build", "--kn", "4"])), 2);
    assert_eq!(code(&matchex(&["build", "--kn", "4", "--r", "1", "--gamma", "2"])), 2);
    assert_eq!(code(&matchex(&["build", "--kn", "4", "--n", "4", "--r", "1"])), 2);
    let o = matchex(&["build", "--graph", "/nonexistent/graph.txt", "--r", "1"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("cannot read"));
    assert_eq!(code(&matchex(&["homology", "--load", "/nonexistent/k.complex"])), 2);
    assert_eq!(code(&matchex(&["morse", "run", "--knn", "2", "3", "--r", "1", "--schedule", "knn"])), 2);
    assert_eq!(code(&matchex(&["morse", "run", "--knn", "2", "2", "--r", "1", "--schedule", "kn"])), 2);
    assert_eq!(code(&matchex(&["--help"])), 0);
}

#[test]
fn malformed_edge_list_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("bad.txt");
    fs::write(&g, "3 2\n1 2\n2 9\n").unwrap();
    let o = matchex(&["build", "--graph", g.to_str().unwrap(), "--r", "1"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn bound_command() {
    let o = matchex(&["bound", "--n", "5", "--d", "3"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["nu"], "5");
    assert_eq!(v["shifted_conn_bound"], "5");
    assert_eq!(v["epsilon"], "1/7");
    assert_eq!(code(&matchex(&["bound", "--n", "2", "--d", "2"])), 2);
}

#[test]
fn homology_outputs() {
    let o = matchex(&["homology", "--domination", "6", "3", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "dim,betti,torsion\n4,115,\n5,24,\n");
    let o = matchex(&["homology", "--kn", "4", "--r", "2"]);
    let v = json(&o);
    assert_eq!(v.as_array().unwrap().len(), 4);
    assert_eq!(v[2], serde_json::json!({"dim": 2, "betti": 3, "torsion": []}));
    let o = matchex(&["homology", "--knn", "2", "2", "--r", "1", "--format", "text"]);
    assert_eq!(stdout(&o), "dim  betti  torsion\n0    1\n");
    let o = matchex(&["homology", "--n", "5", "--gamma", "4", "--format", "csv"]);
    assert_eq!(stdout(&o), "dim,betti,torsion\n0,9,\n");
}

#[test]
fn build_save_load_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("m2k4.complex");
    let f = file.to_str().unwrap();
    let built = matchex(&["build", "--kn", "4", "--r", "2", "--save", f]);
    assert_eq!(code(&built), 0);
    assert_eq!(json(&built)["f_vector"], serde_json::json!([6, 15, 16, 3]));
    let loaded = matchex(&["build", "--load", f]);
    assert_eq!(stdout(&loaded), stdout(&built));
    let h = matchex(&["homology", "--load", f, "--format", "csv"]);
    assert_eq!(stdout(&h), "dim,betti,torsion\n2,3,\n");
    assert_eq!(code(&matchex(&["build", "--load", f, "--kn", "4"])), 2);
    fs::write(&file, "matchex-complex 1\nground 2\nsizes 1 1\n0\n4\n").unwrap();
    assert_eq!(code(&matchex(&["build", "--load", f])), 2);
}

#[test]
fn lambda_bounds() {
    let o = matchex(&["build", "--n", "3", "--lambda", "2,1,1"]);
    assert_eq!(code(&o), 0);
    // faces: ∅, three edges, and {12,13}
    assert_eq!(json(&o)["f_vector"], serde_json::json!([3, 1]));
}

#[test]
fn morse_run_and_export() {
    let dir = tempfile::tempdir().unwrap();
    let export = dir.path().join("m.txt");
    let o = matchex(&["morse", "run", "--kn", "5", "--r", "3", "--schedule", "kn", "--export", export.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["acyclic"], true);
    assert_eq!(v["summary"]["single_dim"], 5);
    assert_eq!(v["summary"]["wedge_count"], 4);
    let text = fs::read_to_string(&export).unwrap();
    let critical: Vec<&str> = text.split("# critical\n").nth(1).unwrap().lines().collect();
    assert_eq!(critical.len(), 4);
    assert_eq!(v["critical"].as_array().unwrap().len(), 4);

    let o = matchex(&["morse", "run", "--knn", "3", "3", "--r", "2", "--schedule", "knn", "--format", "csv"]);
    assert_eq!(stdout(&o), "dim,critical,cw_cells\n0,0,1\n3,1,1\n");
}

#[test]
fn morse_schedule_file() {
    let dir = tempfile::tempdir().unwrap();
    let s = dir.path().join("s.txt");
    fs::write(&s, "1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n").unwrap();
    let from_file = matchex(&["morse", "run", "--kn", "4", "--r", "2", "--schedule", s.to_str().unwrap()]);
    let builtin = matchex(&["morse", "run", "--kn", "4", "--r", "2"]);
    assert_eq!(code(&from_file), 0);
    assert_eq!(stdout(&from_file), stdout(&builtin));
    // a different order is still acyclic but need not give a single dimension
    fs::write(&s, "3 4\n2 4\n").unwrap();
    let o = matchex(&["morse", "run", "--kn", "4", "--r", "2", "--schedule", s.to_str().unwrap()]);
    assert_eq!(json(&o)["acyclic"], true);
    fs::write(&s, "1 2\n1 2\n").unwrap();
    let o = matchex(&["morse", "run", "--kn", "4", "--r", "2", "--schedule", s.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
}

#[test]
fn domination_command() {
    let o = matchex(&["domination", "--n", "4", "--gamma", "2"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["stats"]["f_vector"], serde_json::json!([6, 15, 16, 3]));
    assert_eq!(v["homology"][2]["betti"], 3);
}

#[test]
fn cache_reuses_files() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let c = cache.to_str().unwrap();
    let first = matchex(&["build", "--kn", "5", "--r", "3", "--cache", c]);
    let files: Vec<_> = fs::read_dir(&cache).unwrap().collect();
    assert_eq!(files.len(), 1);
    let second = matchex(&["build", "--kn", "5", "--r", "3", "--cache", c]);
    assert_eq!(stdout(&first), stdout(&second));
    matchex(&["build", "--kn", "5", "--r", "2", "--cache", c]);
    assert_eq!(fs::read_dir(&cache).unwrap().count(), 2);

    let env_dir = dir.path().join("env");
    let o = Command::new(env!("CARGO_BIN_EXE_matchex"))
        .args(["build", "--kn", "4", "--r", "1", "--cache", c])
        .env("MATCHEX_CACHE", &env_dir)
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    assert_eq!(fs::read_dir(&env_dir).unwrap().count(), 1);
    assert_eq!(fs::read_dir(&cache).unwrap().count(), 2);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = matchex(&["verify", "knn", "--n", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v[0]["pass"], true);
    assert_eq!(code(&matchex(&["bound", "--n", "5", "--d", "3", "--out", "/nonexistent/dir/x"])), 2);
}

#[test]
fn verify_all_round_trips_and_is_deterministic() {
    let a = matchex(&["verify", "all"]);
    assert_eq!(code(&a), 0, "{}", String::from_utf8_lossy(&a.stderr));
    let reports: Vec<matchex::VerificationReport> = serde_json::from_str(&stdout(&a)).unwrap();
    assert!(reports.len() > 40);
    assert!(reports.iter().all(|r| r.pass && r.millis == 0));
    let again = serde_json::to_value(&reports).unwrap();
    assert_eq!(serde_json::to_string_pretty(&again).unwrap() + "\n", stdout(&a));
    assert!(String::from_utf8_lossy(&a.stderr).starts_with("theorem"));
    let b = matchex(&["verify", "all"]);
    assert_eq!(a.stdout, b.stdout);

    let timed = matchex(&["verify", "sharpness", "--n", "4", "--timing"]);
    assert_eq!(code(&timed), 0);
    let t = matchex(&["verify", "all", "--format", "csv"]);
    let lines: Vec<&str> = std::str::from_utf8(&t.stdout).unwrap().lines().collect();
    assert_eq!(lines[0], "theorem,params,pass,millis");
    assert_eq!(lines.len(), reports.len() + 1);
}

#[test]
fn edge_list_graph_source() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("k4.txt");
    fs::write(&g, "4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n").unwrap();
    let from_file = matchex(&["homology", "--graph", g.to_str().unwrap(), "--r", "2"]);
    let builtin = matchex(&["homology", "--kn", "4", "--r", "2"]);
    assert_eq!(stdout(&from_file), stdout(&builtin));
}
