use std::fs;
use std::process::{Command, Output};

fn coxbraid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxbraid"))
        .args(args)
        .env_remove("COXBRAID_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn field(text: &str, key: &str) -> String {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}: ")))
        .unwrap_or_else(|| panic!("no {key} in\n{text}"))
        .to_string()
}

#[test]
fn analyze_lollipop() {
    let o = coxbraid(&["analyze", "--system", "D:4", "--word", "4341232"]);
    assert_eq!(o.status.code(), Some(0));
    let t = stdout(&o);
    assert_eq!(field(&t, "dim"), "3");
    assert_eq!(field(&t, "link"), "yes");
    assert_eq!(field(&t, "class size"), "5");
    assert_eq!(field(&t, "dim_I"), "3");
    assert_eq!(field(&t, "median"), "yes");
    assert_eq!(field(&t, "shadows"), "{[1,3],[5,7]}");
    assert_eq!(field(&t, "class shadows"), "{[1,3],[3,5],[5,7]}");
}

#[test]
fn analyze_single_generator() {
    let o = coxbraid(&["analyze", "--system", "A:1", "--word", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dimension"], 0);
    assert_eq!(v["graph"]["vertices"], 1);
    assert_eq!(v["graph"]["dimI"], 0);
}

#[test]
fn analyze_three_factors() {
    let o = coxbraid(&["analyze", "--system", "D:8", "--word", "3231343565787"]);
    assert_eq!(o.status.code(), Some(0));
    let t = stdout(&o);
    assert_eq!(field(&t, "factorization"), "3231343 | 565 | 787");
    assert_eq!(field(&t, "class size"), "20");
}

#[test]
fn analyze_non_reduced() {
    let o = coxbraid(&["analyze", "--system", "A:3", "--word", "1212"]);
    let t = stdout(&o);
    assert_eq!(field(&t, "reduced"), "no");
    assert_eq!(field(&t, "reduced form").len(), 2);
}

#[test]
fn parse_errors_are_usage_errors() {
    let o = coxbraid(&["analyze", "--system", "D:4", "--word", "4x1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("bad letter"));
    assert_eq!(coxbraid(&["analyze", "--system", "Q:4", "--word", "1"]).status.code(), Some(1));
    assert_eq!(coxbraid(&["analyze", "--word", "1"]).status.code(), Some(1));
    assert_eq!(coxbraid(&["nonsense"]).status.code(), Some(1));
    assert_eq!(coxbraid(&["--help"]).status.code(), Some(0));
}

#[test]
fn system_files() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("d4.txt");
    fs::write(&p, "n=4; 3: (1,3)(2,3)(3,4)\n").unwrap();
    let o = coxbraid(&["analyze", "--system-file", p.to_str().unwrap(), "--word", "4341232"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(field(&stdout(&o), "class size"), "5");
    let both = coxbraid(&["analyze", "--system", "D:4", "--system-file", p.to_str().unwrap(), "--word", "1"]);
    assert_eq!(both.status.code(), Some(1));
}

#[test]
fn braid_graph_dot_golden() {
    let o = coxbraid(&["graph", "--system", "D:4", "--word", "4341232", "--kind", "braid", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let golden = fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/lollipop.dot")).unwrap();
    assert_eq!(stdout(&o), golden);
    // deterministic
    let again = coxbraid(&["graph", "--system", "D:4", "--word", "3413123"]);
    assert_eq!(stdout(&again), golden);
}

#[test]
fn matsumoto_json() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("m.json");
    let o = coxbraid(&[
        "graph", "--system", "D:4", "--word", "1321434", "--kind", "matsumoto", "--format", "json", "-o",
        p.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let doc = coxbraid_graph::GraphDocument::from_json(&fs::read_to_string(&p).unwrap()).unwrap();
    assert_eq!(doc.vertices.len(), 15);
    assert!(doc.to_graph().unwrap().is_connected());
}

#[test]
fn empty_word_graph() {
    let o = coxbraid(&["graph", "--system", "A:2", "--word", "e", "--format", "json"]);
    let doc = coxbraid_graph::GraphDocument::from_json(&stdout(&o)).unwrap();
    assert_eq!(doc.vertices, vec!["e".to_string()]);
    assert!(doc.edges.is_empty());
}

#[test]
fn unwritable_output() {
    let o = coxbraid(&["graph", "--system", "A:2", "--word", "121", "-o", "/nonexistent/dir/g.dot"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("cannot write"));
}

#[test]
fn median_examples() {
    let o = coxbraid(&[
        "median", "--system", "D:5", "--word", "34131234354", "--word", "43412324354", "--word", "43413243545",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let t = stdout(&o);
    assert_eq!(field(&t, "median"), "43413234354");
    assert_eq!(field(&t, "signature"), "(3,1,2,4,5)");

    let o = coxbraid(&["median", "--system", "D:4", "--word", "4341232", "--word", "4341232", "--word", "4341232"]);
    assert_eq!(field(&stdout(&o), "median"), "4341232");

    let o = coxbraid(&["median", "--system", "D:4", "--word", "4341232", "--word", "4341232", "--word", "343132343"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("not braid equivalent"));
}

#[test]
fn verify_reports_json() {
    let o = coxbraid(&["verify", "--system", "D:4", "--word", "343132343", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let reports = v.as_array().unwrap();
    assert!(reports.len() >= 9);
    for r in reports {
        assert_eq!(r["status"], "pass");
        assert_eq!(r["stats"]["dimI"], 4);
        for key in ["check", "system", "word", "witnesses"] {
            assert!(r.get(key).is_some());
        }
    }
}

fn sweep_file(dir: &tempfile::TempDir, body: &str) -> String {
    let p = dir.path().join("sweep.json");
    fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn sweep_d4_diam_eq_dim() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = sweep_file(&dir, r#"{"system":"D:4","mode":"exhaustive","L":9,"checks":["diam-eq-dim"]}"#);
    let report = dir.path().join("r.json");
    let csv = dir.path().join("r.csv");
    let o = coxbraid(&[
        "sweep", "--config", &cfg, "-o", report.to_str().unwrap(), "--csv", csv.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let first = fs::read_to_string(&report).unwrap();
    let v: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["counts"]["diam-eq-dim"]["counterexamples"], 0);
    assert!(v["counterexamples"].as_array().unwrap().is_empty());
    let rows = fs::read_to_string(&csv).unwrap();
    assert!(rows.starts_with("system,word,vertices,edges,dim,diam,link,check,verdict,detail"));

    // byte-identical on rerun
    coxbraid(&["sweep", "--config", &cfg, "-o", report.to_str().unwrap()]);
    assert_eq!(fs::read_to_string(&report).unwrap(), first);
}

#[test]
fn sweep_budget_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = sweep_file(
        &dir,
        r#"{"system":"D:4","mode":"exhaustive","L":9,"caps":{"nodeBudget":3}}"#,
    );
    let o = coxbraid(&["sweep", "--config", &cfg]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).contains("budget"));
}

#[test]
fn budget_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_coxbraid"))
        .args(["analyze", "--system", "D:4", "--word", "343132343"])
        .env("COXBRAID_BUDGET", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(4));
    let o = Command::new(env!("CARGO_BIN_EXE_coxbraid"))
        .args(["analyze", "--system", "D:4", "--word", "343132343", "--budget", "1000"])
        .env("COXBRAID_BUDGET", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn sweep_refuses_triangle_without_exploration() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = sweep_file(&dir, r#"{"system":"affA:2","mode":"exhaustive","L":5}"#);
    let o = coxbraid(&["sweep", "--config", &cfg]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("hypothesis"));
    let o = coxbraid(&["sweep", "--config", &cfg, "--explore", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["explore"], true);
}

#[test]
fn bad_sweep_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = sweep_file(&dir, r#"{"system":"D:4","mode":"exhaustive","L":3,"checks":["no-such-check"]}"#);
    assert_eq!(coxbraid(&["sweep", "--config", &cfg]).status.code(), Some(1));
    assert_eq!(coxbraid(&["sweep", "--config", "/no/such/file.json"]).status.code(), Some(1));
}

#[test]
fn exports() {
    let o = coxbraid(&["export", "--system", "D:4", "--what", "commutation", "--max-len", "7", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let t = stdout(&o);
    assert!(t.starts_with("link,linkDim,linkClassSize,member,position,result"));
    assert!(t.lines().count() > 1);

    let o = coxbraid(&["export", "--system", "D:4", "--what", "embedding", "--max-len", "7"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let lolli = v
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["word"] == "3413123")
        .unwrap();
    assert_eq!(lolli["coordinates"].as_array().unwrap().len(), 5);
    assert_eq!(lolli["dim"], 3);
}
