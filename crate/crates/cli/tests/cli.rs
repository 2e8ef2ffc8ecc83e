use std::io::Write;
use std::process::{Command, Output, Stdio};

use pathenergy::emit_graph6;
use pathenergy::enumerate::connected_graphs;
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pathenergy"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("bad JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn reports<'a>(doc: &'a Value, id: &str) -> Vec<&'a Value> {
    doc["results"]["reports"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["bound_id"] == id)
        .collect()
}

#[test]
fn compute_complete_five() {
    let out = run(&["compute", "--family", "complete", "--params", "5"]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_eq!(doc["schema_version"], "1");
    assert_eq!(doc["command"], "compute");
    assert_eq!(doc["inputs"]["family"], "complete");
    let pe = doc["results"]["path_energy"].as_f64().unwrap();
    assert!((pe - 32.0).abs() < 1e-9, "{pe}");
    assert_eq!(doc["results"]["sign_counts"]["positive"], 1);
}

#[test]
fn compute_single_vertex() {
    let doc = json(&run(&["compute", "--graph6", "@"]));
    assert_eq!(doc["results"]["path_energy"].as_f64(), Some(0.0));
    assert_eq!(doc["results"]["path_spectrum"], serde_json::json!([0.0]));
    assert_eq!(doc["results"]["sign_counts"]["zero"], 1);
}

#[test]
fn compute_prism_four() {
    let doc = json(&run(&["compute", "--family", "prism", "--params", "4"]));
    let pe = doc["results"]["path_energy"].as_f64().unwrap();
    assert!((pe - 42.0).abs() < 1e-9, "{pe}");
}

#[test]
fn compute_reads_first_line_of_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.g6");
    std::fs::write(&path, "Bw\nBg\n").unwrap();
    let doc = json(&run(&["compute", "--file", path.to_str().unwrap()]));
    assert_eq!(doc["results"]["graph"]["m"], 3);
    assert_eq!(doc["results"]["path_energy"].as_f64(), Some(8.0));
}

#[test]
fn compute_csv_matrix() {
    let out = run(&["compute", "--graph6", "Bg", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "0,1,1\n1,0,1\n1,1,0\n");
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(code(&run(&["compute", "--graph6", "A"])), 2);
    assert_eq!(code(&run(&["compute", "--family", "complete", "--params", "0"])), 2);
    assert_eq!(code(&run(&["compute", "--family", "dodecahedron", "--params", "3"])), 2);
    assert_eq!(code(&run(&["compute", "--graph6", "A_", "--family", "cycle", "--params", "4"])), 2);
    assert_eq!(code(&run(&["compute", "--graph6", "A_", "--no-such-flag"])), 2);
    assert_eq!(code(&run(&["compute", "--file", "/nonexistent/graph.g6"])), 2);
    assert_eq!(code(&run(&["compute"])), 2);
}

#[test]
fn help_lists_flags() {
    for sub in ["compute", "verify", "scan", "families", "oracle-check"] {
        let out = run(&[sub, "--help"]);
        assert_eq!(code(&out), 0, "{sub}");
        assert!(String::from_utf8_lossy(&out.stdout).contains("--"), "{sub}");
    }
}

#[test]
fn verify_complete_six_eigenvalue_bound_tight() {
    let out = run(&["verify", "--family", "complete", "--params", "6"]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_eq!(doc["results"]["all_hold"], true);
    let eig = reports(&doc, "abs_eig_max_degree");
    assert_eq!(eig.len(), 1);
    assert_eq!(eig[0]["tight"], true);
    assert_eq!(doc["results"]["single_positive"]["pe_equals_2rho"], true);
}

#[test]
fn verify_k2_energy_relation_equality() {
    let doc = json(&run(&["verify", "--graph6", "A_"]));
    let chain = reports(&doc, "energy_relation");
    assert_eq!(chain.len(), 2);
    assert!(chain.iter().all(|r| r["tight"] == true && r["holds"] == true));
}

#[test]
fn verify_path_seven_lower_bound_tight() {
    let doc = json(&run(&["verify", "--family", "tree-path", "--params", "7"]));
    let lower = reports(&doc, "pe_lower");
    assert_eq!(lower[0]["tight"], true);
    assert!((lower[0]["lhs"].as_f64().unwrap() - 12.0).abs() < 1e-9);
    assert!((doc["results"]["path_energy"].as_f64().unwrap() - 12.0).abs() < 1e-9);
}

#[test]
fn verify_skips_bounds_on_disconnected_graph() {
    let out = run(&["verify", "--graph6", "B?"]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert!(doc["results"]["skipped"].as_array().unwrap().contains(&Value::from("pe_lower")));
    assert!(doc["results"].get("single_positive").is_none());
}

#[test]
fn scan_connected_three_vertex_graphs() {
    let out = run_with_stdin(&["scan", "--input", "-"], "Bg\nBw\n");
    assert_eq!(code(&out), 0);
    let stdout = String::from_utf8(out.stdout).unwrap();
    let records: Vec<Value> = stdout.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records.len(), 2);
    assert_eq!(records[0]["graph6"], "Bg");
    let summary: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(summary["results"]["total"], 2);
    assert!(summary["results"]["conjecture1"]["counterexamples"].as_array().unwrap().is_empty());
}

#[test]
fn scan_all_connected_six_vertex_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("n6.g6");
    let text: String = connected_graphs(6)
        .unwrap()
        .iter()
        .map(|g| emit_graph6(g).unwrap() + "\n")
        .collect();
    std::fs::write(&input, text).unwrap();
    let output = dir.path().join("records.jsonl");
    let summary = dir.path().join("summary.json");
    let out = run(&[
        "scan",
        "--input",
        input.to_str().unwrap(),
        "--output",
        output.to_str().unwrap(),
        "--summary",
        summary.to_str().unwrap(),
        "--jobs",
        "4",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&summary).unwrap()).unwrap();
    assert_eq!(doc["results"]["total"], 112);
    assert!(doc["results"]["bound_violations"].as_array().unwrap().is_empty());
    let lines = std::fs::read_to_string(&output).unwrap();
    assert_eq!(lines.lines().count(), 112);
}

#[test]
fn scan_skips_oversize_graphs() {
    let out = run_with_stdin(&["scan", "--input", "-", "--max-n", "5"], "Bw\nG~~~~{\nDhc\nE?~o\n");
    assert_eq!(code(&out), 0);
    let summary: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(summary["results"]["total"], 2);
    assert_eq!(summary["results"]["oversize_skipped"], 2);
}

#[test]
fn scan_parse_errors_recorded_or_fatal() {
    let lenient = run_with_stdin(&["scan", "--input", "-"], "Bw\nnot-a-graph\n");
    assert_eq!(code(&lenient), 0);
    let summary: Value = serde_json::from_slice(&lenient.stderr).unwrap();
    assert_eq!(summary["results"]["parse_errors"][0]["line"], 2);

    let strict = run_with_stdin(&["scan", "--input", "-", "--strict"], "Bw\nnot-a-graph\n");
    assert_eq!(code(&strict), 2);
}

#[test]
fn scan_flags_counterexamples() {
    // Biconnected on seven vertices with two positive path eigenvalues.
    let stream = "F?B~w\nBw\n";
    let plain = run_with_stdin(&["scan", "--input", "-"], stream);
    assert_eq!(code(&plain), 0);
    let summary: Value = serde_json::from_slice(&plain.stderr).unwrap();
    assert_eq!(summary["results"]["conjecture1"]["counterexamples"], serde_json::json!(["F?B~w"]));

    let flagged = run_with_stdin(&["scan", "--input", "-", "--fail-on-counterexample"], stream);
    assert_eq!(code(&flagged), 3);
}

#[test]
fn scan_csv_has_header_and_rows() {
    let out = run_with_stdin(&["scan", "--input", "-", "--format", "csv"], "Bg\nBw\n");
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("line,graph6,n,m,"));
    assert_eq!(lines.count(), 2);
}

#[test]
fn scan_output_is_deterministic() {
    let stream: String = connected_graphs(5)
        .unwrap()
        .iter()
        .map(|g| emit_graph6(g).unwrap() + "\n")
        .collect();
    let a = run_with_stdin(&["scan", "--input", "-", "--jobs", "1"], &stream);
    let b = run_with_stdin(&["scan", "--input", "-", "--jobs", "1"], &stream);
    let c = run_with_stdin(&["scan", "--input", "-", "--jobs", "3"], &stream);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stderr, b.stderr);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn families_wheel_energy() {
    let doc = json(&run(&["families", "--family", "wheel", "--max-params", "8"]));
    let rows = doc["results"]["families"][0]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    for row in rows {
        let p = row["params"][0].as_f64().unwrap();
        let numeric = row["numeric_pe"].as_f64().unwrap();
        assert!((numeric - 6.0 * (p - 1.0)).abs() < 1e-9, "{row}");
        assert!(row["max_deviation"].as_f64().unwrap() < 1e-6);
    }
}

#[test]
fn families_hypercube_erratum() {
    let out = run(&["families", "--family", "hypercube", "--max-params", "3"]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    let table = &doc["results"]["families"][0];
    assert!(table["erratum"].as_str().unwrap().contains("-d"));
    let q3 = &table["rows"][2];
    assert_eq!(q3["closed_form_spectrum"][1]["value"].as_f64(), Some(-3.0));
    assert_eq!(q3["closed_form_spectrum"][1]["multiplicity"], 7);
}

#[test]
fn families_default_within_limit() {
    let out = run(&["families", "--max-params", "4"]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_eq!(doc["results"]["all_within_limit"], true);
    assert_eq!(doc["results"]["families"].as_array().unwrap().len(), 11);
    assert_eq!(code(&run(&["families", "--family", "cycle"])), 2);
}

#[test]
fn oracle_check_small() {
    let out = run(&["oracle-check", "--max-n", "6", "--samples", "20"]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert!(doc["results"]["disagreements"].as_array().unwrap().is_empty());
    assert_eq!(doc["results"]["exhaustive"]["graphs"], 1 + 2 + 6 + 21 + 112);
}

#[test]
fn oracle_check_seeded_runs_repeat() {
    let args = ["oracle-check", "--max-n", "7", "--samples", "100", "--seed", "42"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["results"]["seed"], 42);
}

#[test]
fn oracle_check_rejects_large_orders() {
    assert_eq!(code(&run(&["oracle-check", "--max-n", "11"])), 2);
}
