use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use primegraph::constructor::PrimeAssignment;
use primegraph::{Family, Graph, Verdict};
use serde_json::Value;
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_primegraph")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_graph(dir: &TempDir, name: &str, g: &Graph) -> String {
    let p = dir.path().join(name);
    fs::write(&p, g.to_json()).unwrap();
    p.to_str().unwrap().to_string()
}

fn fixture_file(dir: &TempDir, name: &str) -> String {
    let o = run(&["fixtures", "--name", name]);
    assert_eq!(code(&o), 0);
    let p = dir.path().join(format!("{}.json", name.replace(':', "_")));
    fs::write(&p, stdout(&o)).unwrap();
    p.to_str().unwrap().to_string()
}

fn graph_field(v: &Value, key: &str) -> Graph {
    Graph::from_json(&v[key].to_string()).unwrap()
}

#[test]
fn psl27_prime_graph_is_edgeless() {
    for name in ["PSL(2,7)", "psl27"] {
        let o = run(&["prime-graph", "--group", name]);
        assert_eq!(code(&o), 0);
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        let gamma = graph_field(&v, "prime_graph");
        let gbar = graph_field(&v, "complement");
        assert_eq!((gamma.vertex_count(), gamma.edge_count()), (3, 0));
        assert_eq!(gbar.triangles().len(), 1);
    }
    let dot = stdout(&run(&["prime-graph", "--group", "A5", "--dot"]));
    assert!(dot.contains("graph prime_graph {") && dot.contains("graph complement {"));
}

#[test]
fn figure2_is_rejected_with_coloring_witness() {
    let dir = TempDir::new().unwrap();
    let fig2 = fixture_file(&dir, "figure2");
    let o = run(&["classify", "--family", "psl27", "--graph", &fig2, "--complement"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("no constrained 3-coloring"), "{}", stdout(&o));

    let o = run(&["classify", "--family", "psl27", "--graph", &fig2, "--complement", "--json"]);
    let v: Verdict = serde_json::from_str(&stdout(&o)).unwrap();
    let gamma = Graph::from_json(&fs::read_to_string(&fig2).unwrap()).unwrap().complement();
    assert!(!v.accepted());
    v.check(&gamma).unwrap();
}

#[test]
fn verify_tables_passes_all_claims() {
    let o = run(&["verify-tables"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    for id in ['a', 'b', 'c', 'd', 'e'] {
        assert!(out.contains(&format!("claim ({id}) PASS")), "{out}");
    }
    assert!(!out.contains("FAIL"));
}

#[test]
fn auto_respects_family_equalities() {
    let dir = TempDir::new().unwrap();
    let mut files = vec![];
    for name in ["figure2", "figure4", "figure5", "whisker:4", "groetzsch"] {
        files.push(fixture_file(&dir, name));
    }
    let c5 = Graph::from_parts(["a", "b", "c", "d", "e"], [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")]).unwrap();
    files.push(write_graph(&dir, "c5.json", &c5));
    let tri = Graph::from_parts(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
    files.push(write_graph(&dir, "tri.json", &tri));
    for f in &files {
        let o = run(&["classify", "--family", "auto", "--graph", f, "--complement", "--json"]);
        let verdicts: Vec<Verdict> = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(verdicts.len(), 9);
        let d = |fam: Family| verdicts.iter().find(|v| v.family == fam).unwrap().decision;
        let tf = [Family::Solvable, Family::U33, Family::U42, Family::Psl33, Family::Multi];
        let abstract_labels = !Graph::from_json(&fs::read_to_string(f).unwrap()).unwrap().is_prime_labeled();
        if abstract_labels {
            assert!(tf.iter().all(|&x| d(x) == d(Family::Solvable)), "{f}");
            assert_eq!(d(Family::A6), d(Family::Psl28), "{f}");
            assert_eq!(d(Family::Psl27), d(Family::Psl217), "{f}");
        }
        assert_eq!(code(&o), if verdicts.iter().any(Verdict::accepted) { 0 } else { 1 });
    }
}

#[test]
fn construct_realize_and_reload() {
    let dir = TempDir::new().unwrap();
    let f5 = fixture_file(&dir, "figure5");
    let out = dir.path().join("recipe.json");
    let o = run(&[
        "construct", "--family", "psl27", "--graph", &f5, "--complement", "--realize", "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(String::from_utf8_lossy(&o.stderr).contains("order 840"));

    let doc: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    let assignment: PrimeAssignment = serde_json::from_value(doc["assignment"].clone()).unwrap();
    let gamma = Graph::from_json(&fs::read_to_string(&f5).unwrap()).unwrap().complement();
    let o = run(&["prime-graph", "--group", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(graph_field(&v, "prime_graph"), assignment.apply(&gamma).unwrap());
}

#[test]
fn construct_rejects_groetzsch() {
    let dir = TempDir::new().unwrap();
    let g = fixture_file(&dir, "groetzsch");
    let o = run(&["construct", "--family", "solvable", "--graph", &g, "--complement"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("reject"));
}

#[test]
fn user_group_file_is_accepted() {
    let dir = TempDir::new().unwrap();
    let p = dir.path().join("s3.json");
    fs::write(&p, r#"{"name": "S3", "degree": 3, "order": 6, "generators": [[1, 2, 0], [1, 0, 2]]}"#).unwrap();
    let o = run(&["prime-graph", "--group", p.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(graph_field(&v, "complement").edge_count(), 1);
}

#[test]
fn fixtures_and_oracle() {
    let dir = TempDir::new().unwrap();
    let w = fixture_file(&dir, "whisker:4");
    assert_eq!(Graph::from_json(&fs::read_to_string(&w).unwrap()).unwrap().edge_count(), 16);
    let c5 = Graph::from_parts(["a", "b", "c", "d", "e"], [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")]).unwrap();
    let f = write_graph(&dir, "c5.json", &c5);
    let o = run(&["oracle", "--graph", &f]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "chromatic number: 3\ntriangles: none\n");
}

#[test]
fn usage_and_data_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, r#"{"vertices": ["4"], "edges": []}"#).unwrap();
    let missing = Path::new("/nonexistent/graph.json").to_str().unwrap();
    for args in [
        vec!["classify", "--graph", missing],
        vec!["classify", "--family", "psl27", "--graph", missing],
        vec!["classify", "--family", "nope", "--graph", bad.to_str().unwrap()],
        vec!["classify", "--family", "a6", "--graph", bad.to_str().unwrap()],
        vec!["prime-graph", "--group", "PSL(9,9)"],
        vec!["fixtures", "--name", "figure9"],
        vec!["bogus"],
    ] {
        assert_eq!(code(&run(&args)), 2, "{args:?}");
    }
}
