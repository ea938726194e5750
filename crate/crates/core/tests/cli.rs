use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eds-unicyclic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn invariants_from_family_as_json() {
    let o = run(&["invariants", "--family", "U(6,3)", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["eds"], 148);
    assert_eq!(v["code"], "3:((())()),(),()");
    assert_eq!(v["matching_number"], 3);
    let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys.first().map(String::as_str), Some("code"));
}

#[test]
fn invariants_from_edge_list_and_graph6_files() {
    let dir = std::env::temp_dir().join(format!("eds-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let edges = dir.join("c4.txt");
    std::fs::File::create(&edges)
        .unwrap()
        .write_all(b"# square\nn 4\n0 1\n1 2\n2 3\n3 0\n")
        .unwrap();
    let o = run(&["invariants", "--input", edges.to_str().unwrap(), "--csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("order,size,eds,wiener"));
    assert!(lines.next().unwrap().starts_with("4,4,32,8,"));

    let g6 = dir.join("c4.g6");
    std::fs::write(&g6, "Cr\n").unwrap();
    let o = run(&["invariants", "--input", g6.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["eds"], 32);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn enumerate_counts_and_filters() {
    let o = run(&["enumerate", "--n", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 33);

    let o = run(&["enumerate", "--n", "8", "--m", "4", "--girth", "4", "--format", "csv"]);
    let text = stdout(&o);
    let mut rows = text.lines();
    assert_eq!(rows.next(), Some("code,n,k,m,max_degree,eds,wiener"));
    for row in rows {
        let cols: Vec<_> = row.rsplit(',').collect();
        // Reversed: wiener, eds, max_degree, m, k, n, ...
        assert_eq!((cols[3], cols[4], cols[5]), ("4", "4", "8"));
    }

    let o = run(&["enumerate", "--n", "6", "--max-degree", "2", "--format", "graph6"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1);
    let g = eds_unicyclic::graph6::decode(text.trim()).unwrap();
    assert_eq!((g.order(), g.max_degree(), eds_unicyclic::girth(&g)), (6, 2, 6));
}

#[test]
fn tables_report_the_known_erratum() {
    let o = run(&["tables", "--n-max", "6", "--rank", "1", "--csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("1,5,2,54,56,erratum-known")));
    assert!(text
        .lines()
        .skip(1)
        .all(|l| l.contains("match") || l.contains("erratum-known")));
}

#[test]
fn checks_pass_with_exit_zero() {
    let o = run(&["check", "--theorem", "3.4", "--n-max", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["check", "--lemma", "2.4", "--n-max", "7", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert!(!v["errata"].as_array().unwrap().is_empty());
}

#[test]
fn formulas_report_documented_deltas() {
    let o = run(&["formulas", "--which", "2.1", "--n", "6..6", "--csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o)
        .lines()
        .any(|l| l == "EQ21_EVEN,6,4,140,134,6,documented-delta"));
    let o = run(&["formulas", "--which", "2.2", "--n", "7..7", "--csv"]);
    assert!(stdout(&o)
        .lines()
        .any(|l| l == "EQ22_ODD,7,5,913/4,222,25/4,documented-delta"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["check", "--theorem", "9.9"][..],
        &["formulas", "--which", "2.7", "--n", "5..6"],
        &["formulas", "--which", "2.1", "--n", "6-5"],
        &["invariants", "--family", "Q(3)"],
        &["tables", "--rank", "3"],
        &["frobnicate"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}
