use std::io::Write;
use std::process::{Command, Output};

use edge_invariants::region::{enumerate_cstar, in_cstar};
use edge_invariants::{parse_graph6, to_graph6, Graph};

fn edgeinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edgeinv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn c5() -> String {
    to_graph6(&Graph::cycle(5).unwrap())
}

#[test]
fn invariants_of_pentagon() {
    let o = edgeinv(&["invariants", &c5()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        "n=5 dim=2 depth=2 reg=2 pd=3 degh=2 m=2 im=1 d=2 p=2"
    );

    let o = edgeinv(&["invariants", &c5(), "--format", "json", "--betti"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["reg"], 2);
    assert_eq!(
        v["betti"]["entries"],
        serde_json::json!([[0, 0, 1], [1, 2, 5], [2, 3, 5], [3, 5, 1]])
    );

    let o = edgeinv(&["invariants", &c5(), "--format", "csv", "--field", "gf:2"]);
    assert_eq!(stdout(&o).lines().nth(1), Some("5,2,2,2,3,2,2,1,2,2"));
}

#[test]
fn invariants_from_edge_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "# star on nine vertices").unwrap();
    for leaf in 1..9 {
        writeln!(f, "0 {leaf}").unwrap();
    }
    let o = edgeinv(&["invariants", "--edges", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("dim=8 depth=1 reg=1"), "{}", stdout(&o));
}

#[test]
fn invariant_input_errors() {
    let big = to_graph6(&Graph::empty(30).unwrap());
    let o = edgeinv(&["invariants", &big]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("limited to 16"), "{}", stderr(&o));

    assert_eq!(edgeinv(&["invariants", "A`"]).status.code(), Some(2));
    assert_eq!(
        edgeinv(&["invariants", "A_", "--field", "gf:4"])
            .status
            .code(),
        Some(2)
    );

    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "0 1\n1 two").unwrap();
    let o = edgeinv(&["invariants", "--edges", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"));
}

#[test]
fn witness_command() {
    let o = edgeinv(&["witness", "5", "2", "2", "2", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let g = parse_graph6(out.lines().next().unwrap()).unwrap();
    assert!(g.n() == 5 && g.is_connected());
    assert!(out.contains("verified n=5 (dim, depth, reg)=(2, 2, 2)"));

    let o = edgeinv(&["witness", "5", "4", "1", "1"]);
    assert!(parse_graph6(stdout(&o).trim()).unwrap().is_star());

    let o = edgeinv(&["witness", "5", "3", "3", "1"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).contains("outside the region"));
}

#[test]
fn region_command() {
    let o = edgeinv(&["region", "3"]);
    assert_eq!(stdout(&o), "n,d,p,r\n3,1,1,1\n3,2,1,1\n");

    let o = edgeinv(&["region", "12", "--variant", "cstar"]);
    let rows: Vec<String> = stdout(&o).lines().skip(1).map(String::from).collect();
    assert_eq!(rows.len(), enumerate_cstar(12).unwrap().len());
    for row in &rows {
        let v: Vec<usize> = row.split(',').map(|x| x.parse().unwrap()).collect();
        assert!(in_cstar(12, edge_invariants::Tuple2::new(v[1], v[2])));
    }

    let o = edgeinv(&["region", "6", "--with-witness", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v
        .as_array()
        .unwrap()
        .iter()
        .all(|row| row["graph6"].is_string()));

    let o = edgeinv(&[
        "region",
        "7",
        "--variant",
        "cc",
        "--c",
        "2",
        "--with-witness",
    ]);
    assert!(stdout(&o).starts_with("n,c,d,p,graph6\n7,2,"));

    assert_eq!(edgeinv(&["region", "2"]).status.code(), Some(4));
    assert_eq!(
        stdout(&edgeinv(&["region", "9"])),
        stdout(&edgeinv(&["region", "9"]))
    );
}

#[test]
fn verify_command() {
    let o = edgeinv(&["verify", "4", "--jobs", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("(dim, depth, reg): PASS n=4"));

    // the path on five vertices lands outside the predicted region
    let o = edgeinv(&["verify", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("unexpected tuple (3, 2, 2): witness DBg"));

    let o = edgeinv(&["verify", "8"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("corpus"));

    let o = edgeinv(&["verify", "4", "--format", "json", "--field", "gf:2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["scanned"], 38);
}

#[test]
fn verify_with_corpus() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "{}", to_graph6(&Graph::star(6).unwrap())).unwrap();
    let o = edgeinv(&["verify", "6", "--corpus", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("missing tuple (1, 1, 1): no witness found"));

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    writeln!(bad, "A_\n!!").unwrap();
    let o = edgeinv(&["verify", "2", "--corpus", bad.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"));

    let mut mixed = tempfile::NamedTempFile::new().unwrap();
    writeln!(mixed, "A_").unwrap();
    let o = edgeinv(&["verify", "5", "--corpus", mixed.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_command() {
    let o = edgeinv(&["check", &c5()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));

    let o = edgeinv(&["check", &to_graph6(&Graph::path(5).unwrap())]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL star-boundary checked=1"));

    assert_eq!(edgeinv(&["check", "not graph6"]).status.code(), Some(2));

    let args = [
        "check", "--random", "25", "--n", "7", "--seed", "42", "--format", "json",
    ];
    let a = edgeinv(&args);
    assert_eq!(stdout(&a), stdout(&edgeinv(&args)));
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["graphs"], 25);
}
