use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn trifree(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_trifree"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn trifree");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(path).unwrap()
}

fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn generators_match_golden_files() {
    let clover = trifree(&["gen", "clover", "--k", "2"], "");
    assert!(clover.status.success());
    assert_eq!(stdout(&clover), golden("clover_k2.col"));
    let gadget = trifree(&["gen", "polar-gadget"], "");
    assert_eq!(stdout(&gadget), golden("polar_gadget.col"));
}

#[test]
fn solve_matches_golden_files() {
    let out = trifree(&["solve"], &golden("clover_k2.col"));
    assert_eq!(stdout(&out), golden("clover_k2_chi3.json"));
    let out = trifree(&["solve"], &golden("polar_gadget.col"));
    assert_eq!(stdout(&out), golden("polar_gadget_chi3.json"));
    let out = trifree(&["params"], &golden("polar_gadget.col"));
    assert_eq!(stdout(&out), golden("polar_gadget_params.json"));
    let params: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(params["omega"], 3);
    assert_eq!(params["chi3"], 2);
}

#[test]
fn clover_has_no_two_coloring() {
    let out = trifree(&["solve", "--q", "2"], &golden("clover_k2.col"));
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out).trim(), r#"{"feasible":false}"#);
    let out = trifree(&["solve", "--q", "3", "--jobs", "2"], &golden("clover_k2.col"));
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["feasible"], true);
    assert_eq!(v["q"], 3);
}

#[test]
fn solve_output_always_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[(&[&str], &[&str])] = &[
        (&["gen", "clover", "--k", "2"], &["solve"]),
        (&["gen", "theorem9"], &["solve", "--q", "3"]),
        (&["gen", "mycielski", "--k", "2"], &["solve", "--fpt"]),
        (&["gen", "complete", "--k", "6"], &["solve", "--class", "chordal"]),
        (&["gen", "complete", "--k", "4"], &["solve", "--class", "planar"]),
        (&["gen", "cycle-clique", "--k", "2"], &["solve", "--seed", "3"]),
    ];
    for (gen, solve) in cases {
        let graph = stdout(&trifree(gen, ""));
        let out = trifree(solve, &graph);
        assert!(out.status.success(), "{gen:?} | {solve:?}");
        let graph_file = write_temp(&dir, "g.col", &graph);
        let coloring_file = write_temp(&dir, "c.json", &stdout(&out));
        let check = trifree(&["verify", &graph_file, "--coloring", &coloring_file], "");
        assert_eq!(check.status.code(), Some(0), "{gen:?} | {solve:?}: {}", stdout(&check));
    }
}

#[test]
fn verify_rejects_bad_colorings() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write_temp(&dir, "k3.col", &stdout(&trifree(&["gen", "complete", "--k", "3"], "")));
    let mono = write_temp(&dir, "mono.json", r#"{"k":1,"colors":[1,1,1]}"#);
    let out = trifree(&["verify", &graph, "--coloring", &mono], "");
    assert_eq!(out.status.code(), Some(1));
    let short = write_temp(&dir, "short.json", r#"{"k":1,"colors":[1]}"#);
    assert_eq!(
        trifree(&["verify", &graph, "--coloring", &short], "").status.code(),
        Some(2)
    );
}

#[test]
fn polar_edges_from_side_file_and_full_instance() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = stdout(&trifree(&["gen", "cycle", "--k", "5"], ""));
    let s_lines = write_temp(&dir, "s.txt", "s 1 2\ns 2 3\ns 3 4\ns 4 5\ns 5 1\n");
    let out = trifree(&["solve", "--q", "2", "--polar", &s_lines], &c5);
    assert_eq!(out.status.code(), Some(1));
    let full = write_temp(&dir, "full.pol", &(c5.clone() + "s 1 2\n"));
    let out = trifree(&["solve", "--q", "2", "--polar", &full], "");
    assert_eq!(out.status.code(), Some(0));
    let bad = write_temp(&dir, "bad.txt", "s 1 3\n");
    assert_eq!(trifree(&["solve", "--polar", &bad], &c5).status.code(), Some(2));
}

#[test]
fn reductions_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let map = dir.path().join("map.json");
    let cnf = "p cnf 3 1\n1 2 3 0\n";
    let out = trifree(&["reduce", "--from", "sat4", "--to", "nae4"], cnf);
    assert_eq!(stdout(&out), "p cnf 5 3\n1 2 4 0\n3 -4 5 0\n-5 -5 5 0\n");

    let out = trifree(
        &[
            "reduce",
            "--from",
            "nae4",
            "--to",
            "polar",
            "--map",
            map.to_str().unwrap(),
        ],
        cnf,
    );
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("p edge 45 "));
    let m: Value = serde_json::from_str(&std::fs::read_to_string(&map).unwrap()).unwrap();
    assert_eq!(m["true_tree"].as_array().unwrap().len(), 3);

    let out = trifree(&["reduce", "--from", "nae", "--to", "k4free"], cnf);
    let graph = stdout(&out);
    assert!(graph.starts_with("p edge 69 "));
    assert_eq!(trifree(&["solve", "--q", "2"], &graph).status.code(), Some(0));

    let k3 = stdout(&trifree(&["gen", "complete", "--k", "3"], ""));
    let out = trifree(&["reduce", "--from", "tf-q", "--to", "q+1", "--q", "2"], &k3);
    assert!(stdout(&out).starts_with("p edge 43 "));
}

#[test]
fn malformed_input_exits_two() {
    assert_eq!(trifree(&["solve"], "p edge 2 1\ne 1 3\n").status.code(), Some(2));
    assert_eq!(trifree(&["solve"], "nonsense").status.code(), Some(2));
    assert_eq!(trifree(&["gen", "clover"], "").status.code(), Some(2));
    assert_eq!(
        trifree(&["reduce", "--from", "nae", "--to", "k4free"], "p cnf 1 1\n1 1 1 0\n")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        trifree(&["params", "--max-n", "3"], "p edge 4 0\n").status.code(),
        Some(2)
    );
    assert_eq!(
        trifree(&["solve", "--class", "tree"], "p edge 1 0\n").status.code(),
        Some(2)
    );
}
