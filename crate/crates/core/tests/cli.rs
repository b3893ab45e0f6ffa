use std::path::Path;
use std::process::{Command, Output};

fn dichoose(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dichoose")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn generates_the_smallest_tournament() {
    let o = dichoose(&["gen", "tournament", "--d", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("digraph 4\n"), "{text}");
    assert_eq!(text.lines().count(), 7);
}

#[test]
fn directed_five_cycle_has_dichromatic_number_two() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.digraph", "digraph 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    let o = dichoose(&["solve", "dichromatic", &c5]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("chi_vec = 2\n"));
}

#[test]
fn parse_errors_exit_2_with_line_number() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.graph", "graph 2\n0 2\n");
    let o = dichoose(&["solve", "chromatic", &bad]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("line 2") && err.contains("2"), "{err}");
}

#[test]
fn unknown_flags_and_commands_exit_2() {
    assert_eq!(dichoose(&["gen", "tournament", "--d", "1", "--colour"]).status.code(), Some(2));
    assert_eq!(dichoose(&["solve"]).status.code(), Some(2));
    assert_eq!(dichoose(&["--help"]).status.code(), Some(0));
}

#[test]
fn certificates_verify_and_tampering_is_caught() {
    let dir = tempfile::tempdir().unwrap();
    let k22 = write(dir.path(), "k22.graph", &stdout(&dichoose(&["gen", "knn", "--a", "2", "--b", "2"])));
    let cert = dir.path().join("k22.cert").to_string_lossy().into_owned();
    let o = dichoose(&["solve", "graph-dichoosability", "--certificate", &cert, &k22]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("dic_l = 2\n"));
    assert_eq!(dichoose(&["verify", "certificate", &cert]).status.code(), Some(0));

    // Giving one vertex a second colour makes the lists colourable.
    let text = std::fs::read_to_string(&cert).unwrap();
    let tampered = text.replacen("0: 1\n", "0: 1 2\n", 1);
    assert_ne!(text, tampered);
    let bad = write(dir.path(), "bad.cert", &tampered);
    let o = dichoose(&["verify", "certificate", &bad]);
    assert_ne!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn lists_decision_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let c3 = write(dir.path(), "c3.digraph", "digraph 3\n0 1\n1 2\n2 0\n");
    let one = write(dir.path(), "one.lists", "0: 1\n1: 1\n2: 1\n");
    let two = write(dir.path(), "two.lists", "0: 1\n1: 1\n2: 2\n");
    assert_eq!(dichoose(&["solve", "lists", "--lists", &one, &c3]).status.code(), Some(1));
    assert_eq!(dichoose(&["solve", "lists", "--lists", &two, &c3]).status.code(), Some(0));
}

#[test]
fn seeded_outputs_replay_and_detect_changed_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "c6.graph", &stdout(&dichoose(&["gen", "cycle", "--n", "6"])));
    let out = dir.path().join("mc.txt").to_string_lossy().into_owned();
    let o = dichoose(&["experiment", "acyclic", "--trials", "5000", "--seed", "1", "--output", &out, &g]);
    assert_eq!(o.status.code(), Some(0));
    let report = std::fs::read_to_string(&out).unwrap();
    assert!(report.starts_with("# manifest.tool = dichoose "));
    assert!(report.contains("# manifest.seed = 1\n"));
    assert_eq!(dichoose(&["verify", "replay", &out]).status.code(), Some(0));

    std::fs::write(&g, "graph 6\n0 1\n").unwrap();
    let o = dichoose(&["verify", "replay", &out]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("has changed"));
}

#[test]
fn json_reports_carry_the_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "k3.graph", "graph 3\n0 1\n1 2\n0 2\n");
    let o = dichoose(&["--format", "json", "experiment", "acyclic", "--trials", "100", "--seed", "5", &g]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["manifest"]["seed"], 5);
    assert_eq!(v["result"]["trials"], 100);
}

#[test]
fn caps_flag_is_honoured() {
    let dir = tempfile::tempdir().unwrap();
    let k6 = write(dir.path(), "k6.graph", &stdout(&dichoose(&["gen", "complete", "--n", "6"])));
    let o = dichoose(&["--caps", "orientation_edges=4,acyclic_dp_vertices=3", "experiment", "acyclic-exact", &k6]);
    // The closed form still applies to complete graphs.
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("acyclic_orientations = 720"));
    let c6 = write(dir.path(), "c6.graph", &stdout(&dichoose(&["gen", "cycle", "--n", "6"])));
    let o = dichoose(&["--caps", "orientation_edges=4,acyclic_dp_vertices=3", "experiment", "acyclic-exact", &c6]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("cap"));
    assert_eq!(dichoose(&["--caps", "no_such_cap=3", "gen", "path", "--n", "2"]).status.code(), Some(2));
}

#[test]
fn bounds_commands() {
    let o = dichoose(&["bounds", "prop24", "--from", "1", "--to", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("r = 1: first = true"));
    assert!(stdout(&o).lines().next().unwrap().contains("second = false"));
    let o = dichoose(&["bounds", "chernoff", "--n", "100", "--p", "0.5", "--eps", "0.1"]);
    assert!(stdout(&o).starts_with("chernoff = 7.788"), "{}", stdout(&o));
}
