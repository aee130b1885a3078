use std::process::{Command, Output};

use coboundary::crystals::CrystalMap;
use coboundary::uqsl2::{Frame, QMatrix};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_coboundary"));
    c.env_remove("COBOUNDARY_OUTPUT_DIR");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn unitarized_s2_matrix() {
    let o = run(&[
        "rmatrix",
        "--m",
        "1",
        "--n",
        "1",
        "--frame",
        "s2",
        "--unitarize",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let (m, frame) = QMatrix::from_json(&stdout(&o)).unwrap();
    assert_eq!(frame, Frame::S2);
    let d: Vec<String> = m.diag().iter().map(ToString::to_string).collect();
    assert_eq!(d, ["1", "-1", "1", "1"]);
    assert!(m.is_diagonal());
}

#[test]
fn braiding_s1_round_trips() {
    let o = run(&["rmatrix", "--m", "1", "--n", "1", "--frame", "s1"]);
    let (m, _) = QMatrix::from_json(&stdout(&o)).unwrap();
    assert_eq!(m, coboundary::uqsl2::reference_v1_braiding());
}

#[test]
fn braiding_obstruction_report() {
    let o = run(&["check", "braiding-obstruction"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["witness"]["forced"], "b1⊗b1⊗b-1");
    assert_eq!(v["witness"]["hexagon"], "b1⊗b-1⊗b1");
    assert_eq!(v["passed"], true);
}

#[test]
fn one_node_dot_graph() {
    let o = run(&["crystal", "graph", "--shape", "0", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("digraph"));
    assert_eq!(s.matches("\"b0\";").count(), 1);
    assert!(!s.contains("->"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        run(&["rmatrix", "--m", "1", "--n", "1", "--format", "dot"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["crystal", "decompose", "--shape", "1", "--bogus"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["cactus", "act", "--shape", "1,1", "--p", "1", "--q", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["crystal", "graph", "--shape", "x"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["rmatrix", "--m", "1", "--n", "1", "--frame", "s3"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn checks_pass_with_empty_reports() {
    for args in [
        &["check", "coboundary", "--max", "1"][..],
        &["check", "cactus-action", "--factors", "3", "--max", "1"],
        &["check", "kt07", "--max", "1"],
        &["check", "yang-baxter"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["violations"], serde_json::json!([]));
    }
}

#[test]
fn commutor_and_cactus_json_round_trip() {
    let o = run(&["commutor", "--a", "1", "--b", "2"]);
    let m = CrystalMap::from_json(&stdout(&o)).unwrap();
    assert_eq!(
        m,
        coboundary::crystals::commutor_c(&"1".parse().unwrap(), &"2".parse().unwrap()).unwrap()
    );
    let o = run(&["commutor", "--a", "1", "--b", "2", "--variant", "S"]);
    assert_eq!(CrystalMap::from_json(&stdout(&o)).unwrap(), m);
    let o = run(&["cactus", "act", "--shape", "1,1,1", "--p", "1", "--q", "3"]);
    let m = CrystalMap::from_json(&stdout(&o)).unwrap();
    assert!(m.after(&m).unwrap().is_identity());
}

#[test]
fn decompose_json() {
    let o = run(&["crystal", "decompose", "--shape", "2,2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["highest_weights"], serde_json::json!([4, 2, 0]));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["crystal", "graph", "--shape", "1,2", "--format", "dot"][..],
        &["crystal", "graph", "--shape", "2,1", "--format", "json"],
        &[
            "rmatrix",
            "--m",
            "2",
            "--n",
            "1",
            "--frame",
            "s2",
            "--unitarize",
        ],
        &["check", "kt07", "--max", "1"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn output_destinations() {
    let dir = std::env::temp_dir().join(format!("coboundary-cli-{}", std::process::id()));
    let o = bin()
        .args(["crystal", "graph", "--shape", "1,1"])
        .env("COBOUNDARY_OUTPUT_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let written = std::fs::read_to_string(dir.join("crystal-graph-1,1.dot")).unwrap();
    assert!(written.contains("\"b1⊗b1\" -> \"b-1⊗b1\";"));

    let file = dir.join("explicit.json");
    let o = run(&[
        "rmatrix",
        "--m",
        "1",
        "--n",
        "1",
        "--output",
        file.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(QMatrix::from_json(&std::fs::read_to_string(&file).unwrap()).is_ok());
    std::fs::remove_dir_all(&dir).unwrap();
}
