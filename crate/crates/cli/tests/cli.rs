use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use oneplanar_total::fixtures;

fn onepl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_onepl"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_color_verify_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let drawing = dir.path().join("d.txt");
    let coloring = dir.path().join("c.txt");
    let trace = dir.path().join("trace.txt");

    let o = onepl(&["gen", "--n", "60", "--seed", "5", "--crossings", "0.7"]);
    assert!(o.status.success());
    fs::write(&drawing, stdout(&o)).unwrap();
    let again = onepl(&["gen", "--n", "60", "--seed", "5", "--crossings", "0.7"]);
    assert_eq!(o.stdout, again.stdout);

    assert!(onepl(&["validate", path(&drawing)]).status.success());

    let o = onepl(&[
        "color",
        path(&drawing),
        "-o",
        path(&coloring),
        "--trace",
        path(&trace),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let stderr = String::from_utf8(o.stderr).unwrap();
    let r: u32 = stderr
        .split_whitespace()
        .nth(2)
        .unwrap()
        .trim_end_matches(',')
        .parse()
        .unwrap();
    assert!(r >= 13);
    assert!(!fs::read_to_string(&trace).unwrap().is_empty());

    let k = (r + 2).to_string();
    let o = onepl(&["verify", path(&drawing), path(&coloring), "--k", &k]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert_eq!(stdout(&o), "ok\n");

    // colors above the palette are rejected
    let o = onepl(&["verify", path(&drawing), path(&coloring), "--k", "3"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_on_graph_file_and_broken_coloring() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.txt");
    let c = dir.path().join("c.txt");
    fs::write(&g, "p 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
    fs::write(&c, "V 1 1\nV 2 2\nV 3 3\nE 1 2 3\nE 2 3 1\nE 1 3 2\n").unwrap();
    assert!(onepl(&["verify", path(&g), path(&c), "--k", "3"])
        .status
        .success());
    fs::write(&c, "V 1 1\nV 2 2\nV 3 3\nE 1 2 1\nE 2 3 1\nE 1 3 2\n").unwrap();
    let o = onepl(&["verify", path(&g), path(&c), "--k", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("violation"));
}

#[test]
fn oracle_values() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("c5.txt");
    fs::write(&g, "p 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n").unwrap();
    let o = onepl(&["oracle", path(&g)]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "4\n");
    let o = onepl(&["oracle", path(&g), "--max-k", "3"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn audit_and_qd() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().join("k4x.txt");
    fs::write(&d, fixtures::K4_CROSSING).unwrap();
    let o = onepl(&["audit", path(&d), "--transfers"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(
        text.contains("conservation: ok (initial -12, final -12)"),
        "{text}"
    );
    assert!(text.contains("R1 f"));
    assert_eq!(onepl(&["audit", path(&d), "--r", "12"]).status.code(), Some(1));

    let o = onepl(&["qd", "--d", "11"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("q11 = 59/12\n"));
    let o = onepl(&["qd", "--d", "10", "--side-conditions"]);
    assert!(stdout(&o).starts_with("q10 = 15/4\n"));
    assert_eq!(onepl(&["qd", "--d", "13"]).status.code(), Some(1));
}

#[test]
fn bad_input_fails_cleanly() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().join("bad.txt");
    fs::write(&d, "v 1\nr 1: 2\n").unwrap();
    let o = onepl(&["validate", path(&d)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8(o.stderr).unwrap().starts_with("error:"));
    assert_eq!(onepl(&["validate", "/nonexistent/file"]).status.code(), Some(1));
    assert_eq!(onepl(&["gen", "--n", "2"]).status.code(), Some(1));
}

#[test]
fn diagnostics_listing() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().join("t.txt");
    fs::write(&d, fixtures::TRIANGLE).unwrap();
    let o = onepl(&["validate", path(&d), "--diagnostics"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().count() > 1);
}
