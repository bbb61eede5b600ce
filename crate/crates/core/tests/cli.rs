use std::fs;
use std::io::Write;
use std::process::{Command, Output, Stdio};

use qhopf::report::Report;
use qhopf::Data;

fn qhopf(args: &[&str], stdin: Option<&str>) -> Output {
    qhopf_env(args, stdin, &[])
}

fn qhopf_env(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_qhopf"));
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    } else {
        drop(child.stdin.take());
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn example(name: &str, n: &str) -> String {
    let o = qhopf(&["emit-example", name, n], None);
    assert_eq!(o.status.code(), Some(0));
    stdout(&o)
}

#[test]
fn classical_pipe_passes() {
    let data = example("classical", "2");
    let o = qhopf(&["check", "-"], Some(&data));
    assert_eq!(o.status.code(), Some(0));
    let rep = Report::from_json(&stdout(&o)).unwrap();
    assert!(rep.all_pass());
    let human = String::from_utf8(o.stderr).unwrap();
    assert!(human.contains("19 of 19 checks passed"), "{human}");
}

#[test]
fn check_with_implications_and_mode() {
    let data = example("glq", "2");
    let o = qhopf(&["check", "-", "--implications"], Some(&data));
    assert_eq!(o.status.code(), Some(0));
    let rep = Report::from_json(&stdout(&o)).unwrap();
    assert_eq!(rep.records.len(), 27);
    // lambda-zero mode is refused for λ ≠ 0
    let o = qhopf(&["check", "-", "--mode", "lambda-zero"], Some(&data));
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn normalize_translation_rule() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.json");
    fs::write(&path, example("glq", "2")).unwrap();
    let p = path.to_str().unwrap();
    let o = qhopf(&["normalize", p, "-e", "p[2]*p[1]"], None);
    assert_eq!(o.status.code(), Some(0));
    let nf = stdout(&o);
    assert_eq!(nf.trim(), "q^-1 * p[1]*p[2]");
    // the printed normal form re-parses to a fixed point
    let again = qhopf(&["normalize", p, "-e", nf.trim()], None);
    assert_eq!(stdout(&again), nf);
}

#[test]
fn normalize_with_antipodes() {
    let data = example("glq", "2");
    let o = qhopf(&["normalize", "-", "-e", "Sp[1] + SL[1,1]*p[1] + SL[1,2]*p[2]"], Some(&data));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn corrupted_r_names_a5() {
    let mut d = Data::from_json(&example("glq", "2")).unwrap();
    d.r.set(1, 2, "2".parse().unwrap());
    let o = qhopf(&["check", "-"], Some(&d.to_json()));
    assert_eq!(o.status.code(), Some(1));
    let rep = Report::from_json(&stdout(&o)).unwrap();
    assert!(!rep.get("A5").unwrap().pass);
    assert!(String::from_utf8(o.stderr).unwrap().contains("FAIL A5"));
}

#[test]
fn input_errors_exit_2() {
    let o = qhopf(&["check", "/nonexistent/data.json"], None);
    assert_eq!(o.status.code(), Some(2));
    let o = qhopf(&["check", "-"], Some("{\"N\": 1}"));
    assert_eq!(o.status.code(), Some(2));
    let data = example("glq", "2");
    let o = qhopf(&["normalize", "-", "-e", "p[3]"], Some(&data));
    assert_eq!(o.status.code(), Some(2));
    let o = qhopf(&["normalize", "-", "-e", "p[1] +"], Some(&data));
    assert_eq!(o.status.code(), Some(2));
    let o = qhopf(&["no-such-verb"], None);
    assert_eq!(o.status.code(), Some(2));
    let o = qhopf(&["emit-example", "glq", "5"], None);
    assert_eq!(o.status.code(), Some(2));
    let mut doc: serde_json::Value = serde_json::from_str(&data).unwrap();
    doc["lambda"] = "-1".into();
    let o = qhopf(&["check", "-"], Some(&doc.to_string()));
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn step_budget_exits_3() {
    let data = example("glq", "2");
    let args = ["normalize", "-", "-e", "p[2]*p[2]*p[1]*p[1]"];
    let o = qhopf_env(&args, Some(&data), &[("QHOPF_STEP_BUDGET", "1")]);
    assert_eq!(o.status.code(), Some(3));
    let o = qhopf_env(&args, Some(&data), &[("QHOPF_STEP_BUDGET", "many")]);
    assert_eq!(o.status.code(), Some(2));
    let o = qhopf(&args, Some(&data));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "q^-4 * p[1]*p[1]*p[2]*p[2]");
}

#[test]
fn eval_functional_outputs_matrix() {
    let data = example("classical", "2");
    let o = qhopf(&["eval-functional", "-", "-e", "L[1,1]*L[2,2] + 3"], Some(&data));
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["dim"], 6);
    assert_eq!(doc["epsilon"], "4");
    assert_eq!(doc["index"][2], "(1,1)");
    // classically Φ(Λ^a_b) = δ^a_b I, so Φ = 4 I
    for i in 0..6 {
        for j in 0..6 {
            let want = if i == j { "4" } else { "0" };
            assert_eq!(doc["matrix"][i][j], want);
        }
    }
}

#[test]
fn diamond_and_hopf_reports() {
    let data = example("glq", "2");
    for verb in ["diamond", "hopf"] {
        let o = qhopf(&[verb, "-", "--degree", "3"], Some(&data));
        assert_eq!(o.status.code(), Some(0), "{verb}");
        assert!(Report::from_json(&stdout(&o)).unwrap().all_pass());
    }
}

#[test]
fn emitted_examples_round_trip() {
    for (name, n) in [("classical", "1"), ("classical", "3"), ("glq", "2"), ("glq", "3")] {
        let text = example(name, n);
        let d = Data::from_json(&text).unwrap();
        assert_eq!(d.to_json().trim(), text.trim());
    }
}

#[test]
fn solve_n1_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sols");
    let o = qhopf(
        &["solve-n1", "--nonzero", "Z,T", "--out-dir", out.to_str().unwrap()],
        None,
    );
    assert_eq!(o.status.code(), Some(0));
    let listed: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert!(!listed.is_empty());
    for path in &listed {
        let d = Data::from_json(&fs::read_to_string(path).unwrap()).unwrap();
        assert!(!d.z.is_zero() && !d.t.is_zero());
        let o = qhopf(&["check", path, "--mode", "strict"], None);
        assert_eq!(o.status.code(), Some(0), "{path}");
    }
    // the array form agrees with the file form
    let o = qhopf(&["solve-n1", "--nonzero", "Z,T"], None);
    let docs: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(docs.len(), listed.len());
    let o = qhopf(&["solve-n1", "--nonzero", "T", "--zero", "T"], None);
    assert_eq!(o.status.code(), Some(2));
}
