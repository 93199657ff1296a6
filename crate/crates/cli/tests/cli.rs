use std::io::Write;
use std::process::{Command, Output, Stdio};

fn cordial(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cordial"))
        .args(args)
        .env_remove("CORDIAL_JSON")
        .output()
        .expect("binary runs")
}

fn cordial_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cordial"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn check_exit_codes() {
    let ok = cordial(&[
        "check",
        "--group",
        "2x4",
        "--labels",
        "00-12-10-01-02-03-11-13",
    ]);
    assert_eq!(code(&ok), 0);
    assert!(stdout(&ok).contains(": cordial"));

    let bad = cordial(&["check", "--group", "2x2", "--labels", "00-01-10-11"]);
    assert_eq!(code(&bad), 1);
    assert!(stdout(&bad).contains("[2, 1, 0, 0]"));

    let malformed = cordial(&["check", "--group", "3", "--labels", "0-X"]);
    assert_eq!(code(&malformed), 2);
    assert!(String::from_utf8_lossy(&malformed.stderr).contains("column 3"));
}

#[test]
fn check_reads_files_and_reports_lines() {
    let o = cordial_stdin(&["check", "-"], "group=3;kind=cycle\n0-1-2\n");
    assert_eq!(code(&o), 0);
    let o = cordial_stdin(&["check", "-"], "group=3;kind=cycle\n0-1-7\n");
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2, column 5"));
    assert_eq!(code(&cordial(&["check", "/nonexistent/file"])), 2);
}

#[test]
fn construct_examples() {
    let o = cordial(&["construct", "--group", "3x3", "--length", "9"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("group=3x3;kind=path"));

    let o = cordial(&["construct", "--group", "2x2x2", "--length", "8"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("IMPOSSIBLE"));

    let o = cordial(&[
        "--json",
        "construct",
        "--group",
        "2x4",
        "--length",
        "16",
        "--kind",
        "path",
    ]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(
        v["labels"],
        "10-00-01-11-12-12-03-03-10-00-01-11-02-02-13-13"
    );
    assert_eq!(v["trace"][0]["rule"], "double_path");
}

#[test]
fn construct_output_round_trips_through_check() {
    for (g, m, kind) in [
        ("3x3", "9", "path"),
        ("2x4", "16", "path"),
        ("2x11", "50", "path"),
        ("2x2x2", "30", "path"),
        ("3x5", "15", "cycle"),
        ("4", "8", "cycle"),
    ] {
        let built = cordial(&["construct", "--group", g, "--length", m, "--kind", kind]);
        assert_eq!(code(&built), 0, "{g} {m} {kind}");
        let checked = cordial_stdin(&["check", "-"], &stdout(&built));
        assert_eq!(code(&checked), 0, "{g} {m} {kind}: {}", stdout(&checked));
    }
}

#[test]
fn construct_inconclusive_under_budget() {
    let o = cordial(&[
        "--node-budget",
        "10",
        "construct",
        "--group",
        "2x2x2x2",
        "--length",
        "16",
        "--kind",
        "cycle",
    ]);
    assert_eq!(code(&o), 3);
}

#[test]
fn search_examples() {
    assert_eq!(
        code(&cordial(&["search", "--group", "2x2", "--length", "5"])),
        1
    );
    assert_eq!(
        code(&cordial(&["search", "--group", "2x2x2", "--length", "9"])),
        1
    );

    let a = cordial(&["search", "--group", "5", "--length", "5", "--canonical"]);
    let b = cordial(&["search", "--group", "5", "--length", "5", "--canonical"]);
    assert_eq!(code(&a), 0);
    let witness = |o: &Output| stdout(o).lines().skip(1).collect::<Vec<_>>().join("\n");
    assert_eq!(witness(&a), witness(&b));

    let o = cordial(&[
        "--node-budget",
        "100",
        "search",
        "--group",
        "2x2x2x2",
        "--length",
        "16",
    ]);
    assert_eq!(code(&o), 3);
}

#[test]
fn env_overrides_flags() {
    let o = Command::new(env!("CARGO_BIN_EXE_cordial"))
        .args(["search", "--group", "2x2x2x2", "--length", "16"])
        .env("CORDIAL_NODE_BUDGET", "100")
        .env("CORDIAL_JSON", "true")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
    assert_eq!(json(&o)["verdict"], "budget_exceeded");
}

#[test]
fn count_examples() {
    assert_eq!(
        stdout(&cordial(&[
            "count", "--group", "2", "--kind", "path", "--length", "3"
        ]))
        .trim(),
        "4"
    );
    assert_eq!(
        stdout(&cordial(&[
            "count", "--group", "2x2", "--kind", "path", "--length", "4"
        ]))
        .trim(),
        "0"
    );
    let c: u64 = stdout(&cordial(&[
        "count", "--group", "3", "--kind", "cycle", "--length", "3",
    ]))
    .trim()
    .parse()
    .unwrap();
    assert!(c > 0);
    let o = cordial(&[
        "--oracle-bound",
        "10",
        "count",
        "--group",
        "3",
        "--kind",
        "path",
        "--length",
        "5",
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn sweep_text_and_json_agree() {
    let text = cordial(&["sweep", "--max-order", "8"]);
    assert_eq!(code(&text), 0);
    let text = stdout(&text);
    let exhausted: Vec<&str> = text.lines().filter(|l| l.contains("EXHAUSTED")).collect();
    assert_eq!(exhausted.len(), 2);
    assert!(exhausted.iter().any(|l| l.starts_with("2x2x2 ")));

    let rows = json(&cordial(&["--json", "sweep", "--max-order", "8"]));
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), text.lines().count() - 1);
    for key in [
        "group",
        "order",
        "classification",
        "verdict",
        "max_path_verified",
        "nodes",
        "seconds",
    ] {
        assert!(rows[0].get(key).is_some(), "{key}");
    }
    let small = json(&cordial(&["--json", "sweep", "--max-order", "4"]));
    assert_eq!(small.as_array().unwrap().len(), 4);
}

#[test]
fn verify_exp2_examples() {
    let o = cordial(&["--json", "verify-exp2", "--rank", "2"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["exhaustive"], true);
    assert_eq!(v["permutations_checked"], 24);
    let o = cordial(&[
        "--seed",
        "7",
        "verify-exp2",
        "--rank",
        "4",
        "--trials",
        "1000",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(code(&cordial(&["verify-exp2", "--rank", "1"])), 2);
}

#[test]
fn bad_arguments_exit_2() {
    assert_eq!(
        code(&cordial(&["search", "--group", "2x1", "--length", "3"])),
        2
    );
    assert_eq!(code(&cordial(&["search", "--group", "3"])), 2);
    assert_eq!(code(&cordial(&["check"])), 2);
}
