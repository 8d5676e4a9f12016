use std::io::Write;
use std::process::{Command, Output, Stdio};

fn transgraph(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_transgraph"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    if let Some(input) = stdin {
        child
            .stdin
            .take()
            .unwrap()
            .write_all(input.as_bytes())
            .unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn gen_output_round_trips_through_stdin() {
    for spec in ["cycle:7", "complete:5", "path:4", "star:6", "gnm:10,15,3"] {
        let generated = transgraph(&["gen", spec], None);
        assert!(generated.status.success(), "{spec}");
        let text = stdout(&generated);
        let parsed: transgraph::Graph = text.parse().unwrap();
        assert_eq!(
            parsed,
            transgraph::generate(transgraph::Family::parse(spec, 0).unwrap()).unwrap()
        );

        let indexed_file = transgraph(&["index", "-"], Some(&text));
        let indexed_spec = transgraph(&["index", spec], None);
        assert_eq!(stdout(&indexed_file), stdout(&indexed_spec), "{spec}");
    }
}

#[test]
fn nk_formula_for_cycle() {
    let out = transgraph(&["nk", "cycle:5", "g--", "--formula"], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "759375");
}

#[test]
fn index_of_complete_graph() {
    let out = transgraph(&["index", "complete:4", "--json"], None);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["NK"], "81");
    assert_eq!(json["M1"], 36);
    assert_eq!(json["Pi1star"], 46656.to_string());
}

#[test]
fn nk_oracle_and_formula_match() {
    let out = transgraph(&["nk", "path:3", "g+++", "--oracle", "--formula"], None);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("oracle 144"), "{text}");
    assert!(text.contains("formula 144"), "{text}");
    assert!(text.lines().any(|l| l == "MATCH"), "{text}");
}

#[test]
fn usage_errors_exit_with_one() {
    let cases: [&[&str]; 4] = [
        &["nk", "cycle:5", "g+"],
        &["index", "/nonexistent/graph.txt"],
        &["index", "cycle:2"],
        &["frobnicate"],
    ];
    for args in cases {
        let out = transgraph(args, None);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?} printed no diagnostic");
    }
    let malformed = transgraph(&["index", "-"], Some("3 2\n0 1\n1 1\n"));
    assert_eq!(malformed.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&malformed.stderr).contains("line 3"));
}

#[test]
fn verify_exit_code_depends_on_allowlist() {
    let args = [
        "verify",
        "--max-n",
        "0",
        "--family-max",
        "5",
        "--variant",
        "g+++",
    ];
    let with_known = transgraph(&args, None);
    assert_eq!(with_known.status.code(), Some(0), "{}", stdout(&with_known));

    let empty = std::env::temp_dir().join(format!("transgraph-empty-{}.txt", std::process::id()));
    std::fs::write(&empty, "# nothing allowlisted\n").unwrap();
    let mut strict = args.to_vec();
    strict.extend(["--allowlist", empty.to_str().unwrap()]);
    let without = transgraph(&strict, None);
    std::fs::remove_file(&empty).unwrap();
    assert_eq!(without.status.code(), Some(2));
    assert!(stdout(&without).contains("complete/g+++"));
}

#[test]
fn verify_json_is_deterministic() {
    let args = ["verify", "--max-n", "4", "--family-max", "6", "--json"];
    let first = transgraph(&args, None);
    let second = transgraph(&args, None);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let json: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(json["summary"]["mismatch"], 0);
}
