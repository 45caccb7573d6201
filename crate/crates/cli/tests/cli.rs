use std::process::{Command, Output};

fn qsg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsg"))
        .args(args)
        .env_remove("QSG_STEP_BUDGET")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn reduce_prints_normal_forms() {
    for (expr, nf) in [("beta^2", "0"), ("d*d_inv", "1"), ("gamma*beta", "-beta*gamma - h*a*beta + h*beta*d")] {
        let o = qsg(&["reduce", expr, "--presentation", "glh"]);
        assert!(o.status.success());
        assert_eq!(stdout(&o).trim(), nf);
    }
}

#[test]
fn reduce_reports_parse_errors_with_position() {
    let o = qsg(&["reduce", "gamma@a", "--presentation", "glh"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("position 6"), "{}", stderr(&o));
    let o = qsg(&["reduce", "gama*a", "--presentation", "glh"]);
    assert!(stderr(&o).contains("did you mean `gamma`"), "{}", stderr(&o));
}

#[test]
fn reduce_rejects_unknown_presentation() {
    let o = qsg(&["reduce", "a", "--presentation", "nope"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn step_budget_comes_from_the_environment() {
    let run = |v: &str| {
        Command::new(env!("CARGO_BIN_EXE_qsg"))
            .args(["reduce", "d*gamma*beta*a", "--presentation", "glh"])
            .env("QSG_STEP_BUDGET", v)
            .output()
            .unwrap()
    };
    let o = run("1");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("step budget"));
    assert!(run("1000000").status.success());
    assert_eq!(run("many").status.code(), Some(2));
}

#[test]
fn verify_passing_suite_as_json() {
    let o = qsg(&["verify", "--suite", "superplane", "--format", "json", "--jobs", "2"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["suite"], "superplane");
    assert_eq!(v["summary"]["fail"], 0);
    let names: Vec<&str> = v["records"].as_array().unwrap().iter().map(|r| r["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    for r in v["records"].as_array().unwrap() {
        for key in ["name", "family", "subject", "status", "witness", "runtime_ms"] {
            assert!(r.get(key).is_some(), "{key}");
        }
    }
}

#[test]
fn verify_failing_suite_exits_one() {
    let o = qsg(&["verify", "--suite", "maurer"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("fail"));
}

#[test]
fn verify_text_is_deterministic() {
    let a = stdout(&qsg(&["verify", "--suite", "rmatrix", "--jobs", "1"]));
    let b = stdout(&qsg(&["verify", "--suite", "rmatrix", "--jobs", "3"]));
    assert_eq!(a, b);
    assert!(a.contains("expected-nonzero"));
}

#[test]
fn verify_unknown_suite_fails() {
    let o = qsg(&["verify", "--suite", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown suite"));
}

#[test]
fn presentations_list_export_load() {
    let list = stdout(&qsg(&["presentations", "list"]));
    for name in ["glq", "glh", "gamma", "oneforms", "weyl", "derivatives"] {
        assert!(list.lines().any(|l| l.starts_with(name)), "{name}");
    }
    let dir = std::env::temp_dir().join(format!("qsg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("glh.toml");
    let o = qsg(&["presentations", "export", "glh"]);
    assert!(o.status.success());
    std::fs::write(&path, &o.stdout).unwrap();
    let path = path.to_str().unwrap();
    let o = qsg(&["presentations", "load", path]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("glh:"));
    let o = qsg(&["reduce", "gamma*beta", "--presentation", path]);
    assert_eq!(stdout(&o).trim(), "-beta*gamma - h*a*beta + h*beta*d");

    let bad = dir.join("bad.toml");
    let src = std::fs::read_to_string(path).unwrap().replacen("parity = \"odd\"", "parity = \"odd\"\ninvertible = true", 1);
    std::fs::write(&bad, src).unwrap();
    let o = qsg(&["presentations", "load", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}
