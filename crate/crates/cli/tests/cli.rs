use std::path::Path;
use std::process::{Command, Output};

fn kashiwara(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kashiwara"))
        .args(args)
        .output()
        .expect("run kashiwara")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let p = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(p).unwrap()
}

#[test]
fn normal_form_in_the_kashiwara_algebra() {
    let o = kashiwara(&["nf", "E[1]*f[1]", "--parent", "b"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1 + r*s^-1*f[1]*E[1]");
    let o = kashiwara(&["nf", "w[1]^-1*w[1]"]);
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn syntax_errors_exit_with_two() {
    let o = kashiwara(&["nf", "e[1]+"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("column 5"));
    // An upper U letter is not an element of B.
    let o = kashiwara(&["nf", "e[1]", "--parent", "b"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn pairing_and_gram() {
    let o = kashiwara(&["pair", "e[1]", "f[1]"]);
    assert_eq!(stdout(&o).trim(), "-1/(r - s)");
    let o = kashiwara(&["gram", "A2", "1,1", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["gram"].as_array().unwrap().len(), 2);
    assert_eq!(v["plus_basis"][0], "e[1]*e[2]");
    let o = kashiwara(&["dual", "1", "--type", "A1"]);
    assert_eq!(stdout(&o).trim(), "e[1]  ->  (-r + s)*f[1]");
    let o = kashiwara(&["gram", "A2", "1,0,1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn hopf_verbs() {
    let o = kashiwara(&["coprod", "e[1]"]);
    assert_eq!(stdout(&o).trim(), "(e[1] ⊗ 1) + (w[1] ⊗ e[1])");
    let o = kashiwara(&["antipode", "e[1]"]);
    assert_eq!(stdout(&o).trim(), "-w[1]^-1*e[1]");
    let o = kashiwara(&["antipode", "--inverse", "e[1]"]);
    assert!(o.status.success());
    let o = kashiwara(&["phi", "e[1]"]);
    assert_eq!(stdout(&o).trim(), "(-1/(r - s))*E[1]");
    let o = kashiwara(&["coprod", "E[1]", "--variant", "right"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn projector_and_casimir() {
    let plain = kashiwara(&["gamma", "--height", "4"]);
    let closed = kashiwara(&["gamma", "--height", "4", "--closed-form"]);
    assert!(plain.status.success());
    assert_eq!(stdout(&plain), stdout(&closed));
    assert!(stdout(&plain).contains("[1]: -f[1]*E[1]"));
    let o = kashiwara(&["gamma", "--type", "A2", "--closed-form"]);
    assert_eq!(o.status.code(), Some(2));
    let o = kashiwara(&["casimir", "--height", "1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["grades"][1]["element"], "(r - s)*f[1]*v[1]^-1*e[1]");
}

#[test]
fn verma_module_report() {
    let o = kashiwara(&["verma", "--type", "A2", "--lambda", "1,1", "--depth", "3", "--verify", "all", "--json"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["kernel"], serde_json::json!(["u"]));
    assert_eq!(v["passed"], true);
    let dims: Vec<u64> = v["slices"].as_array().unwrap().iter().map(|s| s["dim"].as_u64().unwrap()).collect();
    assert_eq!(dims.iter().sum::<u64>(), 13);
    let o = kashiwara(&["verma", "--lambda", "-2", "--depth", "2"]);
    assert!(stdout(&o).contains("slice [2]  weight [-4]  dim 1"));
}

#[test]
fn verify_exit_codes() {
    let o = kashiwara(&["verify", "thm61", "--type", "A1", "--height", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("thm61: 27 checks, 0 failed\n"));
    let o = kashiwara(&["verify", "thm61", "--mutation", "kashiwara-delta"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness:"));
    let o = kashiwara(&["verify", "nothing"]);
    assert_eq!(o.status.code(), Some(2));
    let o = kashiwara(&["verify", "all", "--type", "E8"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn config_file_is_overridden_by_flags() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.conf");
    std::fs::write(&path, "# projector run\ntype = A1\nheight = 2\n").unwrap();
    let p = path.to_str().unwrap();
    let o = kashiwara(&["verify", "thm61", "--config", p]);
    assert!(stdout(&o).ends_with("thm61: 15 checks, 0 failed\n"), "{}", stdout(&o));
    let o = kashiwara(&["verify", "thm61", "--config", p, "--height", "4"]);
    assert!(stdout(&o).ends_with("thm61: 27 checks, 0 failed\n"));
    std::fs::write(&path, "height = tall\n").unwrap();
    assert_eq!(kashiwara(&["verify", "thm61", "--config", p]).status.code(), Some(2));
}

#[test]
fn default_reports_match_golden_files() {
    for t in ["A1", "A2"] {
        let o = kashiwara(&["verify", "all", "--type", t]);
        assert!(o.status.success());
        assert_eq!(stdout(&o), golden(&format!("verify_all_{t}.txt")), "{t} text");
        let o = kashiwara(&["verify", "all", "--type", t, "--json"]);
        assert_eq!(stdout(&o), golden(&format!("verify_all_{t}.json")), "{t} json");
    }
}
