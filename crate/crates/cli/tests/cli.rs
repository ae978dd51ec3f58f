use std::process::{Command, Output};

use serde_json::Value;

fn gwa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gwa"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn nf_normalizes() {
    let o = gwa(&["--p", "z^2-1", "nf", "z+*x+"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "q*x+*z+");
    let o = gwa(&["--p", "z^2-1", "--algebra", "B", "nf", "y*x"]);
    assert_eq!(stdout(&o).trim(), "-z + z^3");
}

#[test]
fn parse_errors_exit_2_with_column() {
    let o = gwa(&["--p", "z^2-1", "nf", "x+*(z-"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("column 7"), "{}", stderr(&o));
    let o = gwa(&["--p", "z^2-1", "nf", "x+*y"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown generator 'y'"));
    let o = gwa(&["--p", "z^^2", "nf", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(gwa(&["nf", "1"]).status.code(), Some(2));
    assert_eq!(gwa(&["--p", "z", "frobnicate"]).status.code(), Some(2));
    assert_eq!(
        gwa(&["--p", "z", "density-witness", "w0"]).status.code(),
        Some(2)
    );
    assert_eq!(gwa(&["--p", "1", "integral", "1"]).status.code(), Some(2));
}

#[test]
fn integral_table_for_z2_minus_1() {
    let o = gwa(&["--p", "z^2-1", "integral-table", "--kmax", "20"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<String> = stdout(&o).lines().skip(1).map(String::from).collect();
    assert_eq!(rows.len(), 21);
    assert_eq!(rows[0], "0\t[1, 0]");
    assert_eq!(rows[1], "1\t[0, 1]");
    assert_eq!(rows[2], "2\t[1/(q^4+q^2+1), 0]");
    // [2]/[4] = 1/(1+q^4)
    assert_eq!(rows[3], "3\t[0, 1/(q^4+1)]");
    assert!(rows[20].starts_with("20\t[1/(q^40+"));
    assert!(rows[20].ends_with(", 0]"));
}

#[test]
fn beta_table_for_double_root() {
    let o = gwa(&["--p", "(z-1)^2", "beta-table", "--kmax", "3"]);
    assert_eq!(
        stdout(&o),
        "mu = [-1, 2]\n0\t[-1, 2]\n1\t[-2, 3]\n2\t[-3, 4]\n3\t[-4, 5]\n"
    );
}

#[test]
fn verify_all_corpus() {
    let o = gwa(&["--p", "1-z", "--bound", "3", "verify-all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));

    let o = gwa(&["--p", "z", "--bound", "3", "verify-all"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("SKIP integral.recurrence (0 ms): p not q²-separable"));

    let o = gwa(&["--p", "1", "--bound", "3", "verify-all"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("SKIP integral.lambda_div (0 ms): constant p has trivial integral space"));
    assert!(out
        .lines()
        .filter(|l| l.starts_with("SKIP"))
        .all(|l| l.contains(" integral.")));
}

#[test]
fn verify_ko_negative_control_fails() {
    let o = gwa(&["--p", "z^2-1", "verify-ko", "--bound", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let o = gwa(&["--p", "z^2-1", "verify-ko", "--bound", "2", "--nu", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL ko.j_d"));
    assert!(stderr(&o).contains("warning: real structure constraint"));
}

#[test]
fn config_file_supplies_defaults() {
    let dir = std::env::temp_dir().join(format!("gwa-cli-config-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("params.conf");
    std::fs::write(&cfg, "# test\np = z^2-1\nalpha0 = 2\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    let from_file = stdout(&gwa(&["--config", cfg, "apply", "d0", "x+"]));
    let from_flags = stdout(&gwa(&[
        "--p", "z^2-1", "--alpha0", "2", "apply", "d0", "x+",
    ]));
    assert_eq!(from_file, from_flags);
    let overridden = stdout(&gwa(&[
        "--config", cfg, "--alpha0", "1", "apply", "d0", "x+",
    ]));
    assert_eq!(
        overridden,
        stdout(&gwa(&["--p", "z^2-1", "apply", "d0", "x+"]))
    );
    std::fs::write(dir.join("bad.conf"), "gamma = 1\n").unwrap();
    let o = gwa(&[
        "--config",
        dir.join("bad.conf").to_str().unwrap(),
        "nf",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

fn json_report(args: &[&str], name: &str) -> (Output, Value) {
    let path = std::env::temp_dir().join(format!("gwa-cli-{name}-{}.json", std::process::id()));
    let mut all: Vec<&str> = args.to_vec();
    let p = path.to_str().unwrap().to_string();
    all.extend(["--json", &p]);
    let o = gwa(&all);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    (o, v)
}

#[test]
fn json_report_schema() {
    let (o, v) = json_report(&["--p", "z^2-1", "--bound", "2", "verify-all"], "all");
    assert_eq!(o.status.code(), Some(0));
    let obj = v.as_object().unwrap();
    let keys: Vec<&str> = obj.keys().map(String::as_str).collect();
    assert_eq!(keys, ["bound", "checks", "command", "p", "passed"]);
    assert_eq!(v["command"], "verify-all");
    assert_eq!(v["p"], "z^2 - 1");
    assert_eq!(v["bound"], 2);
    assert_eq!(v["passed"], true);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.len() > 40);
    for c in checks {
        let keys: Vec<&str> = c.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["counterexample", "millis", "name", "ref", "status"]);
        assert!(["pass", "fail", "skipped"].contains(&c["status"].as_str().unwrap()));
        assert!(c["millis"].is_u64());
    }
    let names: Vec<&str> = checks.iter().map(|c| c["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    assert!(names.contains(&"integral.example_table"));

    let (o, v) = json_report(
        &["--p", "z^2-1", "verify-ko", "--bound", "2", "--nu", "2"],
        "ko",
    );
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(v["passed"], false);
    let failed: Vec<&Value> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .collect();
    assert!(failed.iter().all(|c| c["counterexample"].is_string()));

    let (_, v) = json_report(&["--p", "z^2-1", "bar-witness", "z+^2*w-"], "bar");
    assert_eq!(v["witness"]["target"], "z+^2*w-");
    assert_eq!(v["witness"]["value"], "z+^2*w-");
    assert!(!v["witness"]["terms"].as_array().unwrap().is_empty());
    assert_eq!(v["checks"][0]["name"], "witness.bar");

    let (_, v) = json_report(&["--p", "z^2-1", "nf", "z+*x+"], "nf");
    assert_eq!(v["result"], "q*x+*z+");
    assert!(v["bound"].is_null());
    assert_eq!(v["checks"].as_array().unwrap().len(), 0);
}

#[test]
fn dirac_and_divergence() {
    let o = gwa(&["--p", "z^2-1", "dirac", "z-*s+"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "(-1/q*x+)*s-");
    let o = gwa(&["--p", "z^2-1", "dirac", "x+*s+"]);
    assert_eq!(o.status.code(), Some(2));
    let o = gwa(&["--p", "1-z", "divergence", "z+*xi0"]);
    assert_eq!(o.status.code(), Some(0));
}
