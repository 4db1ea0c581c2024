//! End-to-end checks of the binary: flag plumbing, config precedence,
//! guardrails, output formats, determinism.

use std::path::Path;
use std::process::{Command, Output};

fn mml(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mml"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn write_config(dir: &Path, text: &str) -> std::path::PathBuf {
    let path = dir.join("lab.cfg");
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn zeros_match_known_ordinates() {
    let out = mml(&["zeros", "--count", "3"]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("# mml-schema 1"));
    assert_eq!(lines.next(), Some("index,gamma,z_residual,iterations"));
    let known = [14.134725141734694, 21.022039638771555, 25.010857580145688];
    for (k, line) in lines.enumerate() {
        let cells: Vec<&str> = line.split(',').collect();
        assert_eq!(cells[0], (k + 1).to_string());
        let gamma: f64 = cells[1].parse().unwrap();
        assert!((gamma - known[k]).abs() < 1e-8, "zero {k}: {gamma}");
        let residual: f64 = cells[2].parse().unwrap();
        assert!(residual < 1e-9);
    }
}

#[test]
fn zero_count_zero_gives_header_only() {
    let out = mml(&["zeros", "--count", "0"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "# mml-schema 1\nindex,gamma,z_residual,iterations\n"
    );
}

#[test]
fn identical_runs_are_byte_identical() {
    let a = mml(&["meanvalue", "--tmax", "100"]);
    let b = mml(&["meanvalue", "--tmax", "100"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).starts_with("# mml-schema 1\n"));
}

#[test]
fn out_flag_writes_the_same_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("result.csv");
    let stream = mml(&["meanvalue", "--tmax", "50"]);
    let filed = mml(&["meanvalue", "--tmax", "50", "--out", path.to_str().unwrap()]);
    assert!(filed.status.success());
    assert_eq!(stdout(&stream), std::fs::read_to_string(&path).unwrap());
    assert!(stdout(&filed).is_empty());
}

#[test]
fn json_format_has_the_expected_shape() {
    let out = mml(&["meanvalue", "--tmax", "100", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["command"], "meanvalue");
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["config"]["T_list"][0], 100.0);
    let row = &v["rows"][0];
    assert_eq!(row["T1"], 0.0);
    assert_eq!(row["T2"], 100.0);
    assert!(row["ratio"].as_f64().unwrap() > 0.3);
    assert!(row["converged"].as_bool().unwrap());
    assert!(row["err_estimate"].as_f64().unwrap() >= 0.0);
}

#[test]
fn config_file_applies_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        "T_list = 80\nwindow = dyadic\n[moments]\nrel_tol = 1e-5\n",
    );
    let from_file = mml(&["meanvalue", "--config", cfg.to_str().unwrap()]);
    assert!(from_file.status.success(), "stderr: {}", stderr(&from_file));
    let text = stdout(&from_file);
    let row = text.lines().nth(2).unwrap();
    // dyadic window [80, 160] taken from the file
    assert!(row.starts_with("8.00000000000000e1,1.60000000000000e2"));

    let overridden = mml(&[
        "meanvalue",
        "--config",
        cfg.to_str().unwrap(),
        "--tmax",
        "40",
        "--window",
        "from_zero",
    ]);
    let text = stdout(&overridden);
    let row = text.lines().nth(2).unwrap();
    assert!(row.starts_with("0.00000000000000e0,4.00000000000000e1"));
}

#[test]
fn unknown_config_key_is_refused() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "turbo_mode = yes\n");
    let out = mml(&["meanvalue", "--config", cfg.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("turbo_mode"), "stderr: {}", stderr(&out));
}

#[test]
fn endpoint_guardrail_refuses_and_names_the_flag() {
    let out = mml(&["meanvalue", "--tmax", "20000"]);
    assert!(!out.status.success());
    assert!(
        stderr(&out).contains("override-guardrail"),
        "stderr: {}",
        stderr(&out)
    );
}

#[test]
fn theta_guardrail_refuses_past_one() {
    let out = mml(&["levinson", "--theta", "1.5", "--tmax", "100"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("override-guardrail"));
}

#[test]
fn levinson_requires_from_zero_window() {
    let out = mml(&["levinson", "--theta", "0.4", "--tmax", "100", "--window", "dyadic"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("from_zero"));
}

#[test]
fn off_line_hypothesis_is_refused_by_kernel_commands() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "beta0 = 0.75\n");
    for cmd in ["jt-check", "chain", "gsupport"] {
        let out = mml(&[cmd, "--config", cfg.to_str().unwrap()]);
        assert!(!out.status.success(), "{cmd} accepted beta0 = 0.75");
        assert!(stderr(&out).contains("beta0"), "{cmd} stderr: {}", stderr(&out));
    }
}

#[test]
fn levinson_row_carries_error_and_convergence() {
    let out = mml(&["levinson", "--theta", "0.4", "--tmax", "200"]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(
        text.lines().nth(1).unwrap(),
        "theta,T,x,I_over_T,target,rel_gap,err_estimate,converged"
    );
    let cells: Vec<&str> = text.lines().nth(2).unwrap().split(',').collect();
    let i_over_t: f64 = cells[3].parse().unwrap();
    assert!(i_over_t > 1.0 && i_over_t < 4.0, "I/T = {i_over_t}");
    assert_eq!(cells[8 - 1], "true");
}

#[test]
fn sieve_cache_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap().to_string();
    let first = mml(&["levinson", "--theta", "0.5", "--tmax", "100", "--cache-dir", &cache]);
    assert!(first.status.success(), "stderr: {}", stderr(&first));
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert!(!files.is_empty(), "no cache file written");
    let second = mml(&["levinson", "--theta", "0.5", "--tmax", "100", "--cache-dir", &cache]);
    assert_eq!(stdout(&first), stdout(&second));
}

#[test]
fn gsupport_reports_kernel_under_bounds() {
    let out = mml(&["gsupport", "--t", "0", "--u", "0.5,2"]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(
        text.lines().nth(1).unwrap(),
        "t,u,sigma,abs_g,bound_g,sup_node_g,tail,err_g"
    );
    for line in text.lines().skip(2) {
        let cells: Vec<&str> = line.split(',').collect();
        let u: f64 = cells[1].parse().unwrap();
        let abs_g: f64 = cells[3].parse().unwrap();
        let bound: f64 = cells[4].parse().unwrap();
        if u > 1.0 {
            assert!(abs_g < 1e-8, "kernel leaks at u = {u}: {abs_g}");
        } else {
            assert!(abs_g <= bound, "u = {u}: {abs_g} over bound {bound}");
        }
    }
}
