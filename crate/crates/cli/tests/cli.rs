use std::io::Write;
use std::process::{Command, Output, Stdio};

fn rgrkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rgrkit"))
        .args(args)
        .env_remove("RGRKIT_THREADS")
        .output()
        .expect("binary runs")
}

fn rgrkit_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rgrkit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_rulers() {
    let o = rgrkit(&["verify", "rgr", "--marks", "0,1,8,12,14"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "RGR(5,14)");

    assert_eq!(
        rgrkit(&["verify", "rgr", "--marks", "0,1,2"]).status.code(),
        Some(1)
    );
    assert_eq!(
        rgrkit(&["verify", "gr", "--marks", "0,1,3"]).status.code(),
        Some(0)
    );
    assert_eq!(
        rgrkit(&["verify", "rgr", "--marks", "0,1,3"]).status.code(),
        Some(1)
    );
    assert_eq!(
        rgrkit(&["verify", "rmgr", "--v", "12", "--marks", "0,1,5"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        rgrkit(&["verify", "rmgr", "--v", "9", "--marks", "0,1,5"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        rgrkit(&["verify", "mgr", "--v", "9", "--marks", "0,1,5"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn verify_group_ruler() {
    let o = rgrkit(&[
        "verify",
        "ggr",
        "--group",
        "A4",
        "--subgroup",
        "(12)(34);(13)(24)",
        "--marks",
        "id;(123);(124)",
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(rgrkit(&["verify", "rgr"]).status.code(), Some(2));
    assert_eq!(rgrkit(&["nonsense"]).status.code(), Some(2));
    assert_eq!(
        rgrkit(&["verify", "rgr", "--marks", "0,a"]).status.code(),
        Some(2)
    );
    assert_eq!(
        rgrkit(&["construct", "ruzsa", "--p", "12"]).status.code(),
        Some(2)
    );
    assert_eq!(
        rgrkit(&["verify", "config", "--input", "/nonexistent.json"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn budget_exceeded_exits_three() {
    let o = rgrkit(&["search", "optimal-rgr", "--k", "10", "--budget", "100"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("budget exceeded"));
}

#[test]
fn searches() {
    let o = rgrkit(&["search", "optimal-rgr", "--k", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("RGR(6,20)"));

    let o = rgrkit(&["search", "rmgr", "--v", "80", "--k", "8"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("none exists"));

    let o = rgrkit(&[
        "--format", "json", "search", "rmgr", "--v", "30", "--k", "5",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "found");
}

#[test]
fn json_output_is_deterministic() {
    let args = [
        "--format",
        "json",
        "--threads",
        "2",
        "search",
        "optimal-rgr",
        "--k",
        "8",
    ];
    let a = rgrkit(&args);
    let b = rgrkit(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let args = ["--format", "json", "table", "--k-max", "13"];
    assert_eq!(rgrkit(&args).stdout, rgrkit(&args).stdout);
}

#[test]
fn reproduce_artifacts() {
    for artifact in ["table2", "table3", "table4", "examples"] {
        let o = rgrkit(&["reproduce", artifact]);
        assert_eq!(o.status.code(), Some(0), "{artifact}: {}", stdout(&o));
        assert!(!stdout(&o).contains("FAIL"));
    }
    let o = rgrkit(&["reproduce", "table3"]);
    assert_eq!(
        stdout(&o).lines().filter(|l| l.starts_with("PASS")).count(),
        8
    );
}

#[test]
fn reproduce_table1_with_small_budget_stays_sound() {
    let o = rgrkit(&["reproduce", "table1", "--budget", "1000"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 8);
    assert!(!text.contains("FAIL"), "{text}");
}

#[test]
fn mols_affine_and_hosts_pipeline() {
    let mols = rgrkit(&["--format", "json", "from-mols", "--k", "4", "--w", "4"]);
    assert_eq!(mols.status.code(), Some(0));

    let affine = rgrkit_stdin(&["--format", "json", "complete-affine"], &mols.stdout);
    assert_eq!(affine.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&affine.stdout).unwrap();
    assert_eq!(v["blocks"].as_array().unwrap().len(), 20);
    assert_eq!(v["classes"].as_array().unwrap().len(), 5);

    let checked = rgrkit_stdin(&["verify", "config"], &affine.stdout);
    assert_eq!(checked.status.code(), Some(0));

    let hosts = rgrkit_stdin(&["--format", "pdp", "assign-hosts"], &mols.stdout);
    assert_eq!(hosts.status.code(), Some(0));
    let text = stdout(&hosts);
    assert_eq!(text.matches('*').count(), 16);
    assert_eq!(text.lines().filter(|l| l.starts_with("course")).count(), 4);
}

#[test]
fn broken_configuration_is_reported() {
    let input = br#"{"v":4,"k":2,"blocks":[[0,1],[0,1],[2,3],[2,3]],"classes":[[0,2],[1,3]]}"#;
    let o = rgrkit_stdin(&["verify", "config"], input);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("pair {0, 1}"));
}

#[test]
fn develop_and_schedule() {
    let o = rgrkit(&[
        "--format",
        "pdp",
        "develop",
        "rmgr",
        "--v",
        "30",
        "--marks",
        "0,1,8,12,14",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches('*').count(), 30);

    let o = rgrkit(&[
        "develop",
        "ggr",
        "--group",
        "Z(8)xZ(10)",
        "--subgroup",
        "(4,0);(0,2)",
        "--marks",
        "(0,0);(0,1);(1,0);(5,1);(2,4);(2,7);(3,2);(7,9)",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("(80,8)-configuration: 80 blocks in 8 parallel classes"));

    let o = rgrkit(&[
        "develop",
        "multi",
        "--v",
        "55",
        "--k",
        "5",
        "--base",
        "0,1,17,53,24;0,6,27,18,14",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("(55,5)-configuration: 110 blocks in 10 parallel classes"));
}

#[test]
fn existence_queries() {
    let o = rgrkit(&["exists", "--k", "6", "--w", "6"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("affine-nonexistence"));

    let o = rgrkit(&[
        "--format",
        "json",
        "exists",
        "--k",
        "9",
        "--w",
        "12",
        "--witness",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["record"]["authority"], "RMGR-example");
    assert_eq!(v["configuration"]["blocks"].as_array().unwrap().len(), 108);

    let o = rgrkit(&["exists", "--k", "12", "--w", "15"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("is open"));

    assert_eq!(
        rgrkit(&["exists", "--k", "20", "--w", "20"]).status.code(),
        Some(2)
    );
}

#[test]
fn constructions() {
    let o = rgrkit(&["construct", "ruzsa", "--p", "11", "--g", "6"]);
    assert!(stdout(&o).contains("0,13,16,17,25,31,52,54,59,78"));
    let o = rgrkit(&["--format", "json", "construct", "ruzsa", "--p", "13"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["length"], 112);
    assert_eq!(
        rgrkit(&["construct", "cubic", "--k", "3"]).status.code(),
        Some(1)
    );
    assert_eq!(
        rgrkit(&["construct", "cubic", "--k", "7"]).status.code(),
        Some(0)
    );
    assert_eq!(
        rgrkit(&["construct", "costas", "--p", "7", "--g", "3"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        rgrkit(&["construct", "costas", "--p", "7", "--g", "2"])
            .status
            .code(),
        Some(2)
    );
}
