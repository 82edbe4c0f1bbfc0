use std::process::{Command, Output};

fn wheelpinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wheelpinv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn dist_w5_csv() {
    let out = wheelpinv(&["dist", "--n", "5", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[0], "0,1,1,1,1");
}

#[test]
fn even_order_is_a_usage_error() {
    for cmd in ["dist", "slap", "alphas", "pinv"] {
        let out = wheelpinv(&[cmd, "--n", "6"]);
        assert_eq!(out.status.code(), Some(2), "{cmd}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn unknown_format_is_a_usage_error() {
    let out = wheelpinv(&["dist", "--n", "5", "--format", "xml"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dist_w7_json() {
    let v = json(&wheelpinv(&["dist", "--n", "7", "--format", "json"]));
    assert_eq!(v["n"], 7);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 7);
    assert!(rows.iter().all(|r| r.as_array().unwrap().len() == 7));
    assert_eq!(rows[1][3], "2");
}

#[test]
fn pinv_w5_first_row() {
    let out = wheelpinv(&["pinv", "--n", "5", "--method", "closed", "--format", "csv"]);
    assert_eq!(stdout(&out).lines().next(), Some("-1,1/4,1/4,1/4,1/4"));
}

#[test]
fn pinv_w7_entry() {
    let v = json(&wheelpinv(&[
        "pinv", "--n", "7", "--method", "closed", "--format", "json",
    ]));
    assert_eq!(v["rows"][2][2], "-4/9");
}

#[test]
fn methods_produce_identical_bytes() {
    for format in ["csv", "json", "latex"] {
        let closed = wheelpinv(&["pinv", "--n", "9", "--method", "closed", "--format", format]);
        let oracle = wheelpinv(&["pinv", "--n", "9", "--method", "oracle", "--format", format]);
        assert!(closed.status.success() && oracle.status.success());
        assert_eq!(closed.stdout, oracle.stdout, "{format}");
    }
}

#[test]
fn alphas_w7() {
    let out = wheelpinv(&["alphas", "--n", "7"]);
    assert_eq!(stdout(&out).trim_end(), "-5/36,-13/36,19/36");
    let v = json(&wheelpinv(&["alphas", "--n", "7", "--format", "json"]));
    assert_eq!(v["alphas"][2], "19/36");
}

#[test]
fn slap_w5_latex_matches_display() {
    let out = wheelpinv(&["slap", "--n", "5", "--format", "latex"]);
    // The reference display pads cells with `~~`; both sides are compared
    // with whitespace and ties removed.
    let reference = r"\frac{1}{8}\left[\begin{array}{ccccc}
        ~~16 & -4 & -4 & -4 & -4 \\
-4 & ~~5 & ~~1 & -3 & ~~1 \\
-4 & ~~1 & ~~5 & ~~1 & -3 \\
-4 & -3 & ~~1 & ~~5 & ~~1 \\
-4 & ~~1 & -3 & ~~1 & ~~5
\end{array}\right]";
    let squash = |s: &str| {
        s.chars()
            .filter(|c| !c.is_whitespace() && *c != '~')
            .collect::<String>()
    };
    assert_eq!(squash(&stdout(&out)), squash(reference));
}

#[test]
fn output_is_deterministic() {
    let a = wheelpinv(&["slap", "--n", "11", "--format", "json"]);
    let b = wheelpinv(&["slap", "--n", "11", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_writes_report() {
    let dir = std::env::temp_dir().join(format!("wheelpinv-report-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = wheelpinv(&[
        "verify",
        "--n-max",
        "21",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["overall"], true);
    let range: Vec<u64> = v["n_range"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    assert_eq!(range, (5..=21).step_by(2).collect::<Vec<u64>>());
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_edge_runs_only_five() {
    let v = json(&wheelpinv(&["verify", "--n-max", "5"]));
    assert_eq!(v["n_range"], serde_json::json!([5]));
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["n"] == 5));
}

#[test]
fn verify_perturbed_fails() {
    let out = wheelpinv(&["verify", "--n-max", "7", "--perturb"]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("FAIL n=5 laplacian.row_sums"), "{stderr}");
}

#[test]
fn verify_unwritable_report_is_exit_two() {
    let out = wheelpinv(&[
        "verify",
        "--n-max",
        "5",
        "--report",
        "/nonexistent-dir/x/report.json",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bench_csv_header_and_rows() {
    let out = wheelpinv(&[
        "bench",
        "--n-list",
        "5,7",
        "--methods",
        "closed,oracle",
        "--repeats",
        "1",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,method,seconds,peak_bits,verified");
    assert_eq!(lines.len(), 5);
    assert!(lines[1..].iter().all(|l| l.ends_with(",true")));
}

#[test]
fn bench_cutoff_flags_oracle() {
    let out = wheelpinv(&[
        "bench",
        "--n-list",
        "9",
        "--repeats",
        "1",
        "--oracle-cutoff",
        "7",
    ]);
    let text = stdout(&out);
    assert!(text.contains("9,oracle,skipped,skipped,false"), "{text}");
}

#[test]
fn bench_rejects_zero_repeats() {
    let out = wheelpinv(&["bench", "--n-list", "5", "--repeats", "0"]);
    assert_eq!(out.status.code(), Some(2));
}
