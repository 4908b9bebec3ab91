use std::path::PathBuf;
use std::process::{Command, Output};

fn ndegree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ndegree"))
        .args(args)
        .env_remove("NDEGREE_TOL_DOMAIN")
        .env_remove("NDEGREE_TOL_ROOT")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(args: &[&str]) -> i32 {
    ndegree(args).status.code().unwrap()
}

#[test]
fn right_angle_prints_ninety_degrees() {
    let out = ndegree(&["angle", "--gamma", "1", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "90\n");
    let out = ndegree(&["angle", "--gamma", "10", "--n", "1", "--radians"]);
    assert_eq!(
        stdout(&out).trim().parse::<f64>().unwrap(),
        std::f64::consts::PI
    );
}

#[test]
fn exclusions_exit_two_with_a_reason() {
    let out = ndegree(&["angle", "--gamma", "1.5", "--n", "-0.5"]);
    assert_eq!(out.status.code(), Some(2));
    let text = stdout(&out);
    assert!(
        text.starts_with("excluded: exceeds critical degree (n_crit ≈ -0.78788"),
        "{text}"
    );

    let out = ndegree(&["angle", "--gamma", "3", "--n", "-1"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stdout(&out), "excluded: ratio ≥ 2\n");

    assert_eq!(code(&["angle", "--gamma", "1.5", "--n", "0.5"]), 2);
    assert_eq!(
        code(&["area", "--a", "1", "--gamma", "1.5", "--n", "-0.5"]),
        2
    );
}

#[test]
fn critical_degree_queries() {
    let out = ndegree(&["ncrit", "--gamma", "1.5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let n: f64 = text
        .lines()
        .next()
        .unwrap()
        .trim_start_matches("n_crit = ")
        .parse()
        .unwrap();
    assert!((n + 0.787_884_911_025_869_8).abs() < 1e-10);
    assert!(text.contains("residual = "));

    let out = ndegree(&["ncrit", "--gamma", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stdout(&out), "no critical degree (all n<0 valid)\n");
    assert_eq!(code(&["ncrit", "--gamma", "2"]), 2);
}

#[test]
fn areas_at_fixed_leg_and_perimeter() {
    assert_eq!(
        stdout(&ndegree(&["area", "--a", "1", "--gamma", "1", "--n", "2"])),
        "0.5\n"
    );
    let out = ndegree(&["area", "--perimeter", "1", "--gamma", "1", "--n", "2"]);
    assert_eq!(stdout(&out), "0.042893218813452476\n");
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["angle", "--gamma", "abc", "--n", "2"][..],
        &["angle", "--gamma", "1.5"],
        &["angle", "--gamma", "0.5", "--n", "2"],
        &["angle", "--gamma", "1.5", "--n", "0"],
        &["area", "--gamma", "1", "--n", "2"],
        &[
            "area",
            "--a",
            "1",
            "--perimeter",
            "1",
            "--gamma",
            "1",
            "--n",
            "2",
        ],
        &["area", "--a", "-1", "--gamma", "1", "--n", "2"],
        &[
            "sweep",
            "--quantity",
            "angle",
            "--gamma",
            "1:1:1",
            "--n",
            "2",
        ],
        &["sweep", "--quantity", "volume", "--gamma", "1"],
        &["sweep", "--quantity", "angle", "--gamma", "1:2:5"],
        &["sweep", "--figure", "1"],
        &["ncrit", "--gamma", "1.5", "--tol", "0"],
        &["frobnicate"],
    ] {
        let out = ndegree(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn sweeps_are_byte_identical_across_runs() {
    let args = [
        "sweep",
        "--quantity",
        "angle",
        "--gamma",
        "0.1:3:40",
        "--n",
        "-5:-1:5",
    ];
    let first = ndegree(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, ndegree(&args).stdout);
    assert_eq!(
        ndegree(&["sweep", "--figure", "9"]).stdout,
        ndegree(&["sweep", "--figure", "9"]).stdout
    );
}

#[test]
fn sweep_rows_are_major_axis_first() {
    let text = stdout(&ndegree(&[
        "sweep",
        "--quantity",
        "angle",
        "--gamma",
        "1:2:2",
        "--n",
        "1:3:3",
    ]));
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "gamma,n,theta_deg");
    assert_eq!(lines[1], "1,1,180");
    assert_eq!(lines[2], "1,2,90");
    assert!(lines[4].starts_with("2,1,"));
    let text = stdout(&ndegree(&[
        "sweep",
        "--quantity",
        "angle",
        "--gamma",
        "1:2:2",
        "--n",
        "1:3:3",
        "--major",
        "n",
    ]));
    assert!(text.lines().nth(2).unwrap().starts_with("2,1,"));
}

#[test]
fn excluded_cells_use_the_token() {
    let text = stdout(&ndegree(&[
        "sweep",
        "--quantity",
        "angle",
        "--gamma",
        "1.5",
        "--n",
        "-2:-0.2:2",
    ]));
    assert!(text.lines().nth(2).unwrap().ends_with(",excluded"));
    let json = stdout(&ndegree(&[
        "sweep",
        "--quantity",
        "angle",
        "--gamma",
        "1.5",
        "--n",
        "-2:-0.2:2",
        "--format",
        "json",
    ]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["rows"][1][2], "excluded");
    assert!(v["rows"][0][2].is_f64());
}

#[test]
fn printed_numbers_round_trip() {
    let text = stdout(&ndegree(&[
        "sweep",
        "--quantity",
        "area_fixed_perimeter",
        "--gamma",
        "1:3:7",
        "--n",
        "1:9:5",
    ]));
    for line in text.lines().skip(1) {
        for cell in line.split(',') {
            let x: f64 = cell.parse().unwrap();
            assert_eq!(ndegree::fmt_g17(x), cell);
        }
    }
}

#[test]
fn figure_presets_run() {
    for f in 2..=19 {
        let out = ndegree(&["sweep", "--figure", &f.to_string()]);
        assert_eq!(out.status.code(), Some(0), "figure {f}");
        assert!(stdout(&out).lines().count() > 1, "figure {f}");
    }
    let eight = stdout(&ndegree(&["sweep", "--figure", "8", "--radians"]));
    assert!(eight.starts_with("gamma,n,theta_rad\n"));
}

#[test]
fn flag_tolerance_overrides_environment() {
    let run = |env: Option<&str>, flag: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_ndegree"));
        cmd.args(["ncrit", "--gamma", "1.5"]);
        if let Some(f) = flag {
            cmd.args(["--tol-root", f]);
        }
        match env {
            Some(v) => cmd.env("NDEGREE_TOL_ROOT", v),
            None => cmd.env_remove("NDEGREE_TOL_ROOT"),
        };
        stdout(&cmd.output().unwrap())
    };
    let default = run(None, None);
    let loose = run(Some("1e-3"), None);
    assert_ne!(default, loose);
    assert_eq!(run(Some("1e-3"), Some("1e-12")), default);
    assert_eq!(run(Some("not-a-number"), Some("1e-12")), default);
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ndegree-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn verify_exit_code_tracks_expectations() {
    let out = ndegree(&["verify", "--format", "json"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["claims"][0]["id"], "C-EQ2");

    let text = ndegree(&["verify", "--format", "text"]);
    assert_eq!(text.status.code(), Some(0));
    assert!(stdout(&text)
        .lines()
        .any(|l| l.starts_with("C-EQ22") && l.contains("REFUTED")));

    let path = scratch("expected.json");
    std::fs::write(
        &path,
        r#"{"version": "1", "statuses": {"C-EQ22": "VERIFIED"}}"#,
    )
    .unwrap();
    let out = ndegree(&["verify", "--expectations", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("C-EQ22"));

    assert_eq!(
        code(&["verify", "--expectations", "/nonexistent/expected.json"]),
        1
    );
}

#[test]
fn malformed_environment_tolerance_is_a_usage_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_ndegree"))
        .args(["angle", "--gamma", "1", "--n", "2"])
        .env("NDEGREE_TOL_DOMAIN", "wide")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}
