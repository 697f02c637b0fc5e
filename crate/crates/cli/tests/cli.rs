use std::path::PathBuf;
use std::process::{Command, Output};

fn defrad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_defrad"))
        .args(args)
        .output()
        .expect("failed to run defrad")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(path).unwrap()
}

fn data_rows(csv: &str) -> Vec<Vec<String>> {
    csv.lines()
        .skip(1)
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.split(',').map(str::to_owned).collect())
        .collect()
}

#[test]
fn gcurve_matches_golden() {
    let out = defrad(&[
        "gcurve",
        "--wbar-min",
        "0",
        "--wbar-max",
        "10",
        "--points",
        "201",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), golden("gcurve_0_10_201.csv"));
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        &[
            "gcurve",
            "--wbar-min",
            "1e-3",
            "--wbar-max",
            "1e3",
            "--points",
            "61",
            "--log",
            "--asymptote",
        ][..],
        &[
            "scan", "--beta", "1", "--omega", "1", "--nmax", "3", "--format", "json",
        ],
        &[
            "wavefunc", "--beta", "0.5", "--omega", "2", "--n", "3", "--points", "101", "--format",
            "svg",
        ],
    ] {
        let a = defrad(args);
        let b = defrad(args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn spectrum_rows_round_trip() {
    let out = defrad(&[
        "spectrum", "--beta", "1", "--omega", "2", "--nmax", "5", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("n,energy\n"));
    assert!(!text.contains('\r'));
    let rows = data_rows(&text);
    assert_eq!(rows.len(), 6);
    let mode = defrad::DeformedMode::new(2.0, 1.0, 1.0).unwrap();
    for (n, row) in rows.iter().enumerate() {
        assert_eq!(row[0], n.to_string());
        let e: f64 = row[1].parse().unwrap();
        assert_eq!(e.to_bits(), mode.energy_level(n as u32).to_bits());
    }
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("defrad-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("d.csv");
    let out = defrad(&[
        "dispersion",
        "--beta",
        "0.5",
        "--omega-min",
        "0",
        "--omega-max",
        "4",
        "--points",
        "5",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("omega_k,Omega_k\n"));
    assert_eq!(data_rows(&text).len(), 5);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn json_mirrors_csv_rows() {
    let args = [
        "gcurve",
        "--wbar-min",
        "0",
        "--wbar-max",
        "2",
        "--points",
        "5",
        "--asymptote",
    ];
    let csv = stdout(&defrad(&args));
    let mut json_args = args.to_vec();
    json_args.extend(["--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&defrad(&json_args))).unwrap();
    let rows = doc["rows"].as_array().unwrap();
    let csv_rows = data_rows(&csv);
    assert_eq!(rows.len(), csv_rows.len());
    assert!(rows[0]["g_asymptote"].is_null());
    for (j, c) in rows.iter().zip(&csv_rows) {
        assert_eq!(j["g"].as_f64().unwrap(), c[1].parse::<f64>().unwrap());
    }
    assert_eq!(doc["params"]["points"], "5");
}

#[test]
fn svg_is_a_document() {
    let out = defrad(&[
        "gcurve",
        "--wbar-min",
        "0",
        "--wbar-max",
        "10",
        "--points",
        "51",
        "--format",
        "svg",
    ]);
    let text = stdout(&out);
    assert!(text.starts_with("<?xml"));
    assert!(text.contains("<svg"));
    assert_eq!(text.matches("<polyline").count(), 1);
    assert!(text.trim_end().ends_with("</svg>"));
}

#[test]
fn melem_reports_both_operators() {
    let out = defrad(&[
        "melem", "--beta", "1", "--omega", "1", "--n", "3", "--nprime", "0",
    ]);
    assert!(out.status.success());
    let rows = data_rows(&stdout(&out));
    assert_eq!(rows[0][0], "q");
    assert_eq!(rows[1][0], "tan");
    let tan: f64 = rows[1][3].parse().unwrap();
    assert!((tan - 0.182_418_494_484_320_01).abs() < 1e-12);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["spectrum", "--beta", "1"][..],
        &["nosuch"],
        &["spectrum", "--beta", "-1", "--omega", "1", "--nmax", "2"],
        &[
            "gcurve",
            "--wbar-min",
            "2",
            "--wbar-max",
            "1",
            "--points",
            "5",
        ],
        &[
            "gcurve",
            "--wbar-min",
            "0",
            "--wbar-max",
            "1",
            "--points",
            "5",
            "--log",
        ],
        &[
            "melem", "--beta", "0", "--omega", "1", "--n", "1", "--nprime", "0",
        ],
        &[
            "melem",
            "--beta",
            "1",
            "--omega",
            "1",
            "--n",
            "1",
            "--nprime",
            "0",
            "--rel-tol",
            "0",
        ],
        &["intensity", "--wbar", "1", "--p12c-re", "0"],
        &["verify", "--level", "quick", "--format", "svg"],
    ] {
        let out = defrad(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn quick_verify_passes() {
    let out = defrad(&["verify", "--level", "quick"]);
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert_eq!(text.matches(",PASS,").count(), 12);
    assert!(text.contains("nonzero only at odd n+n'"));
}

#[test]
fn help_exits_zero() {
    assert_eq!(defrad(&["--help"]).status.code(), Some(0));
}
