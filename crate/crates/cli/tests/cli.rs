use std::process::{Command, Output};

use curvelattice::report::{Payload, RunReport};
use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_curvelattice"))
        .args(args)
        .env("CURVELATTICE_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = bin(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn quartic_verdicts_for_the_family_roots() {
    let v = json(&[
        "--stable", "classify", "quartic", "--model", "q1", "--class", "8,6",
    ]);
    let p = &v["payload"];
    assert_eq!(
        (p["d"].as_i64(), p["g"].as_i64(), p["h1_I4"].as_i64()),
        (Some(26), Some(81), Some(1))
    );
    assert_eq!(p["kind"], "NonReducedComponent");
    assert_eq!(
        (p["dim_w"].as_i64(), p["tangent_dim"].as_i64()),
        (Some(114), Some(115))
    );

    let v = json(&["classify", "quartic", "--model", "q1", "--class", "15,10"]);
    assert_eq!(v["payload"]["h1_I4"], 4);
}

#[test]
fn not_applicable_carries_a_reason() {
    let v = json(&["classify", "quartic", "--model", "q1", "--class", "1,1"]);
    assert_eq!(v["payload"]["kind"], "NotApplicable");
    assert_eq!(v["payload"]["reason"], "complete-intersection");
    assert!(v["payload"]["dim_w"].is_null());
}

#[test]
fn supplied_h1_ic1_can_decide() {
    let v = json(&[
        "classify", "quartic", "--model", "q1", "--class", "8,6", "--h1-ic1", "0",
    ]);
    assert_eq!(v["inputs"]["h1_ic1"], "0");
}

#[test]
fn cubic_tuples() {
    let v = json(&["classify", "cubic", "--tuple", "15,5,4,4,4,4,2"]);
    let p = &v["payload"];
    assert_eq!(p["kind"], "NonReducedComponent");
    assert_eq!((p["d"].as_i64(), p["g"].as_i64()), (Some(22), Some(56)));
    assert!(p["criteria"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c == "cubic-m6-two"));

    let v = json(&["classify", "cubic", "--tuple", "12,4,4,4,4,4,2"]);
    assert_eq!(
        (v["payload"]["d"].as_i64(), v["payload"]["g"].as_i64()),
        (Some(14), Some(24))
    );
    assert_eq!(v["payload"]["conjecture_range"], true);

    let v = json(&["classify", "cubic", "--tuple", "10,3,3,3,3,3,3"]);
    assert_eq!(v["payload"]["kind"], "GenericallySmoothComponent");
    assert_eq!(v["payload"]["h1_I3_nonzero_in_range"], "OutOfRange");
}

#[test]
fn cubic_tuple_errors() {
    let out = bin(&["classify", "cubic", "--tuple", "3,2,2,2,0,0,0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("delta"));
    let out = bin(&["classify", "cubic", "--tuple", "1,2,3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn maxgenus_values_and_domain() {
    let v = json(&["maxgenus", "26", "5"]);
    assert_eq!(
        (v["payload"]["g"].as_i64(), v["payload"]["r"].as_i64()),
        (Some(80), Some(4))
    );
    let out = bin(&["maxgenus", "20", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let out = bin(&["maxgenus", "x", "5"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn huge_inputs_serialize_as_strings() {
    let d = "100000000000000000000000000";
    let v = json(&["maxgenus", d, "5"]);
    assert_eq!(v["payload"]["d"], d);
    assert!(v["payload"]["g"].is_string());
}

#[test]
fn cohomology_trace() {
    let v = json(&[
        "cohomology",
        "--model",
        "q1",
        "--class",
        "15,10",
        "--twist",
        "4",
    ]);
    let p = &v["payload"];
    assert_eq!(p["h1"], 4);
    assert_eq!(p["line_bundle"], serde_json::json!([11, 6]));
    assert_eq!(p["trace"]["terminal"], "nef-and-big");
}

#[test]
fn enumerate_q1_matches_families() {
    let out = bin(&["enumerate", "--model", "q1", "--bmax", "10", "--check"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("a,b,d,g,h1_I4,kind,dim_w,tangent_dim,criteria")
    );
    let classes: Vec<String> = lines
        .map(|l| l.split(',').take(2).collect::<Vec<_>>().join(","))
        .collect();
    assert_eq!(classes, ["8,6", "10,7", "11,8", "13,9", "14,10", "15,10"]);
}

#[test]
fn enumerate_q2_reports_classes_outside_the_families() {
    let out = bin(&[
        "--format",
        "json",
        "enumerate",
        "--model",
        "q2",
        "--bmax",
        "5",
        "--check",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let e = &v["payload"];
    assert_eq!(e["rows"].as_array().unwrap().len(), 8);
    assert_eq!(
        e["check"]["unexpected"],
        serde_json::json!(["(6,3)", "(6,4)", "(7,4)", "(8,4)"])
    );
    assert!(e["check"]["missing"].as_array().unwrap().is_empty());
}

#[test]
fn enumerate_rejects_undefined_regions() {
    assert_eq!(
        bin(&[
            "enumerate",
            "--model",
            "q1",
            "--bmax",
            "3",
            "--region",
            "nonvanishing"
        ])
        .status
        .code(),
        Some(1)
    );
    assert_eq!(
        bin(&["enumerate", "--model", "q2", "--bmax", "-1"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn verify_suites() {
    assert_eq!(bin(&["verify", "rr"]).status.code(), Some(0));
    assert_eq!(bin(&["verify", "oracles"]).status.code(), Some(0));
    let out = bin(&["verify", "crossover"]);
    assert_eq!(out.status.code(), Some(3));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["payload"]["passed"], false);
    let text = serde_json::to_string(&v).unwrap();
    assert!(text.contains("d = 74"));
}

#[test]
fn stable_output_is_byte_identical() {
    let args = [
        "--stable",
        "enumerate",
        "--model",
        "q1",
        "--bmax",
        "40",
        "--format",
        "json",
    ];
    let a = bin(&args).stdout;
    let b = Command::new(env!("CARGO_BIN_EXE_curvelattice"))
        .args(args)
        .env("CURVELATTICE_THREADS", "7")
        .output()
        .unwrap()
        .stdout;
    assert_eq!(a, b);
    assert!(!String::from_utf8(a).unwrap().contains("wall_time_us"));
    let v = json(&["maxgenus", "26", "5"]);
    assert!(v["wall_time_us"].is_u64());
}

#[test]
fn reports_round_trip() {
    for args in [
        &[
            "--stable", "classify", "quartic", "--model", "q2", "--class", "7,5",
        ][..],
        &["--stable", "classify", "cubic", "--tuple", "22,7,7,7,7,3,2"],
        &[
            "--stable",
            "cohomology",
            "--model",
            "q2",
            "--class",
            "9,2",
            "--twist",
            "1",
        ],
        &[
            "--stable",
            "--format",
            "json",
            "enumerate",
            "--model",
            "q1",
            "--bmax",
            "12",
            "--check",
        ],
        &["--stable", "verify", "oracles"],
    ] {
        let text = String::from_utf8(bin(args).stdout).unwrap();
        let r = RunReport::from_json(&text).unwrap();
        assert_eq!(r.to_json() + "\n", text);
    }
    let text = String::from_utf8(bin(&["--stable", "maxgenus", "31", "6"]).stdout).unwrap();
    assert!(matches!(
        RunReport::from_json(&text).unwrap().payload,
        Payload::MaxGenus(_)
    ));
}

#[test]
fn model_files() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("q1.json");
    std::fs::write(
        &good,
        r#"{"name":"mine","gram":[[-2,3],[3,0]],"hyperplane":[1,1],"minus_two_curves":[[1,0]],"elliptic_pencils":[[0,1]]}"#,
    )
    .unwrap();
    let v = json(&[
        "classify",
        "quartic",
        "--model",
        good.to_str().unwrap(),
        "--class",
        "8,6",
    ]);
    assert_eq!(v["model"], "mine");
    assert_eq!(v["payload"]["kind"], "NonReducedComponent");
    // Structurally equal to a built-in, so enumeration is allowed.
    let out = bin(&[
        "enumerate",
        "--model",
        good.to_str().unwrap(),
        "--bmax",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(0));

    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"{"name":"x","gram":[[-2,3],[3,0]],"hyperplane":[1,0],"minus_two_curves":[]}"#,
    )
    .unwrap();
    let out = bin(&[
        "classify",
        "quartic",
        "--model",
        bad.to_str().unwrap(),
        "--class",
        "8,6",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("hyperplane"));

    let junk = dir.path().join("junk.json");
    std::fs::write(&junk, "{ not json").unwrap();
    assert_eq!(
        bin(&[
            "cohomology",
            "--model",
            junk.to_str().unwrap(),
            "--class",
            "1,1"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        bin(&[
            "cohomology",
            "--model",
            "/nonexistent/m.json",
            "--class",
            "1,1"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn out_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = bin(&[
        "--stable",
        "--out",
        path.to_str().unwrap(),
        "maxgenus",
        "26",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r = RunReport::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(
        r.command,
        [
            "--stable",
            "--out",
            path.to_str().unwrap(),
            "maxgenus",
            "26",
            "5"
        ]
    );
}

#[test]
fn usage_and_help_exit_codes() {
    assert_eq!(bin(&[]).status.code(), Some(1));
    assert_eq!(bin(&["--help"]).status.code(), Some(0));
    assert_eq!(bin(&["--version"]).status.code(), Some(0));
    assert_eq!(
        bin(&["classify", "quartic", "--model", "q1", "--class", "8"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        bin(&["classify", "quartic", "--model", "q3", "--class", "8,6"])
            .status
            .code(),
        Some(2)
    );
    let out = Command::new(env!("CARGO_BIN_EXE_curvelattice"))
        .args(["maxgenus", "26", "5"])
        .env("CURVELATTICE_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn table_and_csv_formats() {
    let out = bin(&["--stable", "--format", "csv", "maxgenus", "26", "5"]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "d,s,g,r\n26,5,80,4\n"
    );
    let out = bin(&[
        "--stable", "--format", "table", "classify", "quartic", "--model", "q1", "--class", "8,6",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("kind") && text.contains("NonReducedComponent"));
}
