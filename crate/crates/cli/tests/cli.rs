use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pfsdist"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn dist_matrix_first_case() {
    let f = data("table3.json");
    let o = run(&["dist", path(&f), path(&f), "A1", "B1", "--method", "matrix"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), "0.1801\n");
}

#[test]
fn dist_same_set_is_zero_for_every_method() {
    let f = data("table3.json");
    for method in [
        "ifs-hamming",
        "ifs-euclid",
        "pfs-hamming",
        "pfs-euclid",
        "matrix",
    ] {
        let o = run(&["dist", path(&f), path(&f), "A3", "A3", "--method", method]);
        assert_eq!(stdout(&o), "0.0000\n", "{method}");
    }
    let o = run(&[
        "dist",
        path(&f),
        path(&f),
        "A3",
        "A3",
        "--method",
        "chen",
        "--beta",
        "3",
    ]);
    assert_eq!(stdout(&o), "0.0000\n");
}

#[test]
fn dist_csv_and_precision() {
    let f = data("table3.json");
    let o = run(&[
        "dist",
        path(&f),
        path(&f),
        "A1",
        "B1",
        "--format",
        "csv",
        "--precision",
        "2",
    ]);
    assert_eq!(
        stdout(&o),
        "set_a,set_b,method,distance\nA1,B1,matrix,0.18\n"
    );
}

#[test]
fn usage_errors_exit_2() {
    let f = data("table3.json");
    let cases: [&[&str]; 6] = [
        &["dist", path(&f), path(&f), "A1", "B1", "--method", "chen"],
        &[
            "dist",
            path(&f),
            path(&f),
            "A1",
            "B1",
            "--method",
            "matrix",
            "--beta",
            "2",
        ],
        &["dist", path(&f), path(&f), "A1", "B1", "--method", "cosine"],
        &["dist", path(&f), path(&f), "A1", "B1", "--precision", "13"],
        &["dist", path(&f), path(&f), "A1", "Z9"],
        &["repro", "table9"],
    ];
    for args in cases {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn invalid_file_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        "{\n  \"universe\": [\"x\"],\n  \"sets\": {\n    \"A\": {\"x\": {\"mu\": 0.9, \"nu\": 0.9}}\n  }\n}\n",
    )
    .unwrap();
    let o = run(&["dist", path(&bad), path(&bad), "A", "A"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(
        err.contains("line 4") && err.contains("'A'") && err.contains("'x'"),
        "{err}"
    );
}

#[test]
fn epsilon_flag_controls_boundary_pairs() {
    let f = data("app2_patients.json");
    assert_eq!(
        run(&["dist", path(&f), path(&f), "P2", "P2"]).status.code(),
        Some(0)
    );
    let strict = run(&["dist", path(&f), path(&f), "P2", "P2", "--epsilon", "0"]);
    assert_eq!(strict.status.code(), Some(2));
}

#[test]
fn nonconformable_sets_exit_3() {
    let a = data("table3.json");
    let b = data("worked_samples.json");
    let o = run(&["dist", path(&a), path(&b), "A1", "S1"]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));

    let o = run(&[
        "classify",
        path(&data("app1_diagnoses.json")),
        path(&data("app3_patients.json")),
    ]);
    assert_eq!(o.status.code(), Some(3));
}

fn winners(csv: &str) -> Vec<String> {
    csv.lines()
        .skip(1)
        .map(|l| l.split(',').rev().nth(1).unwrap().to_string())
        .collect()
}

#[test]
fn classify_worked_example() {
    let o = run(&[
        "classify",
        path(&data("worked_patterns.json")),
        path(&data("worked_samples.json")),
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("sample,P1,P2,P3,winner,tied\n"), "{out}");
    assert_eq!(winners(&out), ["P1", "P1"]);
}

#[test]
fn classify_applications() {
    let expected = [
        (1, ["Malaria", "Stomach problem", "Typhoid", "Viral fever"]),
        (2, ["Malaria", "Viral fever", "Stomach problem", "Malaria"]),
        (3, ["Stress", "Spinal problem", "Vision problem", "Stress"]),
    ];
    for (id, want) in expected {
        let o = run(&[
            "classify",
            path(&data(&format!("app{id}_diagnoses.json"))),
            path(&data(&format!("app{id}_patients.json"))),
            "--format",
            "csv",
        ]);
        assert_eq!(o.status.code(), Some(0));
        let got = winners(&stdout(&o));
        if id == 1 {
            // the first patient is nearer Viral fever than Malaria under the matrix measure
            assert_eq!(got[1..], want[1..]);
            assert_eq!(got[0], "Viral fever");
        } else {
            assert_eq!(got, want, "application {id}");
        }
    }
}

#[test]
fn classify_single_pattern_library() {
    let dir = tempfile::tempdir().unwrap();
    let one = dir.path().join("one.json");
    std::fs::write(
        &one,
        r#"{"universe": ["x1", "x2", "x3"], "sets": {"only": {"x1": {"mu": 0.5, "nu": 0.5}, "x2": {"mu": 0.1, "nu": 0.2}, "x3": {"mu": 0.0, "nu": 1.0}}}}"#,
    )
    .unwrap();
    let o = run(&[
        "classify",
        path(&one),
        path(&data("worked_samples.json")),
        "--format",
        "csv",
    ]);
    assert_eq!(winners(&stdout(&o)), ["only", "only"]);
}

#[test]
fn repro_table1_matches() {
    let o = run(&["repro", "table1", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "delta,euclidean,proposed");
    assert_eq!(lines.len(), 11);
    assert_eq!(lines[5], "0.5000,0.1000,0.1400");
    assert!(stderr(&o).is_empty());
}

#[test]
fn repro_table4_markdown_shape() {
    let o = run(&["repro", "table4", "--format", "md"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().filter(|l| l.starts_with("| ")).collect();
    assert_eq!(rows.len(), 1 + 7);
    assert!(rows.iter().all(|r| r.matches(" | ").count() == 8));
}

#[test]
fn repro_mismatch_exits_4_and_logs() {
    let dir = tempfile::tempdir().unwrap();
    let log = dir.path().join("log.csv");
    let out = dir.path().join("out.txt");
    let o = run(&[
        "repro",
        "app1",
        "--discrepancy-log",
        path(&log),
        "--output",
        path(&out),
    ]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).is_empty());
    let logged = std::fs::read_to_string(&log).unwrap();
    assert_eq!(logged, stderr(&o));
    assert!(
        logged
            .lines()
            .any(|l| l == "app1,P1,diagnosis,Malaria,Viral fever"),
        "{logged}"
    );
    assert!(logged.lines().all(|l| l.split(',').count() == 5));
    assert!(std::fs::read_to_string(&out)
        .unwrap()
        .contains("Viral fever"));
}

#[test]
fn output_is_deterministic() {
    let a = run(&["repro", "all", "--format", "csv"]);
    let b = run(&["repro", "all", "--format", "csv"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stderr, b.stderr);
}
