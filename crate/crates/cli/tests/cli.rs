use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn golden(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(rel)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kupershmidt"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(rel: &str) -> String {
    golden(rel).to_str().unwrap().to_string()
}

fn json_files(dir: &Path) -> Vec<PathBuf> {
    let mut out: Vec<PathBuf> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    out.sort();
    out
}

#[test]
fn golden_files_round_trip_byte_for_byte() {
    let mut files = json_files(&golden(""));
    files.extend(json_files(&golden("catalog")));
    assert!(files.len() >= 10);
    for f in files {
        let out = run(&["fmt", f.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{}", f.display());
        assert_eq!(
            stdout(&out),
            fs::read_to_string(&f).unwrap(),
            "{}",
            f.display()
        );
    }
}

#[test]
fn catalog_exports_match_golden() {
    for f in json_files(&golden("catalog")) {
        let name = f.file_stem().unwrap().to_str().unwrap();
        let out = run(&["catalog", "export", name]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out), fs::read_to_string(&f).unwrap(), "{name}");
    }
}

#[test]
fn reformatting_scrambled_input_is_canonical() {
    let dir = tempfile::tempdir().unwrap();
    let messy = dir.path().join("messy.json");
    fs::write(
        &messy,
        r#"{"schema":"leibniz-spec/1","objects":{"alg":{"kind":"algebra","dim":2,
        "brackets":[{"j":1,"i":1,"value":["1","0"]},{"value":["1","0"],"i":1,"j":0}]},
        "R":{"matrix":[["0","1"],["0","-1"]],"kind":"operator"}},"field":"Q"}"#,
    )
    .unwrap();
    let out = run(&["fmt", messy.to_str().unwrap()]);
    assert_eq!(stdout(&out), fs::read_to_string(golden("l2.json")).unwrap());
}

#[test]
fn exit_codes() {
    let cases: &[(&[&str], i32)] = &[
        (&["check", &path("l2.json"), "alg", "leibniz"], 0),
        (&["check", &path("l2.json"), "R", "rota-baxter"], 0),
        (&["check", &path("l2.json"), "R", "nijenhuis"], 0),
        (&["check", &path("broken.json"), "alg", "leibniz"], 1),
        (
            &[
                "--field",
                "F5",
                "--budget",
                "10",
                "search",
                &path("big.json"),
            ],
            1,
        ),
        (&["check", &path("nope.json"), "alg", "leibniz"], 2),
        (&["check", &path("l2.json"), "alg", "no-such-check"], 2),
        (&["check", &path("l2.json"), "missing", "leibniz"], 2),
        (
            &[
                "--format",
                "yaml",
                "check",
                &path("l2.json"),
                "alg",
                "leibniz",
            ],
            2,
        ),
        (&["suite", "trivial"], 0),
        (&["catalog", "export", "no-such-entry"], 2),
    ];
    for (args, code) in cases {
        assert_eq!(run(args).status.code(), Some(*code), "{args:?}");
    }
}

#[test]
fn malformed_json_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{ not json").unwrap();
    let out = run(&["check", bad.to_str().unwrap(), "alg", "leibniz"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn outputs_match_expected_golden() {
    let cases: &[(&[&str], &str)] = &[
        (
            &[
                "--format",
                "json",
                "check",
                &path("broken.json"),
                "alg",
                "leibniz",
            ],
            "broken-leibniz.json",
        ),
        (
            &[
                "--field",
                "F2",
                "--format",
                "json",
                "search",
                &path("l2.json"),
            ],
            "l2-nijenhuis-f2.json",
        ),
        (
            &[
                "--field",
                "F2",
                "--format",
                "json",
                "search",
                &path("abelian2.json"),
                "--predicate",
                "rota-baxter",
            ],
            "abelian2-rota-baxter-f2.json",
        ),
        (
            &["construct", &path("l2.json"), "subadjacent", "--K", "R"],
            "l2-subadjacent.json",
        ),
        (
            &[
                "construct",
                &path("l2.json"),
                "dual-rep",
                "--rep",
                "regular",
            ],
            "l2-dual-rep.json",
        ),
    ];
    for (args, file) in cases {
        let expected = fs::read_to_string(golden(&format!("expected/{file}"))).unwrap();
        assert_eq!(stdout(&run(args)), expected, "{file}");
    }
}

#[test]
fn search_is_independent_of_worker_count() {
    for (file, predicate, field) in [
        ("l2.json", "nijenhuis", "F3"),
        ("abelian2.json", "rota-baxter", "F3"),
        ("l2.json", "kupershmidt", "F2"),
    ] {
        let go = |w: &str| {
            let out = run(&[
                "--field",
                field,
                "--format",
                "json",
                "--workers",
                w,
                "search",
                &path(file),
                "--predicate",
                predicate,
            ]);
            assert_eq!(out.status.code(), Some(0));
            stdout(&out)
        };
        let one = go("1");
        assert_eq!(one, go("4"), "{file} {predicate}");
        assert_eq!(one, go("1"), "{file} {predicate}");
    }
}

#[test]
fn constructed_file_checks_clean() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("sub.json");
    let out = run(&[
        "construct",
        &path("l2.json"),
        "subadjacent",
        "--K",
        "R",
        "-o",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let check = run(&[
        "check",
        out_path.to_str().unwrap(),
        "subadjacent",
        "leibniz",
    ]);
    assert_eq!(check.status.code(), Some(0));
}

#[test]
fn construct_rejects_failed_hypothesis() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("s.json");
    let text = fs::read_to_string(golden("l2.json"))
        .unwrap()
        .replace(r#"["0", "-1"]"#, r#"["0", "1"]"#);
    fs::write(&spec, text).unwrap();
    let out = run(&["construct", spec.to_str().unwrap(), "induced", "--K", "R"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn check_json_lists_violations() {
    let out = run(&[
        "--format",
        "json",
        "check",
        &path("broken.json"),
        "alg",
        "leibniz",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["ok"], false);
    assert_eq!(v["violations"][0]["indices"], serde_json::json!([0, 0, 0]));
}

#[test]
fn every_catalog_suite_passes() {
    let list = stdout(&run(&["catalog", "list"]));
    let names: Vec<&str> = list
        .lines()
        .filter_map(|l| l.split_whitespace().next())
        .collect();
    assert_eq!(names.len(), 9);
    for name in names {
        let out = run(&["suite", name]);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", stdout(&out));
    }
}

#[test]
fn full_suite_fails_only_on_singular_combined_bracket() {
    let out = run(&["--format", "json", "suite", "--all"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for (group, tally) in v["groups"].as_object().unwrap() {
        if group != "tilde-varrho-bracket" {
            assert_eq!(tally["failed"], 0, "{group}");
        }
    }
    assert!(
        v["groups"]["tilde-varrho-bracket"]["failed"]
            .as_u64()
            .unwrap()
            > 0
    );
    for f in v["failures"].as_array().unwrap() {
        assert!(
            f.as_str()
                .unwrap()
                .contains("combined bracket is Leibniz (K is singular)"),
            "{f}"
        );
    }
    assert_eq!(v["missing_negatives"], serde_json::json!([]));
    for e in v["entries"].as_array().unwrap() {
        assert_eq!(e["mismatches"], serde_json::json!([]), "{}", e["name"]);
    }
}
