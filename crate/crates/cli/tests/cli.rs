use std::process::{Command, Output};

fn bartab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bartab"))
        .args(args)
        .env_remove("BARTAB_CACHE_DIR")
        .output()
        .expect("run bartab")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn srank_examples() {
    let out = bartab(&["srank", "--shape", "9,7,6,3,1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).lines().any(|l| l == "srank 4"));

    let out = bartab(&["srank", "--shape", "4,3,2", "--check"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.lines().any(|l| l == "srank 3"));
    assert!(text.lines().any(|l| l == "search 3"));
    assert!(text.contains("formula and search agree"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["srank", "--shape", "4,4"][..],
        &["srank", "--shape", "4,x"],
        &["srank"],
        &["qfun", "--shape", "2,2,1"],
        &["chartable", "--n", "6", "--format", "json"],
        &["verify", "--suites", "srank,nonsense"],
        &["verify", "--n", "13", "--suites", "qdegree"],
        &["chartable", "--n", "40"],
        &["tableaux", "--shape", "5,1", "--type", "4,2"],
        &["nonsense"],
    ] {
        let out = bartab(args);
        assert_eq!(code(&out), 2, "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn chartable_weight_six() {
    let out = bartab(&["chartable", "--n", "6"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n = 6");
    let header: Vec<&str> = lines[1]
        .split("  ")
        .map(str::trim)
        .filter(|c| !c.is_empty())
        .collect();
    assert_eq!(header[1..5], ["5,1", "3,3", "3,1,1,1", "1,1,1,1,1,1"]);
    let row: Vec<&str> = lines
        .iter()
        .find(|l| l.trim_start().starts_with("5,1 "))
        .unwrap()
        .split_whitespace()
        .collect();
    assert_eq!(row, ["5,1", "-1", "-2", "2", "16", "."]);

    let out = bartab(&["chartable", "--n", "6", "--format", "records"]);
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("#schema=bartab.chartable/1"));
    for line in [
        "6\t5,1\t1,1,1,1,1,1\tinteger\t16",
        "6\t5,1\t3,1,1,1\tinteger\t2",
        "6\t5,1\t5,1\tinteger\t-1",
        "6\t5,1\t3,3\tinteger\t-2",
        "6\t3,2,1\t3,2,1\tsurd\t± i^2 sqrt(3/1)",
    ] {
        assert!(text.lines().any(|l| l == line), "{line}");
    }
}

#[test]
fn chartable_weight_zero() {
    let out = bartab(&["chartable", "--n", "0", "--format", "records"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let data: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(data, ["0\t-\t-\tinteger\t1"]);
}

#[test]
fn qfun_examples() {
    let out = bartab(&["qfun", "--shape", "5,1", "--specialize"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let expected = "-4/5 · p_{5,1} - 4/9 · p_{3,3} + 8/9 · p_{3,1,1,1} + 16/45 · p_{1,1,1,1,1,1}";
    assert!(text.contains(&format!("Q_{{5,1}} inductive  = {expected}")));
    assert!(text.contains(&format!("Q_{{5,1}} characters = {expected}")));
    assert!(text.contains("definitions agree"));
    assert!(text.contains("divisible by t^2: yes"));
    assert!(text.lines().any(|l| l == "srank 2"));
    assert!(text.lines().any(|l| l == "t-order 2"));

    let out = bartab(&["qfun", "--shape", "2,1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("Q_{2,1} inductive  = -4/3 · p_{3} + 4/3 · p_{1,1,1}"));

    let out = bartab(&["qfun", "--shape", "2,1", "--format", "records"]);
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("#schema=bartab.powersum/1"));
    assert!(text.lines().any(|l| l == "3\t-4\t3"));
}

#[test]
fn tableaux_listing_and_weight_sum() {
    let out = bartab(&["tableaux", "--shape", "5,1", "--type", "3,3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.lines().any(|l| l == "weight sum -2"));
    assert!(text.lines().any(|l| l == "character -2"));

    let out = bartab(&["tableaux", "--shape", "9,7,6,3,1", "--minimal", "--count"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.lines().any(|l| l == "srank 4"));
    assert!(text.lines().any(|l| l.starts_with("count ")));
}

#[test]
fn verify_suites() {
    let out = bartab(&["verify", "--suites", "qdegree", "--n", "12"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let out = bartab(&["verify", "--suites", "srank", "--n", "12"]);
    assert_eq!(code(&out), 0);
    let out = bartab(&["verify", "--suites", "vanishing", "--n", "10"]);
    assert_eq!(code(&out), 0);
    let out = bartab(&["verify"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    for suite in ["srank", "vanishing", "qdegree", "lemmas", "independence"] {
        assert!(
            text.lines()
                .any(|l| l.starts_with(suite) && l.ends_with("pass")),
            "{suite}"
        );
    }
    assert_eq!(text.lines().last(), Some("overall pass"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["verify"][..],
        &["chartable", "--n", "9"],
        &["chartable", "--n", "9", "--format", "records"],
        &["qfun", "--shape", "4,3,1", "--specialize"],
        &["tableaux", "--shape", "4,2,1"],
    ] {
        let a = bartab(args);
        let b = bartab(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn cache_does_not_change_output() {
    let dir = tempfile::tempdir().unwrap();
    let dir_arg = dir.path().to_str().unwrap();
    for format in ["text", "records"] {
        let plain = bartab(&["chartable", "--n", "8", "--format", format]);
        let cold = bartab(&[
            "chartable",
            "--n",
            "8",
            "--format",
            format,
            "--cache-dir",
            dir_arg,
        ]);
        let warm = bartab(&[
            "chartable",
            "--n",
            "8",
            "--format",
            format,
            "--cache-dir",
            dir_arg,
        ]);
        assert_eq!(plain.stdout, cold.stdout);
        assert_eq!(plain.stdout, warm.stdout);
    }
    assert!(dir.path().join("chartable-8.tsv").exists());

    // the environment variable is honoured and a damaged file is rebuilt
    std::fs::write(dir.path().join("chartable-7.tsv"), "not a cache\n").unwrap();
    let plain = bartab(&["chartable", "--n", "7"]);
    let via_env = Command::new(env!("CARGO_BIN_EXE_bartab"))
        .args(["chartable", "--n", "7"])
        .env("BARTAB_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(plain.stdout, via_env.stdout);
    let rebuilt = std::fs::read_to_string(dir.path().join("chartable-7.tsv")).unwrap();
    assert!(rebuilt.starts_with("#schema=bartab.chartable/1\n"));
}
