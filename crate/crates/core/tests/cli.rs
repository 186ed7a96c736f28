use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join(name)
}

fn credence(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_credence"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_temp(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("credence-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn tutorial_matches_golden() {
    let kb = data("data/tutorial.kb");
    let out = credence(&["run", kb.to_str().unwrap()]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let golden = std::fs::read(data("golden/tutorial.txt")).unwrap();
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&golden)
    );
}

#[test]
fn output_is_byte_identical_across_runs() {
    let kb = data("data/tutorial.kb");
    for format in ["text", "json"] {
        let a = credence(&["run", kb.to_str().unwrap(), "--format", format]);
        let b = credence(&["run", kb.to_str().unwrap(), "--format", format]);
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn json_output_is_one_object_per_line() {
    let kb = data("data/tutorial.kb");
    let out = credence(&[
        "run",
        kb.to_str().unwrap(),
        "--format",
        "json",
        "--precision",
        "3",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let kinds: Vec<String> = text
        .lines()
        .map(|l| {
            let v: serde_json::Value = serde_json::from_str(l).unwrap();
            v["kind"].as_str().unwrap().to_string()
        })
        .collect();
    assert_eq!(kinds, ["dist", "alpha_report", "poss", "cert"]);
    assert!(text.contains("\"value\":0.800"));
}

#[test]
fn check_reports_grade_error_with_position() {
    let kb = data("data/bad_grade.kb");
    let out = credence(&["check", kb.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2, column 16"), "{err}");
    assert!(err.contains("grade outside [0,1]"), "{err}");
}

#[test]
fn check_accepts_valid_document() {
    let kb = data("data/tutorial.kb");
    let out = credence(&["check", kb.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("ok:"));
}

#[test]
fn semantic_error_exits_with_one() {
    let path = write_temp(
        "orphan.kb",
        "universe X = a, b\nset A on X = a:1\nprop P : V is A relcred priority 2\nquery dist\n",
    );
    let out = credence(&["run", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("preeminent"));
}

#[test]
fn run_with_parse_error_exits_with_two() {
    let path = write_temp("syntax.kb", "universe X = a\nquery nonsense\n");
    let out = credence(&["run", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2, column 7"));
}

#[test]
fn relative_credibility_document() {
    let path = write_temp(
        "relative.kb",
        "\
universe X = a, b, c
set A1 on X = a:1, b:0.3
set E on X = c:1
set Q on X = a:1, b:0.5
prop P1 : V is A1
prop P2 : V is E relcred priority 2
query dist
query entails Q
query cert Q
",
    );
    let out = credence(&["run", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "dist: a=1.000000 b=0.300000 c=0.000000\nentails Q = true\ncert Q = 0.700000\n"
    );
}
