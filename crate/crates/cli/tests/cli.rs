use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use soembed::codes::{parse_code_file, write_code_file, write_hex_file};
use soembed::fixtures;
use soembed::LinearCode;

fn soembed(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_soembed"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn records(o: &Output) -> Vec<Value> {
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn params(r: &Value) -> Vec<u64> {
    r["params"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect()
}

fn temp(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

#[test]
fn info_lines() {
    let o = soembed(&["info", "--hamming", "4"]);
    assert_eq!(
        stdout(&o).trim(),
        "n=15 k=11 d=3 hull=4 odd dual-containing predict_m=7"
    );
    let o = soembed(&["info", "--simplex", "3"]);
    assert!(stdout(&o).trim().ends_with("self-orthogonal predict_m=0"));
    let src = LinearCode::from_strs(fixtures::EX1_G).unwrap();
    let path = temp("ex1.code", &write_code_file(&src));
    let o = soembed(&["info", path.to_str().unwrap()]);
    let line = stdout(&o);
    assert!(line.contains("n=9 k=5 d=3 hull=3"), "{line}");
    assert!(line.trim().ends_with("predict_m=2"), "{line}");
}

#[test]
fn hex_files_are_read() {
    let h = &fixtures::HEX_CODES[0];
    let c = soembed::codes::parse_hex(h.rows, h.n).unwrap();
    let path = temp("c91.hex", &write_hex_file(&c));
    let o = soembed(&["info", path.to_str().unwrap()]);
    assert!(stdout(&o).starts_with("n=91 k=8 d=42 hull=8 even self-orthogonal"));
}

#[test]
fn embed_records() {
    for (args, expect) in [
        (vec!["--hamming", "3"], vec![8, 4, 4]),
        (vec!["--even", "5"], vec![10, 4, 4]),
    ] {
        let mut full = vec!["embed"];
        full.extend(args);
        let r = records(&soembed(&full));
        assert_eq!(r.len(), 1);
        assert_eq!(params(&r[0]), expect);
    }
    let r = records(&soembed(&["embed", "--rm", "2", "4"]));
    assert_eq!(params(&r[0])[0], 23);
}

#[test]
fn record_fields_in_order() {
    let o = soembed(&["embed", "--hamming", "3"]);
    let line = stdout(&o);
    let keys = [
        "\"params\"",
        "\"weight_distribution\"",
        "\"generator_hex\"",
        "\"strategy\"",
        "\"class_index\"",
    ];
    let pos: Vec<usize> = keys.iter().map(|k| line.find(k).unwrap()).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]), "{line}");
}

#[test]
fn emit_writes_the_embedded_code() {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("emit.code");
    let o = soembed(&["embed", "--even", "4", "--emit", path.to_str().unwrap()]);
    let r = records(&o);
    let c = parse_code_file(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(c.params(), (7, 3));
    assert!(c.is_self_orthogonal());
    assert_eq!(params(&r[0]), vec![7, 3, 4]);
}

#[test]
fn explicit_strategies() {
    let r = records(&soembed(&["embed", "--even", "6", "--strategy", "dfs"]));
    assert_eq!(r[0]["strategy"], "dfs");
    assert_eq!(params(&r[0])[0], 11);
    let o = soembed(&["embed", "--hamming", "3", "--strategy", "even-canonical"]);
    assert_eq!(o.status.code(), Some(2));
    let o = soembed(&["embed", "--hamming", "3", "--strategy", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn search_examples() {
    let r = records(&soembed(&["search", "--even", "4", "--m", "3", "--all"]));
    assert!(!r.is_empty());
    assert!(r.iter().all(|x| params(x) == vec![7, 3, 4]));
    let r = records(&soembed(&["search", "--simplex", "3", "--m", "0"]));
    assert_eq!(r.len(), 1);
    assert_eq!(r[0]["class_index"], 0);
}

#[test]
fn search_is_deterministic_across_threads() {
    let one = soembed(&["search", "--hamming", "4", "--all"]);
    let again = soembed(&["search", "--hamming", "4", "--all"]);
    let four = soembed(&["search", "--hamming", "4", "--all", "--threads", "4"]);
    assert_eq!(records(&one).len(), 2);
    assert_eq!(one.stdout, again.stdout);
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn sweep_examples() {
    let r = records(&soembed(&["sweep", "--hamming", "3"]));
    assert_eq!(r.len(), 1);
    assert_eq!(params(&r[0]), vec![8, 4, 4]);
    let o = soembed(&["sweep", "--orthogroup", "7", "--count-only"]);
    assert_eq!(stdout(&o).trim(), "1451520");
    let o = soembed(&["sweep", "--orthogroup", "4"]);
    assert_eq!(stdout(&o).trim(), "order=48 cosets=2");
}

#[test]
fn verify_fixtures_passes() {
    let o = soembed(&["verify", "--fixtures"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().count(), fixtures::fixture_set().len());
    assert!(out.lines().all(|l| l.starts_with("PASS ")));
    assert!(out.contains("[91,8,42]"));
    assert!(out.contains("[52,26,8]"));
}

#[test]
fn exit_codes() {
    assert_eq!(soembed(&["info"]).status.code(), Some(2));
    assert_eq!(soembed(&["bogus"]).status.code(), Some(2));
    assert_eq!(
        soembed(&["info", "--hamming", "3", "--even", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        soembed(&["sweep", "--orthogroup", "9"]).status.code(),
        Some(3)
    );
    assert_eq!(soembed(&["sweep", "--even", "6"]).status.code(), Some(2));
    let bad = temp("bad.code", "3 2\n101\n01x\n");
    let o = soembed(&["info", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    let missing = soembed(&["info", "/nonexistent/code"]);
    assert_eq!(missing.status.code(), Some(2));
}
