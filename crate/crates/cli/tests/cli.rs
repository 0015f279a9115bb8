use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn rectlr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rectlr"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = rectlr(&full);
    (serde_json::from_slice(&out.stdout).unwrap(), out.status.code().unwrap())
}

#[test]
fn expand_examples() {
    let out = rectlr(&["expand", "2", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "2-2:1\n3-1:1\n4:1\n");
    assert_eq!(stdout(&rectlr(&["expand", "0", "0"])), "0:1\n");
    assert_eq!(stdout(&rectlr(&["expand", "2-1", "1"])).lines().count(), 3);
}

#[test]
fn parse_errors_exit_two() {
    for args in [
        &["expand", "2-x", "1"][..],
        &["pairs", "3by3"],
        &["rank", "2x2", "--prime", "1000003"],
        &["rank", "2x2", "--prime", "2147483649"],
        &["witness", "2x2", "--word", "hh"],
        &["witness", "2x2", "--word", "hq"],
        &["eliminate", "2x2", "--jobs", "0"],
    ] {
        let out = rectlr(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let out = rectlr(&["expand", "2-x", "1"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("2-x"));
}

#[test]
fn pairs_and_witnesses() {
    let (v, code) = json(&["pairs", "8x8"]);
    assert_eq!((v["count"].as_u64(), code), (Some(6470), 0));
    let (v, _) = json(&["witness", "4x6", "--word", "hvvhv"]);
    assert_eq!(v["lambda"], "6-4-2");
    assert_eq!(v["coefficient"], 1);
    let (v, _) = json(&["witness", "2x2", "--word", "hv"]);
    assert_eq!(v["witness"], "4");
}

#[test]
fn verify_theorem_counts() {
    for (rect, n) in [("2x2", 2), ("1x1", 1), ("4x6", 10)] {
        let (v, code) = json(&["verify-theorem", rect]);
        assert_eq!(code, 0);
        assert_eq!(v["certificates"].as_array().unwrap().len(), n, "{rect}");
    }
}

#[test]
fn eliminate_examples() {
    let (v, code) = json(&["eliminate", "2x2"]);
    assert_eq!(code, 0);
    let sizes: Vec<usize> = v["rounds"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["eliminated"].as_array().unwrap().len())
        .collect();
    assert_eq!(sizes, [2, 1, 1]);
    let (v, code) = json(&["eliminate", "1x2"]);
    assert_eq!((v["status"].as_str(), code), (Some("empty"), 0));
    let (v, code) = json(&["eliminate", "5x5", "--jobs", "8", "--require-unit-coeff"]);
    assert_eq!(code, 0);
    assert!(v["leftover"].as_array().unwrap().is_empty());
}

#[test]
fn rank_examples() {
    for (rect, n) in [("2x2", 4), ("1x5", 3), ("3x3", 10)] {
        let (v, code) = json(&["rank", rect]);
        assert_eq!(code, 0);
        assert_eq!(v["rank"], n);
        assert_eq!(v["rows"], n);
        assert_eq!(v["certified"], true);
    }
    let (v, _) = json(&["rank", "2x3", "--prime", "2147483587"]);
    assert_eq!(v["prime"], 2147483587u64);
}

#[test]
fn counterexamples_confirmed() {
    let out = rectlr(&["counterexamples"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).matches(": confirmed").count(), 2);
}

#[test]
fn reports_do_not_depend_on_jobs() {
    for cmd in [&["eliminate", "4x5"][..], &["rank", "4x4"], &["verify-theorem", "5x4"]] {
        let mut one = vec!["--format", "json", "--jobs", "1"];
        one.extend_from_slice(cmd);
        let mut many = vec!["--format", "json", "--jobs", "4"];
        many.extend_from_slice(cmd);
        assert_eq!(rectlr(&one).stdout, rectlr(&many).stdout, "{cmd:?}");
    }
}

#[test]
fn cache_dir_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let cache_arg = cache.to_str().unwrap();
    let out_path = dir.path().join("trace.json");
    let out_arg = out_path.to_str().unwrap();

    let first = rectlr(&[
        "--cache-dir",
        cache_arg,
        "--format",
        "json",
        "--out",
        out_arg,
        "eliminate",
        "3x4",
    ]);
    assert_eq!(first.status.code(), Some(0));
    assert!(first.stdout.is_empty());
    let written = fs::read(&out_path).unwrap();
    assert!(cache.join("deg12.lrcache").exists());

    let second = rectlr(&["--cache-dir", cache_arg, "--format", "json", "eliminate", "3x4"]);
    assert_eq!(second.stdout, written);

    let file = cache.join("deg12.lrcache");
    let damaged = fs::read_to_string(&file).unwrap().replacen(":1", ":7", 1);
    fs::write(&file, damaged).unwrap();
    let third = rectlr(&["--cache-dir", cache_arg, "--format", "json", "eliminate", "3x4"]);
    assert_eq!(third.stdout, written);
    assert!(String::from_utf8_lossy(&third.stderr).contains("damaged cache file"));
}
