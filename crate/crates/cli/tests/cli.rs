use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn cwalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cwalg")).args(args).env_remove("CWALG_CACHE_DIR").output().unwrap()
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn scratch_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cwalg-cli-test-{name}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    dir
}

#[test]
fn bell_g2_row_as_csv() {
    let out = cwalg(&["bell", "G2", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "type,group_order,bell_parabolic,bell_closed,bell_full,algebra_rank\nG2,12,8,12,13,156\n"
    );
}

#[test]
fn bell_e6_and_a6() {
    let out = cwalg(&["bell", "E6", "A6", "--jobs", "2"]);
    assert!(out.status.success());
    let docs = json_lines(&out);
    assert_eq!(docs[0]["type"], "E6");
    let e6 = &docs[0]["result"];
    assert_eq!(
        (e6["bell_parabolic"].as_u64(), e6["bell_closed"].as_u64(), e6["bell_full"].as_u64()),
        (Some(4598), Some(5079), Some(5079))
    );
    assert_eq!(e6["algebra_rank"], 263295360u64);
    assert_eq!(docs[1]["result"]["bell_full"], 877);
}

#[test]
fn output_is_reproducible() {
    let a = cwalg(&["bell", "B3", "H3"]);
    let b = cwalg(&["bell", "B3", "H3"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(json_lines(&a).iter().all(|d| d["elapsed_ms"] == 0));
}

#[test]
fn exit_codes() {
    assert_eq!(cwalg(&["bell", "X4"]).status.code(), Some(4));
    assert_eq!(cwalg(&["bell", "E8"]).status.code(), Some(2));
    assert_eq!(cwalg(&["dim", "A2", "--u", "symbolic", "--mod-p"]).status.code(), Some(4));
    assert_eq!(cwalg(&["dim", "A3", "--u", "3", "--cap", "10"]).status.code(), Some(2));
    assert_eq!(cwalg(&["bell", "D4", "--max-classes", "20"]).status.code(), Some(2));
}

#[test]
fn lattice_cache_is_reused() {
    let dir = scratch_dir("cache");
    let run = || {
        let out = Command::new(env!("CARGO_BIN_EXE_cwalg"))
            .args(["bell", "F4"])
            .env("CWALG_CACHE_DIR", &dir)
            .output()
            .unwrap();
        assert!(out.status.success());
        json_lines(&out).remove(0)
    };
    let first = run();
    let second = run();
    assert_eq!(first["cache_hit"], false);
    assert_eq!(second["cache_hit"], true);
    assert_eq!(first["result"], second["result"]);
    assert_eq!(second["result"]["bell_full"], 637);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn yokonuma_check() {
    let out = cwalg(&["check", "y", "3", "3"]);
    assert!(out.status.success());
    let doc = &json_lines(&out)[0]["result"];
    assert_eq!(doc["braids_ties_dimension"], 30);
    assert_eq!(doc["relations"]["holds"], true);
}

#[test]
fn braid_image_dimension_a3() {
    let out = cwalg(&["dim", "A3", "--lambda", "0", "--u", "17", "--mod-p"]);
    assert!(out.status.success());
    assert_eq!(json_lines(&out)[0]["result"]["dimension"], 217);
}

#[test]
fn ishii_symbolic() {
    let out = cwalg(&["ishii", "--symbolic"]);
    assert!(out.status.success());
    let doc = &json_lines(&out)[0]["result"];
    assert!(["relation1", "relation2", "cubic"].iter().all(|k| doc[*k] == true));
}

#[test]
fn monoid_a2() {
    let out = cwalg(&["monoid", "A2", "--words", "100"]);
    assert!(out.status.success());
    let doc = &json_lines(&out)[0]["result"];
    assert_eq!(doc["positive"], true);
    assert_eq!(doc["words_checked"], 100);
}

#[test]
fn spectrum_text_output() {
    let out = cwalg(&["spectrum", "--format", "text"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("spectrum A1\n"));
    assert!(text.contains("discriminant.normalization: 1"));
}

#[test]
fn corrupted_cache_is_rebuilt() {
    let dir = scratch_dir("corrupt");
    let run = || {
        let out = Command::new(env!("CARGO_BIN_EXE_cwalg"))
            .args(["bell", "B2"])
            .env("CWALG_CACHE_DIR", &dir)
            .output()
            .unwrap();
        assert!(out.status.success());
        json_lines(&out).remove(0)
    };
    run();
    for entry in std::fs::read_dir(&dir).unwrap() {
        std::fs::write(entry.unwrap().path(), "not a lattice\n").unwrap();
    }
    let rebuilt = run();
    assert_eq!(rebuilt["cache_hit"], false);
    assert_eq!(rebuilt["result"]["bell_full"], 8);
    assert_eq!(run()["cache_hit"], true);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn positional_scalar_kind() {
    let out = cwalg(&["check", "cw", "A2", "symbolic", "--flavor", "parabolic"]);
    assert!(out.status.success());
    assert_eq!(json_lines(&out)[0]["result"]["parabolic"]["holds"], true);
}
