use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use serde_json::Value;

fn rck(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rck"))
        .args(args)
        .env_remove("RCK_WORKERS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn records(stdout: &str) -> Vec<Value> {
    stdout.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests").join(name);
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn arrow_on_constructions() {
    let (code, out, _) = rck(&["arrow", "--spec", "3,3", "--construct", "kn:6"], "");
    assert_eq!(code, 0);
    let r = &records(&out)[0];
    assert_eq!(r["verdict"], "arrows");
    assert_eq!(r["witness"], Value::Null);

    let dir = scratch("witness");
    let (code, out, _) = rck(
        &["arrow", "--spec", "3,4", "--construct", "kn:8", "--witness-dir", dir.to_str().unwrap()],
        "",
    );
    assert_eq!(code, 0);
    let r = &records(&out)[0];
    assert_eq!(r["verdict"], "not-arrows");
    let text = std::fs::read_to_string(dir.join("000000.txt")).unwrap();
    let coloring = rck_core::EdgeColoring::from_text(&text, 2).unwrap();
    assert_eq!(coloring.color_word(), r["witness"].as_str().unwrap());
    assert!(rck_core::is_critical(coloring.host(), &coloring, &"3,4".parse().unwrap()).unwrap());
}

#[test]
fn record_fields_keep_their_order() {
    let (_, out, _) = rck(&["arrow", "--spec", "3,3", "--construct", "kn:5"], "");
    let keys: Vec<&str> = out.trim().split("\":").map(|s| s.rsplit('"').next().unwrap()).collect();
    let expected = ["g6", "spec", "verdict", "delta", "chi", "edges", "ht_bound", "witness", "lemmas", "stats"];
    let positions: Vec<usize> = expected
        .iter()
        .map(|k| keys.iter().position(|x| x == k).unwrap_or_else(|| panic!("{k} missing")))
        .collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "{out}");
}

#[test]
fn empty_input_gives_no_records() {
    let (code, out, _) = rck(&["arrow", "--spec", "3,3"], "");
    assert_eq!((code, out.as_str()), (0, ""));
}

#[test]
fn stream_keeps_input_order() {
    let input = "E~~w\nD~{\n\nE^~w\n";
    let (code, out, _) = rck(&["arrow", "--spec", "3,3", "--workers", "4"], input);
    assert_eq!(code, 0);
    let verdicts: Vec<(String, String)> = records(&out)
        .iter()
        .map(|r| (r["g6"].as_str().unwrap().to_string(), r["verdict"].as_str().unwrap().to_string()))
        .collect();
    assert_eq!(
        verdicts,
        [("E~~w", "arrows"), ("D~{", "not-arrows"), ("E^~w", "not-arrows")].map(|(a, b)| (a.into(), b.into()))
    );
}

#[test]
fn malformed_input_exits_with_two() {
    let (code, out, err) = rck(&["arrow", "--spec", "3,3"], "D~{\nnot graph6!\n");
    assert_eq!(code, 2);
    assert_eq!(records(&out).len(), 1);
    assert!(err.contains("line 2"), "{err}");
    let (code, _, _) = rck(&["arrow", "--spec", "3,x", "--construct", "kn:3"], "");
    assert_eq!(code, 2);
    let (code, _, _) = rck(&["arrow", "--spec", "3,3", "--construct", "petersen"], "");
    assert_eq!(code, 2);
}

#[test]
fn node_limit_exits_with_three() {
    let (code, out, _) = rck(&["arrow", "--spec", "3,4", "--construct", "kn:9", "--node-limit", "100"], "");
    assert_eq!(code, 3);
    assert_eq!(records(&out)[0]["verdict"], "indeterminate");
}

#[test]
fn cocritical_examples() {
    let (code, out, _) = rck(
        &["cocritical", "--spec", "3,3", "--construct", "k6minus", "--minimal", "--lemmas"],
        "",
    );
    assert_eq!(code, 0);
    let r = &records(&out)[0];
    assert_eq!(r["verdict"], "cocritical");
    assert_eq!(r["minimal"], true);
    assert!(r["lemmas"].as_array().unwrap().iter().all(|f| f["holds"] == true));

    let (code, out, _) = rck(&["cocritical", "--spec", "3,4", "--construct", "hanson-toft:3,4:9"], "");
    assert_eq!(code, 0);
    let r = &records(&out)[0];
    assert_eq!((r["verdict"].as_str(), r["delta"].as_u64()), (Some("cocritical"), Some(7)));
    assert_eq!(r["ht_bound"], 35);

    let (code, _, err) = rck(&["cocritical", "--spec", "3,3", "--construct", "kn:6"], "");
    assert_eq!(code, 2);
    assert!(err.contains("complete"), "{err}");

    let (code, out, _) = rck(&["cocritical", "--spec", "3,3"], "Dhc\n");
    assert_eq!(code, 0);
    let r = &records(&out)[0];
    assert_eq!(r["verdict"], "not-cocritical");
    let g = rck_core::parse_graph6("Dhc").unwrap();
    let s33 = "3,3".parse().unwrap();
    let least = g
        .non_edges()
        .into_iter()
        .find(|&e| !rck_core::arrows(&g.add_edge(e).unwrap(), &s33).unwrap().arrows)
        .unwrap();
    assert_eq!(r["failing_edge"], serde_json::json!([least.u, least.v]));
}

#[test]
fn saturated_examples() {
    let (code, out, _) = rck(&["saturated", "--t", "4", "--construct", "kn:3"], "");
    assert_eq!(code, 0);
    assert_eq!(records(&out)[0]["verdict"], "vacuous-complete");
    let (_, out, _) = rck(&["saturated", "--t", "3", "--construct", "kn:3"], "");
    assert_eq!(records(&out)[0]["verdict"], "not-free");
    let (_, out, _) = rck(&["saturated", "--t", "3"], "D??\n");
    let r = &records(&out)[0];
    assert_eq!(r["verdict"], "not-saturated");
    assert_eq!(r["violating_non_edge"], serde_json::json!([0, 1]));
    let (_, out, _) = rck(&["saturated", "--t", "3"], "D??\nDhc\n");
    let r = &records(&out)[1];
    assert_eq!((r["verdict"].as_str(), r["hajnal"].as_bool()), (Some("saturated"), Some(true)));
}

#[test]
fn scan_small_corpus() {
    let (code, corpus, _) = rck(&["gen", "6"], "");
    assert_eq!(code, 0);
    assert_eq!(corpus.lines().count(), 156);
    let (code, out, _) = rck(&["scan", "--spec", "3,3"], &corpus);
    assert_eq!(code, 0);
    let s: Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(s["cocritical"], 1);
    assert_eq!(s["min_delta"], 4);
    assert_eq!(s["cocritical_forms"], serde_json::json!(["E^~w"]));

    let (code, corpus4, _) = rck(&["gen", "4"], "");
    assert_eq!(code, 0);
    let (code, out, _) = rck(&["scan", "--spec", "2,3", "--oracle"], &corpus4);
    assert_eq!(code, 0);
    let s: Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(s["oracle_mismatches"], 0);
    assert_eq!(s["oracle_agreements"], 10);
}

#[test]
fn text_output_and_out_file() {
    let dir = scratch("out");
    let path = dir.join("report.txt");
    let (code, out, _) = rck(
        &["arrow", "--spec", "3,3", "--construct", "kn:5", "--text", "--out", path.to_str().unwrap()],
        "",
    );
    assert_eq!((code, out.as_str()), (0, ""));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("D~{ [3,3] not-arrows delta=4"), "{text}");
}

#[test]
fn timing_is_opt_in() {
    let (_, plain, _) = rck(&["arrow", "--spec", "3,3", "--construct", "kn:6"], "");
    assert!(!plain.contains("elapsed_ms"));
    let (_, timed, _) = rck(&["arrow", "--spec", "3,3", "--construct", "kn:6", "--timing"], "");
    assert!(timed.contains("elapsed_ms"));
}

#[test]
fn workers_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_rck"))
        .args(["arrow", "--spec", "3,3", "--construct", "kn:6"])
        .env("RCK_WORKERS", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_rck"))
        .args(["arrow", "--spec", "3,3", "--construct", "kn:6"])
        .env("RCK_WORKERS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}
