use std::process::{Command, Output};

use serde_json::Value;

fn delkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_delkit"))
        .args(args)
        .env_remove("DELKIT_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = delkit(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn csv_rows(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header = r.headers().unwrap().iter().map(String::from).collect();
    let rows = r.records().map(|rec| rec.unwrap().iter().map(String::from).collect()).collect();
    (header, rows)
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&full)).unwrap()
}

#[test]
fn count_examples() {
    assert_eq!(stdout(&["count", "--y", "11000", "--x", "110"]), "3\n");
    assert_eq!(
        stdout(&["count", "--y", "0000111100001111", "--x", "0011", "--method", "runs"]),
        "300\n"
    );
    assert_eq!(stdout(&["count", "--y", "101", "--x", "101"]), "1\n");
    for method in ["dp", "runs", "oracle"] {
        assert_eq!(stdout(&["count", "--y", "11100", "--x", "110", "--method", method]), "6\n");
    }
}

#[test]
fn count_lists_one_based_masks() {
    let text = stdout(&["count", "--y", "10101", "--x", "101", "--masks"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines, ["4", "{1, 2, 3}", "{1, 2, 5}", "{1, 4, 5}", "{3, 4, 5}"]);
    let v = json(&["count", "--y", "01100", "--x", "110", "--masks", "--method", "oracle"]);
    assert_eq!(v["schema"], "delkit/count/v1");
    assert_eq!(v["weight"], 2);
    assert_eq!(v["masks"], serde_json::json!([[2, 3, 4], [2, 3, 5]]));
}

#[test]
fn distribution_examples() {
    let (header, rows) = csv_rows(&stdout(&["distribution", "--x", "110", "--n", "5"]));
    assert_eq!(header, ["x", "n", "mu", "upsilon", "weight", "count"]);
    let sum: u64 = rows.iter().map(|r| r[4].parse::<u64>().unwrap() * r[5].parse::<u64>().unwrap()).sum();
    assert_eq!(sum, 40);
    assert!(rows.iter().all(|r| r[2] == "40" && r[3] == "16"));

    let (_, rows) = csv_rows(&stdout(&["distribution", "--x", "101", "--n", "5"]));
    assert_eq!(rows.iter().map(|r| r[5].parse::<u64>().unwrap()).sum::<u64>(), 16);

    let (_, rows) = csv_rows(&stdout(&["distribution", "--x", "1", "--n", "1"]));
    assert_eq!(rows.len(), 1);
    assert_eq!(&rows[0][4..], ["1", "1"]);

    let (header, rows) = csv_rows(&stdout(&["distribution", "--x", "110", "--n", "5", "--by-cluster"]));
    assert_eq!(header[4..], ["cluster", "weight", "count"]);
    let per: Vec<u64> = (0..3)
        .map(|c| rows.iter().filter(|r| r[4] == c.to_string()).map(|r| r[6].parse::<u64>().unwrap()).sum())
        .collect();
    assert_eq!(per, [6, 7, 3]);
}

#[test]
fn sweep_examples() {
    let (header, rows) = csv_rows(&stdout(&["sweep", "--m", "5", "--n", "8", "--alpha", "0.5,2"]));
    assert_eq!(header, ["x", "n", "mu", "upsilon", "H", "R_0.5", "R_2", "Hmin"]);
    assert_eq!(rows.len(), 32);
    let xs: Vec<&str> = rows.iter().map(|r| r[0].as_str()).collect();
    let mut sorted = xs.clone();
    sorted.sort();
    assert_eq!(xs, sorted);
    let h = |r: &Vec<String>| r[4].parse::<f64>().unwrap();
    let lowest = rows.iter().map(h).fold(f64::INFINITY, f64::min);
    let argmin: Vec<&str> = rows.iter().filter(|r| h(r) == lowest).map(|r| r[0].as_str()).collect();
    assert_eq!(argmin, ["00000", "11111"]);
    for r in &rows {
        let v: Vec<f64> = r[4..].iter().map(|s| s.parse().unwrap()).collect();
        assert!(v[3] <= v[2] + 1e-9 && v[2] <= v[0] + 1e-9 && v[0] <= v[1] + 1e-9, "{r:?}");
    }

    let trivial = stdout(&["sweep", "--m", "1", "--n", "1"]);
    assert!(!trivial.contains('-'), "{trivial}");
    let (_, rows) = csv_rows(&trivial);
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|r| r[4..].iter().all(|v| v.parse::<f64>().unwrap() == 0.0)));

    let (_, rows) = csv_rows(&stdout(&["sweep", "--m", "3", "--n", "5"]));
    let find = |x: &str| rows.iter().find(|r| r[0] == x).unwrap()[4..].to_vec();
    assert_eq!(find("110"), find("001"));
}

#[test]
fn gchain_examples() {
    let (_, rows) = csv_rows(&stdout(&["gchain", "--x", "101010", "--deletions", "2"]));
    assert_eq!(rows.len(), 6);
    assert_eq!(rows.last().unwrap()[1], "000000");
    let hs: Vec<f64> = rows.iter().map(|r| r[5].parse().unwrap()).collect();
    assert!(hs.windows(2).all(|w| w[0] > w[1]), "{hs:?}");

    let (_, rows) = csv_rows(&stdout(&["gchain", "--x", "0000"]));
    assert_eq!(rows.len(), 1);

    let (_, rows) = csv_rows(&stdout(&["gchain", "--x", "110", "--deletions", "1"]));
    let chain: Vec<&str> = rows.iter().map(|r| r[1].as_str()).collect();
    assert_eq!(chain, ["110", "000"]);
    assert!(rows[0][5].parse::<f64>().unwrap() > rows[1][5].parse::<f64>().unwrap());

    let v = json(&["gchain", "--x", "101010", "--deletions", "2"]);
    assert_eq!(v["schema"], "delkit/gchain/v1");
    assert_eq!(v["n"], 8);
    assert_eq!(v["rows"].as_array().unwrap().len(), 6);
}

#[test]
fn verify_suites() {
    let out = delkit(&["verify", "--suite", "identityB", "--max-m", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let (header, rows) = csv_rows(&String::from_utf8(out.stdout).unwrap());
    assert_eq!(header, ["suite", "case", "input", "expected", "actual", "ok"]);
    assert_eq!(rows.len(), 1023);
    assert!(rows.iter().all(|r| r[5] == "true"));

    for suite in ["entropy-min", "lemma1", "clusters"] {
        let v = json(&["verify", "--suite", suite, "--max-m", "6"]);
        assert_eq!(v["schema"], "delkit/verify/v1");
        assert_eq!(v["passed"], true, "{suite}");
    }
}

#[test]
fn exit_codes() {
    let bad_bits = delkit(&["count", "--y", "10a", "--x", "1"]);
    assert_eq!(bad_bits.status.code(), Some(2));
    let bad_suite = delkit(&["verify", "--suite", "nope"]);
    assert_eq!(bad_suite.status.code(), Some(2));
    let too_big = delkit(&["distribution", "--x", "1", "--n", "30"]);
    assert_eq!(too_big.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&too_big.stderr).contains("budget"));
    let wide = delkit(&["sweep", "--m", "13", "--n", "13"]);
    assert_eq!(wide.status.code(), Some(2));
}

#[test]
fn budget_precedence() {
    let run = |env: Option<&str>, flag: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_delkit"));
        cmd.args(["distribution", "--x", "1", "--n", "6"]).env_remove("DELKIT_BUDGET");
        if let Some(e) = env {
            cmd.env("DELKIT_BUDGET", e);
        }
        if let Some(f) = flag {
            cmd.args(["--budget", f]);
        }
        cmd.output().unwrap().status.code()
    };
    assert_eq!(run(None, None), Some(0));
    assert_eq!(run(Some("5"), None), Some(2));
    assert_eq!(run(Some("5"), Some("6")), Some(0));
    assert_eq!(run(Some("8"), Some("5")), Some(2));
}

#[test]
fn out_file_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.json");
    let p = path.to_str().unwrap();
    let args = ["sweep", "--m", "6", "--n", "8", "--alpha", "2,3", "--format", "json"];
    let first = delkit(&[&args[..], &["--out", p]].concat());
    assert!(first.status.success());
    assert!(first.stdout.is_empty());
    let written = std::fs::read(&path).unwrap();
    assert_eq!(written, stdout(&args).into_bytes());
    let v: Value = serde_json::from_slice(&written).unwrap();
    assert_eq!(v["schema"], "delkit/sweep/v1");
    assert_eq!(v["rows"].as_array().unwrap().len(), 64);

    let single = Command::new(env!("CARGO_BIN_EXE_delkit"))
        .args(args)
        .env("RAYON_NUM_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(single.stdout, written);
}

#[test]
fn entropy_json_round_trips() {
    let v = json(&["entropy", "--x", "101", "--n", "6", "--alpha", "2"]);
    assert_eq!(v["schema"], "delkit/entropy/v1");
    let (_, rows) = csv_rows(&stdout(&["entropy", "--x", "101", "--n", "6", "--alpha", "2"]));
    let h: f64 = rows[0][4].parse().unwrap();
    assert_eq!(h, v["shannon"].as_f64().unwrap());
    assert_eq!(v["mu"], 160);
    assert_eq!(v["upsilon"], 42);
}
