use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn dindex(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_dindex"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

const C5: &str = "Dhc";
const C6: &str = "Ehhw";

#[test]
fn exact_on_c5() {
    let out = dindex(&["exact"], &format!("{C5}\n"));
    assert_eq!(out.status.code(), Some(0));
    let rows = json_lines(&out);
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["dprime"], 3);
    assert_eq!(rows[0]["certificate"]["distinguishing"], true);
}

#[test]
fn empty_input_is_empty_output() {
    let out = dindex(&["exact"], "");
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
}

#[test]
fn malformed_line_is_an_error_row_and_the_run_continues() {
    let out = dindex(&["exact"], &format!("B!\n{C5}\n"));
    assert_eq!(out.status.code(), Some(1));
    let rows = json_lines(&out);
    assert_eq!(rows[0]["status"], "error");
    assert_eq!(rows[0]["line"], 1);
    assert_eq!(rows[1]["dprime"], 3);
}

#[test]
fn construct_modes() {
    let out = dindex(&["construct", "--mode", "thm23"], &format!("{C6}\n"));
    assert_eq!(out.status.code(), Some(0));
    let row = &json_lines(&out)[0];
    assert_eq!(row["status"], "certified");
    let labels = row["certificate"]["labels"].as_array().unwrap();
    let distinct: std::collections::BTreeSet<_> = labels.iter().map(|l| l.as_u64()).collect();
    assert!(distinct.len() <= 3);

    let petersen = stdout(&dindex(&["gen", "petersen"], ""));
    let out = dindex(&["construct", "--mode", "thm32"], &petersen);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_lines(&out)[0]["status"], "skipped");

    let k6 = stdout(&dindex(&["gen", "complete", "6"], ""));
    let out = dindex(&["construct", "--mode", "thm32"], &k6);
    let row = &json_lines(&out)[0];
    assert_eq!(row["pass"], true);
    assert_eq!(row["certificate"]["method"], "theorem-3.2");
}

#[test]
fn certificates_reverify_through_the_library() {
    let out = dindex(&["construct"], &format!("{C5}\n{C6}\n"));
    for row in json_lines(&out) {
        let cert: dindex::json::CertificateJson = serde_json::from_value(row["certificate"].clone()).unwrap();
        cert.verify().unwrap();
    }
}

#[test]
fn verify_corpus_csv_filters_trees() {
    let tree = stdout(&dindex(&["gen", "path", "5"], ""));
    let out = dindex(&["verify-corpus", "--mode", "thm23"], &format!("{C5}\n{tree}"));
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers = reader.headers().unwrap().clone();
    assert_eq!(&headers[0], "graph6");
    let status = headers.iter().position(|h| h == "status").unwrap();
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(&rows[0][status], "pass");
    assert_eq!(&rows[1][status], "filtered");
    let summary: Value = serde_json::from_str(String::from_utf8_lossy(&out.stderr).trim()).unwrap();
    assert_eq!(summary["summary"]["filtered"], 1);
    assert_eq!(summary["summary"]["passed"], 1);
}

#[test]
fn verify_corpus_jsonl_ends_with_summary() {
    let quintic = include_str!("data/quintic_n6_10.g6");
    let out = dindex(&["verify-corpus", "--mode", "thm32", "--format", "jsonl"], quintic);
    assert_eq!(out.status.code(), Some(0));
    let rows = json_lines(&out);
    let (summary, rows) = rows.split_last().unwrap();
    assert_eq!(rows.len(), 64);
    assert!(rows.iter().all(|r| r["pass"] == true && r["index"].as_u64() <= Some(2)));
    assert_eq!(summary["summary"]["passed"], 64);
}

#[test]
fn budget_exhaustion_falls_back_to_a_constructed_labeling() {
    // One search node is not enough for K_7; the row passes only through a
    // verified constructed labeling and says so.
    let k7 = stdout(&dindex(&["gen", "complete", "7"], ""));
    let out = dindex(&["verify-corpus", "--format", "jsonl", "--budget-nodes", "1"], &k7);
    assert_eq!(out.status.code(), Some(0));
    let row = &json_lines(&out)[0];
    assert_eq!(row["index_kind"], "upper");
    assert_eq!(row["method"], "theorem-2.3");
}

#[test]
fn formula_and_aut() {
    let out = dindex(&["formula", "friendship", "10"], "");
    assert_eq!(json_lines(&out)[0]["value"], 4);
    let out = dindex(&["formula", "cycle", "5"], "");
    assert_eq!(json_lines(&out)[0]["value"], 3);
    let out = dindex(&["formula", "complete-bipartite", "8", "253"], "");
    let row = &json_lines(&out)[0];
    assert_eq!((row["lower"].as_u64(), row["upper"].as_u64()), (Some(2), Some(3)));
    assert_eq!(row["case"], "boundary");

    let petersen = stdout(&dindex(&["gen", "petersen"], ""));
    let out = dindex(&["aut"], &petersen);
    assert_eq!(json_lines(&out)[0]["order"], "120");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(dindex(&["frobnicate"], "").status.code(), Some(2));
    assert_eq!(dindex(&["formula", "path"], "").status.code(), Some(2));
    assert_eq!(dindex(&["exact", "--workers", "0"], "").status.code(), Some(2));
    assert_eq!(dindex(&["construct", "--mode", "thm99"], "").status.code(), Some(2));
}

#[test]
fn reads_files_and_orders_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("in.g6");
    let input: String = (3..=40).map(|n| stdout(&dindex(&["gen", "cycle", &n.to_string()], ""))).collect();
    std::fs::write(&path, &input).unwrap();
    let out = dindex(&["exact", "--workers", "4", path.to_str().unwrap()], "");
    let got: Vec<String> = json_lines(&out).iter().map(|r| r["graph6"].as_str().unwrap().to_string()).collect();
    let want: Vec<String> = input.lines().map(str::to_string).collect();
    assert_eq!(got, want);
}
