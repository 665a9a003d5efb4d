use std::fs;
use std::io::{Read, Write};
use std::net::{TcpListener, TcpStream};
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};
use std::time::{Duration, Instant};

use serde_json::Value;

fn rdet() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_rdet"));
    cmd.env_remove("RDET_WEIGHTS");
    cmd
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures/sessions")
        .join(name)
}

fn manifest(name: &str) -> Value {
    serde_json::from_str(&fs::read_to_string(fixture(name).join("manifest.json")).unwrap()).unwrap()
}

/// `analyze` over a committed session with everything the manifest offers.
fn analyze(name: &str, extra: &[&str]) -> Command {
    let dir = fixture(name);
    let m = manifest(name);
    let mut cmd = rdet();
    cmd.arg("analyze")
        .arg("--diff")
        .arg(dir.join("change.diff"))
        .arg("--trace")
        .arg(dir.join("trace.jsonl"))
        .arg("--method-map")
        .arg(dir.join("methods.json"))
        .args(["--strip-prefix", m["strip_prefix"].as_str().unwrap()])
        .args(["--bug-marker", m["bug_marker"].as_str().unwrap()]);
    if let Some(b) = m["baseline_marker"].as_str() {
        cmd.args(["--baseline-marker", b]);
    }
    cmd.args(extra);
    cmd
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "exit {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_str(&stdout(out)).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path
}

const THREE_HUNKS: &str = "\
--- a/app.py
+++ b/app.py
@@ -2,2 +2,3 @@
 a
+b
 c
@@ -10,2 +11,2 @@
-d
+e
 f
--- a/util.py
+++ b/util.py
@@ -5,3 +5,2 @@
 g
-h
 i
";

#[test]
fn hunks_lists_every_hunk_with_ordinal_ids() {
    let dir = tempfile::tempdir().unwrap();
    let diff = write(dir.path(), "c.diff", THREE_HUNKS);
    let table = json(&rdet().arg("hunks").arg(&diff).output().unwrap());
    let rows = table["hunks"].as_array().unwrap();
    let ids: Vec<u64> = rows.iter().map(|r| r["id"].as_u64().unwrap()).collect();
    assert_eq!(ids, [1, 2, 3]);
    assert_eq!(rows[0]["file"], "b/app.py");
    assert_eq!(rows[0]["new_range"], serde_json::json!({"start": 2, "end": 4}));
    assert_eq!(rows[2]["kind"], "deletion");

    let stripped = json(
        &rdet()
            .arg("hunks")
            .arg(&diff)
            .args(["--strip-prefix", "b/"])
            .output()
            .unwrap(),
    );
    assert_eq!(stripped["hunks"][1]["file"], "app.py");
}

#[test]
fn hunks_of_an_empty_diff_is_an_empty_table() {
    let dir = tempfile::tempdir().unwrap();
    let diff = write(dir.path(), "empty.diff", "");
    let table = json(&rdet().arg("hunks").arg(&diff).output().unwrap());
    assert_eq!(table["hunks"], serde_json::json!([]));
}

#[test]
fn hunks_rejects_a_malformed_header() {
    let dir = tempfile::tempdir().unwrap();
    let diff = write(dir.path(), "bad.diff", "--- a/x\n+++ b/x\n@@ -1,2 +1,two @@\n a\n");
    let out = rdet().arg("hunks").arg(&diff).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("@@"), "{err}");
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn planted_fixture_ranks_the_fault_near_the_top() {
    let m = manifest("planted");
    let report = json(&analyze("planted", &["--format", "json"]).output().unwrap());
    let planted = m["planted"]["hunk_id"].as_u64().unwrap();
    let rank = report["results"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["hunk_id"].as_u64() == Some(planted))
        .unwrap()["rank"]
        .as_u64()
        .unwrap();
    assert!(rank <= 3, "planted region at rank {rank}");
    assert_eq!(report["session"]["mode"], "eo_diff");
}

/// (hunk, file:start-end) of each ranked line of the text report.
fn text_order(text: &str) -> Vec<(u64, String)> {
    text.lines()
        .filter(|l| l.trim_start().chars().next().is_some_and(|c| c.is_ascii_digit()))
        .filter(|l| l.contains(". "))
        .map(|l| {
            let fields: Vec<&str> = l.split_whitespace().collect();
            (fields[3].parse().unwrap(), fields[1].to_string())
        })
        .collect()
}

#[test]
fn text_and_json_reports_share_one_ordering() {
    for name in ["planted", "flip", "wide"] {
        let m = manifest(name);
        let src = fixture(name).join("src");
        let query = m["query"].as_str().unwrap_or("value");
        let mut args = vec!["--query", query, "--src-root", src.to_str().unwrap()];
        let report = json(&analyze(name, &[&args[..], &["--format", "json"]].concat()).output().unwrap());
        args.extend(["--format", "text"]);
        let text = stdout(&analyze(name, &args).output().unwrap());

        let from_json: Vec<(u64, String)> = report["results"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| {
                (
                    r["hunk_id"].as_u64().unwrap(),
                    format!("{}:{}-{}", r["file"].as_str().unwrap(), r["start"], r["end"]),
                )
            })
            .collect();
        assert!(!from_json.is_empty());
        assert_eq!(text_order(&text), from_json, "{name}");
        assert!(text.trim_end().ends_with(&format!("{} results", from_json.len())));
    }
}

#[test]
fn reports_validate_against_the_published_schema() {
    let schema: Value = serde_json::from_str(
        &fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("schema/report.schema.json")).unwrap(),
    )
    .unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    for name in ["planted", "flip", "wide"] {
        let src = fixture(name).join("src");
        let variants: [&[&str]; 3] = [
            &[],
            &["--mode", "eo"],
            &["--query", "total value", "--src-root", src.to_str().unwrap()],
        ];
        for extra in variants {
            let report = json(&analyze(name, &[extra, &["--format", "json"]].concat()).output().unwrap());
            let errors: Vec<String> = validator.iter_errors(&report).map(|e| e.to_string()).collect();
            assert!(errors.is_empty(), "{name} {extra:?}: {errors:?}");
        }
    }
}

#[test]
fn snippets_appear_only_with_a_source_root() {
    let src = fixture("planted").join("src");
    let with = json(
        &analyze("planted", &["--format", "json", "--src-root", src.to_str().unwrap()])
            .output()
            .unwrap(),
    );
    let without = json(&analyze("planted", &["--format", "json"]).output().unwrap());
    let first = &with["results"][0];
    let lines = first["end"].as_u64().unwrap() - first["start"].as_u64().unwrap() + 1;
    assert_eq!(first["snippet"].as_array().unwrap().len() as u64, lines);
    assert!(without["results"][0]["snippet"].is_null());
    assert_eq!(with["results"].as_array().unwrap().len(), without["results"].as_array().unwrap().len());
}

#[test]
fn trace_without_executed_hunks_reports_zero_results() {
    let dir = tempfile::tempdir().unwrap();
    let diff = write(dir.path(), "c.diff", THREE_HUNKS);
    let trace = write(
        dir.path(),
        "t.jsonl",
        "{\"seq\":1,\"th\":\"main\",\"t\":\"b\",\"f\":\"b/other.py\",\"l\":1}\n{\"seq\":2,\"th\":\"main\",\"t\":\"m\",\"label\":\"bug\"}\n",
    );
    let out = rdet().arg("analyze").arg("--diff").arg(&diff).arg("--trace").arg(&trace).output().unwrap();
    assert!(stdout(&out).contains("0 results"));
}

#[test]
fn error_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let diff = write(dir.path(), "c.diff", THREE_HUNKS);
    let no_marker = write(
        dir.path(),
        "nomarker.jsonl",
        "{\"seq\":1,\"th\":\"main\",\"t\":\"b\",\"f\":\"b/app.py\",\"l\":3}\n",
    );
    let invalid = write(
        dir.path(),
        "invalid.jsonl",
        "{\"seq\":2,\"th\":\"main\",\"t\":\"b\",\"f\":\"b/app.py\",\"l\":3}\n{\"seq\":1,\"th\":\"main\",\"t\":\"m\",\"label\":\"bug\"}\n",
    );
    let code = |trace: &Path, diff: &Path| {
        rdet()
            .arg("analyze")
            .arg("--diff")
            .arg(diff)
            .arg("--trace")
            .arg(trace)
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(code(&no_marker, &diff), Some(3));
    assert_eq!(code(&invalid, &diff), Some(4));
    assert_eq!(code(&dir.path().join("missing.jsonl"), &diff), Some(2));
    assert_eq!(code(&no_marker, &dir.path().join("missing.diff")), Some(2));
}

#[test]
fn weights_file_comes_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let doubled = write(
        dir.path(),
        "w.json",
        r#"{"region": 8, "near": 4, "method": 6, "class": 3, "file": 2}"#,
    );
    let src = fixture("planted").join("src");
    let base = ["--format", "json", "--query", "column value", "--src-root", src.to_str().unwrap()];
    let scores = |report: &Value| -> Vec<f64> {
        report["results"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r["textual_score"].as_f64().unwrap())
            .collect()
    };
    let default = json(&analyze("planted", &base).output().unwrap());
    assert!(scores(&default).iter().any(|s| *s > 0.0));
    let scaled = json(&analyze("planted", &base).env("RDET_WEIGHTS", &doubled).output().unwrap());
    for (d, s) in scores(&default).iter().zip(scores(&scaled)) {
        assert!((s - 2.0 * d).abs() <= 1e-9 * s.max(1.0), "{s} vs 2 x {d}");
    }

    let out = analyze("planted", &base)
        .env("RDET_WEIGHTS", dir.path().join("absent.json"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

fn serve(port: u16, extra: &[&str]) -> Command {
    let mut cmd = analyze("planted", extra);
    let args: Vec<_> = cmd.get_args().map(|a| a.to_owned()).collect();
    let mut serve = rdet();
    serve.arg("serve").args(&args[1..]).args(["--port", &port.to_string()]);
    cmd = serve;
    cmd
}

#[test]
fn serve_fails_with_2_when_the_port_is_taken() {
    let taken = TcpListener::bind("127.0.0.1:0").unwrap();
    let port = taken.local_addr().unwrap().port();
    let out = serve(port, &[]).output().unwrap();
    assert_eq!(out.status.code(), Some(2), "{}", String::from_utf8_lossy(&out.stderr));
}

fn http_get(port: u16, path: &str) -> Option<String> {
    let mut stream = TcpStream::connect(("127.0.0.1", port)).ok()?;
    stream.set_read_timeout(Some(Duration::from_secs(5))).ok()?;
    write!(stream, "GET {path} HTTP/1.1\r\nHost: localhost\r\nConnection: close\r\n\r\n").ok()?;
    let mut response = String::new();
    stream.read_to_string(&mut response).ok()?;
    Some(response)
}

#[test]
fn serve_answers_session_queries() {
    let port = TcpListener::bind("127.0.0.1:0").unwrap().local_addr().unwrap().port();
    let mut child = serve(port, &[]).stdout(Stdio::null()).stderr(Stdio::null()).spawn().unwrap();
    let deadline = Instant::now() + Duration::from_secs(20);
    let response = loop {
        if let Some(r) = http_get(port, "/api/session") {
            break r;
        }
        assert!(Instant::now() < deadline, "server did not come up");
        std::thread::sleep(Duration::from_millis(50));
    };
    child.kill().unwrap();
    child.wait().unwrap();

    assert!(response.starts_with("HTTP/1.1 200"), "{response}");
    let body = &response[response.find("\r\n\r\n").unwrap() + 4..];
    let summary: Value = serde_json::from_str(body).unwrap();
    let m = manifest("planted");
    assert_eq!(summary["events"], m["events"]);
    let labels: Vec<&str> = summary["markers"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["label"].as_str().unwrap())
        .collect();
    assert_eq!(labels, ["baseline", "bug"]);
}
