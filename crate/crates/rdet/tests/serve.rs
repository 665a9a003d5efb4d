use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use axum::body::Body;
use axum::http::{Request, StatusCode};
use http_body_util::BodyExt;
use rdet::cli::cmd_analyze;
use rdet::serve::{router, AppState, ServeOptions};
use rdet::{AnalysisConfig, OutputFormat, Session};
use serde_json::{json, Value};
use tower::ServiceExt;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures/sessions")
        .join(name)
}

fn manifest(name: &str) -> Value {
    serde_json::from_str(&fs::read_to_string(fixture(name).join("manifest.json")).unwrap()).unwrap()
}

fn config(name: &str) -> AnalysisConfig {
    let dir = fixture(name);
    let m = manifest(name);
    let mut config = AnalysisConfig::new(dir.join("change.diff"), dir.join("trace.jsonl"));
    config.method_map = Some(dir.join("methods.json"));
    config.src_root = Some(dir.join("src"));
    config.strip_prefix = m["strip_prefix"].as_str().map(str::to_string);
    config.bug_marker = m["bug_marker"].as_str().unwrap().to_string();
    config.baseline_marker = m["baseline_marker"].as_str().map(str::to_string);
    config
}

fn state(config: AnalysisConfig, options: ServeOptions) -> Arc<AppState> {
    AppState::new(Session::load(config).unwrap(), options)
}

async fn call(state: &Arc<AppState>, method: &str, uri: &str, body: Option<Value>) -> (StatusCode, Value) {
    let request = Request::builder()
        .method(method)
        .uri(uri)
        .header("content-type", "application/json")
        .body(body.map_or_else(Body::empty, |b| Body::from(b.to_string())))
        .unwrap();
    let response = router(state.clone()).oneshot(request).await.unwrap();
    let status = response.status();
    let bytes = response.into_body().collect().await.unwrap().to_bytes();
    let value = if bytes.is_empty() {
        Value::Null
    } else {
        serde_json::from_slice(&bytes).unwrap_or_else(|_| Value::String(String::from_utf8_lossy(&bytes).into()))
    };
    (status, value)
}

async fn get(state: &Arc<AppState>, uri: &str) -> (StatusCode, Value) {
    call(state, "GET", uri, None).await
}

#[tokio::test]
async fn session_echoes_the_loaded_trace() {
    let m = manifest("planted");
    let st = state(config("planted"), ServeOptions::default());
    let (status, body) = get(&st, "/api/session").await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body["events"], m["events"]);
    assert_eq!(body["hunks"], m["hunks"]);
    assert_eq!(body["bug_marker_present"], true);
    for marker in body["markers"].as_array().unwrap() {
        let label = marker["label"].as_str().unwrap();
        assert_eq!(marker["seq"], m["markers"][label]);
    }
    let total = body["block_events"].as_u64().unwrap()
        + body["hunk_events"].as_u64().unwrap()
        + body["marker_events"].as_u64().unwrap();
    assert_eq!(total, body["events"].as_u64().unwrap());
}

#[tokio::test]
async fn eo_results_start_with_the_latest_executed_hunk() {
    for name in ["planted", "flip", "wide"] {
        let st = state(config(name), ServeOptions::default());
        let (status, body) = get(&st, "/api/results?mode=eo").await;
        assert_eq!(status, StatusCode::OK);
        assert_eq!(body["mode"], "eo");
        assert_eq!(body["results"][0]["hunk_id"], manifest(name)["latest_executed_hunk"], "{name}");
    }
}

#[tokio::test]
async fn results_pages_and_errors() {
    let st = state(config("planted"), ServeOptions::default());
    let (_, all) = get(&st, "/api/results").await;
    let total = all["total"].as_u64().unwrap();
    assert_eq!(all["results"].as_array().unwrap().len() as u64, total);

    let (status, empty) = get(&st, "/api/results?limit=0").await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(empty["results"], json!([]));
    assert_eq!(empty["total"].as_u64(), Some(total));

    let (_, page) = get(&st, "/api/results?limit=2&offset=1").await;
    assert_eq!(page["results"][0], all["results"][1]);
    assert_eq!(page["results"][1], all["results"][2]);

    let (status, _) = get(&st, "/api/results?mode=bogus").await;
    assert_eq!(status, StatusCode::BAD_REQUEST);

    let mut no_baseline = config("planted");
    no_baseline.baseline_marker = None;
    let st = state(no_baseline, ServeOptions::default());
    let (status, body) = get(&st, "/api/results?mode=eo_diff").await;
    assert_eq!(status, StatusCode::CONFLICT);
    assert!(body["error"].is_string());
}

#[tokio::test]
async fn api_and_cli_agree() {
    for name in ["planted", "flip", "wide"] {
        let m = manifest(name);
        let query = m["query"].as_str().unwrap_or("value");
        let mut cli_config = config(name);
        cli_config.format = OutputFormat::Json;
        cli_config.query = Some(query.to_string());
        let report: Value = serde_json::from_str(&cmd_analyze(cli_config).unwrap()).unwrap();

        let st = state(config(name), ServeOptions::default());
        let encoded = query.replace(' ', "%20");
        let (_, page) = get(&st, &format!("/api/results?query={encoded}")).await;
        assert_eq!(page["results"], report["results"], "{name}");
        assert_eq!(page["query_terms"], report["session"]["query_terms"]);
    }
}

#[tokio::test]
async fn source_lines_carry_fixture_coverage() {
    let m = manifest("planted");
    let cov = &m["coverage"];
    let st = state(config("planted"), ServeOptions::default());
    let uri = format!(
        "/api/source?file={}&from={}&to={}",
        cov["file"].as_str().unwrap(),
        cov["from"],
        cov["to"]
    );
    let (status, page) = get(&st, &uri).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(page["at_bug_marker"], true);
    let executed: Vec<u64> = page["lines"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|l| l["executed"] == true)
        .map(|l| l["line"].as_u64().unwrap())
        .collect();
    let expected: Vec<u64> = cov["executed"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).collect();
    assert_eq!(executed, expected);

    let planted = &m["planted"];
    let uri = format!(
        "/api/source?file={}&from={}&to={}",
        planted["file"].as_str().unwrap(),
        planted["start"],
        planted["end"]
    );
    let (_, page) = get(&st, &uri).await;
    for line in page["lines"].as_array().unwrap() {
        assert_eq!(line["hunk_id"], planted["hunk_id"]);
    }
}

#[tokio::test]
async fn source_errors() {
    let m = manifest("planted");
    let file = m["coverage"]["file"].as_str().unwrap().to_string();
    let st = state(config("planted"), ServeOptions::default());
    let (_, page) = get(&st, &format!("/api/source?file={file}")).await;
    let count = page["line_count"].as_u64().unwrap();
    assert_eq!(page["lines"].as_array().unwrap().len() as u64, count);

    let (status, _) = get(&st, &format!("/api/source?file={file}&from=1&to={}", count + 1)).await;
    assert_eq!(status, StatusCode::RANGE_NOT_SATISFIABLE);
    let (status, _) = get(&st, &format!("/api/source?file={file}&from=5&to=2")).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    let (status, _) = get(&st, "/api/source?file=shop/nothing.py").await;
    assert_eq!(status, StatusCode::NOT_FOUND);
    let (status, _) = get(&st, "/api/source?file=../manifest.json").await;
    assert_eq!(status, StatusCode::NOT_FOUND);
    let (status, _) = get(&st, "/api/source?file=/etc/passwd").await;
    assert_eq!(status, StatusCode::NOT_FOUND);

    let mut bare = config("planted");
    bare.src_root = None;
    let st = state(bare, ServeOptions::default());
    let (status, _) = get(&st, &format!("/api/source?file={file}")).await;
    assert_eq!(status, StatusCode::NOT_FOUND);
}

#[tokio::test]
async fn dumps_append_labels_in_order() {
    let dir = tempfile::tempdir().unwrap();
    let control = dir.path().join("control");
    let options = ServeOptions {
        control_file: Some(control.clone()),
        ui_dir: None,
    };
    let mut cfg = config("planted");
    cfg.bug_marker = "later".into();
    cfg.baseline_marker = None;
    let st = state(cfg, options);

    for label in ["first", "second"] {
        let (status, body) = call(&st, "POST", "/api/dump", Some(json!({ "label": label }))).await;
        assert_eq!(status, StatusCode::OK);
        assert_eq!(body["label"], label);
    }
    assert_eq!(fs::read_to_string(&control).unwrap(), "first\nsecond\n");

    let (status, _) = call(&st, "POST", "/api/dump", Some(json!({ "label": "second" }))).await;
    assert_eq!(status, StatusCode::CONFLICT);
    // Labels already recorded in the trace are taken too.
    let (status, _) = call(&st, "POST", "/api/dump", Some(json!({ "label": "bug" }))).await;
    assert_eq!(status, StatusCode::CONFLICT);
    let (status, _) = call(&st, "POST", "/api/dump", Some(json!({ "label": "a\nb" }))).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(fs::read_to_string(&control).unwrap(), "first\nsecond\n");
}

#[tokio::test]
async fn dump_needs_a_writable_control_file() {
    let st = state(config("planted"), ServeOptions::default());
    let (status, _) = call(&st, "POST", "/api/dump", Some(json!({ "label": "x" }))).await;
    assert_eq!(status, StatusCode::SERVICE_UNAVAILABLE);

    let dir = tempfile::tempdir().unwrap();
    let options = ServeOptions {
        control_file: Some(dir.path().join("missing-dir").join("control")),
        ui_dir: None,
    };
    let st = state(config("planted"), options);
    let (status, body) = call(&st, "POST", "/api/dump", Some(json!({ "label": "x" }))).await;
    assert_eq!(status, StatusCode::INTERNAL_SERVER_ERROR);
    assert!(body["error"].is_string());
}

#[tokio::test]
async fn get_endpoints_do_not_touch_the_control_file() {
    let dir = tempfile::tempdir().unwrap();
    let control = dir.path().join("control");
    let st = state(
        config("planted"),
        ServeOptions {
            control_file: Some(control.clone()),
            ui_dir: None,
        },
    );
    for uri in ["/api/session", "/api/results", "/api/source?file=shop/archive_0.py", "/"] {
        get(&st, uri).await;
    }
    assert!(!control.exists());
}

#[tokio::test]
async fn refresh_picks_up_new_events() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("trace.jsonl");
    let original = fs::read_to_string(fixture("planted").join("trace.jsonl")).unwrap();
    fs::write(&trace, &original).unwrap();
    let mut cfg = config("planted");
    cfg.trace = trace.clone();
    let st = state(cfg, ServeOptions::default());
    let (_, before) = get(&st, "/api/session").await;

    let last_seq = manifest("planted")["events"].as_u64().unwrap() * 10;
    let extra = format!("{{\"seq\":{last_seq},\"th\":\"main\",\"t\":\"m\",\"label\":\"again\"}}\n");
    fs::write(&trace, original.clone() + &extra).unwrap();
    let (status, after) = call(&st, "POST", "/api/refresh", None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(after["events"].as_u64(), before["events"].as_u64().map(|n| n + 1));
    let (_, session) = get(&st, "/api/session").await;
    assert_eq!(session["events"], after["events"]);

    fs::write(&trace, original + "{\"seq\":1,\"th\":\"main\",\"t\":\"m\",\"label\":\"x\"}\n").unwrap();
    let (status, _) = call(&st, "POST", "/api/refresh", None).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    let (_, session) = get(&st, "/api/session").await;
    assert_eq!(session["events"], after["events"]);
}

#[tokio::test]
async fn root_serves_the_ui() {
    let st = state(config("planted"), ServeOptions::default());
    let (status, body) = get(&st, "/").await;
    assert_eq!(status, StatusCode::OK);
    assert!(body.as_str().unwrap().contains("/api/results"));

    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("index.html"), "<p>bundle</p>").unwrap();
    fs::write(dir.path().join("app.js"), "console.log(1)").unwrap();
    let st = state(
        config("planted"),
        ServeOptions {
            control_file: None,
            ui_dir: Some(dir.path().to_path_buf()),
        },
    );
    assert_eq!(get(&st, "/").await.1, "<p>bundle</p>");
    assert_eq!(get(&st, "/app.js").await.1, "console.log(1)");
    assert_eq!(get(&st, "/results/7").await.1, "<p>bundle</p>");
    assert_eq!(get(&st, "/api/session").await.0, StatusCode::OK);
}
