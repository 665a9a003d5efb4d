//! Local HTTP service for the results viewer.

use std::collections::HashSet;
use std::io::Write as _;
use std::net::{Ipv4Addr, SocketAddr};
use std::path::PathBuf;
use std::sync::{Arc, Mutex, RwLock};

use axum::extract::{Query, State};
use axum::http::StatusCode;
use axum::response::{Html, IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use rdet_core::trace::EventKind;
use rdet_core::{Location, LocalizeError, RankingMode};
use serde::{Deserialize, Serialize};
use tower_http::services::{ServeDir, ServeFile};

use crate::report::{self, MarkerInfo, ResultRecord};
use crate::session::Session;

const INDEX_HTML: &str = include_str!("index.html");

#[derive(Debug, Clone, Default)]
pub struct ServeOptions {
    pub control_file: Option<PathBuf>,
    pub ui_dir: Option<PathBuf>,
}

pub struct AppState {
    session: RwLock<Session>,
    options: ServeOptions,
    dump_lock: Mutex<()>,
}

impl AppState {
    pub fn new(session: Session, options: ServeOptions) -> Arc<Self> {
        Arc::new(AppState {
            session: RwLock::new(session),
            options,
            dump_lock: Mutex::new(()),
        })
    }

    fn session(&self) -> Session {
        self.session.read().expect("session lock poisoned").clone()
    }
}

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    message: String,
}

impl ApiError {
    fn new(status: StatusCode, message: impl Into<String>) -> Self {
        ApiError {
            status,
            message: message.into(),
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let body = Json(serde_json::json!({ "error": self.message }));
        (self.status, body).into_response()
    }
}

type ApiResult<T> = Result<Json<T>, ApiError>;

pub fn router(state: Arc<AppState>) -> Router {
    let api = Router::new()
        .route("/api/session", get(session_info))
        .route("/api/results", get(results))
        .route("/api/source", get(source))
        .route("/api/dump", post(dump))
        .route("/api/refresh", post(refresh));
    let app = match &state.options.ui_dir {
        Some(dir) => api.fallback_service(
            ServeDir::new(dir).not_found_service(ServeFile::new(dir.join("index.html"))),
        ),
        None => api.route("/", get(|| async { Html(INDEX_HTML) })),
    };
    app.with_state(state)
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SessionSummary {
    pub diff: String,
    pub trace: String,
    pub bug_marker: String,
    pub baseline_marker: Option<String>,
    pub bug_marker_present: bool,
    pub hunks: usize,
    pub events: usize,
    pub block_events: usize,
    pub hunk_events: usize,
    pub marker_events: usize,
    pub markers: Vec<MarkerInfo>,
    pub src_root: bool,
    pub control_file: bool,
}

fn summary(state: &AppState, session: &Session) -> SessionSummary {
    let config = session.config();
    let (block_events, hunk_events, marker_events) = session.trace.counts();
    SessionSummary {
        diff: config.diff.display().to_string(),
        trace: config.trace.display().to_string(),
        bug_marker: config.bug_marker.clone(),
        baseline_marker: config.baseline_marker.clone(),
        bug_marker_present: session.trace.has_marker(&config.bug_marker),
        hunks: session.diff().len(),
        events: session.trace.len(),
        block_events,
        hunk_events,
        marker_events,
        markers: report::markers(session),
        src_root: session.source().is_some(),
        control_file: state.options.control_file.is_some(),
    }
}

async fn session_info(State(state): State<Arc<AppState>>) -> Json<SessionSummary> {
    let session = state.session();
    Json(summary(&state, &session))
}

#[derive(Debug, Deserialize)]
pub struct ResultsParams {
    mode: Option<String>,
    query: Option<String>,
    limit: Option<usize>,
    offset: Option<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ResultsPage {
    pub mode: String,
    pub query_terms: Vec<String>,
    pub total: usize,
    pub offset: usize,
    pub results: Vec<ResultRecord>,
}

fn localize_error(err: LocalizeError) -> ApiError {
    match err {
        LocalizeError::UnknownMarker(_) | LocalizeError::BaselineRequired => {
            ApiError::new(StatusCode::CONFLICT, err.to_string())
        }
        LocalizeError::Trace(_) => ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, err.to_string()),
    }
}

async fn results(
    State(state): State<Arc<AppState>>,
    Query(params): Query<ResultsParams>,
) -> ApiResult<ResultsPage> {
    let mode = params
        .mode
        .as_deref()
        .filter(|m| !m.is_empty())
        .map(str::parse::<RankingMode>)
        .transpose()
        .map_err(|e| ApiError::new(StatusCode::BAD_REQUEST, e.to_string()))?;
    let session = state.session();
    let page = tokio::task::spawn_blocking(move || {
        let loc = session
            .analyze(mode, params.query.as_deref())
            .map_err(localize_error)?;
        let total = loc.results.len();
        let offset = params.offset.unwrap_or(0);
        let limit = params.limit.unwrap_or(usize::MAX);
        let results = loc
            .results
            .iter()
            .skip(offset)
            .take(limit)
            .map(|r| report::record(&session, &loc, r))
            .collect();
        Ok::<_, ApiError>(ResultsPage {
            mode: loc.mode.to_string(),
            query_terms: loc.query_terms.clone(),
            total,
            offset,
            results,
        })
    })
    .await
    .map_err(|e| ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, e.to_string()))??;
    Ok(Json(page))
}

#[derive(Debug, Deserialize)]
pub struct SourceParams {
    file: String,
    from: Option<u32>,
    to: Option<u32>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SourceLine {
    pub line: u32,
    pub text: String,
    pub executed: bool,
    pub hunk_id: Option<u64>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SourcePage {
    pub file: String,
    pub from: u32,
    pub to: u32,
    pub line_count: u32,
    /// Whether `executed` reflects coverage up to the bug marker (true) or
    /// everything recorded so far (false).
    pub at_bug_marker: bool,
    pub lines: Vec<SourceLine>,
}

/// Executed lines of `file`, up to the bug marker when it exists.
fn executed_lines(session: &Session, file: &str) -> (bool, HashSet<u32>) {
    let limit = session.trace.marker_seq(&session.config().bug_marker);
    let lines = session
        .trace
        .events()
        .iter()
        .take_while(|e| limit.map_or(true, |seq| e.seq < seq))
        .filter_map(|e| match &e.kind {
            EventKind::Block(Location { file: f, line }) if &**f == file => Some(*line),
            _ => None,
        })
        .collect();
    (limit.is_some(), lines)
}

async fn source(
    State(state): State<Arc<AppState>>,
    Query(params): Query<SourceParams>,
) -> ApiResult<SourcePage> {
    let session = state.session();
    let not_found = || ApiError::new(StatusCode::NOT_FOUND, format!("no source for `{}`", params.file));
    let tree = session.source().ok_or_else(not_found)?;
    let text = tree.lines(&params.file).ok_or_else(not_found)?;
    let line_count = text.len() as u32;

    let from = params.from.unwrap_or(1);
    let to = params.to.unwrap_or(line_count);
    if from == 0 || from > to {
        return Err(ApiError::new(
            StatusCode::BAD_REQUEST,
            format!("invalid line range {from}-{to}"),
        ));
    }
    if to > line_count {
        return Err(ApiError::new(
            StatusCode::RANGE_NOT_SATISFIABLE,
            format!("`{}` has {line_count} lines", params.file),
        ));
    }

    let (at_bug_marker, executed) = executed_lines(&session, &params.file);
    let lines = (from..=to)
        .map(|line| SourceLine {
            line,
            text: text[(line - 1) as usize].clone(),
            executed: executed.contains(&line),
            hunk_id: session.diff().locate(&params.file, line).map(|id| id.0),
        })
        .collect();
    Ok(Json(SourcePage {
        file: params.file,
        from,
        to,
        line_count,
        at_bug_marker,
        lines,
    }))
}

#[derive(Debug, Deserialize)]
pub struct DumpRequest {
    label: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct DumpResponse {
    pub label: String,
}

async fn dump(
    State(state): State<Arc<AppState>>,
    Json(req): Json<DumpRequest>,
) -> ApiResult<DumpResponse> {
    let path = state.options.control_file.as_ref().ok_or_else(|| {
        ApiError::new(StatusCode::SERVICE_UNAVAILABLE, "no control file configured")
    })?;
    let label = req.label;
    if label.is_empty() || label.contains(['\n', '\r']) {
        return Err(ApiError::new(
            StatusCode::BAD_REQUEST,
            "label must be non-empty and on one line",
        ));
    }
    // Held across the check and the write so concurrent requests append
    // whole lines and see each other's labels.
    let _guard = state.dump_lock.lock().expect("dump lock poisoned");
    let written = match std::fs::read_to_string(path) {
        Ok(text) => text,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => String::new(),
        Err(e) => {
            return Err(ApiError::new(
                StatusCode::INTERNAL_SERVER_ERROR,
                format!("{}: {e}", path.display()),
            ))
        }
    };
    if written.lines().any(|l| l == label) || state.session().trace.has_marker(&label) {
        return Err(ApiError::new(
            StatusCode::CONFLICT,
            format!("marker `{label}` already exists"),
        ));
    }
    std::fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .and_then(|mut f| f.write_all(format!("{label}\n").as_bytes()))
        .map_err(|e| {
            ApiError::new(
                StatusCode::INTERNAL_SERVER_ERROR,
                format!("{}: {e}", path.display()),
            )
        })?;
    Ok(Json(DumpResponse { label }))
}

async fn refresh(State(state): State<Arc<AppState>>) -> ApiResult<SessionSummary> {
    let current = state.session();
    let fresh = tokio::task::spawn_blocking(move || current.reload_trace())
        .await
        .map_err(|e| ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, e.to_string()))?
        .map_err(|e| {
            let status = if e.exit_code() == 4 {
                StatusCode::UNPROCESSABLE_ENTITY
            } else {
                StatusCode::INTERNAL_SERVER_ERROR
            };
            ApiError::new(status, e.to_string())
        })?;
    let out = summary(&state, &fresh);
    *state.session.write().expect("session lock poisoned") = fresh;
    Ok(Json(out))
}

/// Serves on the loopback interface until interrupted.
pub async fn run(session: Session, port: u16, options: ServeOptions) -> std::io::Result<()> {
    let addr = SocketAddr::from((Ipv4Addr::LOCALHOST, port));
    let listener = tokio::net::TcpListener::bind(addr).await?;
    eprintln!("rdet: listening on http://{}", listener.local_addr()?);
    let app = router(AppState::new(session, options));
    axum::serve(listener, app)
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}
