use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use rdet_core::rank::DEFAULT_MAX_DIST;
use rdet_core::trace::DEFAULT_WINDOW;
use rdet_core::{LocalizeOptions, RankingMode, TextualPriority};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format `{other}` (expected text or json)")),
        }
    }
}

/// Hunk window capacity: a positive count or `unbounded`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window(pub Option<usize>);

impl Default for Window {
    fn default() -> Self {
        Window(Some(DEFAULT_WINDOW))
    }
}

impl FromStr for Window {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "unbounded" {
            return Ok(Window(None));
        }
        match s.parse::<usize>() {
            Ok(0) => Err("window must be at least 1".into()),
            Ok(k) => Ok(Window(Some(k))),
            Err(_) => Err(format!("invalid window `{s}` (expected a count or `unbounded`)")),
        }
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Some(k) => write!(f, "{k}"),
            None => f.write_str("unbounded"),
        }
    }
}

/// Everything needed to load a session and rank it.
#[derive(Debug, Clone)]
pub struct AnalysisConfig {
    pub diff: PathBuf,
    pub trace: PathBuf,
    pub bug_marker: String,
    pub baseline_marker: Option<String>,
    pub method_map: Option<PathBuf>,
    pub window: Window,
    pub query: Option<String>,
    pub src_root: Option<PathBuf>,
    pub strip_prefix: Option<String>,
    pub format: OutputFormat,
    pub mode: Option<RankingMode>,
    pub max_dist: u32,
    pub textual_priority: TextualPriority,
    pub weights: Option<PathBuf>,
    pub synonyms: Option<PathBuf>,
    pub keywords: Option<PathBuf>,
}

impl AnalysisConfig {
    pub fn new(diff: impl Into<PathBuf>, trace: impl Into<PathBuf>) -> Self {
        AnalysisConfig {
            diff: diff.into(),
            trace: trace.into(),
            bug_marker: "bug".into(),
            baseline_marker: None,
            method_map: None,
            window: Window::default(),
            query: None,
            src_root: None,
            strip_prefix: None,
            format: OutputFormat::Text,
            mode: None,
            max_dist: DEFAULT_MAX_DIST,
            textual_priority: TextualPriority::Tertiary,
            weights: None,
            synonyms: None,
            keywords: None,
        }
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.bug_marker.is_empty() {
            return Err("bug marker label must not be empty".into());
        }
        if self.baseline_marker.as_deref() == Some("") {
            return Err("baseline marker label must not be empty".into());
        }
        if matches!(self.window.0, Some(0)) {
            return Err("window must be at least 1".into());
        }
        Ok(())
    }

    pub fn localize_options(&self, mode: Option<RankingMode>) -> LocalizeOptions {
        LocalizeOptions {
            bug_marker: self.bug_marker.clone(),
            baseline_marker: self.baseline_marker.clone(),
            mode: mode.or(self.mode),
            window: self.window.0,
            max_dist: self.max_dist,
            textual_priority: self.textual_priority,
        }
    }
}
