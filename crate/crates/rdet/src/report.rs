//! Rendering a localization as JSON or plain text.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rdet_core::source::SourceProvider;
use rdet_core::{Localization, RankedResult};
use serde::{Deserialize, Serialize};

use crate::session::Session;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub rank: u32,
    pub hunk_id: u64,
    pub file: String,
    pub start: u32,
    pub end: u32,
    pub diff_flag: bool,
    pub eo_position: Option<u32>,
    pub textual_score: Option<f64>,
    /// Region text, when a source root is available.
    pub snippet: Option<Vec<String>>,
    /// Executed lines of the owning hunk.
    pub executed_lines: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkerInfo {
    pub label: String,
    pub seq: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SessionInfo {
    pub diff: String,
    pub trace: String,
    pub mode: String,
    pub bug_marker: String,
    pub baseline_marker: Option<String>,
    pub query_terms: Vec<String>,
    pub window: Option<usize>,
    pub window_events: usize,
    pub hunks: usize,
    pub executed_hunks: usize,
    pub events: usize,
    pub markers: Vec<MarkerInfo>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub results: Vec<ResultRecord>,
    pub session: SessionInfo,
}

pub fn markers(session: &Session) -> Vec<MarkerInfo> {
    session
        .trace
        .markers()
        .into_iter()
        .map(|(label, seq)| MarkerInfo {
            label: label.to_string(),
            seq,
        })
        .collect()
}

pub fn record(session: &Session, loc: &Localization, result: &RankedResult) -> ResultRecord {
    let region = &result.region;
    let executed = loc.bug_snapshot.lines_in(&region.file);
    let executed_lines = session
        .diff()
        .hunk(region.hunk_id)
        .map(|h| {
            executed
                .range(h.new_range.start..=h.new_range.end)
                .copied()
                .collect()
        })
        .unwrap_or_default();
    let snippet = session.source().and_then(|tree| {
        region
            .lines
            .lines()
            .map(|l| tree.line_text(&region.file, l))
            .collect::<Option<Vec<_>>>()
    });
    ResultRecord {
        rank: result.final_rank,
        hunk_id: region.hunk_id.0,
        file: region.file.clone(),
        start: region.lines.start,
        end: region.lines.end,
        diff_flag: result.diff_flag,
        eo_position: result.eo_position,
        textual_score: result.textual_score,
        snippet,
        executed_lines,
    }
}

pub fn build(session: &Session, loc: &Localization) -> Report {
    let config = session.config();
    let executed_hunks: BTreeSet<u64> = loc.results.iter().map(|r| r.region.hunk_id.0).collect();
    Report {
        results: loc
            .results
            .iter()
            .map(|r| record(session, loc, r))
            .collect(),
        session: SessionInfo {
            diff: config.diff.display().to_string(),
            trace: config.trace.display().to_string(),
            mode: loc.mode.to_string(),
            bug_marker: config.bug_marker.clone(),
            baseline_marker: config.baseline_marker.clone(),
            query_terms: loc.query_terms.clone(),
            window: config.window.0,
            window_events: loc.window_len,
            hunks: session.diff().len(),
            executed_hunks: executed_hunks.len(),
            events: session.trace.len(),
            markers: markers(session),
        },
    }
}

pub fn to_json(report: &Report) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("report serializes");
    out.push('\n');
    out
}

fn opt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

pub fn to_text(report: &Report) -> String {
    let s = &report.session;
    let mut out = String::new();
    let _ = write!(out, "mode {} at marker `{}`", s.mode, s.bug_marker);
    if let Some(base) = &s.baseline_marker {
        let _ = write!(out, ", baseline `{base}`");
    }
    let _ = writeln!(
        out,
        "; {} of {} hunks executed",
        s.executed_hunks, s.hunks
    );
    if !s.query_terms.is_empty() {
        let _ = writeln!(out, "query: {}", s.query_terms.join(" "));
    }
    for r in &report.results {
        let score = r.textual_score.map(|v| format!("{v:.3}"));
        let _ = writeln!(
            out,
            "{:>4}. {}:{}-{}  hunk {}  diff {}  eo {}  text {}",
            r.rank,
            r.file,
            r.start,
            r.end,
            r.hunk_id,
            if r.diff_flag { "yes" } else { "no" },
            opt(r.eo_position),
            opt(score),
        );
        if let Some(lines) = &r.snippet {
            for (line, text) in (r.start..).zip(lines) {
                let mark = if r.executed_lines.contains(&line) { '>' } else { ' ' };
                let _ = writeln!(out, "      {mark}{line:>5} | {text}");
            }
        }
    }
    let n = report.results.len();
    let _ = writeln!(out, "{n} result{}", if n == 1 { "" } else { "s" });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(results: Vec<ResultRecord>) -> Report {
        Report {
            results,
            session: SessionInfo {
                diff: "d".into(),
                trace: "t".into(),
                mode: "eo".into(),
                bug_marker: "bug".into(),
                baseline_marker: None,
                query_terms: vec![],
                window: Some(10),
                window_events: 0,
                hunks: 3,
                executed_hunks: 0,
                events: 0,
                markers: vec![],
            },
        }
    }

    #[test]
    fn empty_text_report() {
        let text = to_text(&report(vec![]));
        assert!(text.ends_with("0 results\n"), "{text}");
    }

    #[test]
    fn text_marks_executed_lines() {
        let text = to_text(&report(vec![ResultRecord {
            rank: 1,
            hunk_id: 2,
            file: "a.py".into(),
            start: 4,
            end: 5,
            diff_flag: true,
            eo_position: Some(1),
            textual_score: None,
            snippet: Some(vec!["x = 1".into(), "y = 2".into()]),
            executed_lines: vec![5],
        }]));
        assert!(text.contains("   1. a.py:4-5  hunk 2  diff yes  eo 1  text -"));
        assert!(text.contains("       4 | x = 1"));
        assert!(text.contains(">    5 | y = 2"));
        assert!(text.ends_with("1 result\n"));
    }
}
