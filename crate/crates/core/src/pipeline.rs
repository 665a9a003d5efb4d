//! The full localization pipeline over one diff and one session trace.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diff::DiffSet;
use crate::method_map::MethodMap;
use crate::rank::{
    combined_rank, differential_partition, executed_filter, execution_order_rank, RankedResult,
    TextualPriority, DEFAULT_MAX_DIST,
};
use crate::source::SourceProvider;
use crate::textual::{DocumentBuilder, KeywordList, Query, Scorer, SynonymTable, TermIndex, ZoneWeights};
use crate::trace::{coverage_diff, hunk_window, snapshot_at, CoverageSnapshot, Location, SessionTrace, TraceError, DEFAULT_WINDOW};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RankingMode {
    /// Execution order only.
    Eo,
    /// Differential partition first, execution order within it.
    EoDiff,
}

impl RankingMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            RankingMode::Eo => "eo",
            RankingMode::EoDiff => "eo_diff",
        }
    }
}

impl fmt::Display for RankingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown ranking mode `{0}` (expected eo or eo_diff)")]
pub struct UnknownMode(pub String);

impl FromStr for RankingMode {
    type Err = UnknownMode;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "eo" => Ok(RankingMode::Eo),
            "eo_diff" => Ok(RankingMode::EoDiff),
            other => Err(UnknownMode(other.to_string())),
        }
    }
}

#[derive(Debug, Clone)]
pub struct LocalizeOptions {
    pub bug_marker: String,
    pub baseline_marker: Option<String>,
    /// `None` picks `EoDiff` when a baseline marker is set, else `Eo`.
    pub mode: Option<RankingMode>,
    /// Hunk window capacity; `None` is unbounded.
    pub window: Option<usize>,
    pub max_dist: u32,
    pub textual_priority: TextualPriority,
}

impl Default for LocalizeOptions {
    fn default() -> Self {
        LocalizeOptions {
            bug_marker: "bug".into(),
            baseline_marker: None,
            mode: None,
            window: Some(DEFAULT_WINDOW),
            max_dist: DEFAULT_MAX_DIST,
            textual_priority: TextualPriority::Tertiary,
        }
    }
}

impl LocalizeOptions {
    pub fn resolved_mode(&self) -> Result<RankingMode, LocalizeError> {
        match (self.mode, &self.baseline_marker) {
            (Some(RankingMode::EoDiff), None) => Err(LocalizeError::BaselineRequired),
            (Some(mode), _) => Ok(mode),
            (None, Some(_)) => Ok(RankingMode::EoDiff),
            (None, None) => Ok(RankingMode::Eo),
        }
    }
}

/// Inputs of the optional textual stage.
pub struct TextualInput<'a> {
    pub query: &'a str,
    pub source: &'a dyn SourceProvider,
    pub keywords: &'a KeywordList,
    pub synonyms: Option<&'a SynonymTable>,
    pub weights: ZoneWeights,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LocalizeError {
    #[error("no marker labelled `{0}` in trace")]
    UnknownMarker(String),

    #[error("differential ranking needs a baseline marker")]
    BaselineRequired,

    #[error("trace query failed: {0}")]
    Trace(String),
}

impl From<TraceError> for LocalizeError {
    fn from(e: TraceError) -> Self {
        match e {
            TraceError::UnknownMarker(label) => LocalizeError::UnknownMarker(label),
            other => LocalizeError::Trace(other.to_string()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Localization {
    pub mode: RankingMode,
    pub results: Vec<RankedResult>,
    pub bug_snapshot: CoverageSnapshot,
    /// Coverage diff against the baseline, in `EoDiff` mode.
    pub diff_locations: Option<BTreeSet<Location>>,
    pub window_len: usize,
    /// Query terms after splitting and stop-word removal.
    pub query_terms: Vec<String>,
}

/// Ranks the executed change regions of `diff` for the session in `trace`.
///
/// Only events before the bug marker (and the baseline marker, for the
/// coverage diff) are consulted.
pub fn localize(
    diff: &DiffSet,
    trace: &SessionTrace,
    methods: &MethodMap,
    textual: Option<&TextualInput<'_>>,
    opts: &LocalizeOptions,
) -> Result<Localization, LocalizeError> {
    let mode = opts.resolved_mode()?;
    let bug_snapshot = snapshot_at(trace, &opts.bug_marker)?;
    let regions = executed_filter(diff, &bug_snapshot);

    let window = hunk_window(trace, &opts.bug_marker, opts.window)?;
    let order = execution_order_rank(&window, &regions);

    let (diff_locations, flags) = match (mode, &opts.baseline_marker) {
        (RankingMode::EoDiff, Some(baseline)) => {
            let base = snapshot_at(trace, baseline)?;
            let locations = coverage_diff(&bug_snapshot, &base);
            let flags = differential_partition(&regions, &locations, methods, opts.max_dist);
            (Some(locations), Some(flags))
        }
        _ => (None, None),
    };

    let mut query_terms = Vec::new();
    let scores = textual.and_then(|input| {
        let query = Query::parse(input.query, input.keywords);
        if query.is_empty() {
            return None;
        }
        query_terms = query.terms().map(str::to_string).collect();
        let builder = DocumentBuilder::new(input.source, methods, input.keywords);
        let docs: Vec<_> = regions.iter().map(|r| builder.build(r)).collect();
        let index = TermIndex::build(&docs);
        let scorer = Scorer {
            index: &index,
            weights: input.weights,
            synonyms: input.synonyms,
        };
        Some(docs.iter().map(|d| scorer.score(&query, d)).collect::<Vec<f64>>())
    });

    let results = combined_rank(
        &regions,
        flags.as_deref(),
        &order,
        scores.as_deref(),
        opts.textual_priority,
    );
    Ok(Localization {
        mode,
        results,
        bug_snapshot,
        diff_locations,
        window_len: window.len(),
        query_terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diff::parse_unified_diff;
    use crate::source::HunkText;
    use crate::trace::read_trace;

    const DIFF: &str = "\
--- a/app.py
+++ b/app.py
@@ -1,2 +1,2 @@
-def load():
+def load_config():
     pass
@@ -20,2 +20,2 @@
-def save():
+def save_charset():
     pass
";

    fn trace(extra: &str) -> SessionTrace {
        let text = format!(
            r#"{{"seq":1,"th":"T","t":"b","f":"app.py","l":1}}
{{"seq":2,"th":"T","t":"h","id":1}}
{{"seq":3,"th":"T","t":"m","label":"base"}}
{{"seq":4,"th":"T","t":"b","f":"app.py","l":20}}
{{"seq":5,"th":"T","t":"h","id":2}}
{{"seq":6,"th":"T","t":"h","id":1}}
{{"seq":7,"th":"T","t":"m","label":"bug"}}
{extra}"#
        );
        read_trace(text.as_bytes()).unwrap()
    }

    #[test]
    fn modes_and_errors() {
        let diff = parse_unified_diff(DIFF).unwrap().strip_prefix("b/").unwrap();
        let t = trace("");
        let methods = MethodMap::default();

        let eo = localize(&diff, &t, &methods, None, &LocalizeOptions::default()).unwrap();
        assert_eq!(eo.mode, RankingMode::Eo);
        let order: Vec<u64> = eo.results.iter().map(|r| r.region.hunk_id.0).collect();
        assert_eq!(order, vec![1, 2]);

        let opts = LocalizeOptions {
            baseline_marker: Some("base".into()),
            ..Default::default()
        };
        let diffed = localize(&diff, &t, &methods, None, &opts).unwrap();
        assert_eq!(diffed.mode, RankingMode::EoDiff);
        let order: Vec<u64> = diffed.results.iter().map(|r| r.region.hunk_id.0).collect();
        assert_eq!(order, vec![2, 1]);
        assert!(diffed.results[0].diff_flag);

        let missing = LocalizeOptions {
            bug_marker: "nope".into(),
            ..Default::default()
        };
        assert_eq!(
            localize(&diff, &t, &methods, None, &missing).unwrap_err(),
            LocalizeError::UnknownMarker("nope".into())
        );
        let forced = LocalizeOptions {
            mode: Some(RankingMode::EoDiff),
            ..Default::default()
        };
        assert_eq!(
            localize(&diff, &t, &methods, None, &forced).unwrap_err(),
            LocalizeError::BaselineRequired
        );
    }

    #[test]
    fn events_after_dump_are_ignored() {
        let diff = parse_unified_diff(DIFF).unwrap().strip_prefix("b/").unwrap();
        let methods = MethodMap::default();
        let opts = LocalizeOptions {
            baseline_marker: Some("base".into()),
            ..Default::default()
        };
        let before = localize(&diff, &trace(""), &methods, None, &opts).unwrap();
        let after = localize(
            &diff,
            &trace("{\"seq\":8,\"th\":\"T\",\"t\":\"h\",\"id\":2}\n{\"seq\":9,\"th\":\"T\",\"t\":\"b\",\"f\":\"app.py\",\"l\":2}\n"),
            &methods,
            None,
            &opts,
        )
        .unwrap();
        assert_eq!(before.results, after.results);
    }

    #[test]
    fn textual_stage_scores_regions() {
        let diff = parse_unified_diff(DIFF).unwrap().strip_prefix("b/").unwrap();
        let source = HunkText::new(&diff);
        let keywords = KeywordList::python();
        let input = TextualInput {
            query: "wrong charset",
            source: &source,
            keywords: &keywords,
            synonyms: None,
            weights: ZoneWeights::default(),
        };
        let opts = LocalizeOptions {
            window: Some(0),
            ..Default::default()
        };
        let out = localize(&diff, &trace(""), &MethodMap::default(), Some(&input), &opts).unwrap();
        assert_eq!(out.query_terms, vec!["wrong", "charset"]);
        assert_eq!(out.results[0].region.hunk_id.0, 2);
        assert!(out.results[0].textual_score.unwrap() > 0.0);
        assert_eq!(out.results[1].textual_score, Some(0.0));
    }

    #[test]
    fn mode_strings() {
        assert_eq!("eo".parse::<RankingMode>(), Ok(RankingMode::Eo));
        assert_eq!("eo_diff".parse::<RankingMode>(), Ok(RankingMode::EoDiff));
        assert!("diff".parse::<RankingMode>().is_err());
        assert_eq!(RankingMode::EoDiff.to_string(), "eo_diff");
    }
}
