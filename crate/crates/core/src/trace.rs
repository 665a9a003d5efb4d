//! Session traces: the JSON Lines event stream emitted by tracer adapters,
//! cumulative coverage snapshots at dump markers, and the hunk window that
//! feeds execution-order ranking.
//!
//! Wire format, one record per line:
//!
//! ```text
//! {"seq": 1, "th": "T1", "t": "b", "f": "src/app.py", "l": 12}
//! {"seq": 2, "th": "T1", "t": "h", "id": 3}
//! {"seq": 3, "th": "T1", "t": "m", "label": "bug"}
//! ```
//!
//! Every query takes a marker label and only looks at events before that
//! marker, so anything recorded after a dump cannot influence results.

use std::collections::{BTreeSet, HashMap};
use std::io::{self, BufRead, Write};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diff::HunkId;

/// Default number of hunk events kept for execution-order ranking.
pub const DEFAULT_WINDOW: usize = 1_000_000;

/// A covered source location; the line stands in for a basic block.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Location {
    pub file: Arc<str>,
    pub line: u32,
}

impl Location {
    pub fn new(file: &str, line: u32) -> Self {
        Location {
            file: Arc::from(file),
            line,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EventKind {
    Block(Location),
    Hunk(HunkId),
    Marker(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEvent {
    pub seq: u64,
    pub thread: Arc<str>,
    pub kind: EventKind,
}

impl TraceEvent {
    /// Serializes the event as one wire-format line, without the newline.
    pub fn to_json_line(&self) -> String {
        let record = match &self.kind {
            EventKind::Block(loc) => WireRecord {
                seq: self.seq,
                th: &self.thread,
                t: "b",
                f: Some(&loc.file),
                l: Some(loc.line),
                id: None,
                label: None,
            },
            EventKind::Hunk(id) => WireRecord {
                seq: self.seq,
                th: &self.thread,
                t: "h",
                f: None,
                l: None,
                id: Some(id.0),
                label: None,
            },
            EventKind::Marker(label) => WireRecord {
                seq: self.seq,
                th: &self.thread,
                t: "m",
                f: None,
                l: None,
                id: None,
                label: Some(label),
            },
        };
        serde_json::to_string(&record).expect("wire record serializes")
    }
}

#[derive(Serialize)]
struct WireRecord<'a> {
    seq: u64,
    th: &'a str,
    t: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    f: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    l: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    id: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<&'a str>,
}

#[derive(Deserialize)]
struct RawRecord {
    seq: u64,
    th: String,
    t: String,
    f: Option<String>,
    l: Option<u32>,
    id: Option<u64>,
    label: Option<String>,
}

#[derive(Debug, Error)]
pub enum TraceError {
    #[error("line {line}: seq {seq} does not follow {previous}")]
    NonMonotonicSeq { line: usize, previous: u64, seq: u64 },

    #[error("line {line}: unknown event kind `{kind}`")]
    UnknownEventKind { line: usize, kind: String },

    #[error("line {line}: marker label `{label}` already used")]
    DuplicateMarkerLabel { line: usize, label: String },

    #[error("line {line}: malformed record: {reason}")]
    MalformedRecord { line: usize, reason: String },

    #[error("no marker labelled `{0}` in trace")]
    UnknownMarker(String),

    #[error("reading trace: {0}")]
    Io(#[from] io::Error),
}

impl TraceError {
    /// True for errors that mean the stream itself is invalid.
    pub fn is_validation(&self) -> bool {
        !matches!(self, TraceError::UnknownMarker(_) | TraceError::Io(_))
    }
}

/// A validated, immutable event stream of one session.
#[derive(Debug, Clone, Default)]
pub struct SessionTrace {
    events: Vec<TraceEvent>,
    // label -> index into `events`
    markers: HashMap<String, usize>,
}

#[derive(Default)]
struct Interner(HashMap<String, Arc<str>>);

impl Interner {
    fn get(&mut self, s: String) -> Arc<str> {
        if let Some(existing) = self.0.get(&s) {
            return existing.clone();
        }
        let shared: Arc<str> = Arc::from(s.as_str());
        self.0.insert(s, shared.clone());
        shared
    }
}

/// Reads and validates a JSON Lines trace. Blank lines are skipped.
pub fn read_trace<R: BufRead>(reader: R) -> Result<SessionTrace, TraceError> {
    let mut builder = TraceBuilder::default();
    let mut files = Interner::default();
    let mut threads = Interner::default();

    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let raw: RawRecord =
            serde_json::from_str(&line).map_err(|e| TraceError::MalformedRecord {
                line: line_no,
                reason: e.to_string(),
            })?;
        let missing = |field: &str| TraceError::MalformedRecord {
            line: line_no,
            reason: format!("`{}` record without `{field}`", raw.t),
        };
        let kind = match raw.t.as_str() {
            "b" => {
                let file = raw.f.clone().ok_or_else(|| missing("f"))?;
                let line = raw.l.ok_or_else(|| missing("l"))?;
                if line == 0 {
                    return Err(TraceError::MalformedRecord {
                        line: line_no,
                        reason: "line numbers start at 1".into(),
                    });
                }
                EventKind::Block(Location {
                    file: files.get(file),
                    line,
                })
            }
            "h" => EventKind::Hunk(HunkId(raw.id.ok_or_else(|| missing("id"))?)),
            "m" => EventKind::Marker(raw.label.clone().ok_or_else(|| missing("label"))?),
            other => {
                return Err(TraceError::UnknownEventKind {
                    line: line_no,
                    kind: other.to_string(),
                })
            }
        };
        builder.push(
            line_no,
            TraceEvent {
                seq: raw.seq,
                thread: threads.get(raw.th),
                kind,
            },
        )?;
    }
    Ok(builder.finish())
}

#[derive(Default)]
struct TraceBuilder {
    trace: SessionTrace,
}

impl TraceBuilder {
    fn push(&mut self, line: usize, event: TraceEvent) -> Result<(), TraceError> {
        if let Some(prev) = self.trace.events.last() {
            if event.seq <= prev.seq {
                return Err(TraceError::NonMonotonicSeq {
                    line,
                    previous: prev.seq,
                    seq: event.seq,
                });
            }
        }
        if let EventKind::Marker(label) = &event.kind {
            if label.is_empty() {
                return Err(TraceError::MalformedRecord {
                    line,
                    reason: "empty marker label".into(),
                });
            }
            if self.trace.markers.contains_key(label) {
                return Err(TraceError::DuplicateMarkerLabel {
                    line,
                    label: label.clone(),
                });
            }
            self.trace
                .markers
                .insert(label.clone(), self.trace.events.len());
        }
        self.trace.events.push(event);
        Ok(())
    }

    fn finish(self) -> SessionTrace {
        self.trace
    }
}

impl SessionTrace {
    /// Validates an in-memory event list with the same rules as
    /// [`read_trace`]; error line numbers are 1-based event positions.
    pub fn from_events(events: Vec<TraceEvent>) -> Result<Self, TraceError> {
        let mut builder = TraceBuilder::default();
        for (idx, event) in events.into_iter().enumerate() {
            builder.push(idx + 1, event)?;
        }
        Ok(builder.finish())
    }

    pub fn events(&self) -> &[TraceEvent] {
        &self.events
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    /// Marker labels with their seq numbers, in stream order.
    pub fn markers(&self) -> Vec<(&str, u64)> {
        let mut markers: Vec<_> = self
            .markers
            .iter()
            .map(|(label, &idx)| (label.as_str(), self.events[idx].seq))
            .collect();
        markers.sort_by_key(|&(_, seq)| seq);
        markers
    }

    pub fn has_marker(&self, label: &str) -> bool {
        self.markers.contains_key(label)
    }

    pub fn marker_seq(&self, label: &str) -> Option<u64> {
        self.markers.get(label).map(|&idx| self.events[idx].seq)
    }

    /// Events strictly before the marker.
    pub fn before_marker(&self, label: &str) -> Result<&[TraceEvent], TraceError> {
        let idx = *self
            .markers
            .get(label)
            .ok_or_else(|| TraceError::UnknownMarker(label.to_string()))?;
        Ok(&self.events[..idx])
    }

    /// Rewrites block event paths that start with `prefix`.
    pub fn strip_prefix(&self, prefix: &str) -> SessionTrace {
        if prefix.is_empty() {
            return self.clone();
        }
        let mut files = Interner::default();
        let events = self
            .events
            .iter()
            .map(|e| match &e.kind {
                EventKind::Block(loc) if loc.file.starts_with(prefix) => TraceEvent {
                    seq: e.seq,
                    thread: e.thread.clone(),
                    kind: EventKind::Block(Location {
                        file: files.get(loc.file[prefix.len()..].to_string()),
                        line: loc.line,
                    }),
                },
                _ => e.clone(),
            })
            .collect();
        SessionTrace {
            events,
            markers: self.markers.clone(),
        }
    }

    /// Per-kind event counts: (block, hunk, marker).
    pub fn counts(&self) -> (usize, usize, usize) {
        self.events
            .iter()
            .fold((0, 0, 0), |(b, h, m), e| match e.kind {
                EventKind::Block(_) => (b + 1, h, m),
                EventKind::Hunk(_) => (b, h + 1, m),
                EventKind::Marker(_) => (b, h, m + 1),
            })
    }
}

/// Writes events in wire format, one per line.
pub fn write_trace<W: Write>(mut out: W, events: &[TraceEvent]) -> io::Result<()> {
    for event in events {
        out.write_all(event.to_json_line().as_bytes())?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

/// Cumulative coverage at a dump marker.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CoverageSnapshot {
    pub label: String,
    pub covered: BTreeSet<Location>,
}

impl CoverageSnapshot {
    /// Line numbers covered in `file`.
    pub fn lines_in(&self, file: &str) -> BTreeSet<u32> {
        let lo = Location::new(file, 0);
        self.covered
            .range(lo..)
            .take_while(|l| &*l.file == file)
            .map(|l| l.line)
            .collect()
    }

    pub fn contains(&self, file: &str, line: u32) -> bool {
        self.covered.contains(&Location::new(file, line))
    }
}

/// Locations of all block events before the marker.
pub fn snapshot_at(trace: &SessionTrace, label: &str) -> Result<CoverageSnapshot, TraceError> {
    let covered = trace
        .before_marker(label)?
        .iter()
        .filter_map(|e| match &e.kind {
            EventKind::Block(loc) => Some(loc.clone()),
            _ => None,
        })
        .collect();
    Ok(CoverageSnapshot {
        label: label.to_string(),
        covered,
    })
}

/// Locations covered at the bug dump but not at the baseline dump.
pub fn coverage_diff(bug: &CoverageSnapshot, baseline: &CoverageSnapshot) -> BTreeSet<Location> {
    bug.covered.difference(&baseline.covered).cloned().collect()
}

/// A hunk event kept in the window.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HunkHit {
    pub seq: u64,
    pub hunk: HunkId,
}

/// The last `capacity` hunk events before the marker, in seq order. `None`
/// keeps all of them.
pub fn hunk_window(
    trace: &SessionTrace,
    label: &str,
    capacity: Option<usize>,
) -> Result<Vec<HunkHit>, TraceError> {
    let limit = capacity.unwrap_or(usize::MAX);
    let mut window: Vec<HunkHit> = trace
        .before_marker(label)?
        .iter()
        .rev()
        .filter_map(|e| match e.kind {
            EventKind::Hunk(hunk) => Some(HunkHit { seq: e.seq, hunk }),
            _ => None,
        })
        .take(limit)
        .collect();
    window.reverse();
    Ok(window)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ev(seq: u64, kind: EventKind) -> TraceEvent {
        TraceEvent {
            seq,
            thread: Arc::from("T1"),
            kind,
        }
    }
    fn block(seq: u64, file: &str, line: u32) -> TraceEvent {
        ev(seq, EventKind::Block(Location::new(file, line)))
    }
    fn hunk(seq: u64, id: u64) -> TraceEvent {
        ev(seq, EventKind::Hunk(HunkId(id)))
    }
    fn marker(seq: u64, label: &str) -> TraceEvent {
        ev(seq, EventKind::Marker(label.into()))
    }

    const SAMPLE: &str = r#"{"seq": 1, "th": "T1", "t": "b", "f": "a.py", "l": 1}
{"seq": 2, "th": "T1", "t": "b", "f": "a.py", "l": 2}
{"seq": 3, "th": "T1", "t": "m", "label": "base"}
{"seq": 4, "th": "T2", "t": "b", "f": "b.py", "l": 7}
{"seq": 5, "th": "T1", "t": "m", "label": "bug"}
"#;

    #[test]
    fn reads_markers() {
        let trace = read_trace(SAMPLE.as_bytes()).unwrap();
        assert_eq!(trace.len(), 5);
        assert_eq!(trace.markers(), vec![("base", 3), ("bug", 5)]);
        assert_eq!(&*trace.events()[3].thread, "T2");
    }

    #[test]
    fn rejects_bad_streams() {
        let backwards = "{\"seq\":5,\"th\":\"T\",\"t\":\"h\",\"id\":1}\n{\"seq\":4,\"th\":\"T\",\"t\":\"h\",\"id\":1}\n";
        assert!(matches!(
            read_trace(backwards.as_bytes()),
            Err(TraceError::NonMonotonicSeq { line: 2, previous: 5, seq: 4 })
        ));
        let repeated = "{\"seq\":1,\"th\":\"T\",\"t\":\"h\",\"id\":1}\n{\"seq\":1,\"th\":\"T\",\"t\":\"h\",\"id\":1}\n";
        assert!(matches!(
            read_trace(repeated.as_bytes()),
            Err(TraceError::NonMonotonicSeq { .. })
        ));
        let unknown = "{\"seq\":1,\"th\":\"T\",\"t\":\"x\"}\n";
        assert!(matches!(
            read_trace(unknown.as_bytes()),
            Err(TraceError::UnknownEventKind { line: 1, .. })
        ));
        let dup = "{\"seq\":1,\"th\":\"T\",\"t\":\"m\",\"label\":\"bug\"}\n{\"seq\":2,\"th\":\"T\",\"t\":\"m\",\"label\":\"bug\"}\n";
        assert!(matches!(
            read_trace(dup.as_bytes()),
            Err(TraceError::DuplicateMarkerLabel { line: 2, .. })
        ));
        let garbage = "{\"seq\":1,\"th\":\"T\",\"t\":\"h\",\"id\":1}\nnot json\n";
        assert!(matches!(
            read_trace(garbage.as_bytes()),
            Err(TraceError::MalformedRecord { line: 2, .. })
        ));
        let no_line = "{\"seq\":1,\"th\":\"T\",\"t\":\"b\",\"f\":\"a\"}\n";
        assert!(matches!(
            read_trace(no_line.as_bytes()),
            Err(TraceError::MalformedRecord { line: 1, .. })
        ));
    }

    #[test]
    fn blank_lines_are_skipped_but_counted() {
        let text = "\n{\"seq\":1,\"th\":\"T\",\"t\":\"h\",\"id\":1}\n\nnope\n";
        assert!(matches!(
            read_trace(text.as_bytes()),
            Err(TraceError::MalformedRecord { line: 4, .. })
        ));
    }

    #[test]
    fn snapshots_use_prefix_semantics() {
        let trace = read_trace(SAMPLE.as_bytes()).unwrap();
        let base = snapshot_at(&trace, "base").unwrap();
        assert_eq!(
            base.covered,
            BTreeSet::from([Location::new("a.py", 1), Location::new("a.py", 2)])
        );
        let bug = snapshot_at(&trace, "bug").unwrap();
        assert_eq!(bug.covered.len(), 3);
        assert!(bug.contains("b.py", 7));
        assert!(matches!(
            snapshot_at(&trace, "nope"),
            Err(TraceError::UnknownMarker(_))
        ));
        assert_eq!(bug.lines_in("a.py"), BTreeSet::from([1, 2]));
        assert!(bug.lines_in("a.p").is_empty());
    }

    #[test]
    fn coverage_diff_identities() {
        let s = |locs: &[(&str, u32)]| CoverageSnapshot {
            label: String::new(),
            covered: locs.iter().map(|&(f, l)| Location::new(f, l)).collect(),
        };
        let bug = s(&[("a", 1), ("b", 1), ("c", 1)]);
        let base = s(&[("a", 1), ("c", 1)]);
        assert_eq!(
            coverage_diff(&bug, &base),
            BTreeSet::from([Location::new("b", 1)])
        );
        assert!(coverage_diff(&bug, &bug).is_empty());
        assert_eq!(coverage_diff(&bug, &CoverageSnapshot::default()), bug.covered);
    }

    #[test]
    fn window_keeps_last_k_before_marker() {
        let trace = SessionTrace::from_events(vec![
            hunk(1, 7),
            block(2, "a", 1),
            hunk(3, 3),
            hunk(4, 5),
            marker(5, "bug"),
            hunk(6, 9),
        ])
        .unwrap();
        let ids = |w: Vec<HunkHit>| w.into_iter().map(|h| h.hunk.0).collect::<Vec<_>>();
        assert_eq!(ids(hunk_window(&trace, "bug", Some(2)).unwrap()), vec![3, 5]);
        assert_eq!(ids(hunk_window(&trace, "bug", None).unwrap()), vec![7, 3, 5]);
        assert_eq!(ids(hunk_window(&trace, "bug", Some(10)).unwrap()), vec![7, 3, 5]);
    }

    #[test]
    fn wire_round_trip() {
        let events = vec![block(1, "x.py", 3), hunk(2, 4), marker(3, "bug")];
        let mut buf = Vec::new();
        write_trace(&mut buf, &events).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with(r#"{"seq":1,"th":"T1","t":"b","f":"x.py","l":3}"#));
        let back = read_trace(text.as_bytes()).unwrap();
        assert_eq!(back.events(), &events[..]);
    }

    #[test]
    fn strip_prefix_rewrites_block_paths() {
        let trace = SessionTrace::from_events(vec![
            block(1, "/src/x.py", 3),
            block(2, "other/y.py", 1),
            marker(3, "bug"),
        ])
        .unwrap();
        let stripped = trace.strip_prefix("/src/");
        let snap = snapshot_at(&stripped, "bug").unwrap();
        assert!(snap.contains("x.py", 3));
        assert!(snap.contains("other/y.py", 1));
    }

    fn random_trace() -> impl Strategy<Value = Vec<TraceEvent>> {
        prop::collection::vec((0u8..10, 0u32..4, 1u32..20, 1u64..8), 0..200).prop_map(|raw| {
            let mut markers = 0;
            raw.into_iter()
                .enumerate()
                .map(|(i, (k, f, l, h))| {
                    let seq = i as u64 + 1;
                    match k {
                        0 if markers < 4 => {
                            markers += 1;
                            marker(seq, &format!("m{markers}"))
                        }
                        1..=5 => block(seq, &format!("f{f}"), l),
                        _ => hunk(seq, h),
                    }
                })
                .collect()
        })
    }

    proptest! {
        #[test]
        fn snapshot_matches_prefix_filter(events in random_trace()) {
            let trace = SessionTrace::from_events(events.clone()).unwrap();
            let mut previous: Option<CoverageSnapshot> = None;
            for (label, seq) in trace.markers() {
                let snap = snapshot_at(&trace, label).unwrap();
                let expected: BTreeSet<Location> = events.iter()
                    .filter(|e| e.seq < seq)
                    .filter_map(|e| match &e.kind { EventKind::Block(l) => Some(l.clone()), _ => None })
                    .collect();
                prop_assert_eq!(&snap.covered, &expected);
                if let Some(prev) = &previous {
                    prop_assert!(prev.covered.is_subset(&snap.covered));
                }
                previous = Some(snap);
            }
        }

        #[test]
        fn window_matches_backward_scan(events in random_trace(), k in 1usize..30) {
            let trace = SessionTrace::from_events(events.clone()).unwrap();
            for (label, seq) in trace.markers() {
                let mut expected = Vec::new();
                for e in events.iter().rev() {
                    if e.seq >= seq { continue; }
                    if let EventKind::Hunk(id) = e.kind {
                        if expected.len() == k { break; }
                        expected.push(HunkHit { seq: e.seq, hunk: id });
                    }
                }
                expected.reverse();
                let got = hunk_window(&trace, label, Some(k)).unwrap();
                prop_assert_eq!(&got, &expected);
                let full = hunk_window(&trace, label, None).unwrap();
                prop_assert!(full.ends_with(&got));
            }
        }

        #[test]
        fn read_preserves_order(events in random_trace()) {
            let mut buf = Vec::new();
            write_trace(&mut buf, &events).unwrap();
            let trace = read_trace(&buf[..]).unwrap();
            prop_assert_eq!(trace.events(), &events[..]);
        }
    }
}
