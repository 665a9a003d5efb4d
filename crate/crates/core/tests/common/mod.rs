//! Brute-force oracles and random session generators shared by the
//! integration tests and the acceptance suite.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use rdet_core::diff::Hunk;
use rdet_core::textual::{Zone, ZoneWeights};
use rdet_core::trace::EventKind;
use rdet_core::{
    localize, parse_unified_diff, read_trace, DiffSet, HunkId, HunkKind, LineRange,
    LocalizeOptions, Location, MethodExtent, MethodMap, RankingMode, SessionTrace, TraceEvent,
};
use serde_json::Value;
use rust_stemmers::{Algorithm, Stemmer};

// ---------------------------------------------------------------------------
// Random traces

pub fn event(seq: u64, kind: EventKind) -> TraceEvent {
    TraceEvent {
        seq,
        thread: Arc::from("MainThread"),
        kind,
    }
}

pub fn block(seq: u64, file: &str, line: u32) -> TraceEvent {
    event(seq, EventKind::Block(Location::new(file, line)))
}

/// A trace of `n` events over `hunks` hunk ids and a small file space, with
/// markers `m0`, `m1`, ... at random positions.
pub fn random_trace<R: Rng>(rng: &mut R, n: usize, hunks: u64, markers: usize) -> SessionTrace {
    let files = ["a.py", "b.py", "c/d.py", "e.py"];
    let mut at: Vec<usize> = (0..markers).map(|_| rng.gen_range(0..=n)).collect();
    at.sort_unstable();
    let mut events = Vec::with_capacity(n + markers);
    let mut seq = rng.gen_range(0..10u64);
    let mut next_marker = 0;
    for i in 0..=n {
        while next_marker < at.len() && at[next_marker] == i {
            seq += 1;
            events.push(event(seq, EventKind::Marker(format!("m{next_marker}"))));
            next_marker += 1;
        }
        if i == n {
            break;
        }
        seq += rng.gen_range(1..3);
        if rng.gen_bool(0.4) {
            events.push(event(seq, EventKind::Hunk(HunkId(rng.gen_range(1..=hunks)))));
        } else {
            let file = files[rng.gen_range(0..files.len())];
            events.push(block(seq, file, rng.gen_range(1..=120)));
        }
    }
    SessionTrace::from_events(events).expect("generated trace is valid")
}

// ---------------------------------------------------------------------------
// Execution order

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EoExpect {
    pub position: u32,
    pub trace_distance: u64,
    pub last_seq: u64,
}

/// Walks backwards from the marker over at most `window` hunk events and
/// numbers candidate hunks in order of first sighting.
pub fn eo_oracle(
    events: &[TraceEvent],
    marker: &str,
    window: Option<usize>,
    candidates: &BTreeSet<HunkId>,
) -> BTreeMap<HunkId, EoExpect> {
    let stop = events
        .iter()
        .position(|e| matches!(&e.kind, EventKind::Marker(l) if l == marker))
        .expect("marker present");
    let mut out = BTreeMap::new();
    let mut scanned = 0u64;
    for e in events[..stop].iter().rev() {
        let EventKind::Hunk(id) = e.kind else {
            continue;
        };
        if window.is_some_and(|k| scanned as usize == k) {
            break;
        }
        scanned += 1;
        if candidates.contains(&id) && !out.contains_key(&id) {
            let position = out.len() as u32 + 1;
            out.insert(
                id,
                EoExpect {
                    position,
                    trace_distance: scanned,
                    last_seq: e.seq,
                },
            );
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Coverage

/// Distinct block locations before `marker`, by linear scan.
pub fn covered_before(events: &[TraceEvent], marker: Option<&str>) -> Vec<Location> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for e in events {
        match &e.kind {
            EventKind::Marker(l) if Some(l.as_str()) == marker => break,
            EventKind::Block(loc) => {
                if seen.insert(loc.clone()) {
                    out.push(loc.clone());
                }
            }
            _ => {}
        }
    }
    out
}

/// Members of `bug` that are not members of `baseline`.
pub fn difference_oracle(bug: &[Location], baseline: &[Location]) -> BTreeSet<Location> {
    let base: HashSet<&Location> = baseline.iter().collect();
    bug.iter().filter(|l| !base.contains(l)).cloned().collect()
}

// ---------------------------------------------------------------------------
// Textual scoring

pub const STEM_FAMILIES: &[&[&str]] = &[
    &["connect", "connection", "connected", "connecting", "connects"],
    &["parse", "parser", "parsing", "parsed"],
    &["encode", "encoding", "encoded", "encodes"],
    &["render", "rendering", "renders", "rendered"],
    &["charset", "charsets"],
    &["cache", "caching", "cached"],
    &["user", "users"],
    &["timeout", "timeouts"],
];

pub const PLAIN_WORDS: &[&str] = &[
    "socket", "buffer", "header", "token", "locale", "widget", "queue", "payload", "stream",
    "session", "invoice", "ledger", "thumbnail", "archive", "schema",
];

pub fn random_word<R: Rng>(rng: &mut R) -> &'static str {
    if rng.gen_bool(0.6) {
        let family = STEM_FAMILIES.choose(rng).unwrap();
        family.choose(rng).unwrap()
    } else {
        PLAIN_WORDS.choose(rng).unwrap()
    }
}

pub const ZONES: [Zone; 5] = [Zone::Region, Zone::Near, Zone::Method, Zone::Class, Zone::File];

fn boost(weights: &ZoneWeights, zone: Zone) -> f64 {
    match zone {
        Zone::Region => weights.region,
        Zone::Near => weights.near,
        Zone::Method => weights.method,
        Zone::Class => weights.class,
        Zone::File => weights.file,
    }
}

/// Scores each document straight from the definition: for every query term
/// and every distinct (term, zone) of the document, match strength times
/// `(1 + ln tf) * ln((N + 1) / (df + 0.5))` times the zone boost.
pub fn naive_scores(
    docs: &[Vec<(String, Zone)>],
    query: &[String],
    weights: &ZoneWeights,
    synonyms: &[(String, String, f64)],
) -> Vec<f64> {
    let stemmer = Stemmer::create(Algorithm::English);
    let strength = |q: &str, t: &str| -> f64 {
        if q == t {
            return 1.0;
        }
        if stemmer.stem(q) == stemmer.stem(t) {
            return 0.8;
        }
        synonyms
            .iter()
            .find(|(a, b, _)| (a == q && b == t) || (a == t && b == q))
            .map_or(0.0, |s| s.2)
    };
    let n = docs.len() as f64;
    let mut terms: Vec<String> = Vec::new();
    for q in query {
        let q = q.to_lowercase();
        if !terms.contains(&q) {
            terms.push(q);
        }
    }

    docs.iter()
        .map(|doc| {
            let mut distinct: Vec<(String, Zone)> = Vec::new();
            for tok in doc {
                if !distinct.contains(tok) {
                    distinct.push(tok.clone());
                }
            }
            let mut score = 0.0;
            for q in &terms {
                for (t, z) in &distinct {
                    let m = strength(q, t);
                    if m == 0.0 {
                        continue;
                    }
                    let tf = doc.iter().filter(|(dt, dz)| dt == t && dz == z).count() as f64;
                    let df = docs
                        .iter()
                        .filter(|d| d.iter().any(|(dt, _)| dt == t))
                        .count() as f64;
                    score += m * (1.0 + tf.ln()) * ((n + 1.0) / (df + 0.5)).ln() * boost(weights, *z);
                }
            }
            score
        })
        .collect()
}

/// True when `actual` orders every pair that `reference` separates by more
/// than a relative tolerance the same way.
pub fn same_ordering(reference: &[f64], actual: &[f64]) -> bool {
    let scale = reference.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let tol = 1e-9 * scale;
    let scale_a = actual.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let tol_a = 1e-9 * scale_a;
    for i in 0..reference.len() {
        for j in 0..reference.len() {
            if reference[i] > reference[j] + tol && actual[i] <= actual[j] + tol_a {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Planted-fault sessions

#[derive(Debug, Clone, Copy)]
pub struct SessionShape {
    pub files: usize,
    pub methods_per_file: usize,
    /// Share of methods run in both scenarios.
    pub common: f64,
    /// Share of methods run only in the bug scenario.
    pub bug_only: f64,
    /// Upper bound of hunk events between the planted hunk and the dump.
    pub max_noise: usize,
    /// Chance that a noise method is bug-only rather than common.
    pub bug_only_noise: f64,
}

impl Default for SessionShape {
    fn default() -> Self {
        SessionShape {
            files: 20,
            methods_per_file: 14,
            common: 0.45,
            bug_only: 0.1,
            max_noise: 50,
            bug_only_noise: 0.0,
        }
    }
}

#[derive(Debug, Clone)]
struct Method {
    file: String,
    start: u32,
    end: u32,
    /// Body split into consecutive blocks with a chance of being taken.
    blocks: Vec<(u32, u32, f64)>,
}

pub struct PlantedSession {
    pub diff: DiffSet,
    pub trace: SessionTrace,
    pub methods: MethodMap,
    pub planted: HunkId,
    pub noise_events: usize,
}

struct Recorder {
    events: Vec<TraceEvent>,
    seq: u64,
    hunk_at: BTreeMap<(String, u32), HunkId>,
    hunk_events: usize,
}

impl Recorder {
    fn push(&mut self, kind: EventKind) {
        self.seq += 1;
        self.events.push(event(self.seq, kind));
    }

    /// Runs one call; stops early once `budget` hunk events were emitted.
    fn run<R: Rng>(&mut self, rng: &mut R, m: &Method, force: Option<(u32, u32)>, budget: Option<usize>) {
        let mut current = None;
        for &(s, e, p) in &m.blocks {
            let forced = force.is_some_and(|(fs, fe)| s <= fe && fs <= e);
            if !forced && !rng.gen_bool(p) {
                current = None;
                continue;
            }
            for line in s..=e {
                if budget.is_some_and(|b| self.hunk_events >= b) {
                    return;
                }
                self.push(EventKind::Block(Location::new(&m.file, line)));
                let hunk = self.hunk_at.get(&(m.file.clone(), line)).copied();
                if let Some(h) = hunk {
                    if current != Some(h) {
                        self.push(EventKind::Hunk(h));
                        self.hunk_events += 1;
                    }
                }
                current = hunk;
            }
        }
    }
}

pub fn planted_session<R: Rng>(rng: &mut R, shape: SessionShape) -> PlantedSession {
    let mut methods = Vec::new();
    let mut extents: BTreeMap<String, Vec<MethodExtent>> = BTreeMap::new();
    let mut hunks = Vec::new();
    let mut id = 0u64;

    for f in 0..shape.files {
        let file = format!("pkg/module_{f:02}.py");
        let mut line = 4u32;
        for k in 0..shape.methods_per_file {
            let len = rng.gen_range(25..=45u32);
            let (start, end) = (line, line + len - 1);
            let mut blocks = Vec::new();
            let mut s = start + 1;
            while s <= end {
                let e = (s + rng.gen_range(2..6)).min(end);
                let p = match rng.gen_range(0..10) {
                    0 => 0.1,
                    1 | 2 => 0.5,
                    _ => 1.0,
                };
                blocks.push((s, e, p));
                s = e + 1;
            }
            methods.push(Method {
                file: file.clone(),
                start,
                end,
                blocks,
            });
            extents.entry(file.clone()).or_default().push(MethodExtent {
                name: format!("Handler{f}.method_{k}"),
                start,
                end,
            });

            // Two or three hunks spread over the body.
            let count = rng.gen_range(2..=3u32);
            let slice = (len - 2) / count;
            for c in 0..count {
                let lo = start + 1 + c * slice;
                let hlen = rng.gen_range(1..=slice.min(5).max(1));
                let hs = rng.gen_range(lo..=lo + slice - hlen);
                let deletion = rng.gen_bool(0.1);
                id += 1;
                let new_range = if deletion {
                    LineRange::single(hs).unwrap()
                } else {
                    LineRange::new(hs, hs + hlen - 1).unwrap()
                };
                hunks.push(Hunk {
                    id: HunkId(id),
                    old_path: file.clone(),
                    new_path: file.clone(),
                    old_range: new_range,
                    new_range,
                    kind: if deletion {
                        HunkKind::Deletion
                    } else {
                        HunkKind::Modification
                    },
                    old_len: new_range.line_count(),
                    new_len: if deletion { 0 } else { new_range.line_count() },
                    new_lines: if deletion {
                        Vec::new()
                    } else {
                        new_range.lines().map(|l| format!("value_{l} = compute({l})")).collect()
                    },
                });
            }
            line = end + 3;
        }
    }

    let mut hunk_at = BTreeMap::new();
    for h in &hunks {
        for l in h.new_range.lines() {
            hunk_at.insert((h.new_path.clone(), l), h.id);
        }
    }

    let mut order: Vec<usize> = (0..methods.len()).collect();
    order.shuffle(rng);
    let n_common = (methods.len() as f64 * shape.common) as usize;
    let n_bug = ((methods.len() as f64 * shape.bug_only) as usize).max(2);
    let common: Vec<usize> = order[..n_common].to_vec();
    let bug_only: Vec<usize> = order[n_common..n_common + n_bug].to_vec();
    let planted_method = bug_only[0];

    let hunks_of = |m: &Method| -> Vec<&Hunk> {
        hunks
            .iter()
            .filter(|h| h.new_path == m.file && m.start <= h.new_range.start && h.new_range.end <= m.end)
            .collect()
    };
    let pm = &methods[planted_method];
    let planted = *hunks_of(pm).choose(rng).unwrap();
    let planted_id = planted.id;
    let planted_range = (planted.new_range.start, planted.new_range.end);

    let mut rec = Recorder {
        events: Vec::new(),
        seq: 0,
        hunk_at,
        hunk_events: 0,
    };
    // Module import: every method header runs once.
    for m in &methods {
        rec.push(EventKind::Block(Location::new(&m.file, m.start)));
    }
    for _ in 0..3 {
        let mut calls = common.clone();
        calls.shuffle(rng);
        for &c in &calls {
            rec.run(rng, &methods[c], None, None);
        }
    }
    rec.push(EventKind::Marker("baseline".into()));

    let mut calls: Vec<usize> = common
        .iter()
        .copied()
        .filter(|_| rng.gen_bool(0.7))
        .chain(bug_only[1..].iter().copied())
        .collect();
    calls.shuffle(rng);
    for &c in &calls {
        rec.run(rng, &methods[c], None, None);
    }
    rec.run(rng, &methods[planted_method], Some(planted_range), None);

    let noise = rng.gen_range(0..=shape.max_noise);
    let target = rec.hunk_events + noise;
    let mut guard = 0;
    while rec.hunk_events < target && guard < 10_000 {
        guard += 1;
        let pool = if rng.gen_bool(shape.bug_only_noise) {
            &bug_only[1..]
        } else {
            &common[..]
        };
        let m = *pool.choose(rng).unwrap();
        rec.run(rng, &methods[m], None, Some(target));
    }
    let noise_events = noise - (target - rec.hunk_events);
    rec.push(EventKind::Marker("bug".into()));

    PlantedSession {
        diff: DiffSet::new(hunks, "generated").expect("generated hunks are disjoint"),
        trace: SessionTrace::from_events(rec.events).expect("generated trace is valid"),
        methods: MethodMap::new(extents).expect("generated extents are disjoint"),
        planted: planted_id,
        noise_events,
    }
}

/// Appends `n` random events after the last event of `trace`.
pub fn append_noise<R: Rng>(rng: &mut R, trace: &SessionTrace, diff: &DiffSet, n: usize) -> SessionTrace {
    let mut events = trace.events().to_vec();
    let mut seq = events.last().map_or(0, |e| e.seq);
    let hunks = diff.hunks();
    for i in 0..n {
        seq += rng.gen_range(1..3);
        let kind = match rng.gen_range(0..10) {
            0 => EventKind::Marker(format!("late-{i}")),
            1..=3 => EventKind::Hunk(hunks.choose(rng).unwrap().id),
            _ => {
                let h = hunks.choose(rng).unwrap();
                let line = rng.gen_range(h.new_range.start.saturating_sub(12).max(1)..=h.new_range.end + 12);
                EventKind::Block(Location::new(h.file(), line))
            }
        };
        events.push(event(seq, kind));
    }
    SessionTrace::from_events(events).expect("appended trace is valid")
}

// ---------------------------------------------------------------------------
// Committed fixtures

pub fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

/// Hunk ranges in the reference manifest layout, one tab-separated row per
/// hunk.
pub fn render_hunk_rows(set: &DiffSet) -> String {
    set.hunks()
        .iter()
        .map(|h| {
            let kind = serde_json::to_value(h.kind).unwrap();
            format!(
                "{}\t{}\t{}\t{}\t{}\t{}\n",
                h.id,
                h.new_path,
                h.new_range,
                kind.as_str().unwrap(),
                h.old_path,
                h.old_range
            )
        })
        .collect()
}

pub fn corpus_cases() -> Vec<PathBuf> {
    let mut cases: Vec<_> = fs::read_dir(fixtures_dir().join("diff-corpus"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    cases.sort();
    cases
}

/// Compares every corpus case; returns the number checked or the first
/// mismatch.
pub fn check_corpus() -> Result<usize, String> {
    let cases = corpus_cases();
    for case in &cases {
        let diff = fs::read_to_string(case.join("change.diff")).unwrap();
        let expected = fs::read_to_string(case.join("expected.tsv")).unwrap();
        let set = parse_unified_diff(&diff).map_err(|e| format!("{}: {e}", case.display()))?;
        if render_hunk_rows(&set) != expected {
            return Err(format!("{}: hunk rows differ", case.display()));
        }
    }
    Ok(cases.len())
}

pub const SESSIONS: [&str; 3] = ["planted", "flip", "wide"];

pub struct Fixture {
    pub dir: PathBuf,
    pub diff: DiffSet,
    pub trace: SessionTrace,
    pub methods: MethodMap,
    pub manifest: Value,
}

pub fn load_fixture(name: &str) -> Fixture {
    let dir = fixtures_dir().join("sessions").join(name);
    let read = |f: &str| fs::read_to_string(dir.join(f)).unwrap();
    let manifest: Value = serde_json::from_str(&read("manifest.json")).unwrap();
    let prefix = manifest["strip_prefix"].as_str().unwrap();
    Fixture {
        diff: parse_unified_diff(&read("change.diff"))
            .unwrap()
            .strip_prefix(prefix)
            .unwrap(),
        trace: read_trace(read("trace.jsonl").as_bytes()).unwrap(),
        methods: MethodMap::from_json(&read("methods.json")).unwrap(),
        manifest,
        dir,
    }
}

pub fn expected_ranking(manifest: &Value, mode: &str) -> Vec<Value> {
    manifest["expected"][mode].as_array().unwrap().clone()
}

/// Results of `mode` in the manifest's row layout.
pub fn fixture_ranking(fx: &Fixture, mode: RankingMode) -> Vec<Value> {
    let opts = LocalizeOptions {
        bug_marker: fx.manifest["bug_marker"].as_str().unwrap().to_string(),
        baseline_marker: fx.manifest["baseline_marker"].as_str().map(str::to_string),
        mode: Some(mode),
        ..Default::default()
    };
    localize(&fx.diff, &fx.trace, &fx.methods, None, &opts)
        .unwrap()
        .results
        .iter()
        .map(|r| {
            serde_json::json!({
                "rank": r.final_rank,
                "hunk_id": r.region.hunk_id.0,
                "file": r.region.file,
                "start": r.region.lines.start,
                "end": r.region.lines.end,
                "diff_flag": r.diff_flag,
                "eo_position": r.eo_position,
            })
        })
        .collect()
}
