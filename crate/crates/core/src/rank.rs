//! Executed-change filtering and the ranking methods built on top of it.
//!
//! * Execution order: hunks are ranked by how recently they ran before the
//!   dump marker, latest first.
//! * Differential partition: a region is flagged when a location covered in
//!   the bug scenario but not the baseline lies in the same method within a
//!   few lines of it.
//! * The final order is a lexicographic combination of the flag, the
//!   execution-order position and an optional textual score.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::diff::{executed_regions, ChangeRegion, DiffSet, HunkId, LineRange};
use crate::method_map::MethodMap;
use crate::trace::{CoverageSnapshot, HunkHit, Location};

/// Default vicinity for the differential partition, in lines.
pub const DEFAULT_MAX_DIST: u32 = 10;

/// Executed sub-ranges of every hunk touched by `coverage`, in diff order.
/// Hunks without executed lines are dropped.
pub fn executed_filter(diffset: &DiffSet, coverage: &CoverageSnapshot) -> Vec<ChangeRegion> {
    let mut lines_by_file: HashMap<&str, BTreeSet<u32>> = HashMap::new();
    let mut regions = Vec::new();
    for hunk in diffset.hunks() {
        let lines = lines_by_file
            .entry(hunk.file())
            .or_insert_with(|| coverage.lines_in(hunk.file()));
        regions.extend(executed_regions(hunk, lines));
    }
    regions
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExecutionOrderEntry {
    pub hunk_id: HunkId,
    /// Seq of the hunk's latest event before the dump.
    pub last_seq: u64,
    /// 1 for the hunk closest to the dump.
    pub eo_position: u32,
    /// Hunk events after `last_seq` up to the dump, plus one.
    pub trace_distance: u64,
}

/// Execution-order entries keyed by hunk.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExecutionOrder {
    entries: HashMap<HunkId, ExecutionOrderEntry>,
}

impl ExecutionOrder {
    pub fn entry(&self, hunk: HunkId) -> Option<&ExecutionOrderEntry> {
        self.entries.get(&hunk)
    }

    pub fn position(&self, hunk: HunkId) -> Option<u32> {
        self.entries.get(&hunk).map(|e| e.eo_position)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries ordered by position.
    pub fn entries(&self) -> Vec<ExecutionOrderEntry> {
        let mut all: Vec<_> = self.entries.values().copied().collect();
        all.sort_by_key(|e| e.eo_position);
        all
    }
}

/// Ranks the hunks owning `regions` by their last occurrence in `window`.
///
/// Only hunks that own at least one region receive a position; events of
/// other hunks still count towards trace distance.
pub fn execution_order_rank(window: &[HunkHit], regions: &[ChangeRegion]) -> ExecutionOrder {
    let candidates: HashSet<HunkId> = regions.iter().map(|r| r.hunk_id).collect();
    let mut entries = HashMap::with_capacity(candidates.len());
    let mut position = 0u32;
    for (idx, hit) in window.iter().enumerate().rev() {
        if entries.len() == candidates.len() {
            break;
        }
        if !candidates.contains(&hit.hunk) || entries.contains_key(&hit.hunk) {
            continue;
        }
        position += 1;
        entries.insert(
            hit.hunk,
            ExecutionOrderEntry {
                hunk_id: hit.hunk,
                last_seq: hit.seq,
                eo_position: position,
                trace_distance: (window.len() - idx) as u64,
            },
        );
    }
    ExecutionOrder { entries }
}

/// Innermost method extent of a line, or `None` for code outside any method.
type MethodKey = Option<(u32, u32)>;

fn method_key(map: &MethodMap, file: &str, line: u32) -> MethodKey {
    map.extent_at(file, line).map(|e| (e.start, e.end))
}

/// Flags each region that has a coverage-diff location within `max_dist`
/// lines in the same method.
///
/// Without a method map entry for the file only the distance is checked.
pub fn differential_partition(
    regions: &[ChangeRegion],
    diff_locations: &BTreeSet<Location>,
    method_map: &MethodMap,
    max_dist: u32,
) -> Vec<bool> {
    regions
        .iter()
        .map(|region| {
            let lo = Location::new(&region.file, region.lines.start.saturating_sub(max_dist));
            let hi = Location::new(&region.file, region.lines.end.saturating_add(max_dist));
            let mut nearby = diff_locations
                .range(lo..=hi)
                .filter(|d| region.lines.distance_to(d.line) <= max_dist)
                .peekable();
            if nearby.peek().is_none() {
                return false;
            }
            if !method_map.has_file(&region.file) {
                return true;
            }
            let region_methods: HashSet<MethodKey> = region
                .lines
                .lines()
                .map(|l| method_key(method_map, &region.file, l))
                .collect();
            nearby.any(|d| region_methods.contains(&method_key(method_map, &region.file, d.line)))
        })
        .collect()
}

/// Where the textual score sits in the combined key.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TextualPriority {
    /// After the differential flag and execution order.
    #[default]
    Tertiary,
    /// Between the differential flag and execution order.
    Secondary,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankedResult {
    pub region: ChangeRegion,
    pub diff_flag: bool,
    pub eo_position: Option<u32>,
    pub textual_score: Option<f64>,
    pub final_rank: u32,
}

/// Sort key of one region in [`combined_rank`].
#[derive(Debug, Clone, Copy)]
pub struct RankKey<'a> {
    pub diff_flag: Option<bool>,
    pub eo_position: Option<u32>,
    pub textual_score: Option<f64>,
    pub file: &'a str,
    pub lines: LineRange,
    pub hunk_id: HunkId,
}

impl RankKey<'_> {
    fn compare(&self, other: &Self, priority: TextualPriority) -> Ordering {
        let flag = other.diff_flag.cmp(&self.diff_flag);
        let eo = match (self.eo_position, other.eo_position) {
            (Some(a), Some(b)) => a.cmp(&b),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => Ordering::Equal,
        };
        let text = match (self.textual_score, other.textual_score) {
            (Some(a), Some(b)) => b.total_cmp(&a),
            _ => Ordering::Equal,
        };
        let tail = self
            .file
            .cmp(other.file)
            .then(self.lines.start.cmp(&other.lines.start))
            .then(self.lines.end.cmp(&other.lines.end))
            .then(self.hunk_id.cmp(&other.hunk_id));
        match priority {
            TextualPriority::Tertiary => flag.then(eo).then(text).then(tail),
            TextualPriority::Secondary => flag.then(text).then(eo).then(tail),
        }
    }
}

/// Orders regions by (diff flag, execution order, textual score, file,
/// start line) and assigns 1-based final ranks.
///
/// `diff_flags` and `textual_scores`, when present, are parallel to
/// `regions`; absent stages drop out of the key.
pub fn combined_rank(
    regions: &[ChangeRegion],
    diff_flags: Option<&[bool]>,
    order: &ExecutionOrder,
    textual_scores: Option<&[f64]>,
    priority: TextualPriority,
) -> Vec<RankedResult> {
    if let Some(flags) = diff_flags {
        assert_eq!(flags.len(), regions.len(), "one diff flag per region");
    }
    if let Some(scores) = textual_scores {
        assert_eq!(scores.len(), regions.len(), "one textual score per region");
    }

    let keys: Vec<RankKey<'_>> = regions
        .iter()
        .enumerate()
        .map(|(i, r)| RankKey {
            diff_flag: diff_flags.map(|f| f[i]),
            eo_position: order.position(r.hunk_id),
            textual_score: textual_scores.map(|s| s[i]),
            file: &r.file,
            lines: r.lines,
            hunk_id: r.hunk_id,
        })
        .collect();
    let mut idx: Vec<usize> = (0..regions.len()).collect();
    idx.sort_by(|&a, &b| keys[a].compare(&keys[b], priority));

    idx.into_iter()
        .enumerate()
        .map(|(rank, i)| RankedResult {
            region: regions[i].clone(),
            diff_flag: keys[i].diff_flag.unwrap_or(false),
            eo_position: keys[i].eo_position,
            textual_score: keys[i].textual_score,
            final_rank: rank as u32 + 1,
        })
        .collect()
}

/// Regions grouped by hunk, for callers that need per-hunk views.
pub fn regions_by_hunk(regions: &[ChangeRegion]) -> BTreeMap<HunkId, Vec<&ChangeRegion>> {
    let mut grouped: BTreeMap<HunkId, Vec<&ChangeRegion>> = BTreeMap::new();
    for r in regions {
        grouped.entry(r.hunk_id).or_default().push(r);
    }
    grouped
}
