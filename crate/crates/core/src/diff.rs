//! Unified diff model.
//!
//! A diff is parsed into [`Hunk`]s, each covering the full `+start,count`
//! range of its `@@` header in new-file (buggy version) coordinates. Hunks
//! get ordinal ids in file-then-position order, so identical input bytes
//! always produce identical ids.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Path used by unified diffs for the missing side of an added or removed file.
pub const DEV_NULL: &str = "/dev/null";

/// Identifier of a hunk within a [`DiffSet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HunkId(pub u64);

impl fmt::Display for HunkId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Inclusive, 1-based line range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LineRange {
    pub start: u32,
    pub end: u32,
}

impl LineRange {
    /// Returns `None` unless `1 <= start <= end`.
    pub fn new(start: u32, end: u32) -> Option<Self> {
        (start >= 1 && end >= start).then_some(LineRange { start, end })
    }

    pub fn single(line: u32) -> Option<Self> {
        Self::new(line, line)
    }

    pub fn contains(&self, line: u32) -> bool {
        self.start <= line && line <= self.end
    }

    pub fn line_count(&self) -> u32 {
        self.end - self.start + 1
    }

    /// Absolute line distance from `line` to the nearest end of the range,
    /// zero when the line is inside.
    pub fn distance_to(&self, line: u32) -> u32 {
        if line < self.start {
            self.start - line
        } else if line > self.end {
            line - self.end
        } else {
            0
        }
    }

    pub fn overlaps(&self, other: &LineRange) -> bool {
        self.start <= other.end && other.start <= self.end
    }

    pub fn lines(&self) -> std::ops::RangeInclusive<u32> {
        self.start..=self.end
    }
}

impl fmt::Display for LineRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.start, self.end)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HunkKind {
    Addition,
    Modification,
    Deletion,
}

/// A consecutive range of added, updated or removed lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hunk {
    pub id: HunkId,
    pub old_path: String,
    pub new_path: String,
    /// Old-file lines; an empty old side is anchored like a pure deletion.
    pub old_range: LineRange,
    /// New-file lines. For a pure deletion this is the single anchor line
    /// following the removed block.
    pub new_range: LineRange,
    pub kind: HunkKind,
    /// Line counts declared by the `@@` header.
    pub old_len: u32,
    pub new_len: u32,
    /// Added and context lines, in new-file order.
    pub new_lines: Vec<String>,
}

impl Hunk {
    /// True when the hunk has no new-side lines at all.
    pub fn is_pure_deletion(&self) -> bool {
        self.new_len == 0
    }

    pub fn file(&self) -> &str {
        &self.new_path
    }
}

/// A sub-range of a hunk, the unit that gets ranked.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChangeRegion {
    pub hunk_id: HunkId,
    pub file: String,
    pub lines: LineRange,
    pub executed: bool,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiffError {
    #[error("line {line}: malformed hunk header `{text}`")]
    MalformedHeader { line: usize, text: String },

    #[error("line {line}: hunk body disagrees with header `{header}`: {reason}")]
    RangeMismatch {
        line: usize,
        header: String,
        reason: String,
    },

    #[error("hunks {first} and {second} overlap in {file}")]
    OverlappingHunks {
        file: String,
        first: HunkId,
        second: HunkId,
    },

    #[error("duplicate hunk id {0}")]
    DuplicateId(HunkId),
}

/// All hunks of one diff, indexed for `(file, line)` lookup.
#[derive(Debug, Clone, Default)]
pub struct DiffSet {
    hunks: Vec<Hunk>,
    source: String,
    // file -> hunk positions sorted by new_range.start
    by_file: HashMap<String, Vec<usize>>,
    by_id: HashMap<HunkId, usize>,
}

impl DiffSet {
    /// Builds a diff set, checking id uniqueness and per-file non-overlap.
    pub fn new(hunks: Vec<Hunk>, source: impl Into<String>) -> Result<Self, DiffError> {
        let mut by_id = HashMap::with_capacity(hunks.len());
        for (pos, hunk) in hunks.iter().enumerate() {
            if by_id.insert(hunk.id, pos).is_some() {
                return Err(DiffError::DuplicateId(hunk.id));
            }
        }

        let mut by_file: HashMap<String, Vec<usize>> = HashMap::new();
        for (pos, hunk) in hunks.iter().enumerate() {
            if hunk.new_path == DEV_NULL {
                continue;
            }
            by_file.entry(hunk.new_path.clone()).or_default().push(pos);
        }
        for (file, positions) in by_file.iter_mut() {
            positions.sort_by_key(|&p| (hunks[p].new_range.start, hunks[p].new_range.end));
            for pair in positions.windows(2) {
                let (a, b) = (&hunks[pair[0]], &hunks[pair[1]]);
                if a.new_range.overlaps(&b.new_range) {
                    return Err(DiffError::OverlappingHunks {
                        file: file.clone(),
                        first: a.id,
                        second: b.id,
                    });
                }
            }
        }

        Ok(DiffSet {
            hunks,
            source: source.into(),
            by_file,
            by_id,
        })
    }

    pub fn hunks(&self) -> &[Hunk] {
        &self.hunks
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn len(&self) -> usize {
        self.hunks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hunks.is_empty()
    }

    pub fn hunk(&self, id: HunkId) -> Option<&Hunk> {
        self.by_id.get(&id).map(|&p| &self.hunks[p])
    }

    /// Hunks touching `file`, ordered by start line.
    pub fn hunks_in(&self, file: &str) -> impl Iterator<Item = &Hunk> {
        self.by_file
            .get(file)
            .into_iter()
            .flatten()
            .map(|&p| &self.hunks[p])
    }

    /// Returns the hunk whose new-file range contains `(file, line)`.
    pub fn locate(&self, file: &str, line: u32) -> Option<HunkId> {
        let positions = self.by_file.get(file)?;
        let after = positions.partition_point(|&p| self.hunks[p].new_range.start <= line);
        let candidate = &self.hunks[*positions.get(after.checked_sub(1)?)?];
        candidate.new_range.contains(line).then_some(candidate.id)
    }

    /// Removes `prefix` from every path that starts with it. Fails if two
    /// paths collapse into one and their hunks then overlap.
    pub fn strip_prefix(&self, prefix: &str) -> Result<DiffSet, DiffError> {
        if prefix.is_empty() {
            return Ok(self.clone());
        }
        let hunks = self
            .hunks
            .iter()
            .cloned()
            .map(|mut h| {
                h.old_path = strip_path(&h.old_path, prefix);
                h.new_path = strip_path(&h.new_path, prefix);
                h
            })
            .collect();
        DiffSet::new(hunks, self.source.clone())
    }
}

pub(crate) fn strip_path(path: &str, prefix: &str) -> String {
    path.strip_prefix(prefix).unwrap_or(path).to_string()
}

/// Maximal contiguous runs of `executed_lines` inside the hunk, ordered by
/// start line.
///
/// A pure deletion yields its anchor line as a single region when that line
/// was executed.
pub fn executed_regions(hunk: &Hunk, executed_lines: &BTreeSet<u32>) -> Vec<ChangeRegion> {
    let region = |lines: LineRange| ChangeRegion {
        hunk_id: hunk.id,
        file: hunk.new_path.clone(),
        lines,
        executed: true,
    };

    let mut regions = Vec::new();
    let mut run: Option<LineRange> = None;
    for &line in executed_lines.range(hunk.new_range.lines()) {
        match run.as_mut() {
            Some(r) if r.end + 1 == line => r.end = line,
            _ => {
                if let Some(done) = run.take() {
                    regions.push(region(done));
                }
                run = Some(LineRange { start: line, end: line });
            }
        }
    }
    if let Some(done) = run {
        regions.push(region(done));
    }
    regions
}

#[derive(Debug, Clone, Copy)]
struct HunkHeader {
    old_start: u32,
    old_len: u32,
    new_start: u32,
    new_len: u32,
}

/// `@@ -a[,b] +c[,d] @@[ section]`
fn parse_header(text: &str) -> Option<HunkHeader> {
    let rest = text.strip_prefix("@@ -")?;
    let (ranges, _section) = rest.split_once(" @@")?;
    let (old, new) = ranges.split_once(" +")?;

    fn span(s: &str) -> Option<(u32, u32)> {
        match s.split_once(',') {
            Some((start, len)) => Some((start.parse().ok()?, len.parse().ok()?)),
            None => Some((s.parse().ok()?, 1)),
        }
    }
    let (old_start, old_len) = span(old)?;
    let (new_start, new_len) = span(new)?;
    // A non-empty side must start at line 1 or later.
    if (old_len > 0 && old_start == 0) || (new_len > 0 && new_start == 0) {
        return None;
    }
    Some(HunkHeader {
        old_start,
        old_len,
        new_start,
        new_len,
    })
}

/// Range of a side with `len` lines starting at `start`; an empty side is
/// anchored to the line following the position given in the header.
fn side_range(start: u32, len: u32) -> LineRange {
    if len == 0 {
        LineRange {
            start: start + 1,
            end: start + 1,
        }
    } else {
        LineRange {
            start,
            end: start + len - 1,
        }
    }
}

/// Path from a `---`/`+++` line: drops the marker, any tab-separated
/// timestamp, and surrounding quotes.
fn header_path(rest: &str) -> String {
    let path = rest.split('\t').next().unwrap_or(rest).trim_end();
    match path.strip_prefix('"').and_then(|p| p.strip_suffix('"')) {
        Some(quoted) => unquote(quoted),
        None => path.to_string(),
    }
}

/// C-style unquoting as done by git, including `\ooo` octal bytes.
fn unquote(s: &str) -> String {
    let bytes = s.as_bytes();
    let mut out = Vec::with_capacity(bytes.len());
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        i += 1;
        if b != b'\\' {
            out.push(b);
            continue;
        }
        let Some(&next) = bytes.get(i) else {
            out.push(b'\\');
            break;
        };
        i += 1;
        match next {
            b't' => out.push(b'\t'),
            b'n' => out.push(b'\n'),
            b'r' => out.push(b'\r'),
            b'a' => out.push(0x07),
            b'b' => out.push(0x08),
            b'f' => out.push(0x0c),
            b'v' => out.push(0x0b),
            b'0'..=b'3'
                if bytes.len() >= i + 2
                    && bytes[i..i + 2].iter().all(|d| (b'0'..=b'7').contains(d)) =>
            {
                let digits = [next, bytes[i], bytes[i + 1]];
                out.push(digits.iter().fold(0u8, |acc, d| acc * 8 + (d - b'0')));
                i += 2;
            }
            other => out.push(other),
        }
    }
    String::from_utf8_lossy(&out).into_owned()
}

fn looks_like_body_line(line: &str) -> bool {
    match line.as_bytes().first() {
        Some(b' ') => true,
        Some(b'+') => !line.starts_with("+++ "),
        Some(b'-') => !line.starts_with("--- ") && line != "-- ",
        _ => false,
    }
}

struct RawHunk {
    old_path: String,
    new_path: String,
    header: HunkHeader,
    kind: HunkKind,
    new_lines: Vec<String>,
}

/// Parses unified diff text into a [`DiffSet`].
///
/// Anything outside `---`/`+++` file headers and `@@` sections (git
/// extended headers, `Only in`, `Binary files ... differ`) is ignored.
pub fn parse_unified_diff(text: &str) -> Result<DiffSet, DiffError> {
    let lines: Vec<&str> = text
        .split('\n')
        .map(|l| l.strip_suffix('\r').unwrap_or(l))
        .collect();
    // `split` yields a trailing empty piece for LF-terminated input.
    let total = if text.ends_with('\n') {
        lines.len() - 1
    } else {
        lines.len()
    };

    let mut raw: Vec<RawHunk> = Vec::new();
    let mut paths: Option<(String, String)> = None;
    let mut i = 0;
    while i < total {
        let line = lines[i];
        if line.starts_with("diff ") {
            paths = None;
            i += 1;
        } else if let (Some(old), Some(new)) = (
            line.strip_prefix("--- "),
            lines[..total]
                .get(i + 1)
                .and_then(|next| next.strip_prefix("+++ ")),
        ) {
            paths = Some((header_path(old), header_path(new)));
            i += 2;
        } else if line.starts_with("@@") {
            let header_line = i + 1;
            let header = parse_header(line).ok_or_else(|| DiffError::MalformedHeader {
                line: header_line,
                text: line.to_string(),
            })?;
            let Some((old_path, new_path)) = paths.clone() else {
                return Err(DiffError::MalformedHeader {
                    line: header_line,
                    text: line.to_string(),
                });
            };
            let mismatch = |at: usize, reason: &str| DiffError::RangeMismatch {
                line: at,
                header: line.to_string(),
                reason: reason.to_string(),
            };

            let (mut old_left, mut new_left) = (header.old_len, header.new_len);
            let (mut added, mut removed) = (false, false);
            let mut new_lines = Vec::with_capacity(header.new_len as usize);
            i += 1;
            while old_left > 0 || new_left > 0 {
                let Some(&body) = lines[..total].get(i) else {
                    return Err(mismatch(i, "diff ends inside hunk"));
                };
                let (tag, content) = match body.as_bytes().first() {
                    Some(&b) => (b, &body[1..]),
                    // Some tools strip the space from empty context lines.
                    None => (b' ', ""),
                };
                match tag {
                    b' ' => {
                        if old_left == 0 || new_left == 0 {
                            return Err(mismatch(i + 1, "too many context lines"));
                        }
                        old_left -= 1;
                        new_left -= 1;
                        new_lines.push(content.to_string());
                    }
                    b'-' => {
                        if old_left == 0 {
                            return Err(mismatch(i + 1, "too many removed lines"));
                        }
                        old_left -= 1;
                        removed = true;
                    }
                    b'+' => {
                        if new_left == 0 {
                            return Err(mismatch(i + 1, "too many added lines"));
                        }
                        new_left -= 1;
                        added = true;
                        new_lines.push(content.to_string());
                    }
                    b'\\' => {}
                    _ => return Err(mismatch(i + 1, "hunk body ended early")),
                }
                i += 1;
            }
            while lines[..total].get(i).is_some_and(|l| l.starts_with('\\')) {
                i += 1;
            }
            if lines[..total]
                .get(i)
                .is_some_and(|next| looks_like_body_line(next))
            {
                return Err(mismatch(i + 1, "hunk body longer than declared"));
            }

            let kind = match (added, removed) {
                (true, false) => HunkKind::Addition,
                (false, true) => HunkKind::Deletion,
                _ => HunkKind::Modification,
            };
            raw.push(RawHunk {
                old_path,
                new_path,
                header,
                kind,
                new_lines,
            });
        } else {
            i += 1;
        }
    }

    // Ordinal ids in file-then-position order. Files keep their first
    // appearance order; removed files are keyed by their old path.
    let file_key = |h: &RawHunk| {
        if h.new_path == DEV_NULL {
            h.old_path.clone()
        } else {
            h.new_path.clone()
        }
    };
    let mut file_order: HashMap<String, usize> = HashMap::new();
    for h in &raw {
        let next = file_order.len();
        file_order.entry(file_key(h)).or_insert(next);
    }
    let mut order: Vec<usize> = (0..raw.len()).collect();
    order.sort_by_key(|&p| (file_order[&file_key(&raw[p])], raw[p].header.new_start));

    let mut slots: Vec<Option<RawHunk>> = raw.into_iter().map(Some).collect();
    let hunks = order
        .into_iter()
        .enumerate()
        .map(|(ordinal, p)| {
            let h = slots[p].take().expect("each hunk placed once");
            Hunk {
                id: HunkId(ordinal as u64 + 1),
                old_range: side_range(h.header.old_start, h.header.old_len),
                new_range: side_range(h.header.new_start, h.header.new_len),
                old_len: h.header.old_len,
                new_len: h.header.new_len,
                old_path: h.old_path,
                new_path: h.new_path,
                kind: h.kind,
                new_lines: h.new_lines,
            }
        })
        .collect();

    DiffSet::new(hunks, "")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const SIMPLE: &str = "\
--- a/src/app.py\t2024-01-01 00:00:00
+++ b/src/app.py\t2024-01-02 00:00:00
@@ -10,3 +12,4 @@ def main():
 keep
-old
+new
+extra
 tail
";

    fn first_hunk(text: &str) -> Hunk {
        parse_unified_diff(text).unwrap().hunks()[0].clone()
    }

    #[test]
    fn header_fixes_new_range() {
        let set = parse_unified_diff(SIMPLE).unwrap();
        assert_eq!(set.len(), 1);
        let h = &set.hunks()[0];
        assert_eq!(h.id, HunkId(1));
        assert_eq!(h.new_range, LineRange { start: 12, end: 15 });
        assert_eq!(h.old_range, LineRange { start: 10, end: 12 });
        assert_eq!(h.old_path, "a/src/app.py");
        assert_eq!(h.new_path, "b/src/app.py");
        assert_eq!(h.kind, HunkKind::Modification);
        assert_eq!(h.new_lines, vec!["keep", "new", "extra", "tail"]);
    }

    #[test]
    fn empty_input_is_empty_set() {
        assert!(parse_unified_diff("").unwrap().is_empty());
        assert!(parse_unified_diff("Only in a: x\n").unwrap().is_empty());
    }

    #[test]
    fn malformed_header_is_reported_with_line() {
        let text = "--- a/x\n+++ b/x\n@@ -1,2 +1 @\n a\n";
        match parse_unified_diff(text) {
            Err(DiffError::MalformedHeader { line, text }) => {
                assert_eq!(line, 3);
                assert!(text.contains("@@"));
            }
            other => panic!("unexpected {other:?}"),
        }
        let zero_start = "--- a/x\n+++ b/x\n@@ -0,2 +1,2 @@\n a\n b\n";
        assert!(matches!(
            parse_unified_diff(zero_start),
            Err(DiffError::MalformedHeader { .. })
        ));
    }

    #[test]
    fn hunk_before_file_header_is_malformed() {
        assert!(matches!(
            parse_unified_diff("@@ -1 +1 @@\n-a\n+b\n"),
            Err(DiffError::MalformedHeader { line: 1, .. })
        ));
    }

    #[test]
    fn short_and_long_bodies_mismatch() {
        let short = "--- a/x\n+++ b/x\n@@ -1,3 +1,3 @@\n a\n-b\n+c\n";
        assert!(matches!(
            parse_unified_diff(short),
            Err(DiffError::RangeMismatch { .. })
        ));
        let long = "--- a/x\n+++ b/x\n@@ -1,1 +1,1 @@\n-a\n+b\n+c\n";
        assert!(matches!(
            parse_unified_diff(long),
            Err(DiffError::RangeMismatch { .. })
        ));
        let interrupted = "--- a/x\n+++ b/x\n@@ -1,2 +1,2 @@\n a\n@@ -5 +5 @@\n";
        assert!(matches!(
            parse_unified_diff(interrupted),
            Err(DiffError::RangeMismatch { .. })
        ));
    }

    #[test]
    fn pure_deletion_anchors_to_following_line() {
        let text = "--- a/x\n+++ b/x\n@@ -5,2 +4,0 @@\n-gone\n-gone too\n";
        let set = parse_unified_diff(text).unwrap();
        let h = &set.hunks()[0];
        assert!(h.is_pure_deletion());
        assert_eq!(h.kind, HunkKind::Deletion);
        assert_eq!(h.new_range, LineRange { start: 5, end: 5 });

        let at_top = "--- a/x\n+++ b/x\n@@ -1 +0,0 @@\n-first\n";
        let h = first_hunk(at_top);
        assert_eq!(h.new_range, LineRange { start: 1, end: 1 });
    }

    #[test]
    fn addition_and_no_newline_marker() {
        let text = "--- a/x\n+++ b/x\n@@ -3,0 +4,2 @@\n+one\n+two\n\\ No newline at end of file\n";
        let h = first_hunk(text);
        assert_eq!(h.kind, HunkKind::Addition);
        assert_eq!(h.new_range, LineRange { start: 4, end: 5 });
        assert_eq!(h.old_range, LineRange { start: 4, end: 4 });
    }

    #[test]
    fn removed_line_that_looks_like_header() {
        // "--- x" inside a body is a removed "-- x" line, not a file header.
        let text = "--- a/x\n+++ b/x\n@@ -1,2 +1,1 @@\n--- x\n keep\n";
        let h = first_hunk(text);
        assert_eq!(h.kind, HunkKind::Deletion);
        assert_eq!(h.new_range, LineRange { start: 1, end: 1 });
    }

    #[test]
    fn ids_follow_file_then_position() {
        let text = "\
diff --git a/one b/one
--- a/one
+++ b/one
@@ -1 +1 @@
-a
+b
@@ -10 +10 @@
-a
+b
diff --git a/two b/two
--- a/two
+++ b/two
@@ -3 +3 @@
-a
+b
";
        let set = parse_unified_diff(text).unwrap();
        let ids: Vec<_> = set
            .hunks()
            .iter()
            .map(|h| (h.id.0, h.new_path.as_str(), h.new_range.start))
            .collect();
        assert_eq!(ids, vec![(1, "b/one", 1), (2, "b/one", 10), (3, "b/two", 3)]);
    }

    #[test]
    fn quoted_paths_are_unquoted() {
        let text = "--- \"a/with space\"\n+++ \"b/with space\"\n@@ -1 +1 @@\n-a\n+b\n";
        let set = parse_unified_diff(text).unwrap();
        assert_eq!(set.hunks()[0].new_path, "b/with space");

        let text = "--- \"a/caf\\303\\251.py\"\n+++ \"b/caf\\303\\251.py\"\n@@ -1 +1 @@\n-a\n+b\n";
        let set = parse_unified_diff(text).unwrap();
        assert_eq!(set.hunks()[0].new_path, "b/café.py");
    }

    #[test]
    fn crlf_input() {
        let text = SIMPLE.replace('\n', "\r\n");
        let set = parse_unified_diff(&text).unwrap();
        assert_eq!(set.hunks()[0].new_range, LineRange { start: 12, end: 15 });
        assert_eq!(set.hunks()[0].new_path, "b/src/app.py");
    }

    #[test]
    fn overlapping_hunks_rejected() {
        let text = "--- a/x\n+++ b/x\n@@ -1,3 +1,3 @@\n a\n b\n c\n@@ -2,2 +2,2 @@\n b\n c\n";
        assert!(matches!(
            parse_unified_diff(text),
            Err(DiffError::OverlappingHunks { .. })
        ));
    }

    #[test]
    fn locate_contains_and_misses() {
        let set = parse_unified_diff(SIMPLE).unwrap();
        assert_eq!(set.locate("b/src/app.py", 13), Some(HunkId(1)));
        assert_eq!(set.locate("b/src/app.py", 12), Some(HunkId(1)));
        assert_eq!(set.locate("b/src/app.py", 15), Some(HunkId(1)));
        assert_eq!(set.locate("b/src/app.py", 11), None);
        assert_eq!(set.locate("b/src/app.py", 16), None);
        assert_eq!(set.locate("elsewhere.py", 13), None);
    }

    #[test]
    fn strip_prefix_rewrites_paths() {
        let set = parse_unified_diff(SIMPLE)
            .unwrap()
            .strip_prefix("b/")
            .unwrap();
        assert_eq!(set.hunks()[0].new_path, "src/app.py");
        assert_eq!(set.locate("src/app.py", 13), Some(HunkId(1)));
    }

    fn hunk(id: u64, start: u32, end: u32) -> Hunk {
        Hunk {
            id: HunkId(id),
            old_path: "f".into(),
            new_path: "f".into(),
            old_range: LineRange { start, end },
            new_range: LineRange { start, end },
            kind: HunkKind::Modification,
            old_len: end - start + 1,
            new_len: end - start + 1,
            new_lines: Vec::new(),
        }
    }

    #[test]
    fn executed_regions_are_maximal_runs() {
        let h = hunk(1, 10, 20);
        let executed = BTreeSet::from([10, 11, 12, 17, 18]);
        let regions: Vec<_> = executed_regions(&h, &executed)
            .into_iter()
            .map(|r| (r.lines.start, r.lines.end))
            .collect();
        assert_eq!(regions, vec![(10, 12), (17, 18)]);
        assert!(executed_regions(&h, &BTreeSet::new()).is_empty());
        // lines outside the hunk are ignored
        assert!(executed_regions(&h, &BTreeSet::from([9, 21])).is_empty());
    }

    #[test]
    fn pure_deletion_region_follows_anchor() {
        let mut h = hunk(1, 5, 5);
        h.new_len = 0;
        h.kind = HunkKind::Deletion;
        assert_eq!(executed_regions(&h, &BTreeSet::from([5])).len(), 1);
        assert!(executed_regions(&h, &BTreeSet::from([4, 6])).is_empty());
    }

    /// Random non-overlapping hunks for one file.
    fn hunk_layout() -> impl Strategy<Value = Vec<(u32, u32)>> {
        prop::collection::vec((0u32..6, 1u32..8), 0..30).prop_map(|gaps| {
            let mut next = 1;
            gaps.into_iter()
                .map(|(gap, len)| {
                    let start = next + gap;
                    next = start + len;
                    (start, start + len - 1)
                })
                .collect()
        })
    }

    proptest! {
        #[test]
        fn locate_matches_linear_scan(layout in hunk_layout(), queries in prop::collection::vec(0u32..300, 1..50)) {
            let hunks: Vec<Hunk> = layout.iter().enumerate()
                .map(|(i, &(s, e))| hunk(i as u64 + 1, s, e))
                .collect();
            let set = DiffSet::new(hunks.clone(), "").unwrap();
            for q in queries {
                let expected = hunks.iter().find(|h| h.new_range.start <= q && q <= h.new_range.end).map(|h| h.id);
                prop_assert_eq!(set.locate("f", q), expected);
            }
        }

        #[test]
        fn regions_match_run_length_scan(start in 1u32..50, len in 1u32..40, lines in prop::collection::btree_set(0u32..100, 0..60)) {
            let h = hunk(1, start, start + len - 1);
            let got: Vec<(u32, u32)> = executed_regions(&h, &lines)
                .iter().map(|r| (r.lines.start, r.lines.end)).collect();

            let mut expected = Vec::new();
            let mut line = h.new_range.start;
            while line <= h.new_range.end {
                if lines.contains(&line) {
                    let run_start = line;
                    while line < h.new_range.end && lines.contains(&(line + 1)) {
                        line += 1;
                    }
                    expected.push((run_start, line));
                }
                line += 1;
            }
            prop_assert_eq!(&got, &expected);

            let union: BTreeSet<u32> = got.iter().flat_map(|&(s, e)| s..=e).collect();
            let clipped: BTreeSet<u32> = lines.range(h.new_range.lines()).copied().collect();
            prop_assert_eq!(union, clipped);
        }

        #[test]
        fn parse_is_deterministic(layout in hunk_layout()) {
            let mut text = String::from("--- a/f\n+++ b/f\n");
            for &(s, e) in &layout {
                text.push_str(&format!("@@ -{s},{} +{s},{} @@\n", e - s + 1, e - s + 1));
                for _ in s..e { text.push_str(" ctx\n"); }
                text.push_str("-old\n+new\n");
            }
            let a = parse_unified_diff(&text).unwrap();
            let b = parse_unified_diff(&text).unwrap();
            prop_assert_eq!(a.hunks(), b.hunks());
            prop_assert_eq!(a.len(), layout.len());
        }
    }
}
