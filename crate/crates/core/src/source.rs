//! Access to buggy-version source text.

use std::collections::{BTreeMap, HashMap};
use std::path::{Component, Path, PathBuf};
use std::sync::{Arc, Mutex};

use crate::diff::DiffSet;

pub trait SourceProvider {
    /// Text of a 1-based line, if known.
    fn line_text(&self, file: &str, line: u32) -> Option<String>;

    /// Number of lines in `file`, if the whole file is known.
    fn line_count(&self, file: &str) -> Option<u32>;
}

/// Files under a root directory, read lazily and cached.
#[derive(Debug)]
pub struct SourceTree {
    root: PathBuf,
    cache: Mutex<HashMap<String, Option<Arc<Vec<String>>>>>,
}

impl SourceTree {
    pub fn new(root: impl Into<PathBuf>) -> Self {
        SourceTree {
            root: root.into(),
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    /// Resolves `file` under the root. Absolute paths and `..` components
    /// are refused.
    pub fn resolve(&self, file: &str) -> Option<PathBuf> {
        let rel = Path::new(file);
        if rel
            .components()
            .any(|c| !matches!(c, Component::Normal(_) | Component::CurDir))
        {
            return None;
        }
        Some(self.root.join(rel))
    }

    /// All lines of `file`, without terminators.
    pub fn lines(&self, file: &str) -> Option<Arc<Vec<String>>> {
        let mut cache = self.cache.lock().expect("source cache poisoned");
        if let Some(hit) = cache.get(file) {
            return hit.clone();
        }
        let loaded = self
            .resolve(file)
            .and_then(|p| std::fs::read(p).ok())
            .map(|bytes| {
                Arc::new(
                    String::from_utf8_lossy(&bytes)
                        .lines()
                        .map(str::to_string)
                        .collect::<Vec<_>>(),
                )
            });
        cache.insert(file.to_string(), loaded.clone());
        loaded
    }
}

impl SourceProvider for SourceTree {
    fn line_text(&self, file: &str, line: u32) -> Option<String> {
        let lines = self.lines(file)?;
        lines.get(line.checked_sub(1)? as usize).cloned()
    }

    fn line_count(&self, file: &str) -> Option<u32> {
        self.lines(file).map(|l| l.len() as u32)
    }
}

/// New-side lines recovered from hunk bodies; a partial view of each file.
#[derive(Debug, Default)]
pub struct HunkText {
    lines: HashMap<String, BTreeMap<u32, String>>,
}

impl HunkText {
    pub fn new(diffset: &DiffSet) -> Self {
        let mut lines: HashMap<String, BTreeMap<u32, String>> = HashMap::new();
        for hunk in diffset.hunks().iter().filter(|h| !h.is_pure_deletion()) {
            let file = lines.entry(hunk.new_path.clone()).or_default();
            for (offset, text) in hunk.new_lines.iter().enumerate() {
                file.insert(hunk.new_range.start + offset as u32, text.clone());
            }
        }
        HunkText { lines }
    }
}

impl SourceProvider for HunkText {
    fn line_text(&self, file: &str, line: u32) -> Option<String> {
        self.lines.get(file)?.get(&line).cloned()
    }

    fn line_count(&self, _file: &str) -> Option<u32> {
        None
    }
}

/// Tries `primary` first, then `fallback`.
pub struct Layered<'a> {
    pub primary: &'a dyn SourceProvider,
    pub fallback: &'a dyn SourceProvider,
}

impl SourceProvider for Layered<'_> {
    fn line_text(&self, file: &str, line: u32) -> Option<String> {
        self.primary
            .line_text(file, line)
            .or_else(|| self.fallback.line_text(file, line))
    }

    fn line_count(&self, file: &str) -> Option<u32> {
        self.primary
            .line_count(file)
            .or_else(|| self.fallback.line_count(file))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diff::parse_unified_diff;

    #[test]
    fn tree_refuses_escapes() {
        let tree = SourceTree::new("/tmp/src-root");
        assert!(tree.resolve("../etc/passwd").is_none());
        assert!(tree.resolve("/etc/passwd").is_none());
        assert!(tree.resolve("pkg/mod.py").is_some());
        assert!(tree.lines("missing.py").is_none());
    }

    #[test]
    fn tree_reads_lines() {
        let dir = std::env::temp_dir().join(format!("rdet-src-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        std::fs::write(dir.join("m.py"), "a = 1\nb = 2\n").unwrap();
        let tree = SourceTree::new(&dir);
        assert_eq!(tree.line_text("m.py", 2).as_deref(), Some("b = 2"));
        assert_eq!(tree.line_text("m.py", 3), None);
        assert_eq!(tree.line_text("m.py", 0), None);
        assert_eq!(tree.line_count("m.py"), Some(2));
        std::fs::remove_dir_all(dir).unwrap();
    }

    #[test]
    fn hunk_text_maps_new_lines() {
        let diff = parse_unified_diff("--- a/f\n+++ b/f\n@@ -3,2 +3,3 @@\n ctx\n-old\n+new\n+more\n").unwrap();
        let text = HunkText::new(&diff);
        assert_eq!(text.line_text("b/f", 3).as_deref(), Some("ctx"));
        assert_eq!(text.line_text("b/f", 5).as_deref(), Some("more"));
        assert_eq!(text.line_text("b/f", 6), None);
    }
}
