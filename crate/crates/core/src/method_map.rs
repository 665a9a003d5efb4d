//! Per-file method extents, read from `{"<path>": [{"name", "start", "end"}]}`.

use std::collections::BTreeMap;
use std::io::Read;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diff::{strip_path, LineRange};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MethodExtent {
    pub name: String,
    pub start: u32,
    pub end: u32,
}

impl MethodExtent {
    pub fn range(&self) -> LineRange {
        LineRange {
            start: self.start,
            end: self.end,
        }
    }

    pub fn contains(&self, line: u32) -> bool {
        self.start <= line && line <= self.end
    }

    /// Unqualified method name (`Outer.method` -> `method`).
    pub fn short_name(&self) -> &str {
        self.name.rsplit('.').next().unwrap_or(&self.name)
    }

    /// Container name for qualified names (`Outer.method` -> `Outer`).
    pub fn container(&self) -> Option<&str> {
        self.name.rsplit_once('.').map(|(outer, _)| outer)
    }
}

#[derive(Debug, Error)]
pub enum MethodMapError {
    #[error("invalid method map JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("{file}: extent `{name}` has invalid range {start}-{end}")]
    InvalidExtent {
        file: String,
        name: String,
        start: u32,
        end: u32,
    },

    #[error("{file}: extents `{first}` and `{second}` partially overlap")]
    CrossingExtents {
        file: String,
        first: String,
        second: String,
    },
}

/// Method extents per file, sorted by start line.
///
/// Extents may nest (inner functions); lookups return the innermost one.
/// Partially overlapping extents are rejected.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MethodMap {
    files: BTreeMap<String, Vec<MethodExtent>>,
}

impl MethodMap {
    pub fn new(files: BTreeMap<String, Vec<MethodExtent>>) -> Result<Self, MethodMapError> {
        let mut files = files;
        for (file, extents) in files.iter_mut() {
            for e in extents.iter() {
                if e.start == 0 || e.end < e.start {
                    return Err(MethodMapError::InvalidExtent {
                        file: file.clone(),
                        name: e.name.clone(),
                        start: e.start,
                        end: e.end,
                    });
                }
            }
            // Outer extents first when two start on the same line.
            extents.sort_by(|a, b| a.start.cmp(&b.start).then(b.end.cmp(&a.end)));
            let mut open: Vec<&MethodExtent> = Vec::new();
            for e in extents.iter() {
                while open.last().is_some_and(|o| o.end < e.start) {
                    open.pop();
                }
                if let Some(outer) = open.last() {
                    if e.end > outer.end {
                        return Err(MethodMapError::CrossingExtents {
                            file: file.clone(),
                            first: outer.name.clone(),
                            second: e.name.clone(),
                        });
                    }
                }
                open.push(e);
            }
        }
        Ok(MethodMap { files })
    }

    pub fn from_reader<R: Read>(reader: R) -> Result<Self, MethodMapError> {
        let files: BTreeMap<String, Vec<MethodExtent>> = serde_json::from_reader(reader)?;
        Self::new(files)
    }

    pub fn from_json(text: &str) -> Result<Self, MethodMapError> {
        Self::from_reader(text.as_bytes())
    }

    pub fn has_file(&self, file: &str) -> bool {
        self.files.contains_key(file)
    }

    pub fn extents(&self, file: &str) -> &[MethodExtent] {
        self.files.get(file).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn files(&self) -> impl Iterator<Item = (&str, &[MethodExtent])> {
        self.files.iter().map(|(f, e)| (f.as_str(), e.as_slice()))
    }

    /// Innermost extent containing `line`.
    pub fn extent_at(&self, file: &str, line: u32) -> Option<&MethodExtent> {
        self.extents(file)
            .iter()
            .filter(|e| e.contains(line))
            .min_by_key(|e| e.end - e.start)
    }

    pub fn strip_prefix(&self, prefix: &str) -> MethodMap {
        MethodMap {
            files: self
                .files
                .iter()
                .map(|(f, e)| (strip_path(f, prefix), e.clone()))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_looks_up() {
        let map = MethodMap::from_json(
            r#"{"a.py": [{"name": "Cls.run", "start": 7, "end": 12}, {"name": "helper", "start": 1, "end": 5}]}"#,
        )
        .unwrap();
        assert_eq!(map.extents("a.py")[0].name, "helper");
        assert_eq!(map.extent_at("a.py", 9).unwrap().short_name(), "run");
        assert_eq!(map.extent_at("a.py", 9).unwrap().container(), Some("Cls"));
        assert!(map.extent_at("a.py", 6).is_none());
        assert!(map.extent_at("b.py", 1).is_none());
        assert!(map.has_file("a.py"));
    }

    #[test]
    fn nested_extents_pick_innermost() {
        let map = MethodMap::from_json(
            r#"{"a.py": [{"name": "outer", "start": 1, "end": 20}, {"name": "outer.inner", "start": 5, "end": 8}]}"#,
        )
        .unwrap();
        assert_eq!(map.extent_at("a.py", 6).unwrap().name, "outer.inner");
        assert_eq!(map.extent_at("a.py", 12).unwrap().name, "outer");
    }

    #[test]
    fn rejects_invalid_extents() {
        assert!(matches!(
            MethodMap::from_json(r#"{"a": [{"name": "f", "start": 5, "end": 4}]}"#),
            Err(MethodMapError::InvalidExtent { .. })
        ));
        assert!(matches!(
            MethodMap::from_json(
                r#"{"a": [{"name": "f", "start": 1, "end": 5}, {"name": "g", "start": 3, "end": 9}]}"#
            ),
            Err(MethodMapError::CrossingExtents { .. })
        ));
        assert!(matches!(
            MethodMap::from_json("[]"),
            Err(MethodMapError::Json(_))
        ));
    }

    #[test]
    fn empty_file_list_is_fine() {
        let map = MethodMap::from_json(r#"{"empty.py": []}"#).unwrap();
        assert!(map.has_file("empty.py"));
        assert!(map.extents("empty.py").is_empty());
    }
}
