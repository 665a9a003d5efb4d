//! The hunk table handed to the tracer, which maps executed lines to hunk ids.

use rdet_core::{DiffSet, HunkKind, LineRange};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HunkRow {
    pub id: u64,
    pub file: String,
    pub new_range: LineRange,
    pub kind: HunkKind,
    pub old_file: String,
    pub old_range: LineRange,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HunkTable {
    pub hunks: Vec<HunkRow>,
}

impl HunkTable {
    /// Hunks of files deleted by the change are left out: nothing in them
    /// can run.
    pub fn new(diff: &DiffSet) -> Self {
        let hunks = diff
            .hunks()
            .iter()
            .filter(|h| h.new_path != "/dev/null")
            .map(|h| HunkRow {
                id: h.id.0,
                file: h.new_path.clone(),
                new_range: h.new_range,
                kind: h.kind,
                old_file: h.old_path.clone(),
                old_range: h.old_range,
            })
            .collect();
        HunkTable { hunks }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("hunk table serializes");
        out.push('\n');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rdet_core::parse_unified_diff;

    #[test]
    fn rows_follow_diff_order() {
        let diff = parse_unified_diff(
            "--- a/x.py\n+++ b/x.py\n@@ -3,2 +3,3 @@\n a\n+b\n c\n--- a/gone.py\n+++ /dev/null\n@@ -1 +0,0 @@\n-x\n",
        )
        .unwrap();
        let table = HunkTable::new(&diff);
        assert_eq!(table.hunks.len(), 1);
        let row = &table.hunks[0];
        assert_eq!(row.file, "b/x.py");
        assert_eq!(row.new_range, LineRange::new(3, 5).unwrap());
        assert_eq!(row.kind, HunkKind::Addition);
        let json: serde_json::Value = serde_json::from_str(&table.to_json()).unwrap();
        assert_eq!(json["hunks"][0]["kind"], "addition");
        assert_eq!(json["hunks"][0]["new_range"], serde_json::json!({"start": 3, "end": 5}));
    }
}
