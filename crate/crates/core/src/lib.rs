//! Regression change localization.
//!
//! Given a unified diff between a known-good and a buggy version and the
//! trace of a bug scenario, ranks the executed change regions by how likely
//! they are to have caused the observed error.

pub mod diff;
pub mod method_map;
pub mod pipeline;
pub mod rank;
pub mod source;
pub mod textual;
pub mod trace;

pub use diff::{parse_unified_diff, ChangeRegion, DiffError, DiffSet, Hunk, HunkId, HunkKind, LineRange};
pub use method_map::{MethodExtent, MethodMap, MethodMapError};
pub use pipeline::{localize, Localization, LocalizeError, LocalizeOptions, RankingMode, TextualInput};
pub use rank::{RankedResult, TextualPriority};
pub use trace::{read_trace, CoverageSnapshot, Location, SessionTrace, TraceError, TraceEvent};
