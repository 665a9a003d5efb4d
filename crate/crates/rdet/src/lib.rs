//! Command-line and HTTP front ends over `rdet-core`.

pub mod cli;
pub mod config;
pub mod hunks;
pub mod report;
pub mod serve;
pub mod session;

pub use config::{AnalysisConfig, OutputFormat, Window};
pub use session::{LoadError, Session};
