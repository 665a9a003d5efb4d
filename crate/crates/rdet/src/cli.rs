use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rdet_core::{RankingMode, TextualPriority};

use crate::config::{AnalysisConfig, OutputFormat, Window};
use crate::hunks::HunkTable;
use crate::report;
use crate::serve::{self, ServeOptions};
use crate::session::{load_diff, localize_exit_code, LoadError, Session};

#[derive(Debug, Parser)]
#[command(name = "rdet", version, about = "Rank the changes that most likely caused a regression")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the hunk table of a unified diff as JSON.
    Hunks {
        diff: PathBuf,
        /// Leading path component to remove, e.g. `b/`.
        #[arg(long)]
        strip_prefix: Option<String>,
    },
    /// Rank the executed change regions of a recorded session.
    Analyze {
        #[command(flatten)]
        analysis: AnalysisArgs,
        #[arg(long, default_value = "text")]
        format: OutputFormat,
    },
    /// Serve the results viewer and its API on localhost.
    Serve {
        #[command(flatten)]
        analysis: AnalysisArgs,
        #[arg(long, default_value_t = 7878)]
        port: u16,
        /// File the tracer polls for dump requests.
        #[arg(long)]
        control_file: Option<PathBuf>,
        /// Directory with a built viewer, served instead of the bundled page.
        #[arg(long)]
        ui_dir: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct AnalysisArgs {
    #[arg(long)]
    pub diff: PathBuf,
    #[arg(long)]
    pub trace: PathBuf,
    #[arg(long, default_value = "bug")]
    pub bug_marker: String,
    #[arg(long)]
    pub baseline_marker: Option<String>,
    #[arg(long)]
    pub method_map: Option<PathBuf>,
    /// Number of hunk events kept before the marker, or `unbounded`.
    #[arg(long, default_value_t = Window::default())]
    pub window: Window,
    /// Bug report text for the textual tie-break.
    #[arg(long)]
    pub query: Option<String>,
    /// Root of the buggy version's source tree.
    #[arg(long)]
    pub src_root: Option<PathBuf>,
    #[arg(long)]
    pub strip_prefix: Option<String>,
    /// `eo` or `eo_diff`; defaults to `eo_diff` when a baseline is given.
    #[arg(long)]
    pub mode: Option<RankingMode>,
    /// Vicinity radius, in lines, of the differential partition.
    #[arg(long, default_value_t = rdet_core::rank::DEFAULT_MAX_DIST)]
    pub max_dist: u32,
    /// Rank by textual score before execution order.
    #[arg(long)]
    pub textual_secondary: bool,
    /// JSON object of zone boosts.
    #[arg(long, env = "RDET_WEIGHTS")]
    pub weights: Option<PathBuf>,
    /// JSON list of `{"a", "b", "score"}` term pairs.
    #[arg(long)]
    pub synonyms: Option<PathBuf>,
    /// Keyword stop list, one word per line.
    #[arg(long)]
    pub keywords: Option<PathBuf>,
}

impl AnalysisArgs {
    pub fn into_config(self, format: OutputFormat) -> AnalysisConfig {
        AnalysisConfig {
            diff: self.diff,
            trace: self.trace,
            bug_marker: self.bug_marker,
            baseline_marker: self.baseline_marker,
            method_map: self.method_map,
            window: self.window,
            query: self.query,
            src_root: self.src_root,
            strip_prefix: self.strip_prefix,
            format,
            mode: self.mode,
            max_dist: self.max_dist,
            textual_priority: if self.textual_secondary {
                TextualPriority::Secondary
            } else {
                TextualPriority::Tertiary
            },
            weights: self.weights,
            synonyms: self.synonyms,
            keywords: self.keywords,
        }
    }
}

/// A command failure with its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<LoadError> for Failure {
    fn from(e: LoadError) -> Self {
        Failure {
            code: e.exit_code(),
            message: e.to_string(),
        }
    }
}

pub fn cmd_hunks(diff: &std::path::Path, strip_prefix: Option<&str>) -> Result<String, Failure> {
    let parsed = load_diff(diff)?;
    let parsed = parsed
        .strip_prefix(strip_prefix.unwrap_or_default())
        .map_err(|e| Failure {
            code: 2,
            message: format!("{}: {e}", diff.display()),
        })?;
    Ok(HunkTable::new(&parsed).to_json())
}

pub fn cmd_analyze(config: AnalysisConfig) -> Result<String, Failure> {
    let format = config.format;
    let session = Session::load(config)?;
    let loc = session.analyze(None, None).map_err(|e| Failure {
        code: localize_exit_code(&e),
        message: e.to_string(),
    })?;
    let report = report::build(&session, &loc);
    Ok(match format {
        OutputFormat::Json => report::to_json(&report),
        OutputFormat::Text => report::to_text(&report),
    })
}

pub fn cmd_serve(
    config: AnalysisConfig,
    port: u16,
    options: ServeOptions,
) -> Result<(), Failure> {
    let session = Session::load_live(config)?;
    let runtime = tokio::runtime::Runtime::new().map_err(|e| Failure {
        code: 1,
        message: e.to_string(),
    })?;
    runtime
        .block_on(serve::run(session, port, options))
        .map_err(|e| Failure {
            code: 2,
            message: format!("cannot serve on port {port}: {e}"),
        })
}

pub fn run(cli: Cli) -> Result<Option<String>, Failure> {
    match cli.command {
        Command::Hunks { diff, strip_prefix } => {
            cmd_hunks(&diff, strip_prefix.as_deref()).map(Some)
        }
        Command::Analyze { analysis, format } => cmd_analyze(analysis.into_config(format)).map(Some),
        Command::Serve {
            analysis,
            port,
            control_file,
            ui_dir,
        } => cmd_serve(
            analysis.into_config(OutputFormat::Json),
            port,
            ServeOptions {
                control_file,
                ui_dir,
            },
        )
        .map(|()| None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn analyze_flags() {
        let cli = Cli::try_parse_from([
            "rdet", "analyze", "--diff", "d", "--trace", "t", "--window", "unbounded",
            "--mode", "eo", "--textual-secondary", "--format", "json",
        ])
        .unwrap();
        let Command::Analyze { analysis, format } = cli.command else {
            panic!("expected analyze");
        };
        let config = analysis.into_config(format);
        assert_eq!(config.window, Window(None));
        assert_eq!(config.mode, Some(RankingMode::Eo));
        assert_eq!(config.textual_priority, TextualPriority::Secondary);
        assert_eq!(config.format, OutputFormat::Json);
        assert_eq!(config.bug_marker, "bug");
    }
}
