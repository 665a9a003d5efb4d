//! Loading the inputs of one analysis and running the pipeline over them.

use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use rdet_core::source::{HunkText, Layered, SourceProvider, SourceTree};
use rdet_core::textual::{KeywordList, SynonymTable, TextualError, ZoneWeights};
use rdet_core::{
    localize, parse_unified_diff, read_trace, DiffError, DiffSet, Localization, LocalizeError,
    MethodMap, MethodMapError, RankingMode, SessionTrace, TextualInput, TraceError,
};
use thiserror::Error;

use crate::config::AnalysisConfig;

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{}: {source}", path.display())]
    Diff { path: PathBuf, source: DiffError },

    #[error("{}: {source}", path.display())]
    Trace { path: PathBuf, source: TraceError },

    #[error("{}: {source}", path.display())]
    MethodMap {
        path: PathBuf,
        source: MethodMapError,
    },

    #[error("{}: {source}", path.display())]
    Textual { path: PathBuf, source: TextualError },

    #[error("{0}")]
    Config(String),
}

impl LoadError {
    /// Process exit status: 4 for an invalid trace, 2 for everything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            LoadError::Trace { source, .. } if source.is_validation() => 4,
            _ => 2,
        }
    }
}

fn read_to_string(path: &Path) -> Result<String, LoadError> {
    std::fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_diff(path: &Path) -> Result<DiffSet, LoadError> {
    let text = read_to_string(path)?;
    parse_unified_diff(&text).map_err(|source| LoadError::Diff {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_trace(path: &Path) -> Result<SessionTrace, LoadError> {
    let file = File::open(path).map_err(|source| LoadError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    read_trace(BufReader::new(file)).map_err(|source| LoadError::Trace {
        path: path.to_path_buf(),
        source,
    })
}

/// Inputs that never change during a session.
pub struct Inputs {
    pub config: AnalysisConfig,
    pub diff: DiffSet,
    pub methods: MethodMap,
    pub keywords: KeywordList,
    pub synonyms: Option<SynonymTable>,
    pub weights: ZoneWeights,
    pub source: Option<SourceTree>,
    pub hunk_text: HunkText,
}

/// A loaded session. The trace can be swapped on refresh; everything else is
/// shared.
#[derive(Clone)]
pub struct Session {
    pub inputs: Arc<Inputs>,
    pub trace: Arc<SessionTrace>,
}

impl Session {
    pub fn load(config: AnalysisConfig) -> Result<Session, LoadError> {
        let trace = load_trace(&config.trace)?;
        Self::with_trace(config, trace)
    }

    /// Like [`Session::load`], but a trace file that does not exist yet is
    /// treated as empty. Used by the live service.
    pub fn load_live(config: AnalysisConfig) -> Result<Session, LoadError> {
        let trace = if config.trace.exists() {
            load_trace(&config.trace)?
        } else {
            SessionTrace::default()
        };
        Self::with_trace(config, trace)
    }

    fn with_trace(config: AnalysisConfig, trace: SessionTrace) -> Result<Session, LoadError> {
        config.validate().map_err(LoadError::Config)?;
        let prefix = config.strip_prefix.clone().unwrap_or_default();

        let diff = load_diff(&config.diff)?
            .strip_prefix(&prefix)
            .map_err(|source| LoadError::Diff {
                path: config.diff.clone(),
                source,
            })?;

        let methods = match &config.method_map {
            Some(path) => {
                let file = File::open(path).map_err(|source| LoadError::Io {
                    path: path.clone(),
                    source,
                })?;
                MethodMap::from_reader(BufReader::new(file))
                    .map_err(|source| LoadError::MethodMap {
                        path: path.clone(),
                        source,
                    })?
                    .strip_prefix(&prefix)
            }
            None => MethodMap::default(),
        };

        let keywords = match &config.keywords {
            Some(path) => KeywordList::parse(&read_to_string(path)?),
            None => KeywordList::python(),
        };
        let synonyms = match &config.synonyms {
            Some(path) => Some(SynonymTable::from_json(&read_to_string(path)?).map_err(
                |source| LoadError::Textual {
                    path: path.clone(),
                    source,
                },
            )?),
            None => None,
        };
        let weights = match &config.weights {
            Some(path) => ZoneWeights::from_json(&read_to_string(path)?).map_err(|source| {
                LoadError::Textual {
                    path: path.clone(),
                    source,
                }
            })?,
            None => ZoneWeights::default(),
        };

        if let Some(root) = &config.src_root {
            if !root.is_dir() {
                return Err(LoadError::Io {
                    path: root.clone(),
                    source: std::io::Error::new(std::io::ErrorKind::NotFound, "not a directory"),
                });
            }
        }
        let source = config.src_root.as_ref().map(SourceTree::new);
        let hunk_text = HunkText::new(&diff);

        Ok(Session {
            inputs: Arc::new(Inputs {
                config,
                diff,
                methods,
                keywords,
                synonyms,
                weights,
                source,
                hunk_text,
            }),
            trace: Arc::new(trace.strip_prefix(&prefix)),
        })
    }

    /// Re-reads the trace file, keeping every other input.
    pub fn reload_trace(&self) -> Result<Session, LoadError> {
        let config = &self.inputs.config;
        let trace = load_trace(&config.trace)?;
        let prefix = config.strip_prefix.as_deref().unwrap_or_default();
        Ok(Session {
            inputs: self.inputs.clone(),
            trace: Arc::new(trace.strip_prefix(prefix)),
        })
    }

    pub fn config(&self) -> &AnalysisConfig {
        &self.inputs.config
    }

    pub fn diff(&self) -> &DiffSet {
        &self.inputs.diff
    }

    pub fn source(&self) -> Option<&SourceTree> {
        self.inputs.source.as_ref()
    }

    /// Runs the pipeline. `mode` and `query` override the configured ones;
    /// an empty query disables the textual stage.
    pub fn analyze(
        &self,
        mode: Option<RankingMode>,
        query: Option<&str>,
    ) -> Result<Localization, LocalizeError> {
        let inputs = &*self.inputs;
        let opts = inputs.config.localize_options(mode);
        let query = query.or(inputs.config.query.as_deref());

        let layered;
        let source: &dyn SourceProvider = match &inputs.source {
            Some(tree) => {
                layered = Layered {
                    primary: tree,
                    fallback: &inputs.hunk_text,
                };
                &layered
            }
            None => &inputs.hunk_text,
        };
        let textual = query.map(|q| TextualInput {
            query: q,
            source,
            keywords: &inputs.keywords,
            synonyms: inputs.synonyms.as_ref(),
            weights: inputs.weights,
        });
        localize(
            &inputs.diff,
            &self.trace,
            &inputs.methods,
            textual.as_ref(),
            &opts,
        )
    }
}

/// Exit status for a pipeline failure.
pub fn localize_exit_code(err: &LocalizeError) -> u8 {
    match err {
        LocalizeError::UnknownMarker(_) => 3,
        LocalizeError::BaselineRequired => 2,
        LocalizeError::Trace(_) => 4,
    }
}
