//! Command-line front-end: loads game files, runs analyses and renders the
//! results as aligned tables or as machine-readable JSON.

mod commands;
pub mod render;

use std::fmt;
use std::path::PathBuf;

use pgindex::file::{Game, GameFile};
use pgindex::indices::Family;
use pgindex::{Error, JKGame, DEFAULT_CAP};
use thiserror::Error;

pub use commands::run;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Analyze,
    Mcv,
    Potential,
    Merge,
    Average,
    Axioms,
    Embed,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Analyze => "analyze",
            Command::Mcv => "mcv",
            Command::Potential => "potential",
            Command::Merge => "merge",
            Command::Average => "average",
            Command::Axioms => "axioms",
            Command::Embed => "embed",
        }
    }

    fn accepts(self, inputs: usize) -> bool {
        match self {
            Command::Merge => inputs == 2,
            Command::Axioms => (1..=2).contains(&inputs),
            _ => inputs == 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Machine,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Options {
    pub format: Format,
    pub family: Family,
    pub output: Option<PathBuf>,
    pub oracle: bool,
    pub cap: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            format: Format::Table,
            family: Family::Mcc,
            output: None,
            oracle: false,
            cap: DEFAULT_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisRequest {
    pub command: Command,
    pub inputs: Vec<PathBuf>,
    pub options: Options,
}

impl AnalysisRequest {
    pub fn new(command: Command, inputs: Vec<PathBuf>, options: Options) -> Result<Self, CliError> {
        if !command.accepts(inputs.len()) {
            return Err(CliError::Usage(format!(
                "`{}` does not take {} input file(s)",
                command.name(),
                inputs.len()
            )));
        }
        Ok(AnalysisRequest {
            command,
            inputs,
            options,
        })
    }
}

/// Witness list of a failed validation, truncated for display.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witnesses(pub Vec<Error>);

pub const MAX_WITNESSES: usize = 10;

impl fmt::Display for Witnesses {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut lines: Vec<String> = self
            .0
            .iter()
            .take(MAX_WITNESSES)
            .map(|err| format!("  - {err}"))
            .collect();
        if self.0.len() > MAX_WITNESSES {
            lines.push(format!("  ... and {} more", self.0.len() - MAX_WITNESSES));
        }
        write!(f, "{}", lines.join("\n"))
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{path}: cannot read: {message}")]
    Io { path: PathBuf, message: String },
    #[error("{path}:{line}:{column}: parse error: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}: invalid game ({} problem(s)):\n{witnesses}", witnesses.0.len())]
    Validation { path: PathBuf, witnesses: Witnesses },
    #[error("{0}")]
    Domain(#[from] Error),
    #[error("{0}")]
    Unsupported(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

/// Reads and validates a game file.
pub fn load_game(path: &std::path::Path, cap: usize) -> Result<Game, CliError> {
    let text = std::fs::read_to_string(path).map_err(|err| CliError::Io {
        path: path.to_path_buf(),
        message: err.to_string(),
    })?;
    let file = GameFile::parse(&text).map_err(|err| match err {
        Error::Parse {
            line,
            column,
            message,
        } => CliError::Parse {
            path: path.to_path_buf(),
            line,
            column,
            message,
        },
        other => CliError::Domain(other),
    })?;
    let table_witnesses = match &file {
        GameFile::Jk {
            n,
            j,
            k,
            table: Some(table),
            weighted: None,
        } => Some(JKGame::table_violations(*n, *j, *k, table, cap)),
        _ => None,
    };
    file.into_game(cap).map_err(|err| match err {
        Error::Parse {
            line,
            column,
            message,
        } => CliError::Parse {
            path: path.to_path_buf(),
            line,
            column,
            message,
        },
        first => CliError::Validation {
            path: path.to_path_buf(),
            witnesses: Witnesses(match table_witnesses {
                Some(all) if !all.is_empty() => all,
                _ => vec![first],
            }),
        },
    })
}

/// Result of a successful dispatch. Failures recorded here still produce
/// output but make the process exit with status 1.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub text: String,
    pub failures: Vec<String>,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.failures.is_empty() {
            0
        } else {
            1
        }
    }
}
