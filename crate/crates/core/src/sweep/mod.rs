//! g-sweeps for the `usc-sweep` command line tool.

mod config;
mod emit;
mod run;

use std::path::PathBuf;

use thiserror::Error;

pub use config::{
    apply_config_text, parse_config, parse_config_with, MirrorChoice, OutputFormat, SweepConfig,
};
pub use emit::{emit, render, render_csv, render_json};
pub use run::{
    branch_ordering, ordering_agreement_fraction, run_sweep, Metadata, SkippedPoint, Summary,
    SweepResult, ORDERING_TOL,
};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read config file {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    /// `--help` or `--version` output, not a failure.
    #[error("{0}")]
    Help(String),
}

impl ConfigError {
    pub fn exit_code(&self) -> u8 {
        match self {
            ConfigError::Usage(_) => 2,
            ConfigError::Io { .. } => 1,
            ConfigError::Help(_) => 0,
        }
    }
}

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("no stable grid point in the sweep ({skipped} skipped)")]
    NoStablePoints { skipped: usize },
    #[error("cannot write {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("cannot write to stdout: {0}")]
    Stdout(#[source] std::io::Error),
}

impl SweepError {
    pub fn exit_code(&self) -> u8 {
        1
    }
}
