//! Command implementations behind the `gcdirac` binary.
//!
//! Each `cmd_*` function writes its report to the given writer and returns an
//! [`Outcome`]; failures that are not check results come back as
//! [`CliError`], which carries its own exit code.

mod config;
mod fig1;
mod polar;
mod props;
pub mod verify;

use std::io;

use thiserror::Error;

pub use config::{BranchSelection, Builtin, Fig1Config, Format, PropsConfig, VerifyConfig};
pub use fig1::{cmd_fig1, fig1_rows, linspace, write_fig1_csv, Fig1Row};
pub use polar::cmd_polar;
pub use props::{cmd_props, props_report, PropsReport};
pub use verify::{cmd_verify, run_verify, Check, VerifyReport};

/// Process exit status of a command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    CheckFailed,
}

impl Outcome {
    pub fn code(self) -> i32 {
        match self {
            Outcome::Success => 0,
            Outcome::CheckFailed => 1,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{path}: parse error at line {line}, column {column}: {message}")]
    Parse {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },

    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse { .. } => 2,
            CliError::Io(_) => 3,
        }
    }
}
