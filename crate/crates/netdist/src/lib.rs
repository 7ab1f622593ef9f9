//! IO, presets, and the command-line surface over `netdist-core`.

pub mod cli;
pub mod formats;
pub mod manifest;
pub mod presets;
pub mod runner;

use std::fmt;

/// Command-level errors, mapped onto the documented exit codes.
#[derive(Debug)]
pub enum CliError {
    /// Input files or configuration failed to parse.
    Parse(String),
    /// Error surfaced from the core library.
    Core(netdist_core::Error),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use netdist_core::Error as E;
        match self {
            CliError::Parse(_) => 2,
            CliError::Io(_) => 1,
            CliError::Core(e) => match e {
                E::SizeMismatch { .. } | E::Disconnected => 3,
                E::DegenerateNull { .. } => 4,
                E::ZeroMean => 5,
                E::RetriesExhausted { .. } => 6,
                E::InvalidParams(_)
                | E::SelfLoop(_)
                | E::VertexOutOfRange { .. }
                | E::NonpositiveWeight { .. }
                | E::AsymmetricInput
                | E::EventOutOfRange { .. }
                | E::UnsupportedModel => 2,
                _ => 1,
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(msg) => write!(f, "parse error: {msg}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

impl From<netdist_core::Error> for CliError {
    fn from(e: netdist_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;
