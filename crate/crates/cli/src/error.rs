use partree_core::Error as CoreError;
use partree_oracles::OracleError;
use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const PARSE: u8 = 1;
    pub const PRECONDITION: u8 = 2;
    pub const BUDGET: u8 = 3;
    pub const INTERNAL: u8 = 4;
    pub const REJECTED: u8 = 5;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("certificate rejected: {0}")]
    Rejected(String),
}

impl CliError {
    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        CliError::Parse {
            line,
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse { .. } | CliError::Usage(_) | CliError::Io { .. } => exit::PARSE,
            CliError::Core(e) if e.is_budget() => exit::BUDGET,
            CliError::Core(CoreError::Internal(_)) => exit::INTERNAL,
            CliError::Core(_) => exit::PRECONDITION,
            CliError::Oracle(e) if e.is_budget() => exit::BUDGET,
            CliError::Oracle(_) => exit::PRECONDITION,
            CliError::Rejected(_) => exit::REJECTED,
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
