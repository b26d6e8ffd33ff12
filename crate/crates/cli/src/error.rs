use thiserror::Error;

pub type Result<T, E = CliError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at line {line}, column {col}: {message}")]
    Parse { line: usize, col: usize, message: String },
    #[error("line {line}, column {col}: {source}")]
    Located {
        line: usize,
        col: usize,
        #[source]
        source: rickart_core::Error,
    },
    #[error("unknown label `{label}` in {ring}")]
    UnknownLabel { label: String, ring: String },
    #[error("illegal integer coefficient: {0}")]
    IllegalIntegerCoefficient(String),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] rickart_core::Error),
}

impl CliError {
    pub fn parse(line: usize, col: usize, message: impl Into<String>) -> Self {
        CliError::Parse {
            line,
            col,
            message: message.into(),
        }
    }

    /// Exit code under the command contract.
    pub fn exit_code(&self) -> i32 {
        use rickart_core::Error as E;
        match self {
            CliError::Core(E::CapExceeded { .. }) => 3,
            CliError::Core(E::PrimeConstraintViolated { .. } | E::HypothesisFailed(_) | E::Internal(_)) => 1,
            _ => 2,
        }
    }
}

pub(crate) fn read_file(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_string(),
        source,
    })
}
