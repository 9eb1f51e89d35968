use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}: {1}")]
    Io(String, #[source] std::io::Error),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Math(#[from] orthofermion::Error),
}

impl CliError {
    /// 1 for mathematical failures, 2 for I/O and parse failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Math(_) => 1,
            CliError::Io(..) | CliError::Parse(_) => 2,
        }
    }
}
