use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid request: {0}")]
    Validation(String),
    #[error("{0}")]
    Domain(demazure_core::Error),
    #[error("cache: {0}")]
    Cache(String),
    #[error("cannot parse {format} output: {msg}")]
    Parse { format: &'static str, msg: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) | CliError::Parse { .. } => 2,
            CliError::Domain(_) => 3,
            CliError::Cache(_) => 4,
        }
    }
}

impl From<demazure_core::Error> for CliError {
    fn from(e: demazure_core::Error) -> Self {
        use demazure_core::Error::*;
        match e {
            // shape problems are caught by request validation; if one slips
            // through it is still the caller's fault
            UnknownType(_) | IndexOutOfRange { .. } | WrongLength { .. } => {
                CliError::Validation(e.to_string())
            }
            other => CliError::Domain(other),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
