use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{path}: {source}")]
    File { path: String, source: pfaffian_msf::Error },

    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },

    #[error(transparent)]
    Core(#[from] pfaffian_msf::Error),

    #[error("cannot write output: {0}")]
    Output(#[from] std::io::Error),

    #[error("cannot encode report: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 2 for usage and parse errors, 3 for shape violations.
    pub fn exit_code(&self) -> i32 {
        use pfaffian_msf::Error as E;
        let core = match self {
            CliError::File { source, .. } => source,
            CliError::Core(e) => e,
            _ => return 2,
        };
        match core {
            E::OddSize(_)
            | E::NotAlternating { .. }
            | E::InvalidColoring(_)
            | E::NotSquare { .. }
            | E::DimensionMismatch(_) => 3,
            _ => 2,
        }
    }
}
