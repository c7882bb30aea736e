use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    /// 1 usage, 2 numerical failure, 3 I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Numerical(_) => 2,
            CliError::Io { .. } => 3,
        }
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }
}

impl From<wellsim_core::Error> for CliError {
    fn from(e: wellsim_core::Error) -> Self {
        use wellsim_core::Error as E;
        match e {
            E::NoWells
            | E::WellOutOfRange { .. }
            | E::InvalidGraph(_)
            | E::InvalidParameter(_)
            | E::Interacting(_)
            | E::BasisMismatch { .. }
            | E::DimensionMismatch { .. } => CliError::Usage(e.to_string()),
            E::NotHermitian(_) | E::Numerical(_) => CliError::Numerical(e.to_string()),
        }
    }
}
