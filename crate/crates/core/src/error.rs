use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("a well array needs at least one well")]
    NoWells,

    #[error("well index {index} out of range for {num_wells} wells")]
    WellOutOfRange { index: usize, num_wells: usize },

    #[error("basis mismatch: expected {expected_wells} wells / {expected_particles} particles, got {found_wells} / {found_particles}")]
    BasisMismatch {
        expected_wells: usize,
        expected_particles: usize,
        found_wells: usize,
        found_particles: usize,
    },

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not Hermitian (max deviation {0:e})")]
    NotHermitian(f64),

    #[error("invalid well graph: {0}")]
    InvalidGraph(String),

    #[error("single-particle propagation requires W = 0, got W = {0}")]
    Interacting(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
