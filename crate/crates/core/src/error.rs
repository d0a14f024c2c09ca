use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("zero step size: use the derivative Wronskian instead")]
    ZeroStep,

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquareMatrix { rows: usize, cols: usize },

    #[error("minor size {size} out of range for a {rows}x{cols} matrix")]
    MinorSizeOutOfRange { size: usize, rows: usize, cols: usize },

    #[error("rank-deficient matrix where full rank is required")]
    RankDeficient,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid Schubert problem: {0}")]
    InvalidProblem(String),

    #[error("zero partition imposes no condition")]
    ZeroPartition,

    #[error("invalid flag specification: {0}")]
    InvalidFlag(String),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("coincident points across groups")]
    CoincidentPoints,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("mismatched generators: {0}")]
    MismatchedGenerators(String),

    #[error("target overlap unreachable within rejection budget of {budget} draws")]
    TargetOverlapUnreachable { budget: u64 },

    #[error("invalid experiment configuration: {0}")]
    InvalidConfig(String),

    #[error("tables disagree on problem or computation type")]
    MismatchedTables,

    #[error("degenerate input: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
