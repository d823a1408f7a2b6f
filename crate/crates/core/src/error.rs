use thiserror::Error;

/// Errors raised by the invariant engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("quantum integer requires a non-negative argument, got {0}")]
    NegativeQuantumInteger(i64),

    #[error("{kind} index {index} out of range 1..={max}")]
    IndexOutOfRange {
        kind: &'static str,
        index: i64,
        max: usize,
    },

    #[error("level must be at least {min}, got {level}")]
    LevelTooSmall { level: u32, min: u32 },

    #[error("division by zero in the cyclotomic field")]
    DivisionByZero,

    #[error("matrix is not symmetric (entry ({0}, {1}))")]
    NotSymmetric(usize, usize),

    #[error("colouring is not constant on closure components: {0}")]
    InconsistentColouring(String),

    #[error("colour/strand mismatch: {0}")]
    ColourMismatch(String),

    #[error("odd signed crossing count {count} between components {a} and {b}")]
    ParityViolation { a: usize, b: usize, count: i64 },

    #[error("multi-index {index:?} is not admissible for colours {colours:?}")]
    Inadmissible { index: Vec<u32>, colours: Vec<u32> },

    #[error("normalizer {0} vanishes at this level")]
    ZeroNormalizer(&'static str),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Process exit status used by the command-line runner.
    pub fn exit_status(&self) -> i32 {
        match self {
            Error::Parse(_)
            | Error::IndexOutOfRange { .. }
            | Error::ColourMismatch(_)
            | Error::InconsistentColouring(_)
            | Error::NotSymmetric(..)
            | Error::NegativeQuantumInteger(_)
            | Error::Inadmissible { .. } => 2,
            Error::LevelTooSmall { .. } | Error::DivisionByZero | Error::ZeroNormalizer(_) => 3,
            Error::ParityViolation { .. } | Error::Internal(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
