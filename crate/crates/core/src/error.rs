use thiserror::Error;

use crate::coxeter::Generator;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parameter n must be at least 2, got {0}")]
    RankTooSmall(usize),

    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),

    #[error("generator {letter} is out of range for a graph with {rank} generators")]
    InvalidLetter { letter: Generator, rank: usize },

    #[error("could not parse word: {0}")]
    Parse(String),

    #[error("word is not reduced (generator {0} can be cancelled)")]
    NotReduced(Generator),

    #[error("word is not fully commutative (braid factor in generators {s} and {t})")]
    NotFullyCommutative { s: Generator, t: Generator },

    #[error("operation requires a graph of type {expected}, got {found}")]
    WrongFamily { expected: &'static str, found: &'static str },

    #[error("element is not {0} irreducible")]
    NotIrreducible(&'static str),

    #[error("irreducible element matched no family: {0}")]
    Unclassified(String),

    #[error("illegal move: {0}")]
    IllegalMove(String),

    #[error("trace limit of {0} exceeded")]
    TraceLimit(usize),

    #[error("element budget of {0} exceeded")]
    Budget(usize),

    #[error("length {length} exceeds the guard of {limit}")]
    LengthGuard { length: usize, limit: usize },

    #[error("diagram rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("diagram pairing is not planar")]
    NonPlanar,

    #[error("simple diagram index {index} out of range 0..={max}")]
    DiagramIndex { index: usize, max: usize },

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    #[error("{0}")]
    Unsupported(String),
}

impl Error {
    /// Variant name, printed by the command line front end.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::RankTooSmall(_) => "RankTooSmall",
            Error::InvalidMatrix(_) => "InvalidMatrix",
            Error::InvalidLetter { .. } => "InvalidLetter",
            Error::Parse(_) => "Parse",
            Error::NotReduced(_) => "NotReduced",
            Error::NotFullyCommutative { .. } => "NotFullyCommutative",
            Error::WrongFamily { .. } => "WrongFamily",
            Error::NotIrreducible(_) => "NotIrreducible",
            Error::Unclassified(_) => "Unclassified",
            Error::IllegalMove(_) => "IllegalMove",
            Error::TraceLimit(_) => "TraceLimit",
            Error::Budget(_) => "Budget",
            Error::LengthGuard { .. } => "LengthGuard",
            Error::RankMismatch(..) => "RankMismatch",
            Error::NonPlanar => "NonPlanar",
            Error::DiagramIndex { .. } => "DiagramIndex",
            Error::UnknownSuite(_) => "UnknownSuite",
            Error::Unsupported(_) => "Unsupported",
        }
    }
}
