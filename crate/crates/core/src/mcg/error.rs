use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum McgError {
    #[error("generator index {index} is outside 1..={rank}")]
    InvalidGenerator { index: i64, rank: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("invalid interval [{a},{b}] for rank {rank}")]
    InvalidInterval { a: usize, b: usize, rank: usize },
    #[error("half-twist index {index} is outside 1..{rank}")]
    InvalidIndex { index: usize, rank: usize },
    #[error("a curve must enclose at least one hole")]
    EmptySubset,
    #[error("hole {hole} is outside 1..={rank}")]
    HoleOutOfRange { hole: usize, rank: usize },
    #[error("images are not mutually inverse")]
    NotInverse,
    #[error("model violation: {0}")]
    ModelViolation(String),
}
