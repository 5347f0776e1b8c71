use thiserror::Error;

use crate::model::Outcome;

/// Errors raised by profile construction, the solvers and the instance builders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("an election needs at least one candidate")]
    NoCandidates,
    #[error("an election needs at least one voter")]
    NoVoters,
    #[error("{m} candidates exceed the supported maximum of {max}")]
    TooManyCandidates { m: usize, max: usize },
    #[error("voter {voter} has {got} utilities, expected {expected}")]
    UtilityLength {
        voter: usize,
        expected: usize,
        got: usize,
    },
    #[error("candidate index {index} out of range for {m} candidates")]
    CandidateOutOfRange { index: usize, m: usize },
    #[error("ballot vector has length {got}, expected {expected}")]
    BallotLength { expected: usize, got: usize },
    #[error("voter {voter} is indifferent between outcomes {first:?} and {second:?}")]
    Indifferent {
        voter: usize,
        first: Outcome,
        second: Outcome,
    },
    #[error("utilities of voter {voter} overflow the utility scalar during comparison")]
    ScalarOverflow { voter: usize },
    #[error("tie set must contain at least two candidates, got {0}")]
    TieSetTooSmall(usize),
    #[error("voting order is not a permutation of 0..{n}")]
    NotAPermutation { n: usize },
    #[error("ranking is not a permutation of 0..{m}")]
    InvalidRanking { m: usize },
    #[error("operation requires exactly {expected} candidates, got {got}")]
    CandidateCount { expected: usize, got: usize },
    #[error("invalid mandate request: {0}")]
    InvalidMandate(String),
    #[error("invalid X3C instance: {0}")]
    InvalidX3c(String),
    #[error("{what} bound exceeded: size {size} > limit {limit}")]
    BoundExceeded {
        what: &'static str,
        size: u128,
        limit: u128,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
