use std::fmt;

use crate::error::{Error, Result};
use crate::model::{Ballot, CandidateId};

/// Largest candidate count an [`Outcome`] bitset can hold.
pub const MAX_CANDIDATES: usize = 64;

/// Set of winning candidates, stored as a bitset over candidate indices.
///
/// The empty outcome only arises when every voter abstains.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Outcome(u64);

impl Outcome {
    pub const EMPTY: Outcome = Outcome(0);

    pub fn from_bits(bits: u64) -> Self {
        Outcome(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(c: CandidateId) -> Self {
        Outcome(1 << c.0)
    }

    pub fn from_candidates<I: IntoIterator<Item = usize>>(candidates: I) -> Self {
        Outcome(candidates.into_iter().fold(0, |acc, c| acc | (1 << c)))
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, c: CandidateId) -> bool {
        c.0 < MAX_CANDIDATES && self.0 & (1 << c.0) != 0
    }

    pub fn with(self, c: CandidateId) -> Self {
        Outcome(self.0 | (1 << c.0))
    }

    pub fn without(self, c: CandidateId) -> Self {
        Outcome(self.0 & !(1 << c.0))
    }

    pub fn without_all(self, other: Outcome) -> Self {
        Outcome(self.0 & !other.0)
    }

    /// Winners in ascending index order.
    pub fn iter(self) -> impl Iterator<Item = CandidateId> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(CandidateId(i))
        })
    }

    pub fn candidates(self) -> Vec<usize> {
        self.iter().map(CandidateId::index).collect()
    }

    /// Largest candidate index + 1, i.e. the smallest `m` this outcome fits in.
    pub fn span(self) -> usize {
        MAX_CANDIDATES - self.0.leading_zeros() as usize
    }
}

impl fmt::Debug for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|c| c.0)).finish()
    }
}

/// Vote counts per candidate plus the number of ballots actually cast.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tally {
    pub counts: Vec<usize>,
    pub cast: usize,
}

impl Tally {
    pub fn zeros(m: usize) -> Self {
        Tally {
            counts: vec![0; m],
            cast: 0,
        }
    }

    pub fn add(&mut self, ballot: Ballot) {
        if let Ballot::Vote(c) = ballot {
            self.counts[c.0] += 1;
            self.cast += 1;
        }
    }

    pub fn remove(&mut self, ballot: Ballot) {
        if let Ballot::Vote(c) = ballot {
            self.counts[c.0] -= 1;
            self.cast -= 1;
        }
    }

    pub fn outcome(&self) -> Outcome {
        outcome(self)
    }
}

/// Counts the votes in `ballots` for `m` candidates.
pub fn tally(ballots: &[Ballot], m: usize) -> Result<Tally> {
    let mut t = Tally::zeros(m);
    for &b in ballots {
        if let Ballot::Vote(c) = b {
            if c.0 >= m {
                return Err(Error::CandidateOutOfRange { index: c.0, m });
            }
        }
        t.add(b);
    }
    Ok(t)
}

/// Winners of a tally: the argmax set, or empty when nobody voted.
pub fn outcome(t: &Tally) -> Outcome {
    outcome_of_counts(&t.counts)
}

/// Argmax set of raw counts; empty iff every count is zero.
pub fn outcome_of_counts(counts: &[usize]) -> Outcome {
    let max = counts.iter().copied().max().unwrap_or(0);
    if max == 0 {
        return Outcome::EMPTY;
    }
    Outcome::from_candidates(
        counts
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == max)
            .map(|(j, _)| j),
    )
}
