use std::fmt;

/// Zero-based candidate index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CandidateId(pub usize);

impl CandidateId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for CandidateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c{}", self.0)
    }
}

impl From<usize> for CandidateId {
    fn from(i: usize) -> Self {
        CandidateId(i)
    }
}

/// A single voter's action.
///
/// The derived order puts `Abstain` before every vote and votes in ascending
/// candidate order. Enumeration and default tie-breaking both follow it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ballot {
    Abstain,
    Vote(CandidateId),
}

impl Ballot {
    pub fn vote(candidate: usize) -> Self {
        Ballot::Vote(CandidateId(candidate))
    }

    pub fn is_vote(self) -> bool {
        matches!(self, Ballot::Vote(_))
    }

    pub fn candidate(self) -> Option<CandidateId> {
        match self {
            Ballot::Vote(c) => Some(c),
            Ballot::Abstain => None,
        }
    }

    /// All `m + 1` ballots in the global action order.
    pub fn all(m: usize) -> impl Iterator<Item = Ballot> {
        std::iter::once(Ballot::Abstain).chain((0..m).map(Ballot::vote))
    }
}

impl fmt::Display for Ballot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ballot::Abstain => f.write_str("⊥"),
            Ballot::Vote(c) => write!(f, "{c}"),
        }
    }
}

/// One ballot per voter, indexed by voter.
pub type BallotVector = Vec<Ballot>;
