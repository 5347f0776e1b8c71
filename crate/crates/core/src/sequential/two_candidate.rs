//! Closed-form play for two candidates.
//!
//! Each voter adds the votes already cast for each side to the number of
//! that side's supporters still to come. They vote for their side exactly
//! when that prediction is level or has their side one vote behind, and
//! abstain otherwise.

use crate::error::{Error, Result};
use crate::model::{outcome, tally, Ballot, CandidateId, Profile, UtilityVector};
use crate::scalar::Utility;

use super::{SpneResult, VotingOrder};

/// Which of the two candidates (index 0 = A, 1 = B) a voter prefers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn candidate(self) -> CandidateId {
        match self {
            Side::A => CandidateId(0),
            Side::B => CandidateId(1),
        }
    }

    pub fn from_char(c: char) -> Option<Side> {
        match c {
            'A' | 'a' => Some(Side::A),
            'B' | 'b' => Some(Side::B),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Side::A => 'A',
            Side::B => 'B',
        }
    }
}

/// A voter's side in a two-candidate election, read off their utilities.
pub fn side_of<U: Utility>(u: &UtilityVector<U>) -> Side {
    if u.utilities[0] > u.utilities[1] {
        Side::A
    } else {
        Side::B
    }
}

/// Votes cast so far (`p_*`) and supporters still to move after the current
/// round (`f_*`) for each side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TwoCandidatePrediction {
    pub p_a: usize,
    pub p_b: usize,
    pub f_a: usize,
    pub f_b: usize,
}

/// Equilibrium ballot of the current mover.
pub fn two_candidate_ballot(pred: TwoCandidatePrediction, mover_is_a: bool) -> Ballot {
    let a = (pred.p_a + pred.f_a) as i64;
    let b = (pred.p_b + pred.f_b) as i64;
    let (own, other, side) = if mover_is_a {
        (a, b, Side::A)
    } else {
        (b, a, Side::B)
    };
    if own == other || own == other - 1 {
        Ballot::Vote(side.candidate())
    } else {
        Ballot::Abstain
    }
}

/// Simulates the closed-form strategy round by round.
pub fn two_candidate_play<U: Utility>(p: &Profile<U>, order: &VotingOrder) -> Result<SpneResult> {
    if p.m() != 2 {
        return Err(Error::CandidateCount {
            expected: 2,
            got: p.m(),
        });
    }
    super::check_order(p, order)?;
    let sides: Vec<Side> = (0..p.n())
        .map(|t| side_of(p.voter(order.voter_at(t))))
        .collect();
    let mut pred = TwoCandidatePrediction {
        f_a: sides.iter().filter(|&&s| s == Side::A).count(),
        f_b: sides.iter().filter(|&&s| s == Side::B).count(),
        ..Default::default()
    };
    let mut votes = Vec::with_capacity(sides.len());
    for &side in &sides {
        match side {
            Side::A => pred.f_a -= 1,
            Side::B => pred.f_b -= 1,
        }
        let ballot = two_candidate_ballot(pred, side == Side::A);
        match ballot.candidate() {
            Some(CandidateId(0)) => pred.p_a += 1,
            Some(_) => pred.p_b += 1,
            None => {}
        }
        votes.push(ballot);
    }
    let o = outcome(&tally(&votes, 2)?);
    Ok(SpneResult { outcome: o, votes })
}

/// Voter types in an order giving majority side A a mandate of exactly `k`:
/// `n_a - n_b + k - 1` A-voters, then every B-voter, then the remaining A-voters.
pub fn mandate_permutation(n_a: usize, n_b: usize, k: usize) -> Result<Vec<Side>> {
    if n_a <= n_b {
        return Err(Error::InvalidMandate(format!(
            "A must be the strict majority (n_A={n_a}, n_B={n_b})"
        )));
    }
    if k == 0 || k > n_b + 1 {
        return Err(Error::InvalidMandate(format!(
            "k={k} outside 1..={}",
            n_b + 1
        )));
    }
    let lead = n_a - n_b + k - 1;
    let mut order = vec![Side::A; lead];
    order.extend(std::iter::repeat_n(Side::B, n_b));
    order.extend(std::iter::repeat_n(Side::A, n_a - lead));
    Ok(order)
}

/// Profile with candidates `A`, `B` where voter `i` has type `sides[i]`.
pub fn two_candidate_profile(sides: &[Side]) -> Profile<u64> {
    let rows: Vec<[u64; 2]> = sides
        .iter()
        .map(|s| match s {
            Side::A => [2, 1],
            Side::B => [1, 2],
        })
        .collect();
    Profile::from_rows(&rows)
        .expect("non-empty side list")
        .with_candidate_names(vec!["A".into(), "B".into()])
}
