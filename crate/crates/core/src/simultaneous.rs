//! Pure Nash equilibria of simultaneous plurality voting.
//!
//! A profile has an equilibrium with a single winner iff every voter ranks
//! that winner first; in that case one voter votes and everyone else stays
//! home. An equilibrium with a tie among `k > 1` candidates exists iff the
//! candidates in the tie split the electorate into equal groups of top
//! supporters (`n / k` each) and every supporter prefers the tie to any
//! other tied candidate winning alone. When every group is a single voter
//! and some candidate is left out of the tie, a voter can also hand their
//! seat in the tie to an outsider, so each voter must prefer the tie to
//! every such swap as well.

use std::collections::BTreeSet;

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::{payoff, tally, Ballot, BallotVector, CandidateId, Outcome, Profile};
use crate::scalar::Utility;

/// Result of a deviation check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PneCheck {
    Equilibrium,
    /// `voter` strictly gains by switching to `ballot` (their best response).
    Deviation {
        voter: usize,
        ballot: Ballot,
    },
}

impl PneCheck {
    pub fn is_equilibrium(&self) -> bool {
        matches!(self, PneCheck::Equilibrium)
    }
}

/// Supporters of each tied candidate, keyed in ascending candidate order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopChoicePartition {
    pub tie_set: Outcome,
    pub groups: Vec<(CandidateId, Vec<usize>)>,
}

impl TopChoicePartition {
    /// Every voter votes for their group's candidate.
    pub fn ballots(&self, n: usize) -> BallotVector {
        let mut ballots = vec![Ballot::Abstain; n];
        for (c, voters) in &self.groups {
            for &i in voters {
                ballots[i] = Ballot::Vote(*c);
            }
        }
        ballots
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PneWitness {
    pub ballots: BallotVector,
    pub outcome: Outcome,
}

/// Checks every unilateral deviation. On failure reports the first voter (by
/// index) who can improve, together with their best alternative ballot.
pub fn is_pne<U: Utility>(p: &Profile<U>, ballots: &[Ballot]) -> Result<PneCheck> {
    if ballots.len() != p.n() {
        return Err(Error::BallotLength {
            expected: p.n(),
            got: ballots.len(),
        });
    }
    let mut t = tally(ballots, p.m())?;
    let current = t.outcome();
    for (i, &b) in ballots.iter().enumerate() {
        let u = p.voter(i);
        let mut best = payoff(u, current, b.is_vote());
        let mut better = None;
        t.remove(b);
        for alt in Ballot::all(p.m()).filter(|&a| a != b) {
            t.add(alt);
            let candidate = payoff(u, t.outcome(), alt.is_vote());
            t.remove(alt);
            if candidate > best {
                best = candidate;
                better = Some(alt);
            }
        }
        t.add(b);
        if let Some(ballot) = better {
            return Ok(PneCheck::Deviation { voter: i, ballot });
        }
    }
    Ok(PneCheck::Equilibrium)
}

/// The candidate every voter strictly ranks first, if any.
pub fn unanimous_top<U: Utility>(p: &Profile<U>) -> Option<CandidateId> {
    let c = p.voter(0).favorite();
    p.voters()
        .iter()
        .all(|u| u.strictly_prefers_first(c))
        .then_some(c)
}

/// Tests whether `tie_set` can be the outcome of an equilibrium.
///
/// Returns the supporter partition when `k` divides `n`, each tied candidate
/// is the strict favourite (within the tie) of exactly `n / k` voters, and
/// every voter prefers the full tie to any other tied candidate winning
/// alone. If `n = k` the voter must also prefer the tie to the one obtained
/// by replacing their own candidate with any candidate outside it. An exact
/// indifference, which only an invalid profile can produce, is reported as an
/// error.
pub fn check_tie_set<U: Utility>(
    p: &Profile<U>,
    tie_set: Outcome,
) -> Result<Option<TopChoicePartition>> {
    if tie_set.span() > p.m() {
        return Err(Error::CandidateOutOfRange {
            index: tie_set.span() - 1,
            m: p.m(),
        });
    }
    let k = tie_set.len();
    if k < 2 {
        return Err(Error::TieSetTooSmall(k));
    }
    let n = p.n();
    if !n.is_multiple_of(k) {
        return Ok(None);
    }
    let quota = n / k;
    let members: Vec<CandidateId> = tie_set.iter().collect();
    let mut groups: Vec<(CandidateId, Vec<usize>)> = members
        .iter()
        .map(|&c| (c, Vec::with_capacity(quota)))
        .collect();

    for (i, u) in p.voters().iter().enumerate() {
        let fav = u.favorite_in(tie_set).expect("tie set is nonempty");
        if let Some(other) = members
            .iter()
            .find(|&&c| c != fav && u.utilities[c.0] == u.utilities[fav.0])
        {
            return Err(Error::Indifferent {
                voter: i,
                first: Outcome::singleton(fav.min(*other)),
                second: Outcome::singleton(fav.max(*other)),
            });
        }
        let slot = members.iter().position(|&c| c == fav).unwrap();
        groups[slot].1.push(i);
        if groups[slot].1.len() > quota {
            return Ok(None);
        }
    }
    if groups.iter().any(|(_, g)| g.len() != quota) {
        return Ok(None);
    }

    for (c, voters) in &groups {
        for &i in voters {
            let u = p.voter(i);
            let tie_value = u.value(tie_set);
            for &t in members.iter().filter(|&&t| t != *c) {
                let alone = Outcome::singleton(t);
                let alone_value = u.value(alone);
                if tie_value == alone_value {
                    return Err(Error::Indifferent {
                        voter: i,
                        first: alone.min(tie_set),
                        second: alone.max(tie_set),
                    });
                }
                if tie_value < alone_value {
                    return Ok(None);
                }
            }
            if quota > 1 {
                continue;
            }
            // a lone supporter can swap their candidate for an outsider
            for outsider in p.all_candidates().without_all(tie_set).iter() {
                let swapped = tie_set.without(*c).with(outsider);
                match u.value(swapped).cmp(&tie_value) {
                    std::cmp::Ordering::Less => {}
                    std::cmp::Ordering::Equal => {
                        return Err(Error::Indifferent {
                            voter: i,
                            first: swapped.min(tie_set),
                            second: swapped.max(tie_set),
                        })
                    }
                    std::cmp::Ordering::Greater => return Ok(None),
                }
            }
        }
    }
    Ok(Some(TopChoicePartition { tie_set, groups }))
}

/// Candidate subsets of size >= 2 whose size divides `n`, ordered by size and
/// then lexicographically by member indices.
fn tie_candidates(m: usize, n: usize) -> impl Iterator<Item = Outcome> {
    (2..=m)
        .filter(move |k| n.is_multiple_of(*k))
        .flat_map(move |k| (0..m).combinations(k).map(Outcome::from_candidates))
}

/// Finds an equilibrium if one exists.
///
/// A unanimous favourite yields the single-vote equilibrium cast by voter 0.
/// Otherwise the first tie set (in size-then-lexicographic order) passing
/// [`check_tie_set`] yields the equilibrium where every voter backs their
/// group's candidate. Tie sets of one size are checked in parallel; the
/// returned witness is still the first in scan order.
pub fn find_pne<U: Utility>(p: &Profile<U>) -> Result<Option<PneWitness>> {
    let n = p.n();
    if let Some(c) = unanimous_top(p) {
        let mut ballots = vec![Ballot::Abstain; n];
        ballots[0] = Ballot::Vote(c);
        return Ok(Some(PneWitness {
            ballots,
            outcome: Outcome::singleton(c),
        }));
    }
    let m = p.m();
    for k in (2..=m).filter(|k| n.is_multiple_of(*k)) {
        let sets: Vec<Vec<usize>> = (0..m).combinations(k).collect();
        let found = sets.par_iter().find_map_first(|s| {
            check_tie_set(p, Outcome::from_candidates(s.iter().copied())).transpose()
        });
        if let Some(partition) = found.transpose()? {
            return Ok(Some(PneWitness {
                ballots: partition.ballots(n),
                outcome: partition.tie_set,
            }));
        }
    }
    Ok(None)
}

/// Outcomes of all equilibria, derived from the characterization.
pub fn enumerate_pne_outcomes<U: Utility>(p: &Profile<U>) -> Result<BTreeSet<Outcome>> {
    let mut outcomes = BTreeSet::new();
    if let Some(c) = unanimous_top(p) {
        outcomes.insert(Outcome::singleton(c));
    }
    for set in tie_candidates(p.m(), p.n()) {
        if check_tie_set(p, set)?.is_some() {
            outcomes.insert(set);
        }
    }
    Ok(outcomes)
}
