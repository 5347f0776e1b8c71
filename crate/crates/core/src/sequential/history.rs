use crate::error::{Error, Result};
use crate::model::{outcome_of_counts, tally, Ballot, CandidateId, Outcome, Profile};
use crate::scalar::Utility;

use super::{
    ballot_of_slot, check_order, history_states, MoverPrefs, SolverBounds, SpneResult, TieBreak,
    VotingOrder,
};

/// Equilibrium action and eventual outcome for every history.
///
/// Level `i < n` holds the `(m + 1)^i` histories of length `i`, encoded in base
/// `m + 1` with the first round as the most significant digit and ballot slot
/// `0` for abstention, `j + 1` for a vote for candidate `j`.
#[derive(Debug, Clone)]
pub struct HistoryTables {
    m: usize,
    winners: Vec<Vec<Outcome>>,
    actions: Vec<Vec<u8>>,
}

impl HistoryTables {
    fn code(&self, history: &[Ballot]) -> usize {
        history.iter().fold(0, |acc, b| {
            acc * (self.m + 1) + b.candidate().map_or(0, |c| c.0 + 1)
        })
    }

    /// Eventual outcome once `history` has been played. A complete history
    /// is simply tallied.
    pub fn winner(&self, history: &[Ballot]) -> Option<Outcome> {
        if history.len() == self.winners.len() {
            return tally(history, self.m).ok().map(|t| t.outcome());
        }
        self.winners
            .get(history.len())
            .map(|level| level[self.code(history)])
    }

    /// Equilibrium ballot of the next mover after `history`.
    pub fn action(&self, history: &[Ballot]) -> Option<Ballot> {
        self.actions
            .get(history.len())
            .map(|level| ballot_of_slot(level[self.code(history)] as usize))
    }

    /// Number of decision histories stored (every history shorter than `n`).
    pub fn state_count(&self) -> usize {
        self.winners.iter().map(Vec::len).sum()
    }
}

/// Backward induction over full vote histories with the default tie-break.
pub fn spne_history<U: Utility>(p: &Profile<U>, order: &VotingOrder) -> Result<SpneResult> {
    spne_history_with(
        p,
        order,
        &TieBreak::ascending(p.m()),
        &SolverBounds::default(),
    )
    .map(|(r, _)| r)
}

/// Backward induction over full vote histories, returning the filled tables.
pub fn spne_history_with<U: Utility>(
    p: &Profile<U>,
    order: &VotingOrder,
    tie: &TieBreak,
    bounds: &SolverBounds,
) -> Result<(SpneResult, HistoryTables)> {
    check_order(p, order)?;
    let (m, n) = (p.m(), p.n());
    let states = history_states(m, n).unwrap_or(u128::MAX);
    if states > bounds.max_states {
        return Err(Error::BoundExceeded {
            what: "history states (m+1)^n",
            size: states,
            limit: bounds.max_states,
        });
    }
    let prefs = MoverPrefs::for_profile(p);
    let movers: Vec<&MoverPrefs<U>> = (0..n).map(|t| &prefs[order.voter_at(t)]).collect();

    let mut filler = Filler {
        m,
        n,
        slots: tie.slots(),
        movers,
        counts: vec![0; m],
        children: vec![Outcome::EMPTY; n * (m + 1)],
        tables: HistoryTables {
            m,
            winners: (0..n)
                .map(|i| vec![Outcome::EMPTY; (m + 1).pow(i as u32)])
                .collect(),
            actions: (0..n).map(|i| vec![0u8; (m + 1).pow(i as u32)]).collect(),
        },
    };
    filler.fill(0, 0);
    let tables = filler.tables;

    let mut votes = Vec::with_capacity(n);
    let mut code = 0;
    for level in 0..n {
        let slot = tables.actions[level][code] as usize;
        votes.push(ballot_of_slot(slot));
        code = code * (m + 1) + slot;
    }
    let result = SpneResult {
        outcome: tables.winners[0][0],
        votes,
    };
    Ok((result, tables))
}

struct Filler<'a, U> {
    m: usize,
    n: usize,
    slots: Vec<usize>,
    movers: Vec<&'a MoverPrefs<'a, U>>,
    counts: Vec<usize>,
    /// Child outcomes of the node being expanded at each level.
    children: Vec<Outcome>,
    tables: HistoryTables,
}

impl<U: Utility> Filler<'_, U> {
    fn fill(&mut self, level: usize, code: usize) -> Outcome {
        if level == self.n {
            return outcome_of_counts(&self.counts);
        }
        let width = self.m + 1;
        let base = level * width;
        if level + 1 == self.n {
            self.last_round_children(base);
        } else {
            for slot in 0..width {
                if slot > 0 {
                    self.counts[slot - 1] += 1;
                }
                self.children[base + slot] = self.fill(level + 1, code * width + slot);
                if slot > 0 {
                    self.counts[slot - 1] -= 1;
                }
            }
        }
        let (best, o) = self.movers[level].choose(&self.slots, &self.children[base..base + width]);
        self.tables.actions[level][code] = best as u8;
        self.tables.winners[level][code] = o;
        o
    }

    /// Final outcomes after each possible last ballot, derived from one tally.
    fn last_round_children(&mut self, base: usize) {
        let current = outcome_of_counts(&self.counts);
        let max = self.counts.iter().copied().max().unwrap_or(0);
        self.children[base] = current;
        for (j, &c) in self.counts.iter().enumerate() {
            let j_id = CandidateId(j);
            self.children[base + j + 1] = if c == max {
                Outcome::singleton(j_id)
            } else if c + 1 == max {
                current.with(j_id)
            } else {
                current
            };
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: Ballot = Ballot::Vote(CandidateId(0));
    const X: Ballot = Ballot::Abstain;

    #[test]
    fn lone_voter_picks_favorite() {
        let p = Profile::from_rows(&[[1u64, 9, 4]]).unwrap();
        let r = spne_history(&p, &VotingOrder::identity(1)).unwrap();
        assert_eq!(r.votes, vec![Ballot::vote(1)]);
        assert_eq!(r.outcome, Outcome::from_candidates([1]));
    }

    #[test]
    fn alternating_two_candidate_string() {
        // ABABA
        let p = Profile::from_rows(&[[2u64, 1], [1, 2], [2, 1], [1, 2], [2, 1]]).unwrap();
        let (r, tables) = spne_history_with(
            &p,
            &VotingOrder::identity(5),
            &TieBreak::ascending(2),
            &SolverBounds::default(),
        )
        .unwrap();
        assert_eq!(r.votes, vec![A, X, X, X, X]);
        assert_eq!(r.outcome, Outcome::from_candidates([0]));
        assert_eq!(tables.state_count(), (0..5).map(|i| 3usize.pow(i)).sum());
        assert_eq!(tables.winner(&[X, X, X, X, X]), Some(Outcome::EMPTY));
        assert_eq!(tables.action(&[]), Some(A));
        // off-path: if the first A-voter abstains the B-voters can force a tie
        assert_eq!(tables.action(&[X]), Some(Ballot::vote(1)));
        assert_eq!(tables.winner(&[X]), Some(Outcome::from_candidates([0, 1])));
    }

    #[test]
    fn bound_is_enforced() {
        let p = Profile::from_rows(&[[2u64, 1]; 5]).unwrap();
        let bounds = SolverBounds {
            max_states: 100,
            ..SolverBounds::default()
        };
        let err = spne_history_with(
            &p,
            &VotingOrder::identity(5),
            &TieBreak::ascending(2),
            &bounds,
        )
        .unwrap_err();
        assert!(matches!(
            err,
            Error::BoundExceeded {
                size: 243,
                limit: 100,
                ..
            }
        ));
    }
}
