//! Subgame-perfect equilibria of sequential plurality voting.
//!
//! Voters move one at a time in a fixed order and observe every earlier
//! ballot. All engines use the same backward induction: the mover takes the
//! action whose eventual outcome maximizes their payoff, and among
//! payoff-equal actions the first one in the [`TieBreak`] order. Abstaining
//! never ties with voting, and two votes only tie when they lead to the same
//! outcome, so the equilibrium outcome does not depend on the tie-break.

mod counts;
mod history;
mod two_candidate;

use crate::error::{Error, Result};
use crate::model::{outcome_ranks, Ballot, CandidateId, Outcome, Profile, UtilityVector};
use crate::scalar::Utility;

pub use counts::{spne_counts, spne_counts_outcome, spne_counts_with};
pub use history::{spne_history, spne_history_with, HistoryTables};
pub use two_candidate::{
    mandate_permutation, side_of, two_candidate_ballot, two_candidate_play, two_candidate_profile,
    Side, TwoCandidatePrediction,
};

/// Round `t` is played by voter `order[t]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VotingOrder {
    order: Vec<usize>,
}

impl VotingOrder {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n || seen[v] {
                return Err(Error::NotAPermutation { n });
            }
            seen[v] = true;
        }
        Ok(VotingOrder { order })
    }

    pub fn identity(n: usize) -> Self {
        VotingOrder {
            order: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn voter_at(&self, round: usize) -> usize {
        self.order[round]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.order
    }
}

/// Order in which payoff-equal actions are preferred: abstention first,
/// then candidates in `candidate_order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TieBreak {
    candidate_order: Vec<CandidateId>,
}

impl TieBreak {
    pub fn ascending(m: usize) -> Self {
        TieBreak {
            candidate_order: (0..m).map(CandidateId).collect(),
        }
    }

    pub fn new(candidate_order: Vec<CandidateId>) -> Result<Self> {
        let m = candidate_order.len();
        let mut seen = vec![false; m];
        for c in &candidate_order {
            if c.0 >= m || seen[c.0] {
                return Err(Error::InvalidRanking { m });
            }
            seen[c.0] = true;
        }
        Ok(TieBreak { candidate_order })
    }

    pub fn candidate_order(&self) -> &[CandidateId] {
        &self.candidate_order
    }

    /// Ballots in preference order.
    pub fn actions(&self) -> impl Iterator<Item = Ballot> + '_ {
        std::iter::once(Ballot::Abstain)
            .chain(self.candidate_order.iter().map(|&c| Ballot::Vote(c)))
    }

    /// Action slots (0 = abstain, `j + 1` = vote for `j`) in preference order.
    pub(crate) fn slots(&self) -> Vec<usize> {
        std::iter::once(0)
            .chain(self.candidate_order.iter().map(|c| c.0 + 1))
            .collect()
    }
}

pub(crate) fn ballot_of_slot(slot: usize) -> Ballot {
    if slot == 0 {
        Ballot::Abstain
    } else {
        Ballot::vote(slot - 1)
    }
}

/// On-path play of the computed equilibrium.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpneResult {
    pub outcome: Outcome,
    /// Ballot cast in each round.
    pub votes: Vec<Ballot>,
}

impl SpneResult {
    /// Number of votes received by each winner (all winners tie).
    pub fn mandate(&self) -> usize {
        let Some(w) = self.outcome.iter().next() else {
            return 0;
        };
        self.votes.iter().filter(|&&b| b == Ballot::Vote(w)).count()
    }
}

/// Size limits for the exponential engines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverBounds {
    /// History engine: largest allowed `(m + 1)^n`.
    pub max_states: u128,
    /// Count engine: largest allowed `n * (n + 1)^m`.
    pub max_table: u128,
    /// Tree oracle: largest allowed `(m + 1)^n`.
    pub max_tree: u128,
}

impl Default for SolverBounds {
    fn default() -> Self {
        SolverBounds {
            max_states: 1 << 24,
            max_table: 100_000_000,
            max_tree: 1 << 20,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    History,
    Counts,
    Tree,
}

impl Engine {
    /// History tables when they fit, count tables otherwise.
    pub fn select(m: usize, n: usize, bounds: &SolverBounds) -> Engine {
        match history_states(m, n) {
            Some(s) if s <= bounds.max_states => Engine::History,
            _ => Engine::Counts,
        }
    }
}

/// `(m + 1)^n`, or `None` on overflow.
pub(crate) fn history_states(m: usize, n: usize) -> Option<u128> {
    (m as u128 + 1).checked_pow(n as u32)
}

/// `n * (n + 1)^m`, or `None` on overflow.
pub(crate) fn count_table_size(m: usize, n: usize) -> Option<u128> {
    (n as u128 + 1)
        .checked_pow(m as u32)
        .and_then(|s| s.checked_mul(n.max(1) as u128))
}

#[derive(Debug, Clone, Default)]
pub struct SolveOptions {
    pub tie_break: Option<TieBreak>,
    pub bounds: SolverBounds,
}

/// Runs the chosen engine.
pub fn solve_spne<U: Utility>(
    p: &Profile<U>,
    order: &VotingOrder,
    engine: Engine,
    opts: &SolveOptions,
) -> Result<SpneResult> {
    let tie = opts
        .tie_break
        .clone()
        .unwrap_or_else(|| TieBreak::ascending(p.m()));
    match engine {
        Engine::History => spne_history_with(p, order, &tie, &opts.bounds).map(|(r, _)| r),
        Engine::Counts => spne_counts_with(p, order, &tie, &opts.bounds),
        Engine::Tree => crate::oracle::tree_spne_with(p, order, &tie, &opts.bounds),
    }
}

/// Equilibrium winners and the number of votes each of them received.
pub fn winner_mandate<U: Utility>(
    p: &Profile<U>,
    order: &VotingOrder,
    bounds: &SolverBounds,
) -> Result<(Outcome, usize)> {
    let engine = Engine::select(p.m(), p.n(), bounds);
    let opts = SolveOptions {
        tie_break: None,
        bounds: *bounds,
    };
    let r = solve_spne(p, order, engine, &opts)?;
    Ok((r.outcome, r.mandate()))
}

pub(crate) fn check_order<U: Utility>(p: &Profile<U>, order: &VotingOrder) -> Result<()> {
    if order.len() != p.n() {
        return Err(Error::NotAPermutation { n: p.n() });
    }
    Ok(())
}

/// Largest `m` for which movers' outcome rankings are precomputed.
const RANKED_MAX_M: usize = 12;

/// A mover's comparison of `(outcome, voted)` pairs.
pub(crate) enum MoverPrefs<'a, U> {
    /// Twice the outcome's rank, so the abstention bit fits below it.
    Ranked(Vec<u32>),
    Direct(&'a UtilityVector<U>),
}

impl<'a, U: Utility> MoverPrefs<'a, U> {
    pub(crate) fn for_profile(p: &'a Profile<U>) -> Vec<MoverPrefs<'a, U>> {
        p.voters()
            .iter()
            .map(|u| {
                if p.m() <= RANKED_MAX_M {
                    MoverPrefs::Ranked(outcome_ranks(u).into_iter().map(|r| r << 1).collect())
                } else {
                    MoverPrefs::Direct(u)
                }
            })
            .collect()
    }

    /// Is `(a, a_voted)` strictly better than `(b, b_voted)`?
    #[inline]
    pub(crate) fn better(&self, a: Outcome, a_voted: bool, b: Outcome, b_voted: bool) -> bool {
        match self {
            MoverPrefs::Ranked(r) => {
                let ka = r[a.bits() as usize] | (!a_voted) as u32;
                let kb = r[b.bits() as usize] | (!b_voted) as u32;
                ka > kb
            }
            MoverPrefs::Direct(u) => {
                crate::model::payoff(u, a, a_voted) > crate::model::payoff(u, b, b_voted)
            }
        }
    }

    /// First strictly best slot among `slots` (tie-break order), with its outcome.
    #[inline]
    pub(crate) fn choose(&self, slots: &[usize], child: &[Outcome]) -> (usize, Outcome) {
        let mut best = slots[0];
        for &s in &slots[1..] {
            if self.better(child[s], s != 0, child[best], best != 0) {
                best = s;
            }
        }
        (best, child[best])
    }
}
