//! Brute-force references for the solvers.
//!
//! Nothing here shares code with the fast paths beyond the data types: the
//! oracles count votes themselves and compare payoffs as reduced
//! arbitrary-precision fractions instead of by cross-multiplication.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::model::{Ballot, Outcome, Profile, UtilityVector};
use crate::scalar::Utility;
use crate::sequential::{SolverBounds, SpneResult, TieBreak, VotingOrder};
use crate::simultaneous::PneWitness;

/// Default cap on `(m + 1)^n` for exhaustive ballot enumeration.
pub const DEFAULT_MAX_PROFILES: u128 = 10_000_000;

fn winners(ballots: &[Ballot], m: usize) -> Outcome {
    let mut counts = vec![0usize; m];
    for b in ballots {
        if let Ballot::Vote(c) = b {
            counts[c.0] += 1;
        }
    }
    let best = *counts.iter().max().unwrap_or(&0);
    if best == 0 {
        return Outcome::EMPTY;
    }
    Outcome::from_candidates((0..m).filter(|&j| counts[j] == best))
}

/// `(value, abstained)`; `None` is minus infinity. Tuples order lexicographically.
type ExactPayoff = (Option<BigRational>, bool);

fn oracle_payoff<U: Utility>(u: &UtilityVector<U>, o: Outcome, ballot: Ballot) -> ExactPayoff {
    let value = (!o.is_empty()).then(|| {
        let total: BigInt = o
            .iter()
            .map(|c| BigInt::from(u.utilities[c.0].to_biguint().expect("non-negative utility")))
            .sum();
        BigRational::new(total, BigInt::from(o.len()))
    });
    (value, ballot == Ballot::Abstain)
}

fn no_profitable_deviation<U: Utility>(p: &Profile<U>, ballots: &mut [Ballot]) -> bool {
    let m = p.m();
    let current = winners(ballots, m);
    for i in 0..ballots.len() {
        let original = ballots[i];
        let u = p.voter(i);
        let stay = oracle_payoff(u, current, original);
        for alt in Ballot::all(m) {
            ballots[i] = alt;
            let moved = oracle_payoff(u, winners(ballots, m), alt);
            ballots[i] = original;
            if moved > stay {
                return false;
            }
        }
    }
    true
}

/// Every pure equilibrium, by exhaustive search over all `(m + 1)^n` ballot
/// vectors in lexicographic ballot order (voter 0 most significant).
pub fn brute_force_pne<U: Utility>(p: &Profile<U>) -> Result<Vec<PneWitness>> {
    brute_force_pne_with(p, DEFAULT_MAX_PROFILES)
}

pub fn brute_force_pne_with<U: Utility>(
    p: &Profile<U>,
    max_profiles: u128,
) -> Result<Vec<PneWitness>> {
    let (m, n) = (p.m(), p.n());
    let size = (m as u128 + 1).checked_pow(n as u32).unwrap_or(u128::MAX);
    if size > max_profiles {
        return Err(Error::BoundExceeded {
            what: "ballot vectors (m+1)^n",
            size,
            limit: max_profiles,
        });
    }
    let all: Vec<Ballot> = Ballot::all(m).collect();
    let mut digits = vec![0usize; n];
    let mut ballots = vec![Ballot::Abstain; n];
    let mut found = Vec::new();
    loop {
        for (b, &d) in ballots.iter_mut().zip(&digits) {
            *b = all[d];
        }
        if no_profitable_deviation(p, &mut ballots) {
            found.push(PneWitness {
                outcome: winners(&ballots, m),
                ballots: ballots.clone(),
            });
        }
        // odometer, last voter fastest
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(found);
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] <= m {
                break;
            }
            digits[pos] = 0;
        }
    }
}

/// Plain recursive backward induction with no tables.
pub fn tree_spne<U: Utility>(p: &Profile<U>, order: &VotingOrder) -> Result<SpneResult> {
    tree_spne_with(
        p,
        order,
        &TieBreak::ascending(p.m()),
        &SolverBounds::default(),
    )
}

pub fn tree_spne_with<U: Utility>(
    p: &Profile<U>,
    order: &VotingOrder,
    tie: &TieBreak,
    bounds: &SolverBounds,
) -> Result<SpneResult> {
    let (m, n) = (p.m(), p.n());
    if order.len() != n {
        return Err(Error::NotAPermutation { n });
    }
    let size = (m as u128 + 1).checked_pow(n as u32).unwrap_or(u128::MAX);
    if size > bounds.max_tree {
        return Err(Error::BoundExceeded {
            what: "game tree leaves (m+1)^n",
            size,
            limit: bounds.max_tree,
        });
    }
    let actions: Vec<Ballot> = tie.actions().collect();
    let mut history = Vec::with_capacity(n);
    let votes = play(p, order, &actions, &mut history);
    Ok(SpneResult {
        outcome: winners(&votes, m),
        votes,
    })
}

fn play<U: Utility>(
    p: &Profile<U>,
    order: &VotingOrder,
    actions: &[Ballot],
    history: &mut Vec<Ballot>,
) -> Vec<Ballot> {
    let round = history.len();
    if round == p.n() {
        return history.clone();
    }
    let mover = p.voter(order.voter_at(round));
    let mut best: Option<(Vec<Ballot>, ExactPayoff)> = None;
    for &a in actions {
        history.push(a);
        let line = play(p, order, actions, history);
        history.pop();
        let value = oracle_payoff(mover, winners(&line, p.m()), a);
        if best.as_ref().is_none_or(|(_, v)| value > *v) {
            best = Some((line, value));
        }
    }
    best.expect("at least one action").0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simultaneous::is_pne;

    fn consensus() -> Profile {
        Profile::from_rows(&[[5u64, 2, 1], [5, 2, 1], [5, 1, 2], [5, 1, 2]]).unwrap()
    }

    #[test]
    fn consensus_contains_both_equilibria() {
        let a = Ballot::vote(0);
        let (b, c, x) = (Ballot::vote(1), Ballot::vote(2), Ballot::Abstain);
        let found = brute_force_pne(&consensus()).unwrap();
        let vectors: Vec<_> = found.iter().map(|w| w.ballots.clone()).collect();
        assert!(vectors.contains(&vec![a, x, x, x]));
        assert!(vectors.contains(&vec![b, b, c, c]));
        for w in &found {
            assert!(is_pne(&consensus(), &w.ballots).unwrap().is_equilibrium());
        }
    }

    #[test]
    fn lone_voter_must_vote_for_favorite() {
        let p = Profile::from_rows(&[[3u64, 1]]).unwrap();
        let found = brute_force_pne(&p).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].ballots, vec![Ballot::vote(0)]);
    }

    #[test]
    fn cyclic_three_voters_only_have_the_full_tie() {
        // n = 3 is prime, but k = n = 3 tied candidates still divides n
        let p = Profile::from_rows(&[[16u64, 4, 1], [1, 16, 4], [4, 1, 16]]).unwrap();
        let found = brute_force_pne(&p).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(
            found[0].ballots,
            vec![Ballot::vote(0), Ballot::vote(1), Ballot::vote(2)]
        );
    }

    #[test]
    fn cyclic_three_voters_over_two_candidates_have_none() {
        let p = Profile::from_rows(&[[3u64, 1], [1, 3], [3, 1]]).unwrap();
        assert!(brute_force_pne(&p).unwrap().is_empty());
    }

    #[test]
    fn enumeration_bound() {
        let p = Profile::from_rows(&[[3u64, 1]; 4]).unwrap();
        assert!(matches!(
            brute_force_pne_with(&p, 80),
            Err(Error::BoundExceeded { size: 81, .. })
        ));
    }

    #[test]
    fn tree_lone_voter() {
        let p = Profile::from_rows(&[[1u64, 9, 4]]).unwrap();
        let r = tree_spne(&p, &VotingOrder::identity(1)).unwrap();
        assert_eq!(r.votes, vec![Ballot::vote(1)]);
    }

    #[test]
    fn tree_alternating_string() {
        let p = Profile::from_rows(&[[2u64, 1], [1, 2], [2, 1], [1, 2], [2, 1]]).unwrap();
        let r = tree_spne(&p, &VotingOrder::identity(5)).unwrap();
        let x = Ballot::Abstain;
        assert_eq!(r.votes, vec![Ballot::vote(0), x, x, x, x]);
    }
}
