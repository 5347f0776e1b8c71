use crate::error::{Error, Result};
use crate::model::payoff::{expected_utility, ExpectedUtility};
use crate::model::{CandidateId, Outcome, MAX_CANDIDATES};
use crate::scalar::Utility;

/// Default largest `m` for which [`validate_profile`] enumerates all outcomes.
pub const DEFAULT_DISTINCTNESS_BOUND: usize = 20;

/// One voter's utility for each candidate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UtilityVector<U = u64> {
    pub utilities: Vec<U>,
}

impl<U: Utility> UtilityVector<U> {
    pub fn new(utilities: Vec<U>) -> Self {
        UtilityVector { utilities }
    }

    pub fn len(&self) -> usize {
        self.utilities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.utilities.is_empty()
    }

    pub fn value(&self, o: Outcome) -> ExpectedUtility<U> {
        expected_utility(self, o)
    }

    /// Candidate with the highest utility among `among` (lowest index on equal utilities).
    pub fn favorite_in(&self, among: Outcome) -> Option<CandidateId> {
        among.iter().reduce(|best, c| {
            if self.utilities[c.0] > self.utilities[best.0] {
                c
            } else {
                best
            }
        })
    }

    pub fn favorite(&self) -> CandidateId {
        let all = Outcome::from_bits(full_mask(self.len()));
        self.favorite_in(all).expect("non-empty utility vector")
    }

    /// True if `c` has strictly greater utility than every other candidate.
    pub fn strictly_prefers_first(&self, c: CandidateId) -> bool {
        let uc = &self.utilities[c.0];
        self.utilities
            .iter()
            .enumerate()
            .all(|(j, u)| j == c.0 || u < uc)
    }
}

pub(crate) fn full_mask(m: usize) -> u64 {
    if m >= 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

/// A preference profile: `n` utility vectors over `m` candidates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile<U = u64> {
    m: usize,
    voters: Vec<UtilityVector<U>>,
    pub candidate_names: Option<Vec<String>>,
    pub voter_names: Option<Vec<String>>,
}

impl<U: Utility> Profile<U> {
    /// Builds a profile after structural checks (non-empty, consistent lengths).
    /// Outcome distinctness is checked separately by [`validate_profile`].
    pub fn new(m: usize, voters: Vec<UtilityVector<U>>) -> Result<Self> {
        if m == 0 {
            return Err(Error::NoCandidates);
        }
        if m > MAX_CANDIDATES {
            return Err(Error::TooManyCandidates {
                m,
                max: MAX_CANDIDATES,
            });
        }
        if voters.is_empty() {
            return Err(Error::NoVoters);
        }
        for (i, u) in voters.iter().enumerate() {
            if u.len() != m {
                return Err(Error::UtilityLength {
                    voter: i,
                    expected: m,
                    got: u.len(),
                });
            }
        }
        Ok(Profile {
            m,
            voters,
            candidate_names: None,
            voter_names: None,
        })
    }

    /// Convenience constructor from raw rows; `m` is taken from the first row.
    pub fn from_rows<R: AsRef<[U]>>(rows: &[R]) -> Result<Self> {
        let m = rows.first().map(|r| r.as_ref().len()).unwrap_or(0);
        let voters = rows
            .iter()
            .map(|r| UtilityVector::new(r.as_ref().to_vec()))
            .collect();
        Self::new(m, voters)
    }

    pub fn with_candidate_names(mut self, names: Vec<String>) -> Self {
        self.candidate_names = Some(names);
        self
    }

    pub fn with_voter_names(mut self, names: Vec<String>) -> Self {
        self.voter_names = Some(names);
        self
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.voters.len()
    }

    pub fn voters(&self) -> &[UtilityVector<U>] {
        &self.voters
    }

    pub fn voter(&self, i: usize) -> &UtilityVector<U> {
        &self.voters[i]
    }

    pub fn all_candidates(&self) -> Outcome {
        Outcome::from_bits(full_mask(self.m))
    }

    pub fn candidate_name(&self, c: CandidateId) -> String {
        match &self.candidate_names {
            Some(names) => names[c.0].clone(),
            None => c.to_string(),
        }
    }
}

/// Checks that every voter strictly ranks all `2^m - 1` nonempty outcomes.
pub fn validate_profile<U: Utility>(p: &Profile<U>) -> Result<()> {
    validate_profile_with(p, DEFAULT_DISTINCTNESS_BOUND)
}

/// Like [`validate_profile`], but skips the exponential distinctness scan when
/// `m > distinctness_bound`. Structural and overflow checks always run.
pub fn validate_profile_with<U: Utility>(p: &Profile<U>, distinctness_bound: usize) -> Result<()> {
    if p.m() == 0 {
        return Err(Error::NoCandidates);
    }
    if p.n() == 0 {
        return Err(Error::NoVoters);
    }
    let m = U::from_count(p.m());
    for (i, u) in p.voters().iter().enumerate() {
        if u.len() != p.m() {
            return Err(Error::UtilityLength {
                voter: i,
                expected: p.m(),
                got: u.len(),
            });
        }
        // Cross-multiplication multiplies a partial sum by at most m.
        let total = u
            .utilities
            .iter()
            .try_fold(U::zero(), |acc, x| acc.checked_add(x))
            .and_then(|t| t.checked_mul(&m));
        if total.is_none() {
            return Err(Error::ScalarOverflow { voter: i });
        }
    }
    if p.m() <= distinctness_bound {
        for (i, u) in p.voters().iter().enumerate() {
            check_distinct_outcomes(u).map_err(|(first, second)| Error::Indifferent {
                voter: i,
                first,
                second,
            })?;
        }
    }
    Ok(())
}

/// Sorts all nonempty outcomes by value and reports the first adjacent collision.
/// The pair is returned with the smaller bitset first.
pub(crate) fn check_distinct_outcomes<U: Utility>(
    u: &UtilityVector<U>,
) -> std::result::Result<(), (Outcome, Outcome)> {
    let mut outcomes: Vec<(ExpectedUtility<U>, Outcome)> = (1..=full_mask(u.len()))
        .map(Outcome::from_bits)
        .map(|o| (u.value(o), o))
        .collect();
    outcomes.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
    for w in outcomes.windows(2) {
        if w[0].0 == w[1].0 {
            return Err((w[0].1.min(w[1].1), w[0].1.max(w[1].1)));
        }
    }
    Ok(())
}

/// Strict ranking of every outcome for one voter: `rank[mask]` is 0 for the
/// empty outcome and grows with the outcome's value. Requires distinct values.
pub(crate) fn outcome_ranks<U: Utility>(u: &UtilityVector<U>) -> Vec<u32> {
    let full = full_mask(u.len());
    let mut outcomes: Vec<(ExpectedUtility<U>, u64)> = (1..=full)
        .map(|b| (u.value(Outcome::from_bits(b)), b))
        .collect();
    outcomes.sort_by(|a, b| a.0.cmp(&b.0));
    let mut ranks = vec![0u32; (full as usize) + 1];
    let mut rank = 0u32;
    for (k, (v, b)) in outcomes.iter().enumerate() {
        if k == 0 || *v != outcomes[k - 1].0 {
            rank += 1;
        }
        ranks[*b as usize] = rank;
    }
    ranks
}
