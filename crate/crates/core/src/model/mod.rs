//! Election semantics shared by every solver: ballots, tallies, outcomes,
//! utilities and the payoff order of lazy voters.

mod ballot;
mod payoff;
mod profile;
mod tally;

pub use ballot::{Ballot, BallotVector, CandidateId};
pub use payoff::{expected_utility, payoff, ExpectedUtility, Payoff};
pub(crate) use profile::outcome_ranks;
pub use profile::{
    validate_profile, validate_profile_with, Profile, UtilityVector, DEFAULT_DISTINCTNESS_BOUND,
};
pub use tally::{outcome, outcome_of_counts, tally, Outcome, Tally, MAX_CANDIDATES};
