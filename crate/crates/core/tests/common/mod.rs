#![allow(dead_code)]

use plurality_core::instances::{three_candidate_utilities, Ranking, VoterKind};
use plurality_core::model::{Ballot, Profile};
use plurality_core::sequential::{two_candidate_profile, Side};

pub const A: Ballot = Ballot::Vote(plurality_core::CandidateId(0));
pub const B: Ballot = Ballot::Vote(plurality_core::CandidateId(1));
pub const C: Ballot = Ballot::Vote(plurality_core::CandidateId(2));
pub const X: Ballot = Ballot::Abstain;

pub fn consensus() -> Profile<u64> {
    Profile::from_rows(&[[5u64, 2, 1], [5, 2, 1], [5, 1, 2], [5, 1, 2]]).unwrap()
}

/// Three-candidate profile from `(ranking, kind)` pairs, e.g. `("ACB", TopBottom)`.
pub fn three(voters: &[(&str, VoterKind)]) -> Profile<u64> {
    let rows = voters
        .iter()
        .map(|(r, k)| three_candidate_utilities(&Ranking::from_letters(r).unwrap(), *k).unwrap())
        .collect();
    Profile::new(3, rows).unwrap()
}

pub fn sides(s: &str) -> Vec<Side> {
    s.chars().map(|c| Side::from_char(c).unwrap()).collect()
}

pub fn ab_profile(s: &str) -> Profile<u64> {
    two_candidate_profile(&sides(s))
}

/// All strings over {A, B} of length `len`.
pub fn ab_strings(len: usize) -> impl Iterator<Item = String> {
    (0u32..1 << len).map(move |bits| {
        (0..len)
            .map(|i| {
                if bits >> (len - 1 - i) & 1 == 0 {
                    'A'
                } else {
                    'B'
                }
            })
            .collect()
    })
}

pub fn beaten_condorcet_winner() -> Profile<u64> {
    use VoterKind::TopBottom;
    three(&[
        ("ACB", TopBottom),
        ("ACB", TopBottom),
        ("ACB", TopBottom),
        ("BCA", TopBottom),
        ("BCA", TopBottom),
        ("CBA", TopBottom),
        ("CBA", TopBottom),
    ])
}

pub fn last_choice() -> Profile<u64> {
    use VoterKind::{Centrist, TopBottom};
    three(&[
        ("ACB", Centrist),
        ("BCA", Centrist),
        ("BCA", TopBottom),
        ("CAB", Centrist),
    ])
}
