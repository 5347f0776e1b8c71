//! JSON input and output documents.

use serde::{Deserialize, Serialize};

use plurality_core::model::{validate_profile, Profile, UtilityVector};
use plurality_core::sequential::VotingOrder;
use plurality_core::WideProfile;

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElectionDocument {
    pub candidates: Vec<String>,
    pub voters: Vec<VoterRecord>,
    /// Voting order for sequential commands, by voter name or index.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<VoterRef>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VoterRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub utilities: Vec<u128>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VoterRef {
    Index(usize),
    Name(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct X3cDocument {
    pub ground_size: usize,
    pub sets: Vec<Vec<usize>>,
}

/// Parses an election file. Syntax errors carry the line and column.
pub fn parse_election(text: &str) -> Result<ElectionDocument, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Input(format!("election file: {e}")))
}

pub fn parse_x3c(text: &str) -> Result<X3cDocument, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Input(format!("X3C file: {e}")))
}

impl ElectionDocument {
    pub fn voter_label(&self, i: usize) -> String {
        match self.voters.get(i).and_then(|v| v.name.clone()) {
            Some(name) => format!("voter '{name}' (index {i})"),
            None => format!("voter {i}"),
        }
    }

    /// Builds the profile, running the outcome-distinctness check when `validate` is set.
    pub fn profile(&self, validate: bool) -> Result<WideProfile, CliError> {
        let m = self.candidates.len();
        if let Some(dup) = first_duplicate(self.candidates.iter()) {
            return Err(CliError::Input(format!(
                "candidate name '{dup}' appears twice"
            )));
        }
        if let Some(dup) = first_duplicate(self.voters.iter().filter_map(|v| v.name.as_ref())) {
            return Err(CliError::Input(format!("voter name '{dup}' appears twice")));
        }
        for (i, v) in self.voters.iter().enumerate() {
            if v.utilities.len() != m {
                return Err(CliError::Input(format!(
                    "{}: expected {m} utilities, got {}",
                    self.voter_label(i),
                    v.utilities.len()
                )));
            }
        }
        let voters = self
            .voters
            .iter()
            .map(|v| UtilityVector::new(v.utilities.clone()))
            .collect();
        let mut p = Profile::new(m, voters)
            .map_err(|e| CliError::from_core(e, self))?
            .with_candidate_names(self.candidates.clone());
        if self.voters.iter().all(|v| v.name.is_some()) {
            p = p.with_voter_names(
                self.voters
                    .iter()
                    .map(|v| v.name.clone().unwrap())
                    .collect(),
            );
        }
        if validate {
            validate_profile(&p).map_err(|e| CliError::from_core(e, self))?;
        }
        Ok(p)
    }

    /// The listed order, or voters in file order when none is given.
    pub fn voting_order(&self) -> Result<VotingOrder, CliError> {
        let n = self.voters.len();
        let Some(refs) = &self.order else {
            return Ok(VotingOrder::identity(n));
        };
        let indices = refs
            .iter()
            .map(|r| match r {
                VoterRef::Index(i) if *i < n => Ok(*i),
                VoterRef::Index(i) => Err(CliError::Input(format!(
                    "order: voter index {i} out of range (n = {n})"
                ))),
                VoterRef::Name(name) => self
                    .voters
                    .iter()
                    .position(|v| v.name.as_deref() == Some(name))
                    .ok_or_else(|| CliError::Input(format!("order: unknown voter '{name}'"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        VotingOrder::new(indices).map_err(|_| {
            CliError::Input(format!(
                "order: must list each of the {n} voters exactly once"
            ))
        })
    }

    pub fn from_profile(p: &WideProfile) -> Self {
        ElectionDocument {
            candidates: (0..p.m())
                .map(|j| p.candidate_name(plurality_core::CandidateId(j)))
                .collect(),
            voters: p
                .voters()
                .iter()
                .enumerate()
                .map(|(i, u)| VoterRecord {
                    name: p.voter_names.as_ref().map(|names| names[i].clone()),
                    utilities: u.utilities.clone(),
                })
                .collect(),
            order: None,
        }
    }
}

fn first_duplicate<'a>(names: impl Iterator<Item = &'a String>) -> Option<&'a String> {
    let mut seen = std::collections::HashSet::new();
    names.into_iter().find(|n| !seen.insert(*n))
}

/// Everything a command can report; absent fields are omitted.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResultDocument {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub engine: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub valid: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub is_pne: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deviation: Option<Deviation>,
    /// Winners by name; an empty list means nobody voted.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outcome: Option<Vec<String>>,
    /// Simultaneous ballots, one per voter in file order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ballots: Option<Vec<String>>,
    /// Sequential play, one entry per round.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub votes: Option<Vec<RoundRecord>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outcomes: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equilibria: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mandate: Option<usize>,
    /// Voter types in voting order, e.g. `AAAABB`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reduction: Option<ReductionSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub election: Option<ElectionDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagnostics: Option<Diagnostics>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Deviation {
    pub voter: String,
    pub ballot: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RoundRecord {
    pub round: usize,
    pub voter: String,
    pub ballot: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReductionSummary {
    pub branch: String,
    pub d_candidates: Vec<String>,
    pub e_candidates: Vec<String>,
    pub renumbering: Vec<usize>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Diagnostics {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub states: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_us: Option<u64>,
}
