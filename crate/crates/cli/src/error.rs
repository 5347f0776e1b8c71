use plurality_core::model::Outcome;
use plurality_core::{CandidateId, Error};

use crate::document::ElectionDocument;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Bound(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Process exit status for this error.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Bound(_) => 3,
            CliError::Input(_) | CliError::Io(_) => 2,
        }
    }

    /// Rewrites a solver error with the file's voter and candidate names.
    pub fn from_core(e: Error, doc: &ElectionDocument) -> Self {
        let names = |o: Outcome| {
            let list: Vec<String> = o
                .iter()
                .map(|c: CandidateId| {
                    doc.candidates
                        .get(c.0)
                        .cloned()
                        .unwrap_or_else(|| c.to_string())
                })
                .collect();
            format!("{{{}}}", list.join(", "))
        };
        match e {
            Error::BoundExceeded { .. } => CliError::Bound(e.to_string()),
            Error::Indifferent {
                voter,
                first,
                second,
            } => CliError::Input(format!(
                "{} is indifferent between outcomes {} and {}",
                doc.voter_label(voter),
                names(first),
                names(second)
            )),
            Error::ScalarOverflow { voter } => CliError::Input(format!(
                "{}: utilities too large to compare exactly",
                doc.voter_label(voter)
            )),
            Error::UtilityLength {
                voter,
                expected,
                got,
            } => CliError::Input(format!(
                "{}: expected {expected} utilities, got {got}",
                doc.voter_label(voter)
            )),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::BoundExceeded { .. } => CliError::Bound(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}
