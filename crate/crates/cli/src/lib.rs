//! Command-line front end: JSON election and X3C files in, JSON results out.

mod document;
mod error;
mod run;

pub use document::{
    parse_election, parse_x3c, Deviation, Diagnostics, ElectionDocument, ReductionSummary,
    ResultDocument, RoundRecord, VoterRecord, VoterRef, X3cDocument,
};
pub use error::CliError;
pub use run::{run, Request, Response, RunOptions, ABSTAIN, EXIT_NO_PNE};
