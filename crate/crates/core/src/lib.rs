//! Exact equilibrium analysis of plurality voting with abstention.
//!
//! Voters are lazy: casting a ballot costs an amount smaller than any change
//! in outcome value, so they vote only when it changes the result for them.
//! The crate decides and constructs pure Nash equilibria of simultaneous
//! elections, computes subgame-perfect play of sequential elections, and
//! ships brute-force oracles plus instance generators to cross-check both.
//!
//! Everything is generic over the integer utility scalar ([`Utility`]).
//! The aliases below pick the common ones.

pub mod error;
pub mod instances;
pub mod model;
pub mod oracle;
pub mod scalar;
pub mod sequential;
pub mod simultaneous;

pub use error::{Error, Result};
pub use model::{Ballot, CandidateId, Outcome};
pub use scalar::Utility;

/// Profile with 64-bit utilities; enough for hand-written elections and
/// power-of-rank utilities up to about 14 candidates.
pub type SmallProfile = model::Profile<u64>;
/// Profile with 128-bit utilities.
pub type WideProfile = model::Profile<u128>;
/// Profile with arbitrary-precision utilities.
pub type ExactProfile = model::Profile<num_bigint::BigUint>;

pub type SmallUtilityVector = model::UtilityVector<u64>;
pub type WideUtilityVector = model::UtilityVector<u128>;
pub type ExactUtilityVector = model::UtilityVector<num_bigint::BigUint>;
