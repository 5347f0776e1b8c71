//! Instance construction: utilities from rankings, the three-candidate voter
//! classes, seeded random profiles and the exact-cover reduction.

mod rankings;
mod x3c;

pub use rankings::{
    random_profile, rank_to_utilities, three_candidate_utilities, Ranking, VoterKind,
};
pub use x3c::{
    x3c_reduce, x3c_solve_bruteforce, x3c_solve_bruteforce_with, x3c_thickness, ReductionBranch,
    ReductionOutput, X3cInstance, DEFAULT_MAX_COMBINATIONS,
};
