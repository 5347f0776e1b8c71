//! Exact Cover by 3-Sets and its reduction to equilibrium existence.
//!
//! Ground elements become candidates `d_i`, feasible sets become candidates
//! `e_j`. Two voters rank each `d_i` first; for every set `E_j` and member
//! `t` one voter ranks `e_j` first and `d_t` second. The reduced election
//! has an equilibrium exactly when the instance has an exact cover.

use std::collections::HashSet;
use std::ops::Range;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::instances::rankings::{rank_to_utilities, Ranking};
use crate::model::{Profile, UtilityVector};
use crate::scalar::Utility;

/// Default cap on the number of `N/3`-subsets of feasible sets the brute-force
/// solver will try.
pub const DEFAULT_MAX_COMBINATIONS: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct X3cInstance {
    ground_size: usize,
    sets: Vec<[usize; 3]>,
}

impl X3cInstance {
    /// Validates sizes and members; each triple is stored sorted.
    pub fn new(ground_size: usize, sets: Vec<[usize; 3]>) -> Result<Self> {
        if !ground_size.is_multiple_of(3) {
            return Err(Error::InvalidX3c(format!(
                "ground size {ground_size} is not divisible by 3"
            )));
        }
        let mut seen = HashSet::new();
        let mut sorted = Vec::with_capacity(sets.len());
        for (j, mut s) in sets.into_iter().enumerate() {
            s.sort_unstable();
            if s[0] == s[1] || s[1] == s[2] {
                return Err(Error::InvalidX3c(format!(
                    "set {j} has repeated elements {s:?}"
                )));
            }
            if s[2] >= ground_size {
                return Err(Error::InvalidX3c(format!(
                    "set {j} element {} outside ground set of size {ground_size}",
                    s[2]
                )));
            }
            if !seen.insert(s) {
                return Err(Error::InvalidX3c(format!("set {j} {s:?} is a duplicate")));
            }
            sorted.push(s);
        }
        Ok(X3cInstance {
            ground_size,
            sets: sorted,
        })
    }

    /// Builds from variable-length sets, rejecting any that are not 3-sets.
    pub fn from_sets(ground_size: usize, sets: &[Vec<usize>]) -> Result<Self> {
        let triples = sets
            .iter()
            .enumerate()
            .map(|(j, s)| {
                <[usize; 3]>::try_from(s.as_slice()).map_err(|_| {
                    Error::InvalidX3c(format!("set {j} has {} elements, expected 3", s.len()))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ground_size, triples)
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn sets(&self) -> &[[usize; 3]] {
        &self.sets
    }
}

/// Number of feasible sets containing each ground element.
pub fn x3c_thickness(x: &X3cInstance) -> Vec<usize> {
    let mut f = vec![0; x.ground_size];
    for s in &x.sets {
        for &g in s {
            f[g] += 1;
        }
    }
    f
}

/// Which construction path produced a [`ReductionOutput`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionBranch {
    /// Every element lies in exactly one set: the sets already form a cover,
    /// so a fixed election with an equilibrium is returned.
    Shortcut,
    /// Uniform thickness other than one: a fresh set `{x, y, z}` was appended.
    Gadget,
    Direct,
}

#[derive(Debug, Clone)]
pub struct ReductionOutput<U = u64> {
    pub profile: Profile<U>,
    pub branch: ReductionBranch,
    /// Candidate indices of the element candidates `d_i`.
    pub d_candidates: Range<usize>,
    /// Candidate indices of the set candidates `e_j`.
    pub e_candidates: Range<usize>,
    /// `renumbering[i]` is the original element behind `d_i`; gadget elements
    /// are numbered `N, N + 1, N + 2`.
    pub renumbering: Vec<usize>,
    pub notes: Vec<String>,
}

fn canonical_yes_instance<U: Utility>() -> Result<Profile<U>> {
    let rows = [[5u64, 2, 1], [5, 2, 1], [5, 1, 2], [5, 1, 2]];
    let voters = rows
        .iter()
        .map(|r| UtilityVector::new(r.iter().map(|&v| U::from_u64(v).unwrap()).collect()))
        .collect();
    Ok(Profile::new(3, voters)?.with_candidate_names(vec!["A".into(), "B".into(), "C".into()]))
}

/// Builds the election whose equilibrium existence decides `x`.
pub fn x3c_reduce<U: Utility>(x: &X3cInstance) -> Result<ReductionOutput<U>> {
    let f = x3c_thickness(x);
    if f.iter().all(|&c| c == 1) {
        return Ok(ReductionOutput {
            profile: canonical_yes_instance()?,
            branch: ReductionBranch::Shortcut,
            d_candidates: 0..0,
            e_candidates: 0..0,
            renumbering: Vec::new(),
            notes: vec![
                "every element has thickness 1: the sets are an exact cover; \
                 emitted a fixed election with an equilibrium"
                    .into(),
            ],
        });
    }

    let mut sets = x.sets.clone();
    let mut thickness = f;
    let mut ground = x.ground_size;
    let mut notes = Vec::new();
    let uniform = thickness.iter().all_equal();
    let branch = if uniform {
        sets.push([ground, ground + 1, ground + 2]);
        thickness.extend([1, 1, 1]);
        notes.push(format!(
            "uniform thickness {}: appended gadget set {{{}, {}, {}}}",
            thickness[0],
            ground,
            ground + 1,
            ground + 2
        ));
        ground += 3;
        ReductionBranch::Gadget
    } else {
        ReductionBranch::Direct
    };

    // stable sort by non-increasing thickness
    let mut renumbering: Vec<usize> = (0..ground).collect();
    renumbering.sort_by(|a, b| thickness[*b].cmp(&thickness[*a]));
    let mut position = vec![0; ground];
    for (new, &old) in renumbering.iter().enumerate() {
        position[old] = new;
    }

    let n_d = ground;
    let n_e = sets.len();
    let m = n_d + n_e;
    let d = |i: usize| i;
    let e = |j: usize| n_d + j;

    let mut voters = Vec::with_capacity(2 * n_d + 3 * n_e);
    let mut voter_names = Vec::with_capacity(voters.capacity());
    for i in 0..n_d {
        let order: Vec<usize> = std::iter::once(d(i))
            .chain((0..n_d).filter(|&k| k != i).map(d))
            .chain((0..n_e).map(e))
            .collect();
        let u = rank_to_utilities::<U>(&Ranking::new(order)?)?;
        for copy in 1..=2 {
            voters.push(u.clone());
            voter_names.push(format!("u({},{copy})", i + 1));
        }
    }
    for (j, set) in sets.iter().enumerate() {
        let mut members: Vec<usize> = set.iter().map(|&g| position[g]).collect();
        members.sort_unstable();
        for t in members {
            let order: Vec<usize> = [e(j), d(t)]
                .into_iter()
                .chain((0..n_d).filter(|&k| k != t).map(d))
                .chain((0..n_e).filter(|&k| k != j).map(e))
                .collect();
            voters.push(rank_to_utilities::<U>(&Ranking::new(order)?)?);
            voter_names.push(format!("w({},{})", j + 1, t + 1));
        }
    }

    let names = (1..=n_d)
        .map(|i| format!("d{i}"))
        .chain((1..=n_e).map(|j| format!("e{j}")))
        .collect();
    let profile = Profile::new(m, voters)?
        .with_candidate_names(names)
        .with_voter_names(voter_names);
    Ok(ReductionOutput {
        profile,
        branch,
        d_candidates: 0..n_d,
        e_candidates: n_d..m,
        renumbering,
        notes,
    })
}

/// Decides the instance by trying every choice of `N/3` sets.
pub fn x3c_solve_bruteforce(x: &X3cInstance) -> Result<bool> {
    x3c_solve_bruteforce_with(x, DEFAULT_MAX_COMBINATIONS)
}

pub fn x3c_solve_bruteforce_with(x: &X3cInstance, max_combinations: u128) -> Result<bool> {
    let need = x.ground_size / 3;
    let size = binomial(x.sets.len(), need);
    if size > max_combinations {
        return Err(Error::BoundExceeded {
            what: "X3C set combinations",
            size,
            limit: max_combinations,
        });
    }
    let covers = |chosen: &[&[usize; 3]]| {
        let mut hit = vec![false; x.ground_size];
        for s in chosen {
            for &g in s.iter() {
                if hit[g] {
                    return false;
                }
                hit[g] = true;
            }
        }
        hit.iter().all(|&h| h)
    };
    Ok(x.sets.iter().combinations(need).any(|c| covers(&c)))
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| {
        acc.saturating_mul((n - i) as u128) / (i as u128 + 1)
    })
}
