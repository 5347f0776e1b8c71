use std::collections::HashSet;
use std::sync::{Mutex, OnceLock};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::model::{CandidateId, Profile, UtilityVector, DEFAULT_DISTINCTNESS_BOUND};
use crate::scalar::Utility;

/// Strict preference order over candidates, most preferred first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ranking {
    order: Vec<CandidateId>,
}

impl Ranking {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let m = order.len();
        let mut seen = vec![false; m];
        for &c in &order {
            if c >= m || seen[c] {
                return Err(Error::InvalidRanking { m });
            }
            seen[c] = true;
        }
        Ok(Ranking {
            order: order.into_iter().map(CandidateId).collect(),
        })
    }

    /// Parses a ranking written with letters, `A` being candidate 0 (e.g. `"ACB"`).
    pub fn from_letters(s: &str) -> Result<Self> {
        let order = s
            .chars()
            .map(|ch| {
                ch.is_ascii_uppercase()
                    .then(|| (ch as u8 - b'A') as usize)
                    .ok_or(Error::InvalidRanking { m: s.len() })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(order)
    }

    pub fn m(&self) -> usize {
        self.order.len()
    }

    pub fn order(&self) -> &[CandidateId] {
        &self.order
    }

    /// Assigns `values[p]` to the candidate at position `p`.
    fn spread<U: Clone>(&self, values: &[U]) -> Vec<U> {
        let mut out = values.to_vec();
        for (pos, c) in self.order.iter().enumerate() {
            out[c.0] = values[pos].clone();
        }
        out
    }
}

fn verified_sizes() -> &'static Mutex<HashSet<usize>> {
    static VERIFIED: OnceLock<Mutex<HashSet<usize>>> = OnceLock::new();
    VERIFIED.get_or_init(Default::default)
}

/// Utility `(m + 1)^(m - 1 - p)` for the candidate at position `p`.
///
/// The power pattern is re-checked for outcome distinctness (once per `m`, up
/// to the default distinctness bound) and an error is returned rather than an
/// invalid vector.
pub fn rank_to_utilities<U: Utility>(r: &Ranking) -> Result<UtilityVector<U>> {
    let m = r.m();
    if m == 0 {
        return Err(Error::NoCandidates);
    }
    let values = (0..m)
        .map(|p| U::checked_pow(m + 1, m - 1 - p).ok_or(Error::ScalarOverflow { voter: 0 }))
        .collect::<Result<Vec<U>>>()?;
    if m <= DEFAULT_DISTINCTNESS_BOUND && !verified_sizes().lock().unwrap().contains(&m) {
        // distinctness does not depend on which candidate sits where
        let base = UtilityVector::new(values.clone());
        crate::model::validate_profile(&Profile::new(m, vec![base])?)?;
        verified_sizes().lock().unwrap().insert(m);
    }
    Ok(UtilityVector::new(r.spread(&values)))
}

/// Three-candidate voter classes, distinguished by whether a tie between
/// first and last choice beats the middle choice winning alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VoterKind {
    TopBottom,
    Centrist,
}

impl VoterKind {
    /// `(top, middle, bottom)` utilities.
    pub fn pattern(self) -> [u64; 3] {
        match self {
            VoterKind::TopBottom => [8, 3, 2],
            VoterKind::Centrist => [8, 5, 1],
        }
    }
}

pub fn three_candidate_utilities<U: Utility>(
    r: &Ranking,
    kind: VoterKind,
) -> Result<UtilityVector<U>> {
    if r.m() != 3 {
        return Err(Error::CandidateCount {
            expected: 3,
            got: r.m(),
        });
    }
    let values: Vec<U> = kind
        .pattern()
        .iter()
        .map(|&v| U::from_u64(v).unwrap())
        .collect();
    Ok(UtilityVector::new(r.spread(&values)))
}

/// `n` voters with independent uniformly random rankings, mapped through
/// [`rank_to_utilities`]. The same seed always gives the same profile.
pub fn random_profile<U: Utility>(n: usize, m: usize, seed: u64) -> Result<Profile<U>> {
    if m == 0 {
        return Err(Error::NoCandidates);
    }
    if n == 0 {
        return Err(Error::NoVoters);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let voters = (0..n)
        .map(|_| {
            let mut order: Vec<usize> = (0..m).collect();
            order.shuffle(&mut rng);
            rank_to_utilities(&Ranking::new(order)?)
        })
        .collect::<Result<Vec<_>>>()?;
    Profile::new(m, voters)
}
