use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::model::{outcome_of_counts, Outcome, Profile};
use crate::scalar::Utility;

use super::{
    ballot_of_slot, check_order, count_table_size, MoverPrefs, SolverBounds, SpneResult, TieBreak,
    VotingOrder,
};

/// One round's slice: packed count vector -> (eventual outcome, chosen slot).
type Slice = HashMap<u64, (Outcome, u8)>;

/// Backward induction over `(vote counts, round)` states with the default tie-break.
pub fn spne_counts<U: Utility>(p: &Profile<U>, order: &VotingOrder) -> Result<SpneResult> {
    spne_counts_with(
        p,
        order,
        &TieBreak::ascending(p.m()),
        &SolverBounds::default(),
    )
}

pub fn spne_counts_with<U: Utility>(
    p: &Profile<U>,
    order: &VotingOrder,
    tie: &TieBreak,
    bounds: &SolverBounds,
) -> Result<SpneResult> {
    let solver = CountSolver::new(p, order, tie, bounds)?;
    let slices = solver.solve(true);
    let mut votes = Vec::with_capacity(solver.n);
    let mut key = 0u64;
    for slice in &slices[..solver.n] {
        let (_, slot) = slice[&key];
        let slot = slot as usize;
        votes.push(ballot_of_slot(slot));
        if slot > 0 {
            key += solver.radix_pow[slot - 1];
        }
    }
    Ok(SpneResult {
        outcome: slices[0][&0].0,
        votes,
    })
}

/// Equilibrium outcome only; keeps a single round's slice in memory at a time.
pub fn spne_counts_outcome<U: Utility>(
    p: &Profile<U>,
    order: &VotingOrder,
    tie: &TieBreak,
    bounds: &SolverBounds,
) -> Result<Outcome> {
    let solver = CountSolver::new(p, order, tie, bounds)?;
    let slices = solver.solve(false);
    Ok(slices[0][&0].0)
}

struct CountSolver<'a, U> {
    m: usize,
    n: usize,
    order: &'a VotingOrder,
    slots: Vec<usize>,
    prefs: Vec<MoverPrefs<'a, U>>,
    /// `(n + 1)^j`, the packing weight of candidate `j`.
    radix_pow: Vec<u64>,
}

impl<'a, U: Utility> CountSolver<'a, U> {
    fn new(
        p: &'a Profile<U>,
        order: &'a VotingOrder,
        tie: &TieBreak,
        bounds: &SolverBounds,
    ) -> Result<Self> {
        check_order(p, order)?;
        let (m, n) = (p.m(), p.n());
        let size = count_table_size(m, n).unwrap_or(u128::MAX);
        if size > bounds.max_table {
            return Err(Error::BoundExceeded {
                what: "count table n*(n+1)^m",
                size,
                limit: bounds.max_table,
            });
        }
        let packed = (n as u128 + 1).checked_pow(m as u32).unwrap_or(u128::MAX);
        if packed > u64::MAX as u128 {
            return Err(Error::BoundExceeded {
                what: "packed count key (n+1)^m",
                size: packed,
                limit: u64::MAX as u128,
            });
        }
        let radix_pow = (0..m).map(|j| (n as u64 + 1).pow(j as u32)).collect();
        Ok(CountSolver {
            m,
            n,
            order,
            slots: tie.slots(),
            prefs: MoverPrefs::for_profile(p),
            radix_pow,
        })
    }

    /// Count vectors with total at most `max_total`, each with its packed key.
    fn states(&self, max_total: usize) -> Vec<(u64, Vec<usize>)> {
        let mut out = Vec::new();
        let mut counts = vec![0usize; self.m];
        self.states_rec(0, max_total, 0, &mut counts, &mut out);
        out
    }

    fn states_rec(
        &self,
        j: usize,
        remaining: usize,
        key: u64,
        counts: &mut Vec<usize>,
        out: &mut Vec<(u64, Vec<usize>)>,
    ) {
        if j == self.m {
            out.push((key, counts.clone()));
            return;
        }
        for c in 0..=remaining {
            counts[j] = c;
            self.states_rec(
                j + 1,
                remaining - c,
                key + c as u64 * self.radix_pow[j],
                counts,
                out,
            );
        }
        counts[j] = 0;
    }

    /// Fills slices from round `n` down to 0. With `keep_all` unset only the
    /// root slice survives (earlier slices are dropped as soon as they are used).
    fn solve(&self, keep_all: bool) -> Vec<Slice> {
        let terminal: Slice = self
            .states(self.n)
            .into_iter()
            .map(|(key, counts)| (key, (outcome_of_counts(&counts), 0)))
            .collect();
        let mut slices: Vec<Slice> = vec![terminal];
        let mut child = vec![Outcome::EMPTY; self.m + 1];
        for round in (0..self.n).rev() {
            let next = slices.last().expect("next round slice");
            let mover = &self.prefs[self.order.voter_at(round)];
            let mut slice = Slice::with_capacity(next.len());
            for (key, _) in self.states(round) {
                child[0] = next[&key].0;
                for j in 0..self.m {
                    child[j + 1] = next[&(key + self.radix_pow[j])].0;
                }
                let (slot, o) = mover.choose(&self.slots, &child);
                slice.insert(key, (o, slot as u8));
            }
            if !keep_all {
                slices.clear();
            }
            slices.push(slice);
        }
        slices.reverse();
        slices
    }
}
