//! Exact outcome values and the lazy-voter payoff order.
//!
//! The voting cost is never represented as a number. It is strictly smaller
//! than any gap between two outcome values, so a payoff compares first by
//! outcome value and only then prefers abstaining.

use std::cmp::Ordering;

use crate::model::{Outcome, UtilityVector};
use crate::scalar::Utility;

/// Expected utility of an outcome: `total / size`, or `-inf` for the empty outcome.
#[derive(Debug, Clone)]
pub enum ExpectedUtility<U> {
    NegInfinity,
    Mean { total: U, size: usize },
}

impl<U: Utility> ExpectedUtility<U> {
    pub fn is_neg_infinity(&self) -> bool {
        matches!(self, ExpectedUtility::NegInfinity)
    }

    /// Numerator and denominator, unreduced.
    pub fn as_fraction(&self) -> Option<(&U, usize)> {
        match self {
            ExpectedUtility::NegInfinity => None,
            ExpectedUtility::Mean { total, size } => Some((total, *size)),
        }
    }
}

impl<U: Utility> Ord for ExpectedUtility<U> {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExpectedUtility::*;
        match (self, other) {
            (NegInfinity, NegInfinity) => Ordering::Equal,
            (NegInfinity, Mean { .. }) => Ordering::Less,
            (Mean { .. }, NegInfinity) => Ordering::Greater,
            (
                Mean {
                    total: t1,
                    size: s1,
                },
                Mean {
                    total: t2,
                    size: s2,
                },
            ) => {
                let lhs = t1.clone() * U::from_count(*s2);
                let rhs = t2.clone() * U::from_count(*s1);
                lhs.cmp(&rhs)
            }
        }
    }
}

impl<U: Utility> PartialOrd for ExpectedUtility<U> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<U: Utility> PartialEq for ExpectedUtility<U> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<U: Utility> Eq for ExpectedUtility<U> {}

/// Outcome value plus whether the voter paid the voting cost.
#[derive(Debug, Clone)]
pub struct Payoff<U> {
    pub value: ExpectedUtility<U>,
    pub voted: bool,
}

impl<U: Utility> Ord for Payoff<U> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.value
            .cmp(&other.value)
            // not voting is better
            .then_with(|| other.voted.cmp(&self.voted))
    }
}

impl<U: Utility> PartialEq for Payoff<U> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<U: Utility> Eq for Payoff<U> {}

impl<U: Utility> PartialOrd for Payoff<U> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Mean utility of the winners, or `-inf` when nobody won.
pub fn expected_utility<U: Utility>(u: &UtilityVector<U>, o: Outcome) -> ExpectedUtility<U> {
    if o.is_empty() {
        return ExpectedUtility::NegInfinity;
    }
    let total = o
        .iter()
        .fold(U::zero(), |acc, c| acc + u.utilities[c.0].clone());
    ExpectedUtility::Mean {
        total,
        size: o.len(),
    }
}

pub fn payoff<U: Utility>(u: &UtilityVector<U>, o: Outcome, voted: bool) -> Payoff<U> {
    Payoff {
        value: expected_utility(u, o),
        voted,
    }
}
