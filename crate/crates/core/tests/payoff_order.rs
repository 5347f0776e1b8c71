use num_bigint::BigInt;
use num_rational::BigRational;
use plurality_core::model::{
    expected_utility, payoff, tally, validate_profile, Ballot, ExpectedUtility, Outcome, Payoff,
    Profile, UtilityVector,
};
use proptest::prelude::*;

fn as_rational(e: &ExpectedUtility<u64>) -> Option<BigRational> {
    e.as_fraction()
        .map(|(t, s)| BigRational::new(BigInt::from(*t), BigInt::from(s)))
}

fn utilities(m: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0u64..1_000_000, m)
}

fn outcome(m: usize) -> impl Strategy<Value = Outcome> {
    (0u64..1 << m).prop_map(Outcome::from_bits)
}

proptest! {
    #[test]
    fn cross_multiplication_matches_reduced_fractions(
        u in utilities(6),
        o1 in outcome(6),
        o2 in outcome(6),
    ) {
        let u = UtilityVector::new(u);
        let (e1, e2) = (expected_utility(&u, o1), expected_utility(&u, o2));
        // None < Some(_) mirrors -inf at the bottom
        prop_assert_eq!(e1.cmp(&e2), as_rational(&e1).cmp(&as_rational(&e2)));
    }

    #[test]
    fn singleton_value_is_the_utility(u in utilities(5), j in 0usize..5) {
        let v = UtilityVector::new(u.clone());
        let e = expected_utility(&v, Outcome::from_candidates([j]));
        prop_assert_eq!(e.as_fraction(), Some((&u[j], 1)));
    }

    #[test]
    fn sorting_payoffs_gives_a_consistent_total_order(
        u in utilities(4),
        entries in prop::collection::vec((outcome(4), any::<bool>()), 1..24),
    ) {
        let u = UtilityVector::new(u);
        let mut pays: Vec<Payoff<u64>> =
            entries.iter().map(|&(o, voted)| payoff(&u, o, voted)).collect();
        pays.sort();
        for w in pays.windows(2) {
            prop_assert!(w[0] <= w[1]);
        }
        for a in &pays {
            for b in &pays {
                prop_assert_eq!(a.cmp(b), b.cmp(a).reverse());
                for c in &pays {
                    if a <= b && b <= c {
                        prop_assert!(a <= c);
                    }
                }
            }
        }
    }

    #[test]
    fn outcome_is_empty_exactly_when_nobody_votes(
        raw in prop::collection::vec(0usize..4, 0..9),
    ) {
        let ballots: Vec<Ballot> = raw
            .iter()
            .map(|&r| if r == 0 { Ballot::Abstain } else { Ballot::vote(r - 1) })
            .collect();
        let o = tally(&ballots, 3).unwrap().outcome();
        prop_assert_eq!(o.is_empty(), ballots.iter().all(|b| !b.is_vote()));
    }

    #[test]
    fn valid_profiles_compare_distinct_outcomes_strictly(
        u in utilities(4),
        o1 in outcome(4),
        o2 in outcome(4),
        voted in any::<bool>(),
    ) {
        let p = Profile::from_rows(&[u]).unwrap();
        prop_assume!(validate_profile(&p).is_ok());
        prop_assume!(o1 != o2 && !o1.is_empty() && !o2.is_empty());
        let v = p.voter(0);
        prop_assert_ne!(payoff(v, o1, voted), payoff(v, o2, voted));
    }
}

#[test]
fn empty_outcome_is_below_every_other_payoff() {
    let u = UtilityVector::new(vec![0u64, 0, 0]);
    let bottom = payoff(&u, Outcome::EMPTY, false);
    for bits in 1..8 {
        assert!(payoff(&u, Outcome::from_bits(bits), true) > bottom);
    }
}
