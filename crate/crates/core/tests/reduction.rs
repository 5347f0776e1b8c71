use itertools::Itertools;
use plurality_core::instances::{
    rank_to_utilities, x3c_reduce, x3c_solve_bruteforce, Ranking, ReductionBranch, X3cInstance,
};
use plurality_core::model::Outcome;
use plurality_core::simultaneous::{find_pne, is_pne};
use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn instance(n: usize, sets: &[[usize; 3]]) -> X3cInstance {
    X3cInstance::new(n, sets.to_vec()).unwrap()
}

/// Random instances over six elements with one to five distinct sets.
fn random_instances(count: usize, seed: u64) -> Vec<X3cInstance> {
    let triples: Vec<[usize; 3]> = (0..6).combinations(3).map(|t| [t[0], t[1], t[2]]).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let m = 1 + i % 5;
            let sets: Vec<[usize; 3]> = triples.choose_multiple(&mut rng, m).copied().collect();
            instance(6, &sets)
        })
        .collect()
}

#[test]
fn reduced_tops_match_the_construction() {
    for x in random_instances(40, 3) {
        let r = x3c_reduce::<u128>(&x).unwrap();
        if r.branch == ReductionBranch::Shortcut {
            continue;
        }
        let p = &r.profile;
        let mut tops = vec![0usize; p.m()];
        for u in p.voters() {
            tops[u.favorite().0] += 1;
        }
        assert!(r.d_candidates.clone().all(|c| tops[c] == 2));
        assert!(r.e_candidates.clone().all(|c| tops[c] == 3));
        let big_n = r.d_candidates.len();
        let big_m = r.e_candidates.len();
        assert_eq!(p.m(), big_n + big_m);
        assert_eq!(p.n(), 2 * big_n + 3 * big_m);
    }
}

#[test]
fn reduction_preserves_the_answer() {
    let mut instances = random_instances(24, 17);
    instances.push(instance(6, &[[0, 1, 2], [3, 4, 5]]));
    instances.push(instance(6, &[[0, 1, 2], [0, 1, 3], [3, 4, 5]]));
    instances.push(instance(6, &[[0, 1, 2], [0, 1, 3]]));
    instances.push(instance(6, &[[0, 1, 2], [3, 4, 5], [0, 3, 4], [1, 2, 5]]));
    instances.push(instance(6, &[[0, 1, 2], [0, 3, 4], [1, 3, 5], [2, 4, 5]]));
    instances.push(instance(3, &[[0, 1, 2]]));
    let (mut yes, mut no) = (0, 0);
    for x in &instances {
        let expected = x3c_solve_bruteforce(x).unwrap();
        let r = x3c_reduce::<u128>(x).unwrap();
        let found = find_pne(&r.profile).unwrap();
        assert_eq!(found.is_some(), expected, "{x:?}");
        if let Some(w) = found {
            assert!(is_pne(&r.profile, &w.ballots).unwrap().is_equilibrium());
            yes += 1;
        } else {
            no += 1;
        }
    }
    assert!(yes > 0 && no > 0);
}

#[test]
fn gadget_instance_sizes() {
    let x = instance(6, &[[0, 1, 2], [3, 4, 5], [0, 3, 4], [1, 2, 5]]);
    let r = x3c_reduce::<u64>(&x).unwrap();
    assert_eq!(r.branch, ReductionBranch::Gadget);
    assert_eq!((r.profile.m(), r.profile.n()), (14, 33));
}

#[test]
fn power_utilities_prefer_ties_to_the_runner_up() {
    // the identity ranking covers every ranking up to relabelling
    for m in 2..=6 {
        let u = rank_to_utilities::<u64>(&Ranking::new((0..m).collect()).unwrap()).unwrap();
        for bits in 1u64..1 << m {
            let set = Outcome::from_bits(bits);
            if set.len() < 2 {
                continue;
            }
            let second = set.iter().nth(1).unwrap();
            assert!(
                u.value(set) > u.value(Outcome::singleton(second)),
                "m={m} {set:?}"
            );
        }
    }
}
