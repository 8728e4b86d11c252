mod common;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use stanley_core::solver::exists_partition_with;
use stanley_core::{
    exists_partition, quick_upper_bound, sdepth_poset, sdepth_poset_with, CharacteristicPoset,
    IntervalPartition, Side, SolverConfig, SquarefreeIdeal, VarSet,
};

#[test]
fn oracle_is_not_trivial() {
    let x1x2 = SquarefreeIdeal::minimalize(2, [VarSet::from_iter([1, 2])]).unwrap();
    let q = CharacteristicPoset::quotient(&x1x2).unwrap();
    assert_eq!(common::brute_sdepth(&common::brute_members(&q)), Some(1));
    let m3 = SquarefreeIdeal::path_ideal(3, 1).unwrap();
    let p = CharacteristicPoset::ideal_side(&m3).unwrap();
    assert_eq!(common::brute_sdepth(&common::brute_members(&p)), Some(2));
    // three isolated points have no interval of size two
    let points: Vec<VarSet> = (1..=3).map(VarSet::singleton).collect();
    assert_eq!(common::brute_sdepth(&points), Some(1));
}

#[test]
fn agrees_with_oracle_on_small_antichains() {
    for n in 1..=3 {
        for ideal in common::all_antichains(n) {
            for side in [Side::Quotient, Side::Ideal] {
                let p = CharacteristicPoset::new(&ideal, side).unwrap();
                let expected = common::brute_sdepth(&common::brute_members(&p));
                let got = sdepth_poset(&p).ok().map(|r| r.value);
                assert_eq!(got, expected, "{ideal:?} {side:?}");
            }
        }
    }
}

#[test]
fn decisions_are_monotone() {
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..60 {
        let ideal = common::random_ideal(&mut rng, 6, 5);
        for side in [Side::Quotient, Side::Ideal] {
            let p = CharacteristicPoset::new(&ideal, side).unwrap();
            if p.is_empty() {
                continue;
            }
            let answers: Vec<bool> = (0..=6)
                .map(|d| exists_partition(&p, d).unwrap().is_some())
                .collect();
            // true for a prefix of d, then false
            assert!(answers.windows(2).all(|w| w[0] || !w[1]), "{answers:?}");
            let sd = sdepth_poset(&p).unwrap().value;
            assert_eq!(answers.iter().filter(|&&a| a).count(), sd + 1);
            assert!(sd <= quick_upper_bound(&p).unwrap());
        }
    }
}

#[test]
fn invariant_under_order_preserving_relabelling() {
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..40 {
        let ideal = common::random_ideal(&mut rng, 6, 5);
        // choose 6 increasing targets in 1..=9
        let mut targets: Vec<usize> = (1..=9).collect();
        targets.shuffle(&mut rng);
        let mut chosen: Vec<usize> = targets[..6].to_vec();
        chosen.sort_unstable();
        let relabelled = ideal.relabel(9, |i| chosen[i - 1]).unwrap();
        let a = sdepth_poset(&CharacteristicPoset::quotient(&ideal).unwrap()).map(|r| r.value);
        let b = sdepth_poset(&CharacteristicPoset::quotient(&relabelled).unwrap()).map(|r| r.value);
        // three extra free variables raise sdepth by exactly three
        assert_eq!(a.map(|v| v + 3), b, "{ideal:?}");
    }
}

#[test]
fn witnesses_validate_and_reparse() {
    for n in 1..=9 {
        for m in 1..=n {
            let ideal = SquarefreeIdeal::path_ideal(n, m).unwrap();
            let p = CharacteristicPoset::quotient(&ideal).unwrap();
            let r = sdepth_poset(&p).unwrap();
            assert!(r.witness.validate());
            assert_eq!(r.witness.sdepth(), Some(r.value));
            let text = r.witness.to_string();
            let back = IntervalPartition::parse(&text, p.clone()).unwrap();
            assert_eq!(back.intervals(), r.witness.intervals());
        }
    }
}

#[test]
fn parallel_matches_sequential() {
    let parallel = SolverConfig {
        parallel: true,
        ..SolverConfig::default()
    };
    for n in 6..=10 {
        for m in 1..=n {
            let ideal = SquarefreeIdeal::path_ideal(n, m).unwrap();
            let p = CharacteristicPoset::quotient(&ideal).unwrap();
            let a = sdepth_poset(&p).unwrap();
            let b = sdepth_poset_with(&p, &parallel).unwrap();
            assert_eq!(a.value, b.value);
            assert!(b.witness.validate());
        }
    }
}

#[test]
fn tiny_memo_still_correct() {
    let config = SolverConfig {
        memo_bytes: 0,
        ..SolverConfig::default()
    };
    let ideal = SquarefreeIdeal::path_ideal(9, 3).unwrap();
    let p = CharacteristicPoset::quotient(&ideal).unwrap();
    assert!(exists_partition_with(&p, 5, &config).unwrap().is_some());
    assert!(exists_partition_with(&p, 6, &config).unwrap().is_none());
}
