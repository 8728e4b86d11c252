mod common;

use rand::rngs::StdRng;
use rand::SeedableRng;
use stanley_core::{CharacteristicPoset, Side, SquarefreeIdeal, VarSet};

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn sides_partition_the_cube_and_are_closed() {
    for n in 1..=12 {
        for m in 1..=n {
            let ideal = SquarefreeIdeal::path_ideal(n, m).unwrap();
            let q = CharacteristicPoset::quotient(&ideal).unwrap();
            let p = CharacteristicPoset::ideal_side(&ideal).unwrap();
            for sigma in VarSet::full(n).subsets() {
                assert!(q.contains(sigma) != p.contains(sigma));
                assert_eq!(q.contains(sigma), !ideal.contains_monomial(sigma));
            }
            assert!(q.is_downward_closed());
            assert!(p.is_upward_closed());
            assert_eq!(q.len() + p.len(), 1 << n);
        }
    }
}

#[test]
fn random_ideals_closed_and_counted() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..200 {
        let ideal = common::random_ideal(&mut rng, 9, 6);
        let q = CharacteristicPoset::quotient(&ideal).unwrap();
        let p = CharacteristicPoset::ideal_side(&ideal).unwrap();
        assert!(q.is_downward_closed() && p.is_upward_closed());
        assert_eq!(q.rank_counts().iter().sum::<usize>(), q.members().len());
        assert_eq!(p.rank_counts().iter().sum::<usize>(), p.members().len());
        let members = q.members();
        assert!(members.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn zero_ideal_counts_are_binomial() {
    for n in 0..=12 {
        let q = CharacteristicPoset::quotient(&SquarefreeIdeal::zero(n).unwrap()).unwrap();
        let expected: Vec<usize> = (0..=n).map(|k| binomial(n, k)).collect();
        assert_eq!(q.rank_counts(), expected);
    }
}

#[test]
fn interval_membership_reduces_to_an_endpoint() {
    // [F, G] ⊆ P iff G ∈ P (quotient side) or F ∈ P (ideal side)
    let mut rng = StdRng::seed_from_u64(11);
    for n in 1..=8 {
        for _ in 0..6 {
            let ideal = common::random_ideal(&mut rng, n, 5);
            for side in [Side::Quotient, Side::Ideal] {
                let p = CharacteristicPoset::new(&ideal, side).unwrap();
                for g in VarSet::full(n).subsets() {
                    for f in g.subsets() {
                        let full = g.difference(f).subsets().all(|e| p.contains(f.union(e)));
                        let endpoint = match side {
                            Side::Quotient => p.contains(g),
                            Side::Ideal => p.contains(f),
                        };
                        assert_eq!(full, endpoint, "n={n} F={f} G={g} {side:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn upper_sets_match_filtering() {
    let ideal = SquarefreeIdeal::path_ideal(8, 3).unwrap();
    let q = CharacteristicPoset::quotient(&ideal).unwrap();
    for sigma in q.members() {
        for d in 0..=8 {
            let expected: Vec<VarSet> = q
                .members_of_rank(d)
                .into_iter()
                .filter(|t| sigma.is_subset(*t))
                .collect();
            assert_eq!(q.upper_set_at(sigma, d).unwrap(), expected);
        }
    }
}
