use proptest::prelude::*;
use stanley_core::{PathIdealParams, SquarefreeIdeal, VarIndex, VarSet};

const N: usize = 8;

fn ideal_strategy(n: usize) -> impl Strategy<Value = SquarefreeIdeal> {
    prop::collection::vec(0u64..(1 << n), 0..7).prop_map(move |raw| {
        SquarefreeIdeal::minimalize(n, raw.into_iter().map(VarSet::from_bits)).unwrap()
    })
}

fn subset_strategy(n: usize) -> impl Strategy<Value = VarSet> {
    (0u64..(1 << n)).prop_map(VarSet::from_bits)
}

fn is_antichain(i: &SquarefreeIdeal) -> bool {
    let g = i.generators();
    g.iter().enumerate().all(|(a, x)| {
        g.iter()
            .enumerate()
            .all(|(b, y)| a == b || !x.is_subset(*y))
    })
}

proptest! {
    #[test]
    fn operations_keep_antichains(i in ideal_strategy(N), j in ideal_strategy(N), u in subset_strategy(N), v in 1..=N) {
        prop_assert!(is_antichain(&i));
        prop_assert!(is_antichain(&i.colon(u).unwrap()));
        prop_assert!(is_antichain(&i.sum(&j).unwrap()));
        prop_assert!(is_antichain(&i.add_variable(VarIndex::new(v, N).unwrap()).unwrap()));
    }

    #[test]
    fn colon_membership_oracle(i in ideal_strategy(N), u in subset_strategy(N)) {
        let colon = i.colon(u).unwrap();
        for sigma in VarSet::full(N).subsets() {
            let direct = colon.generators().iter().any(|g| g.is_subset(sigma));
            let lifted = i.generators().iter().any(|g| g.is_subset(sigma.union(u)));
            prop_assert_eq!(direct, lifted);
        }
    }

    #[test]
    fn colon_generators_come_from_generators(i in ideal_strategy(N), u in subset_strategy(N)) {
        for g in i.colon(u).unwrap().generators() {
            prop_assert!(g.is_disjoint(u));
            prop_assert!(i.generators().iter().any(|h| g.is_subset(*h)));
        }
    }

    #[test]
    fn colon_composition(i in ideal_strategy(N), u in subset_strategy(N), v in subset_strategy(N)) {
        let stepwise = i.colon(u).unwrap().colon(v).unwrap();
        prop_assert_eq!(stepwise, i.colon(u.union(v)).unwrap());
    }

    #[test]
    fn text_round_trip(i in ideal_strategy(N)) {
        // the unit ideal's empty generator is a blank line, which the format skips
        prop_assume!(!i.is_unit());
        let parsed: SquarefreeIdeal = i.to_text().parse().unwrap();
        prop_assert_eq!(parsed, i);
    }

    #[test]
    fn relabel_onto_support_matches_path(n in 1usize..=14, m in 1usize..=14, shift in 0usize..5) {
        prop_assume!(m <= n);
        let p = PathIdealParams::new(n, m).unwrap();
        let ideal = SquarefreeIdeal::path(p);
        // spread the variables out and add free ones
        let spread = ideal.relabel(2 * n + shift, |i| 2 * i + shift).unwrap();
        prop_assert!(spread.order_preserving_match(p));
    }
}

#[test]
fn membership_oracle_exhaustive_small() {
    // n ≤ 10: every σ against every colon by a path-ideal window
    for n in 1..=10 {
        for m in 1..=n {
            let i = SquarefreeIdeal::path_ideal(n, m).unwrap();
            for var in 1..=n {
                let u = VarSet::singleton(var);
                let colon = i.colon(u).unwrap();
                for sigma in VarSet::full(n).subsets() {
                    assert_eq!(
                        colon.contains_monomial(sigma),
                        i.contains_monomial(sigma.union(u)),
                        "n={n} m={m} var={var} σ={sigma}"
                    );
                }
            }
        }
    }
}

#[test]
fn path_ideal_shape() {
    for n in 1..=40 {
        for m in 1..=n {
            let i = SquarefreeIdeal::path_ideal(n, m).unwrap();
            assert_eq!(i.generators().len(), n - m + 1);
            assert!(i.generators().iter().all(|g| g.len() == m));
            assert!(i.order_preserving_match(PathIdealParams::new(n, m).unwrap()));
        }
    }
}

#[test]
fn parse_errors_carry_line_numbers() {
    let err = "n=4\n1 2\n# comment\n1 x\n"
        .parse::<SquarefreeIdeal>()
        .unwrap_err();
    assert!(err.to_string().starts_with("line 4"), "{err}");
    let err = "1 2\n".parse::<SquarefreeIdeal>().unwrap_err();
    assert!(err.to_string().starts_with("line 1"), "{err}");
    let err = "n=3\n1 4\n".parse::<SquarefreeIdeal>().unwrap_err();
    assert!(err.to_string().starts_with("line 2"), "{err}");
}
