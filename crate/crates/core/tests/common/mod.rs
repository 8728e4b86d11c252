//! Independent oracles shared by the integration tests and the acceptance run.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use rand::rngs::StdRng;
use rand::Rng;
use stanley_core::{CharacteristicPoset, SquarefreeIdeal, VarSet};

/// Largest `d` such that the members can be split into intervals `[F, G]`
/// with `|G| ≥ d`. Tries every interval through the uncovered member with
/// the smallest bitmask; no truncation and no bottom rule.
pub fn brute_sdepth(members: &[VarSet]) -> Option<usize> {
    if members.is_empty() {
        return None;
    }
    assert!(members.len() <= 64);
    let mut sorted = members.to_vec();
    sorted.sort_by_key(|s| s.bits());
    let index: HashMap<VarSet, usize> = sorted.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let top = sorted.iter().map(|s| s.len()).max().unwrap();
    (0..=top).rev().find(|&d| {
        let mut failed = HashSet::new();
        cover(&sorted, &index, d, 0, &mut failed)
    })
}

fn cover(
    members: &[VarSet],
    index: &HashMap<VarSet, usize>,
    d: usize,
    covered: u64,
    failed: &mut HashSet<u64>,
) -> bool {
    let all = if members.len() == 64 {
        u64::MAX
    } else {
        (1u64 << members.len()) - 1
    };
    if covered == all {
        return true;
    }
    if failed.contains(&covered) {
        return false;
    }
    let first = (!covered & all).trailing_zeros() as usize;
    let x = members[first];
    for bottom in x.subsets() {
        for &g in members.iter().filter(|g| g.is_superset(x) && g.len() >= d) {
            let mut mask = 0u64;
            let free = g.difference(bottom);
            let ok = free
                .subsets()
                .all(|extra| match index.get(&bottom.union(extra)) {
                    Some(&i) if covered & (1 << i) == 0 => {
                        mask |= 1 << i;
                        true
                    }
                    _ => false,
                });
            if ok && cover(members, index, d, covered | mask, failed) {
                return true;
            }
        }
    }
    failed.insert(covered);
    false
}

pub fn brute_members(poset: &CharacteristicPoset) -> Vec<VarSet> {
    VarSet::full(poset.ambient())
        .subsets()
        .filter(|&s| poset.contains(s))
        .collect()
}

/// Every antichain of subsets of `[n]`, as ideals (including zero and unit).
pub fn all_antichains(n: usize) -> Vec<SquarefreeIdeal> {
    let subsets: Vec<VarSet> = VarSet::full(n).subsets().collect();
    assert!(subsets.len() <= 16);
    (0u32..1 << subsets.len())
        .filter_map(|family| {
            let chosen: Vec<VarSet> = (0..subsets.len())
                .filter(|&i| family & (1 << i) != 0)
                .map(|i| subsets[i])
                .collect();
            let antichain = chosen
                .iter()
                .all(|a| chosen.iter().all(|b| a == b || !a.is_subset(*b)));
            antichain.then(|| SquarefreeIdeal::minimalize(n, chosen).unwrap())
        })
        .collect()
}

/// A random ideal on `n` variables with between one and `max_gens` raw
/// generators, each variable included with probability one half.
pub fn random_ideal(rng: &mut StdRng, n: usize, max_gens: usize) -> SquarefreeIdeal {
    let count = rng.gen_range(1..=max_gens);
    let raw: Vec<VarSet> = (0..count)
        .map(|_| (1..=n).filter(|_| rng.gen_bool(0.5)).collect())
        .collect();
    SquarefreeIdeal::minimalize(n, raw).unwrap()
}

/// Reduced Euler characteristic `Σ (-1)^{|F|-1}` over the faces, including
/// the empty face.
pub fn reduced_euler(faces: &[VarSet]) -> i64 {
    faces
        .iter()
        .map(|f| if f.len() % 2 == 1 { 1 } else { -1 })
        .sum()
}
