//! Stanley depth of a characteristic poset by exact interval-partition search.
//!
//! A partition of `P` with every top of size at least `d` exists iff the
//! members of rank `≤ d` can be partitioned into intervals whose tops have
//! size exactly `d`: an interval `[F, G]` with `|F| ≤ d ≤ |G|`, cut at rank
//! `d`, splits into such intervals (induct on one coordinate of `G \ F`).
//! Members above rank `d` then become singletons. The search therefore only
//! ever branches over rank-`d` tops.
//!
//! Members are visited in canonical order and the first uncovered one is
//! always the bottom of its interval, since any interval through it with a
//! smaller bottom would contain an earlier uncovered member.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ideal::SquarefreeIdeal;
use crate::partition::{Interval, IntervalPartition};
use crate::poset::CharacteristicPoset;
use crate::varset::VarSet;

#[derive(Clone, Debug)]
pub struct SolverConfig {
    /// Upper bound on the memory spent remembering failed cover states.
    pub memo_bytes: usize,
    /// Wall-clock allowance for a single decision or optimization call.
    pub budget: Option<Duration>,
    /// Explore the first branching level on the rayon pool.
    pub parallel: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            memo_bytes: 256 << 20,
            budget: None,
            parallel: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SdepthResult {
    pub value: usize,
    pub witness: IntervalPartition,
    /// The bound the descent started from.
    pub upper_bound: usize,
}

/// Minimum, over the maximal members `σ`, of the largest `d` with
/// `P_{d,σ} ≠ ∅`. A member with empty `P_{d,σ}` forces `sdepth(P) < d`.
pub fn quick_upper_bound(poset: &CharacteristicPoset) -> Result<usize> {
    poset
        .maximal_members()
        .into_iter()
        .map(|sigma| poset.max_rank_above(sigma))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .min()
        .ok_or(Error::EmptyPoset)
}

pub fn exists_partition(
    poset: &CharacteristicPoset,
    d: usize,
) -> Result<Option<IntervalPartition>> {
    exists_partition_with(poset, d, &SolverConfig::default())
}

/// Decides whether `poset` has an interval partition with every top of size
/// at least `d`, returning one if so.
pub fn exists_partition_with(
    poset: &CharacteristicPoset,
    d: usize,
    config: &SolverConfig,
) -> Result<Option<IntervalPartition>> {
    let deadline = config.budget.map(|b| Instant::now() + b);
    decide(poset, d, config, deadline)
}

pub fn sdepth_poset(poset: &CharacteristicPoset) -> Result<SdepthResult> {
    sdepth_poset_with(poset, &SolverConfig::default())
}

/// `sdepth(P)`: the largest `d` for which [`exists_partition_with`] succeeds,
/// found by descending from [`quick_upper_bound`].
pub fn sdepth_poset_with(
    poset: &CharacteristicPoset,
    config: &SolverConfig,
) -> Result<SdepthResult> {
    let upper_bound = quick_upper_bound(poset)?;
    let deadline = config.budget.map(|b| Instant::now() + b);
    for d in (0..=upper_bound).rev() {
        if let Some(witness) = decide(poset, d, config, deadline)? {
            return Ok(SdepthResult {
                value: d,
                witness,
                upper_bound,
            });
        }
    }
    unreachable!("a nonempty poset always has the partition into singletons")
}

/// `sdepth(S/I)`, computed on `P_{S/I}` within the default ambient cap.
pub fn sdepth_quotient(ideal: &SquarefreeIdeal, config: &SolverConfig) -> Result<usize> {
    let poset = CharacteristicPoset::quotient(ideal)?;
    Ok(sdepth_poset_with(&poset, config)?.value)
}

fn decide(
    poset: &CharacteristicPoset,
    d: usize,
    config: &SolverConfig,
    deadline: Option<Instant>,
) -> Result<Option<IntervalPartition>> {
    let n = poset.ambient();
    if d > n {
        return Ok(None);
    }
    let mut search = Search::new(poset, d, config.memo_bytes, deadline);
    let found = if config.parallel {
        search.run_parallel()?
    } else {
        search.run()?
    };
    Ok(found.map(|chosen| {
        let mut intervals = chosen;
        // members above rank d are covered by singletons
        intervals.extend(
            (d + 1..=n)
                .flat_map(|r| poset.members_of_rank(r))
                .map(Interval::singleton),
        );
        IntervalPartition::new(poset.clone(), intervals)
    }))
}

#[derive(Clone)]
struct Search {
    d: usize,
    /// Members of rank `≤ d`, canonical order.
    order: Vec<VarSet>,
    /// Rank-`d` members, lexicographic.
    tops: Vec<VarSet>,
    covered: Vec<u64>,
    /// Uncovered members per rank.
    remaining: Vec<i64>,
    binom: Vec<Vec<i64>>,
    chosen: Vec<Interval>,
    failed: HashSet<Vec<u64>>,
    memo_capacity: usize,
    deadline: Option<Instant>,
    nodes: u64,
}

impl Search {
    fn new(
        poset: &CharacteristicPoset,
        d: usize,
        memo_bytes: usize,
        deadline: Option<Instant>,
    ) -> Self {
        let order: Vec<VarSet> = (0..=d).flat_map(|r| poset.members_of_rank(r)).collect();
        let tops = poset.members_of_rank(d);
        let mut remaining = vec![0i64; d + 1];
        for s in &order {
            remaining[s.len()] += 1;
        }
        let words = (1usize << poset.ambient()).div_ceil(64);
        let state_bytes = words * 8 + 64;
        Search {
            d,
            order,
            tops,
            covered: vec![0; words],
            remaining,
            binom: binomials(d),
            chosen: Vec::new(),
            failed: HashSet::new(),
            memo_capacity: memo_bytes / state_bytes,
            deadline,
            nodes: 0,
        }
    }

    fn is_covered(&self, s: VarSet) -> bool {
        let b = s.bits() as usize;
        self.covered[b / 64] & (1 << (b % 64)) != 0
    }

    fn set_covered(&mut self, s: VarSet, on: bool) {
        let b = s.bits() as usize;
        if on {
            self.covered[b / 64] |= 1 << (b % 64);
        } else {
            self.covered[b / 64] &= !(1 << (b % 64));
        }
    }

    /// Both endpoints are members, and `P` is closed downward (quotient
    /// side) or upward (ideal side), so `[σ, G] ⊆ P` needs no further check.
    fn interval_free(&self, bottom: VarSet, top: VarSet) -> bool {
        top.difference(bottom)
            .subsets()
            .all(|s| !self.is_covered(s.union(bottom)))
    }

    fn cover(&mut self, iv: Interval, on: bool) {
        let delta = if on { -1 } else { 1 };
        for tau in iv.elements() {
            self.set_covered(tau, on);
            self.remaining[tau.len()] += delta;
        }
    }

    /// The number of intervals with bottom at each rank is forced by the
    /// uncovered rank counts; a negative solution rules out every completion.
    fn counts_feasible(&self) -> bool {
        let d = self.d;
        let mut beta = vec![0i64; d + 1];
        for r in 0..=d {
            let used: i64 = (0..r).map(|j| beta[j] * self.binom[d - j][r - j]).sum();
            beta[r] = self.remaining[r] - used;
            if beta[r] < 0 {
                return false;
            }
        }
        true
    }

    fn first_uncovered(&self, mut pos: usize) -> usize {
        while pos < self.order.len() && self.is_covered(self.order[pos]) {
            pos += 1;
        }
        pos
    }

    fn candidates(&self, sigma: VarSet) -> Vec<Interval> {
        self.tops
            .iter()
            .filter(|g| sigma.is_subset(**g))
            .filter(|g| self.interval_free(sigma, **g))
            .map(|&g| Interval::new(sigma, g).expect("σ ⊆ G"))
            .collect()
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    return Err(Error::BudgetExhausted);
                }
            }
        }
        Ok(())
    }

    fn run(&mut self) -> Result<Option<Vec<Interval>>> {
        Ok(self.extend(0)?.then(|| self.chosen.clone()))
    }

    fn extend(&mut self, pos: usize) -> Result<bool> {
        self.tick()?;
        let pos = self.first_uncovered(pos);
        let Some(&sigma) = self.order.get(pos) else {
            return Ok(true);
        };
        if !self.counts_feasible() {
            return Ok(false);
        }
        if self.failed.contains(&self.covered) {
            return Ok(false);
        }
        for iv in self.candidates(sigma) {
            self.cover(iv, true);
            self.chosen.push(iv);
            if self.extend(pos + 1)? {
                return Ok(true);
            }
            self.chosen.pop();
            self.cover(iv, false);
        }
        if self.failed.len() < self.memo_capacity {
            self.failed.insert(self.covered.clone());
        }
        Ok(false)
    }

    /// Same search, with the branches for the first member fanned out.
    fn run_parallel(&mut self) -> Result<Option<Vec<Interval>>> {
        let pos = self.first_uncovered(0);
        let Some(&sigma) = self.order.get(pos) else {
            return Ok(Some(Vec::new()));
        };
        if !self.counts_feasible() {
            return Ok(None);
        }
        let branches = self.candidates(sigma);
        let base = self.clone();
        let found = branches.into_par_iter().find_map_any(|iv| {
            let mut branch = base.clone();
            branch.cover(iv, true);
            branch.chosen.push(iv);
            match branch.extend(pos + 1) {
                Ok(true) => Some(Ok(branch.chosen)),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            }
        });
        found.transpose()
    }
}

fn binomials(d: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; d + 1]; d + 1];
    for a in 0..=d {
        c[a][0] = 1;
        for b in 1..=a {
            c[a][b] = c[a - 1][b - 1] + if b < a { c[a - 1][b] } else { 0 };
        }
    }
    c
}
