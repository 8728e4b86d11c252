//! Interval partitions of a characteristic poset.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::CharacteristicPoset;
use crate::varset::VarSet;

/// The interval `[bottom, top] = {τ : bottom ⊆ τ ⊆ top}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Interval {
    bottom: VarSet,
    top: VarSet,
}

impl Interval {
    pub fn new(bottom: VarSet, top: VarSet) -> Option<Self> {
        bottom.is_subset(top).then_some(Interval { bottom, top })
    }

    pub fn singleton(sigma: VarSet) -> Self {
        Interval {
            bottom: sigma,
            top: sigma,
        }
    }

    pub fn bottom(&self) -> VarSet {
        self.bottom
    }

    pub fn top(&self) -> VarSet {
        self.top
    }

    pub fn contains(&self, tau: VarSet) -> bool {
        self.bottom.is_subset(tau) && tau.is_subset(self.top)
    }

    pub fn len(&self) -> usize {
        1 << (self.top.len() - self.bottom.len())
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> impl Iterator<Item = VarSet> + '_ {
        self.top
            .difference(self.bottom)
            .subsets()
            .map(|s| s.union(self.bottom))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.bottom, self.top)
    }
}

/// A claimed partition of `poset` into intervals. Use [`validate`] before
/// trusting one that did not come from the solver.
///
/// [`validate`]: IntervalPartition::validate
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalPartition {
    poset: CharacteristicPoset,
    intervals: Vec<Interval>,
}

impl IntervalPartition {
    pub fn new(poset: CharacteristicPoset, intervals: Vec<Interval>) -> Self {
        IntervalPartition { poset, intervals }
    }

    pub fn poset(&self) -> &CharacteristicPoset {
        &self.poset
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    /// `min |top|` over the intervals; `None` for the empty partition.
    pub fn sdepth(&self) -> Option<usize> {
        self.intervals.iter().map(|iv| iv.top.len()).min()
    }

    /// Checks disjointness, coverage and containment in the poset by
    /// enumerating every interval element and every subset of `[n]`.
    pub fn validate(&self) -> bool {
        let n = self.poset.ambient();
        let full = VarSet::full(n);
        let mut seen = vec![false; 1usize << n];
        for iv in &self.intervals {
            if !iv.bottom.is_subset(iv.top) || !iv.top.is_subset(full) {
                return false;
            }
            for tau in iv.elements() {
                let slot = &mut seen[tau.bits() as usize];
                if *slot || !self.poset.contains(tau) {
                    return false;
                }
                *slot = true;
            }
        }
        full.subsets()
            .all(|s| seen[s.bits() as usize] == self.poset.contains(s))
    }

    /// Reads the `F -> G` line format back against `poset`.
    pub fn parse(text: &str, poset: CharacteristicPoset) -> Result<Self> {
        let n = poset.ambient();
        let mut intervals = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: lineno + 1,
                message,
            };
            let (lhs, rhs) = line
                .split_once("->")
                .ok_or_else(|| err("expected `F -> G`".into()))?;
            let bottom = parse_braced(lhs, n).map_err(err)?;
            let top = parse_braced(rhs, n).map_err(err)?;
            let iv = Interval::new(bottom, top)
                .ok_or_else(|| err(format!("{bottom} is not contained in {top}")))?;
            intervals.push(iv);
        }
        Ok(IntervalPartition { poset, intervals })
    }
}

fn parse_braced(s: &str, n: usize) -> std::result::Result<VarSet, String> {
    let inner = s
        .trim()
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| format!("expected a braced index list, found `{}`", s.trim()))?;
    let mut set = VarSet::EMPTY;
    for tok in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let var: usize = tok.parse().map_err(|_| format!("invalid index `{tok}`"))?;
        if var == 0 || var > n {
            return Err(format!("variable {var} outside 1..={n}"));
        }
        set = set.with(var);
    }
    Ok(set)
}

impl fmt::Display for IntervalPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for iv in &self.intervals {
            writeln!(f, "{iv}")?;
        }
        Ok(())
    }
}
