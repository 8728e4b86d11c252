//! Dense subsets of `[n] = {1, ..., n}`.
//!
//! Variable `x_i` is stored at bit `i - 1`, so containment, union and
//! difference are single word operations. The width bounds the ambient
//! ring at [`MAX_AMBIENT`] variables.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Hard upper bound on the number of variables a [`VarSet`] can address.
pub const MAX_AMBIENT: usize = 64;

/// A 1-based variable index `i`, standing for `x_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarIndex(usize);

impl VarIndex {
    pub fn new(value: usize, ambient: usize) -> Result<Self> {
        if value == 0 || value > ambient {
            return Err(Error::VarOutOfRange {
                var: value,
                ambient,
            });
        }
        Ok(VarIndex(value))
    }

    pub fn get(self) -> usize {
        self.0
    }
}

/// A subset of `[n]`, equivalently the support of a squarefree monomial.
///
/// `Ord` is the canonical order used everywhere output has to be
/// deterministic: ascending cardinality, then lexicographic on the sorted
/// index lists.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VarSet(u64);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VarSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_AMBIENT, "ambient {n} exceeds {MAX_AMBIENT}");
        if n == MAX_AMBIENT {
            VarSet(u64::MAX)
        } else {
            VarSet((1u64 << n) - 1)
        }
    }

    /// `{lo, lo + 1, ..., hi}`; empty when `lo > hi`.
    pub fn range(lo: usize, hi: usize) -> Self {
        (lo..=hi).fold(VarSet::EMPTY, |s, i| s.with(i))
    }

    pub fn singleton(var: usize) -> Self {
        VarSet::EMPTY.with(var)
    }

    /// Builds a set from 1-based indices, rejecting anything outside `[ambient]`.
    pub fn from_indices<I>(indices: I, ambient: usize) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = VarSet::EMPTY;
        for i in indices {
            VarIndex::new(i, ambient.min(MAX_AMBIENT))?;
            set = set.with(i);
        }
        Ok(set)
    }

    pub fn contains(self, var: usize) -> bool {
        (1..=MAX_AMBIENT).contains(&var) && self.0 & bit(var) != 0
    }

    #[must_use]
    pub fn with(self, var: usize) -> Self {
        VarSet(self.0 | bit(var))
    }

    #[must_use]
    pub fn without(self, var: usize) -> Self {
        VarSet(self.0 & !bit(var))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_superset(self, other: VarSet) -> bool {
        other.is_subset(self)
    }

    #[must_use]
    pub fn union(self, other: VarSet) -> Self {
        VarSet(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: VarSet) -> Self {
        VarSet(self.0 & other.0)
    }

    #[must_use]
    pub fn difference(self, other: VarSet) -> Self {
        VarSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: VarSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Largest index present, if any.
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Indices in increasing order.
    pub fn iter(self) -> Indices {
        Indices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Every subset of `self`, including `∅` and `self`, in no particular order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(self.0),
        }
    }

    /// Relabels the elements of `self` onto `1..=support.len()` preserving
    /// order, where `support` must contain `self`.
    pub fn compress(self, support: VarSet) -> VarSet {
        debug_assert!(self.is_subset(support));
        let mut out = VarSet::EMPTY;
        for (pos, var) in support.iter().enumerate() {
            if self.contains(var) {
                out = out.with(pos + 1);
            }
        }
        out
    }

    /// Inverse of [`VarSet::compress`].
    pub fn expand(self, support: VarSet) -> VarSet {
        let mut out = VarSet::EMPTY;
        for (pos, var) in support.iter().enumerate() {
            if self.contains(pos + 1) {
                out = out.with(var);
            }
        }
        out
    }
}

fn bit(var: usize) -> u64 {
    assert!(
        (1..=MAX_AMBIENT).contains(&var),
        "variable index {var} outside 1..={MAX_AMBIENT}"
    );
    1u64 << (var - 1)
}

impl Ord for VarSet {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.len().cmp(&other.len()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // With equal cardinalities, the set holding the smallest element of
        // the symmetric difference has the smaller sorted index list.
        let lowest = diff & diff.wrapping_neg();
        if self.0 & lowest != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for VarSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, var) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{var}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for VarSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl FromIterator<usize> for VarSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        iter.into_iter().fold(VarSet::EMPTY, VarSet::with)
    }
}

#[derive(Clone, Debug)]
pub struct Indices(u64);

impl Iterator for Indices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(tz as usize + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Indices {}

#[derive(Clone, Debug)]
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VarSet;

    fn next(&mut self) -> Option<VarSet> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            Some((cur - 1) & self.mask)
        };
        Some(VarSet(cur))
    }
}

/// All subsets of `[n]` in canonical order (ascending cardinality, then lex).
pub fn canonical_subsets(n: usize) -> Vec<VarSet> {
    let mut all: Vec<VarSet> = VarSet::full(n).subsets().collect();
    all.sort();
    all
}

/// Rank-`d` subsets of `universe` in lexicographic order.
pub fn subsets_of_size(universe: VarSet, d: usize) -> Vec<VarSet> {
    let elems = universe.to_vec();
    let mut out = Vec::new();
    if d > elems.len() {
        return out;
    }
    let mut idx: Vec<usize> = (0..d).collect();
    loop {
        out.push(idx.iter().map(|&i| elems[i]).collect());
        // advance the combination in lexicographic order
        let mut pos = d;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if idx[pos] < elems.len() - d + pos {
                break;
            }
        }
        idx[pos] += 1;
        for j in pos + 1..d {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
