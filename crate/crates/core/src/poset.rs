//! The characteristic posets `P_I` and `P_{S/I}` of a squarefree ideal.
//!
//! Membership is answered from the generators; nothing is materialized until
//! a caller asks for an enumeration. Enumerations use the canonical order of
//! [`VarSet`] (ascending cardinality, lexicographic within a rank).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::SquarefreeIdeal;
use crate::varset::{subsets_of_size, VarSet};

/// Default bound on the ambient dimension for anything that enumerates `2^n`.
pub const DEFAULT_AMBIENT_CAP: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// `P_I`: subsets `σ` with `x_σ ∈ I`. Upward closed.
    Ideal,
    /// `P_{S/I}`: subsets `σ` with `x_σ ∉ I`. Downward closed.
    Quotient,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacteristicPoset {
    ideal: SquarefreeIdeal,
    side: Side,
}

impl CharacteristicPoset {
    pub fn new(ideal: &SquarefreeIdeal, side: Side) -> Result<Self> {
        Self::with_cap(ideal, side, DEFAULT_AMBIENT_CAP)
    }

    pub fn with_cap(ideal: &SquarefreeIdeal, side: Side, cap: usize) -> Result<Self> {
        if ideal.ambient() > cap {
            return Err(Error::AmbientTooLarge {
                ambient: ideal.ambient(),
                cap,
            });
        }
        Ok(CharacteristicPoset {
            ideal: ideal.clone(),
            side,
        })
    }

    /// `P_{S/I}`.
    pub fn quotient(ideal: &SquarefreeIdeal) -> Result<Self> {
        Self::new(ideal, Side::Quotient)
    }

    pub fn ideal_side(ideal: &SquarefreeIdeal) -> Result<Self> {
        Self::new(ideal, Side::Ideal)
    }

    pub fn ideal(&self) -> &SquarefreeIdeal {
        &self.ideal
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn ambient(&self) -> usize {
        self.ideal.ambient()
    }

    pub fn contains(&self, sigma: VarSet) -> bool {
        if !sigma.is_subset(VarSet::full(self.ambient())) {
            return false;
        }
        let in_ideal = self.ideal.contains_monomial(sigma);
        match self.side {
            Side::Ideal => in_ideal,
            Side::Quotient => !in_ideal,
        }
    }

    /// All members in canonical order.
    pub fn members(&self) -> Vec<VarSet> {
        (0..=self.ambient())
            .flat_map(|d| self.members_of_rank(d))
            .collect()
    }

    /// `P_d`: members of cardinality `d`, lexicographically.
    pub fn members_of_rank(&self, d: usize) -> Vec<VarSet> {
        subsets_of_size(VarSet::full(self.ambient()), d)
            .into_iter()
            .filter(|&s| self.contains(s))
            .collect()
    }

    /// `P_{d,σ}`: members of cardinality `d` containing `σ`.
    pub fn upper_set_at(&self, sigma: VarSet, d: usize) -> Result<Vec<VarSet>> {
        if !self.contains(sigma) {
            return Err(Error::NotInPoset(sigma.to_string()));
        }
        if d < sigma.len() {
            return Ok(Vec::new());
        }
        let rest = VarSet::full(self.ambient()).difference(sigma);
        Ok(subsets_of_size(rest, d - sigma.len())
            .into_iter()
            .map(|s| s.union(sigma))
            .filter(|&t| self.contains(t))
            .collect())
    }

    /// Largest `d` with `P_{d,σ} ≠ ∅`, for a member `σ`.
    pub fn max_rank_above(&self, sigma: VarSet) -> Result<usize> {
        if !self.contains(sigma) {
            return Err(Error::NotInPoset(sigma.to_string()));
        }
        Ok(match self.side {
            Side::Ideal => self.ambient(),
            Side::Quotient => self
                .maximal_members()
                .into_iter()
                .filter(|f| sigma.is_subset(*f))
                .map(VarSet::len)
                .max()
                .unwrap_or(sigma.len()),
        })
    }

    /// Inclusion-maximal members, canonically ordered.
    pub fn maximal_members(&self) -> Vec<VarSet> {
        let full = VarSet::full(self.ambient());
        self.members()
            .into_iter()
            .filter(|&s| full.difference(s).iter().all(|i| !self.contains(s.with(i))))
            .collect()
    }

    /// Number of members of each cardinality `0..=n`.
    pub fn rank_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.ambient() + 1];
        for s in VarSet::full(self.ambient()).subsets() {
            if self.contains(s) {
                counts[s.len()] += 1;
            }
        }
        counts
    }

    pub fn len(&self) -> usize {
        self.rank_counts().iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Verified by scanning every member and every one-element deletion.
    pub fn is_downward_closed(&self) -> bool {
        VarSet::full(self.ambient())
            .subsets()
            .filter(|&s| self.contains(s))
            .all(|s| s.iter().all(|i| self.contains(s.without(i))))
    }

    pub fn is_upward_closed(&self) -> bool {
        let full = VarSet::full(self.ambient());
        full.subsets()
            .filter(|&s| self.contains(s))
            .all(|s| full.difference(s).iter().all(|i| self.contains(s.with(i))))
    }
}
