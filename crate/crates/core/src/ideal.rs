//! Squarefree monomial ideals, stored as the antichain of supports of their
//! minimal generators.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::varset::{VarIndex, VarSet, MAX_AMBIENT};

/// Parameters `(n, m)` of the path ideal `I_{n,m}` of the directed line graph
/// on `n` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PathIdealParams {
    n: usize,
    m: usize,
}

impl PathIdealParams {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if m < 1 || m > n || n > MAX_AMBIENT {
            return Err(Error::InvalidPathParams { n, m });
        }
        Ok(PathIdealParams { n, m })
    }

    pub fn n(self) -> usize {
        self.n
    }

    pub fn m(self) -> usize {
        self.m
    }
}

/// A squarefree monomial ideal of `K[x_1, ..., x_n]`.
///
/// Generators are kept minimal (an antichain under inclusion), free of
/// duplicates and sorted canonically. The unit ideal is the one whose only
/// generator is `∅`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SquarefreeIdeal {
    ambient: usize,
    generators: Vec<VarSet>,
}

impl SquarefreeIdeal {
    /// The zero ideal of an `ambient`-variable ring.
    pub fn zero(ambient: usize) -> Result<Self> {
        Self::minimalize(ambient, [])
    }

    /// The unit ideal `(1)`.
    pub fn unit(ambient: usize) -> Result<Self> {
        Self::minimalize(ambient, [VarSet::EMPTY])
    }

    /// `I_{n,m} = (x_1⋯x_m, x_2⋯x_{m+1}, ..., x_{n-m+1}⋯x_n)`.
    pub fn path(params: PathIdealParams) -> Self {
        let PathIdealParams { n, m } = params;
        let generators = (1..=n - m + 1)
            .map(|i| VarSet::range(i, i + m - 1))
            .collect();
        // windows of equal length never contain one another
        Self::from_sorted_antichain(n, generators)
    }

    /// Convenience for `SquarefreeIdeal::path(PathIdealParams::new(n, m)?)`.
    pub fn path_ideal(n: usize, m: usize) -> Result<Self> {
        Ok(Self::path(PathIdealParams::new(n, m)?))
    }

    /// Keeps the inclusion-minimal supports of `raw`, deduplicated.
    pub fn minimalize<I>(ambient: usize, raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = VarSet>,
    {
        if ambient > MAX_AMBIENT {
            return Err(Error::AmbientTooLarge {
                ambient,
                cap: MAX_AMBIENT,
            });
        }
        let full = VarSet::full(ambient);
        let mut sets: Vec<VarSet> = Vec::new();
        for g in raw {
            if let Some(var) = g.difference(full).min() {
                return Err(Error::VarOutOfRange { var, ambient });
            }
            sets.push(g);
        }
        // In canonical order a set can only be contained in later sets.
        sets.sort();
        sets.dedup();
        let mut kept: Vec<VarSet> = Vec::with_capacity(sets.len());
        for g in sets {
            if !kept.iter().any(|&h| h.is_subset(g)) {
                kept.push(g);
            }
        }
        Ok(Self::from_sorted_antichain(ambient, kept))
    }

    fn from_sorted_antichain(ambient: usize, generators: Vec<VarSet>) -> Self {
        debug_assert!(generators.windows(2).all(|w| w[0] < w[1]));
        SquarefreeIdeal {
            ambient,
            generators,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Minimal generators `G(I)` in canonical order.
    pub fn generators(&self) -> &[VarSet] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.first() == Some(&VarSet::EMPTY)
    }

    /// Whether `x_σ ∈ I`, i.e. `σ` contains some generator.
    pub fn contains_monomial(&self, sigma: VarSet) -> bool {
        self.generators.iter().any(|g| g.is_subset(sigma))
    }

    /// The squarefree colon `(I : x_u)`, generated by `g \ u` for `g ∈ G(I)`.
    pub fn colon(&self, u: VarSet) -> Result<Self> {
        self.check_support(u)?;
        Self::minimalize(
            self.ambient,
            self.generators.iter().map(|g| g.difference(u)),
        )
    }

    /// `(I, x_v)`.
    pub fn add_variable(&self, v: VarIndex) -> Result<Self> {
        if v.get() > self.ambient {
            return Err(Error::VarOutOfRange {
                var: v.get(),
                ambient: self.ambient,
            });
        }
        Self::minimalize(
            self.ambient,
            self.generators
                .iter()
                .copied()
                .chain(std::iter::once(VarSet::singleton(v.get()))),
        )
    }

    /// The ideal generated by `G(I) ∪ G(J)`, both in the same ring.
    pub fn sum(&self, other: &SquarefreeIdeal) -> Result<Self> {
        Self::minimalize(
            self.ambient.max(other.ambient),
            self.generators.iter().chain(&other.generators).copied(),
        )
    }

    /// Union of generator supports, and the variables not occurring in any
    /// generator.
    pub fn support_and_free_vars(&self) -> (VarSet, VarSet) {
        let support = self
            .generators
            .iter()
            .fold(VarSet::EMPTY, |acc, &g| acc.union(g));
        (support, VarSet::full(self.ambient).difference(support))
    }

    /// Whether `I` is a copy of `I_{params}` once free variables are dropped
    /// and the support is relabelled onto `1..` in increasing order.
    pub fn order_preserving_match(&self, params: PathIdealParams) -> bool {
        let (support, _) = self.support_and_free_vars();
        if support.len() != params.n() || self.generators.len() != params.n() - params.m() + 1 {
            return false;
        }
        let mut relabelled: Vec<VarSet> = self
            .generators
            .iter()
            .map(|g| g.compress(support))
            .collect();
        relabelled.sort();
        relabelled == Self::path(params).generators
    }

    /// The same generators in a ring with `ambient` variables, which must
    /// still contain every generator.
    pub fn with_ambient(&self, ambient: usize) -> Result<Self> {
        Self::minimalize(ambient, self.generators.iter().copied())
    }

    /// Renames `x_i` to `x_{map(i)}` inside a ring of `ambient` variables.
    pub fn relabel(&self, ambient: usize, map: impl Fn(usize) -> usize) -> Result<Self> {
        let raw: Vec<VarSet> = self
            .generators
            .iter()
            .map(|g| g.iter().map(&map).collect())
            .collect();
        Self::minimalize(ambient, raw)
    }

    fn check_support(&self, u: VarSet) -> Result<()> {
        match u.difference(VarSet::full(self.ambient)).min() {
            Some(var) => Err(Error::VarOutOfRange {
                var,
                ambient: self.ambient,
            }),
            None => Ok(()),
        }
    }

    /// Text form: `n=<ambient>` then one generator per line. Blank lines are
    /// skipped on input, so the unit ideal does not survive a round trip.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for SquarefreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.ambient)?;
        for g in &self.generators {
            let line: Vec<String> = g.iter().map(|i| i.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for SquarefreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} (", self.ambient)?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for SquarefreeIdeal {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut ambient: Option<usize> = None;
        let mut raw = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line_no = lineno + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            let Some(n) = ambient else {
                let value = trimmed
                    .strip_prefix("n=")
                    .ok_or_else(|| err(format!("expected `n=<ambient>`, found `{trimmed}`")))?;
                let n: usize = value
                    .trim()
                    .parse()
                    .map_err(|_| err(format!("invalid ambient `{value}`")))?;
                if n > MAX_AMBIENT {
                    return Err(err(format!("ambient {n} exceeds {MAX_AMBIENT}")));
                }
                ambient = Some(n);
                continue;
            };
            let mut set = VarSet::EMPTY;
            for tok in trimmed.split_whitespace() {
                let var: usize = tok
                    .parse()
                    .map_err(|_| err(format!("invalid variable index `{tok}`")))?;
                if var == 0 || var > n {
                    return Err(err(format!("variable {var} outside 1..={n}")));
                }
                set = set.with(var);
            }
            raw.push(set);
        }
        let ambient = ambient.ok_or(Error::Parse {
            line: text.lines().count().max(1),
            message: "missing `n=<ambient>` header".into(),
        })?;
        Self::minimalize(ambient, raw)
    }
}
