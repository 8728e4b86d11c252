//! Closed forms for the path ideal `I_{n,m}` of the directed line graph.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{PathIdealParams, SquarefreeIdeal};
use crate::varset::VarSet;

/// `k = ⌊(n+1)/(m+1)⌋` and `a = n + 1 - k(m+1)`, so `n + 1 = k(m+1) + a`
/// with `0 ≤ a ≤ m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PhiParams {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub a: usize,
}

impl PhiParams {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        check(n, m)?;
        let k = (n + 1) / (m + 1);
        Ok(PhiParams {
            n,
            m,
            k,
            a: n + 1 - k * (m + 1),
        })
    }
}

fn check(n: usize, m: usize) -> Result<()> {
    if m < 1 || m > n {
        return Err(Error::InvalidPathParams { n, m });
    }
    Ok(())
}

/// `n + 1 - ⌊(n+1)/(m+1)⌋ - ⌈(n+1)/(m+1)⌉`.
pub fn phi_floor_ceiling(n: usize, m: usize) -> Result<usize> {
    check(n, m)?;
    let q = n + 1;
    Ok(q - q / (m + 1) - q.div_ceil(m + 1))
}

/// `n + 1 - 2k` when `a = 0`, otherwise `n - 2k`.
pub fn phi_case_form(n: usize, m: usize) -> Result<usize> {
    let PhiParams { k, a, .. } = PhiParams::new(n, m)?;
    Ok(if a == 0 { n + 1 - 2 * k } else { n - 2 * k })
}

/// The common value of depth and Stanley depth of `S/I_{n,m}`.
pub fn phi(n: usize, m: usize) -> Result<usize> {
    let value = phi_floor_ceiling(n, m)?;
    assert_eq!(
        value,
        phi_case_form(n, m)?,
        "floor/ceiling and case forms disagree at ({n},{m})"
    );
    Ok(value)
}

/// Projective dimension of `S/I_{n,m}`, selected by `d = n mod (m+1)`:
/// `2(n-d)/(m+1)` for `d < m` and `(2n-m+1)/(m+1)` for `d = m`.
pub fn pd_closed_form(n: usize, m: usize) -> Result<usize> {
    check(n, m)?;
    let d = n % (m + 1);
    let pd = if d < m {
        2 * (n - d) / (m + 1)
    } else {
        (2 * n + 1 - m) / (m + 1)
    };
    assert_eq!(
        n - pd,
        phi(n, m)?,
        "pd closed form inconsistent at ({n},{m})"
    );
    Ok(pd)
}

/// Which construction produced a witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessCase {
    /// `n ≡ m - 1` or `n ≡ m (mod m+1)`.
    BlockTail,
    /// Every other residue.
    ShiftedBlocks,
}

/// A set `τ` with `x_τ ∉ I_{n,m}` and `x_i x_τ ∈ I_{n,m}` for all `i ∉ τ`.
/// `τ` is then a member of `P_{S/I}` whose rank-`(|τ|+1)` upper set is
/// empty, which caps `sdepth(S/I_{n,m})` at `|τ|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub tau: VarSet,
    pub case: WitnessCase,
    /// `⌊n/(m+1)⌋`.
    pub k: usize,
}

/// Builds the witness `τ` for `I_{n,m}`.
///
/// With `k = ⌊n/(m+1)⌋`, let `σ` be the union of the blocks
/// `{1 + j(m+1), ..., m-1 + j(m+1)}` for `j < k`.
///
/// * If `n = (k+1)(m+1) - 1` or `n = (k+1)(m+1) - 2`, then
///   `τ = σ ∪ {k(m+1)+1, ..., k(m+1)+m-1}`.
/// * Otherwise `n = k(m+1) + r` with `r ≤ m - 2`; then `τ` is `{1, ..., r}`
///   followed by `σ` shifted right by `r + 1`. Each excluded index sits next
///   to a block of `m - 1`, and `|τ| = n - 2k`.
///
/// The returned set is checked against the generators of `I_{n,m}`.
pub fn witness_tau(n: usize, m: usize) -> Result<Witness> {
    check(n, m)?;
    let k = n / (m + 1);
    let block = |start: usize| VarSet::range(start, start + m - 2);
    let base = k * (m + 1);
    let (tau, case) = if n + 1 == base + m + 1 || n + 2 == base + m + 1 {
        let sigma = (0..k).fold(VarSet::EMPTY, |acc, j| acc.union(block(1 + j * (m + 1))));
        (sigma.union(block(base + 1)), WitnessCase::BlockTail)
    } else {
        let r = n - base;
        let shifted = (0..k).fold(VarSet::EMPTY, |acc, j| {
            acc.union(block(r + 2 + j * (m + 1)))
        });
        (
            VarSet::range(1, r).union(shifted),
            WitnessCase::ShiftedBlocks,
        )
    };
    let witness = Witness { tau, case, k };
    let ideal = SquarefreeIdeal::path(PathIdealParams::new(n, m)?);
    let failure = |reason: String| Error::WitnessRejected { n, m, reason };
    if ideal.contains_monomial(tau) {
        return Err(failure(format!("x_τ lies in the ideal for τ = {tau}")));
    }
    if let Some(i) = VarSet::full(n)
        .difference(tau)
        .iter()
        .find(|&i| !ideal.contains_monomial(tau.with(i)))
    {
        return Err(failure(format!("x_{i}·x_τ avoids the ideal for τ = {tau}")));
    }
    let target = phi(n, m)?;
    if tau.len() != target {
        return Err(failure(format!("|τ| = {} but φ = {target}", tau.len())));
    }
    Ok(witness)
}
