//! `depth(S/I)` through multigraded Betti numbers.
//!
//! Hochster's formula gives `β_{i,σ}(S/I) = dim H̃_{|σ|-i-1}(Δ_σ)` for the
//! Stanley–Reisner complex `Δ` of `I` and its induced subcomplex `Δ_σ`. The
//! projective dimension is the largest `i` with a nonzero `β_{i,σ}`, and
//! `depth = n - pd`.
//!
//! Two shortcuts keep this cheap. `Δ_σ` is a cone (hence acyclic) unless
//! `σ` is a union of generators of `I`, so only those `σ` are evaluated.
//! Variables that are themselves generators are not vertices of `Δ`, so
//! homology is cached by `σ ∩ vertices`.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::{Prime, SimplicialComplex};
use crate::ideal::SquarefreeIdeal;
use crate::varset::VarSet;

pub const DEFAULT_DEPTH_CAP: usize = 14;
pub const PRIMARY_PRIME: u64 = 32003;
pub const SECONDARY_PRIME: u64 = 101;

#[derive(Clone, Debug)]
pub struct DepthConfig {
    pub cap: usize,
    /// Homology is computed over `F_p` for each listed prime. The first one
    /// is reported; the rest only serve as a cross-check.
    pub primes: Vec<Prime>,
}

impl Default for DepthConfig {
    fn default() -> Self {
        DepthConfig {
            cap: DEFAULT_DEPTH_CAP,
            primes: vec![
                Prime::new(PRIMARY_PRIME).expect("prime"),
                Prime::new(SECONDARY_PRIME).expect("prime"),
            ],
        }
    }
}

/// One nonzero graded Betti number `β_{i,σ}(S/I)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BettiEntry {
    pub i: usize,
    pub sigma: VarSet,
    pub value: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiResult {
    pub ambient: usize,
    pub pd: usize,
    pub depth: usize,
    /// Nonzero `β_{i,σ}` over the first prime, ordered by `(i, σ)`.
    pub betti: Vec<BettiEntry>,
    /// `(p, depth over F_p)` for every configured prime.
    pub depth_by_prime: Vec<(u64, usize)>,
    /// Some induced subcomplex had different homology ranks over two of the
    /// configured primes, which means integral torsion.
    pub torsion_detected: bool,
}

pub fn depth_quotient(ideal: &SquarefreeIdeal) -> Result<BettiResult> {
    depth_quotient_with(ideal, &DepthConfig::default())
}

pub fn pd_quotient(ideal: &SquarefreeIdeal) -> Result<usize> {
    Ok(depth_quotient(ideal)?.pd)
}

pub fn depth_quotient_with(ideal: &SquarefreeIdeal, config: &DepthConfig) -> Result<BettiResult> {
    let n = ideal.ambient();
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if n > config.cap {
        return Err(Error::AmbientTooLarge {
            ambient: n,
            cap: config.cap,
        });
    }
    assert!(!config.primes.is_empty(), "at least one prime is required");

    let complex = SimplicialComplex::stanley_reisner(ideal)?;
    let vertices = complex.vertices();
    let mut cache: HashMap<VarSet, Vec<Vec<usize>>> = HashMap::new();
    let mut betti = Vec::new();
    let mut pd_by_prime = vec![0usize; config.primes.len()];
    let mut torsion_detected = false;

    for sigma in crate::varset::canonical_subsets(n) {
        let spanned = ideal
            .generators()
            .iter()
            .filter(|g| g.is_subset(sigma))
            .fold(VarSet::EMPTY, |acc, &g| acc.union(g));
        if spanned != sigma {
            continue;
        }
        let key = sigma.intersection(vertices);
        let ranks = cache.entry(key).or_insert_with(|| {
            let induced = complex.induced(key);
            config
                .primes
                .iter()
                .map(|&p| induced.reduced_homology_ranks(p))
                .collect()
        });
        if ranks.windows(2).any(|w| w[0] != w[1]) {
            torsion_detected = true;
        }
        for (which, per_prime) in ranks.iter().enumerate() {
            // entry k is H̃ in dimension k - 1, contributing to i = |σ| - k
            for (k, &rank) in per_prime.iter().enumerate() {
                if rank == 0 {
                    continue;
                }
                let i = sigma.len() - k;
                pd_by_prime[which] = pd_by_prime[which].max(i);
                if which == 0 {
                    betti.push(BettiEntry {
                        i,
                        sigma,
                        value: rank,
                    });
                }
            }
        }
    }
    betti.sort_by_key(|a| (a.i, a.sigma));
    let pd = pd_by_prime[0];
    Ok(BettiResult {
        ambient: n,
        pd,
        depth: n - pd,
        betti,
        depth_by_prime: config
            .primes
            .iter()
            .zip(&pd_by_prime)
            .map(|(p, &pd)| (p.get(), n - pd))
            .collect(),
        torsion_detected,
    })
}
