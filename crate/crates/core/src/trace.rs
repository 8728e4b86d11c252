//! The colon/sum recursion behind the lower bound for `S/I_{n,m}`.
//!
//! With `c_j = (m+1)j - 1`, set `L_0 = I_{n,m}`, `L_j = (L_{j-1} : x_{c_j})`
//! and `U_j = (L_{j-1}, x_{c_j})` for `1 ≤ j ≤ k`. Each step gives a short
//! exact sequence `0 → S/L_j → S/L_{j-1} → S/U_j → 0` (up to a shift). The
//! trace records every ideal and compares it with its predicted generators:
//!
//! * `L_j` keeps blocks `1..=j` and the windows `u_i`, `i > (m+1)j`, where
//!   block `b` is `{u_i \ c_b : (m+1)b - m ≤ i < (m+1)b}`;
//! * `U_{j+1} = V_j + (x_{c_{j+1}}) + W_j` over disjoint supports, with
//!   `V_j` the first `j` blocks and `W_j` the windows starting at or after
//!   `(m+1)(j+1)`;
//! * `L_k` is a path ideal of length `m - 1` on `t + m - k - 1` variables.
//!
//! When `m ≤ n < 2m` there is a single step, the colon by `x_m`.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::depth::{depth_quotient_with, DepthConfig};
use crate::error::{Error, Result};
use crate::ideal::{PathIdealParams, SquarefreeIdeal};
use crate::pathideal::{phi, PhiParams};
use crate::solver::{sdepth_quotient, SolverConfig};
use crate::varset::{VarIndex, VarSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// `m ≥ 3`, `n ≥ 2m`: `k` steps.
    Blocks,
    /// `m ≥ 2`, `m ≤ n ≤ 2m - 1`: one step.
    Single,
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceStep {
    pub j: usize,
    /// The variable `x_{c_j}` used at this step.
    pub var: usize,
    /// `L_j`.
    pub colon: SquarefreeIdeal,
    /// `U_j`.
    pub sum: SquarefreeIdeal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Claim {
    Generators {
        expected: Vec<VarSet>,
        computed: Vec<VarSet>,
    },
    /// A copy of `I_{n,m}` after dropping free variables, or the zero ideal
    /// when `n < m`.
    PathCopy {
        n: usize,
        m: usize,
        holds: bool,
    },
    /// Supports of the summands are pairwise disjoint and their sum is the
    /// computed ideal.
    Decomposition {
        disjoint: bool,
        equal: bool,
    },
    Equal {
        expected: usize,
        computed: usize,
    },
    AtLeast {
        bound: usize,
        computed: usize,
    },
}

impl Claim {
    pub fn holds(&self) -> bool {
        match self {
            Claim::Generators { expected, computed } => expected == computed,
            Claim::PathCopy { holds, .. } => *holds,
            Claim::Decomposition { disjoint, equal } => *disjoint && *equal,
            Claim::Equal { expected, computed } => expected == computed,
            Claim::AtLeast { bound, computed } => computed >= bound,
        }
    }
}

fn list(sets: &[VarSet]) -> String {
    let parts: Vec<String> = sets.iter().map(VarSet::to_string).collect();
    parts.join(" ")
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::Generators { expected, computed } => {
                write!(
                    f,
                    "expected [{}] computed [{}]",
                    list(expected),
                    list(computed)
                )
            }
            Claim::PathCopy { n, m, holds } => write!(f, "copy of I_{{{n},{m}}}: {holds}"),
            Claim::Decomposition { disjoint, equal } => {
                write!(f, "disjoint supports: {disjoint}, sum matches: {equal}")
            }
            Claim::Equal { expected, computed } => {
                write!(f, "expected {expected} computed {computed}")
            }
            Claim::AtLeast { bound, computed } => write!(f, "{computed} >= {bound}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub step: usize,
    pub subject: String,
    pub claim: Claim,
    pub passed: bool,
}

impl Check {
    fn new(step: usize, subject: impl Into<String>, claim: Claim) -> Self {
        Check {
            step,
            subject: subject.into(),
            passed: claim.holds(),
            claim,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "ok" } else { "FAIL" };
        write!(
            f,
            "[{verdict}] step {} {}: {}",
            self.step, self.subject, self.claim
        )
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RecursionTrace {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub a: usize,
    /// Index of the last window cut by `x_{c_k}`; zero outside [`Regime::Blocks`].
    pub t: usize,
    pub regime: Regime,
    pub steps: Vec<TraceStep>,
    /// Structural checks; [`RecursionTrace::evaluate`] adds numeric ones.
    pub checks: Vec<Check>,
}

impl RecursionTrace {
    pub fn ideal(&self) -> SquarefreeIdeal {
        SquarefreeIdeal::path_ideal(self.n, self.m).expect("validated parameters")
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Runs the recursion for `I_{n,m}` and checks every predicted generating set.
pub fn recursion_trace(n: usize, m: usize) -> Result<RecursionTrace> {
    let PhiParams { k, a, .. } = PhiParams::new(n, m)?;
    let ideal = SquarefreeIdeal::path_ideal(n, m)?;
    if m >= 3 && n >= 2 * m {
        blocks_trace(ideal, n, m, k, a)
    } else if m >= 2 && n < 2 * m {
        single_trace(ideal, n, m, k, a)
    } else {
        Err(Error::NoRecursion { n, m })
    }
}

fn step(previous: &SquarefreeIdeal, j: usize, var: usize) -> Result<TraceStep> {
    let n = previous.ambient();
    Ok(TraceStep {
        j,
        var,
        colon: previous.colon(VarSet::singleton(var))?,
        sum: previous.add_variable(VarIndex::new(var, n)?)?,
    })
}

fn copy_claim(ideal: &SquarefreeIdeal, n: usize, m: usize) -> Claim {
    let holds = if n < m || n == 0 {
        ideal.is_zero()
    } else {
        PathIdealParams::new(n, m).is_ok_and(|p| ideal.order_preserving_match(p))
    };
    Claim::PathCopy { n, m, holds }
}

fn single_trace(
    ideal: SquarefreeIdeal,
    n: usize,
    m: usize,
    k: usize,
    a: usize,
) -> Result<RecursionTrace> {
    let first = step(&ideal, 1, m)?;
    let checks = vec![
        Check::new(1, "L_1", copy_claim(&first.colon, n - 1, m - 1)),
        Check::new(
            1,
            "G(U_1)",
            Claim::Generators {
                expected: vec![VarSet::singleton(m)],
                computed: first.sum.generators().to_vec(),
            },
        ),
    ];
    Ok(RecursionTrace {
        n,
        m,
        k,
        a,
        t: 0,
        regime: Regime::Single,
        steps: vec![first],
        checks,
    })
}

fn blocks_trace(
    ideal: SquarefreeIdeal,
    n: usize,
    m: usize,
    k: usize,
    a: usize,
) -> Result<RecursionTrace> {
    let c = |b: usize| (m + 1) * b - 1;
    let window = |i: usize| VarSet::range(i, i + m - 1);
    let windows = |from: usize| (from..=n + 1 - m).map(window);
    let block = |b: usize| ((m + 1) * b - m..(m + 1) * b).map(move |i| window(i).without(c(b)));
    let blocks = |upto: usize| (1..=upto).flat_map(block);
    let canonical = |sets: Vec<VarSet>| -> Vec<VarSet> {
        SquarefreeIdeal::minimalize(n, sets)
            .expect("sets inside the ring")
            .generators()
            .to_vec()
    };
    let t = if a == m { n - m } else { n - m + 1 };

    let mut steps: Vec<TraceStep> = Vec::with_capacity(k);
    let mut previous = ideal;
    for j in 1..=k {
        let next = step(&previous, j, c(j))?;
        previous = next.colon.clone();
        steps.push(next);
    }

    let mut checks = Vec::new();
    for s in &steps {
        let j = s.j;
        let expected = if j < k {
            blocks(j).chain(windows((m + 1) * j + 1)).collect()
        } else {
            blocks(k - 1)
                .chain(((m + 1) * k - m..=t).map(|i| window(i).without(c(k))))
                .collect()
        };
        checks.push(Check::new(
            j,
            format!("G(L_{j})"),
            Claim::Generators {
                expected: canonical(expected),
                computed: s.colon.generators().to_vec(),
            },
        ));
    }
    let last = &steps[k - 1].colon;
    checks.push(Check::new(
        k,
        format!("|G(L_{k})|"),
        Claim::Equal {
            expected: t + 1 - k,
            computed: last.generators().len(),
        },
    ));
    checks.push(Check::new(
        k,
        format!("L_{k}"),
        copy_claim(last, t + m - k - 1, m - 1),
    ));

    let u1 = &steps[0].sum;
    checks.push(Check::new(
        1,
        "G(U_1)",
        Claim::Generators {
            expected: canonical(
                std::iter::once(VarSet::singleton(m))
                    .chain(windows(m + 1))
                    .collect(),
            ),
            computed: u1.generators().to_vec(),
        },
    ));
    let w0 = part_after(u1, m);
    checks.push(Check::new(1, "W_0", copy_claim(&w0, n - m, m)));

    // steps[j] holds U_{j+1}
    for (j, next) in steps.iter().enumerate().skip(1) {
        let sum = &next.sum;
        let cut = c(j + 1);
        checks.push(Check::new(
            j + 1,
            format!("G(U_{})", j + 1),
            Claim::Generators {
                expected: canonical(
                    blocks(j)
                        .chain(std::iter::once(VarSet::singleton(cut)))
                        .chain(windows((m + 1) * (j + 1)))
                        .collect(),
                ),
                computed: sum.generators().to_vec(),
            },
        ));
        let (v, w) = split_at(sum, cut);
        checks.push(Check::new(
            j + 1,
            format!("V_{j}"),
            copy_claim(&v, m * (j + 1) - 2, m - 1),
        ));
        let tail = (n + 1).saturating_sub((m + 1) * (j + 1));
        checks.push(Check::new(j + 1, format!("W_{j}"), copy_claim(&w, tail, m)));
        let (sv, _) = v.support_and_free_vars();
        let (sw, _) = w.support_and_free_vars();
        let rebuilt = v.add_variable(VarIndex::new(cut, n)?)?.sum(&w)?;
        checks.push(Check::new(
            j + 1,
            format!("U_{} = V_{j} + (x_{cut}) + W_{j}", j + 1),
            Claim::Decomposition {
                disjoint: sv.is_disjoint(sw) && !sv.contains(cut) && !sw.contains(cut),
                equal: &rebuilt == sum,
            },
        ));
    }

    Ok(RecursionTrace {
        n,
        m,
        k,
        a,
        t,
        regime: Regime::Blocks,
        steps,
        checks,
    })
}

/// Generators lying entirely above `cut`.
fn part_after(ideal: &SquarefreeIdeal, cut: usize) -> SquarefreeIdeal {
    let gens = ideal
        .generators()
        .iter()
        .copied()
        .filter(|&g| g.min().is_some_and(|lo| lo > cut));
    SquarefreeIdeal::minimalize(ideal.ambient(), gens).expect("subset of generators")
}

/// Generators entirely below and entirely above `cut`.
fn split_at(ideal: &SquarefreeIdeal, cut: usize) -> (SquarefreeIdeal, SquarefreeIdeal) {
    let below = ideal
        .generators()
        .iter()
        .copied()
        .filter(|&g| g.max().is_some_and(|hi| hi < cut));
    let below = SquarefreeIdeal::minimalize(ideal.ambient(), below).expect("subset of generators");
    (below, part_after(ideal, cut))
}

/// `depth(S/J)` and `sdepth(S/J)` for an ideal `J` of the trace.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub depth: usize,
    pub sdepth: usize,
}

/// Memoizes [`Invariants`] across the many ideals a trace touches.
pub struct InvariantCache<'a> {
    solver: &'a SolverConfig,
    depth: &'a DepthConfig,
    seen: HashMap<SquarefreeIdeal, Invariants>,
}

impl<'a> InvariantCache<'a> {
    pub fn new(solver: &'a SolverConfig, depth: &'a DepthConfig) -> Self {
        InvariantCache {
            solver,
            depth,
            seen: HashMap::new(),
        }
    }

    pub fn get(&mut self, ideal: &SquarefreeIdeal) -> Result<Invariants> {
        if let Some(&found) = self.seen.get(ideal) {
            return Ok(found);
        }
        let found = Invariants {
            depth: depth_quotient_with(ideal, self.depth)?.depth,
            sdepth: sdepth_quotient(ideal, self.solver)?,
        };
        self.seen.insert(ideal.clone(), found);
        Ok(found)
    }
}

/// `n + 2 - ⌊(n+2)/(m+1)⌋ - ⌈(n+2)/(m+1)⌉`.
fn shifted_phi(n: usize, m: usize) -> usize {
    let q = n + 2;
    q - q / (m + 1) - q.div_ceil(m + 1)
}

impl RecursionTrace {
    /// Computes depth and Stanley depth along the trace and checks the
    /// predicted values. The checks are appended to `self.checks`.
    pub fn evaluate(&mut self, cache: &mut InvariantCache<'_>) -> Result<()> {
        let (n, m, k) = (self.n, self.m, self.k);
        let target = phi(n, m)?;
        let mut checks = Vec::new();
        let l0 = cache.get(&self.ideal())?;
        checks.push(Check::new(
            0,
            "depth(S/L_0)",
            Claim::Equal {
                expected: target,
                computed: l0.depth,
            },
        ));
        checks.push(Check::new(
            0,
            "sdepth(S/L_0)",
            Claim::Equal {
                expected: target,
                computed: l0.sdepth,
            },
        ));
        for s in &self.steps {
            let j = s.j;
            let l = cache.get(&s.colon)?;
            checks.push(Check::new(
                j,
                format!("depth(S/L_{j})"),
                Claim::Equal {
                    expected: target,
                    computed: l.depth,
                },
            ));
            checks.push(Check::new(
                j,
                format!("sdepth(S/L_{j})"),
                Claim::AtLeast {
                    bound: target,
                    computed: l.sdepth,
                },
            ));
        }
        match self.regime {
            Regime::Single => {
                let u = cache.get(&self.steps[0].sum)?;
                checks.push(Check::new(
                    1,
                    "depth(S/U_1)",
                    Claim::Equal {
                        expected: n - 1,
                        computed: u.depth,
                    },
                ));
                checks.push(Check::new(
                    1,
                    "sdepth(S/U_1)",
                    Claim::Equal {
                        expected: n - 1,
                        computed: u.sdepth,
                    },
                ));
            }
            Regime::Blocks => {
                let last = cache.get(&self.steps[k - 1].colon)?;
                checks.push(Check::new(
                    k,
                    format!("sdepth(S/L_{k})"),
                    Claim::Equal {
                        expected: target,
                        computed: last.sdepth,
                    },
                ));
                let u1 = cache.get(&self.steps[0].sum)?;
                let expected = m - 1 + phi(n - m, m)?;
                checks.push(Check::new(
                    1,
                    "depth(S/U_1)",
                    Claim::Equal {
                        expected,
                        computed: u1.depth,
                    },
                ));
                checks.push(Check::new(
                    1,
                    "sdepth(S/U_1)",
                    Claim::Equal {
                        expected,
                        computed: u1.sdepth,
                    },
                ));
                for j in 1..k {
                    let sum = &self.steps[j].sum;
                    let (v, w) = split_at(sum, (m + 1) * (j + 1) - 1);
                    let u = cache.get(sum)?;
                    let vd = cache.get(&v)?.depth;
                    let wd = cache.get(&w)?.depth;
                    let label = j + 1;
                    checks.push(Check::new(
                        label,
                        format!("depth(S/V_{j})"),
                        Claim::Equal {
                            expected: n - 2 * j,
                            computed: vd,
                        },
                    ));
                    checks.push(Check::new(
                        label,
                        format!("depth(S/W_{j})"),
                        Claim::Equal {
                            expected: shifted_phi(n, m) + 2 * (j + 1) - 1,
                            computed: wd,
                        },
                    ));
                    checks.push(Check::new(
                        label,
                        format!("depth(S/U_{label})"),
                        Claim::Equal {
                            expected: shifted_phi(n, m),
                            computed: u.depth,
                        },
                    ));
                    checks.push(Check::new(
                        label,
                        format!("depth sum for U_{label}"),
                        Claim::Equal {
                            expected: vd + wd - n - 1,
                            computed: u.depth,
                        },
                    ));
                    checks.push(Check::new(
                        label,
                        format!("sdepth(S/U_{label})"),
                        Claim::Equal {
                            expected: u.depth,
                            computed: u.sdepth,
                        },
                    ));
                    checks.push(Check::new(
                        label,
                        format!("sdepth(S/U_{label}) vs φ"),
                        Claim::AtLeast {
                            bound: target,
                            computed: u.sdepth,
                        },
                    ));
                }
            }
        }
        self.checks.extend(checks);
        Ok(())
    }
}
