//! Exact Stanley depth and depth for quotients of squarefree monomial ideals.

pub mod depth;
pub mod error;
pub mod homology;
pub mod ideal;
pub mod partition;
pub mod pathideal;
pub mod poset;
pub mod solver;
pub mod trace;
pub mod varset;
pub mod verify;

pub use depth::{depth_quotient, depth_quotient_with, pd_quotient, BettiResult, DepthConfig};
pub use error::{Error, Result};
pub use homology::{Prime, SimplicialComplex};
pub use ideal::{PathIdealParams, SquarefreeIdeal};
pub use partition::{Interval, IntervalPartition};
pub use pathideal::{pd_closed_form, phi, witness_tau, PhiParams, Witness, WitnessCase};
pub use poset::{CharacteristicPoset, Side};
pub use solver::{
    exists_partition, quick_upper_bound, sdepth_poset, sdepth_poset_with, sdepth_quotient,
    SdepthResult, SolverConfig,
};
pub use trace::{
    recursion_trace, Check, Claim, InvariantCache, Invariants, RecursionTrace, Regime,
};
pub use varset::{VarIndex, VarSet};
pub use verify::{
    verify_lemma_inequalities, verify_theorem, LemmaReport, TheoremReport, VerifyConfig,
};
