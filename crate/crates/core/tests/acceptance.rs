//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::SeedableRng;

use stanley_core::pathideal::{phi_case_form, phi_floor_ceiling};
use stanley_core::{
    depth_quotient, pd_closed_form, phi, recursion_trace, sdepth_poset, verify_lemma_inequalities,
    verify_theorem, witness_tau, CharacteristicPoset, InvariantCache, PathIdealParams, Side,
    SquarefreeIdeal, TheoremReport, VarSet, VerifyConfig,
};

type Outcome = Result<String, String>;

const GRID_N: usize = 12;

fn grid() -> impl Iterator<Item = (usize, usize)> {
    (1..=GRID_N).flat_map(|n| (1..=n).map(move |m| (n, m)))
}

fn trace_range() -> impl Iterator<Item = (usize, usize)> {
    [3usize, 4]
        .into_iter()
        .flat_map(|m| (2 * m..=GRID_N).map(move |n| (n, m)))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn theorem_grid(reports: &[TheoremReport], elapsed: Duration) -> Outcome {
    let mut slowest = 0f64;
    for r in reports {
        ensure(r.skipped.is_empty(), || {
            format!("({},{}) skipped: {:?}", r.n, r.m, r.skipped)
        })?;
        ensure(r.sdepth == Some(r.phi) && r.depth == Some(r.phi), || {
            format!(
                "({},{}): sdepth {:?} depth {:?} phi {}",
                r.n, r.m, r.sdepth, r.depth, r.phi
            )
        })?;
        let t = &r.stage_runtimes_ms;
        let total = t.phi + t.witness + t.depth + t.sdepth;
        ensure(total < 60_000.0, || {
            format!("({},{}) took {total:.0} ms", r.n, r.m)
        })?;
        slowest = slowest.max(total);
    }
    ensure(elapsed < Duration::from_secs(600), || {
        format!("grid took {elapsed:?}")
    })?;
    Ok(format!(
        "{} instances in {:.2?}, slowest {:.1} ms",
        reports.len(),
        elapsed,
        slowest
    ))
}

fn example_six_three() -> Outcome {
    let trace = recursion_trace(6, 3).map_err(|e| e.to_string())?;
    let step = &trace.steps[0];
    let sets = |lists: &[&[usize]]| -> Vec<VarSet> {
        lists.iter().map(|l| l.iter().copied().collect()).collect()
    };
    ensure(
        step.colon.generators() == sets(&[&[1, 2], &[2, 4], &[4, 5]]),
        || format!("L_1 = {:?}", step.colon),
    )?;
    ensure(step.sum.generators() == sets(&[&[3], &[4, 5, 6]]), || {
        format!("U_1 = {:?}", step.sum)
    })?;
    ensure(
        step.colon
            .order_preserving_match(PathIdealParams::new(4, 2).unwrap()),
        || "L_1 is not a copy of I_{4,2}".into(),
    )?;
    let ideal = trace.ideal();
    let sdepth = sdepth_poset(&CharacteristicPoset::quotient(&ideal).unwrap())
        .map_err(|e| e.to_string())?
        .value;
    let depth = depth_quotient(&ideal).map_err(|e| e.to_string())?.depth;
    ensure(sdepth == 4 && depth == 4, || {
        format!("sdepth {sdepth}, depth {depth}")
    })?;
    Ok("L_1, U_1, sdepth = depth = 4, L_1 ≅ I_{4,2}".into())
}

fn maximal_ideal() -> Outcome {
    for n in 1..=8 {
        let ideal = SquarefreeIdeal::path_ideal(n, 1).unwrap();
        let poset = CharacteristicPoset::ideal_side(&ideal).unwrap();
        let r = sdepth_poset(&poset).map_err(|e| e.to_string())?;
        ensure(r.witness.validate(), || format!("n={n}: invalid witness"))?;
        ensure(r.value == n.div_ceil(2), || {
            format!("n={n}: sdepth {}", r.value)
        })?;
    }
    Ok("n = 1..=8".into())
}

fn witness_bound() -> Outcome {
    for (n, m) in grid() {
        let w = witness_tau(n, m).map_err(|e| e.to_string())?;
        let ideal = SquarefreeIdeal::path_ideal(n, m).unwrap();
        let poset = CharacteristicPoset::quotient(&ideal).unwrap();
        let above = poset
            .upper_set_at(w.tau, w.tau.len() + 1)
            .map_err(|e| e.to_string())?;
        ensure(above.is_empty(), || {
            format!("({n},{m}): {} sets above τ", above.len())
        })?;
        ensure(w.tau.len() == phi(n, m).unwrap(), || {
            format!("({n},{m}): |τ| = {}", w.tau.len())
        })?;
    }
    Ok(format!("{} instances", grid().count()))
}

fn closed_forms() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for n in 1..=200 {
        for m in 1..=n {
            let a = phi_floor_ceiling(n, m).unwrap();
            let b = phi_case_form(n, m).unwrap();
            ensure(a == b, || format!("({n},{m}): {a} vs {b}"))?;
            let pd = pd_closed_form(n, m).unwrap();
            ensure(n - pd == a, || format!("({n},{m}): n - pd = {}", n - pd))?;
            count += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("{count} pairs in {elapsed:.2?}"))
}

fn trace_assertions(config: &VerifyConfig) -> Outcome {
    let mut cache = InvariantCache::new(&config.solver, &config.depth);
    let mut checks = 0;
    for (n, m) in trace_range() {
        let mut trace = recursion_trace(n, m).map_err(|e| e.to_string())?;
        trace.evaluate(&mut cache).map_err(|e| e.to_string())?;
        if let Some(bad) = trace.failures().next() {
            return Err(format!("({n},{m}) {bad}"));
        }
        checks += trace.checks.len();
    }
    Ok(format!(
        "{} instances, {checks} checks",
        trace_range().count()
    ))
}

fn lemma_suite(config: &VerifyConfig) -> Outcome {
    let mut inequalities = 0;
    for (n, m) in trace_range() {
        let r = verify_lemma_inequalities(n, m, config).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("({n},{m}): {r:?}"))?;
        inequalities += r
            .sequences
            .iter()
            .map(|s| s.inequalities.len())
            .sum::<usize>()
            + r.colons.len();
    }
    Ok(format!("{inequalities} inequalities"))
}

fn oracle_equivalence() -> Outcome {
    let mut compared = 0;
    let mut check = |ideal: &SquarefreeIdeal| -> Result<(), String> {
        for side in [Side::Quotient, Side::Ideal] {
            let poset = CharacteristicPoset::new(ideal, side).unwrap();
            let Some(expected) = common::brute_sdepth(&common::brute_members(&poset)) else {
                continue;
            };
            let r = sdepth_poset(&poset).map_err(|e| e.to_string())?;
            ensure(r.value == expected && r.witness.validate(), || {
                format!("{ideal:?} {side:?}: solver {} oracle {expected}", r.value)
            })?;
            compared += 1;
        }
        Ok(())
    };
    for n in 1..=4 {
        for ideal in common::all_antichains(n) {
            check(&ideal)?;
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..200 {
        check(&common::random_ideal(&mut rng, 5, 6))?;
    }
    Ok(format!("{compared} posets"))
}

fn two_primes(reports: &[TheoremReport]) -> Outcome {
    for r in reports {
        ensure(r.depth_by_prime.len() == 2, || {
            format!("({},{}) missing primes", r.n, r.m)
        })?;
        ensure(
            r.depth_by_prime.iter().all(|&(_, d)| Some(d) == r.depth),
            || format!("({},{}): {:?}", r.n, r.m, r.depth_by_prime),
        )?;
    }
    Ok("32003 and 101 agree on every instance".into())
}

fn main() -> ExitCode {
    let config = VerifyConfig::default();
    let start = Instant::now();
    let reports: Result<Vec<TheoremReport>, String> = grid()
        .map(|(n, m)| verify_theorem(n, m, &config).map_err(|e| format!("({n},{m}): {e}")))
        .collect();
    let elapsed = start.elapsed();

    let results: Vec<(&str, Outcome)> = vec![
        (
            "sdepth = depth = phi on the grid",
            reports
                .as_ref()
                .map_err(Clone::clone)
                .and_then(|r| theorem_grid(r, elapsed)),
        ),
        ("worked example (6,3)", example_six_three()),
        ("maximal ideal sdepth", maximal_ideal()),
        ("witness upper bound", witness_bound()),
        ("closed forms up to 200", closed_forms()),
        ("recursion trace", trace_assertions(&config)),
        ("lemma inequalities", lemma_suite(&config)),
        ("brute-force oracle", oracle_equivalence()),
        (
            "two-prime depth agreement",
            reports
                .as_ref()
                .map_err(Clone::clone)
                .and_then(|r| two_primes(r)),
        ),
    ];

    let mut failed = 0;
    for (i, (name, outcome)) in results.iter().enumerate() {
        match outcome {
            Ok(detail) => println!("PASS {}. {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}. {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        results.len() - failed,
        results.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
