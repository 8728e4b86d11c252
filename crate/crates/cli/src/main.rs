use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use stanley_core::{
    depth_quotient_with, phi, recursion_trace, sdepth_poset_with, verify_theorem, witness_tau,
    CharacteristicPoset, Error, InvariantCache, Side, SquarefreeIdeal, TheoremReport, VerifyConfig,
};

#[derive(Parser, Debug)]
#[command(
    name = "stanley",
    version,
    about = "Stanley depth and depth of squarefree monomial quotients"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact Stanley depth of S/I.
    Sdepth {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        opts: Opts,
    },
    /// Depth of S/I from its graded Betti numbers.
    Depth {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        opts: Opts,
        /// Also print the nonzero positions (i, σ).
        #[arg(long)]
        betti: bool,
    },
    /// Closed-form value φ(n, m).
    Phi {
        #[command(flatten)]
        path: PathArgs,
        #[command(flatten)]
        opts: Opts,
    },
    /// A maximal non-member τ of size φ(n, m).
    Witness {
        #[command(flatten)]
        path: PathArgs,
        #[command(flatten)]
        opts: Opts,
    },
    /// The colon recursion with its predicted ideals and values.
    Trace {
        #[command(flatten)]
        path: PathArgs,
        #[command(flatten)]
        opts: Opts,
    },
    /// Compare depth, Stanley depth and φ for one path ideal.
    Verify {
        #[command(flatten)]
        path: PathArgs,
        #[command(flatten)]
        opts: Opts,
    },
    /// Verify every path ideal with 1 ≤ m ≤ n ≤ nmax.
    Table {
        #[arg(long, value_name = "N")]
        nmax: usize,
        #[command(flatten)]
        opts: Opts,
    },
    /// Rank counts of the characteristic poset.
    PosetStats {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        opts: Opts,
        #[arg(long, value_enum, default_value_t = SideArg::Quotient)]
        side: SideArg,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    #[arg(long, num_args = 2, value_names = ["N", "M"])]
    path_ideal: Option<Vec<usize>>,
    /// Ideal file: `n=<ambient>` followed by one generator per line.
    #[arg(long, value_name = "FILE")]
    ideal: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct PathArgs {
    #[arg(long, num_args = 2, value_names = ["N", "M"], required = true)]
    path_ideal: Vec<usize>,
}

#[derive(Args, Debug)]
struct Opts {
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Ambient limit for the poset search and the Betti computation.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=64))]
    cap: Option<u64>,
    /// Time budget per instance for the poset search.
    #[arg(long, value_name = "MS", value_parser = clap::value_parser!(u64).range(1..))]
    budget_ms: Option<u64>,
    #[arg(long)]
    parallel: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SideArg {
    Ideal,
    Quotient,
}

/// Outcome of a run, mapped to the process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Status {
    Ok = 0,
    Skipped = 3,
    Mismatch = 2,
}

enum Failure {
    Usage(String),
    Skip(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::AmbientTooLarge { .. } | Error::BudgetExhausted => Failure::Skip(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl Opts {
    fn verify_config(&self) -> VerifyConfig {
        let mut config = VerifyConfig::default();
        config.solver.budget = self.budget_ms.map(Duration::from_millis);
        config.solver.parallel = self.parallel;
        if let Some(cap) = self.cap {
            config.sdepth_cap = cap as usize;
            config.depth.cap = cap as usize;
        }
        config
    }
}

impl Source {
    fn load(&self) -> Result<SquarefreeIdeal, Failure> {
        match (&self.path_ideal, &self.ideal) {
            (Some(nm), None) => Ok(SquarefreeIdeal::path_ideal(nm[0], nm[1])?),
            (None, Some(file)) => {
                let text = std::fs::read_to_string(file)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
                text.parse::<SquarefreeIdeal>()
                    .map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))
            }
            _ => Err(Failure::Usage(
                "exactly one of --path-ideal and --ideal is required".into(),
            )),
        }
    }
}

impl PathArgs {
    fn nm(&self) -> (usize, usize) {
        (self.path_ideal[0], self.path_ideal[1])
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    print!("{out}");
    match result {
        Ok(status) => ExitCode::from(status as u8),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Skip(msg)) => {
            eprintln!("skipped: {msg}");
            ExitCode::from(Status::Skipped as u8)
        }
    }
}

fn emit_json(out: &mut String, value: &serde_json::Value) {
    writeln!(out, "{value}").expect("write to string");
}

fn csv_string(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(header).expect("in-memory csv");
    for row in rows {
        writer.write_record(row).expect("in-memory csv");
    }
    String::from_utf8(writer.into_inner().expect("in-memory csv")).expect("utf-8")
}

fn run(command: Command, out: &mut String) -> Result<Status, Failure> {
    match command {
        Command::Sdepth { source, opts } => {
            let ideal = source.load()?;
            let config = opts.verify_config();
            let poset = CharacteristicPoset::with_cap(&ideal, Side::Quotient, config.sdepth_cap)?;
            let r = sdepth_poset_with(&poset, &config.solver)?;
            match opts.format {
                Format::Plain => writeln!(out, "{}", r.value).unwrap(),
                Format::Json => emit_json(
                    out,
                    &json!({
                        "sdepth": r.value,
                        "upper_bound": r.upper_bound,
                        "partition": r.witness.intervals().iter().map(|iv| iv.to_string()).collect::<Vec<_>>(),
                    }),
                ),
                Format::Csv => out.push_str(&csv_string(
                    &["sdepth", "upper_bound"],
                    &[vec![r.value.to_string(), r.upper_bound.to_string()]],
                )),
            }
            Ok(Status::Ok)
        }
        Command::Depth {
            source,
            opts,
            betti,
        } => {
            let ideal = source.load()?;
            let r = depth_quotient_with(&ideal, &opts.verify_config().depth)?;
            match opts.format {
                Format::Plain => {
                    writeln!(out, "{}", r.depth).unwrap();
                    if betti {
                        for b in &r.betti {
                            writeln!(out, "{} {} {}", b.i, b.sigma, b.value).unwrap();
                        }
                    }
                }
                Format::Json => {
                    let mut value = json!({
                        "depth": r.depth,
                        "pd": r.pd,
                        "depth_by_prime": r.depth_by_prime,
                        "torsion_detected": r.torsion_detected,
                    });
                    if betti {
                        value["betti"] = serde_json::to_value(&r.betti).expect("serializable");
                    }
                    emit_json(out, &value);
                }
                Format::Csv => {
                    if betti {
                        let rows: Vec<Vec<String>> = r
                            .betti
                            .iter()
                            .map(|b| {
                                vec![b.i.to_string(), b.sigma.to_string(), b.value.to_string()]
                            })
                            .collect();
                        out.push_str(&csv_string(&["i", "sigma", "value"], &rows));
                    } else {
                        out.push_str(&csv_string(
                            &["depth", "pd"],
                            &[vec![r.depth.to_string(), r.pd.to_string()]],
                        ));
                    }
                }
            }
            Ok(Status::Ok)
        }
        Command::Phi { path, opts } => {
            let (n, m) = path.nm();
            let value = phi(n, m)?;
            match opts.format {
                Format::Plain => writeln!(out, "{value}").unwrap(),
                Format::Json => emit_json(out, &json!({"n": n, "m": m, "phi": value})),
                Format::Csv => out.push_str(&csv_string(
                    &["n", "m", "phi"],
                    &[vec![n.to_string(), m.to_string(), value.to_string()]],
                )),
            }
            Ok(Status::Ok)
        }
        Command::Witness { path, opts } => {
            let (n, m) = path.nm();
            let w = match witness_tau(n, m) {
                Ok(w) => w,
                Err(e @ Error::WitnessRejected { .. }) => {
                    eprintln!("{e}");
                    return Ok(Status::Mismatch);
                }
                Err(e) => return Err(e.into()),
            };
            match opts.format {
                Format::Plain => writeln!(out, "{}", w.tau).unwrap(),
                Format::Json => emit_json(
                    out,
                    &json!({"n": n, "m": m, "tau": w.tau, "size": w.tau.len(), "case": w.case}),
                ),
                Format::Csv => out.push_str(&csv_string(
                    &["n", "m", "tau", "size"],
                    &[vec![
                        n.to_string(),
                        m.to_string(),
                        w.tau.to_string(),
                        w.tau.len().to_string(),
                    ]],
                )),
            }
            Ok(Status::Ok)
        }
        Command::Trace { path, opts } => {
            let (n, m) = path.nm();
            let config = opts.verify_config();
            let mut trace = recursion_trace(n, m)?;
            let mut cache = InvariantCache::new(&config.solver, &config.depth);
            trace.evaluate(&mut cache)?;
            match opts.format {
                Format::Plain => {
                    writeln!(out, "n={n} m={m} k={} a={} t={}", trace.k, trace.a, trace.t).unwrap();
                    for s in &trace.steps {
                        let gens = |i: &SquarefreeIdeal| {
                            i.generators()
                                .iter()
                                .map(|g| g.to_string())
                                .collect::<Vec<_>>()
                                .join(" ")
                        };
                        writeln!(out, "step {} x_{}", s.j, s.var).unwrap();
                        writeln!(out, "  L_{}: {}", s.j, gens(&s.colon)).unwrap();
                        writeln!(out, "  U_{}: {}", s.j, gens(&s.sum)).unwrap();
                    }
                    for c in &trace.checks {
                        writeln!(out, "{c}").unwrap();
                    }
                }
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&trace).expect("serializable")
                )
                .unwrap(),
                Format::Csv => {
                    let rows: Vec<Vec<String>> = trace
                        .checks
                        .iter()
                        .map(|c| {
                            vec![
                                c.step.to_string(),
                                c.subject.clone(),
                                c.passed.to_string(),
                                c.claim.to_string(),
                            ]
                        })
                        .collect();
                    out.push_str(&csv_string(&["step", "subject", "passed", "detail"], &rows));
                }
            }
            Ok(if trace.passed() {
                Status::Ok
            } else {
                Status::Mismatch
            })
        }
        Command::Verify { path, opts } => {
            let (n, m) = path.nm();
            let report = verify_theorem(n, m, &opts.verify_config())?;
            write_reports(out, opts.format, std::slice::from_ref(&report));
            Ok(status_of(std::slice::from_ref(&report)))
        }
        Command::Table { nmax, opts } => {
            if nmax == 0 {
                return Err(Failure::Usage("--nmax must be positive".into()));
            }
            let config = opts.verify_config();
            let grid: Vec<(usize, usize)> = (1..=nmax)
                .flat_map(|n| (1..=n).map(move |m| (n, m)))
                .collect();
            let reports: Result<Vec<TheoremReport>, Error> = if opts.parallel {
                let mut per = config.clone();
                per.solver.parallel = false;
                grid.par_iter()
                    .map(|&(n, m)| verify_theorem(n, m, &per))
                    .collect()
            } else {
                grid.iter()
                    .map(|&(n, m)| verify_theorem(n, m, &config))
                    .collect()
            };
            let reports = reports?;
            write_reports(out, opts.format, &reports);
            Ok(status_of(&reports))
        }
        Command::PosetStats { source, opts, side } => {
            let ideal = source.load()?;
            let side = match side {
                SideArg::Ideal => Side::Ideal,
                SideArg::Quotient => Side::Quotient,
            };
            let config = opts.verify_config();
            let poset = CharacteristicPoset::with_cap(&ideal, side, config.sdepth_cap)?;
            let counts = poset.rank_counts();
            let total: usize = counts.iter().sum();
            match opts.format {
                Format::Plain => {
                    for (d, c) in counts.iter().enumerate() {
                        writeln!(out, "{d} {c}").unwrap();
                    }
                    writeln!(out, "total {total}").unwrap();
                }
                Format::Json => emit_json(out, &json!({"rank_counts": counts, "total": total})),
                Format::Csv => {
                    let rows: Vec<Vec<String>> = counts
                        .iter()
                        .enumerate()
                        .map(|(d, c)| vec![d.to_string(), c.to_string()])
                        .collect();
                    out.push_str(&csv_string(&["rank", "count"], &rows));
                }
            }
            Ok(Status::Ok)
        }
    }
}

fn status_of(reports: &[TheoremReport]) -> Status {
    reports
        .iter()
        .map(|r| {
            if !r.ok {
                Status::Mismatch
            } else if !r.skipped.is_empty() {
                Status::Skipped
            } else {
                Status::Ok
            }
        })
        .fold(Status::Ok, |acc, s| match (acc, s) {
            (Status::Mismatch, _) | (_, Status::Mismatch) => Status::Mismatch,
            (Status::Skipped, _) | (_, Status::Skipped) => Status::Skipped,
            _ => Status::Ok,
        })
}

fn show(v: Option<usize>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn write_reports(out: &mut String, format: Format, reports: &[TheoremReport]) {
    match format {
        Format::Json => {
            for r in reports {
                writeln!(out, "{}", serde_json::to_string(r).expect("serializable")).unwrap();
            }
        }
        Format::Plain => {
            writeln!(
                out,
                "{:>3} {:>3} {:>4} {:>6} {:>6} {:>4}  ok",
                "n", "m", "phi", "depth", "sdepth", "tau"
            )
            .unwrap();
            for r in reports {
                write!(
                    out,
                    "{:>3} {:>3} {:>4} {:>6} {:>6} {:>4}  {}",
                    r.n,
                    r.m,
                    r.phi,
                    show(r.depth),
                    show(r.sdepth),
                    show(r.tau_size),
                    if r.ok { "yes" } else { "NO" }
                )
                .unwrap();
                if !r.skipped.is_empty() {
                    write!(out, "  skipped: {}", r.skipped.join("; ")).unwrap();
                }
                writeln!(out).unwrap();
            }
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    let t = &r.stage_runtimes_ms;
                    vec![
                        r.n.to_string(),
                        r.m.to_string(),
                        r.phi.to_string(),
                        r.depth.map_or(String::new(), |d| d.to_string()),
                        r.sdepth.map_or(String::new(), |d| d.to_string()),
                        r.tau_size.map_or(String::new(), |d| d.to_string()),
                        r.ok.to_string(),
                        format!("{:.3}", t.depth + t.sdepth + t.witness + t.phi),
                        r.skipped.join("; "),
                    ]
                })
                .collect();
            out.push_str(&csv_string(
                &[
                    "n",
                    "m",
                    "phi",
                    "depth",
                    "sdepth",
                    "tau_size",
                    "ok",
                    "runtime_ms",
                    "skipped",
                ],
                &rows,
            ));
        }
    }
}
