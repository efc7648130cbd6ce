//! Command-line front end: term evaluation, the identity catalog, single
//! identity checks, grid verification and closed-form benchmarks.
//!
//! Exit codes: 0 on success with zero violations, 1 when any check came
//! back violated, 2 on usage, config or parse errors.

use clap::{Args, Parser, Subcommand};
use horadam::identities::{self, CheckOutcome, Identity, Indices};
use horadam::sequence::{HoradamParams, Preset, SequenceTriple, DEFAULT_INDEX_GUARD};
use horadam::verify::{self, GridSpec};
use horadam::{parse_scalar, GaussianRational};
use std::fs;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "horadam",
    about = "Exact arithmetic and identity verification for second-order recurrences w(a,b;p,q)",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct SequenceArgs {
    /// Preset: fibonacci, lucas, pell, jacobsthal, g, u, v, custom
    #[arg(long)]
    preset: Option<String>,
    /// Seed w0 (scalar, e.g. 3/2 or 1+2i)
    #[arg(long)]
    a: Option<String>,
    /// Seed w1
    #[arg(long)]
    b: Option<String>,
    /// Recurrence coefficient p (nonzero)
    #[arg(long)]
    p: Option<String>,
    /// Recurrence coefficient q (nonzero)
    #[arg(long)]
    q: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one term of w(a,b;p,q)
    Term {
        #[command(flatten)]
        sequence: SequenceArgs,
        /// Index to evaluate (signed)
        #[arg(long)]
        n: i64,
        /// Bound on |index| (guards bignum growth)
        #[arg(long, default_value_t = DEFAULT_INDEX_GUARD)]
        max_index: i64,
    },
    /// List the identity catalog
    Identities,
    /// Check one identity at one instance
    Check {
        /// Identity id (see `identities`)
        #[arg(long)]
        id: String,
        #[command(flatten)]
        sequence: SequenceArgs,
        #[arg(long)]
        m: Option<i64>,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long)]
        r: Option<i64>,
        #[arg(long)]
        k: Option<i64>,
        #[arg(long, default_value_t = DEFAULT_INDEX_GUARD)]
        max_index: i64,
    },
    /// Run a verification grid and report tallies
    Verify {
        /// Grid config file; the stock grid when omitted
        #[arg(long)]
        grid: Option<String>,
        /// Write the report as JSON to this path
        #[arg(long)]
        out: Option<String>,
        /// Extra identity ids to quarantine (comma separated)
        #[arg(long, value_delimiter = ',')]
        quarantine: Vec<String>,
        /// Worker threads
        #[arg(long)]
        jobs: Option<usize>,
        /// Cap on stored violation witnesses per identity
        #[arg(long)]
        witness_limit: Option<usize>,
    },
    /// Time the direct sum against the closed form
    Bench {
        #[arg(long)]
        id: String,
        #[command(flatten)]
        sequence: SequenceArgs,
        /// k values to time (comma separated)
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<i64>,
        /// Fixed m for identities that use it
        #[arg(long, default_value_t = 12)]
        m: i64,
        /// Fixed n for identities that use it
        #[arg(long, default_value_t = 3)]
        n: i64,
        /// Fixed r for identities that use it
        #[arg(long, default_value_t = 1)]
        r: i64,
        #[arg(long, default_value_t = DEFAULT_INDEX_GUARD)]
        max_index: i64,
    },
}

/// Usage/config errors exit with code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn parse_flag_scalar(flag: &str, value: &Option<String>) -> Result<GaussianRational, UsageError> {
    match value {
        Some(text) => Ok(parse_scalar(text).map_err(|e| UsageError(format!("--{}: {}", flag, e)))?),
        None => Err(UsageError(format!("missing required flag --{}", flag))),
    }
}

fn reject_scalar_flags(args: &SequenceArgs, allowed: &[&str]) -> Result<(), UsageError> {
    for (flag, value) in [("a", &args.a), ("b", &args.b), ("p", &args.p), ("q", &args.q)] {
        if value.is_some() && !allowed.contains(&flag) {
            return Err(UsageError(format!(
                "flag --{} is not accepted with this preset",
                flag
            )));
        }
    }
    Ok(())
}

/// Resolve --preset/--a/--b/--p/--q into parameters, rejecting stray flags.
fn resolve_params(args: &SequenceArgs) -> Result<HoradamParams, UsageError> {
    let preset_name = match &args.preset {
        None => {
            // bare scalars mean custom parameters
            let a = parse_flag_scalar("a", &args.a)?;
            let b = parse_flag_scalar("b", &args.b)?;
            let p = parse_flag_scalar("p", &args.p)?;
            let q = parse_flag_scalar("q", &args.q)?;
            return Ok(HoradamParams::new(a, b, p, q)?);
        }
        Some(name) => name.trim().to_lowercase(),
    };
    let preset = match preset_name.as_str() {
        "fibonacci" | "lucas" | "pell" | "jacobsthal" => {
            reject_scalar_flags(args, &[])?;
            Preset::parse_token(&preset_name)?
        }
        "g" => {
            reject_scalar_flags(args, &["a", "b"])?;
            Preset::G(
                parse_flag_scalar("a", &args.a)?,
                parse_flag_scalar("b", &args.b)?,
            )
        }
        "u" => {
            reject_scalar_flags(args, &["p", "q"])?;
            Preset::U(
                parse_flag_scalar("p", &args.p)?,
                parse_flag_scalar("q", &args.q)?,
            )
        }
        "v" => {
            reject_scalar_flags(args, &["p", "q"])?;
            Preset::V(
                parse_flag_scalar("p", &args.p)?,
                parse_flag_scalar("q", &args.q)?,
            )
        }
        "custom" => {
            return Ok(HoradamParams::new(
                parse_flag_scalar("a", &args.a)?,
                parse_flag_scalar("b", &args.b)?,
                parse_flag_scalar("p", &args.p)?,
                parse_flag_scalar("q", &args.q)?,
            )?)
        }
        other => {
            // parenthesized tokens such as g(3,7) are accepted too
            Preset::parse_token(other)?
        }
    };
    Ok(preset.params()?)
}

/// Validate provided index flags against what the identity consumes:
/// required flags must be present, unused flags are rejected.
fn resolve_indices(
    identity: &Identity,
    m: Option<i64>,
    n: Option<i64>,
    r: Option<i64>,
    k: Option<i64>,
) -> Result<Indices, UsageError> {
    let mut resolved = [0i64; 4];
    let flags = [("m", identity.uses.m, m), ("n", identity.uses.n, n), ("r", identity.uses.r, r), ("k", identity.uses.k, k)];
    for (slot, (name, used, value)) in flags.iter().enumerate() {
        match (used, value) {
            (true, Some(v)) => resolved[slot] = *v,
            (true, None) => {
                return Err(UsageError(format!(
                    "identity '{}' requires --{}",
                    identity.id, name
                )))
            }
            (false, Some(_)) => {
                return Err(UsageError(format!(
                    "identity '{}' does not take --{} (indices: {})",
                    identity.id,
                    name,
                    identity.uses.describe()
                )))
            }
            (false, None) => {}
        }
    }
    if identity.uses.k && resolved[3] < 0 {
        return Err(UsageError("--k must be non-negative".into()));
    }
    Ok(Indices::new(resolved[0], resolved[1], resolved[2], resolved[3]))
}

fn cmd_term(sequence: &SequenceArgs, n: i64, max_index: i64) -> Result<ExitCode, UsageError> {
    let params = resolve_params(sequence)?;
    let triple = SequenceTriple::with_guard(params, max_index);
    let value = triple.w.term(n)?;
    println!("{}", value);
    Ok(ExitCode::SUCCESS)
}

fn cmd_identities() -> ExitCode {
    for entry in identities::registry() {
        let quarantined = if entry.default_quarantined {
            " [quarantined]"
        } else {
            ""
        };
        println!(
            "{}  indices={}  params={}  preconditions={}  {}{}",
            entry.id,
            entry.uses.describe(),
            entry.constraint.describe(),
            entry.preconditions,
            entry.anchor,
            quarantined
        );
    }
    ExitCode::SUCCESS
}

#[allow(clippy::too_many_arguments)]
fn cmd_check(
    id: &str,
    sequence: &SequenceArgs,
    m: Option<i64>,
    n: Option<i64>,
    r: Option<i64>,
    k: Option<i64>,
    max_index: i64,
) -> Result<ExitCode, UsageError> {
    let identity =
        identities::find(id).ok_or_else(|| UsageError(format!("unknown identity '{}'", id)))?;
    let params = resolve_params(sequence)?;
    let indices = resolve_indices(identity, m, n, r, k)?;
    let triple = SequenceTriple::with_guard(params, max_index);
    match identity.check_terms(&triple, indices) {
        CheckOutcome::Pass(value) => {
            println!("PASS lhs=rhs={}", value);
            Ok(ExitCode::SUCCESS)
        }
        CheckOutcome::PreconditionUnmet(reason) => {
            println!("SKIP precondition {}", reason);
            Ok(ExitCode::SUCCESS)
        }
        CheckOutcome::Violated { lhs, rhs } => {
            println!("VIOLATION lhs={} rhs={}", lhs, rhs);
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_verify(
    grid: Option<&str>,
    out: Option<&str>,
    quarantine: &[String],
    jobs: Option<usize>,
    witness_limit: Option<usize>,
) -> Result<ExitCode, UsageError> {
    let mut spec: GridSpec = match grid {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| UsageError(format!("cannot read {}: {}", path, e)))?;
            verify::parse_grid_config(&text)?
        }
        None => verify::default_grid(),
    };
    spec.quarantine.extend(quarantine.iter().cloned());
    spec.jobs = jobs.or(spec.jobs);
    if let Some(cap) = witness_limit {
        spec.witness_cap = cap;
    }
    let report = verify::run_grid(&spec)?;
    print!("{}", report.render_table());
    if !report.identities.iter().all(|t| t.witnesses.is_empty()) {
        for tally in &report.identities {
            for w in &tally.witnesses {
                eprintln!(
                    "witness {} params={} m={} n={} r={} k={} lhs={} rhs={}",
                    w.identity, w.params, w.m, w.n, w.r, w.k, w.lhs, w.rhs
                );
            }
        }
    }
    if let Some(path) = out {
        fs::write(path, report.to_json())
            .map_err(|e| UsageError(format!("cannot write {}: {}", path, e)))?;
    }
    if report.total_violations > 0 {
        Ok(ExitCode::from(1))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_bench(
    id: &str,
    sequence: &SequenceArgs,
    k_values: &[i64],
    m: i64,
    n: i64,
    r: i64,
    max_index: i64,
) -> Result<ExitCode, UsageError> {
    let params = resolve_params(sequence)?;
    let base = Indices::new(m, n, r, 0);
    let report = verify::benchmark(id, &params, k_values, base, max_index)?;
    print!("{}", report.render_table());
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Term {
            sequence,
            n,
            max_index,
        } => cmd_term(sequence, *n, *max_index),
        Command::Identities => Ok(cmd_identities()),
        Command::Check {
            id,
            sequence,
            m,
            n,
            r,
            k,
            max_index,
        } => cmd_check(id, sequence, *m, *n, *r, *k, *max_index),
        Command::Verify {
            grid,
            out,
            quarantine,
            jobs,
            witness_limit,
        } => cmd_verify(
            grid.as_deref(),
            out.as_deref(),
            quarantine,
            *jobs,
            *witness_limit,
        ),
        Command::Bench {
            id,
            sequence,
            k,
            m,
            n,
            r,
            max_index,
        } => cmd_bench(id, sequence, k, *m, *n, *r, *max_index),
    };
    match result {
        Ok(code) => code,
        Err(UsageError(message)) => {
            eprintln!("error: {}", message);
            ExitCode::from(2)
        }
    }
}
