//! Command-line front end. Parsing and process-exit policy live here; all
//! rendering is done by the library so that byte-level output is testable.
//!
//! Exit codes: 0 on success, 1 on verification failure, 2 on usage errors.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use kostant::cli::{self, OutputFormat};
use kostant::oracle::DEFAULT_WEYL_CAP;
use kostant::reps::{HighestWeight, KostantPair};
use kostant::rootsys::{HalfInt, RankContext};
use kostant::spectral::CuspidalDatum;

#[derive(Parser)]
#[command(name = "kostant", version, about = "Exact Kostant-representative tables and Eisenstein degree bookkeeping for split odd orthogonal groups")]
struct Cli {
    /// Output format: json, csv or markdown
    #[arg(long, global = true, default_value = "json", value_parser = OutputFormat::from_str)]
    format: OutputFormat,

    /// Write output to a file instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<std::path::PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// One row per Kostant representative: I, J, length, t, mu, self-duality
    Table(TableArgs),
    /// Self-dual representatives at a given evaluation point, with family tags
    Classify(ClassifyArgs),
    /// Residual/regular/no-class decision for one representative and analytic flags
    Verdict(VerdictArgs),
    /// Degree ranges: cuspidal ranges, windows, and the residual degree rule
    Degrees(DegreesArgs),
    /// Run the brute-force verification suite (honors RESOURCE_CAP)
    Verify(VerifyArgs),
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Comma-separated dominant weight, e.g. 2,1,0
    #[arg(long)]
    lambda: String,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    lambda: String,
    /// Evaluation point, e.g. 2 or 1/2
    #[arg(long)]
    t: String,
}

#[derive(Args)]
struct VerdictArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    lambda: String,
    /// Comma-separated I (empty for the empty set)
    #[arg(long, default_value = "")]
    i: String,
    /// Comma-separated J (empty for the empty set)
    #[arg(long, default_value = "")]
    j: String,

    #[arg(long, overrides_with = "no_sigma_self_dual")]
    sigma_self_dual: bool,
    #[arg(long)]
    no_sigma_self_dual: bool,

    #[arg(long, overrides_with = "no_omega_trivial")]
    omega_trivial: bool,
    #[arg(long)]
    no_omega_trivial: bool,

    /// L(1/2, sigma x tau) != 0 (required for k < n, forbidden for k = n)
    #[arg(long, overrides_with = "no_l_half_nonzero")]
    l_half_nonzero: bool,
    #[arg(long)]
    no_l_half_nonzero: bool,

    /// L(s, sigma x tau) has a pole at s = 1 (required for k < n, forbidden for k = n)
    #[arg(long, overrides_with = "no_rs_pole_at_one")]
    rs_pole_at_one: bool,
    #[arg(long)]
    no_rs_pole_at_one: bool,

    /// sigma descends from SO_k (consulted for even k with trivial central character)
    #[arg(long, overrides_with = "no_lift_from_so_k")]
    lift_from_so_k: bool,
    #[arg(long)]
    no_lift_from_so_k: bool,

    /// A local component lies in the kernel of the local intertwining operator
    #[arg(long, overrides_with = "no_local_kernel")]
    local_kernel: bool,
    #[arg(long)]
    no_local_kernel: bool,
}

#[derive(Args)]
struct DegreesArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Evaluation point for the residual window (integer or p/2)
    #[arg(long)]
    t: Option<String>,
    /// Kostant length l(w) for the regular window
    #[arg(long)]
    lw: Option<i64>,
    /// Degree q (including the l(w) shift) for the residual degree rule
    #[arg(long)]
    q: Option<i64>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 3)]
    n_max: usize,
    #[arg(long, default_value_t = 7)]
    k_max: usize,
    #[arg(long, default_value_t = 1)]
    lambda_cap: i64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> kostant::Result<ExitCode> {
    let (output, code) = match &cli.command {
        Command::Table(args) => {
            let ctx = RankContext::new(args.n, args.k)?;
            let lam = parse_lambda(&args.lambda, args.n)?;
            (cli::cmd_table(ctx, &lam, cli.format)?, ExitCode::SUCCESS)
        }
        Command::Classify(args) => {
            let ctx = RankContext::new(args.n, args.k)?;
            let lam = parse_lambda(&args.lambda, args.n)?;
            let target = cli::parse_rational(&args.t)?;
            (
                cli::cmd_classify(ctx, &lam, target, cli.format)?,
                ExitCode::SUCCESS,
            )
        }
        Command::Verdict(args) => {
            let ctx = RankContext::new(args.n, args.k)?;
            let lam = parse_lambda(&args.lambda, args.n)?;
            let pair = KostantPair::new(
                cli::parse_index_list(&args.i)?,
                cli::parse_index_list(&args.j)?,
                ctx,
            )?;
            let (datum, local_kernel) = build_datum(ctx, args)?;
            (
                cli::cmd_verdict(&datum, &lam, &pair, local_kernel, cli.format)?,
                ExitCode::SUCCESS,
            )
        }
        Command::Degrees(args) => {
            let ctx = RankContext::new(args.n, args.k)?;
            let t = args
                .t
                .as_deref()
                .map(HalfInt::from_str)
                .transpose()?;
            (
                cli::cmd_degrees(ctx, t, args.lw, args.q, cli.format)?,
                ExitCode::SUCCESS,
            )
        }
        Command::Verify(args) => {
            let cap = resource_cap();
            let (report, rendered) =
                cli::cmd_verify(args.n_max, args.k_max, args.lambda_cap, cap)?;
            let code = if report.is_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
            (rendered, code)
        }
    };

    match &cli.out {
        Some(path) => std::fs::write(path, output)
            .map_err(|e| kostant::Error::Io(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{output}"),
    }
    Ok(code)
}

fn parse_lambda(s: &str, n: usize) -> kostant::Result<HighestWeight> {
    let lam: HighestWeight = s.parse()?;
    if lam.n() != n {
        return Err(kostant::Error::DimensionMismatch {
            expected: n,
            got: lam.n(),
        });
    }
    Ok(lam)
}

/// Assemble the analytic flags, enforcing which of them must be given
/// explicitly: sigma self-duality and the central character always; the two
/// Rankin-Selberg flags exactly when k < n.
fn build_datum(ctx: RankContext, args: &VerdictArgs) -> kostant::Result<(CuspidalDatum, bool)> {
    let explicit = |yes: bool, no: bool| -> Option<bool> { (yes || no).then_some(yes) };

    let sigma_self_dual = explicit(args.sigma_self_dual, args.no_sigma_self_dual)
        .ok_or_else(|| missing("--sigma-self-dual/--no-sigma-self-dual"))?;
    let omega_trivial = explicit(args.omega_trivial, args.no_omega_trivial)
        .ok_or_else(|| missing("--omega-trivial/--no-omega-trivial"))?;

    let l_half = explicit(args.l_half_nonzero, args.no_l_half_nonzero);
    let rs_pole = explicit(args.rs_pole_at_one, args.no_rs_pole_at_one);
    if !ctx.is_siegel() {
        if l_half.is_none() {
            return Err(missing("--l-half-nonzero/--no-l-half-nonzero (k < n)"));
        }
        if rs_pole.is_none() {
            return Err(missing("--rs-pole-at-one/--no-rs-pole-at-one (k < n)"));
        }
    } else if l_half.is_some() || rs_pole.is_some() {
        return Err(kostant::Error::Parse(
            "Rankin-Selberg flags do not apply at k = n (no tau factor)".to_string(),
        ));
    }

    let lift = explicit(args.lift_from_so_k, args.no_lift_from_so_k).unwrap_or(false);
    let local_kernel = explicit(args.local_kernel, args.no_local_kernel).unwrap_or(false);
    let datum = CuspidalDatum::new(ctx, sigma_self_dual, omega_trivial, l_half, rs_pole, lift)?;
    Ok((datum, local_kernel))
}

fn missing(flag: &str) -> kostant::Error {
    kostant::Error::Parse(format!("missing required flag {flag}"))
}

fn resource_cap() -> usize {
    std::env::var("RESOURCE_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_WEYL_CAP)
}
