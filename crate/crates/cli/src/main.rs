//! `girth`: invariants of graded affine algebras and mechanical
//! verification of generator-count bounds.
//!
//! Exit codes: 0 all checks pass, 1 a bound check failed, 2 input error,
//! 3 out-of-hypothesis under `--strict`.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use girth_core::corpus::{report_csv, report_json_string, single_case_json, VERSION};
use girth_core::{
    forster_swan_bound, free_resolution_of_quotient, global_bound, noether_position, parse_case,
    scheme_intersection_bound, CaseFile, CaseStatus, CorpusSource, Error, GeneratorSpec,
    RunConfig, SchemeVariant,
};

#[derive(Parser)]
#[command(name = "girth", version, about = "invariants and generator-count bounds for graded affine algebras")]
struct Cli {
    /// Seed for all randomized steps (substitutions, parameter trials).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the JSON report to this path.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Write the CSV report to this path.
    #[arg(long, global = true)]
    csv: Option<PathBuf>,
    /// Treat out-of-hypothesis cases as a distinct failure (exit 3).
    #[arg(long, global = true)]
    strict: bool,
    /// Abort resolutions whose intermediate rank exceeds this cap.
    #[arg(long, global = true, default_value_t = 200)]
    max_rank: usize,
    /// Number of random parameter-degree trials.
    #[arg(long, global = true, default_value_t = 16)]
    trials: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full invariant record of one case file.
    Invariants { case: PathBuf },
    /// Bound checks for one case file (needs `ideal a`).
    Verify { case: PathBuf },
    /// Noether normalization summary of one case file.
    Noether { case: PathBuf },
    /// Betti table of the minimal free resolution.
    Resolve { case: PathBuf },
    /// Hilbert series, dimension, and multiplicity.
    Hilbert { case: PathBuf },
    /// Sweep a directory of `.case` files, or a generated corpus.
    Corpus {
        dir: Option<PathBuf>,
        /// Generate cases instead: e.g. `ci=20,hyp=10,det=10`.
        #[arg(long)]
        generate: Option<String>,
    },
    /// Pure bound-formula calculators.
    Bound {
        #[command(subcommand)]
        which: BoundCmd,
    },
}

#[derive(Subcommand)]
enum BoundCmd {
    /// Global bound: height 1 gives N + d - 1, height 2 gives
    /// (tau+1) N + d - 2 with the N = tau = 1 exception d + 1.
    Global(GlobalArgs),
    /// max(d + 1, F + dim A/a).
    ForsterSwan(ForsterSwanArgs),
    /// Hypersurface-intersection bounds for degree-f coverings.
    #[command(name = "thm1-1")]
    Thm1_1(Thm11Args),
}

#[derive(Args)]
struct GlobalArgs {
    #[arg(long)]
    d: u64,
    #[arg(long)]
    n: u64,
    #[arg(long)]
    h: u64,
    #[arg(long)]
    tau: Option<u64>,
}

#[derive(Args)]
struct ForsterSwanArgs {
    #[arg(long)]
    f_local: u64,
    #[arg(long)]
    d: u64,
    #[arg(long)]
    dim_quotient: u64,
}

#[derive(Args)]
struct Thm11Args {
    #[arg(long)]
    f: u64,
    #[arg(long)]
    d: u64,
    #[arg(long, default_value = "general")]
    variant: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = RunConfig {
        seed: cli.seed,
        trials: cli.trials,
        max_rank: cli.max_rank,
        strict: cli.strict,
    };
    match dispatch(&cli, &cfg) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Hypothesis(_) => {
                    if cli.strict {
                        ExitCode::from(3)
                    } else {
                        ExitCode::SUCCESS
                    }
                }
                _ => ExitCode::from(2),
            }
        }
    }
}

fn load_case(path: &PathBuf) -> Result<CaseFile, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    let id = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("case")
        .to_string();
    parse_case(&text, &id)
}

fn write_artifacts(cli: &Cli, json_text: &str, csv_text: Option<&str>) -> Result<(), Error> {
    if let Some(p) = &cli.json {
        std::fs::write(p, json_text)
            .map_err(|e| Error::Input(format!("cannot write {}: {e}", p.display())))?;
    }
    if let (Some(p), Some(csv)) = (&cli.csv, csv_text) {
        std::fs::write(p, csv)
            .map_err(|e| Error::Input(format!("cannot write {}: {e}", p.display())))?;
    }
    Ok(())
}

fn status_exit(cli: &Cli, status: CaseStatus) -> ExitCode {
    match status {
        CaseStatus::Pass => ExitCode::SUCCESS,
        CaseStatus::Fail => ExitCode::from(1),
        CaseStatus::OutOfHypothesis => {
            if cli.strict {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
    }
}

fn dispatch(cli: &Cli, cfg: &RunConfig) -> Result<ExitCode, Error> {
    match &cli.cmd {
        Cmd::Invariants { case } | Cmd::Verify { case } => {
            let cf = load_case(case)?;
            let rec = girth_core::evaluate_case(&cf, cfg)?;
            let out = single_case_json(&rec, cfg.seed);
            print!("{out}");
            write_artifacts(cli, &out, None)?;
            Ok(status_exit(cli, rec.status))
        }
        Cmd::Noether { case } => {
            let cf = load_case(case)?;
            let q = cf.quotient()?;
            if q.is_zero_ring() {
                return Err(Error::Input("defining ideal is the whole ring".to_string()));
            }
            let nd = noether_position(&q.ideal, cfg.seed)?;
            let basis: Vec<String> = nd
                .basis
                .iter()
                .map(|m| {
                    girth_core::Polynomial::monomial(&nd.position.block_ring, m.clone()).to_string()
                })
                .collect();
            let out = json!({
                "N": nd.n_gens(),
                "base_vars": nd.base_var_names(),
                "basis": basis,
                "case_id": cf.id,
                "closure_entries": nd.closure.len(),
                "fiber_vars": nd.fiber_var_names(),
                "seed": cfg.seed,
                "substitutions": nd.position.substitutions.len(),
                "version": VERSION,
            });
            let mut text = serde_json::to_string_pretty(&out).expect("serializable");
            text.push('\n');
            print!("{text}");
            write_artifacts(cli, &text, None)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Resolve { case } => {
            let cf = load_case(case)?;
            let q = cf.quotient()?;
            let res = free_resolution_of_quotient(&q, &cfg.resolve_config())?;
            let twists: Vec<Vec<i64>> = res.modules.iter().map(|m| m.twists().to_vec()).collect();
            let (pd, depth) = girth_core::depth_and_pd(&q, &cfg.resolve_config())?;
            let out = json!({
                "betti": res.betti,
                "case_id": cf.id,
                "cm": depth as i64 == q.dimension(),
                "compositions_zero": res.compositions_are_zero(),
                "depth": depth,
                "dim": q.dimension(),
                "minimal": res.minimality_certified(),
                "pd": pd,
                "seed": cfg.seed,
                "twists": twists,
                "version": VERSION,
            });
            let mut text = serde_json::to_string_pretty(&out).expect("serializable");
            text.push('\n');
            print!("{text}");
            write_artifacts(cli, &text, None)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Hilbert { case } => {
            let cf = load_case(case)?;
            let q = cf.quotient()?;
            let s = q.hilbert_series();
            let length = if q.dimension() == 0 { Some(q.length_zero_dim()?) } else { None };
            let e = if q.is_zero_ring() { None } else { Some(q.multiplicity()?) };
            let out = json!({
                "case_id": cf.id,
                "denominator_exponent": s.denom_exp,
                "dim": q.dimension(),
                "e": e,
                "length": length,
                "numerator": s.numerator.coeffs(),
                "pole_order": s.pole_order,
                "reduced_numerator": s.reduced_numerator.coeffs(),
                "seed": cfg.seed,
                "version": VERSION,
            });
            let mut text = serde_json::to_string_pretty(&out).expect("serializable");
            text.push('\n');
            print!("{text}");
            write_artifacts(cli, &text, None)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Corpus { dir, generate } => {
            let source = match (dir, generate) {
                (Some(d), None) => CorpusSource::Directory(d.clone()),
                (None, Some(spec)) => CorpusSource::Generated(GeneratorSpec::parse(spec)?),
                (Some(_), Some(_)) => {
                    return Err(Error::Input(
                        "give either a directory or --generate, not both".to_string(),
                    ))
                }
                (None, None) => {
                    return Err(Error::Input(
                        "corpus needs a directory or --generate <spec>".to_string(),
                    ))
                }
            };
            let report = girth_core::run_corpus(&source, cfg)?;
            let json_text = report_json_string(&report);
            let csv_text = report_csv(&report);
            println!(
                "corpus: {} cases, {} pass, {} fail, {} out of hypothesis",
                report.cases.len(),
                report.pass,
                report.fail,
                report.out_of_hypothesis
            );
            write_artifacts(cli, &json_text, Some(&csv_text))?;
            if report.fail > 0 {
                Ok(ExitCode::from(1))
            } else if cfg.strict && report.out_of_hypothesis > 0 {
                Ok(ExitCode::from(3))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
        Cmd::Bound { which } => {
            let value = match which {
                BoundCmd::Global(a) => global_bound(a.d, a.n, a.h, a.tau)?,
                BoundCmd::ForsterSwan(a) => forster_swan_bound(a.f_local, a.d, a.dim_quotient),
                BoundCmd::Thm1_1(a) => {
                    let variant = match a.variant.as_str() {
                        "general" => SchemeVariant::General,
                        "cm" => SchemeVariant::Cm,
                        "ee" => SchemeVariant::Ee,
                        other => {
                            return Err(Error::Input(format!(
                                "unknown variant `{other}`; use general, cm, or ee"
                            )))
                        }
                    };
                    scheme_intersection_bound(a.f, a.d, variant)?
                }
            };
            println!("{value}");
            Ok(ExitCode::SUCCESS)
        }
    }
}
