use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mattol_cli::{exit, parse_matrix_file, parse_vector_file, report, run, Command, DirectionSpec, RunConfig};
use mattol_core::parametrize::Method;
use mattol_core::{NormKind, PropertyKind, Settings};
use serde_json::json;

/// Special matrix classes: membership, admissible perturbations, tolerance radii.
#[derive(Parser)]
#[command(name = "mattol", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide whether the matrix has the property.
    Check(Opts),
    /// Admissible set of delta for A - delta*D.
    Param(Opts),
    /// Tolerance radius under a norm.
    Radius(Opts),
    /// Run param (with --direction) or radius (with --norm) and referee the result.
    Verify(Opts),
}

#[derive(Args)]
struct Opts {
    /// Matrix file: "n" then n*n reals, or CSV rows.
    #[arg(long)]
    matrix: PathBuf,
    /// det, pd, p-matrix, m-matrix, h-matrix, tp, inverse-m or inverse-nonnegative.
    #[arg(long)]
    property: PropertyKind,
    /// spectral, frobenius, max, induced-1, induced-inf or inf-one.
    #[arg(long)]
    norm: Option<NormKind>,
    /// PATH, ones, identity, checkerboard, or rank-one A.vec B.vec.
    #[arg(long, num_args = 1..=3, value_name = "SPEC")]
    direction: Vec<String>,
    /// auto, simple, rank-one, exact or iterative.
    #[arg(long, default_value = "auto")]
    method: Method,
    /// Referee the result with the brute-force oracle.
    #[arg(long)]
    verify: bool,
    /// Relative tolerance for strict inequalities.
    #[arg(long)]
    tol: Option<f64>,
    /// Largest n for 2^n enumerations.
    #[arg(long = "max-n")]
    max_n: Option<usize>,
    /// Oracle seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Compact JSON output.
    #[arg(long)]
    json: bool,
    /// Indented JSON output.
    #[arg(long)]
    pretty: bool,
}

fn direction(words: &[String]) -> Result<Option<DirectionSpec>, String> {
    let spec = match words {
        [] => return Ok(None),
        [w] if w == "ones" => DirectionSpec::Ones,
        [w] if w == "identity" => DirectionSpec::Identity,
        [w] if w == "checkerboard" => DirectionSpec::Checkerboard,
        [w, a, b] if w == "rank-one" => DirectionSpec::RankOne(
            parse_vector_file(a).map_err(|e| e.to_string())?,
            parse_vector_file(b).map_err(|e| e.to_string())?,
        ),
        [path] => DirectionSpec::Matrix(parse_matrix_file(path).map_err(|e| e.to_string())?),
        _ => return Err(format!("cannot read direction from {words:?}")),
    };
    Ok(Some(spec))
}

fn config(command: Command, o: &Opts) -> Result<RunConfig, String> {
    let matrix = parse_matrix_file(&o.matrix).map_err(|e| e.to_string())?;
    let mut settings = Settings::default();
    if let Some(tol) = o.tol {
        if !(tol > 0.0 && tol < 1.0) {
            return Err(format!("--tol must lie in (0, 1), got {tol}"));
        }
        settings.rel_tol = tol;
    }
    if let Some(k) = o.max_n {
        settings.exhaustive_limit = k;
    }
    let mut cfg = RunConfig::new(command, matrix, o.property);
    cfg.norm = o.norm;
    cfg.direction = direction(&o.direction)?;
    cfg.method = o.method;
    cfg.verify = o.verify;
    cfg.settings = settings;
    if let Some(seed) = o.seed {
        cfg.seed = seed;
    }
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE as u8 } else { 0 });
        }
    };
    let (command, opts) = match &cli.command {
        Cmd::Check(o) => (Command::Check, o),
        Cmd::Param(o) => (Command::Param, o),
        Cmd::Radius(o) => (Command::Radius, o),
        Cmd::Verify(o) => (Command::Verify, o),
    };
    let (report, code) = match config(command, opts) {
        Ok(cfg) => {
            let out = run(&cfg);
            (out.report, out.exit_code)
        }
        Err(msg) => (
            json!({ "command": command.name(), "property": opts.property.name(), "error": msg }),
            exit::USAGE,
        ),
    };
    if opts.pretty {
        println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    } else if opts.json {
        println!("{report}");
    } else if code == exit::OK || code == exit::ORACLE {
        println!("{}", report::summary(&report));
    } else {
        eprintln!("{}", report::summary(&report));
    }
    ExitCode::from(code as u8)
}
