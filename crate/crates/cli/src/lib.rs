//! Library side of the `mattol` binary: input parsing, command dispatch
//! and JSON reports. `main.rs` only translates flags into a [`RunConfig`].

pub mod input;
pub mod report;

use std::time::Instant;

use mattol_core::oracle::{self, Counterexample, OracleConfig, OracleVerdict};
use mattol_core::parametrize::{self, Method};
use mattol_core::{linalg, properties, radius, Direction, Error, Matrix, NormKind, PropertyKind, Settings};
use serde_json::{json, Value};

pub use input::{parse_matrix_file, parse_matrix_str, parse_vector_file, parse_vector_str, InputError};

pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const PRECONDITION: i32 = 2;
    pub const ORACLE: i32 = 3;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Check,
    Param,
    Radius,
    /// `param` or `radius`, whichever the flags select, always refereed.
    Verify,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::Param => "param",
            Command::Radius => "radius",
            Command::Verify => "verify",
        }
    }
}

/// Where the perturbation direction comes from.
#[derive(Debug, Clone, PartialEq)]
pub enum DirectionSpec {
    /// The all-ones matrix `E`.
    Ones,
    Identity,
    /// `ssᵀ` with `s = (1, -1, 1, ...)`.
    Checkerboard,
    Matrix(Matrix),
    RankOne(Vec<f64>, Vec<f64>),
}

impl DirectionSpec {
    /// `E` and `ssᵀ` come out in rank-one form when `rank_one` is set.
    pub fn resolve(&self, n: usize, rank_one: bool) -> Direction {
        match self {
            DirectionSpec::Ones if rank_one => Direction::RankOne(vec![1.0; n], vec![1.0; n]),
            DirectionSpec::Checkerboard if rank_one => {
                let s = Matrix::checkerboard_vector(n);
                Direction::RankOne(s.clone(), s)
            }
            DirectionSpec::Ones => Direction::General(Matrix::ones(n)),
            DirectionSpec::Identity => Direction::General(Matrix::identity(n)),
            DirectionSpec::Checkerboard => {
                let s = Matrix::checkerboard_vector(n);
                Direction::General(Matrix::outer(&s, &s))
            }
            DirectionSpec::Matrix(m) => Direction::General(m.clone()),
            DirectionSpec::RankOne(a, b) => Direction::RankOne(a.clone(), b.clone()),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            DirectionSpec::Ones => "ones",
            DirectionSpec::Identity => "identity",
            DirectionSpec::Checkerboard => "checkerboard",
            DirectionSpec::Matrix(_) => "matrix",
            DirectionSpec::RankOne(..) => "rank-one",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub matrix: Matrix,
    pub property: PropertyKind,
    pub norm: Option<NormKind>,
    pub direction: Option<DirectionSpec>,
    pub method: Method,
    pub verify: bool,
    pub settings: Settings,
    pub seed: u64,
}

impl RunConfig {
    pub fn new(command: Command, matrix: Matrix, property: PropertyKind) -> Self {
        RunConfig {
            command,
            matrix,
            property,
            norm: None,
            direction: None,
            method: Method::Auto,
            verify: false,
            settings: Settings::default(),
            seed: OracleConfig::default().seed,
        }
    }

    fn oracle(&self) -> OracleConfig {
        OracleConfig {
            seed: self.seed,
            ..OracleConfig::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub report: Value,
    pub exit_code: i32,
}

enum Failure {
    Usage(String),
    Precondition(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnsupportedNormForTheorem { .. } | Error::DimensionMismatch(_) | Error::InvalidIndexSet(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Precondition(e.to_string()),
        }
    }
}

type Body = Result<(Value, Option<OracleVerdict>), Failure>;

fn check(cfg: &RunConfig) -> Body {
    let r = properties::check(&cfg.matrix, cfg.property, &cfg.settings)?;
    let verdict = (cfg.verify && cfg.property == PropertyKind::TotallyPositive).then(|| {
        let brute = oracle::totally_positive_brute(&cfg.matrix, &cfg.settings);
        OracleVerdict {
            consistent: brute == r.holds,
            counterexample: None,
            detail: format!("all-submatrix enumeration says {brute}"),
        }
    });
    Ok((report::property(&r), verdict))
}

fn param(cfg: &RunConfig, verify: bool) -> Body {
    let spec = cfg
        .direction
        .as_ref()
        .ok_or_else(|| Failure::Usage("this command needs --direction".into()))?;
    let d = spec.resolve(cfg.matrix.n(), cfg.method == Method::RankOne);
    let p = parametrize::parametrize(&cfg.matrix, &d, cfg.property, cfg.method, &cfg.settings)?;
    let result = json!({
        "interval": report::interval_set(&p.set),
        "exact": p.exact,
        "method": p.method,
        "direction": spec.label(),
    });
    let verdict = verify.then(|| {
        oracle::verify_interval(&cfg.matrix, &d, cfg.property, &p.set, p.exact, &cfg.oracle(), &cfg.settings)
    });
    Ok((result, verdict))
}

/// Ball soundness below the lower bound, and the certificate leaving the
/// class: on the boundary when attained, just past it otherwise.
fn referee_radius(cfg: &RunConfig, norm: NormKind, est: &radius::RadiusEstimate) -> OracleVerdict {
    let (a, s) = (&cfg.matrix, &cfg.settings);
    if let Some(c) = &est.certificate {
        let moved = if c.attained {
            a + &c.perturbation
        } else {
            a + &c.perturbation.scale(1.0 + 1e-6)
        };
        let singular = c.attained && linalg::sigma_min(&moved) <= 1e-9 * (1.0 + a.max_abs());
        let leaves = singular || properties::check(&moved, cfg.property, s).is_ok_and(|r| !r.holds);
        if !leaves {
            return OracleVerdict {
                consistent: false,
                counterexample: Some(Counterexample::Perturbation(c.perturbation.clone())),
                detail: "certificate keeps the property".into(),
            };
        }
    }
    if est.lower > 0.0 {
        oracle::falsify_radius(a, cfg.property, norm, est.lower, &cfg.oracle(), s)
    } else {
        OracleVerdict {
            consistent: true,
            counterexample: None,
            detail: "zero radius, nothing to falsify".into(),
        }
    }
}

fn radius(cfg: &RunConfig, verify: bool) -> Body {
    let norm = cfg
        .norm
        .ok_or_else(|| Failure::Usage("this command needs --norm".into()))?;
    let est = radius::radius(&cfg.matrix, cfg.property, norm, &cfg.settings)?;
    let verdict = verify.then(|| referee_radius(cfg, norm, &est));
    Ok((json!({ "radius": report::radius(&est) }), verdict))
}

pub fn run(cfg: &RunConfig) -> Outcome {
    let start = Instant::now();
    let mut out = json!({
        "command": cfg.command.name(),
        "property": cfg.property.name(),
        "norm": cfg.norm.map(NormKind::name),
        "matrix_sha": report::matrix_sha(&cfg.matrix),
    });
    let body = match cfg.command {
        Command::Check => check(cfg),
        Command::Param => param(cfg, cfg.verify),
        Command::Radius => radius(cfg, cfg.verify),
        Command::Verify if cfg.direction.is_some() => param(cfg, true),
        Command::Verify if cfg.norm.is_some() => radius(cfg, true),
        Command::Verify => Err(Failure::Usage("verify needs --direction or --norm".into())),
    };
    let exit_code = match body {
        Ok((result, verdict)) => {
            out["result"] = result;
            match verdict {
                Some(v) => {
                    out["oracle"] = report::verdict(&v);
                    if v.consistent {
                        exit::OK
                    } else {
                        exit::ORACLE
                    }
                }
                None => exit::OK,
            }
        }
        Err(Failure::Usage(msg)) => {
            out["error"] = json!(msg);
            exit::USAGE
        }
        Err(Failure::Precondition(msg)) => {
            out["error"] = json!(msg);
            exit::PRECONDITION
        }
    };
    out["timing_ms"] = report::number(start.elapsed().as_secs_f64() * 1e3);
    Outcome { report: out, exit_code }
}
