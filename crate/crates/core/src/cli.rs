//! Command-line front end: spec parsing, verification sweeps, and
//! machine-readable reports with CI-friendly exit codes.
//!
//! Exit code contract:
//!
//! * `0` — every record passed and all quadrature converged,
//! * `1` — at least one inequality check failed,
//! * `2` — a numerics failure (quadrature non-convergence or an objective
//!   above its theorem ceiling),
//! * `64` — usage error (bad flags, malformed spec string, invalid config).
//!
//! Reports serialize with shortest round-trip float formatting and contain
//! nothing machine- or time-dependent: the same command, config, and seed
//! produce byte-identical output.

use std::f64::consts::PI;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::analytic_fn::{eta_grid, TaylorPoly};
use crate::corpus;
use crate::error::{Error, Result};
use crate::extremal::{
    search, FreeCoeffFamily, LogSpanFamily, MonomialFamily, Objective, SearchConfig,
};
use crate::hardy_norms::{hardy_sum, hinf_norm, verify_hardy};
use crate::quad::{adaptive_panels, QuadConfig};
use crate::report::{Record, Report, SearchRecord, ToeplitzRecord};
use crate::singular_quad::{
    kernel_integral, log_ratio_subintegral, reconstruct, reference_constant, verify_theorem1,
    VerifyRecord,
};
use crate::toeplitz::{empirical_norm_lb_with_witness, operator_bound_quad};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_NUMERICS: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

/// Relative slack for the operator-norm comparison.
const TOEPLITZ_PASS_RTOL: f64 = 1e-8;

#[derive(Debug, Parser)]
#[command(
    name = "hardy-verify",
    version,
    about = "Numerical verification of Hardy-space inequalities on the unit disc"
)]
pub struct Cli {
    #[command(subcommand)]
    command: CommandArg,
}

#[derive(Debug, Subcommand)]
enum CommandArg {
    /// Reproduce the closed-form constants behind the kernel bound.
    #[command(name = "constants")]
    Constants(CommonArgs),
    /// Check the coefficient-sum inequality for each --spec function.
    #[command(name = "verify-hardy")]
    VerifyHardy(CommonArgs),
    /// Sweep the boundary integral inequality over a rotation grid.
    #[command(name = "verify-thm1")]
    VerifyThm1(CommonArgs),
    /// Maximum of the log-ratio kernel integral over a theta grid.
    #[command(name = "kernel-sup")]
    KernelSup(CommonArgs),
    /// Operator-norm bound against the certified corpus lower bound.
    #[command(name = "toeplitz-check")]
    ToeplitzCheck(CommonArgs),
    /// Log-kernel reconstruction against direct evaluation at random points.
    #[command(name = "reconstruct-check")]
    ReconstructCheck(CommonArgs),
    /// Derivative-free extremal search over a coefficient family.
    #[command(name = "extremal")]
    Extremal(ExtremalArgs),
}

#[derive(Debug, Clone, Default, Args)]
struct CommonArgs {
    /// Function spec: poly:…, logfam:N, or random:degree,seed (repeatable).
    #[arg(long = "spec")]
    specs: Vec<String>,
    /// Number of rotation-grid points.
    #[arg(long)]
    eta_grid: Option<usize>,
    /// Number of theta-grid points for kernel-sup.
    #[arg(long)]
    theta_grid: Option<usize>,
    /// Tolerance for equality-type checks.
    #[arg(long)]
    tol: Option<f64>,
    /// Seed for corpora and sample points.
    #[arg(long)]
    seed: Option<u64>,
    /// Report format: json or csv.
    #[arg(long)]
    format: Option<String>,
    /// Report path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Command-specific size: sample points, corpus size, or search budget.
    #[arg(long)]
    budget: Option<usize>,
    /// Flat key-value JSON config mirroring the flags; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ExtremalArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Coefficient family: monomial, logfam-span, or free.
    #[arg(long)]
    family: Option<String>,
    /// Family dimension (complex coefficients for `free`).
    #[arg(long)]
    dim: Option<usize>,
    /// Objective ratio: thm1, hardy, or toeplitz.
    #[arg(long)]
    objective: Option<String>,
}

/// Flat config file mirroring the flags. Unknown keys are rejected.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    #[serde(default)]
    spec: Vec<String>,
    #[serde(rename = "eta-grid")]
    eta_grid: Option<usize>,
    #[serde(rename = "theta-grid")]
    theta_grid: Option<usize>,
    tol: Option<f64>,
    seed: Option<u64>,
    format: Option<String>,
    out: Option<String>,
    budget: Option<usize>,
    family: Option<String>,
    dim: Option<usize>,
    objective: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CommandKind {
    Constants,
    VerifyHardy,
    VerifyThm1,
    KernelSup,
    ToeplitzCheck,
    ReconstructCheck,
    Extremal,
}

impl CommandKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            CommandKind::Constants => "constants",
            CommandKind::VerifyHardy => "verify-hardy",
            CommandKind::VerifyThm1 => "verify-thm1",
            CommandKind::KernelSup => "kernel-sup",
            CommandKind::ToeplitzCheck => "toeplitz-check",
            CommandKind::ReconstructCheck => "reconstruct-check",
            CommandKind::Extremal => "extremal",
        }
    }

    fn needs_specs(&self) -> bool {
        matches!(
            self,
            CommandKind::VerifyHardy
                | CommandKind::VerifyThm1
                | CommandKind::ToeplitzCheck
                | CommandKind::ReconstructCheck
        )
    }

    fn default_budget(&self) -> usize {
        match self {
            CommandKind::ReconstructCheck => 100,
            CommandKind::ToeplitzCheck => 50,
            CommandKind::Extremal => 200,
            _ => 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
}

/// Fully resolved run configuration (flags over config file over defaults).
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: CommandKind,
    pub specs: Vec<String>,
    pub eta_grid: usize,
    pub theta_grid: usize,
    pub tol: f64,
    pub seed: u64,
    pub format: OutputFormat,
    pub out: Option<String>,
    pub budget: usize,
    pub family: Option<String>,
    pub dim: usize,
    pub objective: Option<String>,
}

/// Parse a function spec string into its polynomial.
///
/// Grammar (documented in full in the `analytic_fn` module docs):
/// `poly:c0,c1,…` with complex literals like `1`, `-2.5j`, `1+2j`;
/// `logfam:N`; `random:degree,seed`. Malformed input is reported with the
/// byte position of the problem.
pub fn parse_spec(s: &str) -> Result<TaylorPoly> {
    let err = |pos: usize, reason: String| Error::SpecParse {
        input: s.to_string(),
        pos,
        reason,
    };
    let colon = s
        .find(':')
        .ok_or_else(|| err(0, "expected a poly:, logfam:, or random: prefix".into()))?;
    let payload = &s[colon + 1..];
    let base = colon + 1;
    match &s[..colon] {
        "poly" => {
            if payload.is_empty() {
                return Ok(TaylorPoly::zero().with_label(s));
            }
            let mut coeffs = Vec::new();
            let mut offset = base;
            for token in payload.split(',') {
                let c = parse_complex(token)
                    .map_err(|(dpos, reason)| err(offset + dpos, reason))?;
                coeffs.push(c);
                offset += token.len() + 1;
            }
            Ok(TaylorPoly::new(coeffs).with_label(s))
        }
        "logfam" => {
            let n: usize = payload
                .parse()
                .map_err(|_| err(base, format!("expected a positive integer, got {payload:?}")))?;
            if n == 0 {
                return Err(err(base, "logfam size must be at least 1".into()));
            }
            Ok(TaylorPoly::make_log_family(n).with_label(s))
        }
        "random" => {
            let comma = payload
                .find(',')
                .ok_or_else(|| err(base + payload.len(), "expected degree,seed".into()))?;
            let degree: usize = payload[..comma]
                .parse()
                .map_err(|_| err(base, format!("invalid degree {:?}", &payload[..comma])))?;
            let seed: u64 = payload[comma + 1..].parse().map_err(|_| {
                err(
                    base + comma + 1,
                    format!("invalid seed {:?}", &payload[comma + 1..]),
                )
            })?;
            Ok(TaylorPoly::random_poly(degree, seed).with_label(s))
        }
        other => Err(err(0, format!("unknown spec kind {other:?}"))),
    }
}

/// Parse one complex literal; errors carry the offset within the token.
fn parse_complex(token: &str) -> std::result::Result<Complex64, (usize, String)> {
    if token.is_empty() {
        return Err((0, "empty coefficient".into()));
    }
    let parse_float = |s: &str| -> std::result::Result<f64, String> {
        if s.is_empty() {
            return Err("missing number".into());
        }
        let v: f64 = s
            .parse()
            .map_err(|_| format!("invalid number {s:?}"))?;
        if !v.is_finite() {
            return Err(format!("non-finite number {s:?}"));
        }
        Ok(v)
    };
    if let Some(stripped) = token.strip_suffix('j') {
        let bytes = stripped.as_bytes();
        // Last top-level sign splits real from imaginary; signs directly
        // after an exponent marker belong to the number.
        let split = (1..bytes.len())
            .rev()
            .find(|&i| {
                (bytes[i] == b'+' || bytes[i] == b'-')
                    && !matches!(bytes[i - 1], b'e' | b'E')
            });
        match split {
            Some(i) => {
                let re = parse_float(&stripped[..i]).map_err(|r| (0, r))?;
                let im = parse_float(&stripped[i..]).map_err(|r| (i, r))?;
                Ok(Complex64::new(re, im))
            }
            None => Ok(Complex64::new(
                0.0,
                parse_float(stripped).map_err(|r| (0, r))?,
            )),
        }
    } else {
        Ok(Complex64::new(
            parse_float(token).map_err(|r| (0, r))?,
            0.0,
        ))
    }
}

fn resolve(cli: Cli) -> std::result::Result<(RunConfig, Vec<TaylorPoly>), String> {
    let (kind, common, family, dim, objective) = match cli.command {
        CommandArg::Constants(c) => (CommandKind::Constants, c, None, None, None),
        CommandArg::VerifyHardy(c) => (CommandKind::VerifyHardy, c, None, None, None),
        CommandArg::VerifyThm1(c) => (CommandKind::VerifyThm1, c, None, None, None),
        CommandArg::KernelSup(c) => (CommandKind::KernelSup, c, None, None, None),
        CommandArg::ToeplitzCheck(c) => (CommandKind::ToeplitzCheck, c, None, None, None),
        CommandArg::ReconstructCheck(c) => (CommandKind::ReconstructCheck, c, None, None, None),
        CommandArg::Extremal(e) => (
            CommandKind::Extremal,
            e.common,
            e.family,
            e.dim,
            e.objective,
        ),
    };

    let file: FileConfig = match &common.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read config file {}: {e}", path.display()))?;
            serde_json::from_str(&text)
                .map_err(|e| format!("invalid config file {}: {e}", path.display()))?
        }
        None => FileConfig::default(),
    };

    let specs = if common.specs.is_empty() {
        file.spec
    } else {
        common.specs
    };
    let format = match common
        .format
        .or(file.format)
        .unwrap_or_else(|| "json".into())
        .as_str()
    {
        "json" => OutputFormat::Json,
        "csv" => OutputFormat::Csv,
        other => return Err(format!("unknown format {other:?}, expected json or csv")),
    };
    let config = RunConfig {
        command: kind,
        specs,
        eta_grid: common.eta_grid.or(file.eta_grid).unwrap_or(64),
        theta_grid: common.theta_grid.or(file.theta_grid).unwrap_or(128),
        tol: common.tol.or(file.tol).unwrap_or(1e-8),
        seed: common.seed.or(file.seed).unwrap_or(0),
        format,
        out: common
            .out
            .map(|p| p.display().to_string())
            .or(file.out),
        budget: common
            .budget
            .or(file.budget)
            .unwrap_or_else(|| kind.default_budget()),
        family: family.or(file.family),
        dim: dim.or(file.dim).unwrap_or(4),
        objective: objective.or(file.objective),
    };

    if !(config.tol.is_finite() && config.tol > 0.0) {
        return Err(format!("tolerance must be positive, got {}", config.tol));
    }
    if config.eta_grid == 0 || config.theta_grid == 0 {
        return Err("grid sizes must be at least 1".into());
    }
    if config.command.needs_specs() && config.specs.is_empty() {
        return Err(format!(
            "{} requires at least one --spec",
            config.command.as_str()
        ));
    }
    if matches!(
        config.command,
        CommandKind::ReconstructCheck | CommandKind::ToeplitzCheck | CommandKind::Extremal
    ) && config.budget == 0
    {
        return Err("budget must be at least 1".into());
    }
    if config.command == CommandKind::Extremal {
        if config.dim == 0 {
            return Err("family dimension must be at least 1".into());
        }
        match config.family.as_deref().unwrap_or("logfam-span") {
            "monomial" | "logfam-span" | "free" => {}
            other => {
                return Err(format!(
                    "unknown family {other:?}, expected monomial, logfam-span, or free"
                ))
            }
        }
        match config.objective.as_deref().unwrap_or("hardy") {
            "thm1" | "hardy" | "toeplitz" => {}
            other => {
                return Err(format!(
                    "unknown objective {other:?}, expected thm1, hardy, or toeplitz"
                ))
            }
        }
    }

    let mut polys = Vec::with_capacity(config.specs.len());
    for spec in &config.specs {
        polys.push(parse_spec(spec).map_err(|e| e.to_string())?);
    }
    Ok((config, polys))
}

fn execute(config: &RunConfig, polys: &[TaylorPoly]) -> Result<(Vec<Record>, usize)> {
    let quad = QuadConfig::default();
    let mut records = Vec::new();
    let mut failures = 0usize;

    match config.command {
        CommandKind::Constants => {
            match reference_constant(&quad) {
                Ok(q) => records.push(Record::Verify(VerifyRecord::equality_check(
                    "reference_constant".into(),
                    0.0,
                    q.value,
                    PI,
                    q.err_est,
                    config.tol,
                ))),
                Err(Error::NonConvergence { best }) => {
                    failures += 1;
                    records.push(Record::Verify(VerifyRecord::failed(
                        "reference_constant".into(),
                        0.0,
                        best.value,
                        PI,
                        best.err_est.min(f64::MAX),
                    )));
                }
                Err(e) => return Err(e),
            }
            match log_ratio_subintegral(&quad) {
                Ok(q) => records.push(Record::Verify(VerifyRecord::equality_check(
                    "log_ratio_subintegral".into(),
                    0.0,
                    q.value,
                    PI * PI / 4.0,
                    q.err_est,
                    config.tol,
                ))),
                Err(Error::NonConvergence { best }) => {
                    failures += 1;
                    records.push(Record::Verify(VerifyRecord::failed(
                        "log_ratio_subintegral".into(),
                        0.0,
                        best.value,
                        PI * PI / 4.0,
                        best.err_est.min(f64::MAX),
                    )));
                }
                Err(e) => return Err(e),
            }
            // Fold identity: ∫₁^10 equals ∫_{1/10}^1 under x → 1/x.
            let upper = |x: f64| (((1.0 + x) / (1.0 - x)).abs().ln()).abs() / x;
            let lower = |x: f64| ((1.0 + x) / (1.0 - x)).ln() / x;
            let a = adaptive_panels(&upper, &[1.0, 2.0, 10.0], &quad);
            let b = adaptive_panels(&lower, &[0.1, 0.5, 1.0], &quad);
            match (a, b) {
                (Ok(qa), Ok(qb)) => records.push(Record::Verify(VerifyRecord::equality_check(
                    "fold_identity".into(),
                    0.0,
                    qa.value,
                    qb.value,
                    qa.err_est + qb.err_est,
                    config.tol,
                ))),
                _ => {
                    failures += 1;
                    records.push(Record::Verify(VerifyRecord::failed(
                        "fold_identity".into(),
                        0.0,
                        0.0,
                        0.0,
                        0.0,
                    )));
                }
            }
        }

        CommandKind::VerifyHardy => {
            for p in polys {
                match verify_hardy(p, &quad) {
                    Ok(rec) => records.push(Record::Verify(rec)),
                    Err(Error::NonConvergence { best }) => {
                        failures += 1;
                        records.push(Record::Verify(VerifyRecord::failed(
                            p.spec_string(),
                            0.0,
                            hardy_sum(p),
                            PI * best.value,
                            PI * best.err_est.min(f64::MAX),
                        )));
                    }
                    Err(e) => return Err(e),
                }
            }
        }

        CommandKind::VerifyThm1 => {
            let grid = eta_grid(config.eta_grid);
            for p in polys {
                match verify_theorem1(p, &grid, &quad) {
                    Ok(sweep) => {
                        failures += sweep.numerics_failures;
                        records.extend(sweep.records.into_iter().map(Record::Verify));
                    }
                    Err(Error::NonConvergence { best }) => {
                        failures += 1;
                        records.push(Record::Verify(VerifyRecord::failed(
                            p.spec_string(),
                            0.0,
                            0.0,
                            PI * best.value,
                            PI * best.err_est.min(f64::MAX),
                        )));
                    }
                    Err(e) => return Err(e),
                }
            }
        }

        CommandKind::KernelSup => {
            for j in 1..=config.theta_grid {
                let theta = PI * j as f64 / config.theta_grid as f64;
                match kernel_integral(theta, &quad) {
                    Ok(q) => records.push(Record::Verify(VerifyRecord::bound_check(
                        "kernel".into(),
                        theta,
                        q.value,
                        PI,
                        q.err_est,
                    ))),
                    Err(Error::NonConvergence { best }) => {
                        failures += 1;
                        records.push(Record::Verify(VerifyRecord::failed(
                            "kernel".into(),
                            theta,
                            best.value,
                            PI,
                            best.err_est.min(f64::MAX),
                        )));
                    }
                    Err(e) => return Err(e),
                }
            }
        }

        CommandKind::ToeplitzCheck => {
            let h_corpus = corpus::h_corpus(config.seed, config.budget);
            for f in polys {
                let (lb, witness) = empirical_norm_lb_with_witness(f, &h_corpus);
                let witness_h = witness
                    .map(|i| h_corpus[i].spec_string())
                    .unwrap_or_default();
                match operator_bound_quad(f, &quad) {
                    Ok(q) => records.push(Record::Toeplitz(ToeplitzRecord {
                        f: f.spec_string(),
                        bound: q.value,
                        empirical_lb: lb,
                        witness_h,
                        pass: lb <= q.value * (1.0 + TOEPLITZ_PASS_RTOL) + q.err_est,
                    })),
                    Err(Error::NonConvergence { best }) => {
                        failures += 1;
                        records.push(Record::Toeplitz(ToeplitzRecord {
                            f: f.spec_string(),
                            bound: hinf_norm(f) + PI * best.value,
                            empirical_lb: lb,
                            witness_h,
                            pass: false,
                        }));
                    }
                    Err(e) => return Err(e),
                }
            }
        }

        CommandKind::ReconstructCheck => {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            let mut unit =
                move || (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
            for p in polys {
                let mut max_diff = 0.0f64;
                let mut cell_failed = false;
                for _ in 0..config.budget {
                    let z = Complex64::from_polar(0.9 * unit().sqrt(), 2.0 * PI * unit());
                    match reconstruct(p, z, &quad) {
                        Ok(value) => {
                            let diff = (value - p.eval(z)?).norm();
                            max_diff = max_diff.max(diff);
                        }
                        Err(Error::NonConvergence { .. }) => {
                            cell_failed = true;
                            break;
                        }
                        Err(e) => return Err(e),
                    }
                }
                if cell_failed {
                    failures += 1;
                    records.push(Record::Verify(VerifyRecord::failed(
                        p.spec_string(),
                        0.0,
                        max_diff,
                        config.tol,
                        0.0,
                    )));
                } else {
                    records.push(Record::Verify(VerifyRecord::bound_check(
                        p.spec_string(),
                        0.0,
                        max_diff,
                        config.tol,
                        0.0,
                    )));
                }
            }
        }

        CommandKind::Extremal => {
            let objective = match config.objective.as_deref().unwrap_or("hardy") {
                "thm1" => Objective::Thm1,
                "toeplitz" => Objective::Toeplitz,
                _ => Objective::Hardy,
            };
            let search_cfg = SearchConfig {
                budget: config.budget,
                seed: config.seed,
                eta_grid_size: config.eta_grid,
                ..SearchConfig::default()
            };
            let family = config.family.as_deref().unwrap_or("logfam-span");
            let outcome = match family {
                "monomial" => search(&MonomialFamily { max_degree: 32 }, objective, &search_cfg),
                "free" => search(&FreeCoeffFamily { dim: config.dim }, objective, &search_cfg),
                _ => search(&LogSpanFamily { dim: config.dim }, objective, &search_cfg),
            };
            match outcome {
                Ok(state) => records.push(Record::Search(SearchRecord::from(&state))),
                Err(Error::CeilingExceeded { objective, ceiling }) => {
                    failures += 1;
                    records.push(Record::Search(SearchRecord {
                        family: family.to_string(),
                        best_params: Vec::new(),
                        objective,
                        ceiling,
                        converged: false,
                        trace_len: 0,
                    }));
                }
                Err(e) => return Err(e),
            }
        }
    }

    Ok((records, failures))
}

fn config_echo(config: &RunConfig) -> serde_json::Value {
    serde_json::json!({
        "specs": config.specs,
        "eta_grid": config.eta_grid,
        "theta_grid": config.theta_grid,
        "tol": config.tol,
        "seed": config.seed,
        "format": config.format,
        "out": config.out,
        "budget": config.budget,
        "family": config.family,
        "dim": config.dim,
        "objective": config.objective,
    })
}

/// Execute a resolved configuration and write its report.
pub fn run(config: &RunConfig, polys: &[TaylorPoly]) -> i32 {
    match execute(config, polys) {
        Ok((records, failures)) => {
            let report = Report::new(config.command.as_str(), config_echo(config), records);
            let payload = match config.format {
                OutputFormat::Json => report.to_json(),
                OutputFormat::Csv => report.to_csv(),
            };
            if let Some(path) = &config.out {
                if let Err(e) = std::fs::write(path, payload) {
                    eprintln!("error: cannot write report to {path}: {e}");
                    return EXIT_USAGE;
                }
            } else {
                print!("{payload}");
            }
            if failures > 0 {
                EXIT_NUMERICS
            } else if !report.all_pass() {
                EXIT_CHECK_FAILED
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_NUMERICS
        }
    }
}

/// Entry point used by the binary: parse, resolve, run, return the exit code.
pub fn cli_main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    match resolve(cli) {
        Ok((config, polys)) => run(&config, &polys),
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_spec_poly_forms() {
        let p = parse_spec("poly:0,1").unwrap();
        assert_eq!(p, TaylorPoly::from_real(&[0.0, 1.0]));
        assert_eq!(p.spec_string(), "poly:0,1");

        let p = parse_spec("poly:1+2j,0,3").unwrap();
        assert_eq!(
            p.coeffs(),
            &[
                Complex64::new(1.0, 2.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(3.0, 0.0)
            ]
        );

        assert!(parse_spec("poly:").unwrap().is_zero());
        let p = parse_spec("poly:-1.5j,2-1j,1e-3").unwrap();
        assert_eq!(p.coeff(0), Complex64::new(0.0, -1.5));
        assert_eq!(p.coeff(1), Complex64::new(2.0, -1.0));
        assert_eq!(p.coeff(2), Complex64::new(1e-3, 0.0));
    }

    #[test]
    fn parse_spec_logfam_and_random() {
        assert_eq!(
            parse_spec("logfam:2").unwrap(),
            TaylorPoly::from_real(&[0.0, 1.0, 0.5])
        );
        let r = parse_spec("random:8,42").unwrap();
        assert_eq!(r, TaylorPoly::random_poly(8, 42));
        assert_eq!(r.spec_string(), "random:8,42");
    }

    #[test]
    fn parse_spec_reports_positions() {
        match parse_spec("poly:1,x,3") {
            Err(Error::SpecParse { pos, .. }) => assert_eq!(pos, 7),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_spec("wavelet:3") {
            Err(Error::SpecParse { pos, .. }) => assert_eq!(pos, 0),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_spec("random:4") {
            Err(Error::SpecParse { pos, .. }) => assert_eq!(pos, 8),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_spec("logfam:0").is_err());
        assert!(parse_spec("poly:inf").is_err());
    }

    #[test]
    fn spec_grammar_round_trips_canonical_forms() {
        for spec in ["poly:1+2j,0,3", "poly:-1.5j", "poly:0.25,2-1j", "poly:"] {
            let p = parse_spec(spec).unwrap();
            assert_eq!(p.canonical_spec(), spec, "round trip of {spec}");
            let q = parse_spec(&p.canonical_spec()).unwrap();
            assert_eq!(p, q);
        }
    }

    #[test]
    fn exponent_signs_do_not_split_literals() {
        let p = parse_spec("poly:1e+2+3j,1e-3j").unwrap();
        assert_eq!(p.coeff(0), Complex64::new(100.0, 3.0));
        assert_eq!(p.coeff(1), Complex64::new(0.0, 1e-3));
    }
}
