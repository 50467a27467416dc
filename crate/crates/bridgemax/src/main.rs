//! Command-line front end: CDF evaluation (`cdf`), exact identity
//! verification (`verify`), Monte Carlo sampling (`simulate`) and
//! theory-vs-empirics comparisons (`compare`).
//!
//! Exit codes: 0 success, 1 assertion/comparison failure, 2 usage error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::rational::BigRational;
use serde::Serialize;

use bridgemax::exactcheck::{
    auxiliary_identities, exact_sqt_is_a, exact_st_is_identity, exact_ts_is_f,
    lemma1_identities, lemma2_identities, IdentityReport,
};
use bridgemax::format::{
    batch_to_csv, batch_to_json, curve_to_csv, curve_to_json, fmt_f64,
};
use bridgemax::fredholm::{
    ks_one_sample, ks_two_sample, limit_cdf_hermite, limit_cdf_laguerre, lue_cdf,
    restricted_max_cdf, CdfCurve, CurveMeta,
};
use bridgemax::montecarlo::{
    sample_antige_top, sample_dyson_stationary_top, sample_nibb_restricted_max,
    sample_wishart_loe_top, MatrixBridgeConfig, SampleBatch,
};
use bridgemax::parse::{parse_grid, parse_rational, GridSpec};
use bridgemax::{Error, Result};

#[derive(Parser)]
#[command(
    name = "bridgemax",
    about = "Distribution of the restricted maximum of non-intersecting Brownian bridges",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a CDF on a grid and write it as CSV or JSON.
    Cdf {
        #[command(subcommand)]
        model: CdfModel,
    },
    /// Run the exact rational identity sweeps and write a JSON report.
    Verify(VerifyArgs),
    /// Draw Monte Carlo samples from one of the matrix models.
    Simulate {
        #[command(subcommand)]
        model: SimulateModel,
    },
    /// Compare a sampler against the matching theoretical CDF.
    Compare {
        #[command(subcommand)]
        pairing: ComparePairing,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum LimitMethod {
    Hermite,
    Laguerre,
}

#[derive(Args)]
struct OutputArgs {
    /// Output file; stdout when omitted. Relative paths are resolved
    /// against $BRIDGEMAX_OUT_DIR when that variable is set.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: OutputFormat,
}

#[derive(Subcommand)]
enum CdfModel {
    /// CDF of the maximum of the top bridge over [0, p], N bridges.
    RestrictedMax {
        #[arg(short = 'N', long = "N")]
        n: usize,
        #[arg(long)]
        p: f64,
        /// Evaluation grid min:max:points (default scales with N and p).
        #[arg(long)]
        grid: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Small-p limit law, via the Hermite or the Laguerre determinant.
    Limit {
        #[arg(short = 'N', long = "N")]
        n: usize,
        #[arg(long, value_enum, default_value = "hermite")]
        method: LimitMethod,
        #[arg(long)]
        grid: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// CDF of the largest charge of the generalized Laguerre ensemble.
    Lue {
        #[arg(long)]
        m: usize,
        #[arg(long, allow_hyphen_values = true)]
        a: f64,
        #[arg(long)]
        grid: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest matrix size for the matrix identity sweeps.
    #[arg(long = "N-max", default_value_t = 8)]
    n_max: usize,
    /// Check the matrix identities at this rational r only (e.g. `1/2`);
    /// default sweeps r in {0, 1/2, 1, 7/3}.
    #[arg(long, allow_hyphen_values = true)]
    r: Option<String>,
    /// Largest index for the summation identity sweeps.
    #[arg(long, default_value_t = 12)]
    lemma_max: usize,
    /// Largest degree for the auxiliary polynomial identity sweeps.
    #[arg(long, default_value_t = 10)]
    aux_max: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Subcommand)]
enum SimulateModel {
    /// Grid maxima of the top eigenvalue of a Hermitian Brownian bridge.
    Nibb {
        #[arg(short = 'N', long = "N")]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 4096)]
        steps: usize,
        #[command(flatten)]
        sim: SimArgs,
    },
    /// Top singular value of an antisymmetrized Gaussian matrix.
    Antige {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        sim: SimArgs,
    },
    /// Top eigenvalue of a Wishart matrix X X^T, X of size N x m.
    Wishart {
        #[arg(short = 'N', long = "N")]
        n: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        sim: SimArgs,
    },
    /// sup over grid times of lambda_max(t)/cosh(t) for a stationary
    /// matrix Ornstein-Uhlenbeck process.
    Dyson {
        #[arg(short = 'N', long = "N")]
        n: usize,
        /// Time grid min:max:points.
        #[arg(long, default_value = "-6:0:512", allow_hyphen_values = true)]
        times: String,
        #[command(flatten)]
        sim: SimArgs,
    },
}

#[derive(Args)]
struct SimArgs {
    #[arg(long, default_value_t = 10000)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Subcommand)]
enum ComparePairing {
    /// sqrt(2) x antisymmetric-ensemble top values (size N+1) against the
    /// N-path limit law.
    Theorem1 {
        #[arg(short = 'N', long = "N")]
        n: usize,
        #[arg(long, default_value_t = 0.02)]
        threshold: f64,
        #[command(flatten)]
        cmp: CompareArgs,
    },
    /// Bridge maxima scaled by 1/sqrt(p) at small p against the limit law.
    Corollary1Smallp {
        #[arg(short = 'N', long = "N")]
        n: usize,
        #[arg(long, default_value_t = 1e-3)]
        p: f64,
        #[arg(long, default_value_t = 8192)]
        steps: usize,
        #[arg(long, default_value_t = 0.03)]
        threshold: f64,
        #[command(flatten)]
        cmp: CompareArgs,
    },
    /// Two-sample check: 4 M_N(1)^2 against Wishart N x (N+1) top values.
    NibmLoe {
        #[arg(short = 'N', long = "N")]
        n: usize,
        #[arg(long, default_value_t = 4096)]
        steps: usize,
        #[arg(long, default_value_t = 0.03)]
        threshold: f64,
        #[command(flatten)]
        cmp: CompareArgs,
    },
    /// Bridge maxima at moderate p against the finite-N determinant CDF.
    Prop2Selfcheck {
        #[arg(short = 'N', long = "N")]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 4096)]
        steps: usize,
        #[arg(long, default_value_t = 0.02)]
        threshold: f64,
        #[command(flatten)]
        cmp: CompareArgs,
    },
}

#[derive(Args)]
struct CompareArgs {
    #[arg(long, default_value_t = 10000)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Serialize)]
struct CompareReport {
    comparison: String,
    parameters: String,
    count: usize,
    seed: u64,
    ks: f64,
    threshold: f64,
    pass: bool,
}

fn resolve_out(path: &Path) -> PathBuf {
    if path.is_relative() {
        if let Some(dir) = std::env::var_os("BRIDGEMAX_OUT_DIR") {
            return PathBuf::from(dir).join(path);
        }
    }
    path.to_path_buf()
}

fn emit(output: &OutputArgs, text: &str) -> Result<()> {
    match &output.out {
        Some(path) => std::fs::write(resolve_out(path), text)?,
        None => print!("{text}"),
    }
    Ok(())
}

/// Default grid endpoint far enough into the upper tail of the N-path limit
/// law that the CDF exceeds 1 - 1e-6 there.
fn limit_grid_end(n: usize) -> f64 {
    (2.0 * n as f64).sqrt() + 6.0
}

fn grid_or_default(spec: &Option<String>, default: GridSpec) -> Result<GridSpec> {
    match spec {
        Some(s) => parse_grid(s),
        None => Ok(default),
    }
}

fn run_cdf(model: CdfModel) -> Result<()> {
    let (curve, output) = match model {
        CdfModel::RestrictedMax { n, p, grid, output } => {
            if !(p > 0.0 && p < 1.0) {
                return Err(Error::Config(format!("p must lie in (0, 1), got {p}")));
            }
            let grid = grid_or_default(
                &grid,
                GridSpec::new(0.0, p.sqrt() * limit_grid_end(n), 121)?,
            )?;
            let meta = CurveMeta {
                model: format!("restricted-max(N={n},p={})", fmt_f64(p)),
                method: "determinant".into(),
            };
            (
                CdfCurve::from_fn(grid.values(), meta, |r| restricted_max_cdf(n, p, r))?,
                output,
            )
        }
        CdfModel::Limit { n, method, grid, output } => {
            let grid = grid_or_default(&grid, GridSpec::new(0.0, limit_grid_end(n), 121)?)?;
            let (name, f): (&str, fn(usize, f64) -> Result<f64>) = match method {
                LimitMethod::Hermite => ("hermite", limit_cdf_hermite),
                LimitMethod::Laguerre => ("laguerre", limit_cdf_laguerre),
            };
            let meta = CurveMeta { model: format!("limit(N={n})"), method: name.into() };
            (CdfCurve::from_fn(grid.values(), meta, |x| f(n, x))?, output)
        }
        CdfModel::Lue { m, a, grid, output } => {
            if m == 0 || !(a > -1.0) {
                return Err(Error::Config(format!(
                    "LUE requires m >= 1 and a > -1, got m={m}, a={a}"
                )));
            }
            let grid = grid_or_default(
                &grid,
                GridSpec::new(0.0, 4.0 * m as f64 + 2.0 * a.max(0.0) + 30.0, 121)?,
            )?;
            let meta = CurveMeta {
                model: format!("lue(m={m},a={})", fmt_f64(a)),
                method: "determinant".into(),
            };
            (CdfCurve::from_fn(grid.values(), meta, |x| lue_cdf(m, a, x))?, output)
        }
    };
    let text = match output.format {
        OutputFormat::Csv => curve_to_csv(&curve)?,
        OutputFormat::Json => curve_to_json(&curve)?,
    };
    emit(&output, &text)
}

fn run_verify(args: VerifyArgs) -> Result<bool> {
    let r_values: Vec<BigRational> = match &args.r {
        Some(s) => vec![parse_rational(s)?],
        None => ["0", "1/2", "1", "7/3"]
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<_>>()?,
    };
    let mut reports: Vec<IdentityReport> = Vec::new();
    let record = |reports: &mut Vec<IdentityReport>,
                  identity: &str,
                  parameters: String,
                  pass: bool| {
        reports.push(IdentityReport {
            identity: identity.into(),
            parameters,
            pass,
            counterexample: if pass { None } else { Some("see parameters".into()) },
        });
    };

    for r in &r_values {
        for n in 1..=args.n_max {
            let params = format!("N={n}, r={r}");
            record(&mut reports, "2TS=F", params.clone(), exact_ts_is_f(n, r)?);
            record(&mut reports, "ST=I", params.clone(), exact_st_is_identity(n, r)?);
            record(&mut reports, "2SRT=A-centered", params, exact_sqt_is_a(n, r)?);
        }
    }
    for m in 0..=args.lemma_max as i64 {
        for d in -m..=6 {
            record(
                &mut reports,
                "binomial-Hermite sums",
                format!("m={m}, d={d}"),
                lemma1_identities(m, d)?,
            );
        }
    }
    let lm = args.lemma_max;
    let mut lemma2_ok = true;
    for t in 0..=lm {
        for m in 0..=lm {
            for k in 0..=lm {
                for h in 0..=lm {
                    if !lemma2_identities(t, m, k, h) {
                        lemma2_ok = false;
                    }
                }
            }
        }
    }
    record(
        &mut reports,
        "alternating binomial sums",
        format!("t,m,k,h <= {lm}"),
        lemma2_ok,
    );
    reports.extend(auxiliary_identities(args.aux_max)?);

    let all_pass = reports.iter().all(|r| r.pass);
    let text = serde_json::to_string_pretty(&reports)
        .map_err(|e| Error::Parse(e.to_string()))?;
    emit(&args.output, &text)?;
    Ok(all_pass)
}

fn write_batch(batch: &SampleBatch, output: &OutputArgs) -> Result<()> {
    let text = match output.format {
        OutputFormat::Csv => batch_to_csv(batch)?,
        OutputFormat::Json => batch_to_json(batch)?,
    };
    emit(output, &text)
}

fn run_simulate(model: SimulateModel) -> Result<()> {
    match model {
        SimulateModel::Nibb { n, p, steps, sim } => {
            let cfg = MatrixBridgeConfig { n, p, steps, seed: sim.seed };
            let batch = sample_nibb_restricted_max(&cfg, sim.count)?;
            write_batch(&batch, &sim.output)
        }
        SimulateModel::Antige { n, sim } => {
            let batch = sample_antige_top(n, sim.count, sim.seed)?;
            write_batch(&batch, &sim.output)
        }
        SimulateModel::Wishart { n, m, sim } => {
            let batch = sample_wishart_loe_top(n, m, sim.count, sim.seed)?;
            write_batch(&batch, &sim.output)
        }
        SimulateModel::Dyson { n, times, sim } => {
            let grid = parse_grid(&times)?;
            let batch = sample_dyson_stationary_top(n, &grid.values(), sim.count, sim.seed)?;
            write_batch(&batch, &sim.output)
        }
    }
}

fn run_compare(pairing: ComparePairing) -> Result<bool> {
    let (report, output) = match pairing {
        ComparePairing::Theorem1 { n, threshold, cmp } => {
            if n == 0 {
                return Err(Error::Config("N must be >= 1".into()));
            }
            let batch = sample_antige_top(n + 1, cmp.count, cmp.seed)?;
            let scaled: Vec<f64> = batch.values.iter().map(|v| v * 2f64.sqrt()).collect();
            let ks = ks_one_sample(&scaled, |x| limit_cdf_laguerre(n, x).unwrap_or(0.0))?;
            (
                CompareReport {
                    comparison: "theorem1".into(),
                    parameters: format!("N={n}, ensemble size {}", n + 1),
                    count: cmp.count,
                    seed: cmp.seed,
                    ks,
                    threshold,
                    pass: ks < threshold,
                },
                cmp.output,
            )
        }
        ComparePairing::Corollary1Smallp { n, p, steps, threshold, cmp } => {
            let cfg = MatrixBridgeConfig { n, p, steps, seed: cmp.seed };
            let batch = sample_nibb_restricted_max(&cfg, cmp.count)?;
            let scaled: Vec<f64> = batch.values.iter().map(|v| v / p.sqrt()).collect();
            let ks = ks_one_sample(&scaled, |x| limit_cdf_laguerre(n, x).unwrap_or(0.0))?;
            (
                CompareReport {
                    comparison: "corollary1-smallp".into(),
                    parameters: format!("N={n}, p={}, steps={steps}", fmt_f64(p)),
                    count: cmp.count,
                    seed: cmp.seed,
                    ks,
                    threshold,
                    pass: ks < threshold,
                },
                cmp.output,
            )
        }
        ComparePairing::NibmLoe { n, steps, threshold, cmp } => {
            let cfg = MatrixBridgeConfig { n, p: 1.0, steps, seed: cmp.seed };
            let bridges = sample_nibb_restricted_max(&cfg, cmp.count)?;
            let squared: Vec<f64> =
                bridges.values.iter().map(|v| 4.0 * v * v).collect();
            let wishart =
                sample_wishart_loe_top(n, n + 1, cmp.count, cmp.seed.wrapping_add(1))?;
            let ks = ks_two_sample(&squared, &wishart.values)?;
            (
                CompareReport {
                    comparison: "nibm-loe".into(),
                    parameters: format!("N={n}, Wishart N x {}, steps={steps}", n + 1),
                    count: cmp.count,
                    seed: cmp.seed,
                    ks,
                    threshold,
                    pass: ks < threshold,
                },
                cmp.output,
            )
        }
        ComparePairing::Prop2Selfcheck { n, p, steps, threshold, cmp } => {
            let cfg = MatrixBridgeConfig { n, p, steps, seed: cmp.seed };
            let batch = sample_nibb_restricted_max(&cfg, cmp.count)?;
            let ks = ks_one_sample(&batch.values, |r| {
                restricted_max_cdf(n, p, r).unwrap_or(0.0)
            })?;
            (
                CompareReport {
                    comparison: "prop2-selfcheck".into(),
                    parameters: format!("N={n}, p={}, steps={steps}", fmt_f64(p)),
                    count: cmp.count,
                    seed: cmp.seed,
                    ks,
                    threshold,
                    pass: ks < threshold,
                },
                cmp.output,
            )
        }
    };
    let text = serde_json::to_string_pretty(&report)
        .map_err(|e| Error::Parse(e.to_string()))?;
    emit(&output, &text)?;
    if output.out.is_some() {
        println!(
            "{}: KS = {:.5} (threshold {}) -> {}",
            report.comparison,
            report.ks,
            report.threshold,
            if report.pass { "pass" } else { "FAIL" }
        );
    }
    Ok(report.pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Cdf { model } => run_cdf(model).map(|()| true),
        Command::Verify(args) => run_verify(args),
        Command::Simulate { model } => run_simulate(model).map(|()| true),
        Command::Compare { pairing } => run_compare(pairing),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
