//! Command-line front end: `bounds`, `octagon`, `check`, `plot`, `ensemble`.
//!
//! Exit codes: 0 success, 2 input error, 3 zero operator, 4 verification
//! failure, 5 I/O failure, 1 anything else.

pub mod ensemble;
pub mod io;
pub mod svg;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bounds::{bound_classical, bound_kittaneh_mean, bound_kittaneh_power, bound_report, BoundReport};
use crate::enclosure::{octagon_closed_form, EnclosureRegion};
use crate::error::Error;
use crate::linalg::{cartesian_split, norm, ComplexMatrix, NormKind};
use crate::oracle::{
    boundary_sweep, convex_hull, distance_outside, fov_sample, support_function, tangency_check, TangencyReport,
    DEFAULT_ANGLES, DEFAULT_SAMPLES, DEFAULT_TOL,
};
use ensemble::{run_ensemble, to_csv, EnsembleConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_ZERO_OPERATOR: i32 = 3;
pub const EXIT_VERIFICATION: i32 = 4;
pub const EXIT_IO: i32 = 5;

#[derive(Debug)]
pub enum CliError {
    Input(String),
    ZeroOperator,
    Verification(String),
    Io(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::ZeroOperator => EXIT_ZERO_OPERATOR,
            CliError::Verification(_) => EXIT_VERIFICATION,
            CliError::Io(_) => EXIT_IO,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::ZeroOperator => write!(f, "{}", Error::ZeroOperator),
            CliError::Verification(m) => write!(f, "verification failed: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
            CliError::Internal(m) => write!(f, "error: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::InvalidMatrix(_) | Error::Dimension { .. } => CliError::Input(e.to_string()),
            Error::ZeroOperator => CliError::ZeroOperator,
            other => CliError::Internal(other.to_string()),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "numrange", version, about = "Norm-based enclosures of the numerical range")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Norm used to size the enclosure.
    #[arg(long, global = true, value_enum, default_value_t = NormArg::Spectral)]
    pub norm: NormArg,

    /// Seed for all randomized steps.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,

    /// Number of boundary sweep angles.
    #[arg(long, global = true, default_value_t = DEFAULT_ANGLES)]
    pub angles: usize,

    /// Number of random interior samples.
    #[arg(long, global = true, default_value_t = DEFAULT_SAMPLES)]
    pub samples: usize,

    /// Relative verification tolerance, scaled by 1 + ‖T‖_σ.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormArg {
    Spectral,
    One,
    Inf,
    Frobenius,
}

impl From<NormArg> for NormKind {
    fn from(n: NormArg) -> Self {
        match n {
            NormArg::Spectral => NormKind::Spectral,
            NormArg::One => NormKind::InducedOne,
            NormArg::Inf => NormKind::InducedInf,
            NormArg::Frobenius => NormKind::Frobenius,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the four numerical-radius bounds as JSON.
    Bounds { file: PathBuf },
    /// Print the polygon (or segment) enclosing the numerical range.
    Octagon { file: PathBuf },
    /// Verify containment and tangency against the field-of-values oracle.
    Check {
        file: PathBuf,
        /// Scale the enclosure before checking (negative control).
        #[arg(long, hide = true)]
        debug_scale_region: Option<f64>,
    },
    /// Write an SVG of the range, the enclosure and the bound circles.
    Plot { file: PathBuf, output: PathBuf },
    /// Mean bound ratios over a seeded random ensemble.
    Ensemble {
        /// Matrix sizes, comma separated.
        #[arg(long, value_delimiter = ',', default_values_t = vec![10usize, 100])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Half-width of the uniform entry distribution.
        #[arg(long = "range", default_value_t = 4.0)]
        entry_range: f64,
        /// Also run m = 500 and m = 1000.
        #[arg(long)]
        large: bool,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
    },
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code. Command output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => {
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_IO;
            }
            EXIT_OK
        }
        Err((text, e)) => {
            if let Some(text) = text {
                let _ = out.write_all(text.as_bytes());
            }
            let _ = writeln!(err, "{e}");
            e.exit_code()
        }
    }
}

type CommandResult = Result<String, (Option<String>, CliError)>;

fn plain<T>(r: Result<T, impl Into<CliError>>) -> Result<T, (Option<String>, CliError)> {
    r.map_err(|e| (None, e.into()))
}

pub fn execute(cli: &Cli) -> CommandResult {
    let g = &cli.global;
    match &cli.command {
        Command::Bounds { file } => {
            let t = plain(io::load_matrix(file))?;
            let report = plain(bound_report(&t))?;
            Ok(pretty(&bounds_json(&report)))
        }
        Command::Octagon { file } => {
            let t = plain(io::load_matrix(file))?;
            let kind: NormKind = g.norm.into();
            let region = plain(octagon_closed_form(&cartesian_split(&t), kind))?;
            Ok(pretty(&region_json(&region, kind)))
        }
        Command::Check {
            file,
            debug_scale_region,
        } => {
            let t = plain(io::load_matrix(file))?;
            check(&t, g, *debug_scale_region)
        }
        Command::Plot { file, output } => {
            let t = plain(io::load_matrix(file))?;
            let svg = plain(plot_svg(&t, g))?;
            std::fs::write(output, svg).map_err(|e| (None, CliError::Io(format!("{}: {e}", output.display()))))?;
            Ok(String::new())
        }
        Command::Ensemble {
            sizes,
            trials,
            entry_range,
            large,
            format,
        } => {
            let mut sizes = sizes.clone();
            if *large {
                sizes.extend([500, 1000]);
            }
            let config = EnsembleConfig {
                sizes,
                trials: *trials,
                seed: g.seed,
                entry_range: *entry_range,
            };
            let rows = plain(run_ensemble(&config))?;
            Ok(match format {
                TableFormat::Json => pretty(&json!({ "config": config, "rows": rows })),
                TableFormat::Csv => to_csv(&rows),
            })
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

/// Rounds to 12 significant digits.
pub fn sig12(v: f64) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return v;
    }
    // `+ 0.0` folds negative zero.
    format!("{v:.11e}").parse::<f64>().unwrap_or(v) + 0.0
}

pub fn bounds_json(r: &BoundReport) -> Value {
    json!({
        "spectral_norm": sig12(r.spectral_norm),
        "classical": sig12(r.classical),
        "kittaneh_power": sig12(r.kittaneh_power),
        "kittaneh_mean": sig12(r.kittaneh_mean),
        "corollary": sig12(r.corollary),
        "ratios": {
            "kittaneh_power": sig12(r.ratios.kittaneh_power),
            "kittaneh_mean": sig12(r.ratios.kittaneh_mean),
            "corollary": sig12(r.ratios.corollary),
        },
    })
}

pub fn region_json(region: &EnclosureRegion, kind: NormKind) -> Value {
    let vertices: Vec<[f64; 2]> = region
        .vertices()
        .into_iter()
        .map(|(x, y)| [sig12(x), sig12(y)])
        .collect();
    match region {
        EnclosureRegion::Segment { endpoint } => json!({
            "kind": region.kind_name(),
            "norm": kind.name(),
            "endpoint": [sig12(endpoint.re), sig12(endpoint.im)],
            "vertices": vertices,
        }),
        EnclosureRegion::Polygon { .. } => json!({
            "kind": region.kind_name(),
            "norm": kind.name(),
            "vertices": vertices,
        }),
    }
}

fn tangency_json(r: &TangencyReport) -> Value {
    json!({
        "direction": [sig12(r.direction.0), sig12(r.direction.1)],
        "offset": sig12(r.offset),
        "support_forward": sig12(r.support_forward),
        "support_backward": sig12(r.support_backward),
        "tangent": r.tangent,
    })
}

/// Tangency of a degenerate segment: at least one endpoint is on the
/// boundary of the closure of `W(T)`.
fn segment_tangency(
    t: &ComplexMatrix,
    endpoint: num_complex::Complex64,
    tol: f64,
) -> crate::Result<Vec<TangencyReport>> {
    if endpoint.norm() == 0.0 {
        return Ok(Vec::new());
    }
    let pair = cartesian_split(t);
    let theta = endpoint.arg();
    let forward = support_function(&pair, theta)?.h;
    let backward = support_function(&pair, theta + std::f64::consts::PI)?.h;
    let offset = endpoint.norm();
    Ok(vec![TangencyReport {
        direction: (theta.cos(), theta.sin()),
        offset,
        support_forward: forward,
        support_backward: backward,
        tangent: (forward.max(backward) - offset).abs() <= tol,
    }])
}

fn check(t: &ComplexMatrix, g: &GlobalOpts, scale: Option<f64>) -> CommandResult {
    let kind: NormKind = g.norm.into();
    let pair = cartesian_split(t);
    let spectral = plain(norm(t, NormKind::Spectral))?;
    let tol = g.tol * (1.0 + spectral);
    let mut region = plain(octagon_closed_form(&pair, kind))?;
    if let Some(f) = scale {
        region = region.scaled(f);
    }
    let sample = plain(fov_sample(t, &pair, g.angles, g.samples, g.seed))?;
    let max_violation = sample
        .points()
        .map(|p| distance_outside(&region, p))
        .fold(0.0, f64::max);
    let containment = max_violation <= tol;

    let tangency = if kind == NormKind::Spectral {
        let reports = match &region {
            EnclosureRegion::Polygon { .. } => plain(tangency_check(&pair, &region, tol))?,
            EnclosureRegion::Segment { endpoint } => plain(segment_tangency(t, *endpoint, tol))?,
        };
        Some(reports)
    } else {
        None
    };
    let tangency_ok = tangency.as_ref().map(|r| r.iter().all(|x| x.tangent));

    let report = json!({
        "kind": region.kind_name(),
        "norm": kind.name(),
        "tolerance": tol,
        "points": sample.boundary.len() + sample.interior.len(),
        "max_violation": max_violation,
        "containment": containment,
        "oracle_radius": sig12(sample.oracle_radius),
        "tangency": tangency.as_ref().map(|r| r.iter().map(tangency_json).collect::<Vec<_>>()),
        "tangency_ok": tangency_ok,
    });
    let text = pretty(&report);
    if !containment {
        return Err((
            Some(text),
            CliError::Verification(format!("containment violated by {max_violation:e} (tolerance {tol:e})")),
        ));
    }
    if tangency_ok == Some(false) {
        return Err((Some(text), CliError::Verification("tangency check failed".into())));
    }
    Ok(text)
}

pub fn plot_svg(t: &ComplexMatrix, g: &GlobalOpts) -> crate::Result<String> {
    let pair = cartesian_split(t);
    let boundary: Vec<_> = boundary_sweep(&pair, g.angles)?.into_iter().map(|b| b.point).collect();
    let data = svg::PlotData {
        range_hull: convex_hull(&boundary),
        region: octagon_closed_form(&pair, g.norm.into())?,
        classical: bound_classical(t)?,
        kittaneh_power: bound_kittaneh_power(t)?,
        kittaneh_mean: bound_kittaneh_mean(t)?,
    };
    Ok(svg::render(&data))
}
