//! Command-line front end for the isoperim library.
//!
//! Subcommands: `profile` (evaluate a profile at a volume or over a range),
//! `bound` (evaluate the certified product bounds or the generic
//! constructors), `verify` (run registered claims), `figure` (emit the six
//! named curve pairs), and `yamabe` (constant reports).
//!
//! Exit codes: 0 on success, 1 when a requested verification claim fails,
//! 2 on usage or domain errors.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use isoperim::bounds::{
    backward_extension, certified_bound, forward_extension, tube_lower_bound,
};
use isoperim::profiles::{
    cylinder_family, euclidean_profile, sphere_profile, ProfileFn, SphereGeometry,
};
use isoperim::verify::{claim_ids, figure_data, figure_spec, run_claim, VerificationReport};
use isoperim::yamabe::constant_reports;
use isoperim::{Error, ProductId};

#[derive(Parser)]
#[command(
    name = "isoperim",
    version,
    about = "Isoperimetric profiles, certified product lower bounds, inequality verification, \
             figure data, and Yamabe ratio reports"
)]
struct Cli {
    /// Requested tolerance, echoed in output metadata for reproducibility
    /// (the built-in checks run at their fixed documented tolerances).
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,

    /// Grid size for sampled outputs and verification claims.
    #[arg(long, global = true, default_value_t = 2048)]
    samples: usize,

    /// Resolution of the cylinder ball-family construction grid.
    #[arg(long = "eta-grid", global = true, default_value_t = 512)]
    eta_grid: usize,

    /// Output format: `json` (structured, with config echo) or `csv`
    /// (curve rows `v,lhs,rhs,margin`; reports print as text lines).
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write output to this path instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an isoperimetric profile at one volume or over a range.
    Profile(ProfileArgs),
    /// Evaluate certified product bounds or the generic bound constructors.
    Bound(BoundArgs),
    /// Run registered verification claims.
    Verify(VerifyArgs),
    /// Emit the curve pair of one of the six named figures.
    Figure(FigureArgs),
    /// Report Yamabe ratios and named constants.
    Yamabe(YamabeArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Space {
    Euclidean,
    Sphere,
    Cylinder,
}

#[derive(Args)]
struct ProfileArgs {
    /// Model space: euclidean R^dim, sphere S^dim, or the cylinder S^dim x R.
    #[arg(long, value_enum)]
    space: Space,

    /// Dimension of the named factor (ambient dimension is dim for euclidean
    /// and sphere, dim + 1 for cylinder).
    #[arg(long)]
    dim: u32,

    /// Metric scale factor mu multiplying the round metric.
    #[arg(long, default_value_t = 1.0)]
    scale: f64,

    /// Volume for a single evaluation.
    #[arg(long, conflicts_with_all = ["from", "to"])]
    volume: Option<f64>,

    /// Start of a sampled volume range (requires --to).
    #[arg(long, requires = "to")]
    from: Option<f64>,

    /// End of a sampled volume range (requires --from).
    #[arg(long, requires = "from")]
    to: Option<f64>,
}

#[derive(Args)]
struct BoundArgs {
    /// Evaluate the certified bound of a named product (s2xr2, s3xr2,
    /// s2xr3); requires --volume.
    #[arg(long)]
    product: Option<String>,

    /// Volume at which to evaluate the product bound.
    #[arg(long)]
    volume: Option<f64>,

    /// Construct the tube-comparison bound; requires --vol-m, --n, --alpha.
    #[arg(long)]
    tube: bool,

    /// Volume of the compact factor (tube mode).
    #[arg(long = "vol-m")]
    vol_m: Option<f64>,

    /// Dimension of the compact factor whose round-sphere profile serves as
    /// the concave factor bound (tube mode).
    #[arg(long = "factor-dim", default_value_t = 2)]
    factor_dim: u32,

    /// Euclidean factor dimension (tube and forward modes).
    #[arg(long)]
    n: Option<u32>,

    /// Tube parameter alpha in (0, 1).
    #[arg(long)]
    alpha: Option<f64>,

    /// Construct a forward power-law extension; requires --x0, --y0, --n.
    #[arg(long)]
    forward: bool,

    /// Certified pair volume (forward mode).
    #[arg(long)]
    x0: Option<f64>,

    /// Certified pair area (forward mode).
    #[arg(long)]
    y0: Option<f64>,

    /// Construct a backward scaled-reference extension against the unit
    /// sphere of the total dimension; requires --v0, --k, --total-dim.
    #[arg(long)]
    backward: bool,

    /// Anchor volume (backward mode).
    #[arg(long)]
    v0: Option<f64>,

    /// Anchor coefficient k with I(v0) > k v0^((d-1)/d) (backward mode).
    #[arg(long)]
    k: Option<f64>,

    /// Total dimension d of the product (backward mode).
    #[arg(long = "total-dim")]
    total_dim: Option<u32>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run one registered claim by id.
    #[arg(long, conflicts_with = "all")]
    claim: Option<String>,

    /// Run every registered claim.
    #[arg(long)]
    all: bool,
}

#[derive(Args)]
struct FigureArgs {
    /// Figure id, 1 through 6.
    #[arg(long)]
    id: u8,
}

#[derive(Args)]
struct YamabeArgs {
    /// Report every named constant (default when --product is absent).
    #[arg(long)]
    all: bool,

    /// Restrict to the ratio entries of one product (s2xr2, s3xr2, s2xr3).
    #[arg(long, conflicts_with = "all")]
    product: Option<String>,
}

#[derive(Serialize)]
struct ConfigEcho {
    tol: f64,
    samples: usize,
    eta_grid: usize,
}

#[derive(Serialize)]
struct Envelope<T: Serialize> {
    config: ConfigEcho,
    result: T,
}

/// Decimal notation with 12 significant digits (no exponent), as the CSV
/// contract requires.
fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0.00000000000".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

#[derive(Serialize)]
struct CurveRow {
    v: f64,
    lhs: f64,
    rhs: f64,
    margin: f64,
}

fn csv_table(rows: &[CurveRow]) -> String {
    let mut out = String::from("v,lhs,rhs,margin\n");
    for row in rows {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            sig12(row.v),
            sig12(row.lhs),
            sig12(row.rhs),
            sig12(row.margin)
        );
    }
    out
}

enum Outcome {
    Success(String),
    VerificationFailure(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Success(output)) => match write_output(&cli, &output) {
            Ok(()) => ExitCode::from(0),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Ok(Outcome::VerificationFailure(output)) => match write_output(&cli, &output) {
            Ok(()) => ExitCode::from(1),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn write_output(cli: &Cli, output: &str) -> std::io::Result<()> {
    // Identical bytes whether writing to --out or stdout.
    let mut bytes = output.to_string();
    if !bytes.ends_with('\n') {
        bytes.push('\n');
    }
    match &cli.out {
        Some(path) => std::fs::write(path, bytes),
        None => {
            print!("{bytes}");
            Ok(())
        }
    }
}

fn config_echo(cli: &Cli) -> ConfigEcho {
    ConfigEcho {
        tol: cli.tol,
        samples: cli.samples,
        eta_grid: cli.eta_grid,
    }
}

fn to_json<T: Serialize>(cli: &Cli, result: T) -> Result<String, Error> {
    let envelope = Envelope {
        config: config_echo(cli),
        result,
    };
    serde_json::to_string_pretty(&envelope)
        .map_err(|e| Error::Numeric(format!("serialization failed: {e}")))
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    if !(cli.tol > 0.0) || !cli.tol.is_finite() {
        return Err(Error::Domain(format!(
            "--tol must be positive and finite, got {}",
            cli.tol
        )));
    }
    match &cli.command {
        Command::Profile(args) => cmd_profile(cli, args),
        Command::Bound(args) => cmd_bound(cli, args),
        Command::Verify(args) => cmd_verify(cli, args),
        Command::Figure(args) => cmd_figure(cli, args),
        Command::Yamabe(args) => cmd_yamabe(cli, args),
    }
}

fn build_profile(cli: &Cli, args: &ProfileArgs) -> Result<ProfileFn, Error> {
    match args.space {
        // Euclidean space is self-similar, so its profile is independent of
        // the metric scale; --scale is accepted and has no effect here.
        Space::Euclidean => euclidean_profile(args.dim),
        Space::Sphere => sphere_profile(&SphereGeometry::new(args.dim, args.scale)?),
        Space::Cylinder => cylinder_family(args.dim, cli.eta_grid)?.profile(args.scale),
    }
}

#[derive(Serialize)]
struct ProfilePoint {
    space: &'static str,
    dim: u32,
    scale: f64,
    profile: String,
    volume: f64,
    area: f64,
}

fn cmd_profile(cli: &Cli, args: &ProfileArgs) -> Result<Outcome, Error> {
    let profile = build_profile(cli, args)?;
    let space = match args.space {
        Space::Euclidean => "euclidean",
        Space::Sphere => "sphere",
        Space::Cylinder => "cylinder",
    };

    if let Some(volume) = args.volume {
        let area = profile.evaluate(volume)?;
        let point = ProfilePoint {
            space,
            dim: args.dim,
            scale: args.scale,
            profile: profile.name().to_string(),
            volume,
            area,
        };
        return Ok(Outcome::Success(match cli.format {
            Format::Json => to_json(cli, point)?,
            Format::Csv => csv_table(&[CurveRow {
                v: volume,
                lhs: area,
                rhs: 0.0,
                margin: area,
            }]),
        }));
    }

    let (from, to) = match (args.from, args.to) {
        (Some(a), Some(b)) if b > a && a > 0.0 => (a, b),
        (Some(a), Some(b)) => {
            return Err(Error::Domain(format!(
                "--from/--to must satisfy 0 < from < to, got {a} and {b}"
            )))
        }
        _ => {
            return Err(Error::Domain(
                "provide either --volume or a --from/--to range".into(),
            ))
        }
    };
    let n = cli.samples.max(2);
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let v = if i == n - 1 {
            to
        } else {
            from + (to - from) * (i as f64) / ((n - 1) as f64)
        };
        let area = profile.evaluate(v)?;
        rows.push(CurveRow {
            v,
            lhs: area,
            rhs: 0.0,
            margin: area,
        });
    }
    Ok(Outcome::Success(match cli.format {
        Format::Json => to_json(cli, &rows)?,
        Format::Csv => csv_table(&rows),
    }))
}

#[derive(Serialize)]
struct BoundEvaluation {
    product: String,
    volume: f64,
    value: f64,
    segment_interval: isoperim::Interval,
    provenance: String,
}

#[derive(Serialize)]
struct BackwardSummary {
    lambda: f64,
    valid_interval: isoperim::Interval,
    reference: String,
}

fn cmd_bound(cli: &Cli, args: &BoundArgs) -> Result<Outcome, Error> {
    let modes = [
        args.product.is_some(),
        args.tube,
        args.forward,
        args.backward,
    ]
    .iter()
    .filter(|&&m| m)
    .count();
    if modes != 1 {
        return Err(Error::Domain(
            "choose exactly one of --product, --tube, --forward, --backward".into(),
        ));
    }

    if let Some(product) = &args.product {
        let product: ProductId = product.parse()?;
        let volume = args.volume.ok_or_else(|| {
            Error::Domain("--product mode requires --volume".into())
        })?;
        let bound = certified_bound(product)?;
        let (value, segment) = bound.best_segment(volume)?;
        return Ok(Outcome::Success(to_json(
            cli,
            BoundEvaluation {
                product: product.to_string(),
                volume,
                value,
                segment_interval: segment.interval,
                provenance: segment.provenance.clone(),
            },
        )?));
    }

    if args.tube {
        let (vol_m, n, alpha) = match (args.vol_m, args.n, args.alpha) {
            (Some(v), Some(n), Some(a)) => (v, n, a),
            _ => {
                return Err(Error::Domain(
                    "--tube mode requires --vol-m, --n, and --alpha".into(),
                ))
            }
        };
        // Concave factor bound: the round-sphere profile of the factor
        // dimension, scaled so its total volume matches vol_m.
        let m = args.factor_dim;
        if m < 2 {
            return Err(Error::Domain(format!(
                "--factor-dim must be >= 2, got {m}"
            )));
        }
        if !(vol_m > 0.0) || !vol_m.is_finite() {
            return Err(Error::Domain(format!(
                "--vol-m must be positive and finite, got {vol_m}"
            )));
        }
        let mu = (vol_m / isoperim::geom::sphere_volume(m)).powf(2.0 / f64::from(m));
        let h = sphere_profile(&SphereGeometry::new(m, mu)?)?;
        let bound = tube_lower_bound(vol_m, n, &h, alpha)?;
        return Ok(Outcome::Success(to_json(cli, bound)?));
    }

    if args.forward {
        let (x0, y0, n) = match (args.x0, args.y0, args.n) {
            (Some(x0), Some(y0), Some(n)) => (x0, y0, n),
            _ => {
                return Err(Error::Domain(
                    "--forward mode requires --x0, --y0, and --n".into(),
                ))
            }
        };
        let law = forward_extension(x0, y0, n)?;
        return Ok(Outcome::Success(to_json(cli, law)?));
    }

    let (v0, k, total_dim) = match (args.v0, args.k, args.total_dim) {
        (Some(v0), Some(k), Some(d)) => (v0, k, d),
        _ => {
            return Err(Error::Domain(
                "--backward mode requires --v0, --k, and --total-dim".into(),
            ))
        }
    };
    let reference = sphere_profile(&SphereGeometry::new(total_dim, 1.0)?)?;
    let backward = backward_extension(v0, k, total_dim, reference)?;
    Ok(Outcome::Success(to_json(
        cli,
        BackwardSummary {
            lambda: backward.lambda,
            valid_interval: backward.valid_interval,
            reference: backward.reference.name().to_string(),
        },
    )?))
}

fn cmd_verify(cli: &Cli, args: &VerifyArgs) -> Result<Outcome, Error> {
    let ids: Vec<&str> = match (&args.claim, args.all) {
        (Some(id), false) => vec![id.as_str()],
        (None, true) => claim_ids().to_vec(),
        _ => {
            return Err(Error::Domain(
                "choose either --claim ID or --all".into(),
            ))
        }
    };

    let mut reports: Vec<VerificationReport> = Vec::with_capacity(ids.len());
    for id in ids {
        reports.push(run_claim(id, cli.samples)?);
    }
    let all_passed = reports.iter().all(|r| r.passed);

    let output = match cli.format {
        Format::Json => to_json(cli, &reports)?,
        Format::Csv => {
            // Reports are not curve data; the text form is one line per claim.
            let mut out = String::new();
            for report in &reports {
                let _ = writeln!(out, "{report}");
            }
            out
        }
    };
    Ok(if all_passed {
        Outcome::Success(output)
    } else {
        Outcome::VerificationFailure(output)
    })
}

fn cmd_figure(cli: &Cli, args: &FigureArgs) -> Result<Outcome, Error> {
    let spec = figure_spec(args.id)?;
    let rows: Vec<CurveRow> = figure_data(args.id, cli.samples)?
        .into_iter()
        .map(|r| CurveRow {
            v: r.v,
            lhs: r.lhs,
            rhs: r.rhs,
            margin: r.margin,
        })
        .collect();
    Ok(Outcome::Success(match cli.format {
        Format::Json => {
            #[derive(Serialize)]
            struct FigureOutput {
                id: u8,
                description: String,
                rows: Vec<CurveRow>,
            }
            to_json(
                cli,
                FigureOutput {
                    id: spec.id,
                    description: spec.description,
                    rows,
                },
            )?
        }
        Format::Csv => csv_table(&rows),
    }))
}

fn cmd_yamabe(cli: &Cli, args: &YamabeArgs) -> Result<Outcome, Error> {
    let reports = constant_reports()?;
    let filtered: Vec<_> = match &args.product {
        Some(product) => {
            let product: ProductId = product.parse()?;
            let needle = format!("product-ratio-{product}");
            let matches: Vec<_> = reports
                .into_iter()
                .filter(|r| r.name.starts_with(&needle))
                .collect();
            if matches.is_empty() {
                return Err(Error::Domain(format!(
                    "no constant entries for product {product}"
                )));
            }
            matches
        }
        None => reports,
    };
    Ok(Outcome::Success(to_json(cli, &filtered)?))
}
