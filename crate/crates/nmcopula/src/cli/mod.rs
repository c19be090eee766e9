//! Operator-facing command line: CSV ingestion, trimming, fitting and
//! comparison reports, sampling, measure tables, density grids, and seeded
//! simulation studies.

pub mod csvio;
pub mod report;
pub mod study;
pub mod svg;

use std::f64::consts::PI;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use thiserror::Error;

use crate::association::{measures_numeric, QuadSpec};
use crate::empirical::{pseudo_observations, quantile_trim, RawSample};
use crate::error::CopulaError;
use crate::inference::{compare_models, FamilySpec, FitFamily, RankCriterion};
use crate::model::CopulaModel;
use crate::normal_mode::NormalModeParams;

use csvio::{read_numeric_csv, write_numeric_csv};
use report::ReportDocument;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("file not found: {0}")]
    FileNotFound(String),
    #[error("io error: {0}")]
    Io(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid argument: {0}")]
    BadArgument(String),
    #[error(transparent)]
    Copula(#[from] CopulaError),
}

#[derive(Debug, Parser)]
#[command(
    name = "nmcop",
    version,
    about = "Copula fitting and diagnostics around the normal mode family"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Fit copula families to a two-column CSV and compare them
    Fit(FitArgs),
    /// Draw a sample from a copula and write it as CSV
    Sample(SampleArgs),
    /// Closed-form and quadrature association measures side by side
    Measures(MeasuresArgs),
    /// Density values on a lattice, as CSV and an SVG heatmap
    Grid(GridArgs),
    /// Run seeded comparison scenarios and tabulate win rates
    SimulateStudy(StudyArgs),
}

#[derive(Debug, Args)]
struct FitArgs {
    /// Input CSV (header row required)
    #[arg(long)]
    input: PathBuf,
    /// Two columns to use, by 0-based index or header name (default: first two)
    #[arg(long)]
    columns: Option<String>,
    /// Comma-separated families to fit
    #[arg(long, default_value = "normal-mode,amh,clayton,fgm,frank,gaussian")]
    families: String,
    /// Mode numbers for the normal mode family
    #[arg(long, default_value = "1,1")]
    kappa: String,
    /// Sweep mode numbers 1..=K1 x 1..=K2 (one value means both); capped at 8
    #[arg(long)]
    kappa_sweep: Option<String>,
    /// Quantile trim bounds lo,hi (0,1 disables trimming)
    #[arg(long, default_value = "0.01,0.99")]
    trim: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output directory
    #[arg(long, default_value = ".")]
    out: PathBuf,
    /// Output formats: any of json,csv,svg
    #[arg(long, default_value = "json")]
    formats: String,
    /// Ranking criterion: cvmc | aic | cic
    #[arg(long, default_value = "cvmc")]
    criterion: String,
}

#[derive(Debug, Args)]
struct SampleArgs {
    #[arg(long, default_value = "normal-mode")]
    family: String,
    #[arg(long)]
    theta: Option<f64>,
    /// Mode numbers (normal mode); more than two entries sample a
    /// higher-dimensional copula
    #[arg(long)]
    kappa: Option<String>,
    /// Dimension for the product copula
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct MeasuresArgs {
    #[arg(long, default_value = "normal-mode")]
    family: String,
    #[arg(long)]
    theta: Option<f64>,
    #[arg(long)]
    kappa: Option<String>,
    /// Quadrature nodes per axis
    #[arg(long, default_value_t = 256)]
    nodes: usize,
    /// Optional output directory for measures.json
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct GridArgs {
    #[arg(long, default_value = "normal-mode")]
    family: String,
    #[arg(long)]
    theta: Option<f64>,
    #[arg(long)]
    kappa: Option<String>,
    /// Built-in parameter set 1..=4 (amplitude, kappa1, kappa2):
    /// 1 -> (1,1,1), 2 -> (-1,1,1), 3 -> (1,1,2), 4 -> (1,2,2)
    #[arg(long)]
    preset: Option<u8>,
    #[arg(long, default_value_t = 64)]
    resolution: usize,
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct StudyArgs {
    /// Scenario description (JSON)
    #[arg(long)]
    scenarios: PathBuf,
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

pub fn run_from_args<I, T>(args: I) -> Result<(), CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::parse_from(args);
    run(cli)
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Fit(args) => cmd_fit(args),
        Command::Sample(args) => cmd_sample(args),
        Command::Measures(args) => cmd_measures(args),
        Command::Grid(args) => cmd_grid(args),
        Command::SimulateStudy(args) => cmd_simulate_study(args),
    }
}

// ---------------------------------------------------------------------------
// parsing helpers

fn parse_pair_f64(text: &str, what: &str) -> Result<(f64, f64), CliError> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 2 {
        return Err(CliError::BadArgument(format!(
            "{what} needs the form lo,hi (got {text:?})"
        )));
    }
    let lo = parts[0]
        .parse()
        .map_err(|_| CliError::BadArgument(format!("{what}: {:?} is not a number", parts[0])))?;
    let hi = parts[1]
        .parse()
        .map_err(|_| CliError::BadArgument(format!("{what}: {:?} is not a number", parts[1])))?;
    Ok((lo, hi))
}

fn parse_kappa_list(text: &str) -> Result<Vec<u32>, CliError> {
    let values: Result<Vec<u32>, _> = text.split(',').map(|s| s.trim().parse::<u32>()).collect();
    let values =
        values.map_err(|_| CliError::BadArgument(format!("bad mode numbers {text:?}")))?;
    if values.len() < 2 || values.contains(&0) {
        return Err(CliError::BadArgument(
            "mode numbers must be at least two positive integers".into(),
        ));
    }
    Ok(values)
}

/// Builds a model from CLI-ish inputs (also used by the scenario runner).
pub fn build_model(
    family: &str,
    theta: Option<f64>,
    kappa: Option<Vec<u32>>,
    dim: Option<usize>,
) -> Result<CopulaModel, CliError> {
    let need_theta =
        || theta.ok_or_else(|| CliError::BadArgument(format!("family {family} needs --theta")));
    let model = match family {
        "normal-mode" | "nm" => {
            let kappa = kappa.unwrap_or_else(|| vec![1, 1]);
            CopulaModel::normal_mode(NormalModeParams::new(need_theta()?, kappa)?)
        }
        "product" | "independence" => CopulaModel::product(dim.unwrap_or(2))?,
        "frechet-lower" => CopulaModel::frechet_lower(),
        "frechet-upper" => CopulaModel::frechet_upper(),
        "amh" => CopulaModel::amh(need_theta()?)?,
        "clayton" => CopulaModel::clayton(need_theta()?)?,
        "frank" => CopulaModel::frank(need_theta()?)?,
        "fgm" => CopulaModel::fgm(need_theta()?)?,
        "gaussian" => CopulaModel::gaussian(need_theta()?)?,
        other => {
            return Err(CliError::BadArgument(format!("unknown family {other:?}")));
        }
    };
    Ok(model)
}

fn parse_criterion(text: &str) -> Result<RankCriterion, CliError> {
    match text {
        "cvmc" => Ok(RankCriterion::Cvmc),
        "aic" => Ok(RankCriterion::Aic),
        "cic" | "neg2n_cic" | "neg2n-cic" => Ok(RankCriterion::Neg2nCic),
        other => Err(CliError::BadArgument(format!(
            "unknown criterion {other:?} (use cvmc, aic or cic)"
        ))),
    }
}

fn ensure_out_dir(path: &Path) -> Result<(), CliError> {
    std::fs::create_dir_all(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

// ---------------------------------------------------------------------------
// fit

const KAPPA_SWEEP_CAP: u32 = 8;

fn resolve_columns(header: &[String], selector: &Option<String>) -> Result<[usize; 2], CliError> {
    let tokens: Vec<String> = match selector {
        Some(s) => s.split(',').map(|t| t.trim().to_string()).collect(),
        None => {
            if header.len() < 2 {
                return Err(CliError::BadArgument(
                    "the CSV needs at least two columns".into(),
                ));
            }
            return Ok([0, 1]);
        }
    };
    if tokens.len() != 2 {
        return Err(CliError::BadArgument(
            "--columns needs exactly two entries".into(),
        ));
    }
    let mut out = [0usize; 2];
    for (slot, token) in out.iter_mut().zip(&tokens) {
        let idx = match token.parse::<usize>() {
            Ok(i) => i,
            Err(_) => header
                .iter()
                .position(|h| h == token)
                .ok_or_else(|| CliError::BadArgument(format!("no column named {token:?}")))?,
        };
        if idx >= header.len() {
            return Err(CliError::BadArgument(format!(
                "column index {idx} out of range (the CSV has {} columns)",
                header.len()
            )));
        }
        *slot = idx;
    }
    if out[0] == out[1] {
        return Err(CliError::BadArgument(
            "--columns must name two different columns".into(),
        ));
    }
    Ok(out)
}

fn build_family_specs(
    families: &str,
    kappa: [u32; 2],
    sweep: &Option<String>,
) -> Result<Vec<FamilySpec>, CliError> {
    let sweep_bounds = match sweep {
        Some(text) => {
            let parts: Vec<&str> = text.split(',').map(str::trim).collect();
            let parse = |s: &str| -> Result<u32, CliError> {
                s.parse()
                    .map_err(|_| CliError::BadArgument(format!("bad sweep bound {s:?}")))
            };
            let bounds = match parts.as_slice() {
                [one] => {
                    let k = parse(one)?;
                    (k, k)
                }
                [a, b] => (parse(a)?, parse(b)?),
                _ => {
                    return Err(CliError::BadArgument(
                        "--kappa-sweep takes K or K1,K2".into(),
                    ))
                }
            };
            if bounds.0 == 0
                || bounds.1 == 0
                || bounds.0 > KAPPA_SWEEP_CAP
                || bounds.1 > KAPPA_SWEEP_CAP
            {
                return Err(CliError::BadArgument(format!(
                    "sweep bounds must lie in 1..={KAPPA_SWEEP_CAP}"
                )));
            }
            Some(bounds)
        }
        None => None,
    };
    let mut specs = Vec::new();
    for token in families.split(',').map(str::trim) {
        match token {
            "normal-mode" | "nm" => match sweep_bounds {
                Some((m1, m2)) => {
                    for k1 in 1..=m1 {
                        for k2 in 1..=m2 {
                            specs.push(FamilySpec::new(FitFamily::NormalMode {
                                kappa: [k1, k2],
                            }));
                        }
                    }
                }
                None => specs.push(FamilySpec::new(FitFamily::NormalMode { kappa })),
            },
            "amh" => specs.push(FamilySpec::new(FitFamily::Amh)),
            "clayton" => specs.push(FamilySpec::new(FitFamily::Clayton)),
            "frank" => specs.push(FamilySpec::new(FitFamily::Frank)),
            "fgm" => specs.push(FamilySpec::new(FitFamily::Fgm)),
            "gaussian" => specs.push(FamilySpec::new(FitFamily::Gaussian)),
            "" => {}
            other => {
                return Err(CliError::BadArgument(format!(
                    "unknown fit family {other:?}"
                )))
            }
        }
    }
    if specs.len() < 2 {
        return Err(CliError::BadArgument(
            "need at least two family specs to compare".into(),
        ));
    }
    Ok(specs)
}

fn cmd_fit(args: FitArgs) -> Result<(), CliError> {
    let table = read_numeric_csv(&args.input)?;
    let cols = resolve_columns(&table.header, &args.columns)?;
    let names = vec![
        table.header[cols[0]].clone(),
        table.header[cols[1]].clone(),
    ];
    let raw = RawSample::new(
        vec![
            table.columns[cols[0]].clone(),
            table.columns[cols[1]].clone(),
        ],
        names.clone(),
    )?;
    let n_raw = raw.n_rows();

    let (trim_lo, trim_hi) = parse_pair_f64(&args.trim, "--trim")?;
    let trimmed = if trim_lo == 0.0 && trim_hi == 1.0 {
        raw
    } else {
        quantile_trim(&raw, trim_lo, trim_hi)?
    };
    let n = trimmed.n_rows();
    if n < 20 {
        return Err(CliError::BadArgument(format!(
            "need at least 20 rows after trimming, have {n}"
        )));
    }
    let ps = pseudo_observations(&trimmed);

    let kappa_pair = {
        let k = parse_kappa_list(&args.kappa)?;
        if k.len() != 2 {
            return Err(CliError::BadArgument(
                "--kappa takes exactly two mode numbers for fitting".into(),
            ));
        }
        [k[0], k[1]]
    };
    let specs = build_family_specs(&args.families, kappa_pair, &args.kappa_sweep)?;
    let criterion = parse_criterion(&args.criterion)?;
    let reports = compare_models(&specs, &ps, criterion)?;

    let formats: Vec<&str> = args.formats.split(',').map(str::trim).collect();
    for f in &formats {
        if !["json", "csv", "svg"].contains(f) {
            return Err(CliError::BadArgument(format!("unknown format {f:?}")));
        }
    }
    let config = json!({
        "command": "fit",
        "input": args.input.display().to_string(),
        "columns": names,
        "families": args.families,
        "kappa": kappa_pair,
        "kappa_sweep": args.kappa_sweep,
        "trim": [trim_lo, trim_hi],
        "seed": args.seed,
        "criterion": criterion.name(),
        "formats": formats,
        "n_raw": n_raw,
        "n": n,
    });
    let doc = ReportDocument::new(config, &reports);

    ensure_out_dir(&args.out)?;
    if formats.contains(&"json") {
        write_text(&args.out.join("report.json"), &doc.to_json())?;
    }
    if formats.contains(&"csv") {
        write_text(&args.out.join("report.csv"), &doc.to_csv())?;
    }
    if formats.contains(&"svg") {
        let points: Vec<(f64, f64)> = (0..ps.n_rows())
            .map(|i| (ps.column(0)[i], ps.column(1)[i]))
            .collect();
        let title = format!("pseudo-observations: {} vs {}", names[0], names[1]);
        write_text(
            &args.out.join("pseudo_scatter.svg"),
            &svg::scatter_svg(&points, &title),
        )?;
    }
    print!("{}", doc.to_table());
    println!("n = {n} (from {n_raw} rows)");
    Ok(())
}

// ---------------------------------------------------------------------------
// sample

fn cmd_sample(args: SampleArgs) -> Result<(), CliError> {
    if args.n == 0 {
        return Err(CliError::BadArgument("--n must be at least 1".into()));
    }
    let kappa = args.kappa.as_deref().map(parse_kappa_list).transpose()?;
    let model = build_model(&args.family, args.theta, kappa, args.dim)?;
    let draws = model.sample(args.n, args.seed)?;
    let dim = model.dim();
    let header: Vec<String> = (1..=dim).map(|d| format!("u{d}")).collect();
    let columns: Vec<Vec<f64>> = (0..dim)
        .map(|d| draws.iter().map(|p| p.coords()[d]).collect())
        .collect();
    ensure_out_dir(&args.out)?;
    let path = args.out.join("samples.csv");
    write_numeric_csv(&path, &header, &columns)?;
    println!(
        "wrote {} rows x {} columns to {}",
        args.n,
        dim,
        path.display()
    );
    Ok(())
}

// ---------------------------------------------------------------------------
// measures

fn cmd_measures(args: MeasuresArgs) -> Result<(), CliError> {
    let kappa = args.kappa.as_deref().map(parse_kappa_list).transpose()?;
    let model = build_model(&args.family, args.theta, kappa.clone(), None)?;
    let quadrature = measures_numeric(&model, &QuadSpec::new(args.nodes, 12)?)?;
    let closed = model
        .normal_mode_params()
        .map(|p| p.measures())
        .transpose()?;
    let max_gap = closed.map(|c| {
        [
            (c.sigma - quadrature.sigma).abs(),
            (c.rho - quadrature.rho).abs(),
            (c.tau - quadrature.tau).abs(),
            (c.beta - quadrature.beta).abs(),
            (c.gamma - quadrature.gamma).abs(),
            (c.footrule - quadrature.footrule).abs(),
        ]
        .into_iter()
        .fold(0.0f64, f64::max)
    });
    let doc = json!({
        "family": args.family,
        "theta": args.theta,
        "kappa": kappa,
        "closed_form": closed,
        "quadrature": quadrature,
        "max_abs_gap": max_gap,
    });
    let text = format!(
        "{}\n",
        serde_json::to_string_pretty(&doc).expect("serializes")
    );
    print!("{text}");
    if let Some(dir) = &args.out {
        ensure_out_dir(dir)?;
        write_text(&dir.join("measures.json"), &text)?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// grid

/// `cos(kappa pi i / (res + 1))` for i = 1..=res, evaluated through the
/// reflection identity so mirrored lattice indices produce bit-identical
/// magnitudes.
fn cosine_table(kappa: u32, res: usize) -> Vec<f64> {
    let denom = (res + 1) as f64;
    let sign = if kappa.is_multiple_of(2) { 1.0 } else { -1.0 };
    (1..=res)
        .map(|i| {
            let mirrored = res + 1 - i;
            if i == mirrored && !kappa.is_multiple_of(2) {
                // odd multiples of pi/2 sit exactly on a cosine zero
                return 0.0;
            }
            let j = i.min(mirrored);
            let base = (kappa as f64 * PI * j as f64 / denom).cos();
            if i <= mirrored {
                base
            } else {
                sign * base
            }
        })
        .collect()
}

fn cmd_grid(args: GridArgs) -> Result<(), CliError> {
    if !(16..=1024).contains(&args.resolution) {
        return Err(CliError::BadArgument(format!(
            "--resolution must lie in 16..=1024, got {}",
            args.resolution
        )));
    }
    let (family, theta, kappa) = match args.preset {
        Some(1) => ("normal-mode".to_string(), Some(1.0), Some(vec![1, 1])),
        Some(2) => ("normal-mode".to_string(), Some(-1.0), Some(vec![1, 1])),
        Some(3) => ("normal-mode".to_string(), Some(1.0), Some(vec![1, 2])),
        Some(4) => ("normal-mode".to_string(), Some(1.0), Some(vec![2, 2])),
        Some(other) => {
            return Err(CliError::BadArgument(format!(
                "preset {other} does not exist (use 1..=4)"
            )))
        }
        None => (
            args.family.clone(),
            args.theta,
            args.kappa.as_deref().map(parse_kappa_list).transpose()?,
        ),
    };
    let model = build_model(&family, theta, kappa.clone(), None)?;
    if model.dim() != 2 {
        return Err(CliError::BadArgument(
            "density grids are bivariate; give exactly two mode numbers".into(),
        ));
    }
    let res = args.resolution;
    let grid: Vec<Vec<f64>> = match (model.normal_mode_params(), theta) {
        (Some(p), Some(th)) => {
            let cx = cosine_table(p.kappa()[0], res);
            let cy = cosine_table(p.kappa()[1], res);
            cx.iter()
                .map(|&a| cy.iter().map(|&b| 1.0 + th * a * b).collect())
                .collect()
        }
        _ => {
            let denom = (res + 1) as f64;
            let mut grid = vec![vec![0.0; res]; res];
            for (i, row) in grid.iter_mut().enumerate() {
                for (j, cell) in row.iter_mut().enumerate() {
                    let u = (i + 1) as f64 / denom;
                    let v = (j + 1) as f64 / denom;
                    *cell = model.density_interior(&[u, v])?;
                }
            }
            grid
        }
    };

    ensure_out_dir(&args.out)?;
    let denom = (res + 1) as f64;
    let mut u1 = Vec::with_capacity(res * res);
    let mut u2 = Vec::with_capacity(res * res);
    let mut dens = Vec::with_capacity(res * res);
    for (i, row) in grid.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            u1.push((i + 1) as f64 / denom);
            u2.push((j + 1) as f64 / denom);
            dens.push(v);
        }
    }
    write_numeric_csv(
        &args.out.join("density_grid.csv"),
        &["u1".into(), "u2".into(), "density".into()],
        &[u1, u2, dens],
    )?;
    let title = match &kappa {
        Some(k) => format!(
            "{family} density, theta = {}, kappa = ({}, {})",
            theta.unwrap_or(f64::NAN),
            k[0],
            k[1]
        ),
        None => format!("{family} density, theta = {}", theta.unwrap_or(f64::NAN)),
    };
    write_text(
        &args.out.join("density_heatmap.svg"),
        &svg::heatmap_svg(&grid, &title),
    )?;
    println!("wrote {res}x{res} density grid to {}", args.out.display());
    Ok(())
}

// ---------------------------------------------------------------------------
// simulate-study

fn cmd_simulate_study(args: StudyArgs) -> Result<(), CliError> {
    let text = std::fs::read_to_string(&args.scenarios).map_err(|e| {
        if e.kind() == std::io::ErrorKind::NotFound {
            CliError::FileNotFound(args.scenarios.display().to_string())
        } else {
            CliError::Io(format!("{}: {e}", args.scenarios.display()))
        }
    })?;
    let file: study::ScenarioFile = serde_json::from_str(&text).map_err(|e| CliError::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    let doc = study::run_study(&file)?;
    ensure_out_dir(&args.out)?;
    let rendered = format!(
        "{}\n",
        serde_json::to_string_pretty(&doc).expect("study serializes")
    );
    write_text(&args.out.join("study.json"), &rendered)?;
    for sc in &doc.scenarios {
        println!("{}: n = {}, seeds = {}", sc.name, sc.n, sc.seeds.len());
        for (criterion, counts) in [
            ("cvmc", &sc.win_counts.cvmc),
            ("aic", &sc.win_counts.aic),
            ("neg2n_cic", &sc.win_counts.neg2n_cic),
        ] {
            let summary: Vec<String> = counts
                .iter()
                .filter(|w| w.wins > 0)
                .map(|w| format!("{} x{}", w.label, w.wins))
                .collect();
            println!("  {criterion}: {}", summary.join(", "));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn column_resolution() {
        let header = vec!["vote".to_string(), "spend".to_string(), "year".to_string()];
        assert_eq!(resolve_columns(&header, &None).unwrap(), [0, 1]);
        assert_eq!(
            resolve_columns(&header, &Some("spend,year".into())).unwrap(),
            [1, 2]
        );
        assert_eq!(
            resolve_columns(&header, &Some("2,0".into())).unwrap(),
            [2, 0]
        );
        assert!(resolve_columns(&header, &Some("a,b".into())).is_err());
        assert!(resolve_columns(&header, &Some("0,0".into())).is_err());
    }

    #[test]
    fn family_spec_expansion() {
        let specs = build_family_specs("normal-mode,gaussian", [2, 1], &None).unwrap();
        assert_eq!(specs.len(), 2);
        let sweep = build_family_specs("normal-mode,amh", [1, 1], &Some("2,3".into())).unwrap();
        assert_eq!(sweep.len(), 2 * 3 + 1);
        assert!(build_family_specs("normal-mode", [1, 1], &Some("9".into())).is_err());
        assert!(build_family_specs("waves", [1, 1], &None).is_err());
    }

    #[test]
    fn model_builder_validates() {
        assert!(build_model("normal-mode", Some(1.0), Some(vec![2, 1]), None).is_ok());
        assert!(build_model("normal-mode", None, None, None).is_err());
        assert!(build_model("clayton", Some(-1.0), None, None).is_err());
        assert!(build_model("product", None, None, Some(3)).is_ok());
    }

    #[test]
    fn cosine_table_mirrors_exactly() {
        for kappa in [1u32, 2, 3, 4] {
            let res = 33;
            let table = cosine_table(kappa, res);
            let sign = if kappa % 2 == 0 { 1.0 } else { -1.0 };
            for i in 0..res {
                let j = res - 1 - i;
                // numeric equality: the lattice center of an odd mode is an
                // exact zero, where the bit pattern may differ in sign
                assert_eq!(table[i], sign * table[j], "kappa={kappa} i={i}");
                // the naive evaluation carries argument-rounding error of
                // order eps * kappa * pi
                let err = (table[i]
                    - (kappa as f64 * PI * (i + 1) as f64 / (res as f64 + 1.0)).cos())
                .abs();
                assert!(err < 5e-15, "kappa={kappa} i={i} err={err:e}");
            }
        }
    }

    #[test]
    fn even_mode_sum_grid_is_radially_symmetric_bitwise() {
        let res = 24;
        let cx = cosine_table(2, res);
        let cy = cosine_table(2, res);
        let grid: Vec<Vec<f64>> = cx
            .iter()
            .map(|&a| cy.iter().map(|&b| 1.0 + a * b).collect())
            .collect();
        for i in 0..res {
            for j in 0..res {
                assert_eq!(
                    grid[i][j].to_bits(),
                    grid[res - 1 - i][res - 1 - j].to_bits()
                );
            }
        }
    }
}
