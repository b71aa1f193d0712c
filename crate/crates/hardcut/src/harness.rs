//! Command-level plumbing behind the CLI: text reports for single
//! operations and the seeded scaling experiment with its CSV output.
//!
//! Everything here is deterministic given its arguments; the only
//! exception is the `wall_ms` column, which callers exclude from
//! byte-for-byte comparisons.

use std::fmt::Write as _;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::geometry;
use crate::graph::{exact_expansion, generate_regular, spectral_expansion_bound, Multigraph};
use crate::handlebody::{build_model, HandlebodyModel};
use crate::search::{exact_balanced_min_cut, randomized_search, spectral_sweep_cut, CutResult};

pub const CSV_HEADER: &str = "n,m,seed,epsilon,c,c_method,area,bound,ratio,wall_ms,error";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertifyMode {
    Exact,
    Spectral,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MincutMethod {
    Exact,
    Sweep,
    Random,
}

/// One `(n, seed)` row of the scaling experiment. Rows that failed carry
/// the error token and leave the result columns empty.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentRecord {
    pub n: u32,
    pub m: usize,
    pub seed: u64,
    pub epsilon: f64,
    pub c: Option<f64>,
    pub c_method: Option<String>,
    pub area: Option<f64>,
    pub bound: Option<f64>,
    pub ratio: Option<f64>,
    pub wall_ms: f64,
    pub error: Option<String>,
}

fn opt_to_csv<T: std::fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map(|x| x.to_string()).unwrap_or_default()
}

fn parse_opt<T: std::str::FromStr>(field: &str, name: &str) -> Result<Option<T>> {
    if field.is_empty() {
        Ok(None)
    } else {
        field
            .parse()
            .map(Some)
            .map_err(|_| Error::Parse(format!("bad {name} field: {field:?}")))
    }
}

impl ExperimentRecord {
    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.m,
            self.seed,
            self.epsilon,
            opt_to_csv(&self.c),
            opt_to_csv(&self.c_method),
            opt_to_csv(&self.area),
            opt_to_csv(&self.bound),
            opt_to_csv(&self.ratio),
            self.wall_ms,
            opt_to_csv(&self.error),
        )
    }

    pub fn from_csv_row(row: &str) -> Result<Self> {
        let fields: Vec<&str> = row.split(',').collect();
        if fields.len() != 11 {
            return Err(Error::Parse(format!("expected 11 fields, got {}", fields.len())));
        }
        Ok(Self {
            n: fields[0].parse().map_err(|_| Error::Parse("bad n field".into()))?,
            m: fields[1].parse().map_err(|_| Error::Parse("bad m field".into()))?,
            seed: fields[2].parse().map_err(|_| Error::Parse("bad seed field".into()))?,
            epsilon: fields[3].parse().map_err(|_| Error::Parse("bad epsilon field".into()))?,
            c: parse_opt(fields[4], "c")?,
            c_method: parse_opt(fields[5], "c_method")?,
            area: parse_opt(fields[6], "area")?,
            bound: parse_opt(fields[7], "bound")?,
            ratio: parse_opt(fields[8], "ratio")?,
            wall_ms: fields[9].parse().map_err(|_| Error::Parse("bad wall_ms field".into()))?,
            error: parse_opt(fields[10], "error")?,
        })
    }
}

/// Generate a graph and render the text format.
pub fn generate_text(m: usize, d: usize, seed: u64) -> Result<String> {
    generate_regular(m, d, seed)?.to_text()
}

/// Certificate block for a graph, exact or spectral.
pub fn certify_report(graph: &Multigraph, mode: CertifyMode) -> Result<String> {
    let cert = match mode {
        CertifyMode::Exact => exact_expansion(graph)?,
        CertifyMode::Spectral => spectral_expansion_bound(graph)?,
    };
    Ok(cert.to_text())
}

fn sphere_adjusted(model: HandlebodyModel, eps: f64, sphere: bool) -> Result<(HandlebodyModel, f64)> {
    if sphere {
        // A cut of the doubled solid traps half its share in one copy, and
        // the doubled volume is what gets normalized to 1.
        Ok((model.normalize(0.5)?, eps / 2.0))
    } else {
        Ok((model, eps))
    }
}

/// Cut-search block for a graph at scale `n`, including the certified
/// constant, the theorem bound, and the achieved ratio.
pub fn mincut_report(
    graph: &Multigraph,
    n: u32,
    eps: f64,
    method: MincutMethod,
    seed: u64,
    restarts: usize,
    sphere: bool,
) -> Result<String> {
    let model = build_model(graph.clone(), n)?;
    let (model, eps) = sphere_adjusted(model, eps, sphere)?;
    let result: CutResult = match method {
        MincutMethod::Exact => exact_balanced_min_cut(&model, eps)?,
        MincutMethod::Sweep => spectral_sweep_cut(&model, eps)?,
        MincutMethod::Random => randomized_search(&model, eps, restarts, seed)?,
    };
    let bound = model.theorem_bound(eps)?;
    let mut out = result.to_text();
    let _ = write!(
        out,
        "c = {}\nc_method = {}\ntheorem_bound = {}\nratio = {}\n",
        model.expansion().constant(),
        model.expansion().method_name(),
        bound,
        result.area / bound,
    );
    Ok(out)
}

/// Formula report: the closed-form quantities at `(n, eps)` followed by the
/// constant-chain replay.
pub fn formulas_report(n: u32, eps: f64) -> Result<String> {
    geometry::check_epsilon(eps)?;
    let nf = f64::from(n);
    let residual = geometry::pants_residual_area(n)?;
    let wet = geometry::hole_wet_area_lower(n)?;
    let piece =
        geometry::ball_piece_area_lower(eps * 4.0 * std::f64::consts::PI / (3.0 * nf.powi(3)))?;
    let piece_target = eps / (nf * nf);
    let chain = geometry::verify_constant_chain(n, eps)?;
    let mut out = String::new();
    let _ = writeln!(out, "n = {n}");
    let _ = writeln!(out, "epsilon = {eps}");
    let _ = writeln!(out, "pants_residual_area = {residual}");
    let _ = writeln!(out, "hole_wet_area_lower = {wet}");
    let _ = writeln!(out, "hole_wet_exceeds_inverse_square = {}", wet > 1.0 / (nf * nf));
    let _ = writeln!(out, "ball_piece_area = {piece}");
    let _ = writeln!(out, "ball_piece_target = {piece_target}");
    let _ = writeln!(out, "ball_piece_holds = {}", piece >= piece_target);
    out.push_str(&chain.to_text());
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct ScalingConfig {
    pub n_values: Vec<u32>,
    pub eps: f64,
    pub seed_count: u64,
    pub restarts: usize,
    pub sphere: bool,
}

#[derive(Debug, Clone)]
pub struct ScalingOutcome {
    pub records: Vec<ExperimentRecord>,
    pub csv: String,
    /// One line: least-squares slope of area against n over successful rows.
    pub summary: String,
}

fn scaling_row(n: u32, seed: u64, cfg: &ScalingConfig) -> ExperimentRecord {
    let start = Instant::now();
    let m = (n as usize).pow(3);
    let eps = if cfg.sphere { cfg.eps / 2.0 } else { cfg.eps };
    let outcome: Result<(f64, &'static str, f64, f64)> = (|| {
        let graph = generate_regular(m, 3, seed)?;
        let model = build_model(graph, n)?;
        let (model, eps) = sphere_adjusted(model, cfg.eps, cfg.sphere)?;
        let result = randomized_search(&model, eps, cfg.restarts, seed)?;
        let bound = model.theorem_bound(eps)?;
        Ok((
            model.expansion().constant(),
            model.expansion().method_name(),
            result.area,
            bound,
        ))
    })();
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    match outcome {
        Ok((c, c_method, area, bound)) => ExperimentRecord {
            n,
            m,
            seed,
            epsilon: eps,
            c: Some(c),
            c_method: Some(c_method.to_string()),
            area: Some(area),
            bound: Some(bound),
            ratio: Some(area / bound),
            wall_ms,
            error: None,
        },
        Err(e) => ExperimentRecord {
            n,
            m,
            seed,
            epsilon: eps,
            c: None,
            c_method: None,
            area: None,
            bound: None,
            ratio: None,
            wall_ms,
            error: Some(e.token().to_string()),
        },
    }
}

/// Least-squares slope of `y` against `x`; `None` when `x` does not vary.
pub fn least_squares_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let len = points.len() as f64;
    let x_mean = points.iter().map(|p| p.0).sum::<f64>() / len;
    let y_mean = points.iter().map(|p| p.1).sum::<f64>() / len;
    let sxx: f64 = points.iter().map(|p| (p.0 - x_mean).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = points.iter().map(|p| (p.0 - x_mean) * (p.1 - y_mean)).sum();
    Some(sxy / sxx)
}

/// Run the scaling experiment: one row per `(n, seed)` in input order, with
/// per-row failures recorded rather than aborting the run.
pub fn run_scaling(cfg: &ScalingConfig) -> Result<ScalingOutcome> {
    geometry::check_epsilon(cfg.eps)?;
    if cfg.seed_count == 0 {
        return Err(Error::InvalidArgument("seeds must be at least 1".into()));
    }
    for &n in &cfg.n_values {
        if n == 0 || n % 2 != 0 {
            return Err(Error::InvalidArgument(format!(
                "scale values must be even and positive, got {n}"
            )));
        }
    }
    let mut records = Vec::new();
    for &n in &cfg.n_values {
        for seed in 0..cfg.seed_count {
            records.push(scaling_row(n, seed, cfg));
        }
    }
    let mut csv = String::from(CSV_HEADER);
    csv.push('\n');
    for r in &records {
        csv.push_str(&r.to_csv_row());
        csv.push('\n');
    }
    let points: Vec<(f64, f64)> = records
        .iter()
        .filter_map(|r| r.area.map(|a| (f64::from(r.n), a)))
        .collect();
    let summary = match least_squares_slope(&points) {
        Some(slope) => format!("slope = {slope}\n"),
        None => "slope = undefined\n".to_string(),
    };
    Ok(ScalingOutcome { records, csv, summary })
}

/// Drop the `wall_ms` column, the one nondeterministic field, for
/// byte-comparison of repeated runs.
pub fn strip_wall_column(csv: &str) -> String {
    csv.lines()
        .map(|line| {
            let fields: Vec<&str> = line.split(',').collect();
            fields
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != 9)
                .map(|(_, f)| *f)
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join("\n")
}
