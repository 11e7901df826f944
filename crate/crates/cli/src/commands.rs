//! The three commands, each returning the bytes to emit.

use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use polyapprox::ingest::{load_curve_file, parse_pnm, trace_contour};
use polyapprox::{
    eliminate_to_count, eliminate_to_error, metrics_report, rdp_to_count, rotation_report,
    Approximation, DigitalCurve, DominantPointSet, MetricsReport, RotationRow,
};

use crate::args::{Baseline, Format, RunConfig, Table, Target};
use crate::error::{CliError, CliResult};
use crate::fmt::{self, sig6};
use crate::output::{csv_table, svg};

/// Read a curve file, or trace the largest blob of a PBM/PGM mask.
pub fn load_input(path: &Path) -> CliResult<DigitalCurve> {
    let bytes =
        std::fs::read(path).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
    let is_pnm =
        bytes.len() >= 2 && bytes[0] == b'P' && matches!(bytes[1], b'1' | b'2' | b'4' | b'5');
    let curve = if is_pnm {
        trace_contour(&parse_pnm(&bytes)?)
    } else {
        load_curve_file(&bytes)
    };
    curve.map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

#[derive(Debug, Serialize)]
pub struct Metrics {
    pub n: usize,
    pub m: usize,
    #[serde(serialize_with = "fmt::serialize")]
    pub cr: f64,
    #[serde(serialize_with = "fmt::serialize")]
    pub ise: f64,
    #[serde(serialize_with = "fmt::serialize")]
    pub fom: f64,
    #[serde(serialize_with = "fmt::serialize")]
    pub we: f64,
    #[serde(serialize_with = "fmt::serialize")]
    pub we2: f64,
    #[serde(serialize_with = "fmt::serialize")]
    pub max_dev: f64,
    #[serde(serialize_with = "fmt::serialize")]
    pub area: f64,
    #[serde(serialize_with = "fmt::serialize")]
    pub perimeter: f64,
    #[serde(serialize_with = "fmt::serialize")]
    pub compactness: f64,
}

impl From<&MetricsReport> for Metrics {
    fn from(r: &MetricsReport) -> Self {
        Self {
            n: r.n,
            m: r.m,
            cr: r.cr,
            ise: r.ise,
            fom: r.fom,
            we: r.we,
            we2: r.we2,
            max_dev: r.max_dev,
            area: r.area,
            perimeter: r.perimeter,
            compactness: r.compactness,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Vertex {
    pub index: usize,
    #[serde(serialize_with = "fmt::serialize")]
    pub x: f64,
    #[serde(serialize_with = "fmt::serialize")]
    pub y: f64,
}

#[derive(Debug, Serialize)]
pub struct MethodResult {
    pub method: &'static str,
    pub dominant_points: Vec<Vertex>,
    pub metrics: Metrics,
}

#[derive(Debug, Serialize)]
pub struct TraceRow {
    pub step: usize,
    pub removed_index: usize,
    #[serde(serialize_with = "fmt::serialize")]
    pub significance: f64,
    pub metrics: Metrics,
}

#[derive(Debug, Serialize)]
pub struct RotationJson {
    #[serde(serialize_with = "fmt::serialize")]
    pub angle: f64,
    #[serde(serialize_with = "fmt::serialize")]
    pub max_dev: f64,
    #[serde(serialize_with = "fmt::serialize")]
    pub ise: f64,
    #[serde(serialize_with = "fmt::serialize")]
    pub area: f64,
    #[serde(serialize_with = "fmt::serialize")]
    pub perimeter: f64,
    #[serde(serialize_with = "fmt::serialize")]
    pub compactness: f64,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TargetJson {
    Points(usize),
    MaxIse(#[serde(serialize_with = "fmt::serialize")] f64),
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub n: usize,
    pub initial_dominant_points: usize,
    pub target: TargetJson,
    pub proposed: MethodResult,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub baseline: Option<MethodResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rotation: Option<Vec<RotationJson>>,
}

fn method_result(
    method: &'static str,
    curve: &DigitalCurve,
    set: &DominantPointSet,
) -> MethodResult {
    MethodResult {
        method,
        dominant_points: set
            .indices()
            .iter()
            .map(|&index| {
                let p = curve.point(index);
                Vertex {
                    index,
                    x: p.x,
                    y: p.y,
                }
            })
            .collect(),
        metrics: Metrics::from(&metrics_report(curve, set)),
    }
}

fn check_postconditions(curve: &DigitalCurve, target: Target, a: &Approximation) -> CliResult<()> {
    let fin = metrics_report(curve, &a.final_set);
    match target {
        Target::Points(m) if a.final_set.len() != m => {
            return Err(CliError::Internal(format!(
                "asked for {m} points, produced {}",
                a.final_set.len()
            )))
        }
        Target::MaxIse(e) if !a.trace.is_empty() && fin.ise > e => {
            return Err(CliError::Internal(format!(
                "ISE {} exceeds budget {e}",
                fin.ise
            )))
        }
        _ => {}
    }
    if a.initial.len() != a.final_set.len() + a.trace.len() {
        return Err(CliError::Internal(
            "trace length does not match removed point count".into(),
        ));
    }
    if let Some(last) = a.trace.last() {
        if last.metrics_after != fin {
            return Err(CliError::Internal(
                "trace metrics disagree with final polygon".into(),
            ));
        }
    }
    Ok(())
}

const METRIC_HEADER: [&str; 12] = [
    "method",
    "n",
    "m",
    "cr",
    "ise",
    "fom",
    "we",
    "we2",
    "max_dev",
    "area",
    "perimeter",
    "compactness",
];

fn metric_cells(method: &str, r: &MetricsReport) -> Vec<String> {
    let mut row = vec![method.to_string(), r.n.to_string(), r.m.to_string()];
    row.extend(
        [
            r.cr,
            r.ise,
            r.fom,
            r.we,
            r.we2,
            r.max_dev,
            r.area,
            r.perimeter,
            r.compactness,
        ]
        .iter()
        .map(|&x| sig6(x)),
    );
    row
}

const ROTATION_HEADER: [&str; 6] = [
    "angle",
    "max_dev",
    "ise",
    "area",
    "perimeter",
    "compactness",
];

fn rotation_cells(r: &RotationRow) -> Vec<String> {
    [
        r.angle,
        r.max_dev,
        r.ise,
        r.area,
        r.perimeter,
        r.compactness,
    ]
    .iter()
    .map(|&x| sig6(x))
    .collect()
}

fn rotation_json(r: &RotationRow) -> RotationJson {
    RotationJson {
        angle: r.angle,
        max_dev: r.max_dev,
        ise: r.ise,
        area: r.area,
        perimeter: r.perimeter,
        compactness: r.compactness,
    }
}

/// The default command.
///
/// CSV output carries one table: the rotation table when angles are given,
/// else the trace when requested, else one metrics row per method.
pub fn run(cfg: &RunConfig) -> CliResult<Vec<u8>> {
    let curve = load_input(&cfg.input)?;
    let approx = match cfg.target {
        Target::Points(m) => eliminate_to_count(&curve, m)?,
        Target::MaxIse(e) => eliminate_to_error(&curve, e)?,
    };
    check_postconditions(&curve, cfg.target, &approx)?;
    let final_report = metrics_report(&curve, &approx.final_set);
    let baseline = match cfg.baseline {
        Some(Baseline::Rdp) => Some(rdp_to_count(&curve, approx.final_set.len())?),
        None => None,
    };
    let rotation = match &cfg.angles {
        Some(angles) => Some(rotation_report(&curve, angles, approx.final_set.len())?),
        None => None,
    };

    match cfg.format {
        Format::Svg => Ok(svg(&curve, &approx.final_set).into_bytes()),
        Format::Csv => {
            let text = if let Some(rows) = &rotation {
                csv_table(
                    &ROTATION_HEADER,
                    &rows.iter().map(rotation_cells).collect::<Vec<_>>(),
                )?
            } else if cfg.trace {
                let initial = metrics_report(&curve, &approx.initial);
                let mut rows = vec![trace_cells(0, None, None, &initial)];
                for (k, s) in approx.trace.iter().enumerate() {
                    rows.push(trace_cells(
                        k + 1,
                        Some(s.removed_index),
                        Some(s.sig_at_removal),
                        &s.metrics_after,
                    ));
                }
                csv_table(&TRACE_HEADER, &rows)?
            } else {
                let mut rows = vec![metric_cells("proposed", &final_report)];
                if let Some(b) = &baseline {
                    rows.push(metric_cells("rdp", &metrics_report(&curve, b)));
                }
                csv_table(&METRIC_HEADER, &rows)?
            };
            Ok(text.into_bytes())
        }
        Format::Json => {
            let report = RunReport {
                n: curve.len(),
                initial_dominant_points: approx.initial.len(),
                target: match cfg.target {
                    Target::Points(m) => TargetJson::Points(m),
                    Target::MaxIse(e) => TargetJson::MaxIse(e),
                },
                proposed: method_result("proposed", &curve, &approx.final_set),
                baseline: baseline.as_ref().map(|b| method_result("rdp", &curve, b)),
                trace: cfg.trace.then(|| {
                    approx
                        .trace
                        .iter()
                        .enumerate()
                        .map(|(k, s)| TraceRow {
                            step: k + 1,
                            removed_index: s.removed_index,
                            significance: s.sig_at_removal,
                            metrics: Metrics::from(&s.metrics_after),
                        })
                        .collect()
                }),
                rotation: rotation.map(|rows| rows.iter().map(rotation_json).collect()),
            };
            let mut text = serde_json::to_string_pretty(&report)
                .map_err(|e| CliError::Internal(e.to_string()))?;
            text.push('\n');
            Ok(text.into_bytes())
        }
    }
}

const TRACE_HEADER: [&str; 9] = [
    "step",
    "removed_index",
    "significance",
    "m",
    "cr",
    "ise",
    "fom",
    "we",
    "max_dev",
];

fn trace_cells(
    step: usize,
    removed: Option<usize>,
    sig: Option<f64>,
    r: &MetricsReport,
) -> Vec<String> {
    vec![
        step.to_string(),
        removed.map(|i| i.to_string()).unwrap_or_default(),
        sig.map(sig6).unwrap_or_default(),
        r.m.to_string(),
        sig6(r.cr),
        sig6(r.ise),
        sig6(r.fom),
        sig6(r.we),
        sig6(r.max_dev),
    ]
}

/// `rotate` subcommand: CSV with one row per angle.
pub fn rotate(input: &Path, m: usize, angles: &[f64]) -> CliResult<Vec<u8>> {
    let curve = load_input(input)?;
    let rows = rotation_report(&curve, angles, m)?;
    Ok(csv_table(
        &ROTATION_HEADER,
        &rows.iter().map(rotation_cells).collect::<Vec<_>>(),
    )?
    .into_bytes())
}

/// Contours and target counts of each benchmark table, in output order.
pub fn bench_plan(table: Table) -> &'static [(&'static str, &'static [usize])] {
    match table {
        Table::Synthetic => &[
            ("chromosome", &[15, 6]),
            ("leaf", &[21, 16]),
            ("semicircle", &[18, 17, 14, 12]),
            ("infinity", &[10, 5]),
        ],
        Table::Mpeg => &[
            ("bell-7", &[22, 20, 7]),
            ("octopus-14", &[79, 43]),
            ("ray-17", &[35, 14]),
            ("chicken-5", &[255, 54]),
            ("device6-9", &[84, 22]),
            ("bell-10", &[110, 42]),
            ("truck-07", &[12, 11]),
            ("butterfly-13", &[525, 65]),
        ],
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub contour: String,
    pub method: &'static str,
    /// Requested dominant point count; `metrics.m` is what was achieved.
    pub requested: usize,
    pub metrics: MetricsReport,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchOutcome {
    pub rows: Vec<BenchRow>,
    /// One message per skipped contour or row.
    pub warnings: Vec<String>,
}

impl BenchOutcome {
    pub fn find(&self, contour: &str, method: &str, requested: usize) -> Option<&MetricsReport> {
        self.rows
            .iter()
            .find(|r| r.contour == contour && r.method == method && r.requested == requested)
            .map(|r| &r.metrics)
    }
}

/// Look for `name` with a curve or mask extension directly in `dir`, then
/// in the table's subdirectory.
pub fn find_fixture(dir: &Path, table: Table, name: &str) -> Option<PathBuf> {
    let sub = match table {
        Table::Synthetic => "synthetic",
        Table::Mpeg => "mpeg",
    };
    [dir.to_path_buf(), dir.join(sub)]
        .iter()
        .flat_map(|d| ["txt", "pbm", "pgm"].map(|ext| d.join(format!("{name}.{ext}"))))
        .find(|p| p.is_file())
}

pub fn bench(dir: &Path, table: Table) -> BenchOutcome {
    let per_contour: Vec<(Vec<BenchRow>, Vec<String>)> = bench_plan(table)
        .par_iter()
        .map(|&(name, targets)| {
            let mut rows = Vec::new();
            let mut warnings = Vec::new();
            let Some(path) = find_fixture(dir, table, name) else {
                warnings.push(format!("missing fixture {name} in {}", dir.display()));
                return (rows, warnings);
            };
            let curve = match load_input(&path) {
                Ok(c) => c,
                Err(e) => {
                    warnings.push(e.to_string());
                    return (rows, warnings);
                }
            };
            for &m in targets {
                let proposed =
                    eliminate_to_count(&curve, m).map(|a| metrics_report(&curve, &a.final_set));
                let baseline = rdp_to_count(&curve, m).map(|d| metrics_report(&curve, &d));
                match (proposed, baseline) {
                    (Ok(p), Ok(b)) => {
                        for (method, metrics) in [("proposed", p), ("rdp", b)] {
                            rows.push(BenchRow {
                                contour: name.to_string(),
                                method,
                                requested: m,
                                metrics,
                            });
                        }
                    }
                    (Err(e), _) | (_, Err(e)) => {
                        warnings.push(format!("{name} at {m} points skipped: {e}"))
                    }
                }
            }
            (rows, warnings)
        })
        .collect();
    let mut out = BenchOutcome {
        rows: Vec::new(),
        warnings: Vec::new(),
    };
    for (rows, warnings) in per_contour {
        out.rows.extend(rows);
        out.warnings.extend(warnings);
    }
    out
}

pub fn bench_csv(table: Table, outcome: &BenchOutcome) -> CliResult<String> {
    let header: [&str; 7] = match table {
        Table::Synthetic => ["contour", "method", "m", "CR", "ISE", "WE", "FOM"],
        Table::Mpeg => ["contour", "method", "k", "CR", "ISE", "WE", "WE2"],
    };
    let rows: Vec<Vec<String>> = outcome
        .rows
        .iter()
        .map(|r| {
            let m = &r.metrics;
            let last = match table {
                Table::Synthetic => m.fom,
                Table::Mpeg => m.we2,
            };
            vec![
                r.contour.clone(),
                r.method.to_string(),
                m.m.to_string(),
                sig6(m.cr),
                sig6(m.ise),
                sig6(m.we),
                sig6(last),
            ]
        })
        .collect();
    csv_table(&header, &rows)
}
