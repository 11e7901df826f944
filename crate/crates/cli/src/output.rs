//! Emitters and atomic file output.

use std::io::Write;
use std::path::Path;

use polyapprox::{DigitalCurve, DominantPointSet};

use crate::error::{CliError, CliResult};
use crate::fmt::sig6;

/// Write `bytes` to `path` through a temporary file in the same directory,
/// so readers never observe a partial file. `None` writes to stdout.
pub fn emit(path: Option<&Path>, bytes: &[u8]) -> CliResult<()> {
    let Some(path) = path else {
        let mut out = std::io::stdout().lock();
        return out
            .write_all(bytes)
            .and_then(|_| out.flush())
            .map_err(|e| CliError::Data(format!("stdout: {e}")));
    };
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let fail = |e: std::io::Error| CliError::Data(format!("{}: {e}", path.display()));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(fail)?;
    tmp.write_all(bytes).map_err(fail)?;
    tmp.as_file().sync_all().map_err(fail)?;
    tmp.persist(path).map_err(|e| fail(e.error))?;
    Ok(())
}

/// CSV document with a header row; cells are already formatted.
pub fn csv_table(header: &[&str], rows: &[Vec<String>]) -> CliResult<String> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let internal = |e: csv::Error| CliError::Internal(format!("csv: {e}"));
    w.write_record(header).map_err(internal)?;
    for r in rows {
        w.write_record(r).map_err(internal)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Internal(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| CliError::Internal(e.to_string()))
}

const SVG_SIZE: f64 = 800.0;
const SVG_MARGIN: f64 = 20.0;

/// Overlay of the curve, the polygon, and vertex markers. SVG y grows
/// downward, so curve coordinates are flipped.
pub fn svg(curve: &DigitalCurve, set: &DominantPointSet) -> String {
    let pts = curve.points();
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for p in pts {
        x0 = x0.min(p.x);
        y0 = y0.min(p.y);
        x1 = x1.max(p.x);
        y1 = y1.max(p.y);
    }
    let span = (x1 - x0).max(y1 - y0).max(1.0);
    let scale = (SVG_SIZE - 2.0 * SVG_MARGIN) / span;
    let width = (x1 - x0) * scale + 2.0 * SVG_MARGIN;
    let height = (y1 - y0) * scale + 2.0 * SVG_MARGIN;
    let map = |p: polyapprox::Point| {
        (
            sig6((p.x - x0) * scale + SVG_MARGIN),
            sig6((y1 - p.y) * scale + SVG_MARGIN),
        )
    };
    let join = |it: &mut dyn Iterator<Item = polyapprox::Point>| {
        it.map(|p| {
            let (x, y) = map(p);
            format!("{x},{y}")
        })
        .collect::<Vec<_>>()
        .join(" ")
    };
    let curve_pts = join(&mut pts.iter().copied());
    let vertices = set.vertices(curve);
    let poly_pts = join(&mut vertices.iter().copied());
    let (w, h) = (sig6(width), sig6(height));
    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    s.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n"
    ));
    s.push_str("  <g id=\"curve\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\">\n");
    s.push_str(&format!("    <polygon points=\"{curve_pts}\"/>\n  </g>\n"));
    s.push_str("  <g id=\"polygon\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\">\n");
    s.push_str(&format!("    <polygon points=\"{poly_pts}\"/>\n  </g>\n"));
    s.push_str("  <g id=\"markers\" fill=\"#1f77b4\">\n");
    for v in vertices {
        let (x, y) = map(v);
        s.push_str(&format!("    <circle cx=\"{x}\" cy=\"{y}\" r=\"3\"/>\n"));
    }
    s.push_str("  </g>\n</svg>\n");
    s
}
