//! Approximation quality metrics and the rotation-robustness harness.

use crate::approximator::eliminate_to_count;
use crate::curve::{DigitalCurve, DominantPointSet};
use crate::error::Result;
use crate::geometry::{point_segment_distance, ring_perimeter, signed_area};
use crate::ingest::rotate_curve;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricsReport {
    /// Original curve point count.
    pub n: usize,
    /// Dominant point count.
    pub m: usize,
    /// Compression ratio `n / m`.
    pub cr: f64,
    /// Integral square error: sum of squared per-point deviations.
    pub ise: f64,
    /// Figure of merit `cr / ise`; `+inf` when `ise == 0`.
    pub fom: f64,
    /// `ise / cr`.
    pub we: f64,
    /// `ise / cr^2`.
    pub we2: f64,
    pub max_dev: f64,
    pub area: f64,
    pub perimeter: f64,
    /// `area / perimeter^2`.
    pub compactness: f64,
}

/// Deviation of every curve point from the polygon edge spanning its arc.
/// Dominant points themselves get zero.
pub fn per_point_deviations(curve: &DigitalCurve, set: &DominantPointSet) -> Vec<f64> {
    let mut dev = vec![0.0; curve.len()];
    for (from, to) in set.edges() {
        let (a, b) = (curve.point(from), curve.point(to));
        for i in crate::curve::ArcIndices::new(from, to, curve.len()) {
            dev[i] = point_segment_distance(curve.point(i), a, b);
        }
    }
    dev
}

pub fn metrics_report(curve: &DigitalCurve, set: &DominantPointSet) -> MetricsReport {
    let dev = per_point_deviations(curve, set);
    let ise: f64 = dev.iter().map(|d| d * d).sum();
    let max_dev = dev.iter().copied().fold(0.0, f64::max);
    let (n, m) = (curve.len(), set.len());
    let cr = n as f64 / m as f64;
    let vertices = set.vertices(curve);
    let area = signed_area(&vertices).abs();
    let perimeter = ring_perimeter(&vertices);
    MetricsReport {
        n,
        m,
        cr,
        ise,
        fom: if ise == 0.0 { f64::INFINITY } else { cr / ise },
        we: ise / cr,
        we2: ise / (cr * cr),
        max_dev,
        area,
        perimeter,
        compactness: if perimeter > 0.0 {
            area / (perimeter * perimeter)
        } else {
            0.0
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationRow {
    pub angle: f64,
    pub max_dev: f64,
    pub ise: f64,
    pub area: f64,
    pub perimeter: f64,
    pub compactness: f64,
}

/// Rotate the curve about its centroid by each angle (degrees), approximate
/// with `m` points and report the shape metrics of the result.
pub fn rotation_report(curve: &DigitalCurve, angles: &[f64], m: usize) -> Result<Vec<RotationRow>> {
    angles
        .iter()
        .map(|&angle| {
            let rotated = rotate_curve(curve, angle);
            let approx = eliminate_to_count(&rotated, m)?;
            let r = metrics_report(&rotated, &approx.final_set);
            Ok(RotationRow {
                angle,
                max_dev: r.max_dev,
                ise: r.ise,
                area: r.area,
                perimeter: r.perimeter,
                compactness: r.compactness,
            })
        })
        .collect()
}
