//! Ramer–Douglas–Peucker baseline for closed curves.
//!
//! The ring is seeded with two far-apart points (the point farthest from the
//! centroid, then the point farthest from that one) and each of the two
//! chains between them is split recursively at its point of maximum
//! deviation while that deviation exceeds epsilon.

use crate::curve::{ArcIndices, DigitalCurve, DominantPointSet};
use crate::error::{Error, Result};
use crate::geometry::{centroid, point_segment_distance};

fn farthest_from(curve: &DigitalCurve, origin: crate::geometry::Point) -> usize {
    let mut best = (0, f64::NEG_INFINITY);
    for (i, p) in curve.points().iter().enumerate() {
        let d = p.distance(origin);
        if d > best.1 {
            best = (i, d);
        }
    }
    best.0
}

/// Point of maximum deviation on the open arc `(from, to)`.
fn max_deviation(curve: &DigitalCurve, from: usize, to: usize) -> Option<(usize, f64)> {
    let (a, b) = (curve.point(from), curve.point(to));
    let mut best: Option<(usize, f64)> = None;
    for i in ArcIndices::new(from, to, curve.len()) {
        let d = point_segment_distance(curve.point(i), a, b);
        if best.map_or(true, |(_, bd)| d > bd) {
            best = Some((i, d));
        }
    }
    best
}

fn split(curve: &DigitalCurve, from: usize, to: usize, epsilon: f64, keep: &mut Vec<usize>) {
    if let Some((i, d)) = max_deviation(curve, from, to) {
        if d > epsilon {
            keep.push(i);
            split(curve, from, i, epsilon, keep);
            split(curve, i, to, epsilon, keep);
        }
    }
}

fn seeds(curve: &DigitalCurve) -> Result<(usize, usize)> {
    if !curve.is_closed() {
        return Err(Error::OpenCurve);
    }
    let a = farthest_from(curve, centroid(curve.points()));
    let b = farthest_from(curve, curve.point(a));
    if a == b {
        return Err(Error::DegenerateChord);
    }
    Ok((a, b))
}

/// Retained indices, in curve order.
///
/// If both chains collapse to their seeds, the overall point of maximum
/// deviation is added so the result is still a polygon.
pub fn rdp(curve: &DigitalCurve, epsilon: f64) -> Result<DominantPointSet> {
    let (a, b) = seeds(curve)?;
    let mut keep = vec![a, b];
    split(curve, a, b, epsilon, &mut keep);
    split(curve, b, a, epsilon, &mut keep);
    if keep.len() < 3 {
        let extra = [max_deviation(curve, a, b), max_deviation(curve, b, a)]
            .into_iter()
            .flatten()
            .max_by(|x, y| x.1.total_cmp(&y.1).then(y.0.cmp(&x.0)))
            .ok_or(Error::TooFewPoints { n: curve.len() })?;
        keep.push(extra.0);
    }
    keep.sort_unstable();
    DominantPointSet::new(curve, keep)
}

/// Bisect epsilon for a result with exactly `m` points.
///
/// When no epsilon yields exactly `m` (the count is a step function of
/// epsilon) the closest result with more than `m` points is returned.
pub fn rdp_to_count(curve: &DigitalCurve, m: usize) -> Result<DominantPointSet> {
    let mut lo = 0.0;
    let mut best = rdp(curve, lo)?;
    if best.len() <= m {
        return Ok(best);
    }
    let (a, b) = seeds(curve)?;
    let mut hi = curve.point(a).distance(curve.point(b));
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let d = rdp(curve, mid)?;
        match d.len().cmp(&m) {
            std::cmp::Ordering::Equal => return Ok(d),
            std::cmp::Ordering::Greater => {
                lo = mid;
                best = d;
            }
            std::cmp::Ordering::Less => hi = mid,
        }
    }
    Ok(best)
}
