//! Getting curves into the pipeline: curve text files, PBM/PGM masks traced
//! into boundaries, and rigid test rotations.

mod curve_text;
mod pnm;
mod trace;

pub use curve_text::{load_curve_file, serialize_curve};
pub use pnm::{parse_pnm, BinaryImage};
pub use trace::trace_contour;

use crate::curve::DigitalCurve;
use crate::geometry::{centroid, Point};

/// Rotate about the centroid by `angle_deg` degrees (counterclockwise).
///
/// Whole turns return the curve unchanged. Quarter turns of a grid curve are
/// done exactly around the centroid snapped to the nearest half-integer, so
/// the result stays on a (possibly half-shifted) lattice with the same step
/// vectors up to rotation.
pub fn rotate_curve(curve: &DigitalCurve, angle_deg: f64) -> DigitalCurve {
    let turns = angle_deg / 90.0;
    let c = centroid(curve.points());
    let points: Vec<Point> = if turns.fract() == 0.0 {
        let quarter = (turns as i64).rem_euclid(4);
        if quarter == 0 {
            return curve.clone();
        }
        let pivot = if curve.is_integer_grid() {
            Point::new((c.x * 2.0).round() / 2.0, (c.y * 2.0).round() / 2.0)
        } else {
            c
        };
        curve
            .points()
            .iter()
            .map(|&p| {
                let d = p - pivot;
                let r = match quarter {
                    1 => Point::new(-d.y, d.x),
                    2 => Point::new(-d.x, -d.y),
                    _ => Point::new(d.y, -d.x),
                };
                pivot + r
            })
            .collect()
    } else {
        let (sin, cos) = angle_deg.to_radians().sin_cos();
        curve
            .points()
            .iter()
            .map(|&p| {
                let d = p - c;
                Point::new(c.x + cos * d.x - sin * d.y, c.y + sin * d.x + cos * d.y)
            })
            .collect()
    };
    DigitalCurve::from_parts_unchecked(points, curve.is_closed())
}

/// Reverse a counterclockwise ring to clockwise, keeping the start point.
///
/// Rings whose area is zero up to rounding (curves that retrace themselves)
/// have no orientation and are left as given.
pub(crate) fn normalize_clockwise(curve: DigitalCurve) -> DigitalCurve {
    let pts = curve.points();
    let extent = pts.iter().map(|p| p.chebyshev(pts[0])).fold(0.0, f64::max);
    let area = crate::geometry::signed_area(pts);
    if !curve.is_closed() || area <= 1e-9 * extent * extent {
        return curve;
    }
    let mut out = Vec::with_capacity(pts.len());
    out.push(pts[0]);
    out.extend(pts[1..].iter().rev().copied());
    DigitalCurve::from_parts_unchecked(out, true)
}
