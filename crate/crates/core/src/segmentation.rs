//! Initial dominant points: the curve indices where the step direction
//! changes.
//!
//! On a closed curve the first and last points are handled by the same
//! circular rule as every interior point, so there is no special casing of
//! index 0 or n-1.

use crate::curve::DigitalCurve;
use crate::error::{Error, Result};

/// Default per-component tolerance for comparing real-valued step vectors.
pub const DEFAULT_BREAK_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BreakSource {
    ChainCodeBreaks,
    DeltaBreaks,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InitialSegmentation {
    pub dp_indices: Vec<usize>,
    pub source: BreakSource,
}

fn require_closed(curve: &DigitalCurve) -> Result<()> {
    if !curve.is_closed() {
        return Err(Error::OpenCurve);
    }
    if curve.len() < 3 {
        return Err(Error::TooFewPoints { n: curve.len() });
    }
    Ok(())
}

/// Break points of a closed grid curve: index `i` is kept iff the step into
/// `i` differs from the step out of `i`.
pub fn initial_dominant_points(curve: &DigitalCurve) -> Result<InitialSegmentation> {
    require_closed(curve)?;
    if let Some(index) = curve.points().iter().position(|p| !p.is_integral()) {
        return Err(Error::NotOnGrid { index });
    }
    let dp_indices = (0..curve.len())
        .filter(|&i| curve.step_in(i) != curve.step_out(i))
        .collect();
    Ok(InitialSegmentation {
        dp_indices,
        source: BreakSource::ChainCodeBreaks,
    })
}

/// Break points of a closed real-valued curve: index `i` is kept iff its
/// incoming and outgoing step vectors differ by more than `tol` in some
/// component.
pub fn break_points_real(curve: &DigitalCurve, tol: f64) -> Result<InitialSegmentation> {
    require_closed(curve)?;
    let dp_indices = (0..curve.len())
        .filter(|&i| {
            let (Some(a), Some(b)) = (curve.step_in(i), curve.step_out(i)) else {
                return false;
            };
            let d = a - b;
            d.x.abs().max(d.y.abs()) > tol
        })
        .collect();
    Ok(InitialSegmentation {
        dp_indices,
        source: BreakSource::DeltaBreaks,
    })
}

/// Chain-code breaks for grid curves, delta breaks at the default tolerance
/// otherwise.
pub fn segment(curve: &DigitalCurve) -> Result<InitialSegmentation> {
    if curve.is_integer_grid() {
        initial_dominant_points(curve)
    } else {
        break_points_real(curve, DEFAULT_BREAK_TOLERANCE)
    }
}
