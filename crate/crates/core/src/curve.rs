//! Curve value types and circular index arithmetic.
//!
//! Coordinates are `f64` everywhere. Whether a curve lies on the integer
//! grid is detected from its coordinates, so rotated (real-valued) copies of
//! a digital boundary flow through the same type. The y axis points up.

use crate::error::{Error, Result};
use crate::geometry::Point;

/// An ordered point sequence, optionally closed (last point joins the first).
#[derive(Debug, Clone, PartialEq)]
pub struct DigitalCurve {
    points: Vec<Point>,
    closed: bool,
}

impl DigitalCurve {
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn point(&self, index: usize) -> Point {
        self.points[index]
    }

    /// True when every coordinate is an integer.
    pub fn is_integer_grid(&self) -> bool {
        self.points.iter().all(|p| p.is_integral())
    }

    /// Index after `i`, wrapping on closed curves.
    pub fn next_index(&self, i: usize) -> Option<usize> {
        if i + 1 < self.len() {
            Some(i + 1)
        } else if self.closed {
            Some(0)
        } else {
            None
        }
    }

    pub fn prev_index(&self, i: usize) -> Option<usize> {
        if i > 0 {
            Some(i - 1)
        } else if self.closed {
            Some(self.len() - 1)
        } else {
            None
        }
    }

    /// Step vector leaving point `i`.
    pub fn step_out(&self, i: usize) -> Option<Point> {
        self.next_index(i).map(|j| self.points[j] - self.points[i])
    }

    /// Step vector arriving at point `i`.
    pub fn step_in(&self, i: usize) -> Option<Point> {
        self.prev_index(i).map(|h| self.points[i] - self.points[h])
    }

    /// Indices strictly between `from` and `to` in traversal order.
    ///
    /// On a closed curve the walk wraps past the last index; on an open curve
    /// `to < from` is an error.
    pub fn arc_indices(&self, from: usize, to: usize) -> Result<ArcIndices> {
        let n = self.len();
        for index in [from, to] {
            if index >= n {
                return Err(Error::IndexOutOfRange { index, len: n });
            }
        }
        if from == to {
            return Err(Error::EmptyArc);
        }
        if to < from && !self.closed {
            return Err(Error::OpenCurveWrap { from, to });
        }
        Ok(ArcIndices::new(from, to, n))
    }

    /// Points strictly between `from` and `to`, endpoints excluded.
    pub fn arc_points(&self, from: usize, to: usize) -> Result<Vec<Point>> {
        Ok(self
            .arc_indices(from, to)?
            .map(|i| self.points[i])
            .collect())
    }

    pub(crate) fn from_parts_unchecked(points: Vec<Point>, closed: bool) -> Self {
        Self { points, closed }
    }
}

/// Iterator over the open circular interval `(from, to)` of a curve of `n`
/// points.
#[derive(Debug, Clone)]
pub struct ArcIndices {
    cur: usize,
    to: usize,
    n: usize,
}

impl ArcIndices {
    pub(crate) fn new(from: usize, to: usize, n: usize) -> Self {
        Self {
            cur: (from + 1) % n,
            to,
            n,
        }
    }
}

impl Iterator for ArcIndices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.cur == self.to {
            return None;
        }
        let i = self.cur;
        self.cur = (self.cur + 1) % self.n;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let len = (self.to + self.n - self.cur) % self.n;
        (len, Some(len))
    }
}

impl ExactSizeIterator for ArcIndices {}

/// Validate a point list into a curve.
///
/// Consecutive duplicates (and, for closed curves, a last point repeating
/// the first) collapse into one. Grid adjacency is only enforced when every
/// coordinate is an integer.
pub fn build_curve<P: Into<Point> + Copy>(points: &[P], closed: bool) -> Result<DigitalCurve> {
    let mut pts: Vec<Point> = Vec::with_capacity(points.len());
    for &p in points {
        let p = p.into();
        if pts.last() != Some(&p) {
            pts.push(p);
        }
    }
    if closed {
        while pts.len() > 1 && pts.first() == pts.last() {
            pts.pop();
        }
    }
    let n = pts.len();
    if n == 0 {
        return Err(Error::TooFewPoints { n });
    }
    if pts.iter().all(|p| p.is_integral()) {
        let steps = if closed { n } else { n - 1 };
        for i in 0..steps {
            let j = (i + 1) % n;
            if pts[i].chebyshev(pts[j]) != 1.0 {
                return Err(Error::NonAdjacent { index: i, next: j });
            }
        }
    }
    if closed && n < 3 {
        return Err(Error::TooFewPoints { n });
    }
    Ok(DigitalCurve {
        points: pts,
        closed,
    })
}

/// Unit king-move deltas indexed by Freeman code: 0 is +x, codes increase
/// counterclockwise with y up.
pub const FREEMAN_DELTAS: [(i8, i8); 8] = [
    (1, 0),
    (1, 1),
    (0, 1),
    (-1, 1),
    (-1, 0),
    (-1, -1),
    (0, -1),
    (1, -1),
];

pub fn freeman_code(dx: i64, dy: i64) -> Option<u8> {
    FREEMAN_DELTAS
        .iter()
        .position(|&(cx, cy)| cx as i64 == dx && cy as i64 == dy)
        .map(|c| c as u8)
}

/// Freeman 8-direction encoding of a grid curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainCode {
    pub start: (i64, i64),
    pub codes: Vec<u8>,
    pub closed: bool,
}

impl ChainCode {
    /// Walk the codes from the start point. A closed code's final step
    /// returns to the start, so it is not emitted again.
    pub fn replay(&self) -> Vec<(i64, i64)> {
        let mut out = vec![self.start];
        let (mut x, mut y) = self.start;
        let steps = if self.closed {
            self.codes.len().saturating_sub(1)
        } else {
            self.codes.len()
        };
        for &c in &self.codes[..steps] {
            let (dx, dy) = FREEMAN_DELTAS[c as usize];
            x += dx as i64;
            y += dy as i64;
            out.push((x, y));
        }
        out
    }
}

pub fn chain_code(curve: &DigitalCurve) -> Result<ChainCode> {
    if let Some(index) = curve.points.iter().position(|p| !p.is_integral()) {
        return Err(Error::NotOnGrid { index });
    }
    let n = curve.len();
    let steps = if curve.closed { n } else { n - 1 };
    let mut codes = Vec::with_capacity(steps);
    for i in 0..steps {
        let j = (i + 1) % n;
        let d = curve.points[j] - curve.points[i];
        let code =
            freeman_code(d.x as i64, d.y as i64).ok_or(Error::NonAdjacent { index: i, next: j })?;
        codes.push(code);
    }
    let p0 = curve.points[0];
    Ok(ChainCode {
        start: (p0.x as i64, p0.y as i64),
        codes,
        closed: curve.closed,
    })
}

/// Ordered subset of curve indices forming the current polygon.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DominantPointSet {
    indices: Vec<usize>,
}

impl DominantPointSet {
    /// Requires strictly increasing indices below `curve.len()` and at least
    /// three of them.
    pub fn new(curve: &DigitalCurve, indices: Vec<usize>) -> Result<Self> {
        if indices.len() < 3 {
            return Err(Error::InvalidDominantSet(format!(
                "{} points, need at least 3",
                indices.len()
            )));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidDominantSet(
                "indices must be strictly increasing".into(),
            ));
        }
        let last = *indices.last().unwrap();
        if last >= curve.len() {
            return Err(Error::IndexOutOfRange {
                index: last,
                len: curve.len(),
            });
        }
        Ok(Self { indices })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.indices.binary_search(&index).is_ok()
    }

    /// Polygon vertices in traversal order.
    pub fn vertices(&self, curve: &DigitalCurve) -> Vec<Point> {
        self.indices.iter().map(|&i| curve.point(i)).collect()
    }

    /// Consecutive (from, to) vertex pairs, including the closing edge.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let m = self.indices.len();
        (0..m).map(move |k| (self.indices[k], self.indices[(k + 1) % m]))
    }
}
